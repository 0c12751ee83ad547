//! The Hopf algebra QSym over the integers, stored in the monomial basis.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::composition::Composition;
use crate::element::{Basis, Element};

/// The monomial basis `(M_α)`; the canonical storage basis of QSym.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MBasis;

/// The fundamental basis `(F_α)`, used for coordinates only.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FBasis;

/// Pure tensors `M_α ⊗ M_β` spanning `QSym ⊗ QSym`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MTensorBasis;

impl Basis for MBasis {
    type Key = Composition;
    fn fmt_key(key: &Composition, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M{key}")
    }
}

impl Basis for FBasis {
    type Key = Composition;
    fn fmt_key(key: &Composition, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F{key}")
    }
}

impl Basis for MTensorBasis {
    type Key = (Composition, Composition);
    fn fmt_key(key: &(Composition, Composition), f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M{}⊗M{}", key.0, key.1)
    }
}

/// A quasisymmetric function, held in the monomial basis.
pub type QSymElem = Element<MBasis>;
/// A quasisymmetric function written in the fundamental basis.
pub type FElem = Element<FBasis>;
/// An element of `QSym ⊗ QSym`.
pub type TensorElem = Element<MTensorBasis>;

impl QSymElem {
    /// The unit `1 = M_∅`.
    pub fn one() -> Self {
        Self::basis(Composition::empty())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::term(Composition::empty(), c)
    }

    /// Largest `|α|` in the support, or `None` for the zero element.
    pub fn degree(&self) -> Option<u32> {
        self.keys().map(Composition::size).max()
    }

    /// The homogeneous component of degree `k`.
    pub fn homogeneous(&self, k: u32) -> Self {
        self.filter(|a| a.size() == k)
    }
}

pub fn monomial(alpha: Composition) -> QSymElem {
    QSymElem::basis(alpha)
}

/// `F_α = Σ M_β` over all refinements `β` of `α`.
pub fn fundamental(alpha: &Composition) -> QSymElem {
    alpha
        .refinements()
        .into_iter()
        .map(|b| (b, BigInt::one()))
        .collect()
}

/// Rewrites F-coordinates in the monomial basis.
pub fn f_to_m(f: &FElem) -> QSymElem {
    f.linear_map(fundamental)
}

/// Coordinates of `f` in the fundamental basis.
///
/// Möbius inversion of [`fundamental`]:
/// `M_β = Σ_{γ refines β} (−1)^{ℓ(γ)−ℓ(β)} F_γ`.
pub fn m_to_f(f: &QSymElem) -> FElem {
    f.linear_map(|beta| {
        beta.refinements()
            .into_iter()
            .map(|g| {
                let sign = if (g.len() - beta.len()) % 2 == 0 {
                    1
                } else {
                    -1
                };
                (g, BigInt::from(sign))
            })
            .collect()
    })
}

/// Visits every overlapping shuffle of `a` and `b` (with multiplicity).
///
/// Each step takes the next part of `a`, the next part of `b`, or the sum of
/// both. `first` is `None` before anything has been placed and afterwards
/// records which side contributed to the first part: 0 for `a` alone, 1 for
/// `b` alone, 2 for a merged part.
pub(crate) fn for_each_overlapping_shuffle(
    a: &[u32],
    b: &[u32],
    mut visit: impl FnMut(&[u32], Option<u8>),
) {
    fn go(
        a: &[u32],
        b: &[u32],
        prefix: &mut Vec<u32>,
        first: Option<u8>,
        visit: &mut dyn FnMut(&[u32], Option<u8>),
    ) {
        if a.is_empty() || b.is_empty() {
            let start = prefix.len();
            prefix.extend_from_slice(a);
            prefix.extend_from_slice(b);
            let first = first.or(match (a.is_empty(), b.is_empty()) {
                (false, _) => Some(0),
                (true, false) => Some(1),
                (true, true) => None,
            });
            visit(prefix, first);
            prefix.truncate(start);
            return;
        }
        for (take, tag) in [(0u8, 0u8), (1, 1), (2, 2)] {
            let part = match take {
                0 => a[0],
                1 => b[0],
                _ => a[0] + b[0],
            };
            let (ra, rb) = match take {
                0 => (&a[1..], b),
                1 => (a, &b[1..]),
                _ => (&a[1..], &b[1..]),
            };
            prefix.push(part);
            go(ra, rb, prefix, first.or(Some(tag)), visit);
            prefix.pop();
        }
    }
    go(a, b, &mut Vec::new(), None, &mut visit);
}

/// `M_α · M_β`: the sum of `M_γ` over all overlapping shuffles `γ` of `α` and `β`.
pub fn mul_basis(alpha: &Composition, beta: &Composition) -> QSymElem {
    let mut out = QSymElem::zero();
    for_each_overlapping_shuffle(alpha.parts(), beta.parts(), |g, _| {
        out.add_term(Composition::new(g.to_vec()).unwrap(), BigInt::one());
    });
    out
}

pub fn mul(f: &QSymElem, g: &QSymElem) -> QSymElem {
    f.bilinear(g, mul_basis)
}

/// Deconcatenation: `Δ(M_α) = Σ_i M_{(α₁..α_i)} ⊗ M_{(α_{i+1}..α_ℓ)}`.
pub fn coproduct(f: &QSymElem) -> TensorElem {
    f.linear_map(|alpha| {
        let parts = alpha.parts();
        (0..=parts.len())
            .map(|i| {
                let left = Composition::new(parts[..i].to_vec()).unwrap();
                let right = Composition::new(parts[i..].to_vec()).unwrap();
                ((left, right), BigInt::one())
            })
            .collect()
    })
}

/// The coefficient of `M_∅`.
pub fn counit(f: &QSymElem) -> BigInt {
    f.coeff(&Composition::empty())
}

/// The antipode, via `S(F_α) = (−1)^{|α|} F_{ω(α)}`.
pub fn antipode(f: &QSymElem) -> QSymElem {
    let in_f = m_to_f(f);
    let image: FElem = in_f
        .terms()
        .map(|(a, c)| {
            let c = if a.size() % 2 == 0 { c.clone() } else { -c };
            (a.omega(), c)
        })
        .collect();
    f_to_m(&image)
}

/// `h_m = F_{(m)}`, with `h_0 = 1`.
pub fn h(m: u32) -> QSymElem {
    fundamental(&Composition::single(m))
}

/// `e_m = M_{(1^m)}`, with `e_0 = 1`.
pub fn e(m: u32) -> QSymElem {
    monomial(Composition::ones(m))
}

/// `f ⊗ g`.
pub fn tensor(f: &QSymElem, g: &QSymElem) -> TensorElem {
    f.bilinear(g, |a, b| TensorElem::basis((a.clone(), b.clone())))
}

/// Componentwise product on `QSym ⊗ QSym`.
pub fn tensor_mul(x: &TensorElem, y: &TensorElem) -> TensorElem {
    x.bilinear(y, |(a1, a2), (b1, b2)| {
        tensor(&mul_basis(a1, b1), &mul_basis(a2, b2))
    })
}

/// Applies `left ⊗ right` to a tensor and multiplies the legs back together:
/// `Σ left(x₁) · right(x₂)`.
pub fn contract(
    x: &TensorElem,
    mut left: impl FnMut(&Composition) -> QSymElem,
    mut right: impl FnMut(&Composition) -> QSymElem,
) -> QSymElem {
    let mut out = QSymElem::zero();
    for ((a, b), c) in x.terms() {
        out.add_scaled(&mul(&left(a), &right(b)), c);
    }
    out
}

/// Applies `left ⊗ right` to a tensor, keeping the result in `QSym ⊗ QSym`.
pub fn tensor_map(
    x: &TensorElem,
    mut left: impl FnMut(&Composition) -> QSymElem,
    mut right: impl FnMut(&Composition) -> QSymElem,
) -> TensorElem {
    x.linear_map(|(a, b)| tensor(&left(a), &right(b)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comp;
    use crate::composition::{compositions_of, compositions_up_to};
    use crate::ops::Op;
    use crate::oracle::{expand_elem, expand_f, expand_m, series_op, TruncSeries};
    use num_traits::Zero;

    fn m(a: Composition) -> QSymElem {
        monomial(a)
    }

    fn ex(f: &QSymElem) -> TruncSeries {
        expand_elem(f, 6, 5).unwrap()
    }

    #[test]
    fn fundamental_examples() {
        assert_eq!(fundamental(&comp![2]), m(comp![2]) + m(comp![1, 1]));
        assert_eq!(
            expand_elem(&fundamental(&comp![2]), 6, 5).unwrap(),
            expand_f(&comp![2], 6, 5).unwrap()
        );
        assert_eq!(fundamental(&comp![]), QSymElem::one());
        assert_eq!(fundamental(&comp![1, 1]), m(comp![1, 1]));
    }

    #[test]
    fn fundamental_matches_oracle() {
        for a in compositions_up_to(5) {
            assert_eq!(
                expand_elem(&fundamental(&a), 6, 5).unwrap(),
                expand_f(&a, 6, 5).unwrap(),
                "F{a}"
            );
        }
    }

    #[test]
    fn mul_examples() {
        let one = m(comp![1]);
        let sq = mul(&one, &one);
        assert_eq!(ex(&sq), series_op(Op::Mul, &ex(&one), &ex(&one)).unwrap());
        assert_eq!(sq, QSymElem::term(comp![1, 1], 2) + m(comp![2]));

        let f = m(comp![2, 1]);
        assert_eq!(mul(&QSymElem::one(), &f), f);

        let p = mul(&m(comp![2]), &m(comp![1]));
        assert_eq!(
            ex(&p),
            series_op(Op::Mul, &ex(&m(comp![2])), &ex(&m(comp![1]))).unwrap()
        );
        assert_eq!(p, m(comp![2, 1]) + m(comp![1, 2]) + m(comp![3]));
    }

    #[test]
    fn coproduct_examples() {
        let t = |a: Composition, b: Composition| TensorElem::basis((a, b));
        assert_eq!(
            coproduct(&m(comp![1, 1])),
            t(comp![], comp![1, 1]) + t(comp![1], comp![1]) + t(comp![1, 1], comp![])
        );
        assert_eq!(coproduct(&QSymElem::one()), t(comp![], comp![]));
        assert_eq!(
            coproduct(&m(comp![2])),
            t(comp![], comp![2]) + t(comp![2], comp![])
        );
    }

    #[test]
    fn counit_examples() {
        assert_eq!(counit(&QSymElem::one()), BigInt::one());
        assert_eq!(counit(&m(comp![3])), BigInt::zero());
        let f = QSymElem::constant(5) + QSymElem::term(comp![1], 2);
        assert_eq!(counit(&f), BigInt::from(5));
    }

    #[test]
    fn antipode_examples() {
        assert_eq!(antipode(&QSymElem::one()), QSymElem::one());
        assert_eq!(antipode(&fundamental(&comp![2])), fundamental(&comp![1, 1]));
        assert_eq!(antipode(&m(comp![1])), -m(comp![1]));
    }

    #[test]
    fn m_to_f_examples() {
        // F_(1,1) = M_(1,1) and F_(2) = M_(2) + M_(1,1)
        assert_eq!(m_to_f(&m(comp![1, 1])), FElem::basis(comp![1, 1]));
        assert_eq!(
            m_to_f(&m(comp![2])),
            FElem::basis(comp![2]) - FElem::basis(comp![1, 1])
        );
        assert_eq!(m_to_f(&QSymElem::one()), FElem::basis(comp![]));
        assert_eq!(
            m_to_f(&fundamental(&comp![2, 1])),
            FElem::basis(comp![2, 1])
        );
    }

    #[test]
    fn m_to_f_inverts_fundamental() {
        for a in compositions_up_to(6) {
            assert_eq!(m_to_f(&fundamental(&a)), FElem::basis(a.clone()));
            assert_eq!(f_to_m(&m_to_f(&m(a.clone()))), m(a));
        }
    }

    #[test]
    fn h_and_e_examples() {
        assert_eq!(h(0), QSymElem::one());
        assert_eq!(h(1), m(comp![1]));
        assert_eq!(h(2), fundamental(&comp![2]));
        assert_eq!(e(1), m(comp![1]));
        assert_eq!(e(0), QSymElem::one());
        assert_eq!(e(2), m(comp![1, 1]));
        // e_2 = Σ_{i<j} x_i x_j
        let mut want = TruncSeries::zero(6, 5);
        for i in 0..6 {
            for j in i + 1..6 {
                let mut exps = vec![0; 6];
                exps[i] = 1;
                exps[j] = 1;
                want.add_monomial(exps, BigInt::one());
            }
        }
        assert_eq!(ex(&e(2)), want);
        assert_eq!(expand_m(&comp![1, 1], 6, 5).unwrap(), want);
    }

    #[test]
    fn degree_sentinel() {
        assert_eq!(QSymElem::zero().degree(), None);
        assert_eq!(QSymElem::one().degree(), Some(0));
        assert_eq!((m(comp![2, 1]) + m(comp![1])).degree(), Some(3));
    }

    #[test]
    fn bialgebra_axioms() {
        let basis: Vec<Composition> = compositions_up_to(5).collect();
        for a in &basis {
            let da = coproduct(&m(a.clone()));
            // counit on either leg
            let left = contract(
                &da,
                |x| QSymElem::constant(counit(&m(x.clone()))),
                |y| m(y.clone()),
            );
            let right = contract(
                &da,
                |x| m(x.clone()),
                |y| QSymElem::constant(counit(&m(y.clone()))),
            );
            assert_eq!(left, m(a.clone()));
            assert_eq!(right, m(a.clone()));
            // coassociativity, compared through a flattened triple list
            let mut l = Vec::new();
            let mut r = Vec::new();
            for ((x, y), c) in da.terms() {
                for ((x1, x2), c1) in coproduct(&m(x.clone())).terms() {
                    l.push(((x1.clone(), x2.clone(), y.clone()), c * c1));
                }
                for ((y1, y2), c2) in coproduct(&m(y.clone())).terms() {
                    r.push(((x.clone(), y1.clone(), y2.clone()), c * c2));
                }
            }
            l.sort();
            r.sort();
            assert_eq!(l, r);
        }
        for a in &basis {
            for b in &basis {
                if a.size() + b.size() > 5 {
                    continue;
                }
                let lhs = coproduct(&mul_basis(a, b));
                let rhs = tensor_mul(&coproduct(&m(a.clone())), &coproduct(&m(b.clone())));
                assert_eq!(lhs, rhs, "{a} {b}");
            }
        }
    }

    #[test]
    fn antipode_axiom() {
        for a in compositions_up_to(6) {
            let f = m(a.clone());
            let d = coproduct(&f);
            let want = QSymElem::constant(counit(&f));
            assert_eq!(
                contract(&d, |x| antipode(&m(x.clone())), |y| m(y.clone())),
                want
            );
            assert_eq!(
                contract(&d, |x| m(x.clone()), |y| antipode(&m(y.clone()))),
                want
            );
        }
    }

    #[test]
    fn mul_associative_commutative() {
        let basis: Vec<Composition> = compositions_up_to(6).collect();
        for a in &basis {
            let fa = m(a.clone());
            assert_eq!(mul(&QSymElem::one(), &fa), fa);
            for b in &basis {
                if a.size() + b.size() > 6 {
                    continue;
                }
                let ab = mul_basis(a, b);
                assert_eq!(ab, mul_basis(b, a));
                for c in &basis {
                    if a.size() + b.size() + c.size() > 6 {
                        continue;
                    }
                    let fc = m(c.clone());
                    assert_eq!(mul(&ab, &fc), mul(&fa, &mul_basis(b, c)));
                }
            }
        }
    }

    #[test]
    fn mul_matches_oracle() {
        for n in 0..=5 {
            for k in 0..=n {
                for a in compositions_of(k) {
                    for b in compositions_of(n - k) {
                        let lhs = ex(&mul_basis(&a, &b));
                        let rhs =
                            series_op(Op::Mul, &ex(&m(a.clone())), &ex(&m(b.clone()))).unwrap();
                        assert_eq!(lhs, rhs, "{a} {b}");
                    }
                }
            }
        }
    }
}
