//! WQSym in the monomial basis `(M_u)` indexed by packed words, the lifted
//! restricted products, and the projection `π` onto QSym.

use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::One;

use crate::element::{Basis, Element};
use crate::ops::Op;
use crate::qsym::QSymElem;
use crate::words::{PackedWord, Word};

/// The monomial basis `(M_u)` of WQSym.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct WMBasis;

impl Basis for WMBasis {
    type Key = PackedWord;
    fn fmt_key(key: &PackedWord, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M{key}")
    }
}

/// An element of WQSym in the monomial basis.
pub type WQSymElem = Element<WMBasis>;

impl WQSymElem {
    /// The unit `M_()`.
    pub fn one() -> Self {
        Self::basis(PackedWord::empty())
    }
}

/// Every packed `w` of length `|u|+|v|` with `pack(w[:|u|]) = u` and
/// `pack(w[|u|:]) = v`, each exactly once.
///
/// Such a `w` is fixed by the value sets `A ⊆ [k]` of its prefix and `B ⊆ [k]`
/// of its suffix, where `|A| = max u`, `|B| = max v` and `A ∪ B = [k]`.
pub fn packed_products(u: &PackedWord, v: &PackedWord) -> Vec<PackedWord> {
    let (a, b) = (u.max_letter() as usize, v.max_letter() as usize);
    let mut out = Vec::new();
    for k in a.max(b)..=a + b {
        for set_a in (1..=k as u32).combinations(a) {
            let forced: Vec<u32> = (1..=k as u32).filter(|x| !set_a.contains(x)).collect();
            if forced.len() > b {
                continue;
            }
            for shared in set_a.iter().copied().combinations(b - forced.len()) {
                let mut set_b: Vec<u32> = forced.iter().copied().chain(shared).collect();
                set_b.sort_unstable();
                let letters = u
                    .letters()
                    .iter()
                    .map(|&x| set_a[x as usize - 1])
                    .chain(v.letters().iter().map(|&y| set_b[y as usize - 1]))
                    .collect();
                out.push(PackedWord::new(letters).expect("value sets cover [k]"));
            }
        }
    }
    out
}

/// The same set as [`packed_products`], found by filtering every packed word
/// of the right length. For cross-checking only.
pub fn packed_products_naive(u: &PackedWord, v: &PackedWord) -> Vec<PackedWord> {
    let l = u.len();
    PackedWord::all_of_length(l + v.len())
        .into_iter()
        .filter(|w| w.word().prefix(l).pack() == *u && w.word().suffix(l).pack() == *v)
        .collect()
}

fn split_keeps(op: Op, w: &Word, l: usize) -> bool {
    let (p, s) = (w.prefix(l), w.suffix(l));
    op.keeps(p.supp_min(), p.supp_max(), s.supp_min())
}

/// `M_u · M_v`.
pub fn wq_mul(u: &PackedWord, v: &PackedWord) -> WQSymElem {
    wq_op(Op::Mul, u, v)
}

/// `M_u op M_v`: the terms `M_w` of the product whose split `w[:|u|]`,
/// `w[|u|:]` satisfies the Supp condition of `op`.
pub fn wq_op(op: Op, u: &PackedWord, v: &PackedWord) -> WQSymElem {
    packed_products(u, v)
        .into_iter()
        .filter(|w| split_keeps(op, w.word(), u.len()))
        .map(|w| (w, BigInt::one()))
        .collect()
}

/// `M_u ▷ M_v = M_{u v^{+h−1}} + M_{u v^{+h}}` with `h = max u`, for nonempty
/// `u`, `v`; a plain concatenation otherwise.
pub fn wq_belg_closed(u: &PackedWord, v: &PackedWord) -> WQSymElem {
    if u.is_empty() || v.is_empty() {
        return WQSymElem::basis(
            PackedWord::new(u.word().concat(v.word()).letters().to_vec()).unwrap(),
        );
    }
    let h = u.max_letter();
    [h - 1, h]
        .into_iter()
        .map(|s| {
            let w = u.word().concat(&v.word().shift(s));
            (
                PackedWord::new(w.letters().to_vec()).unwrap(),
                BigInt::one(),
            )
        })
        .collect()
}

/// `M_u ⋖ M_v = M_{u v^{+h}}` with `h = max u`.
pub fn wq_tvim_closed(u: &PackedWord, v: &PackedWord) -> WQSymElem {
    let w = u.word().concat(&v.word().shift(u.max_letter()));
    WQSymElem::basis(PackedWord::new(w.letters().to_vec()).unwrap())
}

/// Bilinear extension of [`wq_op`].
pub fn wq_op_elem(op: Op, f: &WQSymElem, g: &WQSymElem) -> WQSymElem {
    f.bilinear(g, |u, v| wq_op(op, u, v))
}

/// The constant term.
pub fn wq_counit(f: &WQSymElem) -> BigInt {
    f.coeff(&PackedWord::empty())
}

/// `π(M_u) = M_{Parikh(u)}`: pass to the commutative image.
pub fn project(f: &WQSymElem) -> QSymElem {
    f.terms()
        .map(|(u, c)| (u.word().parikh(), c.clone()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dendriform::apply;
    use crate::oracle::{expand_word_elem, nc_series_op};

    fn pw(v: &[u32]) -> PackedWord {
        PackedWord::new(v.to_vec()).unwrap()
    }

    fn mu(v: &[u32]) -> WQSymElem {
        WQSymElem::basis(pw(v))
    }

    /// Pairs of packed words with total length at most `n`.
    fn pairs(n: usize) -> Vec<(PackedWord, PackedWord)> {
        let all: Vec<PackedWord> = (0..=n).flat_map(PackedWord::all_of_length).collect();
        all.iter()
            .flat_map(|u| all.iter().map(move |v| (u.clone(), v.clone())))
            .filter(|(u, v)| u.len() + v.len() <= n)
            .collect()
    }

    #[test]
    fn product_examples() {
        // Packed words of length 2 split as (1)(1): every one of them.
        let want: WQSymElem = PackedWord::all_of_length(2)
            .into_iter()
            .map(|w| (w, BigInt::one()))
            .collect();
        assert_eq!(wq_mul(&pw(&[1]), &pw(&[1])), want);
        assert_eq!(want, mu(&[1, 1]) + mu(&[1, 2]) + mu(&[2, 1]));
        assert_eq!(wq_mul(&pw(&[]), &pw(&[1])), mu(&[1]));
        assert_eq!(
            wq_mul(&pw(&[1, 1]), &pw(&[1])),
            mu(&[1, 1, 1]) + mu(&[1, 1, 2]) + mu(&[2, 2, 1])
        );
    }

    #[test]
    fn op_examples() {
        assert_eq!(wq_op(Op::Prec, &pw(&[1]), &pw(&[1])), mu(&[1, 2]));
        assert_eq!(wq_op(Op::Circ, &pw(&[1]), &pw(&[1])), mu(&[1, 1]));
        assert_eq!(
            wq_op(Op::Belg, &pw(&[1]), &pw(&[1])),
            mu(&[1, 1]) + mu(&[1, 2])
        );
        assert_eq!(
            wq_belg_closed(&pw(&[1]), &pw(&[1])),
            mu(&[1, 1]) + mu(&[1, 2])
        );
    }

    #[test]
    fn project_examples() {
        assert_eq!(
            project(&mu(&[2, 1, 3, 1])),
            QSymElem::basis(crate::comp![2, 1, 1])
        );
        assert_eq!(project(&mu(&[1])), QSymElem::basis(crate::comp![1]));
        assert_eq!(project(&mu(&[1, 1])), QSymElem::basis(crate::comp![2]));
    }

    #[test]
    fn fast_product_matches_naive() {
        for (u, v) in pairs(5) {
            let mut fast = packed_products(&u, &v);
            fast.sort();
            let len = fast.len();
            fast.dedup();
            assert_eq!(fast.len(), len, "duplicates for {u} {v}");
            assert_eq!(fast, packed_products_naive(&u, &v), "{u} {v}");
        }
    }

    #[test]
    fn product_splits_into_three() {
        for (u, v) in pairs(5) {
            let parts = wq_op(Op::Prec, &u, &v) + wq_op(Op::Circ, &u, &v) + wq_op(Op::Succ, &u, &v);
            assert_eq!(parts, wq_mul(&u, &v), "{u} {v}");
        }
    }

    #[test]
    fn closed_forms() {
        for (u, v) in pairs(5) {
            assert_eq!(wq_op(Op::Belg, &u, &v), wq_belg_closed(&u, &v), "{u} {v}");
            assert_eq!(wq_op(Op::Tvim, &u, &v), wq_tvim_closed(&u, &v), "{u} {v}");
        }
    }

    #[test]
    fn projection_intertwines() {
        for (u, v) in pairs(5) {
            let (pu, pv) = (project(&mu(u.letters())), project(&mu(v.letters())));
            for (op, qop) in [
                (Op::Prec, Op::Prec),
                (Op::Belg, Op::Belg),
                (Op::Tvim, Op::Tvim),
                (Op::Mul, Op::Mul),
            ] {
                assert_eq!(
                    project(&wq_op(op, &u, &v)),
                    apply(qop, &pu, &pv).unwrap(),
                    "{op} {u} {v}"
                );
            }
            assert_eq!(
                project(&wq_op(Op::Succ, &v, &u)),
                apply(Op::Prec, &pu, &pv).unwrap()
            );
            let succ_circ = wq_op(Op::Succ, &u, &v) + wq_op(Op::Circ, &u, &v);
            assert_eq!(project(&succ_circ), apply(Op::Succeq, &pu, &pv).unwrap());
        }
    }

    #[test]
    fn associativity_and_as2() {
        let all: Vec<PackedWord> = (0..=4).flat_map(PackedWord::all_of_length).collect();
        let op = |o: Op, f: &WQSymElem, g: &WQSymElem| wq_op_elem(o, f, g);
        for a in &all {
            for b in &all {
                for c in &all {
                    if a.len() + b.len() + c.len() > 4 {
                        continue;
                    }
                    let (a, b, c) = (mu(a.letters()), mu(b.letters()), mu(c.letters()));
                    assert_eq!(
                        op(Op::Belg, &op(Op::Belg, &a, &b), &c),
                        op(Op::Belg, &a, &op(Op::Belg, &b, &c))
                    );
                    assert_eq!(
                        op(Op::Tvim, &op(Op::Tvim, &a, &b), &c),
                        op(Op::Tvim, &a, &op(Op::Tvim, &b, &c))
                    );
                    let lhs = op(Op::Tvim, &op(Op::Belg, &a, &b), &c)
                        + op(Op::Belg, &op(Op::Tvim, &a, &b), &c);
                    let rhs = op(Op::Belg, &a, &op(Op::Tvim, &b, &c))
                        + op(Op::Tvim, &a, &op(Op::Belg, &b, &c));
                    assert_eq!(lhs, rhs);
                    let eb = wq_counit(&b);
                    let bt = op(Op::Tvim, &op(Op::Belg, &a, &b), &c)
                        - op(Op::Belg, &a, &op(Op::Tvim, &b, &c));
                    assert_eq!(bt, (op(Op::Tvim, &a, &c) - op(Op::Belg, &a, &c)).scale(&eb));
                    let tb = op(Op::Belg, &op(Op::Tvim, &a, &b), &c)
                        - op(Op::Tvim, &a, &op(Op::Belg, &b, &c));
                    assert_eq!(tb, (op(Op::Belg, &a, &c) - op(Op::Tvim, &a, &c)).scale(&eb));
                }
            }
        }
    }

    #[test]
    fn ops_match_nc_oracle() {
        for (u, v) in pairs(4) {
            let (eu, ev) = (
                expand_word_elem(&mu(u.letters()), 5, 4).unwrap(),
                expand_word_elem(&mu(v.letters()), 5, 4).unwrap(),
            );
            for op in [Op::Mul, Op::Prec, Op::Circ, Op::Succ, Op::Belg, Op::Tvim] {
                let got = expand_word_elem(&wq_op(op, &u, &v), 5, 4).unwrap();
                assert_eq!(got, nc_series_op(op, &eu, &ev).unwrap(), "{op} {u} {v}");
            }
        }
    }
}
