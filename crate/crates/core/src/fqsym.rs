//! FQSym in the basis `(G_σ)`, embedded in WQSym via
//! `G_σ = Σ_{w packed, std w = σ} M_w`.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::One;

use crate::element::{Basis, Element};
use crate::error::{Error, Result};
use crate::ops::Op;
use crate::words::{PackedWord, Permutation, Word};
use crate::wqsym::WQSymElem;

/// The basis `(G_σ)` of FQSym.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GBasis;

impl Basis for GBasis {
    type Key = Permutation;
    fn fmt_key(key: &Permutation, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G{key}")
    }
}

/// An element of FQSym in the `G` basis.
pub type FQSymElem = Element<GBasis>;

/// Every packed word with standardization `σ`.
///
/// Walking through the values of `σ` in order, the letter at position
/// `σ⁻¹(i+1)` equals the one at `σ⁻¹(i)` or exceeds it by one; equality is
/// only allowed when `σ⁻¹(i+1)` lies to the right.
pub fn std_fiber(sigma: &Permutation) -> Vec<PackedWord> {
    let n = sigma.len();
    if n == 0 {
        return vec![PackedWord::empty()];
    }
    let mut pos = vec![0; n];
    for (i, &x) in sigma.letters().iter().enumerate() {
        pos[x as usize - 1] = i;
    }
    let free: Vec<usize> = (1..n).filter(|&i| pos[i] > pos[i - 1]).collect();
    let mut out = Vec::with_capacity(1 << free.len());
    for mask in 0u64..1 << free.len() {
        let mut letters = vec![0; n];
        let mut cur = 1;
        letters[pos[0]] = 1;
        for i in 1..n {
            let stay = free
                .iter()
                .position(|&f| f == i)
                .is_some_and(|j| mask >> j & 1 == 1);
            if !stay {
                cur += 1;
            }
            letters[pos[i]] = cur;
        }
        out.push(PackedWord::new(letters).unwrap());
    }
    out.sort();
    out
}

/// `G_σ` written in the monomial basis of WQSym.
pub fn g_basis(sigma: &Permutation) -> WQSymElem {
    std_fiber(sigma)
        .into_iter()
        .map(|w| (w, BigInt::one()))
        .collect()
}

/// The embedding FQSym → WQSym.
pub fn to_wqsym(f: &FQSymElem) -> WQSymElem {
    f.linear_map(g_basis)
}

/// Rewrites `f` in the `G` basis if it lies in FQSym, i.e. if its coefficient
/// is constant on every std-fiber.
pub fn from_wqsym(f: &WQSymElem) -> Option<FQSymElem> {
    let mut by_std: BTreeMap<Permutation, BigInt> = BTreeMap::new();
    for (w, c) in f.terms() {
        let sigma = w.word().std();
        match by_std.get(&sigma) {
            Some(prev) if prev != c => return None,
            _ => {
                by_std.insert(sigma, c.clone());
            }
        }
    }
    for (sigma, c) in &by_std {
        if std_fiber(sigma).iter().any(|w| &f.coeff(w) != c) {
            return None;
        }
    }
    Some(by_std.into_iter().collect())
}

/// `G_σ op G_τ` for the two operations that preserve FQSym.
///
/// `▷` gives the single term `G_{στ^{+ℓ}}` with `ℓ = |σ|`; `≻` sums `G_π` over
/// the shuffles `π` with `std π[:ℓ] = σ`, `std π[ℓ:] = τ` and
/// `min π[:ℓ] > min π[ℓ:]`.
pub fn fq_op(op: Op, sigma: &Permutation, tau: &Permutation) -> Result<FQSymElem> {
    let l = sigma.len();
    match op {
        Op::Belg => {
            let w = sigma.word().concat(&tau.word().shift(l as u32));
            Ok(FQSymElem::basis(Permutation::new(w.letters().to_vec())?))
        }
        Op::Succ => {
            let n = l + tau.len();
            let mut out = FQSymElem::zero();
            for set_a in (1..=n as u32).combinations(l) {
                let set_b: Vec<u32> = (1..=n as u32).filter(|x| !set_a.contains(x)).collect();
                let pre = Word::new(
                    sigma
                        .letters()
                        .iter()
                        .map(|&x| set_a[x as usize - 1])
                        .collect(),
                )?;
                let suf = Word::new(
                    tau.letters()
                        .iter()
                        .map(|&x| set_b[x as usize - 1])
                        .collect(),
                )?;
                if op.keeps(pre.supp_min(), pre.supp_max(), suf.supp_min()) {
                    let pi = pre.concat(&suf);
                    out.add_term(Permutation::new(pi.letters().to_vec())?, BigInt::one());
                }
            }
            Ok(out)
        }
        other => Err(Error::InvalidArgument(format!(
            "`{other}` does not preserve FQSym; only `succ` and `belg` do"
        ))),
    }
}

/// Bilinear extension of [`fq_op`].
pub fn fq_op_elem(op: Op, f: &FQSymElem, g: &FQSymElem) -> Result<FQSymElem> {
    let mut out = FQSymElem::zero();
    for (s, a) in f.terms() {
        for (t, b) in g.terms() {
            out.add_scaled(&fq_op(op, s, t)?, &(a * b));
        }
    }
    Ok(out)
}

/// `H_m = G_{(1,2,…,m)}`.
#[allow(non_snake_case)]
pub fn H(m: u32) -> FQSymElem {
    FQSymElem::basis(Permutation::identity(m))
}

/// `E_m = G_{(m,m−1,…,1)}`.
#[allow(non_snake_case)]
pub fn E(m: u32) -> FQSymElem {
    FQSymElem::basis(Permutation::reversal(m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{expand_word_elem, NCTruncSeries};
    use crate::wqsym::{wq_op, wq_op_elem};

    fn perm(v: &[u32]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    fn g(v: &[u32]) -> FQSymElem {
        FQSymElem::basis(perm(v))
    }

    fn mu(v: &[u32]) -> WQSymElem {
        WQSymElem::basis(PackedWord::new(v.to_vec()).unwrap())
    }

    #[test]
    fn g_basis_examples() {
        assert_eq!(g_basis(&perm(&[1])), mu(&[1]));
        assert_eq!(g_basis(&perm(&[1, 2])), mu(&[1, 2]) + mu(&[1, 1]));
        assert_eq!(g_basis(&perm(&[])), WQSymElem::one());
    }

    #[test]
    fn std_fiber_matches_filter() {
        for n in 0..=5 {
            for sigma in Permutation::all_of_length(n) {
                let want: Vec<PackedWord> = PackedWord::all_of_length(n)
                    .into_iter()
                    .filter(|w| w.word().std() == sigma)
                    .collect();
                assert_eq!(std_fiber(&sigma), want, "{sigma}");
            }
        }
    }

    #[test]
    fn fq_op_examples() {
        assert_eq!(
            fq_op(Op::Belg, &perm(&[1]), &perm(&[1])).unwrap(),
            g(&[1, 2])
        );
        assert_eq!(
            fq_op(Op::Succ, &perm(&[1]), &perm(&[1])).unwrap(),
            g(&[2, 1])
        );
        assert_eq!(
            fq_op(Op::Belg, &perm(&[2, 1]), &perm(&[1])).unwrap(),
            g(&[2, 1, 3])
        );
        assert!(matches!(
            fq_op(Op::Prec, &perm(&[1]), &perm(&[1])),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn succ_example_by_enumeration() {
        // All π ∈ S_2 with std of each half trivially fixed; keep min π[:1] > min π[1:].
        let kept: Vec<Permutation> = Permutation::all_of_length(2)
            .into_iter()
            .filter(|p| p.letters()[0] > p.letters()[1])
            .collect();
        assert_eq!(kept, vec![perm(&[2, 1])]);
    }

    #[test]
    fn h_and_e_examples() {
        assert_eq!(H(2), g(&[1, 2]));
        assert_eq!(E(2), g(&[2, 1]));
        assert_eq!(H(0), FQSymElem::basis(Permutation::identity(0)));
        assert_eq!(to_wqsym(&H(0)), WQSymElem::one());
    }

    #[test]
    fn h_and_e_expand_to_weak_and_strict_sequences() {
        for m in 0..=4u32 {
            let mut weak = NCTruncSeries::zero(4, 4);
            let mut strict = NCTruncSeries::zero(4, 4);
            for w in (0..m).map(|_| 1..=4u32).multi_cartesian_product() {
                let word = Word::new(w.clone()).unwrap();
                if w.windows(2).all(|p| p[0] <= p[1]) {
                    weak.add_word(word.clone(), BigInt::one());
                }
                if w.windows(2).all(|p| p[0] > p[1]) {
                    strict.add_word(word, BigInt::one());
                }
            }
            assert_eq!(expand_word_elem(&to_wqsym(&H(m)), 4, 4).unwrap(), weak);
            assert_eq!(expand_word_elem(&to_wqsym(&E(m)), 4, 4).unwrap(), strict);
        }
    }

    #[test]
    fn closure_under_succ_and_belg() {
        for n in 0..=5 {
            for k in 0..=n {
                for s in Permutation::all_of_length(k) {
                    for t in Permutation::all_of_length(n - k) {
                        let (gs, gt) = (g_basis(&s), g_basis(&t));
                        for op in [Op::Succ, Op::Belg] {
                            let lifted = wq_op_elem(op, &gs, &gt);
                            let back =
                                from_wqsym(&lifted).unwrap_or_else(|| panic!("{op} {s} {t}"));
                            assert_eq!(back, fq_op(op, &s, &t).unwrap(), "{op} {s} {t}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn prec_leaves_fqsym() {
        let lifted = wq_op_elem(Op::Prec, &g_basis(&perm(&[1])), &g_basis(&perm(&[1])));
        // G_1 ≺ G_1 = M_12, but G_12 = M_12 + M_11.
        assert_eq!(
            lifted,
            wq_op(
                Op::Prec,
                &PackedWord::new(vec![1]).unwrap(),
                &PackedWord::new(vec![1]).unwrap()
            )
        );
        assert!(from_wqsym(&lifted).is_none());
    }

    #[test]
    fn from_wqsym_roundtrip() {
        let f = g(&[2, 1, 3]).scale(&BigInt::from(3)) - g(&[1, 2]);
        assert_eq!(from_wqsym(&to_wqsym(&f)), Some(f));
    }
}
