//! Restricted products on QSym: `≺` and its complement `⪰`, the mirrored pair
//! `⪯`/`≻`, and the associative products `▷` and `⋖`.

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::composition::Composition;
use crate::error::{Error, Result};
use crate::ops::Op;
use crate::qsym::{for_each_overlapping_shuffle, mul, QSymElem};

/// `s_{α,β}^γ`: the number of overlapping shuffles of `α` and `β` giving `γ`
/// whose first part comes from `α` alone.
///
/// Walks `γ` left to right, matching each part against the next part of `α`,
/// the next part of `β`, or their sum.
pub fn smap_count(alpha: &Composition, beta: &Composition, gamma: &Composition) -> BigInt {
    if gamma.size() != alpha.size() + beta.size() || alpha.is_empty() {
        return BigInt::zero();
    }
    fn go(a: &[u32], b: &[u32], g: &[u32]) -> u64 {
        match (a, b, g) {
            ([], [], []) => 1,
            (_, _, []) => 0,
            (_, _, [g0, g_rest @ ..]) => {
                let mut n = 0;
                if let Some((a0, a_rest)) = a.split_first() {
                    if a0 == g0 {
                        n += go(a_rest, b, g_rest);
                    }
                    if let Some((b0, b_rest)) = b.split_first() {
                        if a0 + b0 == *g0 {
                            n += go(a_rest, b_rest, g_rest);
                        }
                    }
                }
                if let Some((b0, b_rest)) = b.split_first() {
                    if b0 == g0 {
                        n += go(a, b_rest, g_rest);
                    }
                }
                n
            }
        }
    }
    let (a, b, g) = (alpha.parts(), beta.parts(), gamma.parts());
    // The first part of γ must be the first part of α, unmerged.
    if a[0] != g[0] {
        return BigInt::zero();
    }
    BigInt::from(go(&a[1..], b, &g[1..]))
}

/// Reference implementation of [`smap_count`] straight from the definition.
///
/// Counts maps `f: S₀ ⊔ S₁ → {1, …, ℓ(γ)}` (with `|S₀| = ℓ(α)`, `|S₁| = ℓ(β)`)
/// that are strictly increasing on each of `S₀`, `S₁`, satisfy
/// `min f(S₀) < min f(S₁)` (with `min ∅ = ∞`), and whose fibers have part
/// sums `γ_u`. Exponential; for cross-checking only.
pub fn smap_count_by_maps(alpha: &Composition, beta: &Composition, gamma: &Composition) -> BigInt {
    let l = gamma.len();
    let mut count = 0u64;
    for f0 in (0..l).combinations(alpha.len()) {
        for f1 in (0..l).combinations(beta.len()) {
            let min0 = f0.first().copied().unwrap_or(usize::MAX);
            let min1 = f1.first().copied().unwrap_or(usize::MAX);
            if alpha.is_empty() || min0 >= min1 {
                continue;
            }
            let mut sums = vec![0u32; l];
            for (&pos, &p) in f0.iter().zip(alpha.parts()) {
                sums[pos] += p;
            }
            for (&pos, &p) in f1.iter().zip(beta.parts()) {
                sums[pos] += p;
            }
            if sums == gamma.parts() {
                count += 1;
            }
        }
    }
    BigInt::from(count)
}

/// `M_α ≺ M_β`.
pub fn prec_basis(alpha: &Composition, beta: &Composition) -> QSymElem {
    let mut out = QSymElem::zero();
    for_each_overlapping_shuffle(alpha.parts(), beta.parts(), |g, first| {
        if first == Some(0) {
            out.add_term(Composition::new(g.to_vec()).unwrap(), BigInt::one());
        }
    });
    out
}

pub fn prec(f: &QSymElem, g: &QSymElem) -> QSymElem {
    f.bilinear(g, prec_basis)
}

/// `f ⪰ g = fg − f ≺ g`.
pub fn succeq(f: &QSymElem, g: &QSymElem) -> QSymElem {
    mul(f, g) - prec(f, g)
}

/// `f ≻ g = g ≺ f`.
pub fn succ(f: &QSymElem, g: &QSymElem) -> QSymElem {
    prec(g, f)
}

/// `f ⪯ g = fg − f ≻ g`.
pub fn preceq(f: &QSymElem, g: &QSymElem) -> QSymElem {
    mul(f, g) - succ(f, g)
}

/// `M_α ▷ M_β = M_{[α,β]} + M_{α⊙β}`, or just `M_{[α,β]}` if either is empty.
pub fn belg_basis(alpha: &Composition, beta: &Composition) -> QSymElem {
    let mut out = QSymElem::basis(alpha.concat(beta));
    if !alpha.is_empty() && !beta.is_empty() {
        out.add_term(alpha.odot(beta), BigInt::one());
    }
    out
}

pub fn belg(f: &QSymElem, g: &QSymElem) -> QSymElem {
    f.bilinear(g, belg_basis)
}

/// `M_α ⋖ M_β = M_{[α,β]}`.
pub fn tvim_basis(alpha: &Composition, beta: &Composition) -> QSymElem {
    QSymElem::basis(alpha.concat(beta))
}

pub fn tvim(f: &QSymElem, g: &QSymElem) -> QSymElem {
    f.bilinear(g, tvim_basis)
}

/// `p₁ ▷ p₂ ▷ ⋯ ▷ p_k`; the empty chain is 1.
pub fn belg_chain(parts: &[QSymElem]) -> QSymElem {
    parts.iter().fold(QSymElem::one(), |acc, p| belg(&acc, p))
}

/// `p₁ ⋖ p₂ ⋖ ⋯ ⋖ p_k`; the empty chain is 1.
pub fn tvim_chain(parts: &[QSymElem]) -> QSymElem {
    parts.iter().fold(QSymElem::one(), |acc, p| tvim(&acc, p))
}

/// Dispatches a binary operation on QSym. `∘` is only defined on WQSym here.
pub fn apply(op: Op, f: &QSymElem, g: &QSymElem) -> Result<QSymElem> {
    Ok(match op {
        Op::Mul => mul(f, g),
        Op::Prec => prec(f, g),
        Op::Succeq => succeq(f, g),
        Op::Preceq => preceq(f, g),
        Op::Succ => succ(f, g),
        Op::Belg => belg(f, g),
        Op::Tvim => tvim(f, g),
        Op::Circ => {
            return Err(Error::InvalidArgument(
                "`circ` is only available on WQSym".into(),
            ))
        }
    })
}
