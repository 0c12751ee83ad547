//! NSym in the ribbon basis, its pairing with QSym, the perp operators `g⊥`,
//! and the creation operators `W_m`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::composition::{compositions_up_to, Composition};
use crate::element::{Basis, Element};
use crate::error::{Error, Result};
use crate::qsym::{coproduct, fundamental, m_to_f, mul, QSymElem};

/// The ribbon basis `(R_α)` of NSym, dual to `(F_α)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RBasis;

impl Basis for RBasis {
    type Key = Composition;
    fn fmt_key(key: &Composition, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "R{key}")
    }
}

/// A noncommutative symmetric function in the ribbon basis.
pub type NSymElem = Element<RBasis>;

pub fn ribbon(alpha: Composition) -> NSymElem {
    NSymElem::basis(alpha)
}

/// `R_α R_β = R_{[α,β]} + R_{α⊙β}` for nonempty `α`, `β`; `R_∅ = 1`.
pub fn ribbon_mul(x: &NSymElem, y: &NSymElem) -> NSymElem {
    x.bilinear(y, |a, b| {
        let mut out = NSymElem::basis(a.concat(b));
        if !a.is_empty() && !b.is_empty() {
            out.add_term(a.odot(b), BigInt::one());
        }
        out
    })
}

/// `(x, f)`, with `(R_α, F_β) = δ_{α,β}`.
pub fn pairing(x: &NSymElem, f: &QSymElem) -> BigInt {
    let coords = m_to_f(f);
    x.terms().map(|(a, c)| c * coords.coeff(a)).sum()
}

/// `g⊥ f = Σ_{(f)} (g, f₁) f₂`.
pub fn perp(g: &NSymElem, f: &QSymElem) -> QSymElem {
    let mut out = QSymElem::zero();
    for ((left, right), c) in coproduct(f).terms() {
        let k = pairing(g, &QSymElem::basis(left.clone()));
        if !k.is_zero() {
            out.add_term(right.clone(), c * k);
        }
    }
    out
}

/// `Σ_α (−1)^{|α|} weight(α) · R_{ω(α)}⊥ f`.
///
/// Only `|α| ≤ deg f` can contribute, since `R_{ω(α)}⊥` lowers degree by
/// `|α|`; the zero element gives 0.
pub fn alternating_perp_sum(
    f: &QSymElem,
    mut weight: impl FnMut(&Composition) -> QSymElem,
) -> QSymElem {
    let mut out = QSymElem::zero();
    let Some(deg) = f.degree() else {
        return out;
    };
    for alpha in compositions_up_to(deg) {
        let p = perp(&ribbon(alpha.omega()), f);
        if p.is_zero() {
            continue;
        }
        let sign = if alpha.size() % 2 == 0 {
            BigInt::one()
        } else {
            -BigInt::one()
        };
        out.add_scaled(&mul(&weight(&alpha), &p), &sign);
    }
    out
}

/// `W_m f = Σ_α (−1)^{|α|} F_{α⊙(m)} R_{ω(α)}⊥ f`.
pub fn w(m: u32, f: &QSymElem) -> Result<QSymElem> {
    if m == 0 {
        return Err(Error::InvalidArgument("W_m needs m ≥ 1".into()));
    }
    let tail = Composition::single(m);
    Ok(alternating_perp_sum(f, |alpha| {
        fundamental(&alpha.odot(&tail))
    }))
}

/// `𝔖*_α = (W_{α₁} ∘ ⋯ ∘ W_{α_ℓ})(1)`.
pub fn zabrocki_dual_immaculate(alpha: &Composition) -> QSymElem {
    alpha.parts().iter().rev().fold(QSymElem::one(), |acc, &p| {
        w(p, &acc).expect("parts are positive")
    })
}

/// `F_α^{∖m}`: 0 if `α = ∅` or `α_ℓ < m`, otherwise `F` of `α` with `m`
/// removed from its last part (dropping the part when it becomes 0).
pub fn f_setminus(alpha: &Composition, m: u32) -> QSymElem {
    match alpha.last() {
        Some(last) if last >= m => {
            let shortened = alpha.init().concat(&Composition::single(last - m));
            fundamental(&shortened)
        }
        _ => QSymElem::zero(),
    }
}
