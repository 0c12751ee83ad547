//! Brute-force models: polynomials in `n` commuting variables and in `n`
//! noncommuting letters, truncated above degree `d`.
//!
//! Every restricted product is evaluated here directly from its defining Supp
//! condition on pairs of monomials (or words), which makes these types the
//! ground truth the basis-level formulas are checked against. Products whose
//! degree exceeds `d` are dropped, so comparisons are only meaningful in
//! degrees `≤ d`.

use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::One;

use crate::composition::Composition;
use crate::element::{Basis, Element};
use crate::error::{Error, Result};
use crate::ops::Op;
use crate::qsym::QSymElem;
use crate::words::{PackedWord, Word};
use crate::wqsym::WQSymElem;

/// Default number of variables for commutative checks.
pub const DEFAULT_N: usize = 6;
/// Default degree bound for commutative checks.
pub const DEFAULT_D: u32 = 5;
/// Default number of letters for noncommutative checks.
pub const DEFAULT_NC_N: usize = 5;
/// Default length bound for noncommutative checks.
pub const DEFAULT_NC_D: u32 = 4;

/// `min Supp` of a monomial, with the empty support mapped to `+∞`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SuppMin {
    Index(u32),
    Infinity,
}

impl SuppMin {
    pub fn as_option(self) -> Option<u32> {
        match self {
            SuppMin::Index(i) => Some(i),
            SuppMin::Infinity => None,
        }
    }
}

/// `x₁^{e₁} ⋯ x_n^{e_n}`, stored as its exponent vector.
///
/// Ordered by degree, then by descending exponent vector, so `x₁²` sorts
/// before `x₁x₂`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exponents: Vec<u32>,
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Self { exponents }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn degree(&self) -> u32 {
        self.exponents.iter().sum()
    }

    /// Indices (1-based) of the variables occurring in the monomial.
    pub fn support(&self) -> impl Iterator<Item = u32> + '_ {
        self.exponents
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i as u32 + 1)
    }

    pub fn supp_min(&self) -> SuppMin {
        self.support()
            .next()
            .map_or(SuppMin::Infinity, SuppMin::Index)
    }

    /// `max Supp`, with 0 for the constant monomial.
    pub fn supp_max(&self) -> u32 {
        self.support().last().unwrap_or(0)
    }

    fn times(&self, other: &Self) -> Self {
        Self::new(
            self.exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.exponents.cmp(&self.exponents))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.exponents.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Basis of commutative monomials.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MonomialKeys;

impl Basis for MonomialKeys {
    type Key = Monomial;
    fn fmt_key(key: &Monomial, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{key}")
    }
}

/// Basis of noncommutative words.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct WordKeys;

impl Basis for WordKeys {
    type Key = Word;
    fn fmt_key(key: &Word, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if key.is_empty() {
            return write!(f, "1");
        }
        for x in key.letters() {
            write!(f, "X{x}")?;
        }
        Ok(())
    }
}

/// A polynomial in `x₁, …, x_n` with all terms of degree `≤ d`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncSeries {
    n: usize,
    d: u32,
    terms: Element<MonomialKeys>,
}

/// A noncommutative polynomial in `X₁, …, X_n` with all words of length `≤ d`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NCTruncSeries {
    n: usize,
    d: u32,
    terms: Element<WordKeys>,
}

impl TruncSeries {
    pub fn zero(n: usize, d: u32) -> Self {
        Self {
            n,
            d,
            terms: Element::zero(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn terms(&self) -> &Element<MonomialKeys> {
        &self.terms
    }

    /// Adds `coeff · x^{exponents}`; ignored if the degree exceeds `d`.
    ///
    /// Panics if `exponents` does not have length `n`.
    pub fn add_monomial(&mut self, exponents: Vec<u32>, coeff: BigInt) {
        assert_eq!(exponents.len(), self.n, "exponent vector has wrong length");
        let m = Monomial::new(exponents);
        if m.degree() <= self.d {
            self.terms.add_term(m, coeff);
        }
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if (self.n, self.d) != (other.n, other.d) {
            return Err(Error::InvalidArgument(format!(
                "series shapes differ: (n, d) = ({}, {}) vs ({}, {})",
                self.n, self.d, other.n, other.d
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(Self {
            terms: &self.terms + &other.terms,
            ..self.clone()
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(Self {
            terms: &self.terms - &other.terms,
            ..self.clone()
        })
    }
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.terms)
    }
}

impl NCTruncSeries {
    pub fn zero(n: usize, d: u32) -> Self {
        Self {
            n,
            d,
            terms: Element::zero(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn terms(&self) -> &Element<WordKeys> {
        &self.terms
    }

    /// Adds `coeff · w`; ignored if `w` is longer than `d`.
    ///
    /// Panics if a letter of `w` exceeds `n`.
    pub fn add_word(&mut self, w: Word, coeff: BigInt) {
        assert!(w.supp_max() as usize <= self.n, "letter out of range");
        if w.len() as u32 <= self.d {
            self.terms.add_term(w, coeff);
        }
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if (self.n, self.d) != (other.n, other.d) {
            return Err(Error::InvalidArgument(format!(
                "series shapes differ: (n, d) = ({}, {}) vs ({}, {})",
                self.n, self.d, other.n, other.d
            )));
        }
        Ok(())
    }
}

impl fmt::Display for NCTruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.terms)
    }
}

/// Applies `op` monomial by monomial: `m·n` is kept iff the op's Supp
/// condition holds for `(m, n)` and `deg(mn) ≤ d`.
pub fn series_op(op: Op, f: &TruncSeries, g: &TruncSeries) -> Result<TruncSeries> {
    f.check_compatible(g)?;
    let mut out = TruncSeries::zero(f.n, f.d);
    for (m, a) in f.terms.terms() {
        for (n, b) in g.terms.terms() {
            if m.degree() + n.degree() > f.d {
                continue;
            }
            if op.keeps(
                m.supp_min().as_option(),
                m.supp_max(),
                n.supp_min().as_option(),
            ) {
                out.terms.add_term(m.times(n), a * b);
            }
        }
    }
    Ok(out)
}

/// Applies `op` word by word: `uv` is kept iff the op's Supp condition holds
/// for `(u, v)` and `|uv| ≤ d`.
pub fn nc_series_op(op: Op, f: &NCTruncSeries, g: &NCTruncSeries) -> Result<NCTruncSeries> {
    f.check_compatible(g)?;
    let mut out = NCTruncSeries::zero(f.n, f.d);
    for (u, a) in f.terms.terms() {
        for (v, b) in g.terms.terms() {
            if (u.len() + v.len()) as u32 > f.d {
                continue;
            }
            if op.keeps(u.supp_min(), u.supp_max(), v.supp_min()) {
                out.terms.add_term(u.concat(v), a * b);
            }
        }
    }
    Ok(out)
}

fn check_degree(deg: u32, d: u32) -> Result<()> {
    if deg > d {
        return Err(Error::InvalidArgument(format!(
            "degree {deg} exceeds the truncation bound {d}"
        )));
    }
    Ok(())
}

/// `M_α = Σ_{i₁<⋯<i_ℓ} x_{i₁}^{α₁} ⋯ x_{i_ℓ}^{α_ℓ}` with indices `≤ n`.
pub fn expand_m(alpha: &Composition, n: usize, d: u32) -> Result<TruncSeries> {
    check_degree(alpha.size(), d)?;
    let mut out = TruncSeries::zero(n, d);
    for idx in (0..n).combinations(alpha.len()) {
        let mut exps = vec![0; n];
        for (&i, &p) in idx.iter().zip(alpha.parts()) {
            exps[i] = p;
        }
        out.add_monomial(exps, BigInt::one());
    }
    Ok(out)
}

/// `F_α = Σ x_{i₁} ⋯ x_{i_k}` over `i₁ ≤ ⋯ ≤ i_k ≤ n` with `i_j < i_{j+1}`
/// whenever `j ∈ D(α)`.
pub fn expand_f(alpha: &Composition, n: usize, d: u32) -> Result<TruncSeries> {
    let k = alpha.size();
    check_degree(k, d)?;
    let cuts = alpha.partial_sums().elems;
    let mut out = TruncSeries::zero(n, d);
    let mut exps = vec![0; n];
    fn go(
        j: u32,
        k: u32,
        lo: usize,
        cuts: &std::collections::BTreeSet<u32>,
        exps: &mut Vec<u32>,
        out: &mut TruncSeries,
    ) {
        if j == k {
            out.add_monomial(exps.clone(), BigInt::one());
            return;
        }
        for i in lo..exps.len() {
            exps[i] += 1;
            // position j+1 is i; the next index must exceed it if j+1 ∈ D(α)
            let next_lo = if cuts.contains(&(j + 1)) { i + 1 } else { i };
            go(j + 1, k, next_lo, cuts, exps, out);
            exps[i] -= 1;
        }
    }
    go(0, k, 0, &cuts, &mut exps, &mut out);
    Ok(out)
}

/// Linear extension of [`expand_m`].
pub fn expand_elem(f: &QSymElem, n: usize, d: u32) -> Result<TruncSeries> {
    let mut out = TruncSeries::zero(n, d);
    for (alpha, c) in f.terms() {
        let e = expand_m(alpha, n, d)?;
        out.terms.add_scaled(&e.terms, c);
    }
    Ok(out)
}

/// `M_u = Σ w` over words `w` with letters `≤ n` and `pack w = u`.
pub fn expand_mu(u: &PackedWord, n: usize, d: u32) -> Result<NCTruncSeries> {
    check_degree(u.len() as u32, d)?;
    let mut out = NCTruncSeries::zero(n, d);
    for values in (1..=n as u32).combinations(u.max_letter() as usize) {
        let w = Word::new(
            u.letters()
                .iter()
                .map(|&x| values[x as usize - 1])
                .collect(),
        )?;
        out.add_word(w, BigInt::one());
    }
    Ok(out)
}

/// Linear extension of [`expand_mu`].
pub fn expand_word_elem(f: &WQSymElem, n: usize, d: u32) -> Result<NCTruncSeries> {
    let mut out = NCTruncSeries::zero(n, d);
    for (u, c) in f.terms() {
        let e = expand_mu(u, n, d)?;
        out.terms.add_scaled(&e.terms, c);
    }
    Ok(out)
}
