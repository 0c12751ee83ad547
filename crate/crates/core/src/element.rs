//! Finite formal linear combinations with big-integer coefficients.
//!
//! Every algebra in this crate stores its elements as an [`Element`] over some
//! [`Basis`]: a sorted map from basis keys to nonzero coefficients. The basis
//! marker keeps, say, a QSym element in the monomial basis from being mixed up
//! with an NSym element in the ribbon basis even though both are keyed by
//! compositions.

use std::collections::BTreeMap;
use std::fmt;
use std::hash::Hash;
use std::marker::PhantomData;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// A basis of a free module: the key type and how a single basis vector prints.
pub trait Basis {
    type Key: Ord + Clone + Hash + fmt::Debug;

    fn fmt_key(key: &Self::Key, f: &mut fmt::Formatter<'_>) -> fmt::Result;
}

/// A finite linear combination of basis vectors of `B` with integer coefficients.
///
/// Zero coefficients are never stored, so two elements are equal exactly when
/// their term maps are equal.
pub struct Element<B: Basis> {
    terms: BTreeMap<B::Key, BigInt>,
    basis: PhantomData<B>,
}

impl<B: Basis> Clone for Element<B> {
    fn clone(&self) -> Self {
        Self::from_map_unchecked(self.terms.clone())
    }
}

impl<B: Basis> PartialEq for Element<B> {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl<B: Basis> Eq for Element<B> {}

impl<B: Basis> Hash for Element<B> {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl<B: Basis> Default for Element<B> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<B: Basis> Element<B> {
    fn from_map_unchecked(terms: BTreeMap<B::Key, BigInt>) -> Self {
        Self {
            terms,
            basis: PhantomData,
        }
    }

    pub fn zero() -> Self {
        Self::from_map_unchecked(BTreeMap::new())
    }

    /// The basis vector indexed by `key`, with coefficient 1.
    pub fn basis(key: B::Key) -> Self {
        Self::term(key, BigInt::one())
    }

    pub fn term(key: B::Key, coeff: impl Into<BigInt>) -> Self {
        let mut out = Self::zero();
        out.add_term(key, coeff.into());
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored (nonzero) terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, key: &B::Key) -> BigInt {
        self.terms.get(key).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&B::Key, &BigInt)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &B::Key> {
        self.terms.keys()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (B::Key, BigInt)> {
        self.terms.into_iter()
    }

    pub fn add_term(&mut self, key: B::Key, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, factor: &BigInt) {
        if factor.is_zero() {
            return;
        }
        for (k, c) in &other.terms {
            self.add_term(k.clone(), c * factor);
        }
    }

    pub fn scale(&self, factor: &BigInt) -> Self {
        if factor.is_zero() {
            return Self::zero();
        }
        Self::from_map_unchecked(
            self.terms
                .iter()
                .map(|(k, c)| (k.clone(), c * factor))
                .collect(),
        )
    }

    /// Extends `image` linearly: each basis vector `k` goes to `image(k)`.
    pub fn linear_map<C: Basis>(&self, mut image: impl FnMut(&B::Key) -> Element<C>) -> Element<C> {
        let mut out = Element::zero();
        for (k, c) in &self.terms {
            out.add_scaled(&image(k), c);
        }
        out
    }

    /// Extends `image` bilinearly over the terms of `self` and `other`.
    pub fn bilinear<B2: Basis, C: Basis>(
        &self,
        other: &Element<B2>,
        mut image: impl FnMut(&B::Key, &B2::Key) -> Element<C>,
    ) -> Element<C> {
        let mut out = Element::zero();
        for (k1, c1) in &self.terms {
            for (k2, c2) in other.terms() {
                out.add_scaled(&image(k1, k2), &(c1 * c2));
            }
        }
        out
    }

    /// Keeps only the terms whose key satisfies `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&B::Key) -> bool) -> Self {
        Self::from_map_unchecked(
            self.terms
                .iter()
                .filter(|(k, _)| keep(k))
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        )
    }
}

impl<B: Basis> FromIterator<(B::Key, BigInt)> for Element<B> {
    fn from_iter<I: IntoIterator<Item = (B::Key, BigInt)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in iter {
            out.add_term(k, c);
        }
        out
    }
}

impl<B: Basis> AddAssign<&Element<B>> for Element<B> {
    fn add_assign(&mut self, rhs: &Element<B>) {
        for (k, c) in &rhs.terms {
            self.add_term(k.clone(), c.clone());
        }
    }
}

impl<B: Basis> SubAssign<&Element<B>> for Element<B> {
    fn sub_assign(&mut self, rhs: &Element<B>) {
        for (k, c) in &rhs.terms {
            self.add_term(k.clone(), -c);
        }
    }
}

impl<B: Basis> Add for &Element<B> {
    type Output = Element<B>;
    fn add(self, rhs: &Element<B>) -> Element<B> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<B: Basis> Add for Element<B> {
    type Output = Element<B>;
    fn add(mut self, rhs: Element<B>) -> Element<B> {
        self += &rhs;
        self
    }
}

impl<B: Basis> Sub for &Element<B> {
    type Output = Element<B>;
    fn sub(self, rhs: &Element<B>) -> Element<B> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<B: Basis> Sub for Element<B> {
    type Output = Element<B>;
    fn sub(mut self, rhs: Element<B>) -> Element<B> {
        self -= &rhs;
        self
    }
}

impl<B: Basis> Neg for &Element<B> {
    type Output = Element<B>;
    fn neg(self) -> Element<B> {
        Element::from_map_unchecked(self.terms.iter().map(|(k, c)| (k.clone(), -c)).collect())
    }
}

impl<B: Basis> Neg for Element<B> {
    type Output = Element<B>;
    fn neg(self) -> Element<B> {
        -&self
    }
}

impl<B: Basis> Mul<&Element<B>> for &BigInt {
    type Output = Element<B>;
    fn mul(self, rhs: &Element<B>) -> Element<B> {
        rhs.scale(self)
    }
}

impl<B: Basis> fmt::Display for Element<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            let magnitude = c.abs();
            match (i, c.is_negative()) {
                (0, false) => {}
                (0, true) => write!(f, "-")?,
                (_, false) => write!(f, " + ")?,
                (_, true) => write!(f, " - ")?,
            }
            if !magnitude.is_one() {
                write!(f, "{magnitude}*")?;
            }
            B::fmt_key(k, f)?;
        }
        Ok(())
    }
}

impl<B: Basis> fmt::Debug for Element<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
