//! Compositions and the combinatorics on them: partial-sum sets, concatenation,
//! the merging product `⊙`, reversal and the conjugation `ω`.
//!
//! Compositions are totally ordered by size first and then by *descending*
//! lexicographic order of their parts. This is the order used for iteration
//! ([`compositions_of`]) and for every printed or serialized term list, e.g.
//! `(3) < (2,1) < (1,2) < (1,1,1)` among compositions of 3. The plain
//! lexicographic comparison is available separately as
//! [`Composition::lex_leq`].

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite sequence of positive integers. The empty composition is `∅`.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Composition(Vec<u32>);

/// Builds a [`Composition`] from literal parts; panics on a zero part.
#[macro_export]
macro_rules! comp {
    () => { $crate::Composition::empty() };
    ($($p:expr),+ $(,)?) => {
        $crate::Composition::new(vec![$($p),+]).expect("composition parts must be positive")
    };
}

/// The set `D(α)` of proper partial sums, together with the ambient size `n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PartialSumSet {
    pub n: u32,
    pub elems: BTreeSet<u32>,
}

impl PartialSumSet {
    pub fn new(n: u32, elems: impl IntoIterator<Item = u32>) -> Self {
        Self {
            n,
            elems: elems.into_iter().collect(),
        }
    }
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if let Some(pos) = parts.iter().position(|&p| p == 0) {
            return Err(Error::Malformed(format!(
                "composition part {pos} is zero in {parts:?}"
            )));
        }
        Ok(Self(parts))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// The one-part composition `(m)`; `(0)` collapses to `∅`.
    pub fn single(m: u32) -> Self {
        if m == 0 {
            Self::empty()
        } else {
            Self(vec![m])
        }
    }

    /// `(1^m)`, the composition of `m` into ones.
    pub fn ones(m: u32) -> Self {
        Self(vec![1; m as usize])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Option<u32> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<u32> {
        self.0.last().copied()
    }

    /// All parts but the first (`ᾱ`); empty for `∅`.
    pub fn tail(&self) -> Self {
        Self(self.0.iter().skip(1).copied().collect())
    }

    /// All parts but the last; empty for `∅`.
    pub fn init(&self) -> Self {
        let keep = self.0.len().saturating_sub(1);
        Self(self.0[..keep].to_vec())
    }

    pub fn partial_sums(&self) -> PartialSumSet {
        let mut elems = BTreeSet::new();
        let mut acc = 0;
        for &p in self.0.iter().take(self.0.len().saturating_sub(1)) {
            acc += p;
            elems.insert(acc);
        }
        PartialSumSet {
            n: self.size(),
            elems,
        }
    }

    /// Inverse of [`Composition::partial_sums`].
    pub fn from_partial_sums(s: &PartialSumSet) -> Result<Self> {
        if let Some(&bad) = s.elems.iter().find(|&&e| e == 0 || e >= s.n) {
            return Err(Error::Malformed(format!(
                "partial sum {bad} is outside 1..{} for n = {}",
                s.n.saturating_sub(1),
                s.n
            )));
        }
        if s.n == 0 {
            return Ok(Self::empty());
        }
        let mut parts = Vec::with_capacity(s.elems.len() + 1);
        let mut prev = 0;
        for &e in s.elems.iter().chain(std::iter::once(&s.n)) {
            parts.push(e - prev);
            prev = e;
        }
        Ok(Self(parts))
    }

    /// `[α, β]`: the parts of `α` followed by those of `β`.
    pub fn concat(&self, other: &Self) -> Self {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Self(parts)
    }

    /// `α ⊙ β`: concatenation with the last part of `α` merged into the first of `β`.
    pub fn odot(&self, other: &Self) -> Self {
        if self.is_empty() {
            return other.clone();
        }
        if other.is_empty() {
            return self.clone();
        }
        let mut parts = self.0.clone();
        *parts.last_mut().unwrap() += other.0[0];
        parts.extend_from_slice(&other.0[1..]);
        Self(parts)
    }

    pub fn reverse(&self) -> Self {
        Self(self.0.iter().rev().copied().collect())
    }

    /// `ω(α)`: the composition of `|α|` whose partial sums are the complement
    /// of `D(rev α)` in `{1, …, |α|−1}`.
    pub fn omega(&self) -> Self {
        let n = self.size();
        let rev = self.reverse().partial_sums();
        let complement = (1..n).filter(|i| !rev.elems.contains(i));
        Self::from_partial_sums(&PartialSumSet::new(n, complement))
            .expect("complement of a partial-sum set is well-formed")
    }

    /// All `β` of the same size with `D(β) ⊆ D(α)`, in canonical order.
    pub fn coarsenings(&self) -> Vec<Self> {
        let d = self.partial_sums();
        let cuts: Vec<u32> = d.elems.iter().copied().collect();
        self.compositions_from_cut_subsets(&cuts, &BTreeSet::new())
    }

    /// All `β` of the same size with `D(β) ⊇ D(α)`, in canonical order.
    pub fn refinements(&self) -> Vec<Self> {
        let d = self.partial_sums();
        let free: Vec<u32> = (1..d.n).filter(|i| !d.elems.contains(i)).collect();
        self.compositions_from_cut_subsets(&free, &d.elems)
    }

    fn compositions_from_cut_subsets(&self, optional: &[u32], fixed: &BTreeSet<u32>) -> Vec<Self> {
        let n = self.size();
        let mut out: Vec<Self> = (0u64..1 << optional.len())
            .map(|mask| {
                let mut elems = fixed.clone();
                elems.extend(
                    optional
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| mask >> i & 1 == 1)
                        .map(|(_, &c)| c),
                );
                Self::from_partial_sums(&PartialSumSet { n, elems }).unwrap()
            })
            .collect();
        out.sort();
        out
    }

    /// Plain lexicographic `self ≤ other`: compare parts left to right, a proper
    /// prefix being smaller.
    pub fn lex_leq(&self, other: &Self) -> bool {
        self.0 <= other.0
    }
}

impl Ord for Composition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Composition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl TryFrom<Vec<u32>> for Composition {
    type Error = Error;
    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Self::new(parts)
    }
}

impl From<Composition> for Vec<u32> {
    fn from(c: Composition) -> Self {
        c.0
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses a bracketed, comma-separated list of integers such as `[2, 1,3]` or `[]`.
pub(crate) fn parse_bracketed(s: &str) -> Result<Vec<u32>> {
    let t = s.trim();
    let inner = t
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| Error::Parse(format!("expected `[...]`, got `{t}`")))?;
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|p| {
            p.trim()
                .parse::<u32>()
                .map_err(|e| Error::Parse(format!("bad entry `{}`: {e}", p.trim())))
        })
        .collect()
}

impl FromStr for Composition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::new(parse_bracketed(s)?)
    }
}

/// All `2^{n−1}` compositions of `n` (just `∅` for `n = 0`), starting from `(n)`
/// and walking down in lexicographic order, e.g. `(3), (2,1), (1,2), (1,1,1)`.
pub fn compositions_of(n: u32) -> CompositionsOf {
    CompositionsOf {
        next: Some(Composition::single(n)),
    }
}

/// Iterator returned by [`compositions_of`].
#[derive(Clone, Debug)]
pub struct CompositionsOf {
    next: Option<Composition>,
}

impl Iterator for CompositionsOf {
    type Item = Composition;

    fn next(&mut self) -> Option<Composition> {
        let current = self.next.take()?;
        // Lex predecessor: lower the rightmost part above 1 and lump everything
        // after it into a single part.
        if let Some(i) = current.0.iter().rposition(|&p| p > 1) {
            let mut parts = current.0[..=i].to_vec();
            parts[i] -= 1;
            let rest: u32 = 1 + current.0[i + 1..].iter().sum::<u32>();
            parts.push(rest);
            self.next = Some(Composition(parts));
        }
        Some(current)
    }
}

/// All compositions of size at most `max_size`, in canonical order.
pub fn compositions_up_to(max_size: u32) -> impl Iterator<Item = Composition> {
    (0..=max_size).flat_map(compositions_of)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pss(n: u32, e: &[u32]) -> PartialSumSet {
        PartialSumSet::new(n, e.iter().copied())
    }

    #[test]
    fn partial_sums_examples() {
        assert_eq!(comp![2, 1].partial_sums(), pss(3, &[2]));
        assert_eq!(comp![].partial_sums(), pss(0, &[]));
        assert_eq!(comp![1, 1, 1].partial_sums(), pss(3, &[1, 2]));
    }

    #[test]
    fn from_partial_sums_examples() {
        assert_eq!(
            Composition::from_partial_sums(&pss(3, &[2])).unwrap(),
            comp![2, 1]
        );
        assert_eq!(
            Composition::from_partial_sums(&pss(4, &[])).unwrap(),
            comp![4]
        );
        assert_eq!(
            Composition::from_partial_sums(&pss(3, &[1, 2])).unwrap(),
            comp![1, 1, 1]
        );
        assert_eq!(
            Composition::from_partial_sums(&pss(0, &[])).unwrap(),
            comp![]
        );
    }

    #[test]
    fn from_partial_sums_rejects_out_of_range() {
        assert!(matches!(
            Composition::from_partial_sums(&pss(3, &[3])),
            Err(Error::Malformed(_))
        ));
        assert!(Composition::from_partial_sums(&pss(3, &[0])).is_err());
        assert!(Composition::from_partial_sums(&pss(1, &[1])).is_err());
        assert!(Composition::from_partial_sums(&pss(0, &[1])).is_err());
    }

    #[test]
    fn zero_part_is_rejected() {
        assert!(Composition::new(vec![1, 0, 2]).is_err());
    }

    #[test]
    fn concat_and_odot_examples() {
        assert_eq!(comp![1, 2].concat(&comp![3]), comp![1, 2, 3]);
        assert_eq!(comp![].concat(&comp![2]), comp![2]);
        assert_eq!(comp![2].concat(&comp![1]), comp![2, 1]);
        assert_eq!(comp![1, 2].odot(&comp![3]), comp![1, 5]);
        assert_eq!(comp![].odot(&comp![1, 1]), comp![1, 1]);
        assert_eq!(comp![1].odot(&comp![1]), comp![2]);
        assert_eq!(comp![2, 1].odot(&comp![]), comp![2, 1]);
    }

    #[test]
    fn reverse_examples() {
        assert_eq!(comp![1, 2].reverse(), comp![2, 1]);
        assert_eq!(comp![].reverse(), comp![]);
        assert_eq!(comp![3].reverse(), comp![3]);
    }

    #[test]
    fn omega_examples() {
        assert_eq!(comp![2].omega(), comp![1, 1]);
        assert_eq!(comp![].omega(), comp![]);
        assert_eq!(comp![2, 1].omega(), comp![2, 1]);
        assert_eq!(comp![3].omega(), comp![1, 1, 1]);
        assert_eq!(comp![1, 3].omega(), comp![1, 1, 2]);
    }

    #[test]
    fn coarsenings_and_refinements() {
        assert_eq!(comp![1, 1].coarsenings(), vec![comp![2], comp![1, 1]]);
        assert_eq!(comp![3].coarsenings(), vec![comp![3]]);
        assert_eq!(
            comp![1, 1, 1].coarsenings(),
            vec![comp![3], comp![2, 1], comp![1, 2], comp![1, 1, 1]]
        );
        assert_eq!(comp![2].refinements(), vec![comp![2], comp![1, 1]]);
        assert_eq!(comp![2, 1].refinements(), vec![comp![2, 1], comp![1, 1, 1]]);
        assert_eq!(comp![].refinements(), vec![comp![]]);
    }

    #[test]
    fn compositions_of_order_and_count() {
        assert_eq!(compositions_of(0).collect::<Vec<_>>(), vec![comp![]]);
        assert_eq!(
            compositions_of(2).collect::<Vec<_>>(),
            vec![comp![2], comp![1, 1]]
        );
        assert_eq!(
            compositions_of(3).collect::<Vec<_>>(),
            vec![comp![3], comp![2, 1], comp![1, 2], comp![1, 1, 1]]
        );
        assert_eq!(compositions_of(4).count(), 8);
        for n in 1..=10 {
            let all: Vec<_> = compositions_of(n).collect();
            assert_eq!(all.len(), 1 << (n - 1));
            assert!(all.windows(2).all(|w| w[0] < w[1]));
            assert!(all.iter().all(|c| c.size() == n));
        }
    }

    #[test]
    fn lex_leq_examples() {
        assert!(comp![1, 2].lex_leq(&comp![2, 1]));
        assert!(comp![2].lex_leq(&comp![2]));
        assert!(!comp![2, 1].lex_leq(&comp![1, 1, 1]));
        assert!(comp![2].lex_leq(&comp![2, 1]));
    }

    #[test]
    fn text_syntax() {
        assert_eq!("[2,1,3]".parse::<Composition>().unwrap(), comp![2, 1, 3]);
        assert_eq!(" [ 2 , 1 ] ".parse::<Composition>().unwrap(), comp![2, 1]);
        assert_eq!("[]".parse::<Composition>().unwrap(), comp![]);
        assert!("[0]".parse::<Composition>().is_err());
        assert!("2,1".parse::<Composition>().is_err());
        assert_eq!(comp![2, 1, 3].to_string(), "[2,1,3]");
        assert_eq!(comp![].to_string(), "[]");
    }

    #[test]
    fn serde_roundtrip_and_validation() {
        let c = comp![1, 2];
        let json = serde_json::to_string(&c).unwrap();
        assert_eq!(json, "[1,2]");
        assert_eq!(serde_json::from_str::<Composition>(&json).unwrap(), c);
        assert!(serde_json::from_str::<Composition>("[1,0]").is_err());
    }
}
