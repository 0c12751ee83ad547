//! Words over the positive integers, packed words and permutations.
//!
//! All three are ordered by length first and then lexicographically.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::composition::{parse_bracketed, Composition};
use crate::error::{Error, Result};

/// A finite sequence of positive letters; letter `i` stands for `X_i`.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Word(Vec<u32>);

/// A word whose support is `{1, …, k}` for some `k ≥ 0`.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct PackedWord(Word);

/// A packed word with pairwise distinct letters.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Permutation(Word);

impl Word {
    pub fn new(letters: Vec<u32>) -> Result<Self> {
        if letters.contains(&0) {
            return Err(Error::Malformed(format!(
                "word {letters:?} has a zero letter"
            )));
        }
        Ok(Self(letters))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `min Supp w`, or `None` (standing for `+∞`) when `w` is empty.
    pub fn supp_min(&self) -> Option<u32> {
        self.0.iter().copied().min()
    }

    /// `max Supp w`, with 0 for the empty word.
    pub fn supp_max(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Self(letters)
    }

    /// `w^{+j}`: every letter increased by `j`.
    pub fn shift(&self, j: u32) -> Self {
        Self(self.0.iter().map(|&x| x + j).collect())
    }

    /// `w[:l]`.
    pub fn prefix(&self, l: usize) -> Self {
        Self(self.0[..l].to_vec())
    }

    /// `w[l:]`.
    pub fn suffix(&self, l: usize) -> Self {
        Self(self.0[l..].to_vec())
    }

    /// Relabels `Supp w` order-preservingly onto `{1, …, |Supp w|}`.
    pub fn pack(&self) -> PackedWord {
        let mut support = self.0.clone();
        support.sort_unstable();
        support.dedup();
        PackedWord(Self(
            self.0
                .iter()
                .map(|x| support.binary_search(x).unwrap() as u32 + 1)
                .collect(),
        ))
    }

    /// The standardization: letters ranked by value, ties broken left to right.
    pub fn std(&self) -> Permutation {
        let mut order: Vec<usize> = (0..self.0.len()).collect();
        order.sort_by_key(|&i| (self.0[i], i));
        let mut out = vec![0; self.0.len()];
        for (rank, &i) in order.iter().enumerate() {
            out[i] = rank as u32 + 1;
        }
        Permutation(Self(out))
    }

    /// The exponent sequence of the commutative image, read in increasing
    /// variable order; e.g. `X₂X₁X₃X₁ ↦ (2,1,1)`.
    pub fn parikh(&self) -> Composition {
        let mut support = self.0.clone();
        support.sort_unstable();
        let parts = support
            .chunk_by(|a, b| a == b)
            .map(|run| run.len() as u32)
            .collect();
        Composition::new(parts).unwrap()
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl PackedWord {
    pub fn new(letters: Vec<u32>) -> Result<Self> {
        let w = Word::new(letters)?;
        if w.pack() != PackedWord(w.clone()) {
            return Err(Error::Malformed(format!("word {w} is not packed")));
        }
        Ok(Self(w))
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn word(&self) -> &Word {
        &self.0
    }

    pub fn letters(&self) -> &[u32] {
        &self.0 .0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The number `k` of distinct letters, i.e. `max Supp u`.
    pub fn max_letter(&self) -> u32 {
        self.0.supp_max()
    }

    /// All packed words of length `n`, in canonical order.
    pub fn all_of_length(n: usize) -> Vec<PackedWord> {
        let mut out = Vec::new();
        let mut buf = Vec::with_capacity(n);
        fn go(n: usize, buf: &mut Vec<u32>, out: &mut Vec<PackedWord>) {
            if buf.len() == n {
                let w = Word(buf.clone());
                if w.pack().0 == w {
                    out.push(PackedWord(w));
                }
                return;
            }
            // A packed word of length n uses letters ≤ n.
            for x in 1..=n as u32 {
                buf.push(x);
                go(n, buf, out);
                buf.pop();
            }
        }
        go(n, &mut buf, &mut out);
        out.sort();
        out
    }
}

impl Permutation {
    pub fn new(letters: Vec<u32>) -> Result<Self> {
        let w = Word::new(letters)?;
        if w.std().0 != w {
            return Err(Error::Malformed(format!("word {w} is not a permutation")));
        }
        Ok(Self(w))
    }

    pub fn identity(n: u32) -> Self {
        Self(Word((1..=n).collect()))
    }

    /// `(n, n−1, …, 1)`.
    pub fn reversal(n: u32) -> Self {
        Self(Word((1..=n).rev().collect()))
    }

    pub fn word(&self) -> &Word {
        &self.0
    }

    pub fn letters(&self) -> &[u32] {
        &self.0 .0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_packed(&self) -> PackedWord {
        PackedWord(self.0.clone())
    }

    /// All permutations of `{1, …, n}` in lexicographic order.
    pub fn all_of_length(n: usize) -> Vec<Permutation> {
        use itertools::Itertools;
        (1..=n as u32)
            .permutations(n)
            .map(|p| Permutation(Word(p)))
            .collect()
    }
}

macro_rules! word_like_impls {
    ($t:ty) => {
        impl fmt::Display for $t {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                let parts: Vec<String> = self.letters().iter().map(u32::to_string).collect();
                write!(f, "[{}]", parts.join(","))
            }
        }

        impl fmt::Debug for $t {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                fmt::Display::fmt(self, f)
            }
        }

        impl FromStr for $t {
            type Err = Error;
            fn from_str(s: &str) -> Result<Self> {
                Self::new(parse_bracketed(s)?)
            }
        }

        impl TryFrom<Vec<u32>> for $t {
            type Error = Error;
            fn try_from(v: Vec<u32>) -> Result<Self> {
                Self::new(v)
            }
        }

        impl From<$t> for Vec<u32> {
            fn from(w: $t) -> Vec<u32> {
                w.letters().to_vec()
            }
        }
    };
}

word_like_impls!(Word);
word_like_impls!(PackedWord);
word_like_impls!(Permutation);
