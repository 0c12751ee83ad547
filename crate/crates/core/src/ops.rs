//! Names of the binary operations shared by QSym, WQSym and the oracles.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A binary operation, identified by the Supp condition under which the
/// monomial product `m·n` is kept.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Op {
    /// The full product.
    Mul,
    /// `≺`: `min Supp m < min Supp n`.
    Prec,
    /// `⪰`: `min Supp m ≥ min Supp n`.
    Succeq,
    /// `⪯`: `min Supp m ≤ min Supp n`.
    Preceq,
    /// `≻`: `min Supp m > min Supp n`.
    Succ,
    /// `∘`: `min Supp m = min Supp n`.
    Circ,
    /// `▷`: `max Supp m ≤ min Supp n`.
    Belg,
    /// `⋖`: `max Supp m < min Supp n`.
    Tvim,
}

impl Op {
    pub const ALL: [Op; 8] = [
        Op::Mul,
        Op::Prec,
        Op::Succeq,
        Op::Preceq,
        Op::Succ,
        Op::Circ,
        Op::Belg,
        Op::Tvim,
    ];

    /// The operations defined on QSym (everything except `∘`).
    pub const QSYM: [Op; 7] = [
        Op::Mul,
        Op::Prec,
        Op::Succeq,
        Op::Preceq,
        Op::Succ,
        Op::Belg,
        Op::Tvim,
    ];

    /// The operations that are computed term-by-term on WQSym.
    pub const WQSYM: [Op; 5] = [Op::Prec, Op::Circ, Op::Succ, Op::Belg, Op::Tvim];

    pub fn name(self) -> &'static str {
        match self {
            Op::Mul => "mul",
            Op::Prec => "prec",
            Op::Succeq => "succeq",
            Op::Preceq => "preceq",
            Op::Succ => "succ",
            Op::Circ => "circ",
            Op::Belg => "belg",
            Op::Tvim => "tvim",
        }
    }

    /// Whether the product of monomials with the given supports survives.
    ///
    /// `min_*` is `None` for an empty support (read as `+∞`); `max_m` is 0 for
    /// an empty support.
    pub fn keeps(self, min_m: Option<u32>, max_m: u32, min_n: Option<u32>) -> bool {
        let lt = |a: Option<u32>, b: Option<u32>| match (a, b) {
            (Some(a), Some(b)) => a < b,
            (Some(_), None) => true,
            (None, _) => false,
        };
        match self {
            Op::Mul => true,
            Op::Prec => lt(min_m, min_n),
            Op::Succeq => !lt(min_m, min_n),
            Op::Preceq => !lt(min_n, min_m),
            Op::Succ => lt(min_n, min_m),
            Op::Circ => min_m == min_n,
            Op::Belg => min_n.is_none_or(|b| max_m <= b),
            Op::Tvim => min_n.is_none_or(|b| max_m < b),
        }
    }
}

impl fmt::Display for Op {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Op {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Op::ALL
            .into_iter()
            .find(|op| op.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown operation `{s}`")))
    }
}
