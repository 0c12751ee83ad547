//! Text and JSON forms of elements.
//!
//! The text grammar is a signed sum of terms, each an optional integer
//! coefficient (optionally followed by `*`) and a basis-tagged index such as
//! `M[1,2]`, or a bare integer for a constant. Whitespace is ignored:
//! `"2*M[1,2] - F[3] + 5"`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::composition::Composition;
use crate::error::{Error, Result};
use crate::fqsym::g_basis;
use crate::qsym::{fundamental, m_to_f, QSymElem};
use crate::words::{PackedWord, Permutation};
use crate::wqsym::WQSymElem;

/// The basis used to read or print a QSym element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum QBasis {
    #[default]
    M,
    F,
}

impl QBasis {
    pub fn tag(self) -> &'static str {
        match self {
            QBasis::M => "M",
            QBasis::F => "F",
        }
    }
}

impl fmt::Display for QBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for QBasis {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "M" | "m" => Ok(QBasis::M),
            "F" | "f" => Ok(QBasis::F),
            _ => Err(Error::Parse(format!(
                "unknown basis `{s}`, expected M or F"
            ))),
        }
    }
}

/// One parsed term: coefficient and, unless constant, a basis tag with its index.
type RawTerm = (BigInt, Option<(char, Vec<u32>)>);

fn parse_terms(s: &str) -> Result<Vec<RawTerm>> {
    let text: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if text.is_empty() {
        return Err(Error::Parse("empty element".into()));
    }
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    let mut out = Vec::new();
    while i < chars.len() {
        let mut sign = BigInt::one();
        match chars[i] {
            '+' if !out.is_empty() => i += 1,
            '-' => {
                sign = -sign;
                i += 1;
            }
            _ if out.is_empty() => {}
            c => {
                return Err(Error::Parse(format!(
                    "expected `+` or `-` before `{c}` in `{text}`"
                )))
            }
        }
        let start = i;
        while i < chars.len() && chars[i].is_ascii_digit() {
            i += 1;
        }
        let coeff = if i > start {
            let digits: String = chars[start..i].iter().collect();
            digits
                .parse::<BigInt>()
                .map_err(|e| Error::Parse(e.to_string()))?
        } else {
            BigInt::one()
        };
        let has_star = i < chars.len() && chars[i] == '*';
        if has_star {
            i += 1;
        }
        if i < chars.len() && chars[i].is_ascii_alphabetic() {
            let tag = chars[i];
            i += 1;
            if i >= chars.len() || chars[i] != '[' {
                return Err(Error::Parse(format!(
                    "expected `[` after `{tag}` in `{text}`"
                )));
            }
            let close = chars[i..]
                .iter()
                .position(|&c| c == ']')
                .ok_or_else(|| Error::Parse(format!("unclosed `[` in `{text}`")))?
                + i;
            let inner: String = chars[i..=close].iter().collect();
            let index = crate::composition::parse_bracketed(&inner)?;
            i = close + 1;
            out.push((sign * coeff, Some((tag, index))));
        } else {
            if has_star || i == start {
                return Err(Error::Parse(format!(
                    "expected a term at position {start} of `{text}`"
                )));
            }
            out.push((sign * coeff, None));
        }
    }
    Ok(out)
}

/// Parses a QSym element; `M[..]` and `F[..]` terms may be mixed.
pub fn parse_qsym(s: &str) -> Result<QSymElem> {
    let mut out = QSymElem::zero();
    for (c, term) in parse_terms(s)? {
        let basis_elem = match term {
            None => QSymElem::one(),
            Some(('M', idx)) => QSymElem::basis(Composition::new(idx)?),
            Some(('F', idx)) => fundamental(&Composition::new(idx)?),
            Some((tag, _)) => return Err(Error::Parse(format!("unknown QSym basis `{tag}`"))),
        };
        out.add_scaled(&basis_elem, &c);
    }
    Ok(out)
}

/// Parses a WQSym element; `M[u]` takes a packed word, `G[σ]` a permutation.
pub fn parse_wqsym(s: &str) -> Result<WQSymElem> {
    let mut out = WQSymElem::zero();
    for (c, term) in parse_terms(s)? {
        let basis_elem = match term {
            None => WQSymElem::one(),
            Some(('M', idx)) => WQSymElem::basis(PackedWord::new(idx)?),
            Some(('G', idx)) => g_basis(&Permutation::new(idx)?),
            Some((tag, _)) => return Err(Error::Parse(format!("unknown WQSym basis `{tag}`"))),
        };
        out.add_scaled(&basis_elem, &c);
    }
    Ok(out)
}

/// Prints `f` in the requested basis, terms in canonical order.
pub fn to_text(f: &QSymElem, basis: QBasis) -> String {
    match basis {
        QBasis::M => f.to_string(),
        QBasis::F => m_to_f(f).to_string(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonTerm {
    pub comp: Composition,
    pub coeff: String,
}

/// `{"basis": "M"|"F", "terms": [{"comp": [...], "coeff": "<decimal>"}]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonElem {
    pub basis: String,
    pub terms: Vec<JsonTerm>,
}

pub fn to_json(f: &QSymElem, basis: QBasis) -> JsonElem {
    let terms = match basis {
        QBasis::M => f
            .terms()
            .map(|(a, c)| JsonTerm {
                comp: a.clone(),
                coeff: c.to_string(),
            })
            .collect(),
        QBasis::F => m_to_f(f)
            .terms()
            .map(|(a, c)| JsonTerm {
                comp: a.clone(),
                coeff: c.to_string(),
            })
            .collect(),
    };
    JsonElem {
        basis: basis.tag().to_string(),
        terms,
    }
}

pub fn from_json(j: &JsonElem) -> Result<QSymElem> {
    let basis: QBasis = j.basis.parse()?;
    let mut out = QSymElem::zero();
    for t in &j.terms {
        let c: BigInt = t
            .coeff
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad coefficient `{}`", t.coeff)))?;
        if c.is_zero() {
            continue;
        }
        let e = match basis {
            QBasis::M => QSymElem::basis(t.comp.clone()),
            QBasis::F => fundamental(&t.comp),
        };
        out.add_scaled(&e, &c);
    }
    Ok(out)
}

/// Reads an element given either as JSON (starting with `{`) or as text.
pub fn parse_qsym_any(s: &str) -> Result<QSymElem> {
    if s.trim_start().starts_with('{') {
        let j: JsonElem = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        from_json(&j)
    } else {
        parse_qsym(s)
    }
}
