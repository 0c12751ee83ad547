//! Immaculate tableaux and the dual immaculate functions `𝔖*_α`.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::composition::{compositions_of, Composition};
use crate::dendriform::prec;
use crate::error::{Error, Result};
use crate::qsym::{h, QSymElem};

/// A filling of the diagram of a composition whose first column strictly
/// increases downwards and whose rows weakly increase left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ImmaculateTableau {
    shape: Composition,
    rows: Vec<Vec<u32>>,
}

impl ImmaculateTableau {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let shape = Composition::new(rows.iter().map(|r| r.len() as u32).collect())?;
        if rows.iter().flatten().any(|&x| x == 0) {
            return Err(Error::Malformed("tableau entries must be positive".into()));
        }
        if rows.iter().any(|r| r.windows(2).any(|w| w[0] > w[1])) {
            return Err(Error::Malformed("rows must weakly increase".into()));
        }
        if rows.windows(2).any(|w| w[0][0] >= w[1][0]) {
            return Err(Error::Malformed(
                "first column must strictly increase".into(),
            ));
        }
        Ok(Self { shape, rows })
    }

    pub fn shape(&self) -> &Composition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Exponent vector of `x_T = Π x_{T(i,j)}`, padded to length `n`.
    ///
    /// Panics if an entry exceeds `n`.
    pub fn weight(&self, n: usize) -> Vec<u32> {
        let mut exps = vec![0; n];
        for &x in self.rows.iter().flatten() {
            exps[x as usize - 1] += 1;
        }
        exps
    }

    /// The content `(#1, #2, …, #k)` if the entries are exactly `{1, …, k}`.
    pub fn content(&self) -> Option<Composition> {
        let max = self.rows.iter().flatten().copied().max().unwrap_or(0);
        let w = self.weight(max as usize);
        Composition::new(w).ok()
    }
}

/// All immaculate tableaux of shape `α` with entries in `{1, …, max_entry}`,
/// in lexicographic order of their rows.
pub fn enumerate_tableaux(
    alpha: &Composition,
    max_entry: u32,
) -> impl Iterator<Item = ImmaculateTableau> {
    fn weak_rows(len: u32, lo: u32, hi: u32) -> Vec<Vec<u32>> {
        if len == 0 {
            return vec![Vec::new()];
        }
        (lo..=hi)
            .flat_map(|x| {
                weak_rows(len - 1, x, hi).into_iter().map(move |mut rest| {
                    rest.insert(0, x);
                    rest
                })
            })
            .collect()
    }
    fn go(
        parts: &[u32],
        min_first: u32,
        max_entry: u32,
        acc: &mut Vec<Vec<u32>>,
        out: &mut Vec<ImmaculateTableau>,
    ) {
        let Some((&p, rest)) = parts.split_first() else {
            out.push(ImmaculateTableau {
                shape: Composition::new(acc.iter().map(|r| r.len() as u32).collect()).unwrap(),
                rows: acc.clone(),
            });
            return;
        };
        for first in min_first..=max_entry {
            for tail in weak_rows(p - 1, first, max_entry) {
                let mut row = vec![first];
                row.extend(tail);
                acc.push(row);
                go(rest, first + 1, max_entry, acc, out);
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(alpha.parts(), 1, max_entry, &mut Vec::new(), &mut out);
    out.into_iter()
}

/// `K_{α,β}`: the number of immaculate tableaux of shape `α` and content `β`.
///
/// Values are placed in increasing order. Because rows weakly increase, each
/// row is determined by how many copies of each value it holds, and the
/// first-column condition says rows receive their first entry in top-to-bottom
/// order, at most one new row per value.
pub fn count_tableaux(alpha: &Composition, beta: &Composition) -> BigInt {
    if alpha.size() != beta.size() {
        return BigInt::zero();
    }
    let cap = alpha.parts();
    let mut fill = vec![0u32; cap.len()];
    BigInt::from(count_from(cap, beta.parts(), &mut fill, 0))
}

fn count_from(cap: &[u32], values: &[u32], fill: &mut Vec<u32>, opened: usize) -> u64 {
    let Some((&copies, rest)) = values.split_first() else {
        return u64::from(opened == cap.len() && fill.iter().zip(cap).all(|(f, c)| f == c));
    };
    let mut total = 0;
    // Either no new row is opened by this value, or row `opened` is opened.
    for open_new in [false, true] {
        if open_new && opened == cap.len() {
            continue;
        }
        let rows = if open_new { opened + 1 } else { opened };
        total += distribute(cap, rest, fill, opened, rows, 0, copies, open_new);
    }
    total
}

#[allow(clippy::too_many_arguments)]
fn distribute(
    cap: &[u32],
    rest: &[u32],
    fill: &mut Vec<u32>,
    opened: usize,
    rows: usize,
    row: usize,
    left: u32,
    open_new: bool,
) -> u64 {
    if row == rows {
        return if left == 0 {
            count_from(cap, rest, fill, rows)
        } else {
            0
        };
    }
    let room = cap[row] - fill[row];
    // A newly opened row must actually receive this value.
    let min = if open_new && row == opened { 1 } else { 0 };
    let mut total = 0;
    for k in min..=room.min(left) {
        fill[row] += k;
        total += distribute(cap, rest, fill, opened, rows, row + 1, left - k, open_new);
        fill[row] -= k;
    }
    total
}

fn cache() -> &'static RwLock<HashMap<Composition, QSymElem>> {
    static CACHE: OnceLock<RwLock<HashMap<Composition, QSymElem>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `𝔖*_α = Σ_{β ⊨ |α|} K_{α,β} M_β`, memoized per `α`.
pub fn dual_immaculate_tableaux(alpha: &Composition) -> QSymElem {
    if let Some(hit) = cache().read().unwrap().get(alpha) {
        return hit.clone();
    }
    let value: QSymElem = compositions_of(alpha.size())
        .map(|beta| {
            let k = count_tableaux(alpha, &beta);
            (beta, k)
        })
        .collect();
    // First writer wins; later writers computed the same value anyway.
    cache()
        .write()
        .unwrap()
        .entry(alpha.clone())
        .or_insert(value)
        .clone()
}

/// `𝔖*_α = h_{α₁} ≺ (h_{α₂} ≺ (⋯ ≺ (h_{α_ℓ} ≺ 1)))`.
pub fn dual_immaculate_creation(alpha: &Composition) -> QSymElem {
    alpha
        .parts()
        .iter()
        .rev()
        .fold(QSymElem::one(), |acc, &p| prec(&h(p), &acc))
}
