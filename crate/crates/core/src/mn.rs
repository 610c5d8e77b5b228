//! Murnaghan-Nakayama evaluation of irreducible characters of `S_n`.
//!
//! `chi_lambda(mu)` is computed by peeling off the largest part `r` of `mu`
//! and summing, over all border strips of length `r` in `lambda`, the signed
//! value of the smaller character on the remaining cycle type. Border strips
//! are found on the beta-set (first-column hook lengths) of `lambda`: a strip
//! of length `r` is a bead that can slide `r` positions down onto an empty
//! position, and its height is one more than the number of beads jumped.

use std::collections::HashMap;
use std::sync::OnceLock;

use dashmap::DashMap;
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};

/// An exact character value.
pub type CharValue = BigInt;

/// Result of removing one border strip (rim hook) from a diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RimHookRemoval {
    pub remaining: Partition,
    /// Number of rows the strip meets.
    pub height: usize,
    /// `(-1)^(height - 1)`.
    pub sign: i32,
}

/// Hook length of the cell in `row`, `col` (both 0-based).
pub fn hook_length(p: &Partition, row: usize, col: usize) -> Result<usize> {
    if row >= p.len() || col >= p.part(row) {
        return Err(Error::CellOutside {
            partition: p.to_string(),
            row,
            col,
        });
    }
    let arm = p.part(row) - col - 1;
    let leg = p.parts()[row + 1..].iter().take_while(|&&q| q > col).count();
    Ok(arm + leg + 1)
}

fn beta_set(p: &Partition) -> Vec<usize> {
    let len = p.len();
    p.parts()
        .iter()
        .enumerate()
        .map(|(i, &part)| part + len - 1 - i)
        .collect()
}

fn from_beta_set(beta: &[usize]) -> Partition {
    let len = beta.len();
    let parts = beta
        .iter()
        .enumerate()
        .map(|(i, &b)| b - (len - 1 - i))
        .filter(|&part| part > 0)
        .collect();
    Partition::from_sorted(parts)
}

/// All border strips of the given length, ordered by ascending row of the
/// cell whose hook they correspond to.
pub fn border_strip_removals(p: &Partition, length: usize) -> Vec<RimHookRemoval> {
    if length == 0 {
        return Vec::new();
    }
    let beta = beta_set(p);
    let mut out = Vec::new();
    for (row, &b) in beta.iter().enumerate() {
        if b < length {
            continue;
        }
        let target = b - length;
        if beta.contains(&target) {
            continue;
        }
        // beta is strictly decreasing, so the jumped beads sit right after `row`
        let jumped = beta[row + 1..].iter().take_while(|&&x| x > target).count();
        let mut moved: Vec<usize> = beta.clone();
        moved[row] = target;
        moved.sort_unstable_by(|a, c| c.cmp(a));
        let height = jumped + 1;
        out.push(RimHookRemoval {
            remaining: from_beta_set(&moved),
            height,
            sign: if jumped % 2 == 0 { 1 } else { -1 },
        });
    }
    out
}

/// Memoizing Murnaghan-Nakayama evaluator.
///
/// The memo is a grow-only concurrent map keyed on `(lambda, mu)`; it is safe
/// to share one engine between threads. Racing inserts of the same key store
/// equal values.
#[derive(Default)]
pub struct MnEngine {
    memo: DashMap<(Partition, Partition), BigInt>,
}

impl MnEngine {
    pub fn new() -> Self {
        Self::default()
    }

    /// Process-wide engine used by the free functions of this module.
    pub fn global() -> &'static MnEngine {
        static ENGINE: OnceLock<MnEngine> = OnceLock::new();
        ENGINE.get_or_init(MnEngine::new)
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    pub fn clear(&self) {
        self.memo.clear();
    }

    /// `chi_lambda(w_mu)`.
    pub fn char_value(&self, lambda: &Partition, mu: &Partition) -> Result<CharValue> {
        if lambda.size() != mu.size() {
            return Err(Error::SizeMismatch(lambda.size(), mu.size()));
        }
        Ok(self.eval(lambda, mu))
    }

    fn eval(&self, lambda: &Partition, mu: &Partition) -> BigInt {
        if mu.is_empty() {
            return BigInt::one();
        }
        if mu.len() == 1 {
            // one strip covering the whole diagram: only hooks survive
            return if lambda.is_hook() {
                if (lambda.len() - 1) % 2 == 0 {
                    BigInt::one()
                } else {
                    -BigInt::one()
                }
            } else {
                BigInt::zero()
            };
        }
        let key = (lambda.clone(), mu.clone());
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let rest = mu.without_first();
        let mut total = BigInt::zero();
        for removal in border_strip_removals(lambda, mu.part(0)) {
            let v = self.eval(&removal.remaining, &rest);
            if removal.sign > 0 {
                total += v;
            } else {
                total -= v;
            }
        }
        self.memo.insert(key, total.clone());
        total
    }

    /// `chi_lambda(1)`.
    pub fn degree(&self, lambda: &Partition) -> BigUint {
        let v = self.eval(lambda, &Partition::column(lambda.size()));
        v.to_biguint().expect("character degree is positive")
    }

    /// Builds the full table for `S_n` using `workers` threads. The result
    /// does not depend on `workers`.
    pub fn table(&self, n: usize, workers: usize) -> Result<CharTable> {
        if n == 0 {
            return Err(Error::OutOfRange("character table needs n >= 1".into()));
        }
        let order = partitions_of(n);
        let dim = order.len();
        let cell = |idx: usize| self.eval(&order[idx / dim], &order[idx % dim]);
        let values: Vec<BigInt> = if workers <= 1 {
            (0..dim * dim).map(cell).collect()
        } else {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(workers)
                .build()
                .map_err(|e| Error::Inconsistent(format!("thread pool: {e}")))?;
            pool.install(|| (0..dim * dim).into_par_iter().map(cell).collect())
        };
        CharTable::from_parts(n, order, values)
    }
}

/// `chi_lambda(w_mu)` using the process-wide memo.
pub fn mn_char(lambda: &Partition, mu: &Partition) -> Result<CharValue> {
    MnEngine::global().char_value(lambda, mu)
}

pub fn degree(lambda: &Partition) -> BigUint {
    MnEngine::global().degree(lambda)
}

/// Value of the sign character on the class `mu`.
pub fn sign_value(mu: &Partition) -> i32 {
    mu.sign()
}

/// Full character table of `S_n` on all available cores.
pub fn character_table(n: usize) -> Result<CharTable> {
    MnEngine::global().table(n, rayon::current_num_threads())
}

/// Square table of exact character values. Rows are irreducibles, columns
/// classes, both in canonical partition order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharTable {
    n: usize,
    order: Vec<Partition>,
    values: Vec<BigInt>,
    index: HashMap<Partition, usize>,
}

impl CharTable {
    /// Assembles a table from row-major values. `order` must be the
    /// canonical list of partitions of `n`.
    pub fn from_parts(n: usize, order: Vec<Partition>, values: Vec<BigInt>) -> Result<Self> {
        if order != partitions_of(n) {
            return Err(Error::Inconsistent(format!(
                "row/column order is not the canonical order for n = {n}"
            )));
        }
        if values.len() != order.len() * order.len() {
            return Err(Error::Inconsistent(format!(
                "expected {} values, got {}",
                order.len() * order.len(),
                values.len()
            )));
        }
        let index = order.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        Ok(CharTable {
            n,
            order,
            values,
            index,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> &[Partition] {
        &self.order
    }

    /// Number of rows (= number of columns = p(n)).
    pub fn dim(&self) -> usize {
        self.order.len()
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// Value at row `i`, column `j`.
    pub fn at(&self, i: usize, j: usize) -> &BigInt {
        &self.values[i * self.dim() + j]
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        let d = self.dim();
        &self.values[i * d..(i + 1) * d]
    }

    pub fn get(&self, lambda: &Partition, mu: &Partition) -> Result<&BigInt> {
        let i = self.require(lambda)?;
        let j = self.require(mu)?;
        Ok(self.at(i, j))
    }

    pub(crate) fn require(&self, p: &Partition) -> Result<usize> {
        self.index_of(p)
            .ok_or_else(|| Error::SizeMismatch(p.size(), self.n))
    }

    /// Degree of the `i`-th irreducible (value at the identity column).
    pub fn degree_at(&self, i: usize) -> &BigInt {
        self.at(i, self.dim() - 1)
    }

    /// Largest absolute value in the table.
    pub fn max_abs(&self) -> BigInt {
        self.values.iter().map(|v| v.abs()).max().unwrap_or_default()
    }
}
