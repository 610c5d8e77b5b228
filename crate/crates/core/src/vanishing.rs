//! Vanishing classes and covering pairs.
//!
//! A pair of classes `{mu, nu}` *covers* `S_n` when every non-linear
//! irreducible character is zero on `mu` or on `nu`. For `n > 6` the only
//! covering pair is `{(n), (n-1, 1)}`.

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::class_algebra::merge_lemma_check;
use crate::error::{Error, Result};
use crate::mn::CharTable;
use crate::partition::Partition;

/// Unordered pair of classes, `first` not after `second` in canonical order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CoveringPair {
    pub first: Partition,
    pub second: Partition,
}

impl CoveringPair {
    pub fn new(a: Partition, b: Partition) -> Self {
        if a <= b {
            CoveringPair { first: a, second: b }
        } else {
            CoveringPair { first: b, second: a }
        }
    }

    /// Both members are the same class.
    pub fn is_degenerate(&self) -> bool {
        self.first == self.second
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PruningStats {
    /// Unordered pairs considered, including `mu = nu`.
    pub examined: u64,
    pub pruned_parity: u64,
    pub pruned_merge: u64,
    /// Pairs that went through the full table check.
    pub fully_checked: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoveringPairReport {
    pub n: usize,
    /// Sorted canonically.
    pub pairs: Vec<CoveringPair>,
    /// 1 if a single class covers, 2 if only pairs do, `None` if neither.
    pub k_value: Option<usize>,
    /// Whether `pairs == {{(n), (n-1,1)}}`; only defined for `n > 6`.
    pub matches_theorem: Option<bool>,
    pub pruning_stats: PruningStats,
    /// No non-linear characters exist (`n <= 2`), so every pair covers.
    pub vacuous: bool,
}

impl CoveringPairReport {
    pub fn degenerate_count(&self) -> usize {
        self.pairs.iter().filter(|p| p.is_degenerate()).count()
    }
}

/// Classes on which `chi_lambda` is zero, in canonical order.
pub fn vanishing_set(lambda: &Partition, table: &CharTable) -> Result<Vec<Partition>> {
    let i = table.require(lambda)?;
    Ok(table
        .row(i)
        .iter()
        .zip(table.order())
        .filter(|(v, _)| v.is_zero())
        .map(|(_, mu)| mu.clone())
        .collect())
}

/// Rows of non-linear characters. Linearity is decided both by shape and by
/// degree; a disagreement means the table is wrong.
pub fn nonlinear_rows(table: &CharTable) -> Result<Vec<usize>> {
    let n = table.n();
    let (trivial, sign) = (Partition::row(n), Partition::column(n));
    let mut rows = Vec::new();
    for (i, lambda) in table.order().iter().enumerate() {
        let by_shape = *lambda == trivial || *lambda == sign;
        let by_degree = table.degree_at(i).is_one();
        if by_shape != by_degree {
            return Err(Error::Inconsistent(format!(
                "{lambda} has degree {} but linear-by-shape = {by_shape}",
                table.degree_at(i)
            )));
        }
        if !by_shape {
            rows.push(i);
        }
    }
    Ok(rows)
}

fn covers_by_index(table: &CharTable, rows: &[usize], jm: usize, jn: usize) -> bool {
    rows.iter()
        .all(|&i| table.at(i, jm).is_zero() || table.at(i, jn).is_zero())
}

/// Every non-linear irreducible vanishes on `mu` or on `nu`.
pub fn covers_all_nonlinear(mu: &Partition, nu: &Partition, table: &CharTable) -> Result<bool> {
    if mu.size() != nu.size() {
        return Err(Error::SizeMismatch(mu.size(), nu.size()));
    }
    let (jm, jn) = (table.require(mu)?, table.require(nu)?);
    let rows = nonlinear_rows(table)?;
    Ok(covers_by_index(table, &rows, jm, jn))
}

enum Verdict {
    Covering,
    NotCovering,
    PrunedParity,
    PrunedMerge,
}

/// Searches all unordered pairs (including `mu = nu`) of classes of `S_n`.
///
/// With `use_pruning`, pairs of equal parity and pairs not related by a
/// merge of two parts are skipped when `n > 6`. Both modes return the same
/// pairs.
pub fn find_covering_pairs(n: usize, table: &CharTable, use_pruning: bool) -> Result<CoveringPairReport> {
    if table.n() != n {
        return Err(Error::SizeMismatch(n, table.n()));
    }
    let rows = nonlinear_rows(table)?;
    let order = table.order();
    let dim = table.dim();
    let prune = use_pruning && n > 6;

    let verdicts: Vec<(usize, usize, Verdict)> = (0..dim)
        .into_par_iter()
        .flat_map_iter(|i| (i..dim).map(move |j| (i, j)))
        .map(|(i, j)| {
            let (mu, nu) = (&order[i], &order[j]);
            let verdict = if prune && mu.sign() * nu.sign() != -1 {
                Verdict::PrunedParity
            } else if prune
                && !(merge_lemma_check(mu, nu).unwrap_or(false)
                    || merge_lemma_check(nu, mu).unwrap_or(false))
            {
                Verdict::PrunedMerge
            } else if covers_by_index(table, &rows, i, j) {
                Verdict::Covering
            } else {
                Verdict::NotCovering
            };
            (i, j, verdict)
        })
        .collect();

    let mut stats = PruningStats::default();
    let mut pairs = Vec::new();
    for (i, j, verdict) in verdicts {
        stats.examined += 1;
        match verdict {
            Verdict::PrunedParity => stats.pruned_parity += 1,
            Verdict::PrunedMerge => stats.pruned_merge += 1,
            Verdict::NotCovering => stats.fully_checked += 1,
            Verdict::Covering => {
                stats.fully_checked += 1;
                pairs.push(CoveringPair::new(order[i].clone(), order[j].clone()));
            }
        }
    }
    pairs.sort();

    let single = (0..dim).any(|j| covers_by_index(table, &rows, j, j));
    let k_value = if single {
        Some(1)
    } else if !pairs.is_empty() {
        Some(2)
    } else {
        None
    };
    let matches_theorem = (n > 6).then(|| pairs == theorem_pairs(n));
    Ok(CoveringPairReport {
        n,
        pairs,
        k_value,
        matches_theorem,
        pruning_stats: stats,
        vacuous: rows.is_empty(),
    })
}

/// `{{(n), (n-1, 1)}}`.
pub fn theorem_pairs(n: usize) -> Vec<CoveringPair> {
    if n < 2 {
        return Vec::new();
    }
    vec![CoveringPair::new(
        Partition::row(n),
        Partition::from_sorted(vec![n - 1, 1]),
    )]
}

/// Least number of classes (1 or 2) covering every non-linear character.
pub fn k_of_sn(n: usize, table: &CharTable) -> Result<usize> {
    if n < 3 {
        return Err(Error::OutOfRange(format!("S_{n} has no non-linear characters")));
    }
    let report = find_covering_pairs(n, table, true)?;
    report.k_value.ok_or_else(|| {
        Error::Inconsistent(format!("no covering class or pair of classes found for S_{n}"))
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremCheck {
    pub holds: bool,
    /// Covering pairs other than `{(n), (n-1,1)}`.
    pub extra: Vec<CoveringPair>,
    /// Expected pairs that were not found.
    pub missing: Vec<CoveringPair>,
}

/// Checks that `{(n), (n-1,1)}` is the only covering pair. Defined for
/// `n > 6` only.
pub fn verify_main_theorem(n: usize, table: &CharTable) -> Result<TheoremCheck> {
    if n <= 6 {
        return Err(Error::OutOfRange(format!(
            "the classification applies to n > 6, got n = {n}"
        )));
    }
    let found = find_covering_pairs(n, table, true)?.pairs;
    let expected = theorem_pairs(n);
    let extra: Vec<_> = found.iter().filter(|p| !expected.contains(p)).cloned().collect();
    let missing: Vec<_> = expected.iter().filter(|p| !found.contains(p)).cloned().collect();
    Ok(TheoremCheck {
        holds: extra.is_empty() && missing.is_empty(),
        extra,
        missing,
    })
}
