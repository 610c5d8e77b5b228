//! Invariant suites run by `symchar verify`.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::cache::TableCache;
use crate::class_algebra::{
    count_factorizations, merge_lemma_check, predicted_coefficient, sample_triples, structure_constant,
    structure_constant_bruteforce, transposition_class, Permutation, Predicted,
};
use crate::error::{Error, Result};
use crate::formula::{hook_char_recursive, near_hook_value, two_row_char_recursive, NearHookShape};
use crate::mn::{CharTable, MnEngine};
use crate::partition::{factorial, partitions_of, Partition};
use crate::vanishing::{find_covering_pairs, nonlinear_rows, vanishing_set, verify_main_theorem};

/// Triples sampled per `n` above the exhaustive range.
pub const SAMPLED_TRIPLES: usize = 200;
pub const SAMPLE_SEED: u64 = 0x5eed_c1a5;
/// Largest `n` for which all class triples are brute-forced.
pub const EXHAUSTIVE_TRIPLES_MAX_N: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Theorem,
    Orthogonality,
    Formulas,
    Structure,
    All,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "theorem" => Suite::Theorem,
            "orthogonality" => Suite::Orthogonality,
            "formulas" => Suite::Formulas,
            "structure" => Suite::Structure,
            "all" => Suite::All,
            _ => return Err(Error::OutOfRange(format!("unknown suite {s:?}"))),
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Suite::Theorem => "theorem",
            Suite::Orthogonality => "orthogonality",
            Suite::Formulas => "formulas",
            Suite::Structure => "structure",
            Suite::All => "all",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug)]
pub struct CheckOutcome {
    pub suite: Suite,
    pub name: String,
    pub n: usize,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

pub struct SuiteRunner<'a> {
    pub engine: &'a MnEngine,
    pub cache: Option<TableCache>,
    pub workers: usize,
    pub brute_force_limit: usize,
}

type Check = std::result::Result<String, String>;

impl SuiteRunner<'_> {
    fn table(&self, n: usize) -> Result<CharTable> {
        match &self.cache {
            Some(c) => c.load_or_build(self.engine, n, self.workers),
            None => self.engine.table(n, self.workers),
        }
    }

    pub fn run(&self, suite: Suite, n_min: usize, n_max: usize) -> Result<Vec<CheckOutcome>> {
        if n_min == 0 || n_min > n_max {
            return Err(Error::OutOfRange(format!("invalid range {n_min}..={n_max}")));
        }
        let suites = match suite {
            Suite::All => vec![Suite::Orthogonality, Suite::Formulas, Suite::Structure, Suite::Theorem],
            s => vec![s],
        };
        let mut out = Vec::new();
        for s in suites {
            for n in n_min..=n_max {
                let table = self.table(n)?;
                for (name, check) in self.checks_for(s, n) {
                    let start = Instant::now();
                    let result = check(self, &table);
                    let (passed, detail) = match result {
                        Ok(d) => (true, d),
                        Err(d) => (false, d),
                    };
                    out.push(CheckOutcome {
                        suite: s,
                        name: name.to_string(),
                        n,
                        passed,
                        detail,
                        elapsed: start.elapsed(),
                    });
                }
            }
        }
        Ok(out)
    }

    #[allow(clippy::type_complexity)]
    fn checks_for(&self, suite: Suite, n: usize) -> Vec<(&'static str, fn(&Self, &CharTable) -> Check)> {
        let mut v: Vec<(&'static str, fn(&Self, &CharTable) -> Check)> = Vec::new();
        match suite {
            Suite::Orthogonality => {
                v.push(("column orthogonality", |_, t| column_orthogonality(t)));
                v.push(("row orthogonality", |_, t| row_orthogonality(t)));
            }
            Suite::Formulas => {
                v.push(("near-hook closed forms", |_, t| near_hook_agreement(t)));
                v.push(("hook and two-row recursions", |_, t| recursion_agreement(t)));
            }
            Suite::Structure => {
                if n <= self.brute_force_limit {
                    v.push(("character sum = brute force", |s, t| oracle_equivalence(t, s.brute_force_limit)));
                }
                if n <= EXHAUSTIVE_TRIPLES_MAX_N {
                    v.push(("symmetry and parity", |_, t| symmetry_and_parity(t)));
                    v.push(("representative independence", |s, t| representative_independence(t, s.brute_force_limit)));
                }
                if n >= 2 {
                    v.push(("merge lemma", |_, t| merge_lemma(t)));
                }
                if n > 6 {
                    v.push(("predicted coefficient", |_, t| predicted_coefficients(t)));
                }
            }
            Suite::Theorem => {
                if n > 6 {
                    v.push(("covering pairs = {(n),(n-1,1)}", |_, t| theorem(t)));
                    v.push(("pruned = unpruned", |_, t| pruning_consistency(t)));
                }
                if n >= 3 {
                    v.push(("k(S_n)", |_, t| k_value(t)));
                    v.push(("every non-linear character has a zero", |_, t| burnside_zeros(t)));
                }
            }
            Suite::All => unreachable!(),
        }
        v
    }
}

fn fmt_pass(msg: impl Into<String>) -> Check {
    Ok(msg.into())
}

pub fn column_orthogonality(t: &CharTable) -> Check {
    let d = t.dim();
    for a in 0..d {
        for b in a..d {
            let s: BigInt = (0..d).map(|i| t.at(i, a) * t.at(i, b)).sum();
            let expected = if a == b {
                BigInt::from(t.order()[a].centralizer_order())
            } else {
                BigInt::zero()
            };
            if s != expected {
                return Err(format!(
                    "columns {} and {}: sum {s}, expected {expected}",
                    t.order()[a],
                    t.order()[b]
                ));
            }
        }
    }
    fmt_pass(format!("{d} columns"))
}

pub fn row_orthogonality(t: &CharTable) -> Check {
    let d = t.dim();
    let sizes: Vec<BigInt> = t.order().iter().map(|mu| BigInt::from(mu.class_size())).collect();
    let order = BigInt::from(factorial(t.n()));
    for a in 0..d {
        for b in a..d {
            let s: BigInt = (0..d).map(|j| &sizes[j] * t.at(a, j) * t.at(b, j)).sum();
            let expected = if a == b { order.clone() } else { BigInt::zero() };
            if s != expected {
                return Err(format!(
                    "rows {} and {}: sum {s}, expected {expected}",
                    t.order()[a],
                    t.order()[b]
                ));
            }
        }
    }
    fmt_pass(format!("{d} rows"))
}

pub fn near_hook_agreement(t: &CharTable) -> Check {
    let n = t.n();
    let mut checked = 0;
    for shape in NearHookShape::ALL {
        let Ok(lambda) = shape.partition(n) else { continue };
        for mu in t.order() {
            let f = near_hook_value(shape, mu).map_err(|e| e.to_string())?;
            let m = t.get(&lambda, mu).map_err(|e| e.to_string())?;
            if &f != m {
                return Err(format!("{shape} at {mu}: formula {f}, table {m}"));
            }
            checked += 1;
        }
    }
    fmt_pass(format!("{checked} values"))
}

pub fn recursion_agreement(t: &CharTable) -> Check {
    let n = t.n();
    let mut checked = 0;
    for mu in t.order() {
        for k in 0..n {
            let lambda = Partition::hook(n, k).map_err(|e| e.to_string())?;
            let r = hook_char_recursive(k, mu).map_err(|e| e.to_string())?;
            let m = t.get(&lambda, mu).map_err(|e| e.to_string())?;
            if &r != m {
                return Err(format!("hook {lambda} at {mu}: recursion {r}, table {m}"));
            }
            checked += 1;
        }
        for k in 0..=n / 2 {
            let lambda = Partition::two_row(n, k).map_err(|e| e.to_string())?;
            let r = two_row_char_recursive(k, mu).map_err(|e| e.to_string())?;
            let m = t.get(&lambda, mu).map_err(|e| e.to_string())?;
            if &r != m {
                return Err(format!("two-row {lambda} at {mu}: recursion {r}, table {m}"));
            }
            checked += 1;
        }
    }
    fmt_pass(format!("{checked} values"))
}

/// Triples covered by the oracle check at this `n`: all of them up to
/// [`EXHAUSTIVE_TRIPLES_MAX_N`], a fixed sample above.
pub fn oracle_triples(n: usize) -> Vec<(Partition, Partition, Partition)> {
    if n <= EXHAUSTIVE_TRIPLES_MAX_N {
        let ps = partitions_of(n);
        let mut out = Vec::new();
        for a in &ps {
            for b in &ps {
                for c in &ps {
                    out.push((a.clone(), b.clone(), c.clone()));
                }
            }
        }
        out
    } else {
        sample_triples(n, SAMPLED_TRIPLES, SAMPLE_SEED)
    }
}

pub fn oracle_equivalence(t: &CharTable, limit: usize) -> Check {
    let triples = oracle_triples(t.n());
    for (mu, nu, gamma) in &triples {
        let a = structure_constant(mu, nu, gamma, t).map_err(|e| e.to_string())?;
        let b = structure_constant_bruteforce(mu, nu, gamma, limit).map_err(|e| e.to_string())?;
        if a != b {
            return Err(format!("a({mu},{nu};{gamma}): character sum {a}, brute force {b}"));
        }
    }
    fmt_pass(format!("{} triples", triples.len()))
}

pub fn symmetry_and_parity(t: &CharTable) -> Check {
    let ps = t.order();
    for mu in ps {
        for nu in ps {
            for gamma in ps {
                let a = structure_constant(mu, nu, gamma, t).map_err(|e| e.to_string())?;
                let b = structure_constant(nu, mu, gamma, t).map_err(|e| e.to_string())?;
                if a != b {
                    return Err(format!("a({mu},{nu};{gamma}) = {a} but swapped gives {b}"));
                }
                if mu.sign() * nu.sign() != gamma.sign() && !a.is_zero() {
                    return Err(format!("a({mu},{nu};{gamma}) = {a} violates parity"));
                }
            }
        }
    }
    fmt_pass(format!("{} triples", ps.len().pow(3)))
}

/// Brute-force count with the canonical representative of `gamma` against a
/// conjugate of it by the reversal permutation.
pub fn representative_independence(t: &CharTable, limit: usize) -> Check {
    let n = t.n();
    if n > limit {
        return Err(format!("n = {n} beyond brute-force limit {limit}"));
    }
    let reversal = Permutation::from_images((0..n).rev().collect()).map_err(|e| e.to_string())?;
    let triples = sample_triples(n, 40, SAMPLE_SEED);
    for (mu, nu, gamma) in &triples {
        let g = Permutation::canonical(gamma);
        let h = g.conjugate_by(&reversal);
        let a = count_factorizations(mu, nu, &g).map_err(|e| e.to_string())?;
        let b = count_factorizations(mu, nu, &h).map_err(|e| e.to_string())?;
        if a != b {
            return Err(format!("{mu},{nu} at {g}: {a}, at {h}: {b}"));
        }
    }
    fmt_pass(format!("{} triples", triples.len()))
}

pub fn merge_lemma(t: &CharTable) -> Check {
    let tr = transposition_class(t.n()).map_err(|e| e.to_string())?;
    let ps = t.order();
    let mut positive = 0;
    for (i, mu) in ps.iter().enumerate() {
        for nu in &ps[i + 1..] {
            let a = structure_constant(mu, nu, &tr, t).map_err(|e| e.to_string())?;
            if a.is_zero() {
                continue;
            }
            positive += 1;
            let ok = merge_lemma_check(mu, nu).map_err(|e| e.to_string())?
                || merge_lemma_check(nu, mu).map_err(|e| e.to_string())?;
            if !ok {
                return Err(format!("a({mu},{nu};{tr}) = {a} but neither merges into the other"));
            }
        }
    }
    fmt_pass(format!("{positive} pairs with positive coefficient"))
}

pub fn predicted_coefficients(t: &CharTable) -> Check {
    let report = find_covering_pairs(t.n(), t, true).map_err(|e| e.to_string())?;
    for pair in &report.pairs {
        for gamma in t.order() {
            let actual = structure_constant(&pair.first, &pair.second, gamma, t).map_err(|e| e.to_string())?;
            match predicted_coefficient(&pair.first, &pair.second, gamma, t).map_err(|e| e.to_string())? {
                Predicted::Value(v) if v == actual => {}
                other => {
                    return Err(format!(
                        "pair {},{} at {gamma}: predicted {other:?}, actual {actual}",
                        pair.first, pair.second
                    ))
                }
            }
        }
    }
    fmt_pass(format!("{} covering pairs", report.pairs.len()))
}

pub fn theorem(t: &CharTable) -> Check {
    let check = verify_main_theorem(t.n(), t).map_err(|e| e.to_string())?;
    if check.holds {
        fmt_pass("exactly one covering pair")
    } else {
        Err(format!("extra: {:?}, missing: {:?}", check.extra, check.missing))
    }
}

pub fn pruning_consistency(t: &CharTable) -> Check {
    let a = find_covering_pairs(t.n(), t, true).map_err(|e| e.to_string())?;
    let b = find_covering_pairs(t.n(), t, false).map_err(|e| e.to_string())?;
    if a.pairs != b.pairs {
        return Err(format!("pruned {:?} vs unpruned {:?}", a.pairs, b.pairs));
    }
    if a.pairs.iter().any(|p| p.first.sign() * p.second.sign() != -1) {
        return Err("covering pair of equal parity".into());
    }
    fmt_pass(format!(
        "pruned {} of {} pairs",
        a.pruning_stats.pruned_parity + a.pruning_stats.pruned_merge,
        a.pruning_stats.examined
    ))
}

pub fn k_value(t: &CharTable) -> Check {
    let n = t.n();
    let report = find_covering_pairs(n, t, true).map_err(|e| e.to_string())?;
    let expected = if n == 3 { 1 } else { 2 };
    match report.k_value {
        Some(k) if k == expected => fmt_pass(format!("k = {k}")),
        other => Err(format!("k = {other:?}, expected {expected}")),
    }
}

pub fn burnside_zeros(t: &CharTable) -> Check {
    let rows = nonlinear_rows(t).map_err(|e| e.to_string())?;
    for &i in &rows {
        let lambda = &t.order()[i];
        if vanishing_set(lambda, t).map_err(|e| e.to_string())?.is_empty() {
            return Err(format!("{lambda} has no zero"));
        }
    }
    fmt_pass(format!("{} characters", rows.len()))
}

/// Degree sum-of-squares, handy as a quick sanity line.
pub fn degree_square_sum(t: &CharTable) -> BigUint {
    (0..t.dim())
        .map(|i| {
            let d = t.degree_at(i).to_biguint().unwrap_or_default();
            &d * &d
        })
        .sum()
}
