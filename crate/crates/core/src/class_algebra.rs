//! Structure constants of the class algebra of `S_n`.
//!
//! The coefficient of the class sum of `C_gamma` in `C_mu * C_nu` equals the
//! number of pairs `(x, y)` in `C_mu x C_nu` with `xy = g` for any fixed `g`
//! in `C_gamma`. It is computed here two ways: from the character table, and
//! by enumerating permutations.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::mn::CharTable;
use crate::partition::{factorial, partitions_of, Partition};
use crate::vanishing::covers_all_nonlinear;

/// Default largest `n` for which permutation enumeration is allowed. The
/// brute-force count touches every one of the `n!` permutations once, at
/// `O(n)` work each; `8! = 40320`.
pub const DEFAULT_BRUTE_FORCE_LIMIT: usize = 8;

/// A permutation of `{0, .., n-1}` stored as its image list. Displayed
/// 1-based in cycle notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::OutOfRange(format!("{images:?} is not a permutation")));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    /// Canonical element of the class `gamma`: cycles largest first, filled
    /// with consecutive points.
    pub fn canonical(gamma: &Partition) -> Self {
        let mut images = Vec::with_capacity(gamma.size());
        let mut start = 0;
        for &len in gamma.parts() {
            for k in 0..len {
                images.push(start + (k + 1) % len);
            }
            start += len;
        }
        Permutation { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Permutation { images: inv }
    }

    /// `self * other`, acting on the right factor first.
    pub fn compose(&self, other: &Permutation) -> Self {
        Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    /// `h^-1 * self * h`.
    pub fn conjugate_by(&self, h: &Permutation) -> Self {
        h.inverse().compose(self).compose(h)
    }

    pub fn cycle_type(&self) -> Partition {
        let mut parts = cycle_lengths(&self.images, &mut vec![false; self.images.len()]);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts).expect("cycle lengths are positive")
    }
}

impl std::fmt::Display for Permutation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut seen = vec![false; self.images.len()];
        let mut wrote = false;
        for start in 0..self.images.len() {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push((i + 1).to_string());
                i = self.images[i];
            }
            write!(f, "({})", cycle.join(" "))?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

fn cycle_lengths(images: &[usize], seen: &mut [bool]) -> Vec<usize> {
    seen.iter_mut().for_each(|s| *s = false);
    let mut lengths = Vec::new();
    for start in 0..images.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = images[i];
            len += 1;
        }
        lengths.push(len);
    }
    lengths
}

fn has_cycle_type(images: &[usize], seen: &mut [bool], target: &[usize]) -> bool {
    let mut lengths = cycle_lengths(images, seen);
    if lengths.len() != target.len() {
        return false;
    }
    lengths.sort_unstable_by(|a, b| b.cmp(a));
    lengths == target
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (0..v.len().saturating_sub(1)).rev().find(|&i| v[i] < v[i + 1]) else {
        return false;
    };
    let j = (i + 1..v.len()).rev().find(|&j| v[j] > v[i]).unwrap();
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

fn check_sizes(ps: &[&Partition]) -> Result<usize> {
    let n = ps[0].size();
    for p in &ps[1..] {
        if p.size() != n {
            return Err(Error::SizeMismatch(n, p.size()));
        }
    }
    Ok(n)
}

fn to_biguint_exact(q: BigRational, what: &str) -> Result<BigUint> {
    if !q.is_integer() {
        return Err(Error::Inconsistent(format!("{what} is not an integer: {q}")));
    }
    let v = q.to_integer();
    if v.is_negative() {
        return Err(Error::Inconsistent(format!("{what} is negative: {v}")));
    }
    Ok(v.to_biguint().expect("checked nonnegative"))
}

/// `a_{mu nu}^gamma` from the character table:
/// `|C_mu||C_nu|/n! * sum_chi chi(mu) chi(nu) chi(gamma) / chi(1)`.
pub fn structure_constant(
    mu: &Partition,
    nu: &Partition,
    gamma: &Partition,
    table: &CharTable,
) -> Result<BigUint> {
    let n = check_sizes(&[mu, nu, gamma])?;
    if table.n() != n {
        return Err(Error::SizeMismatch(n, table.n()));
    }
    let (jm, jn, jg) = (table.require(mu)?, table.require(nu)?, table.require(gamma)?);
    let mut sum = BigRational::zero();
    for i in 0..table.dim() {
        let num = table.at(i, jm) * table.at(i, jn) * table.at(i, jg);
        if !num.is_zero() {
            sum += BigRational::new(num, table.degree_at(i).clone());
        }
    }
    let scale = BigRational::new(
        BigInt::from(mu.class_size() * nu.class_size()),
        BigInt::from(factorial(n)),
    );
    to_biguint_exact(
        sum * scale,
        &format!("structure constant a({mu},{nu};{gamma})"),
    )
}

/// Number of `x` in `C_mu` with `x^-1 g` in `C_nu`.
pub fn count_factorizations(mu: &Partition, nu: &Partition, g: &Permutation) -> Result<BigUint> {
    let n = check_sizes(&[mu, nu])?;
    if g.degree() != n {
        return Err(Error::SizeMismatch(n, g.degree()));
    }
    if n == 0 {
        return Ok(BigUint::from(1u32));
    }
    // shard on x(0); each shard walks the permutations of the other points
    let count: u64 = (0..n)
        .into_par_iter()
        .map(|first| {
            let mut rest: Vec<usize> = (0..n).filter(|&v| v != first).collect();
            let mut x = vec![0; n];
            let mut x_inv = vec![0; n];
            let mut y = vec![0; n];
            let mut seen = vec![false; n];
            let mut local = 0u64;
            loop {
                x[0] = first;
                x[1..].copy_from_slice(&rest);
                if has_cycle_type(&x, &mut seen, mu.parts()) {
                    for (i, &xi) in x.iter().enumerate() {
                        x_inv[xi] = i;
                    }
                    for i in 0..n {
                        y[i] = x_inv[g.apply(i)];
                    }
                    if has_cycle_type(&y, &mut seen, nu.parts()) {
                        local += 1;
                    }
                }
                if !next_permutation(&mut rest) {
                    break;
                }
            }
            local
        })
        .sum();
    Ok(BigUint::from(count))
}

/// `a_{mu nu}^gamma` by enumerating `C_mu` against the canonical element of
/// `C_gamma`. Refuses `n > limit`.
pub fn structure_constant_bruteforce(
    mu: &Partition,
    nu: &Partition,
    gamma: &Partition,
    limit: usize,
) -> Result<BigUint> {
    let n = check_sizes(&[mu, nu, gamma])?;
    if n > limit {
        return Err(Error::BruteForceLimit { n, limit });
    }
    count_factorizations(mu, nu, &Permutation::canonical(gamma))
}

/// Outcome of [`predicted_coefficient`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Predicted {
    Value(BigUint),
    /// The pair does not cover every non-linear character.
    NotApplicable,
}

/// Coefficient forced on a covering pair: `2|C_mu||C_nu|/n!` on odd classes,
/// zero on even ones.
pub fn predicted_coefficient(
    mu: &Partition,
    nu: &Partition,
    gamma: &Partition,
    table: &CharTable,
) -> Result<Predicted> {
    let n = check_sizes(&[mu, nu, gamma])?;
    if table.n() != n {
        return Err(Error::SizeMismatch(n, table.n()));
    }
    if !covers_all_nonlinear(mu, nu, table)? {
        return Ok(Predicted::NotApplicable);
    }
    if gamma.sign() > 0 {
        return Ok(Predicted::Value(BigUint::zero()));
    }
    let q = BigRational::new(
        BigInt::from(2u32 * mu.class_size() * nu.class_size()),
        BigInt::from(factorial(n)),
    );
    to_biguint_exact(q, &format!("predicted coefficient for {mu}, {nu}")).map(Predicted::Value)
}

/// True iff `nu` arises from `mu` by merging two of its parts into one.
pub fn merge_lemma_check(mu: &Partition, nu: &Partition) -> Result<bool> {
    check_sizes(&[mu, nu])?;
    if mu.len() != nu.len() + 1 {
        return Ok(false);
    }
    for i in 0..mu.len() {
        for j in i + 1..mu.len() {
            // equal parts give identical merges
            if j > i + 1 && mu.part(j) == mu.part(j - 1) {
                continue;
            }
            if &mu.merge_parts(i, j)? == nu {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// The class of transpositions `(2, 1^{n-2})`. Needs `n >= 2`.
pub fn transposition_class(n: usize) -> Result<Partition> {
    if n < 2 {
        return Err(Error::OutOfRange(format!("S_{n} has no transpositions")));
    }
    let mut parts = vec![2];
    parts.extend(std::iter::repeat(1).take(n - 2));
    Ok(Partition::from_sorted(parts))
}

/// `count` class triples of `S_n` drawn deterministically from `seed`.
pub fn sample_triples(n: usize, count: usize, seed: u64) -> Vec<(Partition, Partition, Partition)> {
    let classes = partitions_of(n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ n as u64);
    (0..count)
        .map(|_| {
            let mut pick = || classes.choose(&mut rng).expect("nonempty").clone();
            (pick(), pick(), pick())
        })
        .collect()
}
