//! Integer partitions: enumeration, multiplicities, centralizer orders and
//! the handful of combinatorial operations the character code needs.
//!
//! A partition is stored as its weakly decreasing list of positive parts.
//! The empty partition is the unique partition of 0.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};

/// A partition of `n = parts.iter().sum()`.
///
/// `Ord` follows the canonical enumeration order used everywhere in this
/// crate (descending reverse-lexicographic): for partitions of the same
/// size, `(n)` is the smallest element and `(1^n)` the largest.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from parts in any order. Zero parts are rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Parse {
                text: format!("{parts:?}"),
                reason: "parts must be positive".into(),
            });
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    /// Caller guarantees `parts` is weakly decreasing and positive.
    pub(crate) fn from_sorted(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(!parts.contains(&0));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition `(n)`; empty for `n = 0`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    /// The hook `(n-k, 1^k)`. Requires `k < n`.
    pub fn hook(n: usize, k: usize) -> Result<Self> {
        if k >= n {
            return Err(Error::OutOfRange(format!("hook (n-k,1^k) needs k < n, got n={n}, k={k}")));
        }
        let mut parts = vec![n - k];
        parts.extend(std::iter::repeat(1).take(k));
        Ok(Partition { parts })
    }

    /// The two-row shape `(n-k, k)`. Requires `2k <= n`.
    pub fn two_row(n: usize, k: usize) -> Result<Self> {
        if 2 * k > n {
            return Err(Error::OutOfRange(format!("two-row (n-k,k) needs k <= n/2, got n={n}, k={k}")));
        }
        let mut parts = vec![n - k];
        if k > 0 {
            parts.push(k);
        }
        Ok(Partition::from_sorted(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The integer being partitioned.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `i`-th part (0-based), or 0 past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn multiplicities(&self) -> MultiplicityVector {
        let mut counts = BTreeMap::new();
        for &p in &self.parts {
            *counts.entry(p).or_insert(0) += 1;
        }
        MultiplicityVector { counts }
    }

    /// Order of the centralizer of a permutation of this cycle type,
    /// `prod_i i^{m_i} m_i!`.
    pub fn centralizer_order(&self) -> BigUint {
        let mut z = BigUint::one();
        for (&i, &m) in self.multiplicities().iter() {
            z *= BigUint::from(i).pow(m as u32);
            z *= factorial(m);
        }
        z
    }

    /// Size of the conjugacy class of `S_n` with this cycle type.
    pub fn class_size(&self) -> BigUint {
        factorial(self.size()) / self.centralizer_order()
    }

    /// `+1` for even cycle types, `-1` for odd ones.
    pub fn sign(&self) -> i32 {
        if (self.size() - self.len()) % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// A hook partition has second part at most 1.
    pub fn is_hook(&self) -> bool {
        self.part(1) <= 1
    }

    /// Transpose of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let parts = (0..width)
            .map(|c| self.parts.iter().take_while(|&&p| p > c).count())
            .collect();
        Partition { parts }
    }

    /// Replaces the parts at positions `i` and `j` by their sum.
    pub fn merge_parts(&self, i: usize, j: usize) -> Result<Partition> {
        let len = self.len();
        if i == j || i >= len || j >= len {
            return Err(Error::Index(format!(
                "cannot merge parts {i} and {j} of {self} ({len} parts)"
            )));
        }
        let mut parts: Vec<usize> = self
            .parts
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != i && k != j)
            .map(|(_, &p)| p)
            .collect();
        parts.push(self.parts[i] + self.parts[j]);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    /// Removes the first part, i.e. the largest one.
    pub(crate) fn without_first(&self) -> Partition {
        Partition {
            parts: self.parts[1.min(self.parts.len())..].to_vec(),
        }
    }

    /// Comma-separated parts, largest first. The empty partition formats
    /// as the empty string.
    pub fn format(&self) -> String {
        self.join(",")
    }

    /// Parts joined with `sep`.
    pub fn join(&self, sep: &str) -> String {
        let strs: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        strs.join(sep)
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        other.parts.cmp(&self.parts)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.format())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_partition(s)
    }
}

/// Parses comma-separated positive integers in any order.
///
/// `1^k` is accepted as shorthand for `k` ones; other exponents are rejected.
pub fn parse_partition(text: &str) -> Result<Partition> {
    let err = |reason: String| Error::Parse {
        text: text.to_string(),
        reason,
    };
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err(err("no parts".into()));
    }
    let mut parts = Vec::new();
    for token in trimmed.split(',') {
        let token = token.trim();
        if let Some((base, exp)) = token.split_once('^') {
            if base.trim() != "1" {
                return Err(err(format!("exponent shorthand only allowed on 1, got {token:?}")));
            }
            let k: usize = exp
                .trim()
                .parse()
                .map_err(|_| err(format!("bad exponent in {token:?}")))?;
            if k == 0 {
                return Err(err(format!("exponent must be positive in {token:?}")));
            }
            parts.extend(std::iter::repeat(1).take(k));
        } else {
            let v: usize = token
                .parse()
                .map_err(|_| err(format!("not a positive integer: {token:?}")))?;
            if v == 0 {
                return Err(err("parts must be positive".into()));
            }
            parts.push(v);
        }
    }
    Partition::new(parts)
}

pub fn format_partition(p: &Partition) -> String {
    p.format()
}

/// Counts `m_i` of parts equal to `i`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct MultiplicityVector {
    counts: BTreeMap<usize, usize>,
}

impl MultiplicityVector {
    /// `m_i`, zero when `i` is not a part.
    pub fn get(&self, i: usize) -> usize {
        self.counts.get(&i).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&usize, &usize)> {
        self.counts.iter()
    }

    pub fn from_counts<I: IntoIterator<Item = (usize, usize)>>(counts: I) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (i, m) in counts {
            if i == 0 {
                return Err(Error::OutOfRange("part size 0 in multiplicity vector".into()));
            }
            if m > 0 {
                *map.entry(i).or_insert(0) += m;
            }
        }
        Ok(MultiplicityVector { counts: map })
    }

    /// `sum_i i * m_i`.
    pub fn total(&self) -> usize {
        self.counts.iter().map(|(i, m)| i * m).sum()
    }

    pub fn to_partition(&self) -> Partition {
        let parts = self
            .counts
            .iter()
            .rev()
            .flat_map(|(&i, &m)| std::iter::repeat(i).take(m))
            .collect();
        Partition::from_sorted(parts)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DominanceResult {
    Less,
    Greater,
    Equal,
    Incomparable,
}

/// Dominance comparison by prefix sums. `Greater` means `p` strictly
/// dominates `q`.
pub fn dominance_compare(p: &Partition, q: &Partition) -> Result<DominanceResult> {
    if p.size() != q.size() {
        return Err(Error::SizeMismatch(p.size(), q.size()));
    }
    let (mut sp, mut sq) = (0usize, 0usize);
    let (mut p_ge, mut q_ge) = (true, true);
    for i in 0..p.len().max(q.len()) {
        sp += p.part(i);
        sq += q.part(i);
        if sp < sq {
            p_ge = false;
        }
        if sq < sp {
            q_ge = false;
        }
    }
    Ok(match (p_ge, q_ge) {
        (true, true) => DominanceResult::Equal,
        (true, false) => DominanceResult::Greater,
        (false, true) => DominanceResult::Less,
        (false, false) => DominanceResult::Incomparable,
    })
}

/// All partitions of `n` in canonical order: `(n)` first, `(1^n)` last.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition::from_sorted(prefix.clone()));
            return;
        }
        for part in (1..=max.min(remaining)).rev() {
            prefix.push(part);
            rec(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}
