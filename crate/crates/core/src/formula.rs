//! Closed-form character values in the multiplicities `m_i` of the class,
//! and the hook / two-row recursions through characters induced from Young
//! subgroups `S_{n-k} x S_k`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::{binomial, Integer};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::mn::CharValue;
use crate::partition::Partition;

/// The eight shapes `(n - |tail|, tail)` with a closed-form character
/// polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NearHookShape {
    /// `(n-1, 1)`
    R1,
    /// `(n-2, 2)`
    R2,
    /// `(n-2, 1, 1)`
    R11,
    /// `(n-3, 3)`
    R3,
    /// `(n-3, 2, 1)`
    R21,
    /// `(n-3, 1, 1, 1)`
    R111,
    /// `(n-4, 2, 1, 1)`
    R211,
    /// `(n-4, 1, 1, 1, 1)`
    R1111,
}

impl NearHookShape {
    pub const ALL: [NearHookShape; 8] = [
        NearHookShape::R1,
        NearHookShape::R2,
        NearHookShape::R11,
        NearHookShape::R3,
        NearHookShape::R21,
        NearHookShape::R111,
        NearHookShape::R211,
        NearHookShape::R1111,
    ];

    /// Parts below the first row.
    pub fn tail(self) -> &'static [usize] {
        match self {
            NearHookShape::R1 => &[1],
            NearHookShape::R2 => &[2],
            NearHookShape::R11 => &[1, 1],
            NearHookShape::R3 => &[3],
            NearHookShape::R21 => &[2, 1],
            NearHookShape::R111 => &[1, 1, 1],
            NearHookShape::R211 => &[2, 1, 1],
            NearHookShape::R1111 => &[1, 1, 1, 1],
        }
    }

    /// Smallest `n` for which the shape is a partition (first row at least
    /// as long as the second).
    pub fn min_n(self) -> usize {
        let tail = self.tail();
        tail.iter().sum::<usize>() + tail[0]
    }

    /// The partition this shape denotes in `S_n`.
    pub fn partition(self, n: usize) -> Result<Partition> {
        if n < self.min_n() {
            return Err(Error::OutOfRange(format!(
                "shape {self} needs n >= {}, got {n}",
                self.min_n()
            )));
        }
        let tail = self.tail();
        let mut parts = vec![n - tail.iter().sum::<usize>()];
        parts.extend_from_slice(tail);
        Ok(Partition::from_sorted(parts))
    }

    /// The shape whose partition equals `lambda`, if any.
    pub fn identify(lambda: &Partition) -> Option<NearHookShape> {
        let n = lambda.size();
        Self::ALL
            .into_iter()
            .find(|s| s.partition(n).ok().as_ref() == Some(lambda))
    }
}

impl fmt::Display for NearHookShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tail: Vec<String> = self.tail().iter().map(|t| t.to_string()).collect();
        write!(f, "(n-{},{})", self.tail().iter().sum::<usize>(), tail.join(","))
    }
}

impl FromStr for NearHookShape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.to_ascii_uppercase().as_str() {
            "R1" => NearHookShape::R1,
            "R2" => NearHookShape::R2,
            "R11" => NearHookShape::R11,
            "R3" => NearHookShape::R3,
            "R21" => NearHookShape::R21,
            "R111" => NearHookShape::R111,
            "R211" => NearHookShape::R211,
            "R1111" => NearHookShape::R1111,
            _ => return Err(Error::OutOfRange(format!("unknown shape tag {s:?}"))),
        })
    }
}

fn exact_div(num: BigInt, den: i64, what: &str) -> Result<BigInt> {
    let (q, r) = num.div_rem(&BigInt::from(den));
    if !r.is_zero() {
        return Err(Error::Inconsistent(format!(
            "inexact division by {den} in {what}: {num} leaves remainder {r}"
        )));
    }
    Ok(q)
}

/// Closed-form value of the near-hook character `shape` on the class `mu`.
pub fn near_hook_value(shape: NearHookShape, mu: &Partition) -> Result<CharValue> {
    shape.partition(mu.size())?;
    let m = mu.multiplicities();
    let [m1, m2, m3, m4] = [1, 2, 3, 4].map(|i| BigInt::from(m.get(i)));
    let one = BigInt::one();
    let c = |v: i64| BigInt::from(v);
    let tag = shape.to_string();
    let value = match shape {
        NearHookShape::R1 => &m1 - &one,
        NearHookShape::R2 => exact_div(&m1 * (&m1 - c(3)), 2, &tag)? + &m2,
        NearHookShape::R11 => exact_div((&m1 - c(1)) * (&m1 - c(2)), 2, &tag)? - &m2,
        NearHookShape::R3 => {
            exact_div(&m1 * (&m1 - c(1)) * (&m1 - c(5)), 6, &tag)? + &m2 * (&m1 - c(1)) + &m3
        }
        NearHookShape::R21 => exact_div(&m1 * (&m1 - c(2)) * (&m1 - c(4)), 3, &tag)? - &m3,
        NearHookShape::R111 => {
            exact_div((&m1 - c(1)) * (&m1 - c(2)) * (&m1 - c(3)), 6, &tag)?
                - (&m1 - c(1)) * &m2
                + &m3
        }
        NearHookShape::R211 => {
            exact_div(&m1 * (&m1 - c(2)) * (&m1 - c(3)) * (&m1 - c(5)), 8, &tag)?
                - exact_div(&m2 * &m1 * (&m1 - c(3)), 2, &tag)?
                - exact_div(&m2 * (&m2 - c(1)), 2, &tag)?
                + &m4
        }
        NearHookShape::R1111 => {
            exact_div(
                (&m1 - c(1)) * (&m1 - c(2)) * (&m1 - c(3)) * (&m1 - c(4)),
                24,
                &tag,
            )? - exact_div((&m1 - c(1)) * (&m1 - c(2)) * &m2, 2, &tag)?
                + (&m1 - c(1)) * &m3
                + exact_div(&m2 * (&m2 - c(1)), 2, &tag)?
                - &m4
        }
    };
    Ok(value)
}

/// Character of `S_k` that is tensored with the trivial character of
/// `S_{n-k}` before inducing.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InnerCharacter {
    Trivial,
    Sign,
}

/// Value on `mu` of `(1_{S_{n-k}} x inner)` induced from `S_{n-k} x S_k`
/// to `S_n`: a sum over sub-multisets `nu` of the parts of `mu` with
/// `|nu| = k` of `inner(nu) * prod_i C(m_i(mu), m_i(nu))`.
pub fn induced_value(k: usize, inner: InnerCharacter, mu: &Partition) -> Result<CharValue> {
    let n = mu.size();
    if k == 0 || k > n {
        return Err(Error::OutOfRange(format!("induction needs 1 <= k <= n, got k={k}, n={n}")));
    }
    Ok(induced_unchecked(k, inner, mu))
}

fn induced_unchecked(k: usize, inner: InnerCharacter, mu: &Partition) -> BigInt {
    let mult: Vec<(usize, usize)> = mu.multiplicities().iter().map(|(&i, &m)| (i, m)).collect();

    fn rec(
        mult: &[(usize, usize)],
        remaining: usize,
        odd: bool,
        weight: BigInt,
        inner: InnerCharacter,
        acc: &mut BigInt,
    ) {
        if remaining == 0 {
            if inner == InnerCharacter::Sign && odd {
                *acc -= weight;
            } else {
                *acc += weight;
            }
            return;
        }
        let Some((&(part, m), rest)) = mult.split_first() else {
            return;
        };
        for taken in 0..=m.min(remaining / part) {
            let w = &weight * binomial(BigInt::from(m), BigInt::from(taken));
            // each taken cycle of length `part` has sign (-1)^(part-1)
            let flips = (part - 1) % 2 == 1 && taken % 2 == 1;
            rec(rest, remaining - taken * part, odd ^ flips, w, inner, acc);
        }
    }

    let mut acc = BigInt::zero();
    rec(&mult, k, false, BigInt::one(), inner, &mut acc);
    acc
}

/// `chi_{(n-k, 1^k)}(mu)` through the induced-character recursion, starting
/// from the trivial character at `k = 0`.
pub fn hook_char_recursive(k: usize, mu: &Partition) -> Result<CharValue> {
    let n = mu.size();
    if k >= n {
        return Err(Error::OutOfRange(format!("hook recursion needs k <= n-1, got k={k}, n={n}")));
    }
    let mut value = BigInt::one();
    for j in 1..=k {
        value = induced_unchecked(j, InnerCharacter::Sign, mu) - value;
    }
    Ok(value)
}

/// `chi_{(n-k, k)}(mu)`: the induced trivial character minus all two-row
/// characters `(n-j, j)` with `j < k`.
pub fn two_row_char_recursive(k: usize, mu: &Partition) -> Result<CharValue> {
    let n = mu.size();
    if 2 * k > n {
        return Err(Error::OutOfRange(format!("two-row recursion needs k <= n/2, got k={k}, n={n}")));
    }
    let mut lower = BigInt::zero();
    let mut value = BigInt::one();
    for j in 0..=k {
        let induced = if j == 0 {
            BigInt::one()
        } else {
            induced_unchecked(j, InnerCharacter::Trivial, mu)
        };
        value = induced - &lower;
        lower += &value;
    }
    Ok(value)
}
