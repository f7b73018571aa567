//! Jacobi symbols, floor/ceiling division, and the sign of the
//! multiplication permutation `j -> a*j mod n`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Value of a Jacobi symbol.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum JacobiValue {
    MinusOne,
    Zero,
    PlusOne,
}

impl JacobiValue {
    pub fn as_i64(self) -> i64 {
        match self {
            JacobiValue::MinusOne => -1,
            JacobiValue::Zero => 0,
            JacobiValue::PlusOne => 1,
        }
    }

    fn from_sign(s: i64) -> Self {
        match s.signum() {
            -1 => JacobiValue::MinusOne,
            0 => JacobiValue::Zero,
            _ => JacobiValue::PlusOne,
        }
    }
}

fn check_odd_modulus(n: &BigInt) -> Result<()> {
    if !n.is_positive() || n.is_even() {
        return Err(Error::BadModulus(n.to_string()));
    }
    Ok(())
}

/// Jacobi symbol `(m/n)` for odd positive `n`, by the binary reciprocity
/// algorithm.
pub fn jacobi(m: &BigInt, n: &BigInt) -> Result<JacobiValue> {
    check_odd_modulus(n)?;
    let mut a = m.mod_floor(n);
    let mut n = n.clone();
    let mut sign = 1i64;
    let eight = BigInt::from(8);
    while !a.is_zero() {
        let tz = a.trailing_zeros().unwrap_or(0);
        if tz > 0 {
            a >>= tz;
            let r = (&n % &eight).to_u8().unwrap();
            if tz % 2 == 1 && (r == 3 || r == 5) {
                sign = -sign;
            }
        }
        std::mem::swap(&mut a, &mut n);
        // reciprocity: both odd now
        let three = BigInt::from(3);
        if (&a % 4u8) == three && (&n % 4u8) == three {
            sign = -sign;
        }
        a = a.mod_floor(&n);
    }
    if n.is_one() {
        Ok(JacobiValue::from_sign(sign))
    } else {
        Ok(JacobiValue::Zero)
    }
}

/// Convenience wrapper over machine integers.
pub fn jacobi_i64(m: i64, n: i64) -> Result<JacobiValue> {
    jacobi(&BigInt::from(m), &BigInt::from(n))
}

/// `floor(p / n)` for `n >= 1`.
pub fn floor_div(p: i64, n: i64) -> i64 {
    assert!(n >= 1, "divisor must be positive");
    Integer::div_floor(&p, &n)
}

/// `ceil(p / n)` for `n >= 1`.
pub fn ceil_div(p: i64, n: i64) -> i64 {
    assert!(n >= 1, "divisor must be positive");
    -floor_div(-p, n)
}

/// Least nonnegative residue of `p` modulo `n`.
pub fn mod_nonneg(p: i64, n: i64) -> i64 {
    assert!(n >= 1, "modulus must be positive");
    p.rem_euclid(n)
}

pub fn gcd(a: i64, b: i64) -> i64 {
    a.gcd(&b)
}

/// The permutation `j -> lambda_a(j)` of `{1, ..., n}`, where `lambda_a(j)`
/// is the least positive residue of `a*j` modulo `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MulPermutation {
    n: usize,
    a: i64,
    images: Vec<usize>,
}

impl MulPermutation {
    pub fn new(a: i64, n: i64) -> Result<Self> {
        if n < 1 || n % 2 == 0 {
            return Err(Error::BadModulus(n.to_string()));
        }
        if gcd(a, n) != 1 {
            return Err(Error::NotCoprime(a.to_string(), n.to_string()));
        }
        let images = (1..=n)
            .map(|j| {
                let r = (a as i128 * j as i128).rem_euclid(n as i128) as i64;
                if r == 0 {
                    n as usize
                } else {
                    r as usize
                }
            })
            .collect();
        Ok(MulPermutation {
            n: n as usize,
            a,
            images,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    /// 1-based images: entry `j - 1` holds `lambda_a(j)`.
    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Sign via cycle decomposition: each cycle of length `l` contributes
    /// `(-1)^(l-1)`.
    pub fn sign(&self) -> i64 {
        let mut seen = vec![false; self.n];
        let mut transpositions = 0usize;
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut len = 0usize;
            let mut j = start;
            while !seen[j] {
                seen[j] = true;
                j = self.images[j] - 1;
                len += 1;
            }
            transpositions += len - 1;
        }
        if transpositions.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Sign by counting inversions, O(n^2).
    pub fn sign_by_inversions(&self) -> i64 {
        let mut inv = 0usize;
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.images[i] > self.images[j] {
                    inv += 1;
                }
            }
        }
        if inv.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

/// Sign of the multiplication-by-`a` permutation modulo odd `n`.
pub fn perm_sign(a: i64, n: i64) -> Result<i64> {
    Ok(MulPermutation::new(a, n)?.sign())
}

/// Jacobi symbol as a product of Legendre symbols, each evaluated by
/// Euler's criterion after trial-division factorization of `n`.
pub fn jacobi_by_euler(m: i64, n: i64) -> Result<i64> {
    if n < 1 || n % 2 == 0 {
        return Err(Error::BadModulus(n.to_string()));
    }
    let mut rest = n;
    let mut value = 1i64;
    let mut p = 3;
    while rest > 1 {
        if p * p > rest {
            p = rest;
        }
        while rest % p == 0 {
            rest /= p;
            let base = BigInt::from(m).mod_floor(&BigInt::from(p));
            let e = base.modpow(&BigInt::from((p - 1) / 2), &BigInt::from(p));
            let leg = if e.is_zero() {
                0
            } else if e.is_one() {
                1
            } else {
                -1
            };
            value *= leg;
        }
        p += 2;
    }
    Ok(value)
}
