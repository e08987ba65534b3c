//! Exact integer arithmetic and the closed-form Lah number families.
//!
//! [`ExactInteger`] and [`ExactRational`] are the `num` big-number types.
//! Rationals appear only as guarded intermediates: anything that leaves the
//! crate as an integer goes through [`integral`] first.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type ExactInteger = BigInt;
pub type ExactRational = BigRational;

/// `n!`.
pub fn factorial(n: usize) -> ExactInteger {
    (2..=n).fold(ExactInteger::one(), |acc, i| acc * i)
}

/// `0!, 1!, ..., n!`.
pub fn factorial_table(n: usize) -> Vec<ExactInteger> {
    let mut table = Vec::with_capacity(n + 1);
    let mut acc = ExactInteger::one();
    table.push(acc.clone());
    for i in 1..=n {
        acc *= i;
        table.push(acc.clone());
    }
    table
}

/// `C(n, k)`, zero when `k < 0` or `k > n`.
pub fn binomial(n: usize, k: i64) -> ExactInteger {
    if k < 0 || k as u64 > n as u64 {
        return ExactInteger::zero();
    }
    let k = (k as usize).min(n - k as usize);
    // running product stays integral: C(n, i+1) = C(n, i) * (n-i) / (i+1)
    let mut acc = ExactInteger::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `(sum parts)! / prod(parts_i!)`.
pub fn multinomial(parts: &[usize]) -> ExactInteger {
    // product of binomials C(s_1 + ... + s_i, s_i)
    let mut total = 0usize;
    let mut acc = ExactInteger::one();
    for &p in parts {
        total += p;
        acc *= binomial(total, p as i64);
    }
    acc
}

/// Unsigned Lah number `L(n, k) = n!/k! * C(n-1, k-1)`, with `L(0, 0) = 1`.
pub fn lah(n: usize, k: usize) -> ExactInteger {
    if n == 0 && k == 0 {
        return ExactInteger::one();
    }
    if k == 0 || k > n {
        return ExactInteger::zero();
    }
    exact_quotient(factorial(n), &factorial(k)) * binomial(n - 1, k as i64 - 1)
}

/// r-Lah number `L_r(n, k) = n!/k! * C(n+2r-1, k+2r-1)`.
pub fn rlah(n: usize, k: usize, r: usize) -> ExactInteger {
    if r == 0 {
        return lah(n, k);
    }
    if k > n {
        return ExactInteger::zero();
    }
    exact_quotient(factorial(n), &factorial(k)) * binomial(n + 2 * r - 1, (k + 2 * r) as i64 - 1)
}

/// Lah-Bell number: the row sum of the Lah triangle.
pub fn lah_bell_number(n: usize) -> ExactInteger {
    (0..=n).map(|k| lah(n, k)).sum()
}

/// r-extended Lah-Bell number: the row sum of the r-Lah triangle.
pub fn r_lah_bell_number(n: usize, r: usize) -> ExactInteger {
    (0..=n).map(|k| rlah(n, k, r)).sum()
}

/// Converts a rational that must be integral, failing loudly otherwise.
pub fn integral(value: &ExactRational, context: &'static str) -> Result<ExactInteger> {
    if value.is_integer() {
        Ok(value.to_integer())
    } else {
        Err(Error::NonIntegral {
            context,
            value: value.to_string(),
        })
    }
}

// Only called where divisibility is a theorem; a remainder is a bug.
fn exact_quotient(num: ExactInteger, den: &ExactInteger) -> ExactInteger {
    let (q, rem) = num.div_rem(den);
    assert!(rem.is_zero(), "inexact division in closed form");
    q
}
