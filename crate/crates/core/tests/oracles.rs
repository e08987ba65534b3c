//! Closed forms and partition sums against generating functions expanded
//! here with plain rational power series, independent of the crate's
//! series module.

use std::collections::BTreeMap;

use lahbell::bell::{
    complete_r_lah_bell, incomplete_r_lah_bell, lah_bell_polynomial, Scalar, SequenceSpec,
};
use lahbell::exact::{factorial, lah, lah_bell_number, r_lah_bell_number, rlah, ExactInteger};
use lahbell::poly::{Polynomial, Variable};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

const N: usize = 15;

type Series = Vec<BigRational>;

fn ratio(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn mul(a: &Series, b: &Series) -> Series {
    (0..=N)
        .map(|n| {
            (0..=n)
                .map(|i| &a[i] * &b[n - i])
                .fold(BigRational::zero(), |s, x| s + x)
        })
        .collect()
}

fn pow(a: &Series, k: usize) -> Series {
    (0..k).fold(unit(), |acc, _| mul(&acc, a))
}

fn unit() -> Series {
    (0..=N)
        .map(|n| if n == 0 { ratio(1) } else { ratio(0) })
        .collect()
}

fn t_over_one_minus_t() -> Series {
    (0..=N)
        .map(|n| if n == 0 { ratio(0) } else { ratio(1) })
        .collect()
}

fn one_over_one_minus_t() -> Series {
    vec![ratio(1); N + 1]
}

// exp(s) via the recurrence n e_n = sum_{i=1}^{n} i s_i e_{n-i}
fn exp(s: &Series) -> Series {
    assert!(s[0].is_zero());
    let mut e = vec![ratio(1)];
    for n in 1..=N {
        let acc = (1..=n).fold(BigRational::zero(), |acc, i| {
            acc + ratio(i as i64) * &s[i] * &e[n - i]
        });
        e.push(acc / ratio(n as i64));
    }
    e
}

fn scaled(s: &Series, c: i64) -> Series {
    s.iter().map(|x| x * ratio(c)).collect()
}

fn egf(s: &Series, n: usize) -> ExactInteger {
    let v = &s[n] * BigRational::from_integer(factorial(n));
    assert!(v.is_integer(), "non-integral egf coefficient {v}");
    v.to_integer()
}

#[test]
fn lah_numbers_match_series() {
    for k in 0..=N {
        let s: Series = pow(&t_over_one_minus_t(), k)
            .into_iter()
            .map(|x| x / BigRational::from_integer(factorial(k)))
            .collect();
        for n in 0..=N {
            assert_eq!(lah(n, k), egf(&s, n), "n={n} k={k}");
        }
    }
}

#[test]
fn r_lah_numbers_match_series() {
    for r in 0..=3 {
        let tail = pow(&one_over_one_minus_t(), 2 * r);
        for k in 0..=N {
            let s: Series = mul(&pow(&t_over_one_minus_t(), k), &tail)
                .into_iter()
                .map(|x| x / BigRational::from_integer(factorial(k)))
                .collect();
            for n in 0..=N {
                assert_eq!(rlah(n, k, r), egf(&s, n), "n={n} k={k} r={r}");
            }
        }
    }
}

#[test]
fn lah_bell_numbers_match_series() {
    let lb = exp(&t_over_one_minus_t());
    for n in 0..=N {
        assert_eq!(lah_bell_number(n), egf(&lb, n), "n={n}");
    }
    for r in 0..=3 {
        let s = mul(&lb, &pow(&one_over_one_minus_t(), 2 * r));
        for n in 0..=N {
            assert_eq!(r_lah_bell_number(n, r), egf(&s, n), "n={n} r={r}");
        }
    }
}

// Polynomials in x from the series at x = 0..=n, compared by evaluation.
#[test]
fn r_lah_bell_polynomials_match_series_pointwise() {
    let ones = SequenceSpec::Ones;
    for r in 0..=3 {
        let tail = pow(&one_over_one_minus_t(), 2 * r);
        for x in -2..=4i64 {
            let s = mul(&exp(&scaled(&t_over_one_minus_t(), x)), &tail);
            let at: BTreeMap<Variable, ExactInteger> =
                [(Variable::scalar_x(), BigInt::from(x))].into();
            for n in 0..=N.min(12) {
                let expected = egf(&s, n);
                let poly = lah_bell_polynomial(n, r, &Scalar::Indeterminate);
                assert_eq!(poly.eval(&at).unwrap(), expected, "n={n} r={r} x={x}");
                let complete = complete_r_lah_bell(n, r, &Scalar::from(x), &ones, &ones).unwrap();
                assert_eq!(
                    complete,
                    Polynomial::constant(expected.clone()),
                    "n={n} r={r} x={x}"
                );
            }
        }
    }
}

#[test]
fn incomplete_r_lah_bell_at_ones_is_r_lah() {
    let ones = SequenceSpec::Ones;
    for r in 0..=3 {
        for n in 0..=12 {
            let mut row_sum = ExactInteger::zero();
            for k in 0..=n {
                let p = incomplete_r_lah_bell(n, k, r, &ones, &ones).unwrap();
                assert_eq!(p, Polynomial::constant(rlah(n, k, r)), "n={n} k={k} r={r}");
                row_sum += rlah(n, k, r);
            }
            assert_eq!(row_sum, r_lah_bell_number(n, r));
        }
    }
}

#[test]
fn explicit_sequences_match_series() {
    // (sum a_j t^j)^k / k! * (sum b_{i+1} t^i)^{2r} with integer a, b
    let a = [2i64, -1, 3, 0, 5, 1, -2, 4, 1, 1, 0, 2];
    let b = [1i64, 3, -2, 1, 0, 2, 1, -1, 2, 0, 1, 3, 1];
    let a_series: Series = (0..=N)
        .map(|j| {
            if j == 0 || j > a.len() {
                ratio(0)
            } else {
                ratio(a[j - 1])
            }
        })
        .collect();
    let b_series: Series = (0..=N)
        .map(|i| b.get(i).map_or(ratio(0), |&v| ratio(v)))
        .collect();
    let a_spec = SequenceSpec::Explicit(a.iter().map(|&v| BigInt::from(v)).collect());
    let b_spec = SequenceSpec::Explicit(b.iter().map(|&v| BigInt::from(v)).collect());
    for r in 0..=2 {
        let tail = pow(&b_series, 2 * r);
        for k in 0..=6 {
            let s: Series = mul(&pow(&a_series, k), &tail)
                .into_iter()
                .map(|x| x / BigRational::from_integer(factorial(k)))
                .collect();
            for n in k..=10 {
                let p = incomplete_r_lah_bell(n, k, r, &a_spec, &b_spec).unwrap();
                assert_eq!(p, Polynomial::constant(egf(&s, n)), "n={n} k={k} r={r}");
            }
        }
    }
}
