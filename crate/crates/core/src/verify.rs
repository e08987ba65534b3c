//! Identity checks used by `lahbell verify` and the acceptance suite.
//!
//! Each public check function compares two or more independent computations
//! over a bounded range and returns an [`Outcome`]. Suites group checks and
//! run them in parallel.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bell::{
    complete_bell, complete_lah_bell, complete_r_bell, complete_r_lah_bell,
    complete_r_lah_bell_expanded, incomplete_bell, incomplete_lah_bell, incomplete_r_bell,
    incomplete_r_lah_bell, lah_bell_polynomial, Scalar, SequenceSpec,
};
use crate::error::{Error, Result};
use crate::exact::{factorial, lah, lah_bell_number, r_lah_bell_number, rlah, ExactInteger};
use crate::partitions::{lah_via_pi, rlah_via_lambda};
use crate::poly::{Family, Polynomial, Variable};
use crate::series::{faa_di_bruno_check, gf_expand, GfFamily, GfParams};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    All,
    Theorem1,
    Prop2,
    Theorem3,
    Eq23,
    Eq28,
    Eq30,
    Theorem4,
    Theorem5,
    Corollary6,
    Theorem7,
    Eq42,
    FaaDiBruno,
    SeriesOracle,
}

impl Suite {
    /// Every concrete suite, in reporting order.
    pub const MEMBERS: [Suite; 13] = [
        Suite::Theorem1,
        Suite::Prop2,
        Suite::Theorem3,
        Suite::Eq23,
        Suite::Eq28,
        Suite::Eq30,
        Suite::Theorem4,
        Suite::Theorem5,
        Suite::Corollary6,
        Suite::Theorem7,
        Suite::Eq42,
        Suite::FaaDiBruno,
        Suite::SeriesOracle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Theorem1 => "theorem1",
            Suite::Prop2 => "prop2",
            Suite::Theorem3 => "theorem3",
            Suite::Eq23 => "eq23",
            Suite::Eq28 => "eq28",
            Suite::Eq30 => "eq30",
            Suite::Theorem4 => "theorem4",
            Suite::Theorem5 => "theorem5",
            Suite::Corollary6 => "corollary6",
            Suite::Theorem7 => "theorem7",
            Suite::Eq42 => "eq42",
            Suite::FaaDiBruno => "faadibruno",
            Suite::SeriesOracle => "series-oracle",
        }
    }

    fn checks(self, b: Bounds) -> Vec<Check> {
        let Bounds { n_max: n, r_max: r } = b;
        match self {
            Suite::All => Suite::MEMBERS.iter().flat_map(|s| s.checks(b)).collect(),
            Suite::Theorem1 => vec![Box::new(move || lah_bell_triple(n))],
            Suite::Prop2 => vec![
                Box::new(move || lah_triple(n)),
                Box::new(move || lah_bell_substitution(n)),
            ],
            Suite::Theorem3 => vec![Box::new(move || complete_decomposition(n))],
            Suite::Eq23 => vec![Box::new(move || homogeneity(n, -3..=3))],
            Suite::Eq28 => vec![Box::new(move || uniform_scalar(n))],
            Suite::Eq30 => vec![Box::new(move || weighting_bridge(n, r))],
            Suite::Theorem4 => vec![
                Box::new(move || complete_at_ones(n, r)),
                Box::new(move || r_lah_bell_numbers(n, r)),
            ],
            Suite::Theorem5 => vec![Box::new(move || incomplete_at_ones(n, r))],
            Suite::Corollary6 => vec![Box::new(move || rlah_triple(n, r))],
            Suite::Theorem7 => vec![Box::new(move || expanded_closed_form(n, r))],
            Suite::Eq42 => vec![Box::new(move || scaled_row_sums(n, r))],
            Suite::FaaDiBruno => vec![Box::new(move || faa_di_bruno(n))],
            Suite::SeriesOracle => vec![
                Box::new(move || generic_oracle(n, r)),
                Box::new(move || r_bell_oracle(n, r)),
            ],
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        std::iter::once(Suite::All)
            .chain(Suite::MEMBERS)
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite '{s}'")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    pub n_max: usize,
    pub r_max: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            n_max: 12,
            r_max: 2,
        }
    }
}

/// Result of one identity over its whole range.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Outcome {
    pub identity: String,
    pub bound: String,
    pub cases: usize,
    pub passed: bool,
    pub counterexample: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub suite: String,
    pub bounds: Bounds,
    pub passed: bool,
    pub outcomes: Vec<Outcome>,
}

type Check = Box<dyn Fn() -> Outcome + Send + Sync>;

pub fn run(suite: Suite, bounds: Bounds) -> Verdict {
    let outcomes: Vec<Outcome> = suite.checks(bounds).par_iter().map(|c| c()).collect();
    Verdict {
        suite: suite.name().to_string(),
        bounds,
        passed: outcomes.iter().all(|o| o.passed),
        outcomes,
    }
}

// Counts cases and keeps the first mismatch.
struct Tally {
    identity: &'static str,
    bound: String,
    cases: usize,
    counterexample: Option<String>,
}

impl Tally {
    fn new(identity: &'static str, bound: String) -> Self {
        Tally {
            identity,
            bound,
            cases: 0,
            counterexample: None,
        }
    }

    fn all_equal<T: PartialEq + fmt::Display>(
        &mut self,
        case: impl FnOnce() -> String,
        sides: Result<Vec<T>>,
    ) {
        self.cases += 1;
        if self.counterexample.is_some() {
            return;
        }
        match sides {
            Ok(values) if values.windows(2).all(|w| w[0] == w[1]) => {}
            Ok(values) => {
                let shown: Vec<String> = values.iter().map(|v| v.to_string()).collect();
                self.counterexample = Some(format!("{}: {}", case(), shown.join(" vs ")));
            }
            Err(e) => self.counterexample = Some(format!("{}: error: {e}", case())),
        }
    }

    fn finish(self) -> Outcome {
        Outcome {
            identity: self.identity.to_string(),
            bound: self.bound,
            cases: self.cases,
            passed: self.counterexample.is_none(),
            counterexample: self.counterexample,
        }
    }
}

fn params(k: Option<usize>, r: Option<usize>) -> GfParams {
    GfParams {
        k,
        r,
        ..Default::default()
    }
}

fn x_var() -> Polynomial {
    Polynomial::var(Variable::scalar_x())
}

/// `B_n^L = B_n(1!, ..., n!) = n! [t^n] exp(t/(1-t))` for `n <= n_max`.
pub fn lah_bell_triple(n_max: usize) -> Outcome {
    let mut t = Tally::new(
        "lah-bell number = complete bell at factorials = series",
        format!("n <= {n_max}"),
    );
    let series = gf_expand(GfFamily::LahBell, &GfParams::default(), n_max);
    for n in 0..=n_max {
        t.all_equal(
            || format!("n={n}"),
            (|| {
                Ok(vec![
                    Polynomial::constant(lah_bell_number(n)),
                    complete_bell(n, &SequenceSpec::Factorials)?,
                    series.clone()?[n].clone(),
                ])
            })(),
        );
    }
    t.finish()
}

/// `L(n,k)` by closed form, by the π-sum, and from `(t/(1-t))^k / k!`.
pub fn lah_triple(n_max: usize) -> Outcome {
    let mut t = Tally::new(
        "lah closed form = pi-sum = series",
        format!("k <= n <= {n_max}"),
    );
    for k in 0..=n_max {
        let series = gf_expand(GfFamily::Lah, &params(Some(k), None), n_max);
        for n in k..=n_max {
            t.all_equal(
                || format!("n={n} k={k}"),
                series.as_ref().map_err(Clone::clone).map(|s| {
                    vec![
                        Polynomial::constant(lah(n, k)),
                        Polynomial::constant(lah_via_pi(n, k)),
                        s[n].clone(),
                    ]
                }),
            );
        }
    }
    t.finish()
}

/// `L_r(n,k)` by closed form, by the Λ-sum, and from the series.
pub fn rlah_triple(n_max: usize, r_max: usize) -> Outcome {
    let mut t = Tally::new(
        "r-lah closed form = lambda-sum = series",
        format!("k <= n <= {n_max}, r <= {r_max}"),
    );
    for r in 0..=r_max {
        for k in 0..=n_max {
            let series = gf_expand(GfFamily::RLah, &params(Some(k), Some(r)), n_max);
            for n in k..=n_max {
                t.all_equal(
                    || format!("n={n} k={k} r={r}"),
                    series.as_ref().map_err(Clone::clone).map(|s| {
                        vec![
                            Polynomial::constant(rlah(n, k, r)),
                            Polynomial::constant(rlah_via_lambda(n, k, r)),
                            s[n].clone(),
                        ]
                    }),
                );
            }
        }
    }
    t.finish()
}

/// `B_{n,r}^L = sum_k L_r(n,k)` against `exp(t/(1-t)) (1-t)^{-2r}`.
pub fn r_lah_bell_numbers(n_max: usize, r_max: usize) -> Outcome {
    let mut t = Tally::new(
        "r-lah-bell number = series",
        format!("n <= {n_max}, r <= {r_max}"),
    );
    for r in 0..=r_max {
        let series = gf_expand(GfFamily::RLahBell, &params(None, Some(r)), n_max);
        for n in 0..=n_max {
            t.all_equal(
                || format!("n={n} r={r}"),
                series
                    .as_ref()
                    .map_err(Clone::clone)
                    .map(|s| vec![Polynomial::constant(r_lah_bell_number(n, r)), s[n].clone()]),
            );
        }
    }
    t.finish()
}

fn factorial_weighting(n: usize, family: Family, shift: usize) -> BTreeMap<Variable, Polynomial> {
    (1..=n + 1)
        .map(|i| {
            let v = Variable::new(family, i as u32);
            (v, Polynomial::var(v).scale(&factorial(i - shift)))
        })
        .collect()
}

/// Incomplete Lah-Bell equals incomplete Bell under `x_i -> i! x_i`, symbolically.
pub fn lah_bell_substitution(n_max: usize) -> Outcome {
    let mut t = Tally::new(
        "incomplete lah-bell = incomplete bell at i!*x_i",
        format!("k <= n <= {n_max}"),
    );
    let xs = SequenceSpec::Symbolic(Family::X);
    let weights = factorial_weighting(n_max, Family::X, 0);
    for n in 0..=n_max {
        for k in 0..=n {
            t.all_equal(
                || format!("n={n} k={k}"),
                (|| {
                    Ok(vec![
                        incomplete_lah_bell(n, k, &xs)?,
                        incomplete_bell(n, k, &xs)?.substitute_all(&weights),
                    ])
                })(),
            );
        }
    }
    t.finish()
}

/// Substituting `x_i -> alpha x_i` scales the incomplete Lah-Bell polynomial by `alpha^k`.
pub fn homogeneity(n_max: usize, alphas: std::ops::RangeInclusive<i64>) -> Outcome {
    let mut t = Tally::new(
        "incomplete lah-bell is homogeneous of degree k",
        format!(
            "k <= n <= {n_max}, alpha in {}..={}",
            alphas.start(),
            alphas.end()
        ),
    );
    let xs = SequenceSpec::Symbolic(Family::X);
    for n in 0..=n_max {
        for k in 0..=n {
            let p = incomplete_lah_bell(n, k, &xs);
            for alpha in alphas.clone() {
                let scaling: BTreeMap<_, _> = (1..=n + 1)
                    .map(|i| {
                        let v = Variable::x(i as u32);
                        (v, Polynomial::var(v).scale(&ExactInteger::from(alpha)))
                    })
                    .collect();
                t.all_equal(
                    || format!("n={n} k={k} alpha={alpha}"),
                    p.as_ref().map_err(Clone::clone).map(|p| {
                        vec![
                            p.substitute_all(&scaling),
                            p.scale(&num_traits::pow(ExactInteger::from(alpha), k)),
                        ]
                    }),
                );
            }
        }
    }
    t.finish()
}

/// Complete Lah-Bell is the sum of its incomplete pieces, symbolically, for `n >= 1`.
pub fn complete_decomposition(n_max: usize) -> Outcome {
    let mut t = Tally::new(
        "complete lah-bell = sum of incomplete lah-bell",
        format!("1 <= n <= {n_max}"),
    );
    let xs = SequenceSpec::Symbolic(Family::X);
    for n in 1..=n_max {
        t.all_equal(
            || format!("n={n}"),
            (|| {
                Ok(vec![
                    complete_lah_bell(n, &xs)?,
                    (1..=n)
                        .map(|k| incomplete_lah_bell(n, k, &xs))
                        .sum::<Result<Polynomial>>()?,
                ])
            })(),
        );
    }
    t.finish()
}

/// Complete Lah-Bell at the constant sequence `x` is `sum_k x^k L(n,k)`.
pub fn uniform_scalar(n_max: usize) -> Outcome {
    let mut t = Tally::new(
        "complete lah-bell at x,x,... = sum x^k L(n,k)",
        format!("n <= {n_max}"),
    );
    let xs = SequenceSpec::Symbolic(Family::ScalarX);
    for n in 0..=n_max {
        t.all_equal(
            || format!("n={n}"),
            complete_lah_bell(n, &xs)
                .map(|p| vec![p, lah_bell_polynomial(n, 0, &Scalar::Indeterminate)]),
        );
    }
    t.finish()
}

/// Incomplete r-Lah-Bell equals incomplete r-Bell with exponent `2r` under
/// `a_i -> i! a_i` and `b_{i+1} -> i! b_{i+1}`, symbolically.
pub fn weighting_bridge(n_max: usize, r_max: usize) -> Outcome {
    let mut t = Tally::new(
        "incomplete r-lah-bell = incomplete r-bell(2r) at i!*a_i, i!*b_(i+1)",
        format!("k <= n <= {n_max}, r <= {r_max}"),
    );
    let a = SequenceSpec::Symbolic(Family::A);
    let b = SequenceSpec::Symbolic(Family::B);
    let len = n_max + 1;
    let weighted = a
        .weighted(len, factorial)
        .and_then(|wa| Ok((wa, b.weighted(len, |i| factorial(i - 1))?)));
    for r in 0..=r_max {
        for n in 0..=n_max {
            for k in 0..=n {
                t.all_equal(
                    || format!("n={n} k={k} r={r}"),
                    (|| {
                        let (wa, wb) = weighted.clone()?;
                        Ok(vec![
                            incomplete_r_lah_bell(n, k, r, &a, &b)?,
                            incomplete_r_bell(n, k, 2 * r, &wa, &wb)?,
                        ])
                    })(),
                );
            }
        }
    }
    t.finish()
}

/// At all-ones sequences the complete r-Lah-Bell polynomial is
/// `sum_k x^k L_r(n,k)` and matches `exp(x t/(1-t)) (1-t)^{-2r}`.
pub fn complete_at_ones(n_max: usize, r_max: usize) -> Outcome {
    let mut t = Tally::new(
        "complete r-lah-bell at ones = sum x^k L_r(n,k) = series",
        format!("n <= {n_max}, r <= {r_max}"),
    );
    let ones = SequenceSpec::Ones;
    let x = Scalar::Indeterminate;
    for r in 0..=r_max {
        let series = gf_expand(
            GfFamily::RLahBellPoly,
            &GfParams {
                r: Some(r),
                x: Some(x.clone()),
                ..Default::default()
            },
            n_max,
        );
        for n in 0..=n_max {
            t.all_equal(
                || format!("n={n} r={r}"),
                (|| {
                    Ok(vec![
                        complete_r_lah_bell(n, r, &x, &ones, &ones)?,
                        lah_bell_polynomial(n, r, &x),
                        series.clone()?[n].clone(),
                    ])
                })(),
            );
        }
    }
    t.finish()
}

/// All-ones incomplete r-Lah-Bell values are the r-Lah numbers.
pub fn incomplete_at_ones(n_max: usize, r_max: usize) -> Outcome {
    let mut t = Tally::new(
        "incomplete r-lah-bell at ones = L_r(n,k)",
        format!("k <= n <= {n_max}, r <= {r_max}"),
    );
    let ones = SequenceSpec::Ones;
    for r in 0..=r_max {
        for n in 0..=n_max {
            for k in 0..=n {
                t.all_equal(
                    || format!("n={n} k={k} r={r}"),
                    incomplete_r_lah_bell(n, k, r, &ones, &ones)
                        .map(|p| vec![p, Polynomial::constant(rlah(n, k, r))]),
                );
            }
        }
    }
    t.finish()
}

/// The expanded closed form in `x`, `y` against the complete r-Lah-Bell
/// polynomial at `x = 1` and against `exp(sum x_j t^j) (sum y_{j+1} t^j)^{2r}`.
pub fn expanded_closed_form(n_max: usize, r_max: usize) -> Outcome {
    let mut t = Tally::new(
        "expanded closed form = complete r-lah-bell at x=1 = series",
        format!("n <= {n_max}, r <= {r_max}"),
    );
    let xs = SequenceSpec::Symbolic(Family::X);
    let ys = SequenceSpec::Symbolic(Family::Y);
    let one = Scalar::from(1);
    for r in 0..=r_max {
        let series = gf_expand(
            GfFamily::CompleteGeneric,
            &GfParams {
                r: Some(r),
                x: Some(one.clone()),
                a: Some(xs.clone()),
                b: Some(ys.clone()),
                ..Default::default()
            },
            n_max,
        );
        for n in 0..=n_max {
            t.all_equal(
                || format!("n={n} r={r}"),
                (|| {
                    Ok(vec![
                        complete_r_lah_bell_expanded(n, r, &xs, &ys)?,
                        complete_r_lah_bell(n, r, &one, &xs, &ys)?,
                        series.clone()?[n].clone(),
                    ])
                })(),
            );
        }
    }
    t.finish()
}

/// `sum_k` incomplete r-Lah-Bell at `x, x, ...` and ones is the r-Lah-Bell
/// polynomial in `x`.
pub fn scaled_row_sums(n_max: usize, r_max: usize) -> Outcome {
    let mut t = Tally::new(
        "sum_k incomplete r-lah-bell at x*ones = r-lah-bell polynomial",
        format!("n <= {n_max}, r <= {r_max}"),
    );
    let xs = SequenceSpec::Uniform(x_var());
    let ones = SequenceSpec::Ones;
    for r in 0..=r_max {
        for n in 0..=n_max {
            t.all_equal(
                || format!("n={n} r={r}"),
                (0..=n)
                    .map(|k| incomplete_r_lah_bell(n, k, r, &xs, &ones))
                    .sum::<Result<Polynomial>>()
                    .map(|p| vec![p, lah_bell_polynomial(n, r, &Scalar::Indeterminate)]),
            );
        }
    }
    t.finish()
}

/// Derivatives of `exp(t/(1-t))` at zero against `B_m(1!, ..., m!)`, `1 <= m <= m_max`.
pub fn faa_di_bruno(m_max: usize) -> Outcome {
    let mut t = Tally::new(
        "m-th derivative of exp(t/(1-t)) at 0 = complete bell at factorials",
        format!("1 <= m <= {m_max}"),
    );
    for m in 1..=m_max {
        let report = faa_di_bruno_check(m, m_max);
        t.all_equal(
            || format!("m={m}"),
            report.map(|r| {
                let inner: Vec<String> =
                    r.inner_derivatives.iter().map(|d| d.to_string()).collect();
                let expected: Vec<String> = (1..=m).map(|j| factorial(j).to_string()).collect();
                vec![
                    format!("{} [{}]", r.derivative_route, inner.join(",")),
                    format!("{} [{}]", r.bell_route, expected.join(",")),
                ]
            }),
        );
    }
    t.finish()
}

/// Symbolic incomplete and complete r-Lah-Bell polynomials against their
/// generating functions.
pub fn generic_oracle(n_max: usize, r_max: usize) -> Outcome {
    let mut t = Tally::new(
        "r-lah-bell polynomials = series, symbolic a, b, x",
        format!("k <= n <= {n_max}, r <= {r_max}"),
    );
    let a = SequenceSpec::Symbolic(Family::A);
    let b = SequenceSpec::Symbolic(Family::B);
    let x = Scalar::Indeterminate;
    for r in 0..=r_max {
        let base = GfParams {
            r: Some(r),
            x: Some(x.clone()),
            a: Some(a.clone()),
            b: Some(b.clone()),
            ..Default::default()
        };
        let complete = gf_expand(GfFamily::CompleteGeneric, &base, n_max);
        for n in 0..=n_max {
            t.all_equal(
                || format!("complete n={n} r={r}"),
                (|| {
                    Ok(vec![
                        complete_r_lah_bell(n, r, &x, &a, &b)?,
                        complete.clone()?[n].clone(),
                    ])
                })(),
            );
        }
        for k in 0..=n_max {
            let incomplete = gf_expand(
                GfFamily::IncompleteGeneric,
                &GfParams {
                    k: Some(k),
                    ..base.clone()
                },
                n_max,
            );
            for n in k..=n_max {
                t.all_equal(
                    || format!("incomplete n={n} k={k} r={r}"),
                    (|| {
                        Ok(vec![
                            incomplete_r_lah_bell(n, k, r, &a, &b)?,
                            incomplete.clone()?[n].clone(),
                        ])
                    })(),
                );
            }
        }
    }
    t.finish()
}

/// Symbolic incomplete and complete r-Bell polynomials against their
/// generating functions, for exponents `rho <= 2 r_max`.
pub fn r_bell_oracle(n_max: usize, r_max: usize) -> Outcome {
    let rho_max = 2 * r_max;
    let mut t = Tally::new(
        "r-bell polynomials = series, symbolic a, b",
        format!("k <= n <= {n_max}, rho <= {rho_max}"),
    );
    let a = SequenceSpec::Symbolic(Family::A);
    let b = SequenceSpec::Symbolic(Family::B);
    for rho in 0..=rho_max {
        let base = GfParams {
            rho: Some(rho),
            a: Some(a.clone()),
            b: Some(b.clone()),
            ..Default::default()
        };
        let complete = gf_expand(GfFamily::CompleteRBell, &base, n_max);
        for n in 0..=n_max {
            t.all_equal(
                || format!("complete n={n} rho={rho}"),
                (|| {
                    Ok(vec![
                        complete_r_bell(n, rho, &a, &b)?,
                        complete.clone()?[n].clone(),
                    ])
                })(),
            );
        }
        for k in 0..=n_max {
            let incomplete = gf_expand(
                GfFamily::IncompleteRBell,
                &GfParams {
                    k: Some(k),
                    ..base.clone()
                },
                n_max,
            );
            for n in k..=n_max {
                t.all_equal(
                    || format!("incomplete n={n} k={k} rho={rho}"),
                    (|| {
                        Ok(vec![
                            incomplete_r_bell(n, k, rho, &a, &b)?,
                            incomplete.clone()?[n].clone(),
                        ])
                    })(),
                );
            }
        }
    }
    t.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in std::iter::once(Suite::All).chain(Suite::MEMBERS) {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("theorem99".parse::<Suite>().is_err());
    }

    #[test]
    fn degenerate_bounds_pass() {
        let v = run(Suite::All, Bounds { n_max: 0, r_max: 0 });
        assert!(v.passed, "{v:#?}");
        assert_eq!(v.outcomes.len(), 16);
    }

    #[test]
    fn small_bounds_pass_everywhere() {
        let v = run(Suite::All, Bounds { n_max: 5, r_max: 1 });
        assert!(v.passed, "{v:#?}");
        assert!(v.outcomes.iter().all(|o| o.cases > 0));
    }

    #[test]
    fn tally_reports_first_mismatch() {
        let mut t = Tally::new("demo", "n <= 2".into());
        t.all_equal(|| "n=0".into(), Ok(vec![1, 1]));
        t.all_equal(|| "n=1".into(), Ok(vec![1, 2]));
        t.all_equal(|| "n=2".into(), Ok(vec![3, 4]));
        let o = t.finish();
        assert!(!o.passed);
        assert_eq!(o.cases, 3);
        assert_eq!(o.counterexample.as_deref(), Some("n=1: 1 vs 2"));
    }

    #[test]
    fn errors_count_as_failures() {
        let mut t = Tally::new("demo", String::new());
        t.all_equal::<i32>(|| "n=0".into(), Err(Error::ZeroOrder));
        assert!(!t.finish().passed);
    }

    #[test]
    fn verdict_json_round_trips() {
        let v = run(Suite::Theorem1, Bounds { n_max: 4, r_max: 0 });
        let text = serde_json::to_string(&v).unwrap();
        assert_eq!(serde_json::from_str::<Verdict>(&text).unwrap(), v);
    }
}
