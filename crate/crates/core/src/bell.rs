//! Bell-type polynomial families.
//!
//! Every constructor takes its argument sequences as [`SequenceSpec`]s, so
//! the same code produces literal polynomials (symbolic families) and exact
//! numbers (constant sequences, returned as constant polynomials).
//!
//! The families and the sums that define them:
//!
//! | function | index set | term |
//! |---|---|---|
//! | [`incomplete_bell`] | `pi(n,k)` | `n!/prod(j_i! (i!)^j_i) * prod x_i^j_i` |
//! | [`complete_bell`] | partitions of `n` | same, all `k` at once |
//! | [`incomplete_lah_bell`] | `pi(n,k)` | `n!/prod j_i! * prod x_i^j_i` |
//! | [`complete_lah_bell`] | partitions of `n` | same, all `k` at once |
//! | [`incomplete_r_bell`] | `lambda(n,k,rho)` | `n!/prod k_i! prod (a_i/i!)^k_i * rho!/prod r_i! prod (b_{i+1}/i!)^r_i` |
//! | [`incomplete_r_lah_bell`] | `lambda(n,k,2r)` | `n!/prod k_i! prod a_i^k_i * (2r)!/prod r_i! prod b_{i+1}^r_i` |
//! | [`complete_r_lah_bell_expanded`] | partitions of `k`, compositions of `n-k` | `n!/prod m_i! * prod x_i^m_i * prod y_{l_j+1}` |

use std::collections::BTreeMap;

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{factorial, factorial_table, integral, rlah, ExactInteger, ExactRational};
use crate::partitions::{
    enumerate_lambda, enumerate_pi, partition_multiplicities, weak_compositions,
};
use crate::poly::{Family, Monomial, Polynomial, Variable};

/// The value (or indeterminate) at each index `i >= 1` of an input sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SequenceSpec {
    /// `1, 1, 1, ...`
    Ones,
    /// `1!, 2!, 3!, ...`
    Factorials,
    /// Given values; index `i` reads element `i - 1`.
    Explicit(Vec<ExactInteger>),
    /// `v_1, v_2, ...` for the family's variables. `Symbolic(ScalarX)` is the
    /// constant sequence `x, x, ...`.
    Symbolic(Family),
    /// The same polynomial at every index.
    Uniform(Polynomial),
    /// Given polynomials; index `i` reads element `i - 1`.
    Terms(Vec<Polynomial>),
}

impl SequenceSpec {
    /// Term at index `i >= 1`.
    pub fn term(&self, i: usize) -> Result<Polynomial> {
        assert!(i >= 1, "sequence indices start at 1");
        Ok(match self {
            SequenceSpec::Ones => Polynomial::one(),
            SequenceSpec::Factorials => Polynomial::constant(factorial(i)),
            SequenceSpec::Explicit(values) => Polynomial::constant(
                values
                    .get(i - 1)
                    .ok_or(Error::SequenceTooShort {
                        index: i,
                        len: values.len(),
                    })?
                    .clone(),
            ),
            SequenceSpec::Symbolic(family) => Polynomial::var(Variable::new(*family, i as u32)),
            SequenceSpec::Uniform(p) => p.clone(),
            SequenceSpec::Terms(terms) => terms
                .get(i - 1)
                .ok_or(Error::SequenceTooShort {
                    index: i,
                    len: terms.len(),
                })?
                .clone(),
        })
    }

    /// `weight(i) * term(i)` for `i = 1..=len`.
    pub fn weighted<F: Fn(usize) -> ExactInteger>(&self, len: usize, weight: F) -> Result<Self> {
        let terms = (1..=len)
            .map(|i| Ok(self.term(i)?.scale(&weight(i))))
            .collect::<Result<Vec<_>>>()?;
        Ok(SequenceSpec::Terms(terms))
    }
}

/// The lone variable `x` of the r-extended families: a number or the
/// indeterminate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Scalar {
    Value(ExactInteger),
    Indeterminate,
}

impl Scalar {
    pub fn to_polynomial(&self) -> Polynomial {
        match self {
            Scalar::Value(v) => Polynomial::constant(v.clone()),
            Scalar::Indeterminate => Polynomial::var(Variable::scalar_x()),
        }
    }
}

impl From<i64> for Scalar {
    fn from(v: i64) -> Self {
        Scalar::Value(v.into())
    }
}

// Lazily fetched sequence terms with cached powers.
struct Terms<'a> {
    spec: &'a SequenceSpec,
    powers: BTreeMap<(usize, usize), Polynomial>,
}

impl<'a> Terms<'a> {
    fn new(spec: &'a SequenceSpec) -> Self {
        Terms {
            spec,
            powers: BTreeMap::new(),
        }
    }

    fn pow(&mut self, i: usize, e: usize) -> Result<Polynomial> {
        if e == 0 {
            return Ok(Polynomial::one());
        }
        if let Some(p) = self.powers.get(&(i, e)) {
            return Ok(p.clone());
        }
        let p = if e == 1 {
            self.spec.term(i)?
        } else {
            &self.pow(i, e - 1)? * &self.pow(i, 1)?
        };
        self.powers.insert((i, e), p.clone());
        Ok(p)
    }

    /// `prod_{pos} term(pos + offset)^{counts[pos]}`.
    fn product(&mut self, counts: &[usize], offset: usize) -> Result<Polynomial> {
        let mut acc = Polynomial::one();
        for (pos, &c) in counts.iter().enumerate() {
            if c > 0 {
                acc = &acc * &self.pow(pos + offset, c)?;
            }
        }
        Ok(acc)
    }
}

/// Sums `coefficient * polynomial` with rational coefficients and insists
/// on an integral result.
#[derive(Default)]
struct RationalSum {
    terms: BTreeMap<Monomial, ExactRational>,
}

impl RationalSum {
    fn add(&mut self, coeff: &ExactRational, p: &Polynomial) {
        for (m, c) in p.terms() {
            let entry = self
                .terms
                .entry(m.clone())
                .or_insert_with(ExactRational::zero);
            *entry += coeff * ExactRational::from_integer(c.clone());
        }
    }

    fn finish(self, context: &'static str) -> Result<Polynomial> {
        let mut out = Polynomial::zero();
        for (m, c) in self.terms {
            out.add_term(m, integral(&c, context)?);
        }
        Ok(out)
    }
}

fn exact_div(num: &ExactInteger, den: &ExactInteger) -> ExactInteger {
    let (q, rem) = num.div_rem(den);
    assert!(rem.is_zero(), "Bell coefficient not integral: {num}/{den}");
    q
}

/// Coefficient `n! / prod(c_i! * (i!)^c_i)` for multiplicities `counts`
/// (`counts[0]` is the multiplicity of 1).
fn bell_coefficient(n: usize, counts: &[usize], fact: &[ExactInteger]) -> ExactInteger {
    let mut den = ExactInteger::one();
    for (pos, &c) in counts.iter().enumerate() {
        den *= &fact[c];
        den *= num_traits::pow(fact[pos + 1].clone(), c);
    }
    exact_div(&fact[n], &den)
}

fn multiplicity_coefficient(n: usize, counts: &[usize], fact: &[ExactInteger]) -> ExactInteger {
    let den: ExactInteger = counts.iter().map(|&c| &fact[c]).product();
    exact_div(&fact[n], &den)
}

/// Partial Bell polynomial `B_{n,k}(x_1, ..., x_{n-k+1})`; zero for `k > n`.
pub fn incomplete_bell(n: usize, k: usize, xs: &SequenceSpec) -> Result<Polynomial> {
    let fact = factorial_table(n + 1);
    let mut terms = Terms::new(xs);
    let mut out = Polynomial::zero();
    for w in enumerate_pi(n, k) {
        let coeff = bell_coefficient(n, &w.j, &fact);
        out += &terms.product(&w.j, 1)?.scale(&coeff);
    }
    Ok(out)
}

/// Complete Bell polynomial `B_n(x_1, ..., x_n)`, summed over all
/// partitions of `n` directly.
pub fn complete_bell(n: usize, xs: &SequenceSpec) -> Result<Polynomial> {
    let fact = factorial_table(n + 1);
    let mut terms = Terms::new(xs);
    let mut out = Polynomial::zero();
    for counts in partition_multiplicities(n) {
        let coeff = bell_coefficient(n, &counts, &fact);
        out += &terms.product(&counts, 1)?.scale(&coeff);
    }
    Ok(out)
}

/// Incomplete r-Bell polynomial `B^{(rho)}_{n+rho,k+rho}(a : b)`.
///
/// Terms carry `1/i!` factors, so they are accumulated as rationals; the
/// finished polynomial must come out integral.
pub fn incomplete_r_bell(
    n: usize,
    k: usize,
    rho: usize,
    a: &SequenceSpec,
    b: &SequenceSpec,
) -> Result<Polynomial> {
    let fact = factorial_table(n.max(rho) + 1);
    let (mut a_terms, mut b_terms) = (Terms::new(a), Terms::new(b));
    let mut sum = RationalSum::default();
    for w in enumerate_lambda(n, k, rho) {
        let mut den = ExactInteger::one();
        for (pos, &c) in w.k_part.iter().enumerate() {
            den *= &fact[c] * num_traits::pow(fact[pos + 1].clone(), c);
        }
        for (i, &c) in w.r_part.iter().enumerate() {
            den *= &fact[c] * num_traits::pow(fact[i].clone(), c);
        }
        let coeff = ExactRational::new(&fact[n] * &fact[rho], den);
        let p = &a_terms.product(&w.k_part, 1)? * &b_terms.product(&w.r_part, 1)?;
        sum.add(&coeff, &p);
    }
    sum.finish("incomplete r-Bell polynomial")
}

/// Complete r-Bell polynomial: `sum_{k=0}^{n}` of the incomplete ones.
pub fn complete_r_bell(
    n: usize,
    rho: usize,
    a: &SequenceSpec,
    b: &SequenceSpec,
) -> Result<Polynomial> {
    (0..=n).map(|k| incomplete_r_bell(n, k, rho, a, b)).sum()
}

/// Incomplete Lah-Bell polynomial `B^L_{n,k}`: the `pi(n,k)` sum with
/// coefficients `n!/prod j_i!`.
pub fn incomplete_lah_bell(n: usize, k: usize, xs: &SequenceSpec) -> Result<Polynomial> {
    let fact = factorial_table(n.max(1));
    let mut terms = Terms::new(xs);
    let mut out = Polynomial::zero();
    for w in enumerate_pi(n, k) {
        let coeff = multiplicity_coefficient(n, &w.j, &fact);
        out += &terms.product(&w.j, 1)?.scale(&coeff);
    }
    Ok(out)
}

/// Complete Lah-Bell polynomial `B^L_n`, summed over all partitions of `n`.
pub fn complete_lah_bell(n: usize, xs: &SequenceSpec) -> Result<Polynomial> {
    let fact = factorial_table(n.max(1));
    let mut terms = Terms::new(xs);
    let mut out = Polynomial::zero();
    for counts in partition_multiplicities(n) {
        let coeff = multiplicity_coefficient(n, &counts, &fact);
        out += &terms.product(&counts, 1)?.scale(&coeff);
    }
    Ok(out)
}

/// Incomplete r-extended Lah-Bell polynomial `B^L_{n+2r,k+2r}(a : b)`,
/// the `lambda(n,k,2r)` sum. Integer arithmetic throughout.
pub fn incomplete_r_lah_bell(
    n: usize,
    k: usize,
    r: usize,
    a: &SequenceSpec,
    b: &SequenceSpec,
) -> Result<Polynomial> {
    let rho = 2 * r;
    let fact = factorial_table(n.max(rho).max(1));
    let (mut a_terms, mut b_terms) = (Terms::new(a), Terms::new(b));
    let mut out = Polynomial::zero();
    for w in enumerate_lambda(n, k, rho) {
        let coeff = multiplicity_coefficient(n, &w.k_part, &fact)
            * multiplicity_coefficient(rho, &w.r_part, &fact);
        let p = &a_terms.product(&w.k_part, 1)? * &b_terms.product(&w.r_part, 1)?;
        out += &p.scale(&coeff);
    }
    Ok(out)
}

/// Complete r-extended Lah-Bell polynomial `B^{(L,2r)}_n(x | a : b)` as the
/// `x`-graded sum of incomplete pieces.
pub fn complete_r_lah_bell(
    n: usize,
    r: usize,
    x: &Scalar,
    a: &SequenceSpec,
    b: &SequenceSpec,
) -> Result<Polynomial> {
    let x = x.to_polynomial();
    let mut x_pow = Polynomial::one();
    let mut out = Polynomial::zero();
    for k in 0..=n {
        out += &(&x_pow * &incomplete_r_lah_bell(n, k, r, a, b)?);
        x_pow = &x_pow * &x;
    }
    Ok(out)
}

/// r-extended Lah-Bell polynomial `sum_k x^k L_r(n, k)`; `r = 0` gives the
/// Lah-Bell polynomial.
pub fn lah_bell_polynomial(n: usize, r: usize, x: &Scalar) -> Polynomial {
    let x = x.to_polynomial();
    let mut x_pow = Polynomial::one();
    let mut out = Polynomial::zero();
    for k in 0..=n {
        out += &x_pow.scale(&rlah(n, k, r));
        x_pow = &x_pow * &x;
    }
    out
}

/// `B^{(L,2r)}_n(1 | x : y)` from its explicit expansion
/// `n! sum_k sum_{m} sum_{l} prod x_i^{m_i} / prod m_i! * prod_j y_{l_j+1}`,
/// where `m` runs over partitions of `k` (as multiplicities) and `l` over
/// ordered `2r`-tuples summing to `n - k`.
pub fn complete_r_lah_bell_expanded(
    n: usize,
    r: usize,
    x: &SequenceSpec,
    y: &SequenceSpec,
) -> Result<Polynomial> {
    let fact = factorial_table(n.max(1));
    let (mut x_terms, mut y_terms) = (Terms::new(x), Terms::new(y));
    let mut sum = RationalSum::default();
    for k in 0..=n {
        let mut y_part = Polynomial::zero();
        for l in weak_compositions(n - k, 2 * r) {
            let mut prod = Polynomial::one();
            for &lj in &l {
                prod = &prod * &y_terms.pow(lj + 1, 1)?;
            }
            y_part += &prod;
        }
        if y_part.is_zero() {
            continue;
        }
        for m in partition_multiplicities(k) {
            let den: ExactInteger = m.iter().map(|&c| &fact[c]).product();
            let coeff = ExactRational::new(fact[n].clone(), den);
            sum.add(&coeff, &(&x_terms.product(&m, 1)? * &y_part));
        }
    }
    sum.finish("expanded complete r-extended Lah-Bell polynomial")
}

/// Moment `mu_n = B_n(kappa_1, ..., kappa_n)` from the first `n` cumulants.
pub fn moments_from_cumulants(kappas: &[ExactInteger], n: usize) -> Result<ExactInteger> {
    if kappas.len() < n {
        return Err(Error::CumulantsTooShort {
            needed: n,
            len: kappas.len(),
        });
    }
    let p = complete_bell(n, &SequenceSpec::Explicit(kappas.to_vec()))?;
    Ok(p.as_constant().expect("numeric sequence gives a constant"))
}
