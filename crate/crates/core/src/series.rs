//! Truncated formal power series in `t` with polynomial coefficients.
//!
//! A series of order `N` is stored on the exponential lattice: position `n`
//! holds `n! * [t^n]`. Products become binomial convolutions, derivatives
//! become shifts, and every series this crate builds (ordinary sequences,
//! exponential sequences, their products, powers and exponentials) stays in
//! the integer polynomial ring. Ordinary coefficients are recovered by exact
//! division on the way out.
//!
//! These series are the independent check for every closed form in
//! [`crate::bell`] and [`crate::exact`]; see [`gf_expand`].

use crate::bell::{complete_bell, Scalar, SequenceSpec};
use crate::error::{Error, Result};
use crate::exact::{binomial, factorial, factorial_table, ExactInteger};
use crate::poly::Polynomial;

/// How sequence values map to series coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesKind {
    /// value at `t^j`
    Ordinary,
    /// value at `t^j / j!`
    Exponential,
}

/// First power of `t` that receives a sequence value.
///
/// `One` gives `v_1 t + v_2 t^2 + ...`; `Zero` gives `v_1 + v_2 t + ...`,
/// the shifted shape `sum_j b_{j+1} t^j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesStart {
    Zero,
    One,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    order: usize,
    lattice: Vec<Polynomial>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            order,
            lattice: vec![Polynomial::zero(); order + 1],
        }
    }

    pub fn constant(c: Polynomial, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.lattice[0] = c;
        s
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Polynomial::one(), order)
    }

    /// `t^power`, truncated.
    pub fn t_power(power: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if power <= order {
            s.lattice[power] = Polynomial::constant(factorial(power));
        }
        s
    }

    /// Builds `sum_j v_{j'} t^j` (or `t^j/j!`) with `j' = j` for
    /// [`SeriesStart::One`] and `j' = j + 1` for [`SeriesStart::Zero`].
    pub fn from_sequence(
        spec: &SequenceSpec,
        kind: SeriesKind,
        start: SeriesStart,
        order: usize,
    ) -> Result<Self> {
        let fact = factorial_table(order);
        let mut s = Self::zero(order);
        for (j, (slot, j_fact)) in s.lattice.iter_mut().zip(&fact).enumerate() {
            let index = match start {
                SeriesStart::One if j == 0 => continue,
                SeriesStart::One => j,
                SeriesStart::Zero => j + 1,
            };
            let v = spec.term(index)?;
            *slot = match kind {
                SeriesKind::Ordinary => v.scale(j_fact),
                SeriesKind::Exponential => v,
            };
        }
        Ok(s)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// `n! * [t^n]`, the exponential-generating-function coefficient.
    pub fn egf_coefficient(&self, n: usize) -> Result<Polynomial> {
        self.lattice.get(n).cloned().ok_or(Error::OrderExceeded {
            requested: n,
            order: self.order,
        })
    }

    /// `[t^n]`; fails if it is not an integer polynomial.
    pub fn ordinary_coefficient(&self, n: usize) -> Result<Polynomial> {
        self.egf_coefficient(n)?.div_exact(&factorial(n))
    }

    /// All exponential coefficients `0..=order`.
    pub fn egf_coefficients(&self) -> &[Polynomial] {
        &self.lattice
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order);
        TruncatedSeries {
            order,
            lattice: self.lattice[..=order].to_vec(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        TruncatedSeries {
            order,
            lattice: (0..=order)
                .map(|n| &self.lattice[n] + &other.lattice[n])
                .collect(),
        }
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &Polynomial) -> Self {
        TruncatedSeries {
            order: self.order,
            lattice: self.lattice.iter().map(|p| p * c).collect(),
        }
    }

    /// Divides every coefficient by `d`, which must divide them exactly.
    pub fn div_exact(&self, d: &ExactInteger) -> Result<Self> {
        Ok(TruncatedSeries {
            order: self.order,
            lattice: self
                .lattice
                .iter()
                .map(|p| p.div_exact(d))
                .collect::<Result<_>>()?,
        })
    }

    /// Cauchy product, truncated at the smaller order.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        let mut lattice = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut c = Polynomial::zero();
            for i in 0..=n {
                let (a, b) = (&self.lattice[i], &other.lattice[n - i]);
                if a.is_zero() || b.is_zero() {
                    continue;
                }
                c += &(a * b).scale(&binomial(n, i as i64));
            }
            lattice.push(c);
        }
        TruncatedSeries { order, lattice }
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Self::one(self.order);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// `sum_{k<=N} s^k / k!`; requires a zero constant term, so the sum is
    /// exact at the truncation order.
    pub fn exp(&self) -> Result<Self> {
        if !self.lattice[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let mut total = Self::one(self.order);
        // term = s^k / k!, advanced as term * s / k
        let mut term = Self::one(self.order);
        for k in 1..=self.order {
            term = term.mul(self).div_exact(&ExactInteger::from(k))?;
            total = total.add(&term);
        }
        Ok(total)
    }

    /// `d/dt`; the order drops by one.
    pub fn derivative(&self) -> Result<Self> {
        if self.order == 0 {
            return Err(Error::ZeroOrder);
        }
        Ok(TruncatedSeries {
            order: self.order - 1,
            lattice: self.lattice[1..].to_vec(),
        })
    }
}

/// Outcome of [`faa_di_bruno_check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaaDiBrunoReport {
    pub m: usize,
    /// `d^m/dt^m exp(t/(1-t))` at `t = 0`, by repeated differentiation.
    pub derivative_route: ExactInteger,
    /// `B_m(1!, 2!, ..., m!)`.
    pub bell_route: ExactInteger,
    /// `f^(j)(0)` for `f = t/(1-t)`, `j = 1..=m`, by repeated differentiation.
    pub inner_derivatives: Vec<ExactInteger>,
    pub passed: bool,
}

/// Checks `d^m/dt^m e^{f(t)} = e^{f(t)} B_m(f', ..., f^(m))` at `t = 0` for
/// `f(t) = t/(1-t)`, working with series truncated at `order`.
///
/// The derivatives of `f` at zero are read off the series as well and must
/// equal `j!`.
pub fn faa_di_bruno_check(m: usize, order: usize) -> Result<FaaDiBrunoReport> {
    if m > order {
        return Err(Error::OrderExceeded {
            requested: m,
            order,
        });
    }
    let constant_of = |s: &TruncatedSeries| -> ExactInteger {
        s.egf_coefficient(0)
            .expect("order >= 0")
            .as_constant()
            .expect("numeric series")
    };
    let f = TruncatedSeries::from_sequence(
        &SequenceSpec::Ones,
        SeriesKind::Ordinary,
        SeriesStart::One,
        order,
    )?;
    let mut outer = f.exp()?;
    for _ in 0..m {
        outer = outer.derivative()?;
    }
    let derivative_route = constant_of(&outer);

    let mut inner_derivatives = Vec::with_capacity(m);
    let mut inner = f;
    for _ in 0..m {
        inner = inner.derivative()?;
        inner_derivatives.push(constant_of(&inner));
    }

    let bell_route = complete_bell(m, &SequenceSpec::Factorials)?
        .as_constant()
        .expect("numeric sequence");
    let inner_ok = inner_derivatives
        .iter()
        .enumerate()
        .all(|(j, d)| *d == factorial(j + 1));
    Ok(FaaDiBrunoReport {
        m,
        passed: inner_ok && derivative_route == bell_route,
        derivative_route,
        bell_route,
        inner_derivatives,
    })
}

/// Generating functions that [`gf_expand`] can assemble.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GfFamily {
    /// `exp(t/(1-t))`
    LahBell,
    /// `exp(t/(1-t)) (1-t)^{-2r}`
    RLahBell,
    /// `(t/(1-t))^k / k!`
    Lah,
    /// `(t/(1-t))^k (1-t)^{-2r} / k!`
    RLah,
    /// `exp(x t/(1-t)) (1-t)^{-2r}`
    RLahBellPoly,
    /// `(sum a_j t^j)^k / k! * (sum b_{i+1} t^i)^{2r}`
    IncompleteGeneric,
    /// `exp(x sum a_j t^j) * (sum b_{i+1} t^i)^{2r}`
    CompleteGeneric,
    /// `(sum a_j t^j/j!)^k / k! * (sum b_{i+1} t^i/i!)^rho`
    IncompleteRBell,
    /// `exp(sum a_j t^j/j!) * (sum b_{i+1} t^i/i!)^rho`
    CompleteRBell,
}

impl GfFamily {
    pub fn name(self) -> &'static str {
        match self {
            GfFamily::LahBell => "lah-bell",
            GfFamily::RLahBell => "r-lah-bell",
            GfFamily::Lah => "lah",
            GfFamily::RLah => "r-lah",
            GfFamily::RLahBellPoly => "r-lah-bell-poly",
            GfFamily::IncompleteGeneric => "incomplete-generic",
            GfFamily::CompleteGeneric => "complete-generic",
            GfFamily::IncompleteRBell => "incomplete-r-bell",
            GfFamily::CompleteRBell => "complete-r-bell",
        }
    }
}

/// Parameters for [`gf_expand`]; each family reads only what it needs.
#[derive(Debug, Clone, Default)]
pub struct GfParams {
    pub k: Option<usize>,
    pub r: Option<usize>,
    pub rho: Option<usize>,
    pub x: Option<Scalar>,
    pub a: Option<SequenceSpec>,
    pub b: Option<SequenceSpec>,
}

impl GfParams {
    fn need<'a, T>(
        &'a self,
        family: GfFamily,
        param: &'static str,
        v: &'a Option<T>,
    ) -> Result<&'a T> {
        v.as_ref().ok_or(Error::MissingParameter {
            family: family.name(),
            param,
        })
    }
}

/// Exponential coefficients `n! [t^n]` for `n = 0..=order` of the chosen
/// generating function.
pub fn gf_expand(family: GfFamily, params: &GfParams, order: usize) -> Result<Vec<Polynomial>> {
    let ones = SequenceSpec::Ones;
    let geometric_from_t =
        || TruncatedSeries::from_sequence(&ones, SeriesKind::Ordinary, SeriesStart::One, order);
    let geometric =
        || TruncatedSeries::from_sequence(&ones, SeriesKind::Ordinary, SeriesStart::Zero, order);
    let k = || params.need(family, "k", &params.k).copied();
    let r = || params.need(family, "r", &params.r).copied();
    let rho = || params.need(family, "rho", &params.rho).copied();
    let x = || {
        params
            .need(family, "x", &params.x)
            .map(Scalar::to_polynomial)
    };
    let a = || params.need(family, "a", &params.a);
    let b = || params.need(family, "b", &params.b);

    let series = match family {
        GfFamily::LahBell => geometric_from_t()?.exp()?,
        GfFamily::RLahBell => geometric_from_t()?.exp()?.mul(&geometric()?.pow(2 * r()?)),
        GfFamily::Lah => {
            let k = k()?;
            geometric_from_t()?.pow(k).div_exact(&factorial(k))?
        }
        GfFamily::RLah => {
            let k = k()?;
            geometric_from_t()?
                .pow(k)
                .mul(&geometric()?.pow(2 * r()?))
                .div_exact(&factorial(k))?
        }
        GfFamily::RLahBellPoly => geometric_from_t()?
            .scale(&x()?)
            .exp()?
            .mul(&geometric()?.pow(2 * r()?)),
        GfFamily::IncompleteGeneric => {
            let k = k()?;
            let inner = TruncatedSeries::from_sequence(
                a()?,
                SeriesKind::Ordinary,
                SeriesStart::One,
                order,
            )?;
            let outer = TruncatedSeries::from_sequence(
                b()?,
                SeriesKind::Ordinary,
                SeriesStart::Zero,
                order,
            )?;
            inner
                .pow(k)
                .div_exact(&factorial(k))?
                .mul(&outer.pow(2 * r()?))
        }
        GfFamily::CompleteGeneric => {
            let inner = TruncatedSeries::from_sequence(
                a()?,
                SeriesKind::Ordinary,
                SeriesStart::One,
                order,
            )?;
            let outer = TruncatedSeries::from_sequence(
                b()?,
                SeriesKind::Ordinary,
                SeriesStart::Zero,
                order,
            )?;
            inner.scale(&x()?).exp()?.mul(&outer.pow(2 * r()?))
        }
        GfFamily::IncompleteRBell => {
            let k = k()?;
            let inner = TruncatedSeries::from_sequence(
                a()?,
                SeriesKind::Exponential,
                SeriesStart::One,
                order,
            )?;
            let outer = TruncatedSeries::from_sequence(
                b()?,
                SeriesKind::Exponential,
                SeriesStart::Zero,
                order,
            )?;
            inner
                .pow(k)
                .div_exact(&factorial(k))?
                .mul(&outer.pow(rho()?))
        }
        GfFamily::CompleteRBell => {
            let inner = TruncatedSeries::from_sequence(
                a()?,
                SeriesKind::Exponential,
                SeriesStart::One,
                order,
            )?;
            let outer = TruncatedSeries::from_sequence(
                b()?,
                SeriesKind::Exponential,
                SeriesStart::Zero,
                order,
            )?;
            inner.exp()?.mul(&outer.pow(rho()?))
        }
    };
    Ok(series.lattice)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::lah_bell_number;
    use crate::poly::Family;
    use proptest::prelude::*;

    fn num(v: i64) -> Polynomial {
        Polynomial::constant(v)
    }

    fn ordinary(s: &TruncatedSeries) -> Vec<Polynomial> {
        (0..=s.order())
            .map(|n| s.ordinary_coefficient(n).unwrap())
            .collect()
    }

    fn nums(v: &[i64]) -> Vec<Polynomial> {
        v.iter().map(|&x| num(x)).collect()
    }

    fn geometric(start: SeriesStart, order: usize) -> TruncatedSeries {
        TruncatedSeries::from_sequence(&SequenceSpec::Ones, SeriesKind::Ordinary, start, order)
            .unwrap()
    }

    #[test]
    fn from_sequence_examples() {
        assert_eq!(
            ordinary(&geometric(SeriesStart::One, 4)),
            nums(&[0, 1, 1, 1, 1])
        );
        assert_eq!(
            ordinary(&geometric(SeriesStart::Zero, 4)),
            nums(&[1, 1, 1, 1, 1])
        );
        let a = TruncatedSeries::from_sequence(
            &SequenceSpec::Symbolic(Family::A),
            SeriesKind::Ordinary,
            SeriesStart::One,
            2,
        )
        .unwrap();
        let coeffs: Vec<String> = ordinary(&a).iter().map(|p| p.to_string()).collect();
        assert_eq!(coeffs, ["0", "a1", "a2"]);
        let e = TruncatedSeries::from_sequence(
            &SequenceSpec::Ones,
            SeriesKind::Exponential,
            SeriesStart::Zero,
            3,
        )
        .unwrap();
        assert_eq!(e.egf_coefficients(), nums(&[1, 1, 1, 1]).as_slice());
        assert!(e.ordinary_coefficient(2).is_err());
    }

    #[test]
    fn multiplication_examples() {
        let s = geometric(SeriesStart::One, 6);
        assert_eq!(s.mul(&TruncatedSeries::one(6)), s);
        // direct convolution: [t^n] = #{(i, j): i >= 1, i + j = n} = n
        let prod = s.mul(&geometric(SeriesStart::Zero, 6));
        assert_eq!(ordinary(&prod), nums(&[0, 1, 2, 3, 4, 5, 6]));
        let t = TruncatedSeries::t_power(1, 5);
        assert_eq!(t.mul(&t), TruncatedSeries::t_power(2, 5));
        // truncates to the smaller order
        assert_eq!(s.mul(&TruncatedSeries::one(3)).order(), 3);
    }

    #[test]
    fn power_examples() {
        let g = geometric(SeriesStart::Zero, 6);
        assert_eq!(g.pow(0), TruncatedSeries::one(6));
        assert_eq!(ordinary(&g.pow(2)), nums(&[1, 2, 3, 4, 5, 6, 7]));
        let t = TruncatedSeries::t_power(1, 6);
        assert_eq!(t.pow(3), TruncatedSeries::t_power(3, 6));
        assert_eq!(t.pow(7), TruncatedSeries::zero(6));
    }

    #[test]
    fn exponential_examples() {
        assert_eq!(
            TruncatedSeries::zero(5).exp().unwrap(),
            TruncatedSeries::one(5)
        );
        let t = TruncatedSeries::t_power(1, 8);
        assert_eq!(
            t.exp().unwrap().egf_coefficients(),
            vec![num(1); 9].as_slice()
        );
        let lb = geometric(SeriesStart::One, 8).exp().unwrap();
        assert_eq!(lb.egf_coefficient(0).unwrap(), num(1));
        assert_eq!(lb.egf_coefficient(3).unwrap(), num(13));
        assert_eq!(
            TruncatedSeries::one(3).exp(),
            Err(Error::NonzeroConstantTerm)
        );
    }

    #[test]
    fn coefficient_errors() {
        let s = geometric(SeriesStart::One, 3);
        assert_eq!(
            s.egf_coefficient(4),
            Err(Error::OrderExceeded {
                requested: 4,
                order: 3
            })
        );
        assert_eq!(TruncatedSeries::one(0).derivative(), Err(Error::ZeroOrder));
    }

    #[test]
    fn derivative_examples() {
        let t2 = TruncatedSeries::t_power(2, 4);
        assert_eq!(
            t2.derivative().unwrap(),
            TruncatedSeries::t_power(1, 3).scale(&num(2))
        );
        assert_eq!(
            TruncatedSeries::constant(num(9), 4).derivative().unwrap(),
            TruncatedSeries::zero(3)
        );
        let f = geometric(SeriesStart::One, 5);
        assert_eq!(f.derivative().unwrap().egf_coefficient(0).unwrap(), num(1));
    }

    #[test]
    fn derivative_coefficient_duality() {
        let corpus = [
            geometric(SeriesStart::One, 9),
            geometric(SeriesStart::Zero, 9).pow(3),
            geometric(SeriesStart::One, 9).exp().unwrap(),
            TruncatedSeries::from_sequence(
                &SequenceSpec::Symbolic(Family::Y),
                SeriesKind::Ordinary,
                SeriesStart::Zero,
                9,
            )
            .unwrap()
            .pow(2),
        ];
        for s in &corpus {
            for m in 0..=8 {
                let mut d = s.clone();
                for _ in 0..m {
                    d = d.derivative().unwrap();
                }
                let at_zero = d.egf_coefficient(0).unwrap();
                assert_eq!(at_zero, s.egf_coefficient(m).unwrap());
                if let Ok(coeff) = s.ordinary_coefficient(m) {
                    assert_eq!(at_zero, coeff.scale(&factorial(m)));
                }
            }
        }
    }

    #[test]
    fn faa_di_bruno_examples() {
        let r = faa_di_bruno_check(1, 3).unwrap();
        assert!(r.passed);
        assert_eq!(r.derivative_route, ExactInteger::from(1));
        let r = faa_di_bruno_check(2, 2).unwrap();
        assert!(r.passed);
        assert_eq!(r.bell_route, ExactInteger::from(3));
        let r = faa_di_bruno_check(6, 7).unwrap();
        assert!(r.passed);
        assert_eq!(r.derivative_route, lah_bell_number(6));
        assert!(faa_di_bruno_check(5, 4).is_err());
    }

    #[test]
    fn gf_examples() {
        let lah2 = gf_expand(
            GfFamily::Lah,
            &GfParams {
                k: Some(2),
                ..Default::default()
            },
            4,
        )
        .unwrap();
        assert_eq!(lah2, nums(&[0, 0, 1, 6, 36]));
        let rlb = gf_expand(
            GfFamily::RLahBell,
            &GfParams {
                r: Some(1),
                ..Default::default()
            },
            2,
        )
        .unwrap();
        assert_eq!(rlb, nums(&[1, 3, 13]));
        let rlah = gf_expand(
            GfFamily::RLah,
            &GfParams {
                k: Some(1),
                r: Some(1),
                ..Default::default()
            },
            2,
        )
        .unwrap();
        assert_eq!(rlah[2], num(6));
        assert_eq!(
            gf_expand(GfFamily::RLah, &GfParams::default(), 3),
            Err(Error::MissingParameter {
                family: "r-lah",
                param: "k"
            })
        );
    }

    #[test]
    fn truncation_is_stable() {
        let params = GfParams {
            k: Some(2),
            r: Some(1),
            x: Some(Scalar::Indeterminate),
            a: Some(SequenceSpec::Symbolic(Family::A)),
            b: Some(SequenceSpec::Symbolic(Family::B)),
            ..Default::default()
        };
        for family in [
            GfFamily::RLahBellPoly,
            GfFamily::IncompleteGeneric,
            GfFamily::CompleteGeneric,
        ] {
            let long = gf_expand(family, &params, 7).unwrap();
            for short_order in 0..7 {
                let short = gf_expand(family, &params, short_order).unwrap();
                assert_eq!(short.as_slice(), &long[..=short_order]);
            }
        }
    }

    fn arb_zero_constant_series() -> impl Strategy<Value = TruncatedSeries> {
        (0usize..=10)
            .prop_flat_map(|order| (Just(order), proptest::collection::vec(-3i64..4, order + 1)))
            .prop_map(|(order, values)| {
                let spec =
                    SequenceSpec::Explicit(values.into_iter().map(ExactInteger::from).collect());
                TruncatedSeries::from_sequence(&spec, SeriesKind::Ordinary, SeriesStart::One, order)
                    .unwrap()
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn exp_turns_sums_into_products(s in arb_zero_constant_series(), u in arb_zero_constant_series()) {
            let lhs = s.add(&u).exp().unwrap();
            let rhs = s.exp().unwrap().mul(&u.exp().unwrap());
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn truncate_commutes_with_mul(s in arb_zero_constant_series(), u in arb_zero_constant_series(), cut in 0usize..10) {
            let full = s.mul(&u);
            prop_assert_eq!(full.truncate(cut), s.truncate(cut).mul(&u.truncate(cut)));
        }
    }
}
