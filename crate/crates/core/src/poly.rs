//! Sparse multivariate polynomials with exact integer coefficients.
//!
//! Variables come from five disjoint families: the indexed `x_i`, `a_i`,
//! `b_i`, `y_i`, and a lone scalar `x`. Terms are kept in a canonical graded
//! lexicographic order (variables ordered by family `x < a < b < y < x`-scalar,
//! then by index), highest term first when rendered.
//!
//! Text form: `3*x1*x2 + x3`, `x1^2 - x2^2`, `0`.
//! JSON form: `{"terms":[{"coeff":"3","monomial":{"x1":1,"x2":1}}]}`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeMap, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::ExactInteger;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    X,
    A,
    B,
    Y,
    ScalarX,
}

impl Family {
    fn letter(self) -> char {
        match self {
            Family::X | Family::ScalarX => 'x',
            Family::A => 'a',
            Family::B => 'b',
            Family::Y => 'y',
        }
    }
}

/// An indeterminate. The scalar `x` always carries index 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Variable {
    family: Family,
    index: u32,
}

impl Variable {
    /// Panics on index 0 for the indexed families.
    pub fn new(family: Family, index: u32) -> Self {
        if family == Family::ScalarX {
            return Variable { family, index: 1 };
        }
        assert!(index >= 1, "variable indices start at 1");
        Variable { family, index }
    }

    pub fn x(i: u32) -> Self {
        Self::new(Family::X, i)
    }

    pub fn a(i: u32) -> Self {
        Self::new(Family::A, i)
    }

    pub fn b(i: u32) -> Self {
        Self::new(Family::B, i)
    }

    pub fn y(i: u32) -> Self {
        Self::new(Family::Y, i)
    }

    pub fn scalar_x() -> Self {
        Self::new(Family::ScalarX, 1)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn index(&self) -> u32 {
        self.index
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::ScalarX => write!(f, "x"),
            fam => write!(f, "{}{}", fam.letter(), self.index),
        }
    }
}

impl FromStr for Variable {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad variable name `{s}`"));
        let mut chars = s.chars();
        let letter = chars.next().ok_or_else(bad)?;
        let digits = chars.as_str();
        if digits.is_empty() {
            return if letter == 'x' {
                Ok(Variable::scalar_x())
            } else {
                Err(bad())
            };
        }
        if !digits.bytes().all(|b| b.is_ascii_digit()) || digits.starts_with('0') {
            return Err(bad());
        }
        let index: u32 = digits.parse().map_err(|_| bad())?;
        let family = match letter {
            'x' => Family::X,
            'a' => Family::A,
            'b' => Family::B,
            'y' => Family::Y,
            _ => return Err(bad()),
        };
        Ok(Variable::new(family, index))
    }
}

/// A power product; variables sorted ascending, exponents positive.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(Variable, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: Variable) -> Self {
        Monomial(vec![(v, 1)])
    }

    /// Builds from arbitrary (variable, exponent) pairs, merging repeats
    /// and dropping zero exponents.
    pub fn from_powers<I: IntoIterator<Item = (Variable, u32)>>(powers: I) -> Self {
        let mut map: BTreeMap<Variable, u32> = BTreeMap::new();
        for (v, e) in powers {
            *map.entry(v).or_default() += e;
        }
        Monomial(map.into_iter().filter(|&(_, e)| e > 0).collect())
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn exponent(&self, v: Variable) -> u32 {
        self.0
            .binary_search_by(|(w, _)| w.cmp(&v))
            .map_or(0, |i| self.0[i].1)
    }

    pub fn powers(&self) -> impl Iterator<Item = (Variable, u32)> + '_ {
        self.0.iter().copied()
    }

    /// Splits off the power of `v`: `(exponent, rest)`.
    fn split(&self, v: Variable) -> (u32, Monomial) {
        let e = self.exponent(v);
        let rest = Monomial(self.0.iter().copied().filter(|&(w, _)| w != v).collect());
        (e, rest)
    }

    fn lex_cmp(&self, other: &Self) -> Ordering {
        let (mut i, mut j) = (0, 0);
        loop {
            match (self.0.get(i), other.0.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some(&(v, e)), Some(&(w, f))) => match v.cmp(&w) {
                    // the earlier variable is present on one side only
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => {
                        if e != f {
                            return e.cmp(&f);
                        }
                        i += 1;
                        j += 1;
                    }
                },
            }
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.lex_cmp(other))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Mul for &Monomial {
    type Output = Monomial;

    fn mul(self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            let (v, e) = self.0[i];
            let (w, f) = other.0[j];
            match v.cmp(&w) {
                Ordering::Less => {
                    out.push((v, e));
                    i += 1;
                }
                Ordering::Greater => {
                    out.push((w, f));
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((v, e + f));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Monomial(out)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        for (pos, &(v, e)) in self.0.iter().enumerate() {
            if pos > 0 {
                write!(f, "*")?;
            }
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

impl Serialize for Monomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (v, e) in &self.0 {
            map.serialize_entry(&v.to_string(), e)?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for Monomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = BTreeMap::<String, u32>::deserialize(deserializer)?;
        let mut powers = Vec::with_capacity(raw.len());
        for (name, e) in raw {
            if e == 0 {
                return Err(de::Error::custom(format!("zero exponent on {name}")));
            }
            powers.push((name.parse::<Variable>().map_err(de::Error::custom)?, e));
        }
        Ok(Monomial::from_powers(powers))
    }
}

/// Exact sparse polynomial. No zero coefficients are ever stored, so
/// structural equality is polynomial equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "PolynomialRepr", into = "PolynomialRepr")]
pub struct Polynomial {
    terms: BTreeMap<Monomial, ExactInteger>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(ExactInteger::one())
    }

    pub fn constant<C: Into<ExactInteger>>(c: C) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn var(v: Variable) -> Self {
        Self::term(1, Monomial::var(v))
    }

    pub fn term<C: Into<ExactInteger>>(c: C, m: Monomial) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c.into());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms highest first.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &ExactInteger)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> ExactInteger {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// The value of a constant polynomial; `None` if any variable occurs.
    pub fn as_constant(&self) -> Option<ExactInteger> {
        match self.terms.len() {
            0 => Some(ExactInteger::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn variables(&self) -> BTreeSet<Variable> {
        self.terms
            .keys()
            .flat_map(|m| m.powers().map(|(v, _)| v))
            .collect()
    }

    pub fn add_term(&mut self, m: Monomial, c: ExactInteger) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &ExactInteger) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    /// Divides every coefficient by `d`, which must divide all of them.
    pub fn div_exact(&self, d: &ExactInteger) -> Result<Polynomial> {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let (q, rem) = c.div_rem(d);
            if !rem.is_zero() {
                return Err(Error::NonIntegral {
                    context: "polynomial coefficient division",
                    value: format!("{c}/{d}"),
                });
            }
            terms.insert(m.clone(), q);
        }
        Ok(Polynomial { terms })
    }

    pub fn pow(&self, mut e: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Evaluates with every variable bound to an integer.
    pub fn eval(&self, assignment: &BTreeMap<Variable, ExactInteger>) -> Result<ExactInteger> {
        if let Some(v) = self
            .variables()
            .into_iter()
            .find(|v| !assignment.contains_key(v))
        {
            return Err(Error::MissingVariable(v));
        }
        let mut total = ExactInteger::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, e) in m.powers() {
                t *= num_traits::pow(assignment[&v].clone(), e as usize);
            }
            total += t;
        }
        Ok(total)
    }

    /// Replaces `var` by `value` everywhere.
    pub fn substitute(&self, var: Variable, value: &Polynomial) -> Polynomial {
        let mut powers: Vec<Polynomial> = vec![Polynomial::one()];
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let (e, rest) = m.split(var);
            if e == 0 {
                out.add_term(rest, c.clone());
                continue;
            }
            while powers.len() <= e as usize {
                let next = powers.last().unwrap() * value;
                powers.push(next);
            }
            for (pm, pc) in &powers[e as usize].terms {
                out.add_term(&rest * pm, c * pc);
            }
        }
        out
    }

    /// Substitutes several variables at once (values may mention the
    /// substituted variables without feedback).
    pub fn substitute_all(&self, map: &BTreeMap<Variable, Polynomial>) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(c.clone());
            for (v, e) in m.powers() {
                let factor = match map.get(&v) {
                    Some(p) => p.pow(e),
                    None => Polynomial::term(1, Monomial(vec![(v, e)])),
                };
                t = &t * &factor;
            }
            out += &t;
        }
        out
    }
}

impl From<ExactInteger> for Polynomial {
    fn from(c: ExactInteger) -> Self {
        Polynomial::constant(c)
    }
}

impl From<Variable> for Polynomial {
    fn from(v: Variable) -> Self {
        Polynomial::var(v)
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, other: &Polynomial) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out += other;
        out
    }
}

impl Add for Polynomial {
    type Output = Polynomial;

    fn add(mut self, other: Polynomial) -> Polynomial {
        self += &other;
        self
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        -&self
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, other: &Polynomial) -> Polynomial {
        self + &(-other)
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;

    fn sub(self, other: Polynomial) -> Polynomial {
        &self - &other
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, other: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            for (n, d) in &other.terms {
                out.add_term(m * n, c * d);
            }
        }
        out
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;

    fn mul(self, other: Polynomial) -> Polynomial {
        &self * &other
    }
}

impl std::iter::Sum for Polynomial {
    fn sum<I: Iterator<Item = Polynomial>>(iter: I) -> Polynomial {
        iter.fold(Polynomial::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (pos, (m, c)) in self.terms().enumerate() {
            let magnitude = c.abs();
            match (pos, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{magnitude}*{m}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Polynomial {
    type Err = Error;

    /// Parses the canonical text form; also accepts terms in any order,
    /// repeated factors and arbitrary spacing.
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty input".into()));
        }
        let (mut negative, mut start) = match compact.as_bytes()[0] {
            b'-' => (true, 1),
            _ => (false, 0),
        };
        let mut out = Polynomial::zero();
        for (i, ch) in compact.char_indices().skip(start) {
            if ch == '+' || ch == '-' {
                let (m, c) = parse_term(&compact[start..i])?;
                out.add_term(m, if negative { -c } else { c });
                negative = ch == '-';
                start = i + 1;
            }
        }
        let (m, c) = parse_term(&compact[start..])?;
        out.add_term(m, if negative { -c } else { c });
        Ok(out)
    }
}

fn parse_term(term: &str) -> Result<(Monomial, ExactInteger)> {
    if term.is_empty() {
        return Err(Error::Parse("empty term".into()));
    }
    let mut coeff = ExactInteger::one();
    let mut powers = Vec::new();
    for factor in term.split('*') {
        if factor.is_empty() {
            return Err(Error::Parse(format!("empty factor in `{term}`")));
        }
        if factor.bytes().all(|b| b.is_ascii_digit()) {
            coeff *= factor
                .parse::<ExactInteger>()
                .map_err(|e| Error::Parse(e.to_string()))?;
            continue;
        }
        let (name, exp) = match factor.split_once('^') {
            Some((name, exp)) => (
                name,
                exp.parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad exponent in `{factor}`")))?,
            ),
            None => (factor, 1),
        };
        powers.push((name.parse::<Variable>()?, exp));
    }
    Ok((Monomial::from_powers(powers), coeff))
}

#[derive(Serialize, Deserialize)]
struct PolynomialRepr {
    terms: Vec<TermRepr>,
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    coeff: String,
    monomial: Monomial,
}

impl From<Polynomial> for PolynomialRepr {
    fn from(p: Polynomial) -> Self {
        PolynomialRepr {
            terms: p
                .terms()
                .map(|(m, c)| TermRepr {
                    coeff: c.to_string(),
                    monomial: m.clone(),
                })
                .collect(),
        }
    }
}

impl TryFrom<PolynomialRepr> for Polynomial {
    type Error = Error;

    fn try_from(repr: PolynomialRepr) -> Result<Self> {
        let mut p = Polynomial::zero();
        for t in repr.terms {
            let c = t
                .coeff
                .parse::<ExactInteger>()
                .map_err(|e| Error::Parse(format!("coefficient `{}`: {e}", t.coeff)))?;
            p.add_term(t.monomial, c);
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn x(i: u32) -> Polynomial {
        Polynomial::var(Variable::x(i))
    }

    fn c(v: i64) -> Polynomial {
        Polynomial::constant(v)
    }

    fn int(v: i64) -> ExactInteger {
        ExactInteger::from(v)
    }

    #[test]
    fn addition() {
        assert!((&x(1) + &(-&x(1))).is_zero());
        assert_eq!((&x(1) + &x(2)).to_string(), "x1 + x2");
        let x1x2 = &x(1) * &x(2);
        assert_eq!(&x1x2 + &x1x2.scale(&int(2)), x1x2.scale(&int(3)));
    }

    #[test]
    fn multiplication() {
        assert_eq!(&x(1) * &x(1), x(1).pow(2));
        let p = &(&x(1) * &x(2)) + &c(7);
        assert_eq!(&p * &Polynomial::one(), p);
        let lhs = &(&x(1) + &x(2)) * &(&x(1) - &x(2));
        assert_eq!(lhs.to_string(), "x1^2 - x2^2");
    }

    #[test]
    fn scaling() {
        let p = &x(1) + &x(3);
        assert!(p.scale(&int(0)).is_zero());
        assert_eq!(p.scale(&int(1)), p);
        assert_eq!(x(1).scale(&int(3)).to_string(), "3*x1");
    }

    #[test]
    fn evaluation() {
        let p = &x(1).pow(2) + &x(2);
        let mut asg = BTreeMap::new();
        asg.insert(Variable::x(1), int(1));
        asg.insert(Variable::x(2), int(1));
        assert_eq!(p.eval(&asg).unwrap(), int(2));
        assert_eq!(Polynomial::zero().eval(&BTreeMap::new()).unwrap(), int(0));
        let q = (&x(1) * &x(2)).scale(&int(3));
        asg.insert(Variable::x(1), int(2));
        asg.insert(Variable::x(2), int(5));
        assert_eq!(q.eval(&asg).unwrap(), int(30));
    }

    #[test]
    fn evaluation_names_first_missing_variable() {
        let p = &(&x(3) + &x(5)) + &Polynomial::var(Variable::a(1));
        let mut asg = BTreeMap::new();
        asg.insert(Variable::x(3), int(1));
        assert_eq!(p.eval(&asg), Err(Error::MissingVariable(Variable::x(5))));
    }

    #[test]
    fn substitution() {
        assert_eq!(x(1).substitute(Variable::x(1), &x(2)), x(2));
        assert_eq!(
            x(1).pow(2).substitute(Variable::x(1), &x(1).scale(&int(2))),
            x(1).pow(2).scale(&int(4))
        );
        let p = &x(1) + &x(2);
        assert_eq!(p.substitute(Variable::x(3), &Polynomial::zero()), p);
        assert_eq!(p.substitute(Variable::x(2), &Polynomial::zero()), x(1));
    }

    #[test]
    fn canonical_display_order() {
        let p: Polynomial = "x3 + 3*x1*x2 + x1^3".parse().unwrap();
        assert_eq!(p.to_string(), "x1^3 + 3*x1*x2 + x3");
        let p: Polynomial = "3*x2^2 + 4*x1*x3".parse().unwrap();
        assert_eq!(p.to_string(), "4*x1*x3 + 3*x2^2");
        let p: Polynomial = "2*y1*y2 + x1*y1^2".parse().unwrap();
        assert_eq!(p.to_string(), "x1*y1^2 + 2*y1*y2");
        let p: Polynomial = "2*x + x^2 + 5 - a1*b2".parse().unwrap();
        assert_eq!(p.to_string(), "-a1*b2 + x^2 + 2*x + 5");
        assert_eq!(Polynomial::zero().to_string(), "0");
        assert_eq!((-x(1)).to_string(), "-x1");
        assert_eq!(c(-4).to_string(), "-4");
    }

    #[test]
    fn family_order() {
        let vars = [
            Variable::scalar_x(),
            Variable::y(1),
            Variable::b(2),
            Variable::a(7),
            Variable::x(9),
            Variable::x(1),
        ];
        let mut sorted = vars.to_vec();
        sorted.sort();
        let names: Vec<_> = sorted.iter().map(|v| v.to_string()).collect();
        assert_eq!(names, ["x1", "x9", "a7", "b2", "y1", "x"]);
    }

    #[test]
    fn parse_errors() {
        assert!("".parse::<Polynomial>().is_err());
        assert!("x0".parse::<Polynomial>().is_err());
        assert!("z1".parse::<Polynomial>().is_err());
        assert!("x1 +".parse::<Polynomial>().is_err());
        assert!("2**x1".parse::<Polynomial>().is_err());
    }

    #[test]
    fn json_schema() {
        let p: Polynomial = "3*x1*x2 + x3".parse().unwrap();
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(
            json,
            r#"{"terms":[{"coeff":"3","monomial":{"x1":1,"x2":1}},{"coeff":"1","monomial":{"x3":1}}]}"#
        );
        let zero = serde_json::to_string(&Polynomial::zero()).unwrap();
        assert_eq!(zero, r#"{"terms":[]}"#);
        let one = serde_json::to_string(&Polynomial::one()).unwrap();
        assert_eq!(one, r#"{"terms":[{"coeff":"1","monomial":{}}]}"#);
        assert!(serde_json::from_str::<Polynomial>(
            r#"{"terms":[{"coeff":"1","monomial":{"x1":0}}]}"#
        )
        .is_err());
    }

    #[test]
    fn big_coefficients_render_in_full() {
        let big = crate::exact::factorial(40);
        let p = x(1).scale(&big);
        assert_eq!(p.to_string(), format!("{big}*x1"));
        assert_eq!(p.to_string().parse::<Polynomial>().unwrap(), p);
    }

    fn arb_variable() -> impl Strategy<Value = Variable> {
        prop_oneof![
            (1u32..4).prop_map(Variable::x),
            (1u32..3).prop_map(Variable::a),
            (1u32..3).prop_map(Variable::b),
            (1u32..3).prop_map(Variable::y),
            Just(Variable::scalar_x()),
        ]
    }

    fn arb_poly() -> impl Strategy<Value = Polynomial> {
        let term = (
            -20i64..20,
            proptest::collection::vec((arb_variable(), 0u32..=5), 0..3),
        );
        proptest::collection::vec(term, 0..20).prop_map(|terms| {
            let mut p = Polynomial::zero();
            for (c, powers) in terms {
                p.add_term(Monomial::from_powers(powers), int(c));
            }
            p
        })
    }

    fn arb_assignment() -> impl Strategy<Value = BTreeMap<Variable, ExactInteger>> {
        proptest::collection::vec(-4i64..5, 12).prop_map(|vals| {
            let mut vars: Vec<Variable> = (1..4).map(Variable::x).collect();
            vars.extend((1..3).map(Variable::a));
            vars.extend((1..3).map(Variable::b));
            vars.extend((1..3).map(Variable::y));
            vars.push(Variable::scalar_x());
            vars.into_iter().zip(vals.into_iter().map(int)).collect()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn ring_axioms(p in arb_poly(), q in arb_poly(), r in arb_poly()) {
            prop_assert_eq!(&p + &q, &q + &p);
            prop_assert_eq!(&p * &q, &q * &p);
            prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
            prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
            prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
            prop_assert!((&p - &p).is_zero());
        }

        #[test]
        fn canonical_form_is_stable(p in arb_poly()) {
            let mut rebuilt = Polynomial::zero();
            for (m, c) in p.terms() {
                rebuilt.add_term(m.clone(), c.clone());
            }
            prop_assert_eq!(&rebuilt, &p);
            prop_assert!(p.terms().all(|(_, c)| !c.is_zero()));
            let text = p.to_string();
            let reparsed: Polynomial = text.parse().unwrap();
            prop_assert_eq!(reparsed.to_string(), text);
            prop_assert_eq!(reparsed, p);
        }

        #[test]
        fn json_round_trip(p in arb_poly()) {
            let json = serde_json::to_string(&p).unwrap();
            let back: Polynomial = serde_json::from_str(&json).unwrap();
            prop_assert_eq!(back, p);
        }

        #[test]
        fn eval_after_substitute(p in arb_poly(), v in arb_variable(), q in arb_poly(), asg in arb_assignment()) {
            let direct = {
                let mut asg2 = asg.clone();
                asg2.insert(v, q.eval(&asg).unwrap());
                p.eval(&asg2).unwrap()
            };
            prop_assert_eq!(p.substitute(v, &q).eval(&asg).unwrap(), direct);
        }

        #[test]
        fn eval_is_a_ring_homomorphism(p in arb_poly(), q in arb_poly(), asg in arb_assignment()) {
            let (pv, qv) = (p.eval(&asg).unwrap(), q.eval(&asg).unwrap());
            prop_assert_eq!((&p * &q).eval(&asg).unwrap(), &pv * &qv);
            prop_assert_eq!((&p + &q).eval(&asg).unwrap(), pv + qv);
        }
    }
}
