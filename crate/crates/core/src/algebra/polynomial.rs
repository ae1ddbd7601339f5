use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::monomial::{Monomial, Symbol};
use super::{AlgebraError, Rational};

/// Sparse multivariate polynomial with rational coefficients.
///
/// Canonical by construction: no stored coefficient is zero, so structural
/// equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Polynomial::term(c, Monomial::one())
    }

    pub fn integer(n: impl Into<BigInt>) -> Self {
        Polynomial::constant(Rational::from_integer(n.into()))
    }

    pub fn var(sym: impl Into<Symbol>) -> Self {
        Polynomial::term(Rational::one(), Monomial::var(sym, 1))
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending canonical order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    /// The value of a polynomial with no symbols.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn as_integer(&self) -> Option<BigInt> {
        self.as_constant().filter(|c| c.is_integer()).map(|c| c.to_integer())
    }

    pub fn constant_term(&self) -> Rational {
        self.terms.get(&Monomial::one()).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn symbols(&self) -> BTreeSet<Symbol> {
        self.terms
            .keys()
            .flat_map(|m| m.factors().map(|(s, _)| s.clone()))
            .collect()
    }

    pub fn contains(&self, sym: &str) -> bool {
        self.terms.keys().any(|m| m.exponent(sym) > 0)
    }

    pub fn degree_in(&self, sym: &str) -> u32 {
        self.terms.keys().map(|m| m.exponent(sym)).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::total_degree).max().unwrap_or(0)
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn scale_int(&self, c: impl Into<BigInt>) -> Polynomial {
        self.scale(&Rational::from_integer(c.into()))
    }

    fn mul_monomial(&self, c: &Rational, m: &Monomial) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(n, a)| (n.mul(m), a * c)).collect(),
        }
    }

    /// `self^k`, with `p^0 = 1` for every `p` including zero.
    pub fn pow(&self, k: u32) -> Polynomial {
        let mut result = Polynomial::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Replaces every occurrence of `sym` by `value`.
    pub fn substitute(&self, sym: &str, value: &Polynomial) -> Polynomial {
        if !self.contains(sym) {
            return self.clone();
        }
        let mut powers: Vec<Polynomial> = vec![Polynomial::one()];
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let (e, rest) = m.split(sym);
            while powers.len() <= e as usize {
                let next = powers.last().unwrap() * value;
                powers.push(next);
            }
            let part = powers[e as usize].mul_monomial(c, &rest);
            out = out + part;
        }
        out
    }

    /// Formal partial derivative.
    pub fn derivative(&self, sym: &str) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let (e, rest) = m.split(sym);
            if e == 0 {
                continue;
            }
            let m = rest.mul(&Monomial::var(sym, e - 1));
            out.add_term(m, c * Rational::from_integer(BigInt::from(e)));
        }
        out
    }

    /// Evaluates at integer values; every symbol must be bound.
    pub fn eval_integer(&self, bindings: &[(&str, i64)]) -> Result<Rational, AlgebraError> {
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (s, e) in m.factors() {
                let b = bindings
                    .iter()
                    .find(|(name, _)| *name == s.name())
                    .ok_or_else(|| AlgebraError::UnboundSymbol(s.name().to_string()))?;
                v *= Rational::from_integer(BigInt::from(b.1).pow(e));
            }
            total += v;
        }
        Ok(total)
    }

    /// Coefficient of `sym^k`, as a polynomial free of `sym`.
    pub fn coefficient(&self, sym: &str, k: u32) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let (e, rest) = m.split(sym);
            if e == k {
                out.add_term(rest, c.clone());
            }
        }
        out
    }

    /// Keeps only monomials whose combined degree in `syms` is at most `max`.
    pub fn truncate_degree(&self, syms: &[&str], max: u32) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| syms.iter().map(|s| m.exponent(s)).sum::<u32>() <= max)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }
}

impl From<i64> for Polynomial {
    fn from(n: i64) -> Self {
        Polynomial::integer(n)
    }
}

impl From<BigInt> for Polynomial {
    fn from(n: BigInt) -> Self {
        Polynomial::integer(n)
    }
}

impl From<Rational> for Polynomial {
    fn from(c: Rational) -> Self {
        Polynomial::constant(c)
    }
}

impl<'a> Add<&'a Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &'a Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &'a Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl<'a> Mul<&'a Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &'a Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl Add<Polynomial> for Polynomial {
    type Output = Polynomial;
    fn add(mut self, rhs: Polynomial) -> Polynomial {
        if self.terms.len() < rhs.terms.len() {
            return rhs + self;
        }
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl Sub<Polynomial> for Polynomial {
    type Output = Polynomial;
    fn sub(mut self, rhs: Polynomial) -> Polynomial {
        for (m, c) in rhs.terms {
            self.add_term(m, -c);
        }
        self
    }
}

macro_rules! forward_mixed {
    ($tr:ident, $f:ident) => {
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: &Polynomial) -> Polynomial {
                (&self).$f(rhs)
            }
        }
        impl $tr<Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: Polynomial) -> Polynomial {
                self.$f(&rhs)
            }
        }
    };
}

forward_mixed!(Add, add);
forward_mixed!(Sub, sub);
forward_mixed!(Mul, mul);

impl Mul<Polynomial> for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl std::iter::Sum for Polynomial {
    fn sum<I: Iterator<Item = Polynomial>>(iter: I) -> Polynomial {
        iter.fold(Polynomial::zero(), |a, b| a + b)
    }
}

impl std::iter::Product for Polynomial {
    fn product<I: Iterator<Item = Polynomial>>(iter: I) -> Polynomial {
        iter.fold(Polynomial::one(), |a, b| &a * &b)
    }
}

pub(crate) fn fmt_rational(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Renders `|c| * m` without sign, e.g. `3λ`, `3/2 x^3`, `λ`, `2`.
pub(crate) fn fmt_unsigned_term(c: &Rational, m: &Monomial) -> String {
    let a = c.abs();
    if m.is_one() {
        fmt_rational(&a)
    } else if a.is_one() {
        m.to_string()
    } else if a.is_integer() {
        format!("{}{}", fmt_rational(&a), m)
    } else {
        format!("{} {}", fmt_rational(&a), m)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            f.write_str(&fmt_unsigned_term(c, m))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l() -> Polynomial {
        Polynomial::var("λ")
    }
    fn m() -> Polynomial {
        Polynomial::var("μ")
    }
    fn int(n: i64) -> Polynomial {
        Polynomial::from(n)
    }

    #[test]
    fn difference_of_squares() {
        let p = (l() + int(1)) * (l() - int(1));
        assert_eq!(p, l().pow(2) - int(1));
        assert_eq!(p.to_string(), "λ^2 - 1");
    }

    #[test]
    fn additive_identity_and_binomial() {
        let p = l().pow(3) + l().scale_int(3);
        assert_eq!(&p + &Polynomial::zero(), p);
        let sq = (l() + m()).pow(2);
        let expanded = l().pow(2) + (&l() * &m()).scale_int(2) + m().pow(2);
        assert!((sq - expanded).is_zero());
    }

    #[test]
    fn pow_conventions() {
        assert_eq!(l().pow(0), int(1));
        assert_eq!(Polynomial::zero().pow(0), int(1));
        assert_eq!(Polynomial::zero().pow(3), Polynomial::zero());
        assert_eq!((l() + int(1)).pow(2), l().pow(2) + l().scale_int(2) + int(1));
    }

    #[test]
    fn substitute_examples() {
        let p = l().pow(2) + int(1);
        assert_eq!(
            p.substitute("λ", &(m() + int(1))),
            m().pow(2) + m().scale_int(2) + int(2)
        );
        assert_eq!(l().substitute("λ", &Polynomial::zero()), Polynomial::zero());
        assert_eq!(p.substitute("λ", &l()), p);
    }

    #[test]
    fn derivative_examples() {
        let f3 = l().pow(3) + l().scale_int(3) + int(2);
        assert_eq!(f3.derivative("λ"), l().pow(2).scale_int(3) + int(3));
        assert!(int(7).derivative("λ").is_zero());
        assert_eq!((&l() * &m()).derivative("μ"), l());
    }

    #[test]
    fn eval_integer_and_unbound() {
        let f3 = l().pow(3) + l().scale_int(3) + int(2);
        assert_eq!(f3.eval_integer(&[("λ", 0)]).unwrap(), Rational::from_integer(2.into()));
        assert_eq!(f3.eval_integer(&[("λ", 1)]).unwrap(), Rational::from_integer(6.into()));
        let lm = &l() * &m();
        assert_eq!(
            lm.eval_integer(&[("λ", 2), ("μ", 3)]).unwrap(),
            Rational::from_integer(6.into())
        );
        match lm.eval_integer(&[("λ", 2)]) {
            Err(AlgebraError::UnboundSymbol(s)) => assert_eq!(s, "μ"),
            other => panic!("expected unbound symbol error, got {other:?}"),
        }
    }

    #[test]
    fn rendering() {
        let q11 = &l() * &m() + l().pow(2) + int(1);
        assert_eq!(q11.to_string(), "λμ + λ^2 + 1");
        let p = l().scale(&Rational::new(3.into(), 2.into())) - int(5);
        assert_eq!(p.to_string(), "3/2 λ - 5");
        assert_eq!((-l()).to_string(), "-λ");
        assert_eq!(Polynomial::zero().to_string(), "0");
        assert_eq!(
            Polynomial::constant(Rational::new((-1).into(), 3.into())).to_string(),
            "-1/3"
        );
    }

    #[test]
    fn coefficient_and_truncation() {
        let t = Polynomial::var("t");
        let x = Polynomial::var("x");
        let p = (&t + &x + int(1)).pow(3);
        assert_eq!(p.coefficient("t", 3), int(1));
        assert_eq!(p.coefficient("t", 1), (&x + &int(1)).pow(2).scale_int(3));
        let low = p.truncate_degree(&["t", "x"], 1);
        assert_eq!(low, (&t + &x).scale_int(3) + int(1));
    }
}
