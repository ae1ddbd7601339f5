//! Truncated formal power series in one distinguished variable.
//!
//! Coefficients are stored in plain form: the series `Σ c_i x^i + O(x^{N+1})`
//! keeps `c_0..c_N`. An exponential generating function `Σ a_n x^n/n!` is
//! therefore stored as `c_n = a_n/n!`; [`TruncatedSeries::from_egf`] and
//! [`TruncatedSeries::egf_values`] convert at the boundary.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::algebra::{fmt_unsigned_term, int, sym, Polynomial, Rational, Symbol};
use crate::sequences::factorial;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SeriesError {
    #[error("series variables differ: `{0}` vs `{1}`")]
    VariableMismatch(String, String),
    #[error("coefficient {index} mentions the series variable `{var}`")]
    CoefficientMentionsVariable { var: String, index: usize },
    #[error("a series needs at least one coefficient")]
    Empty,
    #[error("{0} requires a zero constant term")]
    NonzeroConstantTerm(&'static str),
    #[error("constant term {0} is not invertible")]
    NotInvertible(String),
    #[error("tree function coefficient {index} is {got}, expected {expected}")]
    TreeFunctionMismatch {
        index: usize,
        got: String,
        expected: String,
    },
    #[error("summand {k} has a nonzero coefficient at degree {degree} < {k}")]
    LowValuation { k: usize, degree: usize },
}

/// `Σ c_i var^i + O(var^{order+1})` with polynomial coefficients free of `var`.
#[derive(Clone)]
pub struct TruncatedSeries {
    var: Symbol,
    coeffs: Vec<Polynomial>,
}

impl TruncatedSeries {
    pub fn new(var: &str, coeffs: Vec<Polynomial>) -> Result<Self, SeriesError> {
        if coeffs.is_empty() {
            return Err(SeriesError::Empty);
        }
        if let Some(index) = coeffs.iter().position(|c| c.contains(var)) {
            return Err(SeriesError::CoefficientMentionsVariable {
                var: var.to_string(),
                index,
            });
        }
        Ok(TruncatedSeries {
            var: Symbol::new(var),
            coeffs,
        })
    }

    fn raw(var: Symbol, coeffs: Vec<Polynomial>) -> Self {
        debug_assert!(!coeffs.is_empty());
        TruncatedSeries { var, coeffs }
    }

    pub fn zero(var: &str, order: usize) -> Self {
        Self::raw(Symbol::new(var), vec![Polynomial::zero(); order + 1])
    }

    pub fn constant(var: &str, c: Polynomial, order: usize) -> Self {
        let mut s = Self::zero(var, order);
        s.coeffs[0] = c;
        s
    }

    pub fn one(var: &str, order: usize) -> Self {
        Self::constant(var, Polynomial::one(), order)
    }

    /// `c * var^k`.
    pub fn monomial(var: &str, k: usize, c: Polynomial, order: usize) -> Self {
        let mut s = Self::zero(var, order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// The series variable itself, `var + O(var^{order+1})`.
    pub fn variable(var: &str, order: usize) -> Self {
        Self::monomial(var, 1, Polynomial::one(), order)
    }

    /// Splits a polynomial by powers of `var`, dropping degrees above `order`.
    pub fn from_polynomial(var: &str, p: &Polynomial, order: usize) -> Self {
        let coeffs = (0..=order as u32).map(|k| p.coefficient(var, k)).collect();
        Self::raw(Symbol::new(var), coeffs)
    }

    /// The EGF `Σ a_n var^n / n!`.
    pub fn from_egf(var: &str, a: impl Fn(usize) -> Polynomial, order: usize) -> Self {
        let coeffs = (0..=order)
            .map(|n| a(n).scale(&Rational::new(BigInt::one(), factorial(n))))
            .collect();
        Self::raw(Symbol::new(var), coeffs)
    }

    /// `n! c_n` for every stored coefficient.
    pub fn egf_values(&self) -> Vec<Polynomial> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| c.scale_int(factorial(n)))
            .collect()
    }

    pub fn var(&self) -> &str {
        self.var.name()
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Polynomial] {
        &self.coeffs
    }

    /// Coefficient of `var^i`, or `None` beyond the truncation order.
    pub fn coeff(&self, i: usize) -> Option<&Polynomial> {
        self.coeffs.get(i)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Polynomial::is_zero)
    }

    /// Index of the first nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn truncate(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order.min(self.order()) + 1, Polynomial::zero());
        Self::raw(self.var.clone(), coeffs)
    }

    fn check_var(&self, other: &Self) -> Result<(), SeriesError> {
        if self.var != other.var {
            return Err(SeriesError::VariableMismatch(
                self.var.to_string(),
                other.var.to_string(),
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_var(other)?;
        let n = self.order().min(other.order());
        let coeffs = (0..=n).map(|i| &self.coeffs[i] + &other.coeffs[i]).collect();
        Ok(Self::raw(self.var.clone(), coeffs))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_var(other)?;
        let n = self.order().min(other.order());
        let coeffs = (0..=n).map(|i| &self.coeffs[i] - &other.coeffs[i]).collect();
        Ok(Self::raw(self.var.clone(), coeffs))
    }

    pub fn mul(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_var(other)?;
        let n = self.order().min(other.order());
        let mut coeffs = vec![Polynomial::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n + 1 - i) {
                if !b.is_zero() {
                    coeffs[i + j] = std::mem::take(&mut coeffs[i + j]) + a * b;
                }
            }
        }
        Ok(Self::raw(self.var.clone(), coeffs))
    }

    pub fn neg(&self) -> Self {
        Self::raw(self.var.clone(), self.coeffs.iter().map(|c| -c).collect())
    }

    /// Multiplies every coefficient by `c`, which must be free of the series
    /// variable.
    pub fn scale(&self, c: &Polynomial) -> Self {
        debug_assert!(!c.contains(self.var()));
        Self::raw(self.var.clone(), self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiplies by `var^k`, keeping the truncation order.
    pub fn shift(&self, k: usize) -> Self {
        let n = self.order();
        let coeffs = (0..=n)
            .map(|i| {
                if i < k {
                    Polynomial::zero()
                } else {
                    self.coeffs[i - k].clone()
                }
            })
            .collect();
        Self::raw(self.var.clone(), coeffs)
    }

    /// `a(c·var)`: coefficient `c_i` becomes `c_i c^i`.
    pub fn rescale(&self, c: &Polynomial) -> Self {
        let mut power = Polynomial::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            coeffs.push(a * &power);
            power = &power * c;
        }
        Self::raw(self.var.clone(), coeffs)
    }

    /// Formal derivative with respect to the series variable; the order drops
    /// by one (but never below zero).
    pub fn derivative(&self) -> Self {
        if self.order() == 0 {
            return Self::zero(self.var(), 0);
        }
        let coeffs = (1..=self.order()).map(|i| self.coeffs[i].scale_int(i)).collect();
        Self::raw(self.var.clone(), coeffs)
    }

    /// Multiplicative inverse by Newton iteration. The constant term must be
    /// a nonzero rational.
    pub fn reciprocal(&self) -> Result<Self, SeriesError> {
        let c0 = self.coeffs[0]
            .as_constant()
            .filter(|c| !c.is_zero())
            .ok_or_else(|| SeriesError::NotInvertible(self.coeffs[0].to_string()))?;
        let n = self.order();
        let mut inv = Self::constant(self.var(), Polynomial::constant(c0.recip()), 0);
        let mut prec = 1;
        while prec < n + 1 {
            prec = (2 * prec).min(n + 1);
            let a = self.truncate(prec - 1);
            let b = inv.pad(prec - 1);
            // b <- b (2 - a b)
            let ab = a.mul(&b)?;
            let two_minus = Self::constant(self.var(), int(2), prec - 1).sub(&ab)?;
            inv = b.mul(&two_minus)?;
        }
        Ok(inv)
    }

    /// Extends with zero coefficients up to `order`, or truncates down to it.
    pub fn pad(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order + 1, Polynomial::zero());
        Self::raw(self.var.clone(), coeffs)
    }

    pub fn div(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_var(other)?;
        self.mul(&other.reciprocal()?)
    }

    /// `outer(inner)`. The result lives in `inner`'s variable; `inner` must
    /// have a zero constant term.
    pub fn compose(outer: &Self, inner: &Self) -> Result<Self, SeriesError> {
        if !inner.coeffs[0].is_zero() {
            return Err(SeriesError::NonzeroConstantTerm("composition"));
        }
        let n = outer.order().min(inner.order());
        let inner = inner.truncate(n);
        let mut acc = Self::constant(inner.var(), outer.coeffs[n].clone(), n);
        for c in outer.coeffs[..n].iter().rev() {
            acc = acc.mul(&inner)?;
            acc.coeffs[0] = &acc.coeffs[0] + c;
        }
        Ok(acc)
    }

    /// `exp(g)` via `e_n = (1/n) Σ_{k=1}^{n} k g_k e_{n-k}`.
    pub fn exp(g: &Self) -> Result<Self, SeriesError> {
        if !g.coeffs[0].is_zero() {
            return Err(SeriesError::NonzeroConstantTerm("exp"));
        }
        let n = g.order();
        let mut e: Vec<Polynomial> = Vec::with_capacity(n + 1);
        e.push(Polynomial::one());
        for m in 1..=n {
            let mut acc = Polynomial::zero();
            for k in 1..=m {
                if !g.coeffs[k].is_zero() {
                    acc = acc + (&g.coeffs[k] * &e[m - k]).scale_int(k);
                }
            }
            e.push(acc.scale(&Rational::new(BigInt::one(), BigInt::from(m))));
        }
        Ok(Self::raw(g.var.clone(), e))
    }

    /// Evaluates the polynomial `p` at `sym := s`, i.e. `Σ_e p_e s^e` where
    /// `p_e` is the coefficient of `sym^e`. `p` must not mention the series
    /// variable.
    pub fn eval_polynomial(p: &Polynomial, sym: &str, s: &Self) -> Result<Self, SeriesError> {
        if p.contains(s.var()) {
            return Err(SeriesError::CoefficientMentionsVariable {
                var: s.var().to_string(),
                index: 0,
            });
        }
        let d = p.degree_in(sym);
        let mut acc = Self::constant(s.var(), p.coefficient(sym, d), s.order());
        for e in (0..d).rev() {
            acc = acc.mul(s)?;
            acc.coeffs[0] = &acc.coeffs[0] + &p.coefficient(sym, e);
        }
        Ok(acc)
    }

    /// Canonical text form, `c_0 + c_1 x + ... + O(x^{N+1})`.
    pub fn render(&self) -> String {
        self.to_string()
    }

    /// Coefficient strings `c_0..c_N`, as emitted in JSON output.
    pub fn coefficient_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(ToString::to_string).collect()
    }
}

/// Two series are equal when they share a variable and agree up to the
/// smaller of their truncation orders.
impl PartialEq for TruncatedSeries {
    fn eq(&self, other: &Self) -> bool {
        self.var == other.var && self.coeffs.iter().zip(&other.coeffs).all(|(a, b)| a == b)
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let x = self.var();
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let xp = match i {
                0 => String::new(),
                1 => x.to_string(),
                _ => format!("{x}^{i}"),
            };
            let (neg, body) = if c.num_terms() == 1 {
                let (m, a) = c.terms().next().unwrap();
                let body = if i == 0 {
                    fmt_unsigned_term(a, m)
                } else if m.is_one() && a.abs().is_one() {
                    xp
                } else if m.is_one() && a.is_integer() {
                    format!("{}{xp}", a.abs())
                } else {
                    format!("{} {xp}", fmt_unsigned_term(a, m))
                };
                (a.is_negative(), body)
            } else if i == 0 {
                (false, c.to_string())
            } else {
                (false, format!("({c}) {xp}"))
            };
            match (first, neg) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            f.write_str(&body)?;
            first = false;
        }
        let big_o = match self.order() + 1 {
            1 => format!("O({x})"),
            k => format!("O({x}^{k})"),
        };
        if first {
            f.write_str(&big_o)
        } else {
            write!(f, " + {big_o}")
        }
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncatedSeries({self})")
    }
}

/// `(1 + c·var)^e = Σ_j [e(e-1)⋯(e-j+1)/j!] c^j var^j` for an arbitrary
/// polynomial exponent `e`.
pub fn binomial_power(var: &str, c: &Polynomial, e: &Polynomial, order: usize) -> TruncatedSeries {
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut falling = Polynomial::one();
    let mut cpow = Polynomial::one();
    for j in 0..=order {
        coeffs.push((&falling * &cpow).scale(&Rational::new(BigInt::one(), factorial(j))));
        falling = &falling * &(e - &int(j as i64));
        cpow = &cpow * c;
    }
    TruncatedSeries::raw(Symbol::new(var), coeffs)
}

/// `1/(1 - c·var)`.
pub fn geometric(var: &str, c: &Polynomial, order: usize) -> TruncatedSeries {
    let coeffs = (0..=order as u32).map(|j| c.pow(j)).collect();
    TruncatedSeries::raw(Symbol::new(var), coeffs)
}

/// EGF of the shifted sequence `(a_{n+k})_n`, i.e. the `k`-th derivative of
/// `A(y) = Σ a_n y^n/n!`.
pub fn egf_shift(var: &str, a: &dyn Fn(usize) -> Polynomial, k: usize, order: usize) -> TruncatedSeries {
    TruncatedSeries::from_egf(var, |n| a(n + k), order)
}

/// The tree function `y = Σ_{n≥1} n^{n-1} x^n/n!` in the variable `x`.
///
/// Computed by iterating `y <- x·exp(y)` from `y = 0`; each pass fixes one
/// more coefficient. The result is checked against the closed form.
pub fn tree_function(order: usize) -> Result<TruncatedSeries, SeriesError> {
    let mut y = TruncatedSeries::zero(sym::X, order);
    for _ in 0..=order {
        y = TruncatedSeries::exp(&y)?.shift(1);
    }
    for (n, c) in y.coeffs.iter().enumerate() {
        let expected = tree_coefficient(n);
        if *c != expected {
            return Err(SeriesError::TreeFunctionMismatch {
                index: n,
                got: c.to_string(),
                expected: expected.to_string(),
            });
        }
    }
    Ok(y)
}

/// `n^{n-1}/n!`, with value 0 at `n = 0`.
pub fn tree_coefficient(n: usize) -> Polynomial {
    if n == 0 {
        return Polynomial::zero();
    }
    let num = BigInt::from(n).pow(n as u32 - 1);
    Polynomial::constant(Rational::new(num, factorial(n)))
}

/// `Σ_{k=0}^{order} (k+λ-1)^k x^k A^{(k)}(-kx)/k!` truncated at `order`, where
/// `A` is the EGF of `a` and `lam` is the value of λ.
pub fn abel_rhs(a: &dyn Fn(usize) -> Polynomial, lam: &Polynomial, order: usize) -> TruncatedSeries {
    let mut acc = TruncatedSeries::zero(sym::X, order);
    for k in 0..=order {
        let weight = (lam + &int(k as i64 - 1))
            .pow(k as u32)
            .scale(&Rational::new(BigInt::one(), factorial(k)));
        if weight.is_zero() {
            continue;
        }
        let term = egf_shift(sym::X, a, k, order - k)
            .rescale(&int(-(k as i64)))
            .pad(order)
            .shift(k)
            .scale(&weight);
        acc = acc.add(&term).expect("same variable");
    }
    acc
}

/// Sums `term(k)` for `k = 0..=order`, where every summand must vanish below
/// `var^k`. That valuation bound is what makes the truncated sum exact, so it
/// is checked rather than assumed.
pub fn valuation_sum<F>(var: &str, order: usize, mut term: F) -> Result<TruncatedSeries, SeriesError>
where
    F: FnMut(usize) -> Result<TruncatedSeries, SeriesError>,
{
    let mut acc = TruncatedSeries::zero(var, order);
    for k in 0..=order {
        let t = term(k)?;
        if let Some(v) = t.valuation() {
            if v < k {
                return Err(SeriesError::LowValuation { k, degree: v });
            }
        }
        acc = acc.add(&t)?;
    }
    Ok(acc)
}

/// Product of two polynomials with every monomial of combined degree in
/// `vars` above `total_degree` discarded.
pub fn bivariate_truncated_product(
    p: &Polynomial,
    q: &Polynomial,
    vars: (&str, &str),
    total_degree: u32,
) -> Polynomial {
    let vs = [vars.0, vars.1];
    let p = p.truncate_degree(&vs, total_degree);
    let q = q.truncate_degree(&vs, total_degree);
    (&p * &q).truncate_degree(&vs, total_degree)
}
