//! Exact sparse multivariate polynomials over the rationals.
//!
//! Every other module uses [`Polynomial`] as its coefficient domain. Symbols
//! are free-form strings; the conventional names used across the crate are
//! collected in [`sym`].

mod monomial;
mod polynomial;

pub use monomial::{Monomial, Symbol};
pub(crate) use polynomial::fmt_unsigned_term;
pub use polynomial::Polynomial;

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("no value bound for symbol `{0}`")]
    UnboundSymbol(String),
}

/// Names of the indeterminates used throughout the crate.
pub mod sym {
    pub const LAMBDA: &str = "λ";
    pub const MU: &str = "μ";
    pub const ALPHA: &str = "α";
    pub const BETA: &str = "β";
    pub const U: &str = "u";
    pub const V: &str = "v";
    pub const T: &str = "t";
    pub const X: &str = "x";
    /// The derangement umbra.
    pub const D: &str = "D";
    /// Parameters of the Abel binomial theorem.
    pub const A: &str = "a";
    pub const B: &str = "b";
    /// Grading variable for two-variable series checks.
    pub const S: &str = "s";
}

/// Shorthand for the polynomial consisting of a single symbol.
pub fn var(name: &str) -> Polynomial {
    Polynomial::var(name)
}

/// Shorthand for an integer constant polynomial.
pub fn int(n: i64) -> Polynomial {
    Polynomial::from(n)
}

/// Shorthand for an integer rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}
