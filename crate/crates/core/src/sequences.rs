//! Number and polynomial families: factorials, derangements, λ-factorials,
//! Charlier, Bell and Hermite polynomials, Stirling numbers of the second kind
//! and the bivariate family `Q_{n,m}(λ, μ)`.
//!
//! λ-factorials and `Q_{n,m}` come with several independent routes so they
//! can be cross-checked against each other and against enumeration.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{int, sym, var, Polynomial};
use crate::enumeration;

/// Largest `n` for which definitional routes enumerate `S_n`.
pub const ENUMERATION_CUTOFF: usize = 8;

const TABLE_ROWS: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SequenceError {
    #[error("n = {n} is above the enumeration cutoff {cutoff}")]
    AboveCutoff { n: usize, cutoff: usize },
    #[error("unknown route `{0}`")]
    UnknownRoute(String),
}

fn factorial_table() -> &'static [BigInt] {
    static TABLE: OnceLock<Vec<BigInt>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut t = vec![BigInt::one()];
        for n in 1..TABLE_ROWS {
            let next = &t[n - 1] * n;
            t.push(next);
        }
        t
    })
}

pub fn factorial(n: usize) -> BigInt {
    match factorial_table().get(n) {
        Some(v) => v.clone(),
        None => (TABLE_ROWS..=n).fold(factorial_table()[TABLE_ROWS - 1].clone(), |acc, k| acc * k),
    }
}

fn pascal_next(row: &[BigInt]) -> Vec<BigInt> {
    let mut next = Vec::with_capacity(row.len() + 1);
    next.push(BigInt::one());
    for w in row.windows(2) {
        next.push(&w[0] + &w[1]);
    }
    next.push(BigInt::one());
    next
}

fn pascal_table() -> &'static [Vec<BigInt>] {
    static TABLE: OnceLock<Vec<Vec<BigInt>>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut rows = vec![vec![BigInt::one()]];
        for n in 1..TABLE_ROWS {
            let next = pascal_next(&rows[n - 1]);
            rows.push(next);
        }
        rows
    })
}

/// `C(n, k)` by Pascal's rule; zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    if let Some(row) = pascal_table().get(n) {
        return row[k].clone();
    }
    let mut row = pascal_table()[TABLE_ROWS - 1].clone();
    for _ in TABLE_ROWS..=n {
        row = pascal_next(&row);
    }
    row[k].clone()
}

/// `C(n, k)` for signed arguments, zero outside `0 <= k <= n`.
pub fn binomial_signed(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        BigInt::zero()
    } else {
        binomial(n as usize, k as usize)
    }
}

/// `D_n` via `D_n = n D_{n-1} + (-1)^n`, `D_0 = 1`.
pub fn derangement(n: usize) -> BigInt {
    let mut d = BigInt::one();
    for k in 1..=n {
        d = d * k + if k % 2 == 0 { 1 } else { -1 };
    }
    d
}

/// How `f_n(λ)` is computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LambdaFactorialRoute {
    /// `Σ_{π ∈ S_n} λ^{fix(π)}` by enumerating permutations.
    DefinitionEnumeration,
    /// `Σ_k C(n,k) k! (λ-1)^{n-k}`.
    Binomial,
    /// `Σ_k C(n,k) D_k λ^{n-k}`.
    DerangementExpansion,
    /// `f_n = n f_{n-1} + (λ-1)^n`.
    Recurrence,
}

impl LambdaFactorialRoute {
    pub const ALL: [LambdaFactorialRoute; 4] = [
        LambdaFactorialRoute::DefinitionEnumeration,
        LambdaFactorialRoute::Binomial,
        LambdaFactorialRoute::DerangementExpansion,
        LambdaFactorialRoute::Recurrence,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            LambdaFactorialRoute::DefinitionEnumeration => "definition-enumeration",
            LambdaFactorialRoute::Binomial => "binomial-1.0b",
            LambdaFactorialRoute::DerangementExpansion => "derangement-1.0e",
            LambdaFactorialRoute::Recurrence => "recurrence-1.0c",
        }
    }
}

impl fmt::Display for LambdaFactorialRoute {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for LambdaFactorialRoute {
    type Err = SequenceError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|r| r.tag() == s)
            .ok_or_else(|| SequenceError::UnknownRoute(s.to_string()))
    }
}

/// `f_n(λ)` by the requested route.
pub fn lambda_factorial(n: usize, route: LambdaFactorialRoute) -> Result<Polynomial, SequenceError> {
    let lam = var(sym::LAMBDA);
    let p = match route {
        LambdaFactorialRoute::DefinitionEnumeration => {
            if n > ENUMERATION_CUTOFF {
                return Err(SequenceError::AboveCutoff {
                    n,
                    cutoff: ENUMERATION_CUTOFF,
                });
            }
            let mut counts = vec![BigInt::zero(); n + 1];
            for (_, fix) in enumeration::permutations_with_fix(n).expect("n within cutoff") {
                counts[fix] += 1;
            }
            counts
                .into_iter()
                .enumerate()
                .map(|(j, c)| lam.pow(j as u32).scale_int(c))
                .sum()
        }
        LambdaFactorialRoute::Binomial => {
            let lm1 = &lam - &int(1);
            (0..=n)
                .map(|k| lm1.pow((n - k) as u32).scale_int(binomial(n, k) * factorial(k)))
                .sum()
        }
        LambdaFactorialRoute::DerangementExpansion => (0..=n)
            .map(|k| lam.pow((n - k) as u32).scale_int(binomial(n, k) * derangement(k)))
            .sum(),
        LambdaFactorialRoute::Recurrence => {
            if let Some(p) = lambda_factorial_table().get(n) {
                return Ok(p.clone());
            }
            lambda_factorial_recurrence(n).pop().unwrap()
        }
    };
    Ok(p)
}

fn lambda_factorial_recurrence(n: usize) -> Vec<Polynomial> {
    let lm1 = var(sym::LAMBDA) - int(1);
    let mut out = vec![Polynomial::one()];
    let mut power = Polynomial::one();
    for k in 1..=n {
        power = &power * &lm1;
        let next = out[k - 1].scale_int(k) + &power;
        out.push(next);
    }
    out
}

fn lambda_factorial_table() -> &'static [Polynomial] {
    static TABLE: OnceLock<Vec<Polynomial>> = OnceLock::new();
    TABLE.get_or_init(|| lambda_factorial_recurrence(32))
}

/// `f_n(λ)` by the recurrence route.
pub fn f(n: usize) -> Polynomial {
    lambda_factorial(n, LambdaFactorialRoute::Recurrence).expect("recurrence route is total")
}

/// `f_n(arg)`, i.e. `f_n(λ)` with `λ := arg`.
pub fn f_at(n: usize, arg: &Polynomial) -> Polynomial {
    f(n).substitute(sym::LAMBDA, arg)
}

/// `base (base+1) ⋯ (base+k-1)`; the empty product is 1.
pub fn rising_factorial(base: &Polynomial, k: usize) -> Polynomial {
    (0..k).map(|j| base + &int(j as i64)).product()
}

/// `C_n(α, u) = Σ_k C(n,k) (α)_k u^{n-k}` with the given arguments.
pub fn charlier_at(n: usize, alpha: &Polynomial, u: &Polynomial) -> Polynomial {
    (0..=n)
        .map(|k| (rising_factorial(alpha, k) * u.pow((n - k) as u32)).scale_int(binomial(n, k)))
        .sum()
}

/// `C_n(α, u)` in the symbols α and u.
pub fn charlier(n: usize) -> Polynomial {
    charlier_at(n, &var(sym::ALPHA), &var(sym::U))
}

/// `B_n(u)` from `B_{n+1} = u B_n + u B_n'`, `B_0 = 1`.
pub fn bell_poly(n: usize) -> Polynomial {
    let u = var(sym::U);
    let mut b = Polynomial::one();
    for _ in 0..n {
        b = &u * &b + &u * &b.derivative(sym::U);
    }
    b
}

/// `H_n(u)` from `H_{n+1} = u H_n + H_n'`, `H_0 = 1`.
pub fn hermite_poly(n: usize) -> Polynomial {
    let u = var(sym::U);
    let mut h = Polynomial::one();
    for _ in 0..n {
        h = &u * &h + h.derivative(sym::U);
    }
    h
}

/// Stirling number of the second kind by `S(n,k) = k S(n-1,k) + S(n-1,k-1)`.
pub fn stirling2(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut row = vec![BigInt::one()];
    for i in 1..=n {
        let mut next = vec![BigInt::zero(); i + 1];
        for j in 1..=i {
            let stay = if j < i { &row[j] * j } else { BigInt::zero() };
            next[j] = stay + &row[j - 1];
        }
        row = next;
    }
    row[k].clone()
}

/// How `Q_{n,m}(λ, μ)` is computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum QPolyRoute {
    /// `Σ_k C(n,k) f_{k+m}(λ) μ^{n-k}`.
    DefinitionSum,
    /// `Q_{n,m} = n Q_{n-1,m} + m Q_{n,m-1} + (λ-1)^m (λ+μ-1)^n`.
    Recurrence,
    /// `Σ_k Σ_j C(n,k) C(m,j) (k+j)! (λ+μ-1)^{n-k} (λ-1)^{m-j}`.
    ExplicitDoubleSum,
    /// `m Σ_k C(n,k) f_{k+m-1}(λ) f_{n-k}(μ+1) + (λ-1)^m f_n(λ+μ)`.
    Convolution,
}

impl QPolyRoute {
    pub const ALL: [QPolyRoute; 4] = [
        QPolyRoute::DefinitionSum,
        QPolyRoute::Recurrence,
        QPolyRoute::ExplicitDoubleSum,
        QPolyRoute::Convolution,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            QPolyRoute::DefinitionSum => "definition-sum",
            QPolyRoute::Recurrence => "recurrence-5.1",
            QPolyRoute::ExplicitDoubleSum => "explicit-double-sum",
            QPolyRoute::Convolution => "lemma-5.4",
        }
    }
}

impl fmt::Display for QPolyRoute {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for QPolyRoute {
    type Err = SequenceError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|r| r.tag() == s)
            .ok_or_else(|| SequenceError::UnknownRoute(s.to_string()))
    }
}

/// `Q_{n,m}(λ, μ)` by the requested route.
pub fn q_poly(n: usize, m: usize, route: QPolyRoute) -> Polynomial {
    let lam = var(sym::LAMBDA);
    let mu = var(sym::MU);
    match route {
        QPolyRoute::DefinitionSum => (0..=n)
            .map(|k| (f(k + m) * mu.pow((n - k) as u32)).scale_int(binomial(n, k)))
            .sum(),
        QPolyRoute::Recurrence => q_table(n, m).swap_remove(n).swap_remove(m),
        QPolyRoute::ExplicitDoubleSum => {
            let a = &lam + &mu - int(1);
            let b = &lam - &int(1);
            let mut acc = Polynomial::zero();
            for k in 0..=n {
                for j in 0..=m {
                    let c = binomial(n, k) * binomial(m, j) * factorial(k + j);
                    acc = acc + (a.pow((n - k) as u32) * b.pow((m - j) as u32)).scale_int(c);
                }
            }
            acc
        }
        QPolyRoute::Convolution => {
            let tail = (&lam - &int(1)).pow(m as u32) * f_at(n, &(&lam + &mu));
            if m == 0 {
                return tail;
            }
            let mu1 = &mu + &int(1);
            let sum: Polynomial = (0..=n)
                .map(|k| (f(k + m - 1) * f_at(n - k, &mu1)).scale_int(binomial(n, k)))
                .sum();
            sum.scale_int(m) + tail
        }
    }
}

/// `Q_{i,j}` for `i <= n`, `j <= m` by the first recurrence, seeded only by
/// treating negative indices as zero.
pub fn q_table(n: usize, m: usize) -> Vec<Vec<Polynomial>> {
    let lam = var(sym::LAMBDA);
    let mu = var(sym::MU);
    let lm1 = &lam - &int(1);
    let lmu1 = &lam + &mu - int(1);
    let mut table: Vec<Vec<Polynomial>> = vec![vec![Polynomial::zero(); m + 1]; n + 1];
    for i in 0..=n {
        for j in 0..=m {
            let mut v = lm1.pow(j as u32) * lmu1.pow(i as u32);
            if i > 0 {
                v = v + table[i - 1][j].scale_int(i);
            }
            if j > 0 {
                v = v + table[i][j - 1].scale_int(j);
            }
            table[i][j] = v;
        }
    }
    table
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn lam() -> Polynomial {
        var(sym::LAMBDA)
    }

    #[test]
    fn factorial_and_binomial() {
        assert_eq!(factorial(0), BigInt::one());
        assert_eq!(factorial(5), BigInt::from(120));
        assert_eq!(factorial(70), (1..=70u32).map(BigInt::from).product::<BigInt>());
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(3, 4), BigInt::zero());
        assert_eq!(binomial(70, 35), factorial(70) / (factorial(35) * factorial(35)));
        assert_eq!(binomial_signed(-1, 0), BigInt::zero());
        assert_eq!(binomial_signed(4, -1), BigInt::zero());
    }

    #[test]
    fn derangement_values() {
        let d: Vec<i64> = (0..=6).map(|n| derangement(n).try_into().unwrap()).collect();
        assert_eq!(d, vec![1, 0, 1, 2, 9, 44, 265]);
    }

    #[test]
    fn lambda_factorial_small() {
        for route in LambdaFactorialRoute::ALL {
            assert_eq!(lambda_factorial(0, route).unwrap(), int(1));
            assert_eq!(lambda_factorial(2, route).unwrap(), lam().pow(2) + int(1));
            assert_eq!(
                lambda_factorial(3, route).unwrap(),
                lam().pow(3) + lam().scale_int(3) + int(2)
            );
        }
        assert_eq!(
            lambda_factorial(9, LambdaFactorialRoute::DefinitionEnumeration),
            Err(SequenceError::AboveCutoff { n: 9, cutoff: 8 })
        );
        assert_eq!(f(40), lambda_factorial(40, LambdaFactorialRoute::Binomial).unwrap());
    }

    #[test]
    fn route_tags_round_trip() {
        for r in LambdaFactorialRoute::ALL {
            assert_eq!(r.tag().parse::<LambdaFactorialRoute>().unwrap(), r);
        }
        for r in QPolyRoute::ALL {
            assert_eq!(r.tag().parse::<QPolyRoute>().unwrap(), r);
        }
        assert!("nope".parse::<QPolyRoute>().is_err());
    }

    #[test]
    fn f5_at_one_is_120() {
        assert_eq!(f(5).eval_integer(&[(sym::LAMBDA, 1)]).unwrap(), rat(120));
    }

    #[test]
    fn charlier_small() {
        let a = var(sym::ALPHA);
        let u = var(sym::U);
        assert_eq!(charlier(0), int(1));
        let c2 = &a * &(&a + &int(1)) + (&a * &u).scale_int(2) + u.pow(2);
        assert_eq!(charlier(2), c2);
        for n in 0..=8 {
            assert_eq!(charlier_at(n, &int(1), &(lam() - int(1))), f(n));
        }
    }

    #[test]
    fn rising_factorial_examples() {
        let a = var(sym::ALPHA);
        assert_eq!(rising_factorial(&a, 0), int(1));
        assert_eq!(rising_factorial(&a, 3), &a * &(&a + &int(1)) * (&a + &int(2)));
        assert_eq!(rising_factorial(&int(-2), 2), int(2));
    }

    #[test]
    fn bell_and_hermite() {
        let u = var(sym::U);
        assert_eq!(bell_poly(0), int(1));
        assert_eq!(bell_poly(3), u.pow(3) + u.pow(2).scale_int(3) + &u);
        assert_eq!(bell_poly(4).eval_integer(&[(sym::U, 1)]).unwrap(), rat(15));
        assert_eq!(hermite_poly(3), u.pow(3) + u.scale_int(3));
        assert_eq!(hermite_poly(4).eval_integer(&[(sym::U, 1)]).unwrap(), rat(10));
        assert_eq!(hermite_poly(4).eval_integer(&[(sym::U, 0)]).unwrap(), rat(3));
    }

    #[test]
    fn stirling_values() {
        assert_eq!(stirling2(4, 2), BigInt::from(7));
        assert_eq!(stirling2(0, 0), BigInt::one());
        assert_eq!(stirling2(3, 0), BigInt::zero());
        assert_eq!(stirling2(2, 5), BigInt::zero());
        for n in 0..=10 {
            assert_eq!(stirling2(n, n), BigInt::one());
            assert_eq!(stirling2(n + 1, n), binomial(n + 1, 2));
        }
    }

    #[test]
    fn q_boundaries() {
        let mu = var(sym::MU);
        for route in QPolyRoute::ALL {
            assert_eq!(q_poly(1, 1, route), &lam() * &mu + lam().pow(2) + int(1));
            for k in 0..=6 {
                assert_eq!(q_poly(0, k, route), f(k), "route {route} Q_0,{k}");
                assert_eq!(
                    q_poly(k, 0, route),
                    f_at(k, &(lam() + mu.clone())),
                    "route {route} Q_{k},0"
                );
            }
        }
    }
}
