//! Identities that are exact polynomial equalities at each fixed `n`, with
//! λ, μ and the Abel parameters kept as indeterminates.

use num_bigint::BigInt;

use super::umbral::{derangement_moments, umbral_eval};
use super::{Bounds, Point, Residual};
use crate::algebra::{int, sym, var, Polynomial};
use crate::enumeration::permanent_check;
use crate::sequences::{
    binomial, charlier_at, derangement, f, f_at, factorial, lambda_factorial, rising_factorial, stirling2,
    LambdaFactorialRoute, ENUMERATION_CUTOFF,
};

fn lam() -> Polynomial {
    var(sym::LAMBDA)
}

fn mu() -> Polynomial {
    var(sym::MU)
}

fn c(n: usize) -> Polynomial {
    int(n as i64)
}

fn big(n: BigInt) -> Polynomial {
    Polynomial::from(n)
}

/// `Σ_{k=lo}^{n} term(k)`.
fn sum(lo: usize, n: usize, term: impl Fn(usize) -> Polynomial) -> Polynomial {
    (lo..=n).map(term).sum()
}

fn sign(e: usize) -> i64 {
    if e.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn per_n(lo: usize, n_max: usize, check: fn(usize) -> Polynomial) -> Vec<Point> {
    (lo..=n_max)
        .map(|n| Point::poly(format!("n={n}"), move || check(n)))
        .collect()
}

/// An `f_n` independent of `avoid`: the `S_n` enumeration while it is
/// feasible, otherwise the first closed-form route other than `avoid`.
fn reference_f(n: usize, avoid: LambdaFactorialRoute) -> Polynomial {
    let route = if n <= ENUMERATION_CUTOFF {
        LambdaFactorialRoute::DefinitionEnumeration
    } else if avoid == LambdaFactorialRoute::DerangementExpansion {
        LambdaFactorialRoute::Binomial
    } else {
        LambdaFactorialRoute::DerangementExpansion
    };
    lambda_factorial(n, route).expect("route within its cutoff")
}

/// `a (a - k t)^{k-1}` from the Abel binomial theorem, with the `k = 0`
/// factor `a · a^{-1}` taken as 1.
pub(crate) fn abel_factor(a: &Polynomial, k: usize, t: &Polynomial) -> Polynomial {
    if k == 0 {
        return Polynomial::one();
    }
    a * &(a - &t.scale_int(k)).pow(k as u32 - 1)
}

/// `(μ - (n+1)) (μ - k - 1)^{n-k-1}`, with the `k = n` factor taken as 1.
pub(crate) fn abel_tail_factor(mu: &Polynomial, n: usize, k: usize) -> Polynomial {
    if k == n {
        return Polynomial::one();
    }
    (mu - &c(n + 1)) * (mu - &c(k + 1)).pow((n - k - 1) as u32)
}

pub(crate) fn eq_1_0a(n_max: usize) -> Vec<Point> {
    per_n(0, n_max, |n| {
        let rhs = sum(0, n, |k| (f(k) * mu().pow((n - k) as u32)).scale_int(binomial(n, k)));
        f_at(n, &(lam() + mu())) - rhs
    })
}

pub(crate) fn eq_1_0b(n_max: usize) -> Vec<Point> {
    per_n(0, n_max, |n| {
        let lm1 = lam() - int(1);
        let rhs = sum(0, n, |k| {
            lm1.pow((n - k) as u32).scale_int(binomial(n, k) * factorial(k))
        });
        reference_f(n, LambdaFactorialRoute::Binomial) - rhs
    })
}

pub(crate) fn eq_1_0c(n_max: usize) -> Vec<Point> {
    per_n(0, n_max, |n| {
        let avoid = LambdaFactorialRoute::Recurrence;
        if n == 0 {
            return reference_f(0, avoid) - int(1);
        }
        let rhs = reference_f(n - 1, avoid).scale_int(n) + (lam() - int(1)).pow(n as u32);
        reference_f(n, avoid) - rhs
    })
}

pub(crate) fn eq_1_0d(n_max: usize) -> Vec<Point> {
    per_n(0, n_max, |n| {
        let avoid = LambdaFactorialRoute::Recurrence;
        let lhs = reference_f(n, avoid).derivative(sym::LAMBDA);
        if n == 0 {
            return lhs;
        }
        lhs - reference_f(n - 1, avoid).scale_int(n)
    })
}

pub(crate) fn eq_1_0e(n_max: usize) -> Vec<Point> {
    per_n(0, n_max, |n| {
        let rhs = sum(0, n, |k| {
            lam().pow((n - k) as u32).scale_int(binomial(n, k) * derangement(k))
        });
        reference_f(n, LambdaFactorialRoute::DerangementExpansion) - rhs
    })
}

pub(crate) fn charlier_spec(n_max: usize) -> Vec<Point> {
    per_n(0, n_max, |n| f(n) - charlier_at(n, &int(1), &(lam() - int(1))))
}

pub(crate) fn riordan(n_max: usize) -> Vec<Point> {
    per_n(0, n_max, |n| {
        let lhs: BigInt = (0..=n)
            .map(|k| binomial(n, k) * factorial(k + 1) * BigInt::from(n + 1).pow((n - k) as u32))
            .sum();
        big(lhs - BigInt::from(n + 1).pow(n as u32 + 1))
    })
}

pub(crate) fn sunxu(n_max: usize) -> Vec<Point> {
    per_n(0, n_max, |n| {
        let lhs: BigInt = (0..=n)
            .map(|k| binomial(n, k) * derangement(k + 1) * BigInt::from(n + 1).pow((n - k) as u32))
            .sum();
        big(lhs - BigInt::from(n).pow(n as u32 + 1))
    })
}

/// `Σ C(n,k) f_{k+1}(λ) (n+1)^{n-k}`.
pub(crate) fn thm_1_1_lhs(n: usize) -> Polynomial {
    sum(0, n, |k| {
        f(k + 1).scale_int(binomial(n, k) * BigInt::from(n + 1).pow((n - k) as u32))
    })
}

pub(crate) fn thm_1_1(n_max: usize) -> Vec<Point> {
    per_n(0, n_max, |n| thm_1_1_lhs(n) - (lam() + c(n)).pow(n as u32 + 1))
}

/// Only meaningful for `n >= 1`: at `n = 0` the sum is empty while the
/// right side is 1.
pub(crate) fn eq_2_3a(n_max: usize) -> Vec<Point> {
    per_n(1, n_max, |n| {
        let lhs = sum(1, n, |k| {
            f(k).scale_int(binomial(n - 1, k - 1) * BigInt::from(n).pow((n - k) as u32))
        });
        lhs - (lam() + c(n) - int(1)).pow(n as u32)
    })
}

pub(crate) fn eq_2_4(n_max: usize) -> Vec<Point> {
    per_n(0, n_max, |n| {
        let d = var(sym::D);
        umbral_eval(&(d + lam()).pow(n as u32), &derangement_moments()) - f(n)
    })
}

pub(crate) fn eq_3_1(n_max: usize) -> Vec<Point> {
    per_n(0, n_max, |n| {
        let (a, b, t) = (var(sym::A), var(sym::B), var(sym::T));
        let rhs = sum(0, n, |k| {
            (abel_factor(&a, k, &t) * (&b + &t.scale_int(k)).pow((n - k) as u32)).scale_int(binomial(n, k))
        });
        (&a + &b).pow(n as u32) - rhs
    })
}

pub(crate) fn eq_3_3(n_max: usize) -> Vec<Point> {
    per_n(0, n_max, |n| {
        let d = var(sym::D);
        let p = (&d + &lam()) * (&d + &lam() + c(n + 1)).pow(n as u32);
        umbral_eval(&p, &derangement_moments()) - (lam() + c(n)).pow(n as u32 + 1)
    })
}

pub(crate) fn eq_4_1(n_max: usize) -> Vec<Point> {
    per_n(0, n_max, |n| {
        let lhs = sum(0, n, |k| {
            (f(k) * (mu() + int(k as i64 - n as i64)) * mu().pow((n - k) as u32)).scale_int(binomial(n, k))
        });
        lhs - mu() * (lam() + mu() - int(1)).pow(n as u32)
    })
}

pub(crate) fn eq_4_2(n_max: usize) -> Vec<Point> {
    per_n(0, n_max, |n| {
        let mu1 = mu() + int(1);
        let lhs = sum(0, n, |k| (f(k) * f_at(n - k, &mu1)).scale_int(binomial(n, k)));
        let s = lam() + mu();
        let rhs = (&s - &int(1)).pow(n as u32 + 1) + (c(n) - &s + int(2)) * f_at(n, &s);
        lhs - rhs
    })
}

pub(crate) fn cor_selfdual(n_max: usize) -> Vec<Point> {
    per_n(0, n_max, |n| {
        let arg = c(n) - lam() + int(3);
        let lhs = sum(0, n, |k| (f(k) * f_at(n - k, &arg)).scale_int(binomial(n, k)));
        lhs - big(BigInt::from(n + 1).pow(n as u32 + 1))
    })
}

/// `Σ C(n,k) (λ+k)^k (μ-k-1)^{n-k}`.
fn eq_4_3_rhs(n: usize, lam: &Polynomial, mu: &Polynomial) -> Polynomial {
    sum(0, n, |k| {
        ((lam + &c(k)).pow(k as u32) * (mu - &c(k + 1)).pow((n - k) as u32)).scale_int(binomial(n, k))
    })
}

pub(crate) fn eq_4_3(n_max: usize) -> Vec<Point> {
    per_n(0, n_max, |n| f_at(n, &(lam() + mu())) - eq_4_3_rhs(n, &lam(), &mu()))
}

pub(crate) fn difference(n_max: usize) -> Vec<Point> {
    per_n(0, n_max, |n| {
        let lhs = sum(0, n, |k| {
            (lam() + c(k)).pow(n as u32).scale_int(binomial(n, k) * sign(n - k))
        });
        lhs - big(factorial(n))
    })
}

/// `Σ (-1)^{n-k} C(n,k) (λ+k)^k (λ+k+1)^{n-k}`.
fn eq_4_3a_rhs(n: usize, lam: &Polynomial) -> Polynomial {
    sum(0, n, |k| {
        ((lam + &c(k)).pow(k as u32) * (lam + &c(k + 1)).pow((n - k) as u32)).scale_int(binomial(n, k) * sign(n - k))
    })
}

/// The symbolic identity, then its `λ = -1` case, then `D_n = per(J - I)`.
pub(crate) fn eq_4_3a(n_max: usize) -> Vec<Point> {
    let mut points = per_n(0, n_max, |n| big(derangement(n)) - eq_4_3a_rhs(n, &lam()));
    for n in 0..=n_max {
        points.push(Point::poly(format!("n={n},λ=-1"), move || {
            big(derangement(n)) - eq_4_3a_rhs(n, &int(-1))
        }));
    }
    for n in 0..=n_max.min(crate::enumeration::PERMANENT_CUTOFF) {
        points.push(Point::poly(format!("n={n},permanent"), move || {
            big(derangement(n)) - big(permanent_check(n).expect("n within cutoff"))
        }));
    }
    points
}

/// `Σ C(n,k) f_{k+1}(λ) μ^{n-k}` at a given `μ`.
fn eq_4_4_lhs(n: usize, mu: &Polynomial) -> Polynomial {
    sum(0, n, |k| (f(k + 1) * mu.pow((n - k) as u32)).scale_int(binomial(n, k)))
}

fn eq_4_4_rhs(n: usize, mu: &Polynomial) -> Polynomial {
    sum(0, n, |k| {
        ((lam() + c(k)).pow(k as u32 + 1) * abel_tail_factor(mu, n, k)).scale_int(binomial(n, k))
    })
}

pub(crate) fn eq_4_4(n_max: usize) -> Vec<Point> {
    per_n(0, n_max, |n| eq_4_4_lhs(n, &mu()) - eq_4_4_rhs(n, &mu()))
}

pub(crate) fn eq_4_5(n_max: usize) -> Vec<Point> {
    per_n(0, n_max, |n| {
        let mu1 = mu() + int(1);
        let lhs = sum(0, n, |k| (f(k + 1) * f_at(n - k, &mu1)).scale_int(binomial(n, k)));
        let rhs = sum(0, n, |k| {
            ((lam() + c(k)).pow(k as u32 + 1) * (mu() - c(k + 1)).pow((n - k) as u32)).scale_int(binomial(n, k))
        });
        lhs - rhs
    })
}

/// At `μ = n+1` both sides of the Abel-type expansion collapse onto the
/// theorem for `Σ C(n,k) f_{k+1}(λ) (n+1)^{n-k}`.
pub(crate) fn remark_mu(n_max: usize) -> Vec<Point> {
    (0..=n_max)
        .map(|n| {
            Point::new(format!("n={n}"), None, move || {
                let mu = c(n + 1);
                let target = (lam() + c(n)).pow(n as u32 + 1);
                Ok(Residual::parts([
                    ("lhs".to_string(), eq_4_4_lhs(n, &mu) - thm_1_1_lhs(n)),
                    ("rhs".to_string(), eq_4_4_rhs(n, &mu) - target),
                ]))
            })
        })
        .collect()
}

/// `Σ_{k=0}^{n} (-1)^{n-k} C(n,k) (λ+k)^m` against
/// `Σ_{k=n}^{m} (-1)^k S(m,k) (-k)_n (-λ)_{k-n}`.
pub(crate) fn stirling_difference(n_max: usize, m_max: usize) -> Vec<Point> {
    let mut points = Vec::new();
    for n in 0..=n_max {
        for m in 0..=m_max {
            points.push(Point::poly(format!("n={n},m={m}"), move || {
                let lhs = sum(0, n, |k| {
                    (lam() + c(k)).pow(m as u32).scale_int(binomial(n, k) * sign(n - k))
                });
                let rhs: Polynomial = (n..=m)
                    .map(|k| {
                        (rising_factorial(&int(-(k as i64)), n) * rising_factorial(&-lam(), k - n))
                            .scale_int(stirling2(m, k) * sign(k))
                    })
                    .sum();
                lhs - rhs
            }));
        }
    }
    points
}

pub(crate) fn cor_n_factorial(n_max: usize) -> Vec<Point> {
    (0..=n_max)
        .map(|n| {
            Point::new(format!("n={n}"), None, move || {
                let one_minus = int(1) - lam();
                let first = sum(0, n, |k| {
                    (f(k + 1) * one_minus.pow((n - k) as u32)).scale_int(binomial(n, k))
                }) - (lam() + c(n)).scale_int(factorial(n));
                let two_minus = int(2) - lam();
                // (n+1)! (λ + n/2) = (n+1)! λ + (n+1)! n / 2, and (n+1)! n is even
                let half = factorial(n + 1) * n / 2;
                let second = sum(0, n, |k| (f(k + 1) * f_at(n - k, &two_minus)).scale_int(binomial(n, k)))
                    - (lam().scale_int(factorial(n + 1)) + big(half));
                Ok(Residual::parts([
                    ("(1-λ)".to_string(), first),
                    ("f(2-λ)".to_string(), second),
                ]))
            })
        })
        .collect()
}

pub(crate) fn thm_5_2(n_max: usize) -> Vec<Point> {
    per_n(0, n_max, |n| {
        let lhs = sum(0, n, |k| {
            (f(k + 2) * mu().pow((n - k) as u32)).scale_int(binomial(n, k))
        });
        let rhs = sum(0, n, |k| {
            ((lam().pow(2) + c(2 * k + 1)) * (lam() + c(k)).pow(k as u32) * (mu() - c(k + 1)).pow((n - k) as u32))
                .scale_int(binomial(n, k))
        });
        lhs - rhs
    })
}

/// Point lists for the polynomial identities keyed by catalogue id.
pub(crate) fn points(id: &str, b: Bounds) -> Vec<Point> {
    match id {
        "1.0a" => eq_1_0a(b.n),
        "1.0b" => eq_1_0b(b.n),
        "1.0c" => eq_1_0c(b.n),
        "1.0d" => eq_1_0d(b.n),
        "1.0e" => eq_1_0e(b.n),
        "charlier-spec" => charlier_spec(b.n),
        "riordan" => riordan(b.n),
        "sunxu" => sunxu(b.n),
        "thm1.1" => thm_1_1(b.n),
        "2.3a" => eq_2_3a(b.n),
        "2.4" => eq_2_4(b.n),
        "3.1" => eq_3_1(b.n),
        "3.3" => eq_3_3(b.n),
        "4.1" => eq_4_1(b.n),
        "4.2" => eq_4_2(b.n),
        "cor-selfdual" => cor_selfdual(b.n),
        "4.3" => eq_4_3(b.n),
        "difference" => difference(b.n),
        "4.3a" => eq_4_3a(b.n),
        "4.4" => eq_4_4(b.n),
        "4.5" => eq_4_5(b.n),
        "remark-mu" => remark_mu(b.n),
        "stirling-difference" => stirling_difference(b.n, b.m),
        "cor-n-factorial" => cor_n_factorial(b.n),
        "thm5.2" => thm_5_2(b.n),
        _ => unreachable!("not a polynomial identity: {id}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn abel_factor_boundary() {
        let (a, t) = (var(sym::A), var(sym::T));
        assert_eq!(abel_factor(&a, 0, &t), int(1));
        assert_eq!(abel_factor(&a, 1, &t), a.clone());
        assert_eq!(abel_factor(&a, 2, &t), &a * &(&a - &t.scale_int(2)));
        // the k = 0 convention even when a = 0
        assert_eq!(abel_factor(&int(0), 0, &t), int(1));
    }

    #[test]
    fn abel_tail_boundary() {
        let m = mu();
        assert_eq!(abel_tail_factor(&m, 3, 3), int(1));
        assert_eq!(abel_tail_factor(&m, 3, 2), &m - &int(4));
        assert_eq!(abel_tail_factor(&m, 3, 0), (&m - &int(4)) * (&m - &int(1)).pow(2));
        assert_eq!(abel_tail_factor(&int(1), 0, 0), int(1));
    }

    #[test]
    fn reference_routes_avoid_the_checked_side() {
        for n in [3, 12] {
            assert_eq!(reference_f(n, LambdaFactorialRoute::Binomial), f(n));
            assert_eq!(reference_f(n, LambdaFactorialRoute::DerangementExpansion), f(n));
        }
    }

    #[test]
    fn stirling_difference_spot_values() {
        for p in stirling_difference(2, 3) {
            let r = (p.run)().unwrap();
            assert!(r.is_zero(), "{}: {r}", p.params);
        }
    }

    #[test]
    fn selected_points_pass() {
        for id in ["4.2", "4.4", "4.5", "cor-n-factorial", "thm5.2", "3.1"] {
            for p in points(id, Bounds { n: 4, m: 0, order: 0 }) {
                let r = (p.run)().unwrap();
                assert!(r.is_zero(), "{id} {}: {r}", p.params);
            }
        }
    }
}
