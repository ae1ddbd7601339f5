//! Identities between truncated power series. Sums over `k` on the right
//! side run through [`valuation_sum`], which checks that summand `k` starts
//! at `x^k` before truncating the sum at the series order.

use num_bigint::BigInt;

use super::poly_ids::abel_factor;
use super::{Bounds, IdentityError, Point, Residual};
use crate::algebra::{int, sym, var, Polynomial, Rational};
use crate::sequences::{
    bell_poly, charlier, charlier_at, derangement, f, f_at, factorial, hermite_poly, rising_factorial,
};
use crate::series::{abel_rhs, binomial_power, egf_shift, tree_function, valuation_sum, SeriesError, TruncatedSeries};

type S = TruncatedSeries;

/// Names accepted by [`a_family`].
pub const A_FAMILIES: [&str; 6] = ["ones", "factorial", "derangement", "bell", "hermite", "charlier"];

/// Coefficient sequences `a_n` used with the transform `Σ a_n f_n(λ) x^n/n!`.
pub fn a_family(name: &str) -> Option<fn(usize) -> Polynomial> {
    let a: fn(usize) -> Polynomial = match name {
        "ones" => |_| int(1),
        "zero" => |_| Polynomial::zero(),
        "factorial" => |n| Polynomial::from(factorial(n)),
        "derangement" => |n| Polynomial::from(derangement(n)),
        "bell" => bell_poly,
        "hermite" => hermite_poly,
        "charlier" => charlier,
        _ => return None,
    };
    Some(a)
}

fn lam() -> Polynomial {
    var(sym::LAMBDA)
}

fn x() -> Polynomial {
    var(sym::X)
}

fn inv_factorial(k: usize) -> Rational {
    Rational::new(BigInt::from(1), factorial(k))
}

/// `Σ_n c(n) x^n` with plain coefficients.
fn ogf(order: usize, c: impl Fn(usize) -> Polynomial) -> S {
    S::new(sym::X, (0..=order).map(c).collect()).expect("coefficients are free of x")
}

fn egf(order: usize, a: impl Fn(usize) -> Polynomial) -> S {
    S::from_egf(sym::X, a, order)
}

fn poly(p: &Polynomial, order: usize) -> S {
    S::from_polynomial(sym::X, p, order)
}

/// `exp(g)` for a polynomial `g` in `x` with zero constant term.
fn exp_poly(g: &Polynomial, order: usize) -> Result<S, SeriesError> {
    S::exp(&poly(g, order))
}

/// `(1 + c x)^e`.
fn power(c: &Polynomial, e: &Polynomial, order: usize) -> S {
    binomial_power(sym::X, c, e, order)
}

/// `weight · x^k · Π factors`.
fn summand(k: usize, weight: Polynomial, factors: &[S], order: usize) -> Result<S, SeriesError> {
    let mut acc = S::monomial(sym::X, k, weight, order);
    for fct in factors {
        acc = acc.mul(fct)?;
    }
    Ok(acc)
}

fn residual(lhs: S, rhs: Result<S, SeriesError>) -> Result<Residual, IdentityError> {
    Ok(Residual::Series(lhs.sub(&rhs?)?))
}

fn series_point(
    params: impl Into<String>,
    order: usize,
    run: impl FnOnce() -> Result<Residual, IdentityError> + 'static,
) -> Point {
    Point::new(params, Some(order), run)
}

/// The tree function's defining equation, then `y^k/k!` for `1 <= k <= order`.
pub(crate) fn eq_2_1(order: usize) -> Vec<Point> {
    let mut points = vec![series_point("y=x·exp(y)", order, move || {
        let y = tree_function(order)?;
        let rhs = S::exp(&y)?.shift(1);
        residual(y, Ok(rhs))
    })];
    for k in 1..=order {
        points.push(series_point(format!("k={k}"), order, move || {
            let y = tree_function(order)?;
            let mut yk = S::one(sym::X, order);
            for _ in 0..k {
                yk = yk.mul(&y)?;
            }
            let lhs = yk.scale(&Polynomial::constant(inv_factorial(k)));
            let rhs = egf(order, |n| {
                if n < k {
                    return Polynomial::zero();
                }
                Polynomial::from(crate::sequences::binomial(n - 1, k - 1) * BigInt::from(n).pow((n - k) as u32))
            });
            residual(lhs, Ok(rhs))
        }));
    }
    points
}

/// `e^{λt}/(1-t)` composed with the tree function.
pub(crate) fn eq_2_2(order: usize) -> Vec<Point> {
    vec![series_point("λ symbolic", order, move || {
        let t = S::variable(sym::T, order);
        let outer = S::exp(&t.scale(&lam()))?.mul(&crate::series::geometric(sym::T, &int(1), order))?;
        let lhs = S::compose(&outer, &tree_function(order)?)?;
        let rhs = egf(order, |n| (lam() + int(n as i64)).pow(n as u32));
        residual(lhs, Ok(rhs))
    })]
}

pub(crate) fn eq_2_3(order: usize) -> Vec<Point> {
    vec![series_point("λ symbolic", order, move || {
        let t = S::variable(sym::T, order);
        let lhs = S::exp(&t.scale(&(lam() - int(1))))?.mul(&crate::series::geometric(sym::T, &int(1), order))?;
        let rhs = S::from_egf(sym::T, f, order);
        residual(lhs, Ok(rhs))
    })]
}

/// `A(x) = Σ_k x(x-kt)^{k-1} A^{(k)}(kt)/k!`, graded by `s` so that `x` and
/// `t` both carry degree one.
pub(crate) fn eq_3_2(order: usize) -> Vec<Point> {
    ["ones", "factorial"]
        .into_iter()
        .map(|name| {
            let label = if name == "ones" { "A=e^x" } else { "A=1/(1-x)" };
            series_point(label, order, move || {
                let a = a_family(name).expect("known family");
                let (xv, t) = (var(sym::X), var(sym::T));
                let lhs = S::from_egf(sym::S, |n| a(n) * xv.pow(n as u32), order);
                let rhs = valuation_sum(sym::S, order, |k| {
                    let w = abel_factor(&xv, k, &t).scale(&inv_factorial(k));
                    let shifted = egf_shift(sym::S, &a, k, order).rescale(&t.scale_int(k));
                    S::monomial(sym::S, k, w, order).mul(&shifted)
                });
                residual(lhs, rhs)
            })
        })
        .collect()
}

pub(crate) fn thm_1_2(order: usize) -> Vec<Point> {
    let mut points: Vec<Point> = A_FAMILIES
        .into_iter()
        .map(|name| {
            series_point(format!("a={name}"), order, move || {
                let a = a_family(name).expect("known family");
                let lhs = egf(order, |n| a(n) * f(n));
                residual(lhs, Ok(abel_rhs(&a, &lam(), order)))
            })
        })
        .collect();
    let ogf_order = order + 2;
    points.push(series_point("λ=1,a=factorial,ogf", ogf_order, move || {
        let a = a_family("factorial").expect("known family");
        let lhs = ogf(ogf_order, a);
        residual(lhs, Ok(abel_rhs(&a, &int(1), ogf_order)))
    }));
    points
}

/// `∂^k/∂x^k e^{ux}/(1-x)^α = C_k(α, u(1-x)) e^{ux} / (1-x)^{α+k}`.
fn charlier_derivative(k: usize, order: usize) -> Result<Residual, IdentityError> {
    let (alpha, u) = (var(sym::ALPHA), var(sym::U));
    let lhs = egf_shift(sym::X, &charlier, k, order);
    let ck = charlier_at(k, &alpha, &(&u * &(int(1) - x())));
    let rhs = poly(&ck, order)
        .mul(&exp_poly(&(&u * &x()), order)?)
        .and_then(|s| s.mul(&power(&int(-1), &-(&alpha + &int(k as i64)), order)));
    residual(lhs, rhs)
}

/// `Σ C_{m+n}(α,u) f_n(λ) x^n/n!` against its transform.
fn charlier_transform(m: usize, order: usize) -> Result<Residual, IdentityError> {
    let (alpha, u) = (var(sym::ALPHA), var(sym::U));
    let lhs = egf(order, |n| charlier(m + n) * f(n));
    let rhs = valuation_sum(sym::X, order, |k| {
        let kk = int(k as i64);
        let w = (lam() + int(k as i64 - 1)).pow(k as u32).scale(&inv_factorial(k));
        let ck = charlier_at(m + k, &alpha, &(&u * &(int(1) + &kk * &x())));
        summand(
            k,
            w,
            &[
                poly(&ck, order),
                exp_poly(&-(&u * &kk * x()), order)?,
                power(&kk, &-(&alpha + &int((m + k) as i64)), order),
            ],
            order,
        )
    });
    residual(lhs, rhs)
}

pub(crate) fn eq_3_4(order: usize) -> Vec<Point> {
    let mut points: Vec<Point> = (0..=5)
        .map(|k| {
            series_point(format!("closed-form k={k}"), order, move || {
                charlier_derivative(k, order)
            })
        })
        .collect();
    points.push(series_point("α,u,λ symbolic", order, move || {
        charlier_transform(0, order)
    }));
    points
}

pub(crate) fn eq_3_5(m_max: usize, order: usize) -> Vec<Point> {
    (0..=m_max)
        .map(|m| series_point(format!("m={m}"), order, move || charlier_transform(m, order)))
        .collect()
}

/// `f_{m+k}(-kx) e^{kx} / (1+kx)^{m+k+1}`.
fn derangement_kernel(m: usize, k: usize, order: usize) -> Result<Vec<S>, SeriesError> {
    let kk = int(k as i64);
    Ok(vec![
        poly(&f_at(m + k, &-(&kk * &x())), order),
        exp_poly(&(&kk * &x()), order)?,
        power(&kk, &int(-((m + k + 1) as i64)), order),
    ])
}

pub(crate) fn eq_3_6(m_max: usize, order: usize) -> Vec<Point> {
    (0..=m_max)
        .map(|m| {
            series_point(format!("m={m}"), order, move || {
                let lhs = egf(order, |n| Polynomial::from(derangement(m + n) * derangement(n)));
                let rhs = valuation_sum(sym::X, order, |k| {
                    let w = int(k as i64 - 1).pow(k as u32).scale(&inv_factorial(k));
                    summand(k, w, &derangement_kernel(m, k, order)?, order)
                });
                residual(lhs, rhs)
            })
        })
        .collect()
}

/// `(kx)^k/k!` as the weight of `x^k`.
fn ogf_weight(k: usize) -> Polynomial {
    int(k as i64).pow(k as u32).scale(&inv_factorial(k))
}

pub(crate) fn eq_3_7(m_max: usize, order: usize) -> Vec<Point> {
    let mut points = Vec::new();
    for m in 0..=m_max {
        points.push(series_point(format!("m={m},f_(m+n)(μ)"), order, move || {
            let mu = var(sym::MU);
            let lhs = ogf(order, |n| f_at(m + n, &mu));
            let rhs = valuation_sum(sym::X, order, |k| {
                let kk = int(k as i64);
                let mu1 = &mu - &int(1);
                let arg = int(1) + &mu1 * &(int(1) + &kk * &x());
                summand(
                    k,
                    ogf_weight(k),
                    &[
                        poly(&f_at(m + k, &arg), order),
                        exp_poly(&-(&mu1 * &kk * x()), order)?,
                        power(&kk, &int(-((m + k + 1) as i64)), order),
                    ],
                    order,
                )
            });
            residual(lhs, rhs)
        }));
        points.push(series_point(format!("m={m},D_(m+n)"), order, move || {
            let lhs = ogf(order, |n| Polynomial::from(derangement(m + n)));
            let rhs = valuation_sum(sym::X, order, |k| {
                summand(k, ogf_weight(k), &derangement_kernel(m, k, order)?, order)
            });
            residual(lhs, rhs)
        }));
    }
    points
}

pub(crate) fn eq_3_7_1(m_max: usize, order: usize) -> Vec<Point> {
    let mut points: Vec<Point> = (0..=m_max)
        .map(|m| {
            series_point(format!("m={m},(m+n)!"), order, move || {
                let lhs = ogf(order, |n| Polynomial::from(factorial(m + n)));
                let rhs = valuation_sum(sym::X, order, |k| {
                    let kk = int(k as i64);
                    let w = ogf_weight(k).scale_int(factorial(m + k));
                    summand(k, w, &[power(&kk, &int(-((m + k + 1) as i64)), order)], order)
                });
                residual(lhs, rhs)
            })
        })
        .collect();
    points.push(series_point("f_n(λ)", order, move || {
        let lhs = ogf(order, f);
        let rhs = valuation_sum(sym::X, order, |k| {
            let kk = int(k as i64);
            let w = (lam() + int(k as i64 - 1)).pow(k as u32);
            summand(k, w, &[power(&kk, &int(-((k + 1) as i64)), order)], order)
        });
        residual(lhs, rhs)
    }));
    points
}

pub(crate) fn gessel(order: usize) -> Vec<Point> {
    vec![
        series_point("α,β,u,v symbolic", order, move || {
            let (alpha, beta, u, v) = (var(sym::ALPHA), var(sym::BETA), var(sym::U), var(sym::V));
            let lhs = egf(order, |n| charlier(n) * charlier_at(n, &beta, &v));
            let sum = valuation_sum(sym::X, order, |k| {
                let w = (rising_factorial(&alpha, k) * rising_factorial(&beta, k)).scale(&inv_factorial(k));
                summand(
                    k,
                    w,
                    &[
                        power(&-&v, &-(&alpha + &int(k as i64)), order),
                        power(&-&u, &-(&beta + &int(k as i64)), order),
                    ],
                    order,
                )
            });
            let rhs = sum.and_then(|s| exp_poly(&(&u * &v * x()), order)?.mul(&s));
            residual(lhs, rhs)
        }),
        series_point("D_n^2", order, move || {
            let lhs = egf(order, |n| Polynomial::from(derangement(n).pow(2)));
            let sum = valuation_sum(sym::X, order, |k| {
                summand(
                    k,
                    Polynomial::from(factorial(k)),
                    &[power(&int(1), &int(-(2 * k as i64 + 2)), order)],
                    order,
                )
            });
            let rhs = sum.and_then(|s| exp_poly(&x(), order)?.mul(&s));
            residual(lhs, rhs)
        }),
    ]
}

pub(crate) fn chz(order: usize) -> Vec<Point> {
    vec![series_point("μ symbolic", order, move || {
        let mu = var(sym::MU);
        let lhs = ogf(order, |n| f_at(n, &mu));
        let rhs = valuation_sum(sym::X, order, |k| {
            summand(
                k,
                Polynomial::from(factorial(k)),
                &[power(&-(&mu - &int(1)), &int(-(k as i64 + 1)), order)],
                order,
            )
        });
        residual(lhs, rhs)
    })]
}

/// `B_{m+k}(c·e^{-kx}) exp(c(e^{-kx} - 1))` with `c` the value of `u`.
fn bell_kernel(m: usize, k: usize, c: &Polynomial, order: usize) -> Result<Vec<S>, SeriesError> {
    let e = exp_poly(&-(int(k as i64) * x()), order)?;
    let ce = e.scale(c);
    let g = e.sub(&S::one(sym::X, order))?.scale(c);
    Ok(vec![S::eval_polynomial(&bell_poly(m + k), sym::U, &ce)?, S::exp(&g)?])
}

pub(crate) fn bell_transform(m_max: usize, order: usize) -> Vec<Point> {
    (0..=m_max)
        .map(|m| {
            series_point(format!("m={m}"), order, move || {
                let lhs = egf(order, |n| bell_poly(m + n) * f(n));
                let rhs = valuation_sum(sym::X, order, |k| {
                    let w = (lam() + int(k as i64 - 1)).pow(k as u32).scale(&inv_factorial(k));
                    summand(k, w, &bell_kernel(m, k, &var(sym::U), order)?, order)
                });
                residual(lhs, rhs)
            })
        })
        .collect()
}

pub(crate) fn eq_3_8(m_max: usize, order: usize) -> Vec<Point> {
    (0..=m_max)
        .map(|m| {
            series_point(format!("m={m}"), order, move || {
                let lhs = ogf(order, |n| bell_poly(m + n).substitute(sym::U, &int(1)));
                let rhs = valuation_sum(sym::X, order, |k| {
                    summand(k, ogf_weight(k), &bell_kernel(m, k, &int(1), order)?, order)
                });
                residual(lhs, rhs)
            })
        })
        .collect()
}

/// `H_{m+k}(c - kx) exp(-ckx + (kx)^2/2)`.
fn hermite_kernel(m: usize, k: usize, c: &Polynomial, order: usize) -> Result<Vec<S>, SeriesError> {
    let kx = int(k as i64) * x();
    let h = hermite_poly(m + k).substitute(sym::U, &(c - &kx));
    let g = -(c * &kx) + kx.pow(2).scale(&Rational::new(1.into(), 2.into()));
    Ok(vec![poly(&h, order), exp_poly(&g, order)?])
}

pub(crate) fn eq_3_9(m_max: usize, order: usize) -> Vec<Point> {
    let mut points = Vec::new();
    for m in 0..=m_max {
        points.push(series_point(format!("m={m}"), order, move || {
            let lhs = egf(order, |n| hermite_poly(m + n) * f(n));
            let rhs = valuation_sum(sym::X, order, |k| {
                let w = (lam() + int(k as i64 - 1)).pow(k as u32).scale(&inv_factorial(k));
                summand(k, w, &hermite_kernel(m, k, &var(sym::U), order)?, order)
            });
            residual(lhs, rhs)
        }));
        for (label, c) in [("involutions", 1), ("matchings", 0)] {
            points.push(series_point(format!("m={m},{label}"), order, move || {
                let cp = int(c);
                let lhs = ogf(order, |n| hermite_poly(m + n).substitute(sym::U, &cp));
                let rhs = valuation_sum(sym::X, order, |k| {
                    summand(k, ogf_weight(k), &hermite_kernel(m, k, &cp, order)?, order)
                });
                residual(lhs, rhs)
            }));
        }
    }
    points
}

pub(crate) fn points(id: &str, b: Bounds) -> Vec<Point> {
    match id {
        "2.1" => eq_2_1(b.order),
        "2.2" => eq_2_2(b.order),
        "2.3" => eq_2_3(b.order),
        "3.2" => eq_3_2(b.order),
        "thm1.2" => thm_1_2(b.order),
        "3.4" => eq_3_4(b.order),
        "3.5" => eq_3_5(b.m, b.order),
        "3.6" => eq_3_6(b.m, b.order),
        "3.7" => eq_3_7(b.m, b.order),
        "3.7.1" => eq_3_7_1(b.m, b.order),
        "gessel" => gessel(b.order),
        "chz" => chz(b.order),
        "bell-transform" => bell_transform(b.m, b.order),
        "3.8" => eq_3_8(b.m, b.order),
        "3.9" => eq_3_9(b.m, b.order),
        _ => unreachable!("not a series identity: {id}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_pass(points: Vec<Point>) {
        for p in points {
            let params = p.params.clone();
            let r = (p.run)().unwrap();
            assert!(r.is_zero(), "{params}: {r}");
        }
    }

    #[test]
    fn families() {
        assert_eq!(a_family("factorial").unwrap()(4), int(24));
        assert_eq!(a_family("derangement").unwrap()(4), int(9));
        assert!(a_family("nope").is_none());
    }

    #[test]
    fn low_order_checks_pass() {
        all_pass(eq_2_1(4));
        all_pass(eq_2_2(4));
        all_pass(eq_2_3(4));
        all_pass(eq_3_2(4));
        all_pass(thm_1_2(3));
        all_pass(eq_3_4(3));
        all_pass(eq_3_6(1, 3));
        all_pass(eq_3_7(1, 3));
        all_pass(eq_3_7_1(1, 4));
        all_pass(gessel(3));
        all_pass(chz(4));
        all_pass(bell_transform(1, 3));
        all_pass(eq_3_8(1, 3));
        all_pass(eq_3_9(1, 3));
    }
}
