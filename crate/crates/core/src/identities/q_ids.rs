//! Identities for `Q_{n,m}(λ, μ) = Σ_k C(n,k) f_{k+m}(λ) μ^{n-k}`.

use std::rc::Rc;

use super::umbral::{derangement_moments, umbral_eval};
use super::{Bounds, Point, Residual};
use crate::algebra::{int, sym, var, Polynomial, Rational};
use crate::sequences::{binomial, f, f_at, factorial, q_poly, QPolyRoute};
use crate::series::bivariate_truncated_product;

fn lam() -> Polynomial {
    var(sym::LAMBDA)
}

fn mu() -> Polynomial {
    var(sym::MU)
}

/// `Q_{i,j}` by definition for `i + j <= total`, with negative indices zero.
struct QGrid {
    rows: Vec<Vec<Polynomial>>,
}

impl QGrid {
    fn new(total: usize) -> Self {
        let rows = (0..=total)
            .map(|n| {
                (0..=total - n)
                    .map(|m| q_poly(n, m, QPolyRoute::DefinitionSum))
                    .collect()
            })
            .collect();
        QGrid { rows }
    }

    fn get(&self, n: isize, m: isize) -> Polynomial {
        if n < 0 || m < 0 {
            return Polynomial::zero();
        }
        self.rows[n as usize][m as usize].clone()
    }
}

fn pairs(total: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..=total).flat_map(move |n| (0..=total - n).map(move |m| (n, m)))
}

pub(crate) fn eq_5_1(total: usize) -> Vec<Point> {
    let grid = Rc::new(QGrid::new(total));
    pairs(total)
        .map(|(n, m)| {
            let grid = Rc::clone(&grid);
            Point::poly(format!("n={n},m={m}"), move || {
                let (i, j) = (n as isize, m as isize);
                let rhs = grid.get(i - 1, j).scale_int(n)
                    + grid.get(i, j - 1).scale_int(m)
                    + (lam() - int(1)).pow(m as u32) * (lam() + mu() - int(1)).pow(n as u32);
                grid.get(i, j) - rhs
            })
        })
        .collect()
}

/// `Σ_{i<=d} (c·v)^i / i!` as a polynomial in `v`.
fn exp_poly(c: &Polynomial, v: &str, d: u32) -> Polynomial {
    let x = var(v);
    (0..=d)
        .map(|i| (c * &x).pow(i).scale(&Rational::new(1.into(), factorial(i as usize))))
        .sum()
}

/// The bivariate EGF `e^{(λ+μ-1)t} e^{(λ-1)x} / (1-t-x)` expanded to total
/// degree `total` and compared with `Σ Q_{n,m} t^n x^m / (n! m!)`.
pub(crate) fn eq_5_2(total: usize) -> Vec<Point> {
    vec![Point::new(format!("total-degree={total}"), None, move || {
        let d = total as u32;
        let vars = (sym::T, sym::X);
        let et = exp_poly(&(lam() + mu() - int(1)), sym::T, d);
        let ex = exp_poly(&(lam() - int(1)), sym::X, d);
        let s = var(sym::T) + var(sym::X);
        let geometric: Polynomial = (0..=d).map(|j| s.pow(j)).collect::<Vec<_>>().into_iter().sum();
        let egf = bivariate_truncated_product(&bivariate_truncated_product(&et, &ex, vars, d), &geometric, vars, d);
        let grid = QGrid::new(total);
        let expected: Polynomial = pairs(total)
            .map(|(n, m)| {
                let w = Rational::new(1.into(), factorial(n) * factorial(m));
                (grid.get(n as isize, m as isize) * var(sym::T).pow(n as u32) * var(sym::X).pow(m as u32)).scale(&w)
            })
            .sum();
        Ok(Residual::Polynomial(egf - expected))
    })]
}

pub(crate) fn q_second(total: usize) -> Vec<Point> {
    let grid = Rc::new(QGrid::new(total));
    pairs(total.saturating_sub(1))
        .filter(|_| total >= 1)
        .map(|(n, m)| {
            let grid = Rc::clone(&grid);
            Point::poly(format!("n={n},m={m}"), move || {
                let (i, j) = (n as isize, m as isize);
                grid.get(i + 1, j) - (grid.get(i, j + 1) + mu() * grid.get(i, j))
            })
        })
        .collect()
}

/// `Σ_n C(N,n) Q_{N-n,n} t^{N-n} = (t+1)^N f_N(λ + μt/(t+1))`, the right
/// side homogenized as `Σ_j c_j a^j b^{N-j}` with `a = λ(t+1) + μt`,
/// `b = t+1` and `f_N(z) = Σ_j c_j z^j`.
pub(crate) fn q_diag(n_max: usize) -> Vec<Point> {
    (0..=n_max)
        .map(|big_n| {
            Point::poly(format!("N={big_n}"), move || {
                let t = var(sym::T);
                let lhs: Polynomial = (0..=big_n)
                    .map(|n| {
                        (q_poly(big_n - n, n, QPolyRoute::DefinitionSum) * t.pow((big_n - n) as u32))
                            .scale_int(binomial(big_n, n))
                    })
                    .sum();
                let a = lam() * (&t + &int(1)) + mu() * &t;
                let b = &t + &int(1);
                let fz = f(big_n);
                let rhs: Polynomial = (0..=big_n as u32)
                    .map(|j| fz.coefficient(sym::LAMBDA, j) * a.pow(j) * b.pow(big_n as u32 - j))
                    .sum();
                lhs - rhs
            })
        })
        .collect()
}

pub(crate) fn q_explicit(total: usize) -> Vec<Point> {
    pairs(total)
        .map(|(n, m)| {
            Point::poly(format!("n={n},m={m}"), move || {
                q_poly(n, m, QPolyRoute::DefinitionSum) - q_poly(n, m, QPolyRoute::ExplicitDoubleSum)
            })
        })
        .collect()
}

/// `Q_{n,m}(λ,μ) = m Q_{n,m-1}(λ, D+μ+1) + (λ-1)^m f_n(λ+μ)`.
pub(crate) fn eq_5_3(total: usize) -> Vec<Point> {
    pairs(total)
        .map(|(n, m)| {
            Point::poly(format!("n={n},m={m}"), move || {
                let tail = (lam() - int(1)).pow(m as u32) * f_at(n, &(lam() + mu()));
                let rhs = if m == 0 {
                    tail
                } else {
                    let shifted =
                        q_poly(n, m - 1, QPolyRoute::DefinitionSum).substitute(sym::MU, &(var(sym::D) + mu() + int(1)));
                    umbral_eval(&shifted, &derangement_moments()).scale_int(m) + tail
                };
                q_poly(n, m, QPolyRoute::DefinitionSum) - rhs
            })
        })
        .collect()
}

pub(crate) fn eq_5_4(total: usize) -> Vec<Point> {
    pairs(total)
        .map(|(n, m)| {
            Point::poly(format!("n={n},m={m}"), move || {
                q_poly(n, m, QPolyRoute::DefinitionSum) - q_poly(n, m, QPolyRoute::Convolution)
            })
        })
        .collect()
}

pub(crate) fn points(id: &str, b: Bounds) -> Vec<Point> {
    match id {
        "5.1" => eq_5_1(b.n),
        "5.2" => eq_5_2(b.n),
        "q-second" => q_second(b.n),
        "q-diag" => q_diag(b.n),
        "q-explicit" => q_explicit(b.n),
        "5.3" => eq_5_3(b.n),
        "5.4" => eq_5_4(b.n),
        _ => unreachable!("not a Q identity: {id}"),
    }
}
