//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Arithmetic is exact, so every comparison has zero tolerance. Wall-clock
//! budgets are part of the criteria that state them.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use lfact::algebra::{sym, Polynomial, Rational};
use lfact::enumeration::{check_bijection, forests, oracle_polynomials, permanent_check};
use lfact::identities::{inverse_relation_roundtrip, verify, InverseKind, VerifyOptions};
use lfact::sequences::{
    bell_poly, binomial, derangement, factorial, hermite_poly, lambda_factorial, q_poly, LambdaFactorialRoute,
    QPolyRoute,
};
use lfact::series::{tree_function, TruncatedSeries};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};

const TOLERANCE: i64 = 0;
const ROUTE_BUDGET: Duration = Duration::from_secs(30);
const BIJECTION_BUDGET: Duration = Duration::from_secs(60);
const SUITE_BUDGET: Duration = Duration::from_secs(300);
const BIJECTION_LIMIT: u128 = 100_000;

/// Criteria that cannot be met at desk scale; they still run and print FAIL.
const UNATTAINABLE: [u32; 1] = [4];

type Check = Result<String, String>;

type Criterion = (u32, &'static str, Option<Duration>, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// `(id, n-max, m-max, order)` overrides; `None` keeps the catalogue default.
type Run = (&'static str, Option<usize>, Option<usize>, Option<usize>);

fn verify_runs(runs: &[Run]) -> Check {
    let mut total = 0;
    for &(id, n_max, m_max, order) in runs {
        let opts = VerifyOptions {
            n_max,
            m_max,
            order,
            allow_unsafe: true,
        };
        let reports = verify(id, &opts).map_err(|e| format!("{id}: {e}"))?;
        ensure(!reports.is_empty(), || format!("{id}: no parameter points"))?;
        if let Some(r) = reports.iter().find(|r| !r.passed()) {
            return Err(format!("{id} at {} has residual {}", r.params, r.residual));
        }
        total += reports.len();
    }
    Ok(format!("{total} reports with residual 0"))
}

fn criterion_1() -> Check {
    let mut checks = 0;
    for n in 0..=20 {
        let routes: &[LambdaFactorialRoute] = if n <= 8 {
            &LambdaFactorialRoute::ALL
        } else {
            &LambdaFactorialRoute::ALL[1..]
        };
        let first = lambda_factorial(n, routes[0]).map_err(|e| e.to_string())?;
        for &r in &routes[1..] {
            let p = lambda_factorial(n, r).map_err(|e| e.to_string())?;
            ensure(p == first, || {
                format!("f_{n}: {} differs from {}", r.tag(), routes[0].tag())
            })?;
            checks += 1;
        }
    }
    for total in 0..=10 {
        for n in 0..=total {
            let m = total - n;
            let first = q_poly(n, m, QPolyRoute::ALL[0]);
            for r in &QPolyRoute::ALL[1..] {
                ensure(q_poly(n, m, *r) == first, || {
                    format!("Q_{{{n},{m}}}: {} differs", r.tag())
                })?;
                checks += 1;
            }
        }
    }
    Ok(format!("{checks} route comparisons agree"))
}

fn criterion_2() -> Check {
    for n in 0..=8 {
        let t = oracle_polynomials(n).map_err(|e| e.to_string())?;
        for r in LambdaFactorialRoute::ALL {
            let p = lambda_factorial(n, r).map_err(|e| e.to_string())?;
            ensure(t.lambda_factorial == p, || format!("f_{n} via {}", r.tag()))?;
        }
        ensure(t.bell == bell_poly(n), || format!("B_{n}"))?;
        ensure(t.hermite == hermite_poly(n), || format!("H_{n}"))?;
        ensure(t.derangements == derangement(n), || format!("D_{n}"))?;
    }
    for n in 0..=10 {
        let per = permanent_check(n).map_err(|e| e.to_string())?;
        ensure(per == derangement(n), || format!("per(J-I) at n={n} is {per}"))?;
    }
    Ok("f, B, H, D agree for n<=8; per(J-I) = D_n for n<=10".into())
}

fn criterion_3() -> Check {
    let counts = verify_runs(&[
        ("thm1.1", Some(15), None, None),
        ("riordan", Some(12), None, None),
        ("sunxu", Some(12), None, None),
    ])?;
    let n = 3;
    let lhs: BigInt = (0..=n)
        .map(|k| binomial(n, k) * factorial(k + 1) * BigInt::from(n + 1).pow((n - k) as u32))
        .sum();
    let rhs = BigInt::from(n + 1).pow(n as u32 + 1);
    ensure(lhs == BigInt::from(256) && rhs == BigInt::from(256), || {
        format!("factorial sum at n=3: {lhs} vs {rhs}")
    })?;
    Ok(format!("{counts}; factorial sum at n=3 gives 256 = 256"))
}

fn criterion_4() -> Check {
    let start = Instant::now();
    let mut grid = Vec::new();
    for n in 0u32.. {
        if u128::from(n).pow(n + 1) > BIJECTION_LIMIT {
            break;
        }
        for lambda in 0u32.. {
            if u128::from(n + lambda).pow(n + 1) > BIJECTION_LIMIT {
                break;
            }
            grid.push((n as usize, lambda as usize));
        }
    }
    // n = 0 carries almost all of the objects, so it runs last
    grid.sort_by_key(|&(n, lambda)| (n == 0, lambda));
    let objects_total: u128 = grid.iter().map(|&(n, l)| ((n + l) as u128).pow(n as u32 + 1)).sum();
    let mut objects = 0u128;
    let mut done = 0;
    for &(n, lambda) in &grid {
        if start.elapsed() > BIJECTION_BUDGET {
            break;
        }
        let s = check_bijection(n, lambda).map_err(|e| format!("n={n} λ={lambda}: {e}"))?;
        ensure(s.passed(), || format!("n={n} λ={lambda}: {s}"))?;
        objects += u128::from(s.objects);
        done += 1;
    }
    let coverage = format!(
        "{done} of {} (n,λ) pairs, {objects} of {objects_total} objects",
        grid.len()
    );
    ensure(done == grid.len(), || format!("budget exhausted after {coverage}"))?;
    Ok(format!("{coverage}: round trips and strata match"))
}

fn criterion_5() -> Check {
    for n in 0..=5usize {
        let mut strata = vec![0u64; n + 1];
        let mut count = 0u64;
        for forest in forests(n + 1).map_err(|e| e.to_string())? {
            strata[forest.num_components() - 1] += 1;
            count += 1;
        }
        ensure(count == (n as u64 + 2).pow(n as u32), || {
            format!("n={n}: {count} forests")
        })?;
        for (k, &c) in strata.iter().enumerate() {
            let expected = binomial(n, k) * BigInt::from(n + 1).pow((n - k) as u32);
            ensure(BigInt::from(c) == expected, || {
                format!("n={n} k={k}: {c} vs {expected}")
            })?;
        }
    }
    Ok("forest counts and component strata match for n<=5".into())
}

fn criterion_6() -> Check {
    let order = 10;
    let y = tree_function(order).map_err(|e| e.to_string())?;
    let x = TruncatedSeries::variable(sym::X, order);
    let rhs = x
        .mul(&TruncatedSeries::exp(&y).map_err(|e| e.to_string())?)
        .map_err(|e| e.to_string())?;
    ensure(y == rhs, || "y != x·exp(y)".into())?;
    for n in 1..=order {
        let c = Polynomial::constant(Rational::new(BigInt::from(n).pow(n as u32 - 1), factorial(n)));
        ensure(y.coeff(n) == Some(&c), || format!("tree coefficient {n}"))?;
    }
    let counts = verify_runs(&[
        ("2.1", None, None, Some(8)),
        ("2.2", None, None, Some(8)),
        ("2.3", None, None, Some(8)),
        ("2.3a", Some(8), None, None),
    ])?;
    Ok(format!("tree function exact to order {order}; {counts}"))
}

fn criterion_7() -> Check {
    verify_runs(&[("thm1.2", None, None, Some(8))])
}

fn criterion_8() -> Check {
    verify_runs(&[
        ("3.4", None, None, Some(6)),
        ("3.5", None, Some(3), Some(6)),
        ("3.6", None, Some(3), Some(6)),
        ("3.7", None, Some(3), Some(6)),
        ("3.7.1", None, Some(3), Some(8)),
        ("3.8", None, Some(3), Some(6)),
        ("3.9", None, Some(3), Some(6)),
        ("gessel", None, None, Some(5)),
        ("chz", None, None, Some(8)),
    ])
}

fn criterion_9() -> Check {
    let counts = verify_runs(&[
        ("4.1", Some(10), None, None),
        ("4.2", Some(10), None, None),
        ("4.3", Some(10), None, None),
        ("4.4", Some(10), None, None),
        ("4.5", Some(10), None, None),
        ("cor-selfdual", Some(10), None, None),
        ("cor-n-factorial", Some(10), None, None),
        ("remark-mu", Some(10), None, None),
        ("difference", Some(10), None, None),
        ("stirling-difference", Some(10), Some(10), None),
        ("4.3a", Some(10), None, None),
    ])?;
    let mut rng = rand::rngs::StdRng::seed_from_u64(0x1f);
    for trial in 0..50 {
        let a: Vec<BigInt> = (0..10)
            .map(|_| BigInt::from(rng.gen_range(-1_000_000i64..=1_000_000)))
            .collect();
        for kind in [InverseKind::Derangement, InverseKind::Tree] {
            ensure(inverse_relation_roundtrip(kind, &a) == a, || {
                format!("{} trial {trial}", kind.tag())
            })?;
        }
    }
    Ok(format!("{counts}; 50 random inverse round trips"))
}

fn criterion_10() -> Check {
    verify_runs(&[
        ("5.1", Some(10), None, None),
        ("q-second", Some(10), None, None),
        ("5.2", Some(10), None, None),
        ("q-diag", Some(8), None, None),
        ("q-explicit", Some(10), None, None),
        ("5.3", Some(10), None, None),
        ("5.4", Some(10), None, None),
        ("thm5.2", Some(8), None, None),
    ])
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        (1, "route agreement", Some(ROUTE_BUDGET), criterion_1),
        (2, "oracle agreement", None, criterion_2),
        (3, "λ-factorial Abel sum and its integer cases", None, criterion_3),
        (
            4,
            "bijection round trip and strata",
            Some(BIJECTION_BUDGET),
            criterion_4,
        ),
        (5, "Cayley forest counts", None, criterion_5),
        (6, "tree function and EGF layer", None, criterion_6),
        (7, "λ-factorial EGF transform", None, criterion_7),
        (8, "transform applications", None, criterion_8),
        (9, "Abel-type identities and inverse relations", None, criterion_9),
        (10, "Q polynomials", None, criterion_10),
    ];
    println!("acceptance (tolerance {TOLERANCE}: exact equality)");
    let suite = Instant::now();
    let mut unexpected = Vec::new();
    for (id, name, budget, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = match (outcome, budget) {
            (Ok(_), Some(b)) if elapsed > b => Err(format!("took {elapsed:.1?}, budget {b:?}")),
            (o, _) => o,
        };
        let (tag, detail) = match &outcome {
            Ok(d) => ("PASS", d),
            Err(d) => ("FAIL", d),
        };
        println!("criterion {id:>2} {tag} {name}: {detail} [{elapsed:.2?}]");
        if outcome.is_err() && !UNATTAINABLE.contains(&id) {
            unexpected.push(id);
        }
    }
    let elapsed = suite.elapsed();
    let within = elapsed <= SUITE_BUDGET;
    println!(
        "suite {} in {elapsed:.1?} (budget {SUITE_BUDGET:?}); known unattainable: {UNATTAINABLE:?}",
        if within { "finished" } else { "OVER BUDGET" }
    );
    if unexpected.is_empty() && within {
        ExitCode::SUCCESS
    } else {
        println!("unexpected failures: {unexpected:?}");
        ExitCode::FAILURE
    }
}
