use lfact::algebra::{int, sym, var, Polynomial};
use lfact::identities::{a_family, A_FAMILIES};
use lfact::sequences::f_at;
use lfact::series::{abel_rhs, tree_function, TruncatedSeries};

use crate::CliError;

pub const MAX_ORDER: usize = 12;

pub fn run(
    what: &str,
    order: usize,
    a: &str,
    lambda: Option<i64>,
    json: bool,
    allow_unsafe: bool,
) -> Result<u8, CliError> {
    if order > MAX_ORDER && !allow_unsafe {
        return Err(CliError::usage(format!(
            "order {order} exceeds {MAX_ORDER}; pass --unsafe"
        )));
    }
    let lam = lambda.map_or_else(|| var(sym::LAMBDA), int);
    let series = match what {
        "tree" => tree_function(order).map_err(|e| CliError {
            message: e.to_string(),
            code: 1,
        })?,
        "egf-f" => TruncatedSeries::from_egf(sym::X, |n| f_at(n, &lam), order),
        "abel-rhs" => {
            let family = a_family(a).ok_or_else(|| {
                CliError::usage(format!(
                    "unknown coefficient family `{a}`; expected one of {}",
                    A_FAMILIES.join(", ")
                ))
            })?;
            let a_fn = move |n: usize| -> Polynomial { family(n) };
            abel_rhs(&a_fn, &lam, order)
        }
        other => {
            return Err(CliError::usage(format!(
                "unknown series `{other}`; expected tree, egf-f or abel-rhs"
            )))
        }
    };
    if json {
        outln!("{}", serde_json::Value::from(series.coefficient_strings()));
    } else {
        outln!("{series}");
    }
    Ok(0)
}
