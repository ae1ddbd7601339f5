use std::io;

use lfact::algebra::Polynomial;
use lfact::sequences::{bell_poly, charlier, derangement, f, factorial, hermite_poly, q_poly, stirling2, QPolyRoute};

use crate::{CliError, Format};

const FAMILIES: [&str; 8] = [
    "factorial",
    "derangement",
    "lambda-factorial",
    "charlier",
    "bell",
    "hermite",
    "stirling2",
    "q",
];

/// Largest index accepted without `--unsafe`.
fn cutoff(family: &str) -> usize {
    match family {
        "factorial" | "derangement" | "stirling2" => 200,
        "q" => 20,
        _ => 30,
    }
}

/// Parses `a..b` (inclusive) or a single index.
pub fn parse_range(s: &str) -> Result<(usize, usize), CliError> {
    let bad = || CliError::usage(format!("invalid range `{s}`, expected `a..b` or `n`"));
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => {
            let b = b.strip_prefix('=').unwrap_or(b);
            (
                a.trim().parse().map_err(|_| bad())?,
                b.trim().parse().map_err(|_| bad())?,
            )
        }
        None => {
            let n = s.trim().parse().map_err(|_| bad())?;
            (n, n)
        }
    };
    if lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

struct Row {
    n: usize,
    m: Option<usize>,
    value: String,
}

fn value(family: &str, n: usize, m: usize) -> String {
    let p: Polynomial = match family {
        "factorial" => factorial(n).into(),
        "derangement" => derangement(n).into(),
        "lambda-factorial" => f(n),
        "charlier" => charlier(n),
        "bell" => bell_poly(n),
        "hermite" => hermite_poly(n),
        "stirling2" => stirling2(n, m).into(),
        "q" => q_poly(n, m, QPolyRoute::DefinitionSum),
        _ => unreachable!(),
    };
    p.to_string()
}

pub fn run(family: &str, n: &str, m: Option<&str>, format: Format, allow_unsafe: bool) -> Result<u8, CliError> {
    if !FAMILIES.contains(&family) {
        return Err(CliError::usage(format!(
            "unknown family `{family}`; expected one of {}",
            FAMILIES.join(", ")
        )));
    }
    let two_index = matches!(family, "stirling2" | "q");
    if m.is_some() && !two_index {
        return Err(CliError::usage(format!("family `{family}` takes a single index range")));
    }
    let (n_lo, n_hi) = parse_range(n)?;
    let m_range = m.map(parse_range).transpose()?;
    let limit = cutoff(family);
    let top = n_hi + m_range.map_or(0, |(_, hi)| if family == "q" { hi } else { 0 });
    if top > limit && !allow_unsafe {
        return Err(CliError::usage(format!("{family} beyond {limit} needs --unsafe")));
    }

    let mut rows = Vec::new();
    for i in n_lo..=n_hi {
        if two_index {
            let (m_lo, m_hi) = m_range.unwrap_or((0, if family == "stirling2" { i } else { 0 }));
            for j in m_lo..=m_hi {
                rows.push(Row {
                    n: i,
                    m: Some(j),
                    value: value(family, i, j),
                });
            }
        } else {
            rows.push(Row {
                n: i,
                m: None,
                value: value(family, i, 0),
            });
        }
    }

    let second = if family == "stirling2" { "k" } else { "m" };
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(io::stdout());
            let io_err = |e: csv::Error| match e.into_kind() {
                csv::ErrorKind::Io(e) => CliError::from(e),
                other => CliError {
                    message: format!("{other:?}"),
                    code: 1,
                },
            };
            if two_index {
                w.write_record(["n", second, "value"]).map_err(io_err)?;
            } else {
                w.write_record(["n", "value"]).map_err(io_err)?;
            }
            for r in &rows {
                let mut rec = vec![r.n.to_string()];
                rec.extend(r.m.map(|m| m.to_string()));
                rec.push(r.value.clone());
                w.write_record(&rec).map_err(io_err)?;
            }
            w.flush()?;
        }
        Format::Json => {
            let items: Vec<serde_json::Value> = rows
                .iter()
                .map(|r| {
                    let mut obj = serde_json::Map::new();
                    obj.insert("n".into(), r.n.into());
                    if let Some(m) = r.m {
                        obj.insert(second.into(), m.into());
                    }
                    obj.insert("value".into(), r.value.clone().into());
                    serde_json::Value::Object(obj)
                })
                .collect();
            outln!("{}", serde_json::Value::Array(items));
        }
    }
    Ok(0)
}
