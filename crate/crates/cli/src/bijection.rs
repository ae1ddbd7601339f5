use lfact::enumeration::dot::{colored_map_to_dot, endofunction_to_dot, pair_to_dot};
use lfact::enumeration::{check_bijection, pair_to_sigma, sigma_to_pair, sigma_to_tau, Endofunction, EnumerationError};

use crate::CliError;

fn usage(e: EnumerationError) -> CliError {
    CliError::usage(e.to_string())
}

/// Parses `σ` as a comma-separated image list. A list of length `n+1` is
/// taken as `σ|[n+1]` and extended by the fixed points `n+2..=n+λ+1`.
fn parse_sigma(s: &str, n: usize, lambda: usize) -> Result<Endofunction, CliError> {
    let mut image = s
        .split(',')
        .map(|t| t.trim().parse::<usize>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| CliError::usage(format!("invalid σ `{s}`: expected comma-separated positive integers")))?;
    if image.len() == n + 1 && lambda > 0 {
        image.extend(n + 2..=n + lambda + 1);
    }
    Endofunction::new(image).map_err(usage)
}

fn list(v: &[usize]) -> String {
    v.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

fn partial(v: &[Option<usize>]) -> String {
    v.iter()
        .map(|x| x.map_or_else(|| "-".to_string(), |y| y.to_string()))
        .collect::<Vec<_>>()
        .join(",")
}

pub fn run(n: usize, lambda: usize, sigma: Option<&str>) -> Result<u8, CliError> {
    let Some(sigma) = sigma else {
        let summary = check_bijection(n, lambda).map_err(usage)?;
        outln!("{summary}");
        return Ok(if summary.passed() { 0 } else { 1 });
    };
    let sigma = parse_sigma(sigma, n, lambda)?;
    let tau = sigma_to_tau(&sigma, n, lambda).map_err(usage)?;
    let pair = sigma_to_pair(&sigma, n, lambda).map_err(usage)?;
    let back = pair_to_sigma(&pair, n, lambda).map_err(|e| CliError {
        message: e.to_string(),
        code: 1,
    })?;
    outln!("sigma:     {}", list(sigma.image()));
    outln!("tau:       {}", list(&tau.map));
    outln!("tau color: {}", partial(&tau.colors));
    outln!("forest:    {}", partial(pair.forest.parents()));
    outln!("pi:        {}", partial(&pair.pi));
    outln!("colors:    {}", partial(&pair.colors));
    outln!("recovered: {}", list(back.image()));
    outln!();
    out!("{}", endofunction_to_dot("sigma", &sigma));
    out!("{}", colored_map_to_dot("tau", &tau));
    out!("{}", pair_to_dot("pair", &pair));
    Ok(if back == sigma { 0 } else { 1 })
}
