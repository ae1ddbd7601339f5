use lfact::identities::{catalogue, check_options, lookup, verify, IdentityError, VerifyOptions};

use crate::CliError;

pub fn list() -> Result<u8, CliError> {
    for info in catalogue() {
        let mut bounds = Vec::new();
        if let Some(n) = info.n {
            bounds.push(format!("n<={n}"));
        }
        if let Some(m) = info.m {
            bounds.push(format!("m<={m}"));
        }
        if let Some(o) = info.order {
            bounds.push(format!("order {o}"));
        }
        outln!("{:<20} {:<18} {}", info.id, bounds.join(", "), info.title);
    }
    Ok(0)
}

/// Prints one JSON report per line, ids in the order given. Exit code 0 iff
/// every report passes.
pub fn run(ids: &[String], opts: &VerifyOptions) -> Result<u8, CliError> {
    if ids.is_empty() {
        return Err(CliError::usage("no identity ids given (use `all` or --list)"));
    }
    let selected: Vec<&str> = if ids.iter().any(|i| i == "all") {
        catalogue().iter().map(|i| i.id).collect()
    } else {
        for id in ids {
            if lookup(id).is_none() {
                return Err(CliError::usage(format!("unknown identity `{id}`")));
            }
        }
        let mut v: Vec<&str> = Vec::new();
        for id in ids {
            if !v.contains(&id.as_str()) {
                v.push(id);
            }
        }
        v
    };
    for id in &selected {
        check_options(id, opts).map_err(|e| CliError::usage(e.to_string()))?;
    }
    let mut all_pass = true;
    for id in selected {
        let reports = verify(id, opts).map_err(|e| match e {
            IdentityError::UnknownId(_) | IdentityError::AboveCutoff { .. } => CliError::usage(e.to_string()),
            other => CliError {
                message: other.to_string(),
                code: 1,
            },
        })?;
        for r in reports {
            all_pass &= r.passed();
            outln!("{}", r.to_json());
        }
    }
    Ok(if all_pass { 0 } else { 1 })
}
