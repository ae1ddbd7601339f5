//! The umbral evaluator and a catalogue of identities, each checked as an
//! exact polynomial or truncated-series equality.
//!
//! [`verify`] runs one catalogue entry over its parameter range and returns a
//! report per parameter point. A report passes exactly when the residual
//! (left side minus right side) is identically zero.

mod catalogue;
mod inverse;
mod poly_ids;
mod q_ids;
mod series_ids;
mod umbral;

use std::fmt;
use std::time::Instant;

use serde::Serialize;

pub use catalogue::{catalogue, lookup, IdentityInfo, Param};
pub use inverse::{inverse_relation_roundtrip, InverseKind};
pub use series_ids::{a_family, A_FAMILIES};
pub use umbral::{derangement_moments, umbral_eval, UmbralMoments};

use crate::algebra::Polynomial;
use crate::enumeration::EnumerationError;
use crate::series::{SeriesError, TruncatedSeries};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IdentityError {
    #[error("unknown identity `{0}`")]
    UnknownId(String),
    #[error("{id}: {param} = {value} is above the cutoff {cutoff} (pass --unsafe to override)")]
    AboveCutoff {
        id: String,
        param: &'static str,
        value: usize,
        cutoff: usize,
    },
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Enumeration(#[from] EnumerationError),
}

/// Left side minus right side of one check.
#[derive(Debug, Clone)]
pub enum Residual {
    Polynomial(Polynomial),
    Series(TruncatedSeries),
    /// Several named residuals that must all vanish.
    Parts(Vec<(String, Polynomial)>),
}

impl Residual {
    pub fn is_zero(&self) -> bool {
        match self {
            Residual::Polynomial(p) => p.is_zero(),
            Residual::Series(s) => s.is_zero(),
            Residual::Parts(parts) => parts.iter().all(|(_, p)| p.is_zero()),
        }
    }

    pub fn parts(parts: impl IntoIterator<Item = (String, Polynomial)>) -> Self {
        Residual::Parts(parts.into_iter().collect())
    }
}

impl fmt::Display for Residual {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        match self {
            Residual::Polynomial(p) => write!(f, "{p}"),
            Residual::Series(s) => write!(f, "{s}"),
            Residual::Parts(parts) => {
                let nonzero: Vec<String> = parts
                    .iter()
                    .filter(|(_, p)| !p.is_zero())
                    .map(|(name, p)| format!("{name}: {p}"))
                    .collect();
                f.write_str(&nonzero.join("; "))
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

/// Outcome of one identity at one parameter point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub id: String,
    pub params: String,
    /// Truncation order of series checks.
    pub order: Option<usize>,
    /// `"0"` exactly when the check passed.
    pub residual: String,
    pub verdict: Verdict,
    pub elapsed_ms: u64,
}

impl IdentityReport {
    pub fn new(id: &str, params: String, order: Option<usize>, residual: &Residual, elapsed_ms: u64) -> Self {
        IdentityReport {
            id: id.to_string(),
            params,
            order,
            residual: residual.to_string(),
            verdict: if residual.is_zero() {
                Verdict::Pass
            } else {
                Verdict::Fail
            },
            elapsed_ms,
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }
}

/// Overrides for the parameter ranges of [`verify`]. Values above an
/// identity's default bound are refused unless `allow_unsafe` is set.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct VerifyOptions {
    pub n_max: Option<usize>,
    pub m_max: Option<usize>,
    pub order: Option<usize>,
    pub allow_unsafe: bool,
}

/// Resolved parameter bounds handed to an identity's checker.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Bounds {
    pub n: usize,
    pub m: usize,
    pub order: usize,
}

/// One deferred check; run and timed by [`verify`].
pub(crate) struct Point {
    pub params: String,
    pub order: Option<usize>,
    pub run: Box<dyn FnOnce() -> Result<Residual, IdentityError>>,
}

impl Point {
    pub fn new(
        params: impl Into<String>,
        order: Option<usize>,
        run: impl FnOnce() -> Result<Residual, IdentityError> + 'static,
    ) -> Self {
        Point {
            params: params.into(),
            order,
            run: Box::new(run),
        }
    }

    pub fn poly(params: impl Into<String>, run: impl FnOnce() -> Polynomial + 'static) -> Self {
        Point::new(params, None, move || Ok(Residual::Polynomial(run())))
    }
}

fn resolve(
    info: &IdentityInfo,
    param: Param,
    value: Option<usize>,
    allow_unsafe: bool,
) -> Result<usize, IdentityError> {
    let default = info.default(param).unwrap_or(0);
    match value {
        Some(v) if v > default && !allow_unsafe => Err(IdentityError::AboveCutoff {
            id: info.id.to_string(),
            param: param.name(),
            value: v,
            cutoff: default,
        }),
        Some(v) if info.default(param).is_some() => Ok(v),
        _ => Ok(default),
    }
}

fn bounds(id: &str, opts: &VerifyOptions) -> Result<(&'static IdentityInfo, Bounds), IdentityError> {
    let info = lookup(id).ok_or_else(|| IdentityError::UnknownId(id.to_string()))?;
    let bounds = Bounds {
        n: resolve(info, Param::N, opts.n_max, opts.allow_unsafe)?,
        m: resolve(info, Param::M, opts.m_max, opts.allow_unsafe)?,
        order: resolve(info, Param::Order, opts.order, opts.allow_unsafe)?,
    };
    Ok((info, bounds))
}

/// Validates `id` and the overrides in `opts` without running anything.
pub fn check_options(id: &str, opts: &VerifyOptions) -> Result<(), IdentityError> {
    bounds(id, opts).map(|_| ())
}

/// Checks one catalogued identity over its parameter range.
pub fn verify(id: &str, opts: &VerifyOptions) -> Result<Vec<IdentityReport>, IdentityError> {
    let (info, bounds) = bounds(id, opts)?;
    let mut reports = Vec::new();
    for point in (info.points)(bounds) {
        let start = Instant::now();
        let residual = (point.run)()?;
        let elapsed = start.elapsed().as_millis() as u64;
        reports.push(IdentityReport::new(
            info.id,
            point.params,
            point.order,
            &residual,
            elapsed,
        ));
    }
    Ok(reports)
}

/// Runs [`verify`] for every catalogue entry in catalogue order.
pub fn verify_all(opts: &VerifyOptions) -> Result<Vec<IdentityReport>, IdentityError> {
    let mut out = Vec::new();
    for info in catalogue() {
        out.extend(verify(info.id, opts)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, sym, var};

    #[test]
    fn report_json_shape() {
        let r = IdentityReport::new("x", "n=1".into(), None, &Residual::Polynomial(int(0)), 3);
        assert_eq!(
            r.to_json(),
            r#"{"id":"x","params":"n=1","order":null,"residual":"0","verdict":"pass","elapsed_ms":3}"#
        );
        let bad = IdentityReport::new("x", "n=1".into(), Some(4), &Residual::Polynomial(var(sym::LAMBDA)), 0);
        assert_eq!(bad.verdict, Verdict::Fail);
        assert_eq!(bad.residual, "λ");
    }

    #[test]
    fn parts_render_only_nonzero() {
        let r = Residual::parts([("a".to_string(), int(0)), ("b".to_string(), int(2))]);
        assert!(!r.is_zero());
        assert_eq!(r.to_string(), "b: 2");
    }

    #[test]
    fn spec_examples() {
        let riordan = verify(
            "riordan",
            &VerifyOptions {
                n_max: Some(3),
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(riordan.len(), 4);
        assert!(riordan.iter().all(IdentityReport::passed));
        let sunxu = verify(
            "sunxu",
            &VerifyOptions {
                n_max: Some(2),
                ..Default::default()
            },
        )
        .unwrap();
        assert!(sunxu.iter().all(IdentityReport::passed));
        let t = verify(
            "thm1.1",
            &VerifyOptions {
                n_max: Some(1),
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(t.len(), 2);
        assert!(t.iter().all(IdentityReport::passed));
    }

    #[test]
    fn unknown_id_and_cutoffs() {
        assert_eq!(
            verify("bogus", &VerifyOptions::default()).unwrap_err(),
            IdentityError::UnknownId("bogus".into())
        );
        let over = VerifyOptions {
            n_max: Some(99),
            ..Default::default()
        };
        assert!(matches!(
            verify("riordan", &over),
            Err(IdentityError::AboveCutoff { .. })
        ));
        let forced = VerifyOptions {
            n_max: Some(13),
            allow_unsafe: true,
            ..Default::default()
        };
        assert_eq!(verify("riordan", &forced).unwrap().len(), 14);
    }

    #[test]
    fn ids_are_unique() {
        let mut ids: Vec<&str> = catalogue().iter().map(|i| i.id).collect();
        let len = ids.len();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), len);
    }
}
