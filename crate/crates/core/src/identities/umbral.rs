use std::fmt;
use std::sync::Arc;

use crate::algebra::{sym, Polynomial};
use crate::sequences::derangement;

/// A moment sequence for the umbra `D`: `D^k` evaluates to `moment(k)`.
#[derive(Clone)]
pub struct UmbralMoments {
    pub name: String,
    moment: Arc<dyn Fn(usize) -> Polynomial + Send + Sync>,
}

impl UmbralMoments {
    pub fn new(name: &str, moment: impl Fn(usize) -> Polynomial + Send + Sync + 'static) -> Self {
        UmbralMoments {
            name: name.to_string(),
            moment: Arc::new(moment),
        }
    }

    pub fn moment(&self, k: usize) -> Polynomial {
        (self.moment)(k)
    }
}

impl fmt::Debug for UmbralMoments {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UmbralMoments({})", self.name)
    }
}

/// `D^k ↦ D_k`, the derangement numbers.
pub fn derangement_moments() -> UmbralMoments {
    UmbralMoments::new("derangement", |k| Polynomial::from(derangement(k)))
}

/// Linear evaluation: each term `c D^k r` becomes `c · moment(k) · r`.
pub fn umbral_eval(p: &Polynomial, moments: &UmbralMoments) -> Polynomial {
    let mut cache: Vec<Option<Polynomial>> = Vec::new();
    let mut out = Polynomial::zero();
    for (m, c) in p.terms() {
        let (k, rest) = m.split(sym::D);
        let k = k as usize;
        if cache.len() <= k {
            cache.resize(k + 1, None);
        }
        let value = cache[k].get_or_insert_with(|| moments.moment(k));
        out = out + &*value * &Polynomial::term(c.clone(), rest);
    }
    out
}
