//! The colored functional-digraph bijection behind
//! `Σ_k C(n,k) f_{k+1}(λ) (n+1)^{n-k} = (n+λ)^{n+1}`.
//!
//! `𝔐*` is the set of maps `σ` on `[n+λ+1]` with no preimage of `n+1` and
//! `σ(k) = k` for `k >= n+2`. Such a `σ` is rewritten into a map `τ` on
//! `[n+1]` whose fixed points carry a color in `[λ]`:
//!
//! 1. a fixed point `i ∈ [n]` of `σ` becomes the edge `i -> n+1`;
//! 2. an edge `i -> n+j+1` becomes a fixed point `i` colored `j`;
//! 3. the vertices `n+2..=n+λ+1` are dropped.
//!
//! `τ` then splits into a rooted forest on `[n+1]` (its tree edges), the
//! permutation `π` it induces on the roots (its cycles), and the colors on
//! the fixed points of `π`.
//!
//! Only `σ` restricted to `[n+1]` carries information, so the exhaustive
//! checker works on that prefix directly.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::digraph::{Endofunction, Odometer, RootedForest};
use super::EnumerationError;
use crate::algebra::sym;
use crate::sequences::{binomial, f};

/// Largest `(n+λ)^{n+1}` accepted by [`enumerate_m_star`] and
/// [`check_bijection`].
pub const M_STAR_CUTOFF: u64 = 1_000_000;

/// `|𝔐*_{n+λ+1}| = (n+λ)^{n+1}`, or `None` on overflow.
pub fn m_star_size(n: usize, lambda: usize) -> Option<u64> {
    (n as u64 + lambda as u64).checked_pow(n as u32 + 1)
}

fn check_m_star_size(n: usize, lambda: usize) -> Result<u64, EnumerationError> {
    match m_star_size(n, lambda) {
        Some(s) if s <= M_STAR_CUTOFF => Ok(s),
        _ => Err(EnumerationError::AboveCutoff {
            what: "𝔐*",
            n: n + lambda,
            cutoff: M_STAR_CUTOFF as usize,
        }),
    }
}

/// Allowed values of `σ(i)` for `i ∈ [n+1]`: everything but `n+1`.
fn head_values(n: usize) -> impl Fn(usize) -> usize {
    move |idx| if idx < n { idx + 1 } else { idx + 2 }
}

fn heads(n: usize, lambda: usize) -> impl Iterator<Item = Vec<usize>> {
    let choices = n + lambda;
    let value = head_values(n);
    let odo = if choices == 0 {
        Odometer::new(n + 1, 1, 0)
    } else {
        Odometer::new(n + 1, 0, choices - 1)
    };
    odo.map(move |idx| idx.into_iter().map(&value).collect())
}

/// Every member of `𝔐*_{n+λ+1}`, in lexicographic order of the image array.
pub fn enumerate_m_star(n: usize, lambda: usize) -> Result<impl Iterator<Item = Endofunction>, EnumerationError> {
    check_m_star_size(n, lambda)?;
    Ok(heads(n, lambda).map(move |mut image| {
        image.extend(n + 2..=n + lambda + 1);
        Endofunction::new(image).expect("m* members are endofunctions")
    }))
}

/// Checks membership in `𝔐*_{n+λ+1}` and returns `σ` restricted to `[n+1]`.
fn m_star_head(sigma: &Endofunction, n: usize, lambda: usize) -> Result<&[usize], EnumerationError> {
    let err = |msg: String| Err(EnumerationError::NotInMStar(msg));
    if sigma.n() != n + lambda + 1 {
        return err(format!("σ acts on [{}], expected [{}]", sigma.n(), n + lambda + 1));
    }
    for k in n + 2..=n + lambda + 1 {
        if sigma.apply(k) != k {
            return err(format!("σ({k}) = {} but must fix {k}", sigma.apply(k)));
        }
    }
    if let Some(i) = (1..=sigma.n()).find(|&i| sigma.apply(i) == n + 1) {
        return err(format!("σ({i}) = {} but n+1 must have no preimage", n + 1));
    }
    Ok(&sigma.image()[..n + 1])
}

/// The intermediate map `τ` on `[n+1]`; `colors[i-1]` is `Some(j)` exactly
/// when `i` is a fixed point of `τ`, colored `c_j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ColoredMap {
    pub map: Vec<usize>,
    pub colors: Vec<Option<usize>>,
}

impl ColoredMap {
    pub fn n_plus_one(&self) -> usize {
        self.map.len()
    }
}

fn head_to_tau(head: &[usize], n: usize) -> ColoredMap {
    let mut map = Vec::with_capacity(n + 1);
    let mut colors = vec![None; n + 1];
    for (idx, &s) in head.iter().enumerate() {
        let i = idx + 1;
        if s > n + 1 {
            // rule (ii): edge into n+j+1 becomes a fixed point colored j
            map.push(i);
            colors[idx] = Some(s - n - 1);
        } else if s == i {
            // rule (i): a fixed point in [n] is redirected to n+1
            map.push(n + 1);
        } else {
            map.push(s);
        }
    }
    ColoredMap { map, colors }
}

fn tau_to_head(tau: &ColoredMap, n: usize, lambda: usize) -> Result<Vec<usize>, EnumerationError> {
    let mut head = Vec::with_capacity(n + 1);
    for (idx, &t) in tau.map.iter().enumerate() {
        let i = idx + 1;
        let s = if t == i {
            match tau.colors[idx] {
                Some(j) if (1..=lambda).contains(&j) => n + j + 1,
                Some(j) => return Err(EnumerationError::InvalidPair(format!("color {j} not in [1, {lambda}]"))),
                None => return Err(EnumerationError::InvalidPair(format!("fixed point {i} has no color"))),
            }
        } else if tau.colors[idx].is_some() {
            return Err(EnumerationError::InvalidPair(format!("{i} is colored but not fixed")));
        } else if t == n + 1 {
            i
        } else {
            t
        };
        head.push(s);
    }
    Ok(head)
}

/// Applies the three rewriting rules to `σ ∈ 𝔐*`.
pub fn sigma_to_tau(sigma: &Endofunction, n: usize, lambda: usize) -> Result<ColoredMap, EnumerationError> {
    Ok(head_to_tau(m_star_head(sigma, n, lambda)?, n))
}

/// Inverts [`sigma_to_tau`].
pub fn tau_to_sigma(tau: &ColoredMap, n: usize, lambda: usize) -> Result<Endofunction, EnumerationError> {
    if tau.map.len() != n + 1 || tau.colors.len() != n + 1 {
        return Err(EnumerationError::InvalidPair(format!("τ must act on [{}]", n + 1)));
    }
    if let Some(&bad) = tau.map.iter().find(|&&t| t == 0 || t > n + 1) {
        return Err(EnumerationError::InvalidPair(format!(
            "τ value {bad} outside [1, {}]",
            n + 1
        )));
    }
    let mut image = tau_to_head(tau, n, lambda)?;
    image.extend(n + 2..=n + lambda + 1);
    Endofunction::new(image)
}

/// A rooted forest on `[n+1]`, a permutation `π` of its roots, and a color
/// on each fixed point of `π`. `pi[v-1]` is `Some(π(v))` exactly for roots.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ColoredForestPermutation {
    pub forest: RootedForest,
    pub pi: Vec<Option<usize>>,
    pub colors: Vec<Option<usize>>,
}

impl ColoredForestPermutation {
    pub fn num_components(&self) -> usize {
        self.forest.num_components()
    }

    /// Checks every structural invariant for a pair over `[n+1]` with
    /// `λ` colors.
    pub fn validate(&self, n: usize, lambda: usize) -> Result<(), EnumerationError> {
        let bad = |msg: String| Err(EnumerationError::InvalidPair(msg));
        let m = n + 1;
        if self.forest.len() != m || self.pi.len() != m || self.colors.len() != m {
            return bad(format!("components must all live on [{m}]"));
        }
        let mut hit = vec![false; m];
        for v in 1..=m {
            match (self.forest.is_root(v), self.pi[v - 1]) {
                (true, Some(w)) => {
                    if w == 0 || w > m || !self.forest.is_root(w) {
                        return bad(format!("π({v}) = {w} is not a root"));
                    }
                    if std::mem::replace(&mut hit[w - 1], true) {
                        return bad(format!("π hits {w} twice"));
                    }
                }
                (true, None) => return bad(format!("root {v} has no π image")),
                (false, Some(_)) => return bad(format!("π defined on non-root {v}")),
                (false, None) => {}
            }
            let fixed = self.pi[v - 1] == Some(v);
            match (fixed, self.colors[v - 1]) {
                (true, Some(c)) if (1..=lambda).contains(&c) => {}
                (true, Some(c)) => return bad(format!("color {c} of {v} not in [1, {lambda}]")),
                (true, None) => return bad(format!("fixed point {v} of π has no color")),
                (false, Some(_)) => return bad(format!("{v} is colored but not fixed by π")),
                (false, None) => {}
            }
        }
        Ok(())
    }
}

/// `i` lies on a cycle of `image` iff some iterate returns to it.
fn cyclic_mask(image: &[usize]) -> Vec<bool> {
    let m = image.len();
    (1..=m)
        .map(|start| {
            let mut v = start;
            for _ in 0..m {
                v = image[v - 1];
                if v == start {
                    return true;
                }
            }
            false
        })
        .collect()
}

/// Splits `τ` into its forest, root permutation and colors.
pub fn tau_to_pair(tau: &ColoredMap) -> ColoredForestPermutation {
    let cyclic = cyclic_mask(&tau.map);
    let mut parent = Vec::with_capacity(tau.map.len());
    let mut pi = Vec::with_capacity(tau.map.len());
    for (idx, &t) in tau.map.iter().enumerate() {
        if cyclic[idx] {
            parent.push(None);
            pi.push(Some(t));
        } else {
            parent.push(Some(t));
            pi.push(None);
        }
    }
    ColoredForestPermutation {
        forest: RootedForest::new(parent).expect("tree edges of a functional digraph are acyclic"),
        pi,
        colors: tau.colors.clone(),
    }
}

/// Reassembles `τ`: tree edges from the forest, cycle edges from `π`.
pub fn pair_to_tau(pair: &ColoredForestPermutation) -> ColoredMap {
    let map = pair
        .forest
        .parents()
        .iter()
        .zip(&pair.pi)
        .map(|(p, q)| p.or(*q).expect("every vertex is a root or has a parent"))
        .collect();
    ColoredMap {
        map,
        colors: pair.colors.clone(),
    }
}

pub fn sigma_to_pair(
    sigma: &Endofunction,
    n: usize,
    lambda: usize,
) -> Result<ColoredForestPermutation, EnumerationError> {
    Ok(tau_to_pair(&sigma_to_tau(sigma, n, lambda)?))
}

pub fn pair_to_sigma(
    pair: &ColoredForestPermutation,
    n: usize,
    lambda: usize,
) -> Result<Endofunction, EnumerationError> {
    pair.validate(n, lambda)?;
    tau_to_sigma(&pair_to_tau(pair), n, lambda)
}

/// Object count for the pairs whose forest has `k+1` components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stratum {
    pub k: usize,
    pub count: u64,
    /// `C(n,k) (n+1)^{n-k} f_{k+1}(λ)`.
    pub expected: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BijectionSummary {
    pub n: usize,
    pub lambda: usize,
    pub objects: u64,
    /// `(n+λ)^{n+1}`.
    pub expected_objects: u64,
    /// Every image was a valid colored pair and mapped back to its source.
    pub round_trip_ok: bool,
    pub strata: Vec<Stratum>,
}

impl BijectionSummary {
    pub fn passed(&self) -> bool {
        self.round_trip_ok
            && self.objects == self.expected_objects
            && self.strata.iter().all(|s| BigInt::from(s.count) == s.expected)
    }
}

/// `C(n,k) (n+1)^{n-k} f_{k+1}(λ)` at integer `λ`.
pub fn stratum_size(n: usize, k: usize, lambda: usize) -> BigInt {
    let fk = f(k + 1)
        .eval_integer(&[(sym::LAMBDA, lambda as i64)])
        .expect("f has only λ")
        .to_integer();
    binomial(n, k) * BigInt::from(n + 1).pow((n - k) as u32) * fk
}

/// Runs the bijection over all of `𝔐*_{n+λ+1}`: every `σ` must map to a valid
/// pair that maps back to `σ` (a left inverse, hence injective), and pairs
/// are tallied by component count.
pub fn check_bijection(n: usize, lambda: usize) -> Result<BijectionSummary, EnumerationError> {
    let expected_objects = check_m_star_size(n, lambda)?;
    let mut counts = vec![0u64; n + 1];
    let mut objects = 0u64;
    let mut round_trip_ok = true;
    for head in heads(n, lambda) {
        objects += 1;
        let pair = tau_to_pair(&head_to_tau(&head, n));
        if pair.validate(n, lambda).is_err() {
            round_trip_ok = false;
            continue;
        }
        let back = tau_to_head(&pair_to_tau(&pair), n, lambda);
        if back.as_deref() != Ok(head.as_slice()) {
            round_trip_ok = false;
        }
        counts[pair.num_components() - 1] += 1;
    }
    let strata = counts
        .into_iter()
        .enumerate()
        .map(|(k, count)| Stratum {
            k,
            count,
            expected: stratum_size(n, k, lambda),
        })
        .collect();
    Ok(BijectionSummary {
        n,
        lambda,
        objects,
        expected_objects,
        round_trip_ok,
        strata,
    })
}

impl std::fmt::Display for BijectionSummary {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{} object{}, round-trip {}, strata",
            self.objects,
            if self.objects == 1 { "" } else { "s" },
            if self.round_trip_ok { "OK" } else { "FAILED" }
        )?;
        for s in &self.strata {
            write!(f, " k={}:{}", s.k, s.count)?;
            if BigInt::from(s.count) != s.expected {
                write!(f, "(expected {})", s.expected)?;
            }
        }
        let total: u64 = self.strata.iter().map(|s| s.count).sum();
        write!(f, ", total {} = {}^{}", total, self.n + self.lambda, self.n + 1)?;
        if total != self.expected_objects {
            write!(f, " (expected {})", self.expected_objects)?;
        }
        Ok(())
    }
}

/// Per-stratum counts reduced to plain integers, for reporting.
pub fn strata_counts(summary: &BijectionSummary) -> Vec<(usize, u64, u64)> {
    summary
        .strata
        .iter()
        .map(|s| (s.k, s.count, s.expected.to_u64().unwrap_or(u64::MAX)))
        .collect()
}
