use num_bigint::BigInt;
use num_traits::Zero;

use super::{check_cutoff, EnumerationError, PERMUTATION_CUTOFF};
use crate::algebra::{sym, var, Polynomial};

/// Permutations of `[n]` in lexicographic order, as 1-indexed image arrays.
#[derive(Debug, Clone)]
pub struct Permutations {
    next: Option<Vec<usize>>,
}

impl Permutations {
    pub fn new(n: usize) -> Self {
        Permutations {
            next: Some((1..=n).collect()),
        }
    }
}

impl Iterator for Permutations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let current = self.next.take()?;
        let mut p = current.clone();
        // standard next-permutation step
        if let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) {
            let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
            p.swap(i - 1, j);
            p[i..].reverse();
            self.next = Some(p);
        }
        Some(current)
    }
}

pub fn fixed_points(perm: &[usize]) -> usize {
    perm.iter().enumerate().filter(|(i, &v)| v == i + 1).count()
}

/// Every permutation of `[n]` with its number of fixed points.
pub fn permutations_with_fix(n: usize) -> Result<impl Iterator<Item = (Vec<usize>, usize)>, EnumerationError> {
    check_cutoff("permutations", n, PERMUTATION_CUTOFF)?;
    Ok(Permutations::new(n).map(|p| {
        let fix = fixed_points(&p);
        (p, fix)
    }))
}

/// Set partitions of `[n]` as restricted growth strings: `a[0] = 0` and
/// `a[i] <= 1 + max(a[..i])`. Block `b` holds the elements `i+1` with `a[i] = b`.
pub fn set_partitions(n: usize) -> Vec<Vec<usize>> {
    fn extend(prefix: &mut Vec<usize>, max: usize, n: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        let limit = if prefix.is_empty() { 0 } else { max + 1 };
        for b in 0..=limit {
            prefix.push(b);
            let m = if prefix.len() == 1 { 0 } else { max.max(b) };
            extend(prefix, m, n, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::with_capacity(n), 0, n, &mut out);
    out
}

pub fn is_involution(perm: &[usize]) -> bool {
    perm.iter().enumerate().all(|(i, &v)| perm[v - 1] == i + 1)
}

/// Polynomials and counts computed by brute-force enumeration.
#[derive(Debug, Clone, PartialEq)]
pub struct OracleTable {
    pub n: usize,
    /// `Σ_{π ∈ S_n} λ^{fix(π)}`.
    pub lambda_factorial: Polynomial,
    /// `Σ u^{#blocks}` over set partitions of `[n]`.
    pub bell: Polynomial,
    /// `Σ u^{fix(π)}` over involutions of `[n]`.
    pub hermite: Polynomial,
    pub derangements: BigInt,
    pub involutions: BigInt,
    pub matchings: BigInt,
}

pub fn oracle_polynomials(n: usize) -> Result<OracleTable, EnumerationError> {
    check_cutoff("oracle", n, PERMUTATION_CUTOFF)?;
    let mut fix_counts = vec![BigInt::zero(); n + 1];
    let mut inv_counts = vec![BigInt::zero(); n + 1];
    for (p, fix) in permutations_with_fix(n)? {
        fix_counts[fix] += 1;
        if is_involution(&p) {
            inv_counts[fix] += 1;
        }
    }
    let mut block_counts = vec![BigInt::zero(); n + 1];
    for rgs in set_partitions(n) {
        let blocks = rgs.iter().max().map_or(0, |m| m + 1);
        block_counts[blocks] += 1;
    }
    let gen_poly = |counts: &[BigInt], s: &str| -> Polynomial {
        counts
            .iter()
            .enumerate()
            .map(|(j, c)| var(s).pow(j as u32).scale_int(c.clone()))
            .sum()
    };
    Ok(OracleTable {
        n,
        lambda_factorial: gen_poly(&fix_counts, sym::LAMBDA),
        bell: gen_poly(&block_counts, sym::U),
        hermite: gen_poly(&inv_counts, sym::U),
        derangements: fix_counts[0].clone(),
        involutions: inv_counts.iter().sum(),
        matchings: inv_counts[0].clone(),
    })
}
