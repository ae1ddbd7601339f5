//! Brute-force enumeration of permutations, set partitions, endofunctions and
//! forests, the colored functional-digraph bijection, and permanents.

pub mod bijection;
pub mod digraph;
pub mod dot;
pub mod permanent;
pub mod permutations;

pub use bijection::{
    check_bijection, enumerate_m_star, pair_to_sigma, pair_to_tau, sigma_to_pair, sigma_to_tau, tau_to_pair,
    tau_to_sigma, BijectionSummary, ColoredForestPermutation, ColoredMap, Stratum, M_STAR_CUTOFF,
};
pub use digraph::{
    digraph_decompose, endofunctions, forests, Endofunction, FunctionalDigraphDecomposition, RootedForest,
};
pub use permanent::{permanent_check, ryser_permanent, PERMANENT_CUTOFF};
pub use permutations::{
    fixed_points, is_involution, oracle_polynomials, permutations_with_fix, set_partitions, OracleTable, Permutations,
};

pub const PERMUTATION_CUTOFF: usize = 8;
pub const ENDOFUNCTION_CUTOFF: usize = 7;
pub const FOREST_CUTOFF: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EnumerationError {
    #[error("{what} enumeration for n = {n} exceeds the cutoff {cutoff}")]
    AboveCutoff {
        what: &'static str,
        n: usize,
        cutoff: usize,
    },
    #[error("invalid endofunction: {0}")]
    InvalidEndofunction(String),
    #[error("invalid forest: {0}")]
    InvalidForest(String),
    #[error("not in 𝔐*: {0}")]
    NotInMStar(String),
    #[error("invalid colored forest-permutation pair: {0}")]
    InvalidPair(String),
}

pub(crate) fn check_cutoff(what: &'static str, n: usize, cutoff: usize) -> Result<(), EnumerationError> {
    if n > cutoff {
        Err(EnumerationError::AboveCutoff { what, n, cutoff })
    } else {
        Ok(())
    }
}
