//! Exact computation of λ-factorials, derangement numbers and their
//! relatives, with brute-force combinatorial oracles and a registry of
//! identities verified as exact polynomial or truncated-series equalities.

pub mod algebra;
pub mod enumeration;
pub mod identities;
pub mod sequences;
pub mod series;
