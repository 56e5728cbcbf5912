//! Spectral extremal theory of r-uniform linear hypertrees.
//!
//! The crate covers the data model ([`Hypergraph`]), exact matching
//! polynomials, two independent spectral-radius routes, the named extremal
//! constructions with their closed-form bounds, the ordering of hyperforests
//! by matching polynomials, and an exhaustive verification harness.

pub mod canonical;
pub mod constructions;
pub mod error;
pub mod harness;
pub mod hypergraph;
pub mod matching;
pub mod poly;
pub mod spectral;
pub mod sturm;
pub mod transforms;

pub use canonical::{canonical_code, is_isomorphic, CanonicalCode};
pub use constructions::{
    build_a, build_r_a, build_s, build_t_v_a, build_t_v_ab, extremal_params, hyperstar,
    perfect_matching_bound, rho_bound, BoundResult, CompositionVector, ExtremalParams,
};
pub use error::{Error, Result};
pub use hypergraph::{EdgeId, Hypergraph, Path, Reindexed, ValidationReport, VertexId, VertexKind};
pub use matching::{
    brute_force_counts, matching_counts, maximum_matchings, matching_number, matching_polynomial, MatchPoly,
    MatchingProfile,
};
pub use poly::IntPoly;
pub use spectral::{
    apply_adjacency, residual, spectral_radius, spectral_radius_polyroot, spectral_radius_power,
    Method, PowerOptions, SpectralResult,
};
pub use transforms::{
    compare_order, edge_release, edge_release_at, is_majorized, majorization_chain,
    majorization_step, move_edges, DirectionWitness, OrderRelation, OrderTag,
};
pub use harness::{
    enumerate_hypertrees, enumerate_t_mkr, run_suite, verify_extremal, verify_perfect_matching,
    EnumerationRecord, Interpretation, SuiteConfig, SuiteReport, VerificationReport,
};
