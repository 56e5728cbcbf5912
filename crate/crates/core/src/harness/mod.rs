//! Exhaustive enumeration of hypertrees up to isomorphism and end-to-end
//! verification of the extremal bound.

mod enumerate;
mod suite;
mod verify;

pub use enumerate::{
    enumerate_hypertrees, enumerate_t_mkr, enumeration_limit, EnumerationRecord, DEFAULT_TIE_TOL,
};
pub use suite::{run_suite, RangeSpec, SuiteConfig, SuiteReport, Triple};
pub use verify::{
    verify_extremal, verify_extremal_with, verify_perfect_matching, Interpretation, Tolerances,
    VerificationReport, DEFAULT_BOUND_TOL,
};
