//! Sparse complementary pairs with an aperiodic zero-correlation zone.
//!
//! Pairs are built from restricted generalized Boolean functions
//! ([`rgbf`]), constructed by [`construct`], and certified by [`verify`] using
//! exact arithmetic over the `q`-th roots of unity ([`cyclotomic`],
//! [`correlate`]). Variable `x_l` is always bit `l - 1` of a sequence index.
//!
//! ```
//! use scp_core::{construct_scp, check_scp, params_from_restricted_set};
//!
//! let params = params_from_restricted_set(5, 4, &[1, 3], vec![], vec![]).unwrap();
//! let pair = construct_scp(&params).unwrap();
//! assert_eq!((pair.len(), params.zcz()), (27, 6));
//! assert!(check_scp(&pair, params.zcz()).unwrap().passed());
//! ```

pub mod construct;
pub mod correlate;
pub mod cyclotomic;
pub mod error;
pub mod format;
pub mod rgbf;
pub mod verify;

pub use construct::{
    construct_scp, construct_scp_unchecked, params_from_restricted_set, theorem1_function,
    theorem2_mate, ScpPair, ScpParams,
};
pub use correlate::{
    auto_profile, autocorrelation, conj_symmetry_check, cross_correlation, cross_profile,
    CorrelationProfile,
};
pub use cyclotomic::CyclotomicInt;
pub use error::{Error, Result};
pub use rgbf::{
    truncate, truncation_bounds, Entry, GeneralizedBooleanFunction, Restriction, SparseSequence,
    Sparsity, Term,
};
pub use verify::{
    check_mate, check_scp, exhaustive_sweep, measure_zcz, table1_reproduce, SweepConfig,
    SweepSummary, VerificationReport,
};
