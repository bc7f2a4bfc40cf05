//! Exact-arithmetic matroid and polynomial library with verifiers for the
//! log-concavity inequalities of independent-set polynomials.
//!
//! The crate is layered as follows:
//!
//! * [`mask`] — bitmask subsets of a small ground set;
//! * [`matroid`] — matroid representations, oracles, and constructions
//!   (uniform, graphic, linear, explicit, dual, minors, parallel extensions);
//! * [`poly`] — sparse multivariate polynomials over arbitrary-precision
//!   integers, with the coefficientwise partial order;
//! * [`lorentzian`] — M-convexity, exact symmetric-matrix inertia, the
//!   Lorentzian definition check, and the hyperbolicity inequality;
//! * [`checks`] — independent-set polynomials, collapse operators, partition
//!   counts, and the inequality verifiers;
//! * [`harness`] — matroid spec files, sweep families, and report generation
//!   for the `matroid-verify` CLI.

pub mod checks;
pub mod harness;
pub mod lorentzian;
pub mod mask;
pub mod matroid;
pub mod poly;

pub use mask::{SubsetMask, MAX_GROUND_SIZE};
pub use matroid::{Matroid, MatroidError, MinorDescriptor};
pub use poly::{ExponentVector, MultiPoly, RationalScale};
