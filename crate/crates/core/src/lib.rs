//! Exact-arithmetic engine for a partition identity and its derivation.
//!
//! The crate has three layers:
//!
//! * [`exact`] — rationals, dense polynomials in X, and truncated power
//!   series in Φ, all with arbitrary-precision exact coefficients;
//! * [`comb`] — partitions, compositions, and the counting statistics the
//!   identity is built from, including a brute-force oracle for the
//!   cell-selection count;
//! * [`identity`] — evaluators for both sides of the identity and a verifier
//!   for each intermediate summation step, every one reporting a structured
//!   [`CheckResult`].
//!
//! Everything is pure and immutable; all values can be shared freely across
//! threads, so sweep drivers may fan out check cells as they like.

pub mod comb;
mod error;
pub mod exact;
pub mod identity;

pub use comb::{Composition, Partition};
pub use error::Error;
pub use exact::{PolyX, Rat, SeriesPhi};
pub use identity::{CheckResult, MainParams, Status};
