//! Exact scalar, polynomial, and truncated-series arithmetic.
//!
//! Three nested coefficient domains, all exact:
//!
//! * [`Rat`] — arbitrary-precision rationals in canonical form;
//! * [`PolyX`] — dense polynomials in the formal variable X over [`Rat`];
//! * [`SeriesPhi`] — power series in Φ truncated at an explicit order, with
//!   [`PolyX`] coefficients.
//!
//! Every value is immutable after construction and every operation is pure,
//! so values can be shared or sent across threads freely.

mod poly;
mod rat;
mod series;

pub use poly::PolyX;
pub use rat::Rat;
pub use series::SeriesPhi;
