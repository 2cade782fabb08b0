//! Evaluators for both sides of the main identity and dedicated verifiers
//! for every intermediate step of its derivation.
//!
//! Each verifier is a pure function producing a [`CheckResult`]; nothing in
//! here assumes the identity holds, so a wrong evaluator shows up as a
//! failing check with a witness rather than a silent agreement.

mod genfunc;
mod main_theorem;
mod proof_steps;
mod report;

pub use genfunc::{verify_genfunc_chain, verify_single_row_genfunc};
pub use main_theorem::{
    lhs_composition_form, lhs_main, rhs_main, rhs_main_negative_control, verify_main,
    verify_rewrite,
};
pub use proof_steps::{
    reduced_lhs, reduced_rhs, verify_binomial_transform, verify_chu_vandermonde, verify_reduced,
};
pub use report::{int_params, CheckResult, ParamValue, Params, Status};

/// Parameter triple of the main identity. The identity is stated for
/// n ≥ 1, and both sides need r ≥ 1 and s ≥ 1 (the right side contains
/// (s-1)!); zero values are rejected rather than given a convention.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct MainParams {
    pub n: u32,
    pub r: u32,
    pub s: u32,
}

impl MainParams {
    pub fn new(n: u32, r: u32, s: u32) -> Self {
        assert!(n >= 1, "MainParams: n must be >= 1");
        assert!(r >= 1, "MainParams: r must be >= 1");
        assert!(s >= 1, "MainParams: s must be >= 1");
        MainParams { n, r, s }
    }
}
