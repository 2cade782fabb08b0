//! Truncated-series verification of the generating-function argument that
//! proves the reduced identity.
//!
//! Multiplying the reduced identity by Φ^r and summing over r turns the left
//! side into a sum of log powers and the right side into binomial series:
//!
//!   Σ_{l≥1} X^{l-1}/l! · Σ_{i=1}^{l} L^{l-1} G  =  (1/s) ((1-Φ)^{-X-s} - (1-Φ)^{-X})
//!
//! with L = log(1/(1-Φ)) and G = (1/s)((1-Φ)^{-s} - 1). The inner row-index
//! sum contributes a factor l, so the l-th term is X^{l-1} L^{l-1} G/(l-1)!.
//! Both sides are built exactly through Φ^order and compared coefficient by
//! coefficient; on top of that, the Φ^r coefficient of each side must equal
//! the corresponding polynomial form of the reduced identity, which ties the
//! series picture back to the finite sums.

use super::proof_steps::{reduced_lhs, reduced_rhs};
use super::report::{int_params, series_witness, CheckResult, Status};
use crate::comb::gen_binomial;
use crate::exact::{PolyX, Rat, SeriesPhi};

/// Generating-function chain check at truncation `order`.
pub fn verify_genfunc_chain(s: u32, order: usize) -> CheckResult {
    assert!(s >= 1);
    let params = int_params(&[("order", order as i64), ("s", s as i64)]);

    let lhs = chain_lhs_series(s, order);
    let rhs = chain_rhs_series(s, order);

    let mut witness = series_witness(&lhs, &rhs);

    // bridge back to the polynomial forms: the Φ^r coefficients are exactly
    // the reduced-identity sides
    if witness.is_none() {
        for r in 1..=order {
            if lhs.coeff(r) != &reduced_lhs(r as u32, s) {
                witness = Some(format!(
                    "Phi^{r} of the series differs from the reduced sum: {} != {}",
                    lhs.coeff(r),
                    reduced_lhs(r as u32, s)
                ));
                break;
            }
            if rhs.coeff(r) != &reduced_rhs(r as u32, s) {
                witness = Some(format!(
                    "Phi^{r} of the series differs from the reduced binomial form: {} != {}",
                    rhs.coeff(r),
                    reduced_rhs(r as u32, s)
                ));
                break;
            }
        }
    }

    CheckResult {
        check: "genfunc-chain".to_string(),
        params,
        status: if witness.is_none() { Status::Pass } else { Status::Fail },
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
        witness,
    }
}

/// Σ_{l=1}^{order} X^{l-1} L^{l-1} G / (l-1)!, truncated to `order`.
fn chain_lhs_series(s: u32, order: usize) -> SeriesPhi {
    let log = SeriesPhi::log_inv(order);
    let g = single_row_rhs(s, order);
    let mut acc = SeriesPhi::zero(order);
    let mut log_pow = SeriesPhi::one(order);
    let mut inv_fact = Rat::one();
    // L^{l-1} G starts at Φ^l, so levels beyond the order contribute nothing
    for l in 1..=order {
        let weight = PolyX::monomial(inv_fact.clone(), l - 1);
        acc = &acc + &(&log_pow * &g).mul_poly(&weight);
        log_pow = &log_pow * &log;
        inv_fact = inv_fact / Rat::from(l as u32);
    }
    acc
}

/// (1/s)((1-Φ)^{-X-s} - (1-Φ)^{-X}), with the shifted exponent built as the
/// exact product of the symbolic and integer binomial series.
fn chain_rhs_series(s: u32, order: usize) -> SeriesPhi {
    let sym = SeriesPhi::binomial_power_sym(order);
    let shifted = &sym * &SeriesPhi::binomial_power_int(s, order);
    (&shifted - &sym).scalar_mul(&Rat::from(s).recip())
}

/// Single-row series identity: the per-row generating function
///
///   Σ_{k≥1} binom(k+s-1, s) Φ^k / k  =  (1/s)((1-Φ)^{-s} - 1)
///
/// checked through Φ^order.
pub fn verify_single_row_genfunc(s: u32, order: usize) -> CheckResult {
    assert!(s >= 1);
    let mut coeffs = vec![PolyX::zero()];
    for k in 1..=order {
        let c = Rat::from(gen_binomial(k as i64 + s as i64 - 1, s as i64))
            / Rat::from(k as u32);
        coeffs.push(PolyX::constant(c));
    }
    let lhs = SeriesPhi::from_coeffs(order, coeffs);
    let rhs = single_row_rhs(s, order);
    CheckResult::of_series(
        "genfunc-row",
        int_params(&[("order", order as i64), ("s", s as i64)]),
        &lhs,
        &rhs,
    )
}

fn single_row_rhs(s: u32, order: usize) -> SeriesPhi {
    (&SeriesPhi::binomial_power_int(s, order) - &SeriesPhi::one(order))
        .scalar_mul(&Rat::from(s).recip())
}
