//! Pointwise and brute-force checks for the intermediate summation
//! identities, plus the reduced identity both sides collapse to.

use super::report::{int_params, CheckResult, ParamValue, Params};
use crate::comb::{alt_sign, compositions_of, factorial, gen_binomial, Composition};
use crate::exact::{PolyX, Rat};
use num_bigint::BigInt;
use num_traits::Zero;

/// Pointwise binomial transformation, checked with exact integers:
///
///   binom(m+s-1, m-1) binom(m-1, k-1)
///     = (-1)^{k-1} binom(-s-1, k-1) binom(m+s-1, k+s-1)
pub fn verify_binomial_transform(m: u32, k: u32, s: u32) -> CheckResult {
    assert!(m >= 1 && k >= 1 && s >= 1);
    let (mi, ki, si) = (m as i64, k as i64, s as i64);
    let lhs = gen_binomial(mi + si - 1, mi - 1) * gen_binomial(mi - 1, ki - 1);
    let rhs = alt_sign(k - 1)
        * gen_binomial(-si - 1, ki - 1)
        * gen_binomial(mi + si - 1, ki + si - 1);
    CheckResult::of_ints(
        "transform",
        int_params(&[("k", ki), ("m", mi), ("s", si)]),
        &lhs,
        &rhs,
    )
}

/// Collapsed Chu–Vandermonde summation over an l-fold composition sum,
/// with the left side evaluated by brute-force enumeration:
///
///   Σ_{μ∈C(n,l)} binom(μ_1-1, r_1-1)⋯binom(μ_l-1, r_l-1) binom(μ_i+s-1, s)
///     = (-1)^{r_i-1} binom(-s-1, r_i-1) binom(n+s-1, r+s-1)
///
/// where r = Σ r_j and `i` is the 1-based index of the distinguished row.
pub fn verify_chu_vandermonde(n: u32, rcomp: &Composition, i: usize, s: u32) -> CheckResult {
    let l = rcomp.len() as u32;
    assert!(l >= 1, "verify_chu_vandermonde: empty composition");
    assert!(1 <= i && i <= l as usize, "row index {i} out of 1..={l}");
    assert!(n >= l, "need n >= l so the composition sum is nonempty");
    let r = rcomp.total();
    let si = s as i64;

    let mut lhs = BigInt::zero();
    for mu in compositions_of(n, l) {
        let mut term = gen_binomial(mu.parts()[i - 1] as i64 + si - 1, si);
        for (&m, &rj) in mu.parts().iter().zip(rcomp.parts()) {
            if term.is_zero() {
                break;
            }
            term *= gen_binomial(m as i64 - 1, rj as i64 - 1);
        }
        lhs += term;
    }

    let ri = rcomp.parts()[i - 1];
    let rhs = alt_sign(ri - 1)
        * gen_binomial(-si - 1, ri as i64 - 1)
        * gen_binomial(n as i64 + si - 1, r as i64 + si - 1);

    let mut params: Params = int_params(&[("i", i as i64), ("n", n as i64), ("s", s as i64)]);
    params.insert(
        "rcomp".to_string(),
        ParamValue::List(rcomp.parts().iter().map(|&p| p as i64).collect()),
    );
    CheckResult::of_ints("chu", params, &lhs, &rhs)
}

/// Left side of the reduced identity, as an exact polynomial:
///
///   Σ_{l=1}^{r} X^{l-1}/l! Σ_{ρ∈C(r,l)} 1/(r_1⋯r_l)
///       Σ_{i=1}^{l} (-1)^{r_i-1} binom(-s-1, r_i-1)
///
/// The nominally infinite sum over l stops at l = r because a composition of
/// r into positive parts has at most r of them.
pub fn reduced_lhs(r: u32, s: u32) -> PolyX {
    assert!(r >= 1 && s >= 1);
    let si = s as i64;
    let mut coeffs = vec![Rat::zero(); r as usize];
    for l in 1..=r {
        let l_fact = factorial(l as u64);
        let mut level = Rat::zero();
        for rho in compositions_of(r, l) {
            let mut inner = BigInt::zero();
            for &rj in rho.parts() {
                inner += alt_sign(rj - 1) * gen_binomial(-si - 1, rj as i64 - 1);
            }
            let prod: BigInt = rho.parts().iter().map(|&p| BigInt::from(p)).product();
            level += &Rat::new(inner, prod);
        }
        coeffs[l as usize - 1] = level / Rat::from(l_fact);
    }
    PolyX::from_coeffs(coeffs)
}

/// Right side of the reduced identity:
/// (1/s) [binom(X+r+s-1, r) - binom(X+r-1, r)], of exact degree r-1.
pub fn reduced_rhs(r: u32, s: u32) -> PolyX {
    assert!(r >= 1 && s >= 1);
    let (ri, si) = (r as i64, s as i64);
    let bracket = &PolyX::binomial(ri + si - 1, r as usize) - &PolyX::binomial(ri - 1, r as usize);
    bracket.scalar_div(&Rat::from(s))
}

/// Reduced identity check: exact equality of [`reduced_lhs`] and
/// [`reduced_rhs`].
pub fn verify_reduced(r: u32, s: u32) -> CheckResult {
    CheckResult::of_polys(
        "reduced",
        int_params(&[("r", r as i64), ("s", s as i64)]),
        &reduced_lhs(r, s),
        &reduced_rhs(r, s),
    )
}
