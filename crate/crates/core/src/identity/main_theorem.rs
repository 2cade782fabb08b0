//! Both sides of the main identity, plus the composition-sum rewrite of the
//! left-hand side.
//!
//! For positive integers n, r, s the identity states, as polynomials in X:
//!
//!   Σ_{|μ|=n} pbin(μ,r) X^{l(μ)-1} / z(μ) · Σ_i (μ_i)_s
//!     = (s-1)! binom(n+s-1, n-r) [binom(X+r+s-1, r) - binom(X+r-1, r)]
//!
//! The left side sums over partitions; the rewrite below re-derives it as a
//! sum over compositions with the cell-selection count expanded into
//! per-row binomials, which is the independent route used to cross-check it.

use super::report::{int_params, CheckResult};
use super::MainParams;
use crate::comb::{
    compositions_of, factorial, gen_binomial, partitions_of, pbin, pochhammer, z_mu,
};
use crate::exact::{PolyX, Rat};
use num_bigint::BigInt;
use num_traits::Zero;

/// Left-hand side: Σ over partitions μ of n of
/// pbin(μ,r) · X^{l(μ)-1} / z(μ) · Σ_i (μ_i)_s. Degree is at most n-1.
pub fn lhs_main(p: &MainParams) -> PolyX {
    let mut coeffs = vec![Rat::zero(); p.n as usize];
    for mu in partitions_of(p.n) {
        let cells = pbin(&mu, p.r);
        if cells.is_zero() {
            continue;
        }
        let poch_sum: Rat = mu
            .parts()
            .iter()
            .map(|&part| pochhammer(&Rat::from(part), p.s))
            .sum();
        let term = Rat::from(cells) / Rat::from(z_mu(&mu)) * poch_sum;
        coeffs[mu.len() - 1] += &term;
    }
    PolyX::from_coeffs(coeffs)
}

/// Right-hand side: (s-1)! binom(n+s-1, n-r) [binom(X+r+s-1, r) - binom(X+r-1, r)].
///
/// The bracket's X^r terms cancel, so the degree is at most r-1; the
/// binomial factor vanishes for r > n, killing the whole side.
pub fn rhs_main(p: &MainParams) -> PolyX {
    rhs_with_front_factor(p, factorial(p.s as u64 - 1))
}

/// Negative control for the harness: identical to [`rhs_main`] except the
/// (s-1)! factor is deliberately replaced by s!. For any grid containing a
/// cell with s >= 2 this disagrees with the left-hand side, which proves the
/// comparison machinery can actually fail.
pub fn rhs_main_negative_control(p: &MainParams) -> PolyX {
    rhs_with_front_factor(p, factorial(p.s as u64))
}

fn rhs_with_front_factor(p: &MainParams, front: BigInt) -> PolyX {
    let (n, r, s) = (p.n as i64, p.r as i64, p.s as i64);
    let bracket = &PolyX::binomial(r + s - 1, p.r as usize) - &PolyX::binomial(r - 1, p.r as usize);
    let scalar = Rat::from(front * gen_binomial(n + s - 1, n - r));
    bracket.scalar_mul(&scalar)
}

/// The left-hand side recomputed as the double sum over compositions with
/// the cell-selection count expanded row by row:
///
///   s! Σ_{l=1}^{n} Σ_{μ∈C(n,l)} X^{l-1} / (l! μ_1⋯μ_l)
///        · [Σ_{ρ∈C(r,l)} Π_i binom(μ_i, ρ_i)] · Σ_i binom(μ_i+s-1, s)
///
/// where C(m,l) is the set of compositions of m into l positive parts.
/// Must equal [`lhs_main`] exactly; no part of the fast pbin algorithm is
/// reused here.
pub fn lhs_composition_form(p: &MainParams) -> PolyX {
    let (n, r, s) = (p.n, p.r, p.s);
    let binom = PascalTable::with_rows((n + s) as usize);
    let s_fact = Rat::from(factorial(s as u64));
    let mut coeffs = vec![Rat::zero(); n as usize];
    for l in 1..=n {
        let r_comps = compositions_of(r, l);
        if r_comps.is_empty() {
            // selections must take a cell from each of the l rows
            continue;
        }
        let l_fact = factorial(l as u64);
        let mut level = Rat::zero();
        for mu in compositions_of(n, l) {
            let mut expanded = BigInt::zero();
            for rho in &r_comps {
                let mut prod = BigInt::from(1);
                for (&m, &k) in mu.parts().iter().zip(rho.parts()) {
                    if k > m {
                        prod = BigInt::zero();
                        break;
                    }
                    prod *= binom.get(m as usize, k as usize);
                }
                expanded += prod;
            }
            if expanded.is_zero() {
                continue;
            }
            let mut binom_sum = BigInt::zero();
            for &m in mu.parts() {
                binom_sum += binom.get((m + s - 1) as usize, s as usize);
            }
            let prod_mu: BigInt = mu.parts().iter().map(|&m| BigInt::from(m)).product();
            level += &Rat::new(expanded * binom_sum, &l_fact * prod_mu);
        }
        coeffs[l as usize - 1] = level * &s_fact;
    }
    PolyX::from_coeffs(coeffs)
}

/// Main identity check: exact polynomial equality of the two sides.
pub fn verify_main(p: &MainParams) -> CheckResult {
    CheckResult::of_polys(
        "main",
        int_params(&[("n", p.n as i64), ("r", p.r as i64), ("s", p.s as i64)]),
        &lhs_main(p),
        &rhs_main(p),
    )
}

/// Rewrite check: the composition form of the left-hand side agrees with the
/// partition form, independently of whether the identity itself holds.
pub fn verify_rewrite(p: &MainParams) -> CheckResult {
    CheckResult::of_polys(
        "rewrite",
        int_params(&[("n", p.n as i64), ("r", p.r as i64), ("s", p.s as i64)]),
        &lhs_composition_form(p),
        &lhs_main(p),
    )
}

/// Dense Pascal triangle for repeated small binomial lookups.
struct PascalTable {
    rows: Vec<Vec<BigInt>>,
}

impl PascalTable {
    fn with_rows(max_row: usize) -> Self {
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(max_row + 1);
        for i in 0..=max_row {
            let mut row = vec![BigInt::from(1); i + 1];
            for j in 1..i {
                row[j] = &rows[i - 1][j - 1] + &rows[i - 1][j];
            }
            rows.push(row);
        }
        PascalTable { rows }
    }

    fn get(&self, n: usize, k: usize) -> &BigInt {
        &self.rows[n][k]
    }
}
