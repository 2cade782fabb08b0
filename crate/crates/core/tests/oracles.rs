//! Cross-validation of the fast routes against independent brute-force
//! oracles and classical recurrences. Nothing here reuses the code path it
//! checks.

use itertools::Itertools;
use num_bigint::BigInt;
use partid_core::comb::{
    compositions_of, composition_count, gen_binomial, partitions_of, pbin, pbin_oracle, z_mu,
    Partition, DEFAULT_ORACLE_CAP,
};
use partid_core::exact::{PolyX, Rat, SeriesPhi};
use std::collections::BTreeSet;

/// Partition counts by the pentagonal-number recurrence:
/// p(n) = Σ_{k≥1} (-1)^{k-1} [p(n - k(3k-1)/2) + p(n - k(3k+1)/2)].
fn partition_counts_pentagonal(up_to: usize) -> Vec<BigInt> {
    let mut p = vec![BigInt::from(0); up_to + 1];
    p[0] = BigInt::from(1);
    for n in 1..=up_to as i64 {
        let mut acc = BigInt::from(0);
        let mut k = 1i64;
        loop {
            let g1 = k * (3 * k - 1) / 2;
            let g2 = k * (3 * k + 1) / 2;
            if g1 > n {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            acc += sign * &p[(n - g1) as usize];
            if g2 <= n {
                acc += sign * &p[(n - g2) as usize];
            }
            k += 1;
        }
        p[n as usize] = acc;
    }
    p
}

#[test]
fn partition_enumeration_counts_match_pentagonal_recurrence() {
    let expected = partition_counts_pentagonal(30);
    for n in 0..=30u32 {
        let got = partitions_of(n);
        assert_eq!(
            BigInt::from(got.len()),
            expected[n as usize],
            "p({n}) mismatch"
        );
        // and every enumerated value really is a partition of n
        assert!(got.iter().all(|mu| mu.size() == n));
    }
}

#[test]
fn partition_enumeration_has_no_duplicates() {
    for n in 0..=15u32 {
        let got = partitions_of(n);
        let unique: BTreeSet<_> = got.iter().cloned().collect();
        assert_eq!(unique.len(), got.len());
    }
}

#[test]
fn ordering_count_matches_distinct_permutations() {
    for n in 0..=7u32 {
        for mu in partitions_of(n) {
            let perms: BTreeSet<Vec<u32>> = mu
                .parts()
                .iter()
                .copied()
                .permutations(mu.len())
                .collect();
            assert_eq!(
                composition_count(&mu),
                BigInt::from(perms.len()),
                "C({mu}) mismatch"
            );
        }
    }
}

#[test]
fn part_product_equals_multiplicity_power_product() {
    // Π i^{m_i} = Π μ_i for every partition
    for n in 0..=12u32 {
        for mu in partitions_of(n) {
            let by_parts: BigInt = mu.parts().iter().map(|&p| BigInt::from(p)).product();
            let by_mult: BigInt = mu
                .multiplicities()
                .iter()
                .map(|&(value, count)| BigInt::from(value).pow(count))
                .product();
            assert_eq!(by_parts, by_mult, "μ = {mu}");
        }
    }
}

#[test]
fn z_times_ordering_count_is_factorial_times_part_product() {
    // z(μ) · C(μ) = l(μ)! · Π μ_i
    for n in 0..=12u32 {
        for mu in partitions_of(n) {
            let lhs = z_mu(&mu) * composition_count(&mu);
            let rhs = partid_core::comb::factorial(mu.len() as u64)
                * mu.parts().iter().map(|&p| BigInt::from(p)).product::<BigInt>();
            assert_eq!(lhs, rhs, "μ = {mu}");
        }
    }
}

#[test]
fn pbin_matches_subset_enumeration_exhaustively() {
    for n in 0..=8u32 {
        for mu in partitions_of(n) {
            for r in 0..=n {
                let fast = pbin(&mu, r);
                let slow = pbin_oracle(&mu, r, DEFAULT_ORACLE_CAP).unwrap();
                assert_eq!(fast, BigInt::from(slow), "μ = {mu}, r = {r}");
            }
        }
    }
}

#[test]
fn pbin_matches_composition_expansion() {
    // pbin(μ, r) = Σ over compositions (r_1..r_l) of r of Π binom(μ_i, r_i)
    for n in 1..=6u32 {
        for mu in partitions_of(n) {
            let l = mu.len() as u32;
            for r in 0..=n {
                let mut expanded = BigInt::from(if r == 0 && l == 0 { 1 } else { 0 });
                if r >= 1 && l >= 1 {
                    for rho in compositions_of(r, l) {
                        expanded += mu
                            .parts()
                            .iter()
                            .zip(rho.parts())
                            .map(|(&m, &k)| gen_binomial(m as i64, k as i64))
                            .product::<BigInt>();
                    }
                }
                assert_eq!(pbin(&mu, r), expanded, "μ = {mu}, r = {r}");
            }
        }
    }
}

#[test]
fn pbin_row_sums_count_nonempty_row_subsets() {
    // Σ_r pbin(μ, r) = Π (2^{μ_i} - 1)
    for n in 0..=10u32 {
        for mu in partitions_of(n) {
            let total: BigInt = (0..=n).map(|r| pbin(&mu, r)).sum();
            let expected: BigInt = mu
                .parts()
                .iter()
                .map(|&p| (BigInt::from(1) << p) - 1)
                .product();
            assert_eq!(total, expected, "μ = {mu}");
        }
    }
}

#[test]
fn exp_of_log_is_the_geometric_series() {
    for order in [0usize, 1, 4, 16] {
        let exp = SeriesPhi::log_inv(order).exp().unwrap();
        assert_eq!(exp, SeriesPhi::binomial_power_int(1, order), "order {order}");
    }
}

#[test]
fn exp_of_x_log_is_the_symbolic_binomial_series() {
    for order in [0usize, 1, 5, 16] {
        let xlog = SeriesPhi::log_inv(order).mul_poly(&PolyX::x());
        let exp = xlog.exp().unwrap();
        assert_eq!(exp, SeriesPhi::binomial_power_sym(order), "order {order}");
    }
}

#[test]
fn exp_of_x_log_phi2_coefficient() {
    // X(X+1)/2
    let xlog = SeriesPhi::log_inv(4).mul_poly(&PolyX::x());
    let exp = xlog.exp().unwrap();
    assert_eq!(
        exp.coeff(2),
        &PolyX::from_coeffs(vec![Rat::zero(), Rat::new(1, 2), Rat::new(1, 2)])
    );
}

#[test]
fn symbolic_series_specializes_to_integer_series() {
    // evaluating each X-coefficient of (1-Φ)^{-X} at X = s recovers (1-Φ)^{-s}
    let order = 12;
    let sym = SeriesPhi::binomial_power_sym(order);
    for s in 1..=6u32 {
        let int = SeriesPhi::binomial_power_int(s, order);
        let x = Rat::from(s);
        for k in 0..=order {
            assert_eq!(
                sym.coeff(k).eval(&x),
                int.coeff(k).coeff(0),
                "s = {s}, Φ^{k}"
            );
        }
    }
}

#[test]
fn binomial_polynomial_agrees_with_integer_binomials() {
    // binom(X + c, k) at X = m equals binom(m + c, k), including negative
    // upper arguments
    for c in -3i64..=4 {
        for k in 0..=5usize {
            let poly = PolyX::binomial(c, k);
            for m in -4i64..=6 {
                let expected = gen_binomial(m + c, k as i64);
                assert_eq!(
                    poly.eval(&Rat::from(m)),
                    Rat::from(expected),
                    "c={c} k={k} m={m}"
                );
            }
        }
    }
}

#[test]
fn shifted_symbolic_series_equals_product_route() {
    // substituting X := X + s into (1-Φ)^{-X} equals multiplying by
    // (1-Φ)^{-s}: two routes to (1-Φ)^{-X-s}
    let order = 10;
    let sym = SeriesPhi::binomial_power_sym(order);
    for s in 1..=4u32 {
        let via_product = &sym * &SeriesPhi::binomial_power_int(s, order);
        let shift = Rat::from(s);
        for k in 0..=order {
            assert_eq!(
                sym.coeff(k).shift_x(&shift),
                *via_product.coeff(k),
                "s = {s}, Φ^{k}"
            );
        }
    }
}

#[test]
fn log_inv_derivative_times_one_minus_phi_is_one() {
    // d/dΦ log(1/(1-Φ)) = 1/(1-Φ): differentiate term by term and multiply
    // by (1-Φ); everything below the truncation order must match 1
    let order = 12;
    let log = SeriesPhi::log_inv(order);
    let deriv = SeriesPhi::from_coeffs(
        order - 1,
        (1..=order)
            .map(|k| log.coeff(k).scalar_mul(&Rat::from(k as i64)))
            .collect(),
    );
    let one_minus_phi = SeriesPhi::from_coeffs(
        order - 1,
        vec![PolyX::one(), PolyX::constant(Rat::from(-1))],
    );
    assert_eq!(&deriv * &one_minus_phi, SeriesPhi::one(order - 1));
}

#[test]
fn oracle_cap_is_honoured_at_the_boundary() {
    let mu = Partition::new(vec![8, 8]);
    assert!(pbin_oracle(&mu, 4, 16).is_ok());
    let mu = Partition::new(vec![9, 8]);
    assert!(pbin_oracle(&mu, 4, 16).is_err());
}
