//! The cell-selection count: the number of ways to choose r distinct cells
//! from the diagram of a partition taking at least one cell from each row.
//!
//! Two independent routes are provided. [`pbin`] multiplies one generating
//! polynomial per row (coefficient of t^r in Π_i Σ_{k≥1} binom(μ_i, k) t^k),
//! which is fast. [`pbin_oracle`] enumerates every r-subset of the diagram
//! cells and counts the ones covering all rows; it is exact by construction
//! and exists solely to cross-check the fast route.

use super::{gen_binomial, Partition};
use crate::error::Error;
use num_bigint::BigInt;
use num_traits::Zero;

/// Largest diagram (in cells) the subset-enumeration oracle accepts by
/// default: 2^16 subsets keeps it well under a second.
pub const DEFAULT_ORACLE_CAP: u32 = 16;

/// Number of r-cell selections from the diagram of `mu` covering every row.
///
/// Zero whenever r < l(μ) (some row would be missed) or r > |μ| (not enough
/// cells); the empty partition admits exactly the empty selection, so
/// pbin(∅, 0) = 1.
pub fn pbin(mu: &Partition, r: u32) -> BigInt {
    // product of the per-row generating polynomials, tracked as dense
    // coefficients in t; row i contributes Σ_{k=1..μ_i} binom(μ_i, k) t^k.
    let r = r as usize;
    let mut acc: Vec<BigInt> = vec![BigInt::from(1)];
    for &row in mu.parts() {
        let row = row as usize;
        let row_poly: Vec<BigInt> = (0..=row)
            .map(|k| {
                if k == 0 {
                    BigInt::zero()
                } else {
                    gen_binomial(row as i64, k as i64)
                }
            })
            .collect();
        let mut next = vec![BigInt::zero(); (acc.len() - 1 + row).min(r) + 1];
        for (i, a) in acc.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in row_poly.iter().enumerate() {
                if i + j < next.len() {
                    next[i + j] += a * b;
                }
            }
        }
        acc = next;
    }
    acc.get(r).cloned().unwrap_or_else(BigInt::zero)
}

/// Brute-force reference for [`pbin`]: enumerate all 2^|μ| cell subsets,
/// keep those of size r that cover every row. Refuses diagrams with more
/// than `cap` cells; caps above 63 are clamped since subsets are tracked in
/// a 64-bit mask (and 2^63 subsets would never finish anyway).
pub fn pbin_oracle(mu: &Partition, r: u32, cap: u32) -> Result<u64, Error> {
    let cells = mu.size();
    if cells > cap.min(63) {
        return Err(Error::OracleCapExceeded { cells, cap });
    }
    // row_masks[i] covers the bit range of row i's cells
    let mut row_masks: Vec<u64> = Vec::with_capacity(mu.len());
    let mut offset = 0u32;
    for &row in mu.parts() {
        row_masks.push(((1u64 << row) - 1) << offset);
        offset += row;
    }
    let mut count = 0u64;
    for mask in 0u64..(1u64 << cells) {
        if mask.count_ones() != r {
            continue;
        }
        if row_masks.iter().all(|&m| mask & m != 0) {
            count += 1;
        }
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn two_one_taking_two_cells() {
        // one cell from each row: 2 choices in the top row
        assert_eq!(pbin(&p(&[2, 1]), 2), BigInt::from(2));
    }

    #[test]
    fn two_one_taking_all_cells() {
        assert_eq!(pbin(&p(&[2, 1]), 3), BigInt::from(1));
    }

    #[test]
    fn two_two_taking_two_cells() {
        // one from each row, 2 * 2
        assert_eq!(pbin(&p(&[2, 2]), 2), BigInt::from(4));
    }

    #[test]
    fn fewer_cells_than_rows_is_zero() {
        assert_eq!(pbin(&p(&[1, 1]), 1), BigInt::from(0));
    }

    #[test]
    fn more_cells_than_diagram_is_zero() {
        assert_eq!(pbin(&p(&[2, 1]), 4), BigInt::from(0));
    }

    #[test]
    fn empty_partition_conventions() {
        assert_eq!(pbin(&Partition::empty(), 0), BigInt::from(1));
        assert_eq!(pbin(&Partition::empty(), 1), BigInt::from(0));
    }

    #[test]
    fn oracle_single_row() {
        // all binom(3, 2) = 3 two-cell subsets of a length-3 row touch it
        assert_eq!(pbin_oracle(&p(&[3]), 2, DEFAULT_ORACLE_CAP).unwrap(), 3);
    }

    #[test]
    fn oracle_single_cell() {
        assert_eq!(pbin_oracle(&p(&[1]), 1, DEFAULT_ORACLE_CAP).unwrap(), 1);
    }

    #[test]
    fn oracle_two_two_taking_three() {
        // all binom(4, 3) = 4 subsets cover both rows
        assert_eq!(pbin_oracle(&p(&[2, 2]), 3, DEFAULT_ORACLE_CAP).unwrap(), 4);
    }

    #[test]
    fn oracle_empty_partition() {
        assert_eq!(pbin_oracle(&Partition::empty(), 0, DEFAULT_ORACLE_CAP).unwrap(), 1);
    }

    #[test]
    fn oracle_refuses_large_diagrams() {
        let big = p(&[9, 8]);
        assert_eq!(
            pbin_oracle(&big, 3, DEFAULT_ORACLE_CAP),
            Err(Error::OracleCapExceeded { cells: 17, cap: 16 })
        );
    }
}
