//! Shared fixtures for the criterion benchmarks.

use partid_core::comb::Partition;

/// A 16-cell partition, the largest diagram the subset oracle accepts by
/// default — worst case for both pbin routes.
pub fn oracle_cap_partition() -> Partition {
    Partition::new(vec![5, 4, 3, 2, 1, 1])
}

/// A mid-size partition for the fast route on its own.
pub fn medium_partition() -> Partition {
    Partition::new(vec![8, 6, 5, 4, 4, 2, 1])
}
