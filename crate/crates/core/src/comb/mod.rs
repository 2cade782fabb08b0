//! Partitions, compositions, and the combinatorial statistics built on them.
//!
//! Besides the two sequence types this module provides the scalar helpers
//! used throughout the identity evaluators: factorials, rising factorials,
//! and the generalized binomial coefficient (defined for negative upper
//! arguments, where it stays an exact integer).

mod composition;
mod partition;
mod pbin;

pub use composition::{compositions_of, Composition};
pub use partition::{composition_count, partitions_of, z_mu, Partition};
pub use pbin::{pbin, pbin_oracle, DEFAULT_ORACLE_CAP};

use crate::exact::Rat;
use num_bigint::BigInt;
use num_traits::Zero;

/// n! as an exact integer.
pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::from(1);
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    acc
}

/// Generalized binomial coefficient binom(a, k) for integer a of either sign:
/// prod_{j=0}^{k-1} (a - j) / k!, which is always an exact integer, and 0 for
/// k < 0. For example binom(-3, 2) = (-3)(-4)/2 = 6.
pub fn gen_binomial(a: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    let mut num = BigInt::from(1);
    for j in 0..k {
        num *= BigInt::from(a - j);
    }
    let den = factorial(k as u64);
    let (q, rem) = num_integer_div_rem(num, den);
    assert!(rem.is_zero(), "gen_binomial: product not divisible by k!");
    q
}

fn num_integer_div_rem(num: BigInt, den: BigInt) -> (BigInt, BigInt) {
    let q = &num / &den;
    let rem = num - &q * den;
    (q, rem)
}

/// Rising factorial (a)_n = a (a+1) ... (a+n-1), with (a)_0 = 1.
pub fn pochhammer(a: &Rat, n: u32) -> Rat {
    let mut acc = Rat::one();
    for j in 0..n {
        acc *= &(a + &Rat::from(j));
    }
    acc
}

/// (-1)^k as an exact integer.
pub(crate) fn alt_sign(k: u32) -> BigInt {
    if k.is_multiple_of(2) {
        BigInt::from(1)
    } else {
        BigInt::from(-1)
    }
}
