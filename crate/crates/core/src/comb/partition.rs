//! Integer partitions and their statistics.

use super::factorial;
use num_bigint::BigInt;
use std::fmt;

/// A partition: a weakly decreasing sequence of positive integers. The empty
/// sequence is the unique partition of 0.
///
/// Writing m_i for the number of parts equal to i, the statistics of
/// interest are the size |μ| = Σ μ_i, the length l(μ) (number of parts), the
/// centralizer order z(μ) = Π i^{m_i} m_i!, and the number of distinct
/// orderings of the parts C(μ) = l(μ)! / Π m_i!.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Build from parts, which must be weakly decreasing and positive.
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "Partition::new: parts must be weakly decreasing"
        );
        assert!(
            parts.last().is_none_or(|&p| p >= 1),
            "Partition::new: parts must be positive"
        );
        Partition { parts }
    }

    /// The empty partition of 0.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// |μ|, the number being partitioned.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// l(μ), the number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// (part value, multiplicity) pairs in decreasing part order.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((value, count)) if *value == p => *count += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, ")")
    }
}

/// All partitions of n in reverse-lexicographic order, e.g. for n = 4:
/// (4), (3,1), (2,2), (2,1,1), (1,1,1,1). The count is the partition
/// function p(n); n = 0 yields exactly the empty partition.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    descend(n, n, &mut prefix, &mut out);
    out
}

fn descend(remaining: u32, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition {
            parts: prefix.clone(),
        });
        return;
    }
    for part in (1..=remaining.min(max_part)).rev() {
        prefix.push(part);
        descend(remaining - part, part, prefix, out);
        prefix.pop();
    }
}

/// z(μ) = Π i^{m_i} m_i!, the order of the centralizer of a permutation with
/// cycle type μ. z of the empty partition is 1.
pub fn z_mu(mu: &Partition) -> BigInt {
    let mut acc = BigInt::from(1);
    for (value, count) in mu.multiplicities() {
        acc *= BigInt::from(value).pow(count);
        acc *= factorial(count as u64);
    }
    acc
}

/// C(μ) = l(μ)! / Π m_i!, the number of distinct orderings of the parts,
/// i.e. the number of compositions that sort to μ.
pub fn composition_count(mu: &Partition) -> BigInt {
    let mut acc = factorial(mu.len() as u64);
    for (_, count) in mu.multiplicities() {
        let div = factorial(count as u64);
        debug_assert!((&acc % &div) == BigInt::from(0));
        acc /= div;
    }
    acc
}
