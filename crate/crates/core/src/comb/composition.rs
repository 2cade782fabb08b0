//! Compositions: ordered sequences of positive parts.

use std::fmt;

/// A composition — like a partition, but the order of the parts matters and
/// no monotonicity is required. All parts are >= 1.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(
            parts.iter().all(|&p| p >= 1),
            "Composition::new: parts must be positive"
        );
        Composition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn total(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

impl fmt::Display for Composition {
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

/// All compositions of `total` into exactly `num_parts` parts >= 1, in
/// lexicographic order. There are binom(total-1, num_parts-1) of them; the
/// list is empty when num_parts > total.
pub fn compositions_of(total: u32, num_parts: u32) -> Vec<Composition> {
    assert!(total >= 1, "compositions_of: total must be >= 1");
    assert!(num_parts >= 1, "compositions_of: num_parts must be >= 1");
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(num_parts as usize);
    extend(total, num_parts, &mut prefix, &mut out);
    out
}

fn extend(remaining: u32, slots: u32, prefix: &mut Vec<u32>, out: &mut Vec<Composition>) {
    if slots == 1 {
        if remaining >= 1 {
            prefix.push(remaining);
            out.push(Composition {
                parts: prefix.clone(),
            });
            prefix.pop();
        }
        return;
    }
    // leave at least one unit for each of the remaining slots
    if remaining < slots {
        return;
    }
    for first in 1..=(remaining - (slots - 1)) {
        prefix.push(first);
        extend(remaining - first, slots - 1, prefix, out);
        prefix.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_into_two_lexicographic() {
        let got = compositions_of(3, 2);
        let expected = vec![
            Composition::new(vec![1, 2]),
            Composition::new(vec![2, 1]),
        ];
        assert_eq!(got, expected);
    }

    #[test]
    fn single_slot() {
        assert_eq!(compositions_of(5, 1), vec![Composition::new(vec![5])]);
    }

    #[test]
    fn too_many_parts_yields_nothing() {
        assert!(compositions_of(2, 3).is_empty());
    }

    #[test]
    fn counts_match_stars_and_bars() {
        // binom(total-1, parts-1)
        for total in 1..=9u32 {
            for parts in 1..=total {
                let expect = super::super::gen_binomial(total as i64 - 1, parts as i64 - 1);
                assert_eq!(
                    compositions_of(total, parts).len(),
                    usize::try_from(&expect).unwrap(),
                    "total={total} parts={parts}"
                );
            }
        }
    }

    #[test]
    #[should_panic(expected = "positive")]
    fn zero_part_rejected() {
        let _ = Composition::new(vec![1, 0]);
    }
}
