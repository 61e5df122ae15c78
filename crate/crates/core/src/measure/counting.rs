//! The counting measure on finite sets, with an explicit marker for the
//! infinite value so property tests can mirror the extended codomain.

use std::collections::BTreeSet;
use std::ops::Add;

/// An extended count: a natural number or the infinite marker. Interval
/// unions never produce `Infinite`; it exists for the set-function laws.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Count {
    Finite(u64),
    Infinite,
}

impl Count {
    pub fn is_finite(&self) -> bool {
        matches!(self, Count::Finite(_))
    }

    /// Whether the count exceeds `m`; `Infinite` exceeds everything.
    pub fn exceeds(&self, m: u64) -> bool {
        match self {
            Count::Finite(n) => *n > m,
            Count::Infinite => true,
        }
    }
}

impl Add for Count {
    type Output = Count;
    fn add(self, rhs: Count) -> Count {
        match (self, rhs) {
            (Count::Finite(a), Count::Finite(b)) => Count::Finite(a + b),
            _ => Count::Infinite,
        }
    }
}

/// Cardinality of a finite set given as a list; duplicates collapse.
pub fn counting_measure<T: Ord>(elements: &[T]) -> Count {
    let set: BTreeSet<&T> = elements.iter().collect();
    Count::Finite(set.len() as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_set_counts_to_zero() {
        let empty: [i64; 0] = [];
        assert_eq!(counting_measure(&empty), Count::Finite(0));
    }

    #[test]
    fn three_element_set() {
        assert_eq!(counting_measure(&[1, 5, 9]), Count::Finite(3));
        assert_eq!(counting_measure(&[1, 5, 9, 5]), Count::Finite(3));
    }

    #[test]
    fn additive_over_disjoint_sets() {
        let a = [1i64, 2];
        let b = [7i64];
        let both = [1i64, 2, 7];
        assert_eq!(
            counting_measure(&both),
            counting_measure(&a) + counting_measure(&b)
        );
    }

    #[test]
    fn infinite_marker_dominates_addition() {
        assert_eq!(Count::Finite(4) + Count::Infinite, Count::Infinite);
        assert!(Count::Infinite.exceeds(u64::MAX));
    }

    #[test]
    fn growing_prefixes_exceed_any_bound() {
        // Finite prefixes of an unbounded family model the infinite branch:
        // for every m some prefix count exceeds m.
        for m in [0u64, 5, 40] {
            let prefix: Vec<u64> = (0..=m).collect();
            assert!(counting_measure(&prefix).exceeds(m));
        }
    }
}
