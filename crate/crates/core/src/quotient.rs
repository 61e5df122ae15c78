//! Equivalence relations and quotient sets over finite carriers.
//!
//! Axiom checks are exhaustive (O(n^3) over the carrier), which is the point:
//! carriers here are desk-scale and the verdicts are certificates, not
//! heuristics.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuotientError {
    #[error("relation is not an equivalence on the given carrier ({reason})")]
    NotAnEquivalence { reason: String },
}

type Predicate<T> = Box<dyn Fn(&T, &T) -> bool>;

/// A binary predicate treated as a relation on whatever carrier it is
/// applied to.
pub struct EquivalenceRelation<T> {
    relates: Predicate<T>,
}

impl<T> EquivalenceRelation<T> {
    pub fn new(relates: impl Fn(&T, &T) -> bool + 'static) -> Self {
        EquivalenceRelation {
            relates: Box::new(relates),
        }
    }

    pub fn relates(&self, x: &T, y: &T) -> bool {
        (self.relates)(x, y)
    }
}

/// A partition of a finite carrier into non-empty, pairwise-disjoint classes.
///
/// Classes are ordered by first appearance of their representative in the
/// carrier; within a class, elements keep carrier order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition<T> {
    classes: Vec<Vec<T>>,
}

impl<T: Clone + PartialEq> Partition<T> {
    pub fn classes(&self) -> &[Vec<T>] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Index of the class containing `x`, if any.
    pub fn class_of(&self, x: &T) -> Option<usize> {
        self.classes.iter().position(|c| c.contains(x))
    }

    /// Total number of elements across all classes.
    pub fn carrier_len(&self) -> usize {
        self.classes.iter().map(Vec::len).sum()
    }
}

/// Checks reflexivity, symmetry and transitivity of `rel` over every pair
/// and triple drawn from `carrier`.
pub fn verify_equivalence<T>(carrier: &[T], rel: &EquivalenceRelation<T>) -> bool {
    equivalence_failure(carrier, rel).is_none()
}

fn equivalence_failure<T>(carrier: &[T], rel: &EquivalenceRelation<T>) -> Option<String> {
    for (i, x) in carrier.iter().enumerate() {
        if !rel.relates(x, x) {
            return Some(format!("reflexivity fails at element #{i}"));
        }
    }
    for (i, x) in carrier.iter().enumerate() {
        for (j, y) in carrier.iter().enumerate() {
            if rel.relates(x, y) != rel.relates(y, x) {
                return Some(format!("symmetry fails at pair (#{i}, #{j})"));
            }
        }
    }
    for (i, x) in carrier.iter().enumerate() {
        for (j, y) in carrier.iter().enumerate() {
            for (k, z) in carrier.iter().enumerate() {
                if rel.relates(x, y) && rel.relates(y, z) && !rel.relates(x, z) {
                    return Some(format!("transitivity fails at triple (#{i}, #{j}, #{k})"));
                }
            }
        }
    }
    None
}

/// Splits the carrier into equivalence classes `[x] = {y | x ~ y}`.
///
/// Duplicate carrier entries are collapsed to their first occurrence. Fails
/// with [`QuotientError::NotAnEquivalence`] when the axioms do not hold.
pub fn partition<T: Clone + PartialEq>(
    carrier: &[T],
    rel: &EquivalenceRelation<T>,
) -> Result<Partition<T>, QuotientError> {
    if let Some(reason) = equivalence_failure(carrier, rel) {
        return Err(QuotientError::NotAnEquivalence { reason });
    }
    let mut distinct: Vec<T> = Vec::new();
    for x in carrier {
        if !distinct.contains(x) {
            distinct.push(x.clone());
        }
    }
    let mut classes: Vec<Vec<T>> = Vec::new();
    let mut assigned: Vec<bool> = vec![false; distinct.len()];
    for i in 0..distinct.len() {
        if assigned[i] {
            continue;
        }
        let mut class = Vec::new();
        for j in i..distinct.len() {
            if !assigned[j] && rel.relates(&distinct[i], &distinct[j]) {
                assigned[j] = true;
                class.push(distinct[j].clone());
            }
        }
        classes.push(class);
    }
    Ok(Partition { classes })
}
