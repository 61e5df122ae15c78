//! Finite unions of half-open intervals `[a, b)` with rational endpoints.
//!
//! Half-open intervals are closed under union, intersection and difference,
//! so the set algebra never leaves the class. The normalized form keeps the
//! intervals sorted, disjoint and non-adjacent (touching intervals merge).

use std::fmt;

use crate::numbers::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntervalUnion {
    /// Sorted, pairwise-disjoint, non-adjacent `[start, end)` pairs with
    /// `start < end`.
    intervals: Vec<(Rational, Rational)>,
}

impl IntervalUnion {
    pub fn empty() -> Self {
        IntervalUnion { intervals: vec![] }
    }

    /// A single interval `[a, b)`; empty when `a >= b`.
    pub fn interval(a: Rational, b: Rational) -> Self {
        if a < b {
            IntervalUnion {
                intervals: vec![(a, b)],
            }
        } else {
            IntervalUnion::empty()
        }
    }

    /// Normalizes an arbitrary list of `[a, b)` pairs.
    pub fn from_intervals(raw: Vec<(Rational, Rational)>) -> Self {
        let mut keep: Vec<(Rational, Rational)> =
            raw.into_iter().filter(|(a, b)| a < b).collect();
        keep.sort();
        let mut merged: Vec<(Rational, Rational)> = Vec::with_capacity(keep.len());
        for (a, b) in keep {
            match merged.last_mut() {
                Some((_, end)) if a <= *end => {
                    if b > *end {
                        *end = b;
                    }
                }
                _ => merged.push((a, b)),
            }
        }
        IntervalUnion { intervals: merged }
    }

    pub fn intervals(&self) -> &[(Rational, Rational)] {
        &self.intervals
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn contains(&self, x: &Rational) -> bool {
        self.intervals.iter().any(|(a, b)| a <= x && x < b)
    }

    pub fn union(&self, other: &IntervalUnion) -> IntervalUnion {
        let mut raw = self.intervals.clone();
        raw.extend(other.intervals.iter().cloned());
        IntervalUnion::from_intervals(raw)
    }

    pub fn intersect(&self, other: &IntervalUnion) -> IntervalUnion {
        let mut raw = Vec::new();
        for (a1, b1) in &self.intervals {
            for (a2, b2) in &other.intervals {
                let lo = a1.clone().max(a2.clone());
                let hi = b1.clone().min(b2.clone());
                if lo < hi {
                    raw.push((lo, hi));
                }
            }
        }
        IntervalUnion::from_intervals(raw)
    }

    /// Set difference `self \ other`.
    pub fn diff(&self, other: &IntervalUnion) -> IntervalUnion {
        let mut raw = Vec::new();
        for (a, b) in &self.intervals {
            // Carve the overlapping parts of `other` out of [a, b).
            let mut cursor = a.clone();
            for (c, d) in &other.intervals {
                if d <= &cursor || c >= b {
                    continue;
                }
                if c > &cursor {
                    raw.push((cursor.clone(), c.clone()));
                }
                if d >= b {
                    cursor = b.clone();
                    break;
                }
                cursor = cursor.max(d.clone());
            }
            if &cursor < b {
                raw.push((cursor, b.clone()));
            }
        }
        IntervalUnion::from_intervals(raw)
    }

    pub fn is_subset_of(&self, other: &IntervalUnion) -> bool {
        self.diff(other).is_empty()
    }

    /// Total length, finitely additive over disjoint unions.
    pub fn measure(&self) -> Rational {
        self.intervals
            .iter()
            .fold(Rational::zero(), |acc, (a, b)| &acc + &(b - a))
    }

    /// All endpoints in sorted order, without duplicates.
    pub fn endpoints(&self) -> Vec<Rational> {
        let mut out = Vec::with_capacity(2 * self.intervals.len());
        for (a, b) in &self.intervals {
            out.push(a.clone());
            out.push(b.clone());
        }
        out.sort();
        out.dedup();
        out
    }
}

impl fmt::Display for IntervalUnion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.intervals.is_empty() {
            return write!(f, "{{}}");
        }
        let parts: Vec<String> = self
            .intervals
            .iter()
            .map(|(a, b)| format!("[{a}, {b})"))
            .collect();
        write!(f, "{}", parts.join(" u "))
    }
}

/// The Lebesgue measure of an interval union: the sum of interval lengths.
pub fn lebesgue_measure(a: &IntervalUnion) -> Rational {
    a.measure()
}
