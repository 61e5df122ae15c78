//! Canonical simple functions over interval unions and their exact integral.

use std::collections::HashMap;

use crate::numbers::Rational;

use super::interval::IntervalUnion;
use super::MeasureError;

/// A simple function in canonical form: finitely many pairwise-distinct
/// nonzero values on pairwise-disjoint non-empty supports, zero elsewhere.
/// Terms are ordered by descending value for determinism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleFunction {
    terms: Vec<(Rational, IntervalUnion)>,
}

impl SimpleFunction {
    pub fn zero() -> Self {
        SimpleFunction { terms: vec![] }
    }

    /// A single scaled indicator `c * chi_E`.
    pub fn indicator(value: Rational, support: IntervalUnion) -> Self {
        simple_canonicalize(vec![(value, support)])
    }

    pub fn terms(&self) -> &[(Rational, IntervalUnion)] {
        &self.terms
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        for (c, e) in &self.terms {
            if e.contains(x) {
                return c.clone();
            }
        }
        Rational::zero()
    }

    /// Pointwise sum, re-canonicalized.
    pub fn add(&self, other: &SimpleFunction) -> SimpleFunction {
        let mut raw = self.terms.clone();
        raw.extend(other.terms.iter().cloned());
        simple_canonicalize(raw)
    }

    pub fn scale(&self, c: &Rational) -> SimpleFunction {
        simple_canonicalize(
            self.terms
                .iter()
                .map(|(v, e)| (c * v, e.clone()))
                .collect(),
        )
    }

    /// Positive part `f+ = max(f, 0)`.
    pub fn positive_part(&self) -> SimpleFunction {
        SimpleFunction {
            terms: self
                .terms
                .iter()
                .filter(|(c, _)| c.is_positive())
                .cloned()
                .collect(),
        }
    }

    /// Negative part `f- = max(-f, 0)`, so that `f = f+ - f-`.
    pub fn negative_part(&self) -> SimpleFunction {
        simple_canonicalize(
            self.terms
                .iter()
                .filter(|(c, _)| c.is_negative())
                .map(|(c, e)| (-c, e.clone()))
                .collect(),
        )
    }
}

/// Rewrites an arbitrary `sum of c_k * chi_(E_k)` into canonical form:
/// overlaps sum pointwise, equal values merge, zero terms drop.
pub fn simple_canonicalize(raw: Vec<(Rational, IntervalUnion)>) -> SimpleFunction {
    // Breakpoints of all supports cut the line into atoms on which every
    // term is constant.
    let mut cuts: Vec<Rational> = Vec::new();
    for (_, e) in &raw {
        cuts.extend(e.endpoints());
    }
    cuts.sort();
    cuts.dedup();

    let mut by_value: HashMap<Rational, Vec<(Rational, Rational)>> = HashMap::new();
    for pair in cuts.windows(2) {
        let (lo, hi) = (&pair[0], &pair[1]);
        let mut total = Rational::zero();
        for (c, e) in &raw {
            if e.contains(lo) {
                total = &total + c;
            }
        }
        if !total.is_zero() {
            by_value
                .entry(total)
                .or_default()
                .push((lo.clone(), hi.clone()));
        }
    }

    let mut terms: Vec<(Rational, IntervalUnion)> = by_value
        .into_iter()
        .map(|(value, pieces)| (value, IntervalUnion::from_intervals(pieces)))
        .collect();
    terms.sort_by(|(a, _), (b, _)| b.cmp(a));
    SimpleFunction { terms }
}

/// The simple-function integral `sum of c_k * mu(A_k intersect E)` under the
/// length measure, computed through the positive and negative parts.
pub fn integrate_simple(s: &SimpleFunction, over: &IntervalUnion) -> Rational {
    let part = |f: &SimpleFunction| {
        f.terms
            .iter()
            .fold(Rational::zero(), |acc, (c, e)| {
                &acc + &(c * &e.intersect(over).measure())
            })
    };
    &part(&s.positive_part()) - &part(&s.negative_part())
}

/// Measure profile of an increasing chain against its intended limit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonotoneLimitReport {
    /// `mu(E_k)` for each chain element, in order.
    pub measures: Vec<Rational>,
    pub limit_measure: Rational,
    /// `mu(limit) - mu(E_last)`.
    pub final_gap: Rational,
    /// Whether the union of the chain (its last element) equals the limit.
    pub union_equals_limit: bool,
    pub measures_non_decreasing: bool,
}

impl MonotoneLimitReport {
    /// The finite certificate: the chain must actually reach the limit.
    /// A finite prefix of a strictly growing chain reports its gap instead.
    pub fn certified(&self) -> bool {
        self.measures_non_decreasing && self.union_equals_limit
    }
}

/// Checks the monotone-limit behaviour of an increasing chain of interval
/// unions. Errs when the chain is not increasing; otherwise reports the
/// measure profile and whether the chain stabilizes at the limit exactly.
pub fn monotone_limit_check(
    chain: &[IntervalUnion],
    limit: &IntervalUnion,
) -> Result<MonotoneLimitReport, MeasureError> {
    for (k, pair) in chain.windows(2).enumerate() {
        if !pair[0].is_subset_of(&pair[1]) {
            return Err(MeasureError::NotIncreasing { position: k });
        }
    }
    let measures: Vec<Rational> = chain.iter().map(IntervalUnion::measure).collect();
    let limit_measure = limit.measure();
    let union = chain
        .iter()
        .fold(IntervalUnion::empty(), |acc, e| acc.union(e));
    let final_gap = match measures.last() {
        Some(last) => &limit_measure - last,
        None => limit_measure.clone(),
    };
    let measures_non_decreasing = measures.windows(2).all(|w| w[0] <= w[1]);
    Ok(MonotoneLimitReport {
        measures,
        limit_measure,
        final_gap,
        union_equals_limit: union == *limit,
        measures_non_decreasing,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(a: i64, b: i64) -> IntervalUnion {
        IntervalUnion::interval(Rational::from_int(a), Rational::from_int(b))
    }

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn equal_values_merge() {
        let s = simple_canonicalize(vec![(q(2), iv(0, 2)), (q(2), iv(2, 3))]);
        assert_eq!(s.terms(), &[(q(2), iv(0, 3))]);
    }

    #[test]
    fn overlaps_sum_pointwise() {
        let s = simple_canonicalize(vec![(q(1), iv(0, 2)), (q(1), iv(1, 3))]);
        assert_eq!(
            s.terms(),
            &[
                (q(2), iv(1, 2)),
                (q(1), iv(0, 1).union(&iv(2, 3))),
            ]
        );
    }

    #[test]
    fn empty_input_is_the_zero_function() {
        let s = simple_canonicalize(vec![]);
        assert!(s.terms().is_empty());
        assert!(s.eval(&q(5)).is_zero());
    }

    #[test]
    fn cancelling_terms_drop_out() {
        let s = simple_canonicalize(vec![(q(3), iv(0, 1)), (q(-3), iv(0, 1))]);
        assert_eq!(s, SimpleFunction::zero());
    }

    #[test]
    fn two_step_integral() {
        let s = simple_canonicalize(vec![(q(2), iv(0, 1)), (q(5), iv(1, 3))]);
        assert_eq!(integrate_simple(&s, &iv(0, 3)), q(12));
    }

    #[test]
    fn integral_over_empty_set_vanishes() {
        let s = simple_canonicalize(vec![(q(7), iv(0, 4))]);
        assert!(integrate_simple(&s, &IntervalUnion::empty()).is_zero());
    }

    #[test]
    fn signed_integrand_goes_through_the_parts() {
        let s = SimpleFunction::indicator(q(-3), iv(0, 2));
        assert!(s.positive_part().terms().is_empty());
        assert_eq!(s.negative_part().terms(), &[(q(3), iv(0, 2))]);
        assert_eq!(integrate_simple(&s, &iv(0, 1)), q(-3));
    }

    #[test]
    fn integral_is_linear_in_the_integrand() {
        let s = simple_canonicalize(vec![(q(2), iv(0, 2)), (q(-1), iv(1, 4))]);
        let t = simple_canonicalize(vec![(Rational::ratio(1, 2), iv(-1, 3))]);
        let e = iv(0, 3);
        assert_eq!(
            integrate_simple(&s.add(&t), &e),
            &integrate_simple(&s, &e) + &integrate_simple(&t, &e)
        );
    }

    #[test]
    fn growing_chain_reports_its_gap() {
        let chain: Vec<IntervalUnion> = (1..=50)
            .map(|k| IntervalUnion::interval(q(0), Rational::ratio(k, k + 1)))
            .collect();
        let limit = iv(0, 1);
        let report = monotone_limit_check(&chain, &limit).unwrap();
        assert!(report.measures_non_decreasing);
        assert!(!report.union_equals_limit);
        assert!(!report.certified());
        assert_eq!(report.final_gap, Rational::ratio(1, 51));
        assert_eq!(report.measures[0], Rational::ratio(1, 2));
    }

    #[test]
    fn constant_chain_certifies_immediately() {
        let e = iv(2, 5);
        let report = monotone_limit_check(&[e.clone(), e.clone(), e.clone()], &e).unwrap();
        assert!(report.certified());
        assert!(report.final_gap.is_zero());
    }

    #[test]
    fn wrong_limit_fails_certification() {
        let chain = [IntervalUnion::empty(), iv(0, 1)];
        let report = monotone_limit_check(&chain, &iv(0, 2)).unwrap();
        assert!(!report.union_equals_limit);
        assert!(!report.certified());
    }

    #[test]
    fn decreasing_chain_is_rejected() {
        let chain = [iv(0, 2), iv(0, 1)];
        assert!(matches!(
            monotone_limit_check(&chain, &iv(0, 2)),
            Err(MeasureError::NotIncreasing { position: 0 })
        ));
    }
}
