//! Metric-space primitives at desk scale: exhaustive axiom checks on finite
//! spaces, balls, greedy epsilon-nets, and the completion distance between
//! Cauchy sequences of a base space.

use std::sync::Arc;

use serde::Deserialize;
use thiserror::Error;

use crate::numbers::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MetricError {
    #[error("distance table shape does not match point count")]
    BadTable,
    #[error("unknown point {label:?}")]
    UnknownPoint { label: String },
    #[error("cauchy probe failed: d(x_N, x_(N+7)) = {gap} > {eps} at N = {index}")]
    ModulusViolation { eps: String, index: u64, gap: String },
}

/// A finite metric space with a precomputed distance table. The table is
/// data, not a verified metric; run [`verify_metric`] for the axiom check.
#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
pub struct FiniteMetricSpace {
    pub points: Vec<String>,
    pub dist: Vec<Vec<Rational>>,
}

impl FiniteMetricSpace {
    pub fn new(points: Vec<String>, dist: Vec<Vec<Rational>>) -> Result<Self, MetricError> {
        let n = points.len();
        if dist.len() != n || dist.iter().any(|row| row.len() != n) {
            return Err(MetricError::BadTable);
        }
        Ok(FiniteMetricSpace { points, dist })
    }

    /// Points on the rational line with `d(x, y) = |x - y|`.
    pub fn from_rationals(values: &[Rational]) -> Self {
        let points = values.iter().map(Rational::to_string).collect();
        let dist = values
            .iter()
            .map(|x| values.iter().map(|y| (x - y).abs()).collect())
            .collect();
        FiniteMetricSpace { points, dist }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn distance(&self, i: usize, j: usize) -> &Rational {
        &self.dist[i][j]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.points.iter().position(|p| p == label)
    }
}

/// Exhaustive check of non-negativity, identity of indiscernibles, symmetry
/// and the triangle inequality over all point triples.
pub fn verify_metric(space: &FiniteMetricSpace) -> bool {
    metric_failure(space).is_none()
}

pub fn metric_failure(space: &FiniteMetricSpace) -> Option<String> {
    let n = space.len();
    let d = |i: usize, j: usize| space.distance(i, j);
    for i in 0..n {
        for j in 0..n {
            if d(i, j).is_negative() {
                return Some(format!("negativity at ({i},{j})"));
            }
            if (i == j) != d(i, j).is_zero() {
                return Some(format!("identity of indiscernibles fails at ({i},{j})"));
            }
            if d(i, j) != d(j, i) {
                return Some(format!("symmetry fails at ({i},{j})"));
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if d(i, j) > &(d(i, k) + d(k, j)) {
                    return Some(format!("triangle inequality fails at ({i},{j},{k})"));
                }
            }
        }
    }
    None
}

/// Members of the ball around `center`: strict inequality for the open
/// ball, non-strict for the closed one. Returned in point-list order.
pub fn ball_members<'a>(
    space: &'a FiniteMetricSpace,
    center: &str,
    radius: &Rational,
    closed: bool,
) -> Result<Vec<&'a str>, MetricError> {
    let c = space
        .index_of(center)
        .ok_or_else(|| MetricError::UnknownPoint {
            label: center.to_string(),
        })?;
    Ok((0..space.len())
        .filter(|&i| {
            let d = space.distance(c, i);
            if closed {
                d <= radius
            } else {
                d < radius
            }
        })
        .map(|i| space.points[i].as_str())
        .collect())
}

/// Greedy epsilon-cover: repeatedly take the first uncovered point as a
/// center and mark everything within `eps` covered. Point-list order makes
/// the result deterministic.
pub fn epsilon_net_greedy<'a>(space: &'a FiniteMetricSpace, eps: &Rational) -> Vec<&'a str> {
    let n = space.len();
    let mut covered = vec![false; n];
    let mut centers = Vec::new();
    for i in 0..n {
        if covered[i] {
            continue;
        }
        centers.push(space.points[i].as_str());
        for (j, flag) in covered.iter_mut().enumerate() {
            if space.distance(i, j) <= eps {
                *flag = true;
            }
        }
    }
    centers
}

type TermFn<P> = dyn Fn(u64) -> P + Send + Sync;
type ModulusFn = dyn Fn(&Rational) -> u64 + Send + Sync;
type DistFn<P> = dyn Fn(&P, &P) -> Rational + Send + Sync;

/// A Cauchy sequence in a base space with a computable distance, carrying
/// its own convergence modulus. A point of the completion.
#[derive(Clone)]
pub struct CauchyPoint<P> {
    term: Arc<TermFn<P>>,
    modulus: Arc<ModulusFn>,
}

impl<P> CauchyPoint<P> {
    /// Wraps a sequence, spot-checking the Cauchy bound at
    /// `eps in {1, 1/10, 1/100}` with index pairs `(N, N + 7)`.
    pub fn new(
        term: impl Fn(u64) -> P + Send + Sync + 'static,
        modulus: impl Fn(&Rational) -> u64 + Send + Sync + 'static,
        dist: &DistFn<P>,
    ) -> Result<Self, MetricError> {
        let point = CauchyPoint {
            term: Arc::new(term),
            modulus: Arc::new(modulus),
        };
        for (p, q) in [(1i64, 1i64), (1, 10), (1, 100)] {
            let eps = Rational::ratio(p, q);
            let n = point.modulus(&eps);
            let gap = dist(&point.term(n), &point.term(n + 7));
            if gap > eps {
                return Err(MetricError::ModulusViolation {
                    eps: eps.to_string(),
                    index: n,
                    gap: gap.to_string(),
                });
            }
        }
        Ok(point)
    }

    pub fn constant(value: P) -> Self
    where
        P: Clone + Send + Sync + 'static,
    {
        CauchyPoint {
            term: Arc::new(move |_| value.clone()),
            modulus: Arc::new(|_| 0),
        }
    }

    pub fn term(&self, k: u64) -> P {
        (self.term)(k)
    }

    pub fn modulus(&self, eps: &Rational) -> u64 {
        (self.modulus)(eps)
    }
}

/// The completion distance probed at accuracy `eps`: evaluates
/// `d(x_N, y_N)` at `N = max` of both moduli at `eps/4`, which is within
/// `eps` of `lim d(x_k, y_k)`.
///
/// Two completion points coincide exactly when these probes tend to zero as
/// `eps` shrinks; that limit is not decidable, so callers compare probes at
/// the tolerances they care about.
pub fn completion_distance<P>(
    x: &CauchyPoint<P>,
    y: &CauchyPoint<P>,
    dist: &DistFn<P>,
    eps: &Rational,
) -> Rational {
    assert!(eps.is_positive(), "probe accuracy must be > 0");
    let quarter = eps / &Rational::from_int(4);
    let n = x.modulus(&quarter).max(y.modulus(&quarter));
    dist(&x.term(n), &y.term(n))
}

/// `d(x, y) = |x - y|` on the rational line, boxed for use with
/// [`CauchyPoint`].
pub fn rational_line_distance() -> Box<DistFn<Rational>> {
    Box::new(|x: &Rational, y: &Rational| (x - y).abs())
}

/// Convenience: the sequence `1/(k+1)` on the rational line with the
/// modulus `N(eps) = max(ceil(3/eps), 1)`.
pub fn vanishing_sequence() -> CauchyPoint<Rational> {
    CauchyPoint::new(
        |k| Rational::ratio(1, k as i64 + 1),
        |eps| (&Rational::from_int(3) / eps).ceil_u64().max(1),
        &*rational_line_distance(),
    )
    .expect("the shrinking sequence satisfies its modulus")
}
