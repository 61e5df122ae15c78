//! The gauge of a halfspace-bounded convex body containing the origin.

use super::AnalysisError;

/// Intersection of halfspaces `{x : <normal, x> <= offset}` with every
/// offset positive, so the origin is strictly inside. Symmetric bounded
/// instances make the gauge a norm-like seminorm.
#[derive(Debug, Clone, PartialEq)]
pub struct Polytope {
    halfspaces: Vec<(Vec<f64>, f64)>,
}

impl Polytope {
    pub fn new(halfspaces: Vec<(Vec<f64>, f64)>) -> Result<Self, AnalysisError> {
        if halfspaces.is_empty() {
            return Err(AnalysisError::Parameter("need at least one halfspace".into()));
        }
        let dim = halfspaces[0].0.len();
        for (normal, offset) in &halfspaces {
            if normal.len() != dim {
                return Err(AnalysisError::Parameter(
                    "halfspace normals must share one dimension".into(),
                ));
            }
            let interior = offset.is_finite() && *offset > 0.0;
            if !interior {
                return Err(AnalysisError::Parameter(
                    "offsets must be positive so the origin is interior".into(),
                ));
            }
        }
        Ok(Polytope { halfspaces })
    }

    /// The unit box `{|x_k| <= 1}` from `2 * dim` halfspaces.
    pub fn unit_box(dim: usize) -> Self {
        let mut halfspaces = Vec::with_capacity(2 * dim);
        for k in 0..dim {
            for sign in [1.0, -1.0] {
                let mut normal = vec![0.0; dim];
                normal[k] = sign;
                halfspaces.push((normal, 1.0));
            }
        }
        Polytope { halfspaces }
    }

    /// Adds the mirrored halfspace for each given one, making the body
    /// symmetric about the origin.
    pub fn symmetrized(halfspaces: Vec<(Vec<f64>, f64)>) -> Result<Self, AnalysisError> {
        let mut all = Vec::with_capacity(2 * halfspaces.len());
        for (normal, offset) in halfspaces {
            all.push((normal.iter().map(|v| -v).collect(), offset));
            all.push((normal, offset));
        }
        Polytope::new(all)
    }

    pub fn dim(&self) -> usize {
        self.halfspaces[0].0.len()
    }

    pub fn contains(&self, x: &[f64]) -> bool {
        self.halfspaces
            .iter()
            .all(|(n, c)| dot(n, x) <= *c + 1e-12)
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// `inf { t > 0 : x/t inside }`, which for a halfspace intersection is the
/// largest ratio `<normal, x> / offset` clamped at zero.
pub fn minkowski_functional(body: &Polytope, x: &[f64]) -> f64 {
    body.halfspaces
        .iter()
        .map(|(n, c)| dot(n, x) / c)
        .fold(0.0f64, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gauge_of_the_origin_is_zero() {
        let box2 = Polytope::unit_box(2);
        assert_eq!(minkowski_functional(&box2, &[0.0, 0.0]), 0.0);
    }

    #[test]
    fn box_gauge_is_the_max_coordinate() {
        let box2 = Polytope::unit_box(2);
        assert_eq!(minkowski_functional(&box2, &[3.0, -2.0]), 3.0);
        assert_eq!(minkowski_functional(&box2, &[-0.25, 0.1]), 0.25);
    }

    #[test]
    fn gauge_scales_to_the_boundary() {
        // x / gauge(x) lands on the boundary of the body.
        let body = Polytope::symmetrized(vec![
            (vec![1.0, 2.0], 2.0),
            (vec![-1.0, 1.0], 1.0),
        ])
        .unwrap();
        let x = [0.7, 1.3];
        let g = minkowski_functional(&body, &x);
        assert!(g > 0.0);
        let scaled: Vec<f64> = x.iter().map(|v| v / g).collect();
        assert!(body.contains(&scaled));
        let pushed: Vec<f64> = x.iter().map(|v| v / (g * 0.99)).collect();
        assert!(!body.contains(&pushed));
    }

    #[test]
    fn gauge_is_subadditive_and_absolutely_homogeneous() {
        let body = Polytope::symmetrized(vec![
            (vec![2.0, 1.0], 3.0),
            (vec![0.5, -1.0], 1.0),
        ])
        .unwrap();
        let pairs = [
            ([1.0, 2.0], [0.5, -0.75]),
            ([-3.0, 0.1], [2.0, 2.0]),
            ([0.0, 0.0], [1.0, -1.0]),
        ];
        for (x, y) in pairs {
            let sum: Vec<f64> = x.iter().zip(&y).map(|(a, b)| a + b).collect();
            let lhs = minkowski_functional(&body, &sum);
            let rhs = minkowski_functional(&body, &x) + minkowski_functional(&body, &y);
            assert!(lhs <= rhs + 1e-12, "subadditivity at {x:?} + {y:?}");
            for s in [-2.0f64, 0.0, 0.5] {
                let scaled: Vec<f64> = x.iter().map(|v| v * s).collect();
                let lhs = minkowski_functional(&body, &scaled);
                let rhs = s.abs() * minkowski_functional(&body, &x);
                assert!((lhs - rhs).abs() < 1e-12, "homogeneity at {s} * {x:?}");
            }
        }
    }

    #[test]
    fn invalid_polytopes_are_rejected() {
        assert!(Polytope::new(vec![]).is_err());
        assert!(Polytope::new(vec![(vec![1.0], 0.0)]).is_err());
        assert!(Polytope::new(vec![(vec![1.0], 1.0), (vec![1.0, 0.0], 1.0)]).is_err());
    }
}
