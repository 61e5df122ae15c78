//! Smoothness norm estimators on sampled functions: C^m, Hoelder, Zygmund,
//! and the Besov norm in its moduli-of-continuity form.
//!
//! Derivatives come from second-order stencils (central inside, one-sided at
//! the boundary). Suprema over displacements run over the grid lattice, so
//! far-field behaviour beyond the sampled box stays unobservable.

use super::difference::{finite_difference, grid_lp_norm, modulus_of_continuity, seq_lp_norm, Lp};
use super::grid::SampledFunction;
use super::AnalysisError;

/// Second-order estimate of the partial derivative along one axis.
fn derivative_axis(f: &SampledFunction, axis: usize) -> Result<SampledFunction, AnalysisError> {
    let grid = &f.grid;
    if grid.shape[axis] < 3 {
        return Err(AnalysisError::GridTooCoarse {
            needed: 3,
            extent: grid.shape[axis],
        });
    }
    let s = grid.spacing;
    let extent = grid.shape[axis];
    let mut values = vec![0.0; f.len()];
    for idx in grid.indices() {
        let i = idx[axis];
        let at = |k: usize| {
            let mut idx2 = idx.clone();
            idx2[axis] = k;
            f.at(&idx2)
        };
        let v = if i == 0 {
            (-3.0 * at(0) + 4.0 * at(1) - at(2)) / (2.0 * s)
        } else if i == extent - 1 {
            (3.0 * at(extent - 1) - 4.0 * at(extent - 2) + at(extent - 3)) / (2.0 * s)
        } else {
            (at(i + 1) - at(i - 1)) / (2.0 * s)
        };
        values[grid.flat(&idx)] = v;
    }
    Ok(SampledFunction {
        grid: grid.clone(),
        values,
    })
}

/// Estimate of the mixed partial `d^alpha f` by iterating the axis
/// stencils; `alpha[k]` counts derivatives along axis `k`.
pub fn partial_estimate(
    f: &SampledFunction,
    alpha: &[usize],
) -> Result<SampledFunction, AnalysisError> {
    if alpha.len() != f.dim() {
        return Err(AnalysisError::Parameter(format!(
            "multi-index of rank {} on a {}-dimensional grid",
            alpha.len(),
            f.dim()
        )));
    }
    let mut out = f.clone();
    for (axis, &count) in alpha.iter().enumerate() {
        for _ in 0..count {
            out = derivative_axis(&out, axis)?;
        }
    }
    Ok(out)
}

/// All multi-indices of the given rank with `|alpha| <= max_order`,
/// lexicographic order.
pub fn multi_indices_up_to(dim: usize, max_order: u32) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = vec![0usize; dim];
    fn rec(
        axis: usize,
        budget: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if axis == current.len() {
            out.push(current.clone());
            return;
        }
        for take in 0..=budget {
            current[axis] = take;
            rec(axis + 1, budget - take, current, out);
        }
        current[axis] = 0;
    }
    rec(0, max_order as usize, &mut current, &mut out);
    out
}

/// `sum over |alpha| <= m of sup |d^alpha f|`, the C^m norm estimate.
pub fn cm_norm(f: &SampledFunction, m: u32) -> Result<f64, AnalysisError> {
    let mut total = 0.0;
    for alpha in multi_indices_up_to(f.dim(), m) {
        let d = partial_estimate(f, &alpha)?;
        total += grid_lp_norm(&d, Lp::Infinity);
    }
    Ok(total)
}

/// Hoelder norm for non-integer `s`: the `C^[s]` part plus the largest
/// difference quotient `|d^alpha f(x) - d^alpha f(y)| / |x - y|^{s}` with
/// `|alpha| = [s]` and the fractional exponent `{s}`, over all sample
/// pairs.
pub fn holder_norm(f: &SampledFunction, s: f64) -> Result<f64, AnalysisError> {
    if s <= 0.0 || s.fract() == 0.0 {
        return Err(AnalysisError::Parameter(format!(
            "Hoelder order must be positive and non-integer, got {s}"
        )));
    }
    let whole = s.floor() as u32;
    let frac = s - s.floor();
    let base = cm_norm(f, whole)?;

    let mut sup: f64 = 0.0;
    for alpha in multi_indices_up_to(f.dim(), whole) {
        if alpha.iter().sum::<usize>() != whole as usize {
            continue;
        }
        let d = partial_estimate(f, &alpha)?;
        let points: Vec<Vec<f64>> = d.grid.indices().map(|i| d.grid.point(&i)).collect();
        for (i, xi) in points.iter().enumerate() {
            for (j, xj) in points.iter().enumerate().skip(i + 1) {
                let dist_sq: f64 = xi
                    .iter()
                    .zip(xj)
                    .map(|(a, b)| (a - b) * (a - b))
                    .sum();
                let quotient =
                    (d.values[i] - d.values[j]).abs() / dist_sq.sqrt().powf(frac);
                sup = sup.max(quotient);
            }
        }
    }
    Ok(base + sup)
}

/// Zygmund norm for integer order `m >= 1`: the `C^(m-1)` part plus the
/// largest `|D^2_h (d^alpha f)|_inf / |h|_inf` over nonzero lattice `h`
/// and `|alpha| = m - 1`.
pub fn zygmund_norm(f: &SampledFunction, m: u32) -> Result<f64, AnalysisError> {
    if m < 1 {
        return Err(AnalysisError::Parameter("Zygmund order must be >= 1".into()));
    }
    let base = cm_norm(f, m - 1)?;
    let sup = zygmund_difference_part(f, m)?;
    Ok(base + sup)
}

/// The second-difference supremum of the Zygmund norm on its own.
pub fn zygmund_difference_part(f: &SampledFunction, m: u32) -> Result<f64, AnalysisError> {
    let dim = f.dim();
    let spacing = f.grid.spacing;
    let mut sup: f64 = 0.0;
    for alpha in multi_indices_up_to(dim, m - 1) {
        if alpha.iter().sum::<usize>() != (m - 1) as usize {
            continue;
        }
        let d = partial_estimate(f, &alpha)?;
        // Every nonzero lattice h that keeps at least one point for the
        // second difference: |h| up to (extent - 1) / 2 per axis.
        let bounds: Vec<i64> = d.grid.shape.iter().map(|&n| ((n - 1) / 2) as i64).collect();
        let mut h = vec![0i64; dim];
        enumerate_boxes(&bounds, &mut h, 0, &mut |h| {
            if h.iter().all(|&c| c == 0) {
                return;
            }
            if let Ok(dd) = finite_difference(&d, h, 2) {
                let h_inf = h
                    .iter()
                    .map(|&c| (c as f64 * spacing).abs())
                    .fold(0.0f64, f64::max);
                sup = sup.max(grid_lp_norm(&dd, Lp::Infinity) / h_inf);
            }
        });
    }
    Ok(sup)
}

fn enumerate_boxes(bounds: &[i64], current: &mut Vec<i64>, axis: usize, visit: &mut impl FnMut(&[i64])) {
    if axis == bounds.len() {
        visit(current);
        return;
    }
    for step in -bounds[axis]..=bounds[axis] {
        current[axis] = step;
        enumerate_boxes(bounds, current, axis + 1, visit);
    }
    current[axis] = 0;
}

/// Besov norm in moduli-of-continuity form: `|f|_p` plus an lq aggregate of
/// the level values `u_j = t_j^(-s) * omega_(m,p)(f, t_j)` at the dyadic
/// radii `t_j = 2^-j`, `j < t_levels`.
///
/// The level aggregate is a plain lq norm (sup when `q` is infinite), which
/// keeps the computed family exactly monotone in `q`; no equivalence
/// constants are chased.
pub fn besov_norm_mc(
    f: &SampledFunction,
    s: f64,
    p: Lp,
    q: Lp,
    m: u32,
    t_levels: u32,
) -> Result<f64, AnalysisError> {
    let positive = s.is_finite() && s > 0.0;
    if !positive {
        return Err(AnalysisError::Parameter(format!(
            "smoothness index must be positive, got {s}"
        )));
    }
    if (m as f64) <= s {
        return Err(AnalysisError::Parameter(format!(
            "difference order {m} must exceed the smoothness index {s}"
        )));
    }
    if t_levels < 4 {
        return Err(AnalysisError::Parameter(format!(
            "need at least 4 dyadic levels, got {t_levels}"
        )));
    }
    let levels = besov_level_values(f, s, p, m, t_levels);
    Ok(grid_lp_norm(f, p) + seq_lp_norm(&levels, q))
}

/// The per-level values `t_j^(-s) * omega_(m,p)(f, t_j)`.
pub fn besov_level_values(
    f: &SampledFunction,
    s: f64,
    p: Lp,
    m: u32,
    t_levels: u32,
) -> Vec<f64> {
    (0..t_levels)
        .map(|j| {
            let t = 0.5f64.powi(j as i32);
            t.powf(-s) * modulus_of_continuity(f, m, p, t)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::grid::Grid;

    fn line(a: f64, b: f64, n: usize, f: impl Fn(f64) -> f64) -> SampledFunction {
        SampledFunction::sample(Grid::line(a, b, n).unwrap(), |x| f(x[0])).unwrap()
    }

    #[test]
    fn cm_norm_of_a_constant_is_its_magnitude() {
        let f = line(0.0, 1.0, 33, |_| -2.5);
        for m in 0..=2 {
            assert!((cm_norm(&f, m).unwrap() - 2.5).abs() < 1e-9);
        }
    }

    #[test]
    fn c1_norm_of_identity_on_symmetric_interval() {
        let f = line(-1.0, 1.0, 129, |x| x);
        let got = cm_norm(&f, 1).unwrap();
        assert!((got - 2.0).abs() < 1e-9, "sup|x| + sup|1| = 2, got {got}");
    }

    #[test]
    fn c2_norm_of_sine_sums_three_unit_sups() {
        let f = line(0.0, std::f64::consts::TAU, 2049, f64::sin);
        let got = cm_norm(&f, 2).unwrap();
        assert!((got - 3.0).abs() < 1e-2, "got {got}");
    }

    #[test]
    fn too_coarse_grids_are_rejected() {
        let f = line(0.0, 1.0, 2, |x| x);
        assert!(matches!(
            cm_norm(&f, 1),
            Err(AnalysisError::GridTooCoarse { .. })
        ));
    }

    #[test]
    fn holder_norm_of_a_constant_has_no_quotient_part() {
        let f = line(0.0, 1.0, 33, |_| 4.0);
        let got = holder_norm(&f, 0.5).unwrap();
        assert!((got - 4.0).abs() < 1e-9);
    }

    #[test]
    fn holder_quotient_of_identity_peaks_at_the_diameter() {
        // |x - y| / |x - y|^(1/2) = |x - y|^(1/2), maximal at diameter 1.
        let f = line(0.0, 1.0, 65, |x| x);
        let base = cm_norm(&f, 0).unwrap();
        let got = holder_norm(&f, 0.5).unwrap();
        assert!((got - (base + 1.0)).abs() < 1e-9, "got {got}");
    }

    #[test]
    fn holder_rejects_integer_orders() {
        let f = line(0.0, 1.0, 17, |x| x);
        assert!(holder_norm(&f, 1.0).is_err());
        assert!(holder_norm(&f, -0.5).is_err());
    }

    #[test]
    fn kink_is_visible_above_lipschitz_order() {
        // |x| lies in the 1/2 class at every resolution, but its 3/2
        // quotient grows as the grid refines.
        let coarse = line(-1.0, 1.0, 65, f64::abs);
        let fine = line(-1.0, 1.0, 513, f64::abs);
        let h_half_coarse = holder_norm(&coarse, 0.5).unwrap();
        let h_half_fine = holder_norm(&fine, 0.5).unwrap();
        assert!((h_half_coarse - h_half_fine).abs() < 0.1);

        let h32_coarse = holder_norm(&coarse, 1.5).unwrap();
        let h32_fine = holder_norm(&fine, 1.5).unwrap();
        assert!(
            h32_fine > 2.0 * h32_coarse,
            "3/2 quotient should grow: {h32_coarse} -> {h32_fine}"
        );
    }

    #[test]
    fn zygmund_norm_of_affine_is_the_sup_norm() {
        // Second differences of an affine function vanish identically.
        let f = line(-1.0, 1.0, 65, |x| 0.5 * x + 0.25);
        let got = zygmund_norm(&f, 1).unwrap();
        let sup = grid_lp_norm(&f, Lp::Infinity);
        assert!((got - sup).abs() < 1e-12, "got {got}, sup {sup}");
    }

    #[test]
    fn zygmund_part_of_x_squared_is_twice_max_h() {
        // D^2_h x^2 = 2 h^2 exactly, so the quotient is 2|h|, largest for
        // the widest h that still fits: (extent-1)/2 steps.
        let f = line(-1.0, 1.0, 257, |x| x * x);
        let s = f.grid.spacing;
        let max_h = ((257 - 1) / 2) as f64 * s;
        let part = zygmund_difference_part(&f, 1).unwrap();
        assert!((part - 2.0 * max_h).abs() < 1e-9, "got {part}");
    }

    #[test]
    fn besov_norm_of_zero_is_zero() {
        let f = line(0.0, 1.0, 65, |_| 0.0);
        let norm = besov_norm_mc(&f, 0.5, Lp::Finite(2.0), Lp::Finite(2.0), 1, 6).unwrap();
        assert_eq!(norm, 0.0);
    }

    #[test]
    fn besov_levels_are_monotone_in_q() {
        let f = line(-2.0, 2.0, 257, |x| (-x * x / 2.0).exp());
        let qs = [Lp::Finite(1.0), Lp::Finite(2.0), Lp::Finite(7.0), Lp::Infinity];
        let norms: Vec<f64> = qs
            .iter()
            .map(|&q| besov_norm_mc(&f, 0.5, Lp::Finite(2.0), q, 1, 8).unwrap())
            .collect();
        for w in norms.windows(2) {
            assert!(w[1] <= w[0] + 1e-9, "q-monotonicity: {norms:?}");
        }
    }

    #[test]
    fn besov_norm_is_stable_under_level_doubling() {
        let f = line(-4.0, 4.0, 513, |x| (-x * x / 2.0).exp());
        let coarse = besov_norm_mc(&f, 0.5, Lp::Finite(2.0), Lp::Finite(2.0), 1, 6).unwrap();
        let fine = besov_norm_mc(&f, 0.5, Lp::Finite(2.0), Lp::Finite(2.0), 1, 12).unwrap();
        assert!(
            (fine - coarse).abs() <= 0.05 * coarse,
            "doubling levels moved the value too much: {coarse} -> {fine}"
        );
    }

    #[test]
    fn besov_parameter_guards() {
        let f = line(0.0, 1.0, 33, |x| x);
        assert!(besov_norm_mc(&f, 1.5, Lp::Finite(2.0), Lp::Finite(2.0), 1, 6).is_err());
        assert!(besov_norm_mc(&f, 0.5, Lp::Finite(2.0), Lp::Finite(2.0), 1, 2).is_err());
        assert!(besov_norm_mc(&f, -1.0, Lp::Finite(2.0), Lp::Finite(2.0), 2, 6).is_err());
    }
}
