//! One-dimensional distribution functionals at desk scale: smooth
//! compactly-supported test functions, the point-evaluation and
//! principal-value functionals, regular functionals by quadrature, the
//! pairing rule for derivatives, the dilation-translation parameter
//! algebra, and a quadrature Fourier transform.

use std::sync::Arc;

use num_complex::Complex64;
use thiserror::Error;

use crate::analysis::SampledFunction;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum DistributionError {
    #[error("quadrature did not converge: successive estimates differ by {gap:e}")]
    NoConvergence { gap: f64 },
    #[error("{0}")]
    Parameter(String),
}

/// Relative tolerance of the refinement check in [`regular_apply`].
const QUADRATURE_RTOL: f64 = 1e-6;
/// Absolute agreement required between successive exclusion levels in
/// [`pv_apply`].
const PV_ATOL: f64 = 1e-8;
/// Panels per Simpson pass.
const PANELS: usize = 1 << 12;

type Evaluator = dyn Fn(f64) -> f64 + Send + Sync;

/// A smooth function vanishing outside a closed interval. The evaluator is
/// clamped to exact zero outside the support.
#[derive(Clone)]
pub struct TestFunction {
    eval: Arc<Evaluator>,
    derivative: Option<Arc<Evaluator>>,
    support: (f64, f64),
    smooth: bool,
}

impl TestFunction {
    pub fn new(
        support: (f64, f64),
        smooth: bool,
        eval: impl Fn(f64) -> f64 + Send + Sync + 'static,
    ) -> Self {
        let (a, b) = support;
        assert!(a < b, "support must be a proper interval");
        TestFunction {
            eval: Arc::new(move |x| if x < a || x > b { 0.0 } else { eval(x) }),
            derivative: None,
            support,
            smooth,
        }
    }

    pub fn with_derivative(
        mut self,
        derivative: impl Fn(f64) -> f64 + Send + Sync + 'static,
    ) -> Self {
        let (a, b) = self.support;
        self.derivative = Some(Arc::new(move |x| {
            if x < a || x > b {
                0.0
            } else {
                derivative(x)
            }
        }));
        self
    }

    pub fn value(&self, x: f64) -> f64 {
        (self.eval)(x)
    }

    pub fn support(&self) -> (f64, f64) {
        self.support
    }

    pub fn is_smooth(&self) -> bool {
        self.smooth
    }

    /// `a * self + other`, with the support hull and combined derivative.
    pub fn linear_combination(&self, a: f64, other: &TestFunction) -> TestFunction {
        let f = self.eval.clone();
        let g = other.eval.clone();
        let support = (
            self.support.0.min(other.support.0),
            self.support.1.max(other.support.1),
        );
        let derivative = match (&self.derivative, &other.derivative) {
            (Some(df), Some(dg)) => {
                let (df, dg) = (df.clone(), dg.clone());
                Some(Arc::new(move |x: f64| a * df(x) + dg(x)) as Arc<Evaluator>)
            }
            _ => None,
        };
        TestFunction {
            eval: Arc::new(move |x| a * f(x) + g(x)),
            derivative,
            support,
            smooth: self.smooth && other.smooth,
        }
    }

    /// First derivative: the exact evaluator when present, else a central
    /// difference with step `2^-20` of the support radius.
    pub fn derivative(&self) -> TestFunction {
        let derivative = match &self.derivative {
            Some(d) => d.clone(),
            None => {
                let f = self.eval.clone();
                let radius = (self.support.1 - self.support.0) / 2.0;
                let h = radius * 0.5f64.powi(20);
                Arc::new(move |x: f64| (f(x + h) - f(x - h)) / (2.0 * h)) as Arc<Evaluator>
            }
        };
        TestFunction {
            eval: derivative,
            derivative: None,
            support: self.support,
            smooth: self.smooth,
        }
    }

    pub fn derivative_of_order(&self, order: u32) -> TestFunction {
        let mut out = self.clone();
        for _ in 0..order {
            out = out.derivative();
        }
        out
    }
}

/// The standard mollifier scaled to `center` and `radius`:
/// `exp(-1/(1-u^2))` for `u = (x-center)/radius` inside `|u| < 1`, zero
/// outside. Ships with its exact first derivative.
pub fn bump(center: f64, radius: f64) -> TestFunction {
    assert!(radius.is_finite() && radius > 0.0, "bump radius must be positive");
    let shape = move |x: f64| {
        let u = (x - center) / radius;
        let w = 1.0 - u * u;
        if w <= 0.0 {
            0.0
        } else {
            (-1.0 / w).exp()
        }
    };
    let slope = move |x: f64| {
        let u = (x - center) / radius;
        let w = 1.0 - u * u;
        if w <= 0.0 {
            0.0
        } else {
            (-1.0 / w).exp() * (-2.0 * u / (w * w)) / radius
        }
    };
    TestFunction::new((center - radius, center + radius), true, shape)
        .with_derivative(slope)
}

/// Dilation-translation parameters `(a, b)` of the operator sending a
/// functional to its `a`-dilated, `b`-translated version. The identity is
/// `(1, 0)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DilationTranslation {
    pub scale: f64,
    pub shift: f64,
}

impl DilationTranslation {
    pub fn new(scale: f64, shift: f64) -> Result<Self, DistributionError> {
        if scale == 0.0 || !scale.is_finite() || !shift.is_finite() {
            return Err(DistributionError::Parameter(format!(
                "dilation scale must be nonzero and finite, got ({scale}, {shift})"
            )));
        }
        Ok(DilationTranslation { scale, shift })
    }

    pub fn identity() -> Self {
        DilationTranslation {
            scale: 1.0,
            shift: 0.0,
        }
    }

    pub fn inverse(&self) -> Self {
        DilationTranslation {
            scale: 1.0 / self.scale,
            shift: -self.shift / self.scale,
        }
    }
}

/// Parameter composition: applying `inner` first and `outer` after yields
/// `(outer.scale * inner.scale, inner.scale * outer.shift + inner.shift)`.
pub fn tau_compose(
    outer: DilationTranslation,
    inner: DilationTranslation,
) -> DilationTranslation {
    DilationTranslation {
        scale: outer.scale * inner.scale,
        shift: inner.scale * outer.shift + inner.shift,
    }
}

/// Composite Simpson over `[a, b]` with an even panel count.
fn simpson(f: &dyn Fn(f64) -> f64, a: f64, b: f64, panels: usize) -> f64 {
    debug_assert!(panels >= 2 && panels.is_multiple_of(2));
    if b <= a {
        return 0.0;
    }
    let h = (b - a) / panels as f64;
    let mut acc = f(a) + f(b);
    for i in 1..panels {
        let x = a + i as f64 * h;
        acc += f(x) * if i % 2 == 1 { 4.0 } else { 2.0 };
    }
    acc * h / 3.0
}

/// Point evaluation at the origin: the value `phi(0)`.
pub fn dirac_apply(phi: &TestFunction) -> f64 {
    phi.value(0.0)
}

/// `integral of f * phi` over the support of `phi` by composite Simpson
/// with one refinement doubling as the convergence check.
pub fn regular_apply(
    f: &(dyn Fn(f64) -> f64 + Sync),
    phi: &TestFunction,
) -> Result<f64, DistributionError> {
    let (a, b) = phi.support();
    let integrand = |x: f64| f(x) * phi.value(x);
    let coarse = simpson(&integrand, a, b, PANELS);
    let fine = simpson(&integrand, a, b, 2 * PANELS);
    let gap = (coarse - fine).abs();
    if gap > QUADRATURE_RTOL * fine.abs().max(1.0) {
        return Err(DistributionError::NoConvergence { gap });
    }
    Ok(fine)
}

/// The symmetric-limit functional `phi -> lim over eps of the integral of
/// phi(x)/x outside (-eps, eps)`.
///
/// Folding the two half-lines gives `integral from eps of
/// (phi(x) - phi(-x)) / x`, a bounded smooth integrand; the exclusion
/// radius shrinks dyadically until two successive levels agree within
/// `1e-8`, and the extrapolated value `2 I_j - I_(j-1)` is returned.
pub fn pv_apply(phi: &TestFunction, eps_levels: u32) -> Result<f64, DistributionError> {
    let (a, b) = phi.support();
    let reach = a.abs().max(b.abs());
    let folded = |x: f64| {
        if x == 0.0 {
            0.0
        } else {
            (phi.value(x) - phi.value(-x)) / x
        }
    };
    let mut previous: Option<f64> = None;
    let mut last_gap = f64::INFINITY;
    for level in 0..eps_levels {
        let eps = 0.5f64.powi(level as i32);
        if eps >= reach {
            continue;
        }
        let value = simpson(&folded, eps, reach, PANELS);
        if let Some(prev) = previous {
            let gap = (value - prev).abs();
            if gap <= PV_ATOL {
                return Ok(2.0 * value - prev);
            }
            last_gap = gap;
        }
        previous = Some(value);
    }
    Err(DistributionError::NoConvergence { gap: last_gap })
}

/// A functional that can be paired with test functions.
#[derive(Clone)]
pub enum Functional {
    /// Point evaluation at the origin.
    Dirac,
    /// The symmetric principal-value functional with a dyadic level budget.
    PrincipalValue { eps_levels: u32 },
    /// Pairing against a locally integrable function by quadrature.
    Regular(Arc<dyn Fn(f64) -> f64 + Send + Sync>),
}

impl Functional {
    pub fn regular(f: impl Fn(f64) -> f64 + Send + Sync + 'static) -> Self {
        Functional::Regular(Arc::new(f))
    }

    pub fn heaviside() -> Self {
        Functional::regular(|x| if x >= 0.0 { 1.0 } else { 0.0 })
    }

    pub fn apply(&self, phi: &TestFunction) -> Result<f64, DistributionError> {
        match self {
            Functional::Dirac => Ok(dirac_apply(phi)),
            Functional::PrincipalValue { eps_levels } => pv_apply(phi, *eps_levels),
            Functional::Regular(f) => regular_apply(&**f, phi),
        }
    }
}

/// The derivative pairing `(-1)^order * T(phi^(order))`.
pub fn distr_derivative_apply(
    functional: &Functional,
    order: u32,
    phi: &TestFunction,
) -> Result<f64, DistributionError> {
    let sign = if order.is_multiple_of(2) { 1.0 } else { -1.0 };
    let derived = phi.derivative_of_order(order);
    Ok(sign * functional.apply(&derived)?)
}

/// Trapezoid quadrature of the transform
/// `(2 pi)^(-1/2) * integral of exp(-i y x) f(x)` at each requested
/// frequency, over the sampled support.
pub fn fourier_quadrature_1d(f: &SampledFunction, frequencies: &[f64]) -> Result<Vec<Complex64>, DistributionError> {
    if f.dim() != 1 {
        return Err(DistributionError::Parameter(format!(
            "frequency-domain quadrature needs a 1-D sample, got dimension {}",
            f.dim()
        )));
    }
    let h = f.grid.spacing;
    let x0 = f.grid.origin[0];
    let n = f.values.len();
    let scale = (2.0 * std::f64::consts::PI).sqrt().recip();
    Ok(frequencies
        .iter()
        .map(|&y| {
            let mut acc = Complex64::new(0.0, 0.0);
            for (i, &v) in f.values.iter().enumerate() {
                let x = x0 + i as f64 * h;
                let weight = if i == 0 || i == n - 1 { 0.5 } else { 1.0 };
                acc += Complex64::from_polar(v * weight, -y * x);
            }
            acc * h * scale
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::Grid;

    const E_INV: f64 = 0.36787944117144233;

    #[test]
    fn bump_matches_its_closed_form() {
        let phi = bump(0.0, 1.0);
        assert!((phi.value(0.0) - E_INV).abs() < 1e-15);
        assert_eq!(phi.value(1.0), 0.0);
        assert_eq!(phi.value(-1.5), 0.0);
        for x in [0.1, 0.4, 0.9] {
            assert_eq!(phi.value(x), phi.value(-x), "even symmetry at {x}");
        }
    }

    #[test]
    fn bump_derivative_is_exact_and_odd() {
        let phi = bump(0.0, 1.0);
        let d = phi.derivative();
        assert_eq!(d.value(0.0), 0.0);
        for x in [0.2, 0.5, 0.8] {
            assert!((d.value(x) + d.value(-x)).abs() < 1e-15);
            // Compare with a central difference of the bump itself.
            let h = 1e-6;
            let numeric = (phi.value(x + h) - phi.value(x - h)) / (2.0 * h);
            assert!((d.value(x) - numeric).abs() < 1e-7, "at {x}");
        }
    }

    #[test]
    fn tau_composition_matches_the_parameter_formula() {
        let outer = DilationTranslation::new(2.0, 3.0).unwrap();
        let inner = DilationTranslation::new(5.0, 7.0).unwrap();
        let composed = tau_compose(outer, inner);
        assert_eq!(composed.scale, 10.0);
        assert_eq!(composed.shift, 22.0);
    }

    #[test]
    fn tau_identity_and_inverse() {
        let id = DilationTranslation::identity();
        let t = DilationTranslation::new(-3.0, 0.5).unwrap();
        assert_eq!(tau_compose(t, id), t);
        assert_eq!(tau_compose(id, t), t);
        let composed = tau_compose(t, t.inverse());
        assert!((composed.scale - 1.0).abs() < 1e-15);
        assert!(composed.shift.abs() < 1e-15);
    }

    #[test]
    fn tau_composition_is_associative() {
        let a = DilationTranslation::new(2.0, -1.0).unwrap();
        let b = DilationTranslation::new(0.5, 4.0).unwrap();
        let c = DilationTranslation::new(-3.0, 2.0).unwrap();
        let left = tau_compose(tau_compose(a, b), c);
        let right = tau_compose(a, tau_compose(b, c));
        assert!((left.scale - right.scale).abs() < 1e-12);
        assert!((left.shift - right.shift).abs() < 1e-12);
    }

    #[test]
    fn point_evaluation_reads_the_origin() {
        assert!((dirac_apply(&bump(0.0, 1.0)) - E_INV).abs() < 1e-15);
        let off = bump(2.5, 0.5);
        assert_eq!(dirac_apply(&off), 0.0);
    }

    #[test]
    fn point_evaluation_is_linear() {
        let phi = bump(0.0, 1.0);
        let psi = bump(0.25, 0.5);
        for a in [-2.0, 0.0, 1.5] {
            let combo = phi.linear_combination(a, &psi);
            let lhs = dirac_apply(&combo);
            let rhs = a * dirac_apply(&phi) + dirac_apply(&psi);
            assert!((lhs - rhs).abs() < 1e-15);
        }
    }

    #[test]
    fn point_evaluation_is_sup_norm_continuous() {
        let phi = bump(0.0, 1.0);
        let psi = bump(0.0, 0.75);
        let diff = phi.linear_combination(-1.0, &psi); // psi - phi
        let grid = Grid::line(-1.0, 1.0, 4001).unwrap();
        let sup = grid
            .indices()
            .map(|i| diff.value(grid.point(&i)[0]).abs())
            .fold(0.0f64, f64::max);
        assert!((dirac_apply(&phi) - dirac_apply(&psi)).abs() <= sup);
    }

    #[test]
    fn pv_of_an_even_function_vanishes() {
        let value = pv_apply(&bump(0.0, 1.0), 40).unwrap();
        assert!(value.abs() <= 1e-8, "got {value}");
    }

    #[test]
    fn pv_away_from_the_singularity_is_a_plain_integral() {
        // Support [1, 2]: no cancellation, the functional is the integral
        // of phi(x)/x.
        let phi = bump(1.5, 0.5);
        let pv = pv_apply(&phi, 40).unwrap();
        let plain = regular_apply(&|x: f64| 1.0 / x, &phi).unwrap();
        assert!((pv - plain).abs() < 1e-9, "pv {pv} vs plain {plain}");
    }

    #[test]
    fn pv_of_x_times_bump_integrates_the_bump() {
        let b = bump(0.0, 1.0);
        let phi = TestFunction::new((-1.0, 1.0), true, {
            let b = b.clone();
            move |x| x * b.value(x)
        });
        let pv = pv_apply(&phi, 40).unwrap();
        let mass = regular_apply(&|_| 1.0, &b).unwrap();
        assert!((pv - mass).abs() < 1e-6, "pv {pv} vs mass {mass}");
    }

    #[test]
    fn pv_reports_non_convergence_when_starved_of_levels() {
        // An off-center bump has a genuinely nonzero fold, so two dyadic
        // levels cannot agree to 1e-8 yet.
        let phi = bump(0.5, 1.0);
        assert!(matches!(
            pv_apply(&phi, 3),
            Err(DistributionError::NoConvergence { .. })
        ));
        // With the full budget the same functional converges.
        assert!(pv_apply(&phi, 40).is_ok());
    }

    #[test]
    fn regular_pairing_against_zero_and_one() {
        let phi = bump(0.0, 1.0);
        assert_eq!(regular_apply(&|_| 0.0, &phi).unwrap(), 0.0);
        let mass = regular_apply(&|_| 1.0, &phi).unwrap();
        assert!((mass - 0.443994).abs() < 1e-5, "bump mass {mass}");
    }

    #[test]
    fn regular_pairing_is_linear_in_the_test_function() {
        let f = Functional::regular(|x: f64| x.cos());
        let phi = bump(-0.2, 0.6);
        let psi = bump(0.3, 0.4);
        let combo = phi.linear_combination(2.0, &psi);
        let lhs = f.apply(&combo).unwrap();
        let rhs = 2.0 * f.apply(&phi).unwrap() + f.apply(&psi).unwrap();
        assert!((lhs - rhs).abs() < 1e-9);
    }

    #[test]
    fn derivative_of_point_evaluation_kills_odd_slopes() {
        // The derivative pairing gives -phi'(0), and the bump slope is 0
        // at its center.
        let v = distr_derivative_apply(&Functional::Dirac, 1, &bump(0.0, 1.0)).unwrap();
        assert_eq!(v, 0.0);
    }

    #[test]
    fn step_function_derivative_pairs_like_point_evaluation() {
        let phi = bump(0.0, 1.0);
        let v = distr_derivative_apply(&Functional::heaviside(), 1, &phi).unwrap();
        assert!((v - E_INV).abs() < 1e-5, "got {v}");
    }

    #[test]
    fn order_zero_is_the_plain_pairing() {
        let phi = bump(0.0, 1.0);
        let f = Functional::regular(|x: f64| x * x);
        let direct = f.apply(&phi).unwrap();
        let through = distr_derivative_apply(&f, 0, &phi).unwrap();
        assert_eq!(direct, through);
    }

    #[test]
    fn derivative_pairing_matches_integration_by_parts() {
        // For smooth f, the derivative of the regular functional of f is
        // the regular functional of f'.
        let phi = bump(0.0, 1.0);
        let t_f = Functional::regular(|x: f64| (2.0 * x).sin());
        let t_fp = Functional::regular(|x: f64| 2.0 * (2.0 * x).cos());
        let lhs = distr_derivative_apply(&t_f, 1, &phi).unwrap();
        let rhs = t_fp.apply(&phi).unwrap();
        assert!((lhs - rhs).abs() < 1e-6, "{lhs} vs {rhs}");
    }

    #[test]
    fn transform_of_zero_is_zero() {
        let grid = Grid::line(-1.0, 1.0, 65).unwrap();
        let f = SampledFunction::sample(grid, |_| 0.0).unwrap();
        for v in fourier_quadrature_1d(&f, &[0.0, 1.0, 5.5]).unwrap() {
            assert_eq!(v, Complex64::new(0.0, 0.0));
        }
    }

    #[test]
    fn gaussian_is_its_own_transform() {
        let grid = Grid::line(-8.0, 8.0, 1025).unwrap();
        let f = SampledFunction::sample(grid, |x| (-x[0] * x[0] / 2.0).exp()).unwrap();
        let values = fourier_quadrature_1d(&f, &[0.0, 1.0, 2.0]).unwrap();
        for (y, v) in [0.0f64, 1.0, 2.0].iter().zip(values) {
            let expect = (-y * y / 2.0).exp();
            assert!((v.re - expect).abs() < 1e-4, "at frequency {y}");
            assert!(v.im.abs() < 1e-9);
        }
    }

    #[test]
    fn zero_frequency_is_the_scaled_mass() {
        let grid = Grid::line(-2.0, 2.0, 257).unwrap();
        let f = SampledFunction::sample(grid, |x| 1.0 / (1.0 + x[0] * x[0])).unwrap();
        let at_zero = fourier_quadrature_1d(&f, &[0.0]).unwrap()[0];
        // Trapezoid mass of the same sample.
        let h = f.grid.spacing;
        let mass: f64 = f
            .values
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                let w = if i == 0 || i == f.values.len() - 1 { 0.5 } else { 1.0 };
                v * w * h
            })
            .sum();
        let expect = mass / (2.0 * std::f64::consts::PI).sqrt();
        assert!((at_zero.re - expect).abs() < 1e-12);
        assert!(at_zero.im.abs() < 1e-12);
    }
}
