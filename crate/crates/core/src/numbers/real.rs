//! Computable reals as rational Cauchy sequences with explicit moduli.
//!
//! A [`CauchyReal`] bundles a term generator `k -> x_k` with a convergence
//! modulus `eps -> N` certifying `|x_j - x_k| <= eps` for all `j, k >= N`.
//! Equality of reals is undecidable, so comparison is three-valued with an
//! explicit tolerance, and reciprocals require a caller-supplied apartness
//! witness (a positive rational lower bound on the magnitude).

use std::sync::Arc;

use super::rational::Rational;
use super::NumberError;

type TermFn = dyn Fn(u64) -> Rational + Send + Sync;
type ModulusFn = dyn Fn(&Rational) -> u64 + Send + Sync;

#[derive(Clone)]
pub struct CauchyReal {
    term: Arc<TermFn>,
    modulus: Arc<ModulusFn>,
}

/// Outcome of a tolerance comparison. `Indistinguishable` means the two
/// reals agree within the tolerance; it does not assert equality.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RealComparison {
    Less,
    Greater,
    Indistinguishable,
}

impl CauchyReal {
    /// Wraps a sequence and modulus without probing. The caller asserts the
    /// modulus contract.
    pub fn from_parts(
        term: impl Fn(u64) -> Rational + Send + Sync + 'static,
        modulus: impl Fn(&Rational) -> u64 + Send + Sync + 'static,
    ) -> Self {
        CauchyReal {
            term: Arc::new(term),
            modulus: Arc::new(modulus),
        }
    }

    /// Wraps a sequence and modulus, spot-checking the Cauchy bound on the
    /// probe set `eps in {1, 1/10, 1/100}` with index pairs `(N, N + 7)`.
    ///
    /// The probes are a smoke test, not a proof: a passing sequence may still
    /// violate the contract elsewhere.
    pub fn from_sequence(
        term: impl Fn(u64) -> Rational + Send + Sync + 'static,
        modulus: impl Fn(&Rational) -> u64 + Send + Sync + 'static,
    ) -> Result<Self, NumberError> {
        let real = Self::from_parts(term, modulus);
        for (p, q) in [(1i64, 1i64), (1, 10), (1, 100)] {
            let eps = Rational::ratio(p, q);
            let n = (real.modulus)(&eps);
            let gap = (&(real.term)(n) - &(real.term)(n + 7)).abs();
            if gap > eps {
                return Err(NumberError::ModulusViolation {
                    eps: eps.to_string(),
                    index: n,
                    gap: gap.to_string(),
                });
            }
        }
        Ok(real)
    }

    pub fn constant(q: Rational) -> Self {
        CauchyReal {
            term: Arc::new(move |_| q.clone()),
            modulus: Arc::new(|_| 0),
        }
    }

    pub fn zero() -> Self {
        Self::constant(Rational::zero())
    }

    pub fn term(&self, k: u64) -> Rational {
        (self.term)(k)
    }

    pub fn modulus(&self, eps: &Rational) -> u64 {
        (self.modulus)(eps)
    }

    /// A rational within `eps` of the real: the term at index `N(eps)`.
    pub fn approx(&self, eps: &Rational) -> Rational {
        assert!(eps.is_positive(), "approximation tolerance must be > 0");
        self.term(self.modulus(eps))
    }

    pub fn add(&self, rhs: &CauchyReal) -> CauchyReal {
        let (xt, yt) = (self.term.clone(), rhs.term.clone());
        let (xm, ym) = (self.modulus.clone(), rhs.modulus.clone());
        CauchyReal {
            term: Arc::new(move |k| &xt(k) + &yt(k)),
            modulus: Arc::new(move |eps| {
                let half = eps / &Rational::from_int(2);
                xm(&half).max(ym(&half))
            }),
        }
    }

    pub fn neg(&self) -> CauchyReal {
        let t = self.term.clone();
        let m = self.modulus.clone();
        CauchyReal {
            term: Arc::new(move |k| -&t(k)),
            modulus: m,
        }
    }

    pub fn sub(&self, rhs: &CauchyReal) -> CauchyReal {
        self.add(&rhs.neg())
    }

    /// Elementwise product `(x_k * y_k)`.
    ///
    /// The modulus is composed from tail bounds `B = |x_{N(1)}| + 1` of each
    /// operand: `N(eps) = max(Nx(eps/2By), Ny(eps/2Bx), Nx(1), Ny(1))`.
    pub fn mul(&self, rhs: &CauchyReal) -> CauchyReal {
        let one = Rational::one();
        let nx1 = self.modulus(&one);
        let ny1 = rhs.modulus(&one);
        let bx = &self.term(nx1).abs() + &one;
        let by = &rhs.term(ny1).abs() + &one;

        let (xt, yt) = (self.term.clone(), rhs.term.clone());
        let (xm, ym) = (self.modulus.clone(), rhs.modulus.clone());
        CauchyReal {
            term: Arc::new(move |k| &xt(k) * &yt(k)),
            modulus: Arc::new(move |eps| {
                let two = Rational::from_int(2);
                let ex = eps / &(&two * &by);
                let ey = eps / &(&two * &bx);
                xm(&ex).max(ym(&ey)).max(nx1).max(ny1)
            }),
        }
    }

    /// Reciprocal given an apartness witness `lower` with `|x| >= lower > 0`.
    ///
    /// A bounded search locates a start index `k0` past which every term is
    /// certified to satisfy `|x_k| >= lower/2`; the shifted sequence
    /// `(1/x_{k0+k})` is then Cauchy with a modulus derived from `lower`.
    pub fn recip(&self, lower: &Rational) -> Result<CauchyReal, NumberError> {
        if !lower.is_positive() {
            return Err(NumberError::ApartnessNotWitnessed {
                lower: lower.to_string(),
            });
        }
        let quarter = lower / &Rational::from_int(4);
        let k0 = self.modulus(&quarter);
        // Certificate: terms at j,k >= k0 differ by at most lower/4, so a
        // single term of magnitude >= 3*lower/4 pins every later term above
        // lower/2. A short scan tolerates slack in the caller's modulus.
        let threshold = &Rational::ratio(3, 4) * lower;
        let mut start = None;
        for j in k0..=k0 + 16 {
            if self.term(j).abs() >= threshold {
                start = Some(j);
                break;
            }
        }
        let Some(k0) = start else {
            return Err(NumberError::ApartnessNotWitnessed {
                lower: lower.to_string(),
            });
        };

        let t = self.term.clone();
        let m = self.modulus.clone();
        let half = lower / &Rational::from_int(2);
        Ok(CauchyReal {
            term: Arc::new(move |k| {
                t(k0 + k).inv().expect("terms past k0 are nonzero by certificate")
            }),
            modulus: Arc::new(move |eps| {
                // |1/x_j - 1/x_k| <= |x_k - x_j| / (lower/2)^2
                let scaled = &(eps * &half) * &half;
                m(&scaled).saturating_sub(k0)
            }),
        })
    }

    /// Tolerance comparison via approximations at `tol/4`.
    pub fn compare(&self, rhs: &CauchyReal, tol: &Rational) -> RealComparison {
        assert!(tol.is_positive(), "comparison tolerance must be > 0");
        let quarter = tol / &Rational::from_int(4);
        let a = self.approx(&quarter);
        let b = rhs.approx(&quarter);
        let half = tol / &Rational::from_int(2);
        if &a + &half < b {
            RealComparison::Less
        } else if &b + &half < a {
            RealComparison::Greater
        } else {
            RealComparison::Indistinguishable
        }
    }
}

/// One bisection state: the bracket after `n` halving steps.
fn bisect_bracket(
    is_upper_bound: &(dyn Fn(&Rational) -> bool + Send + Sync),
    lower: &Rational,
    upper: &Rational,
    steps: u64,
) -> (Rational, Rational) {
    let mut lo = lower.clone();
    let mut hi = upper.clone();
    let two = Rational::from_int(2);
    for _ in 0..steps {
        let mid = &(&lo + &hi) / &two;
        if is_upper_bound(&mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    (lo, hi)
}

/// The least-upper-bound construction by interval halving.
///
/// `is_upper_bound` must be monotone: once true it stays true for larger
/// rationals. The returned real is the class of the upper-bracket sequence
/// `(u_n)`, frozen after `steps` halvings; its modulus comes from the exact
/// width `u_n - l_n = (upper - lower) / 2^n`.
pub fn supremum_bisect(
    is_upper_bound: impl Fn(&Rational) -> bool + Send + Sync + 'static,
    lower: &Rational,
    upper: &Rational,
    steps: u64,
) -> Result<CauchyReal, NumberError> {
    if lower >= upper || !is_upper_bound(upper) || is_upper_bound(lower) {
        return Err(NumberError::BadBracket {
            lower: lower.to_string(),
            upper: upper.to_string(),
        });
    }
    let width = upper - lower;
    let pred: Arc<dyn Fn(&Rational) -> bool + Send + Sync> = Arc::new(is_upper_bound);
    let (lo, hi) = (lower.clone(), upper.clone());

    let term_pred = pred.clone();
    let (term_lo, term_hi) = (lo.clone(), hi.clone());
    Ok(CauchyReal {
        term: Arc::new(move |k| {
            let n = k.min(steps);
            bisect_bracket(term_pred.as_ref(), &term_lo, &term_hi, n).1
        }),
        modulus: Arc::new(move |eps| {
            // Smallest n with width / 2^n <= eps; past `steps` the sequence
            // is constant, so `steps` always suffices.
            let mut n = 0u64;
            let mut w = width.clone();
            let two = Rational::from_int(2);
            while &w > eps && n < steps {
                w = &w / &two;
                n += 1;
            }
            n
        }),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Solution-style modulus for the sequence 1/(k+1): N = max(ceil(3/eps), 1).
    fn harmonic_like() -> CauchyReal {
        CauchyReal::from_sequence(
            |k| Rational::new(Int::from(1), Int::from(k as i64 + 1)).unwrap(),
            |eps| (&Rational::from_int(3) / eps).ceil_u64().max(1),
        )
        .expect("valid modulus")
    }

    use super::super::integer::Int;

    #[test]
    fn harmonic_like_modulus_passes_probes() {
        let x = harmonic_like();
        assert_eq!(x.modulus(&Rational::ratio(1, 2)), 6);
    }

    #[test]
    fn constant_sequence_is_cauchy() {
        let x = CauchyReal::from_sequence(|_| Rational::from_int(5), |_| 0).unwrap();
        assert_eq!(x.approx(&Rational::ratio(1, 1000)), Rational::from_int(5));
    }

    #[test]
    fn divergent_sequence_fails_probe() {
        let r = CauchyReal::from_sequence(
            |k| Rational::from_int(k as i64),
            |_| 0,
        );
        assert!(matches!(r, Err(NumberError::ModulusViolation { .. })));
    }

    #[test]
    fn approx_returns_term_at_modulus_index() {
        // modulus(1/2) = max(ceil(6), 1) = 6, so approx is x_6 = 1/7.
        let x = harmonic_like();
        assert_eq!(x.approx(&Rational::ratio(1, 2)), Rational::ratio(1, 7));

        let c = CauchyReal::constant(Rational::from_int(7));
        assert_eq!(c.approx(&Rational::ratio(1, 100)), Rational::from_int(7));
    }

    #[test]
    fn addition_has_composed_modulus() {
        let x = harmonic_like();
        let sum = x.add(&harmonic_like());
        for (p, q) in [(1i64, 1i64), (1, 10), (1, 100)] {
            let eps = Rational::ratio(p, q);
            // The limit is 0, and terms are positive, so approximations of
            // the doubled sequence stay within eps of 0.
            assert!(sum.approx(&eps).abs() <= eps, "eps {p}/{q}");
        }
    }

    #[test]
    fn adding_zero_changes_nothing_within_tolerance() {
        let x = harmonic_like();
        let y = x.add(&CauchyReal::zero());
        for (p, q) in [(1i64, 1i64), (1, 10), (1, 100)] {
            let eps = Rational::ratio(p, q);
            let gap = (&x.approx(&eps) - &y.approx(&eps)).abs();
            assert!(gap <= &Rational::from_int(2) * &eps);
        }
    }

    #[test]
    fn product_of_constants() {
        let z = CauchyReal::constant(Rational::from_int(3))
            .mul(&CauchyReal::constant(Rational::from_int(4)));
        for (p, q) in [(1i64, 1i64), (1, 10), (1, 1000)] {
            let eps = Rational::ratio(p, q);
            assert!((&z.approx(&eps) - &Rational::from_int(12)).abs() <= eps);
        }
    }

    #[test]
    fn reciprocal_of_constants() {
        let x = CauchyReal::constant(Rational::from_int(4));
        let r = x.recip(&Rational::one()).unwrap();
        assert_eq!(r.approx(&Rational::ratio(1, 100)), Rational::ratio(1, 4));

        let one = CauchyReal::constant(Rational::one());
        let r = one.recip(&Rational::one()).unwrap();
        assert_eq!(r.approx(&Rational::ratio(1, 100)), Rational::one());
    }

    #[test]
    fn reciprocal_needs_apartness() {
        let x = harmonic_like();
        assert!(matches!(
            x.recip(&Rational::ratio(1, 10)),
            Err(NumberError::ApartnessNotWitnessed { .. })
        ));
    }

    #[test]
    fn comparison_is_three_valued() {
        let zero = CauchyReal::zero();
        let one = CauchyReal::constant(Rational::one());
        assert_eq!(
            zero.compare(&one, &Rational::ratio(1, 10)),
            RealComparison::Less
        );

        let three = CauchyReal::constant(Rational::from_int(3));
        assert_eq!(
            three.compare(&three.clone(), &Rational::ratio(1, 7)),
            RealComparison::Indistinguishable
        );

        // 1/(k+1) tends to 0 from above: never Less than 0.
        let x = harmonic_like();
        let cmp = x.compare(&zero, &Rational::ratio(1, 1000));
        assert_ne!(cmp, RealComparison::Less);
    }

    #[test]
    fn bisection_finds_a_plain_supremum() {
        // sup { q : q < 1 } = 1 via the predicate q >= 1.
        let one_bound = Rational::one();
        let sup = supremum_bisect(
            move |q| q >= &one_bound,
            &Rational::zero(),
            &Rational::from_int(2),
            40,
        )
        .unwrap();
        let eps = Rational::ratio(1, 1 << 20);
        assert!((&sup.approx(&eps) - &Rational::one()).abs() <= eps);
    }

    #[test]
    fn bisection_brackets_shrink_and_stay_valid() {
        let pred = |q: &Rational| !q.is_negative() && (q * q) >= Rational::from_int(2);
        let lo = Rational::one();
        let hi = Rational::from_int(2);
        let mut width = &hi - &lo;
        for n in 0..20 {
            let (l, u) = bisect_bracket(&pred, &lo, &hi, n);
            assert!(pred(&u), "upper stays an upper bound");
            assert!(!pred(&l), "lower never is");
            assert_eq!(&u - &l, width, "width halves each step");
            width = &width / &Rational::from_int(2);
        }
    }

    #[test]
    fn bisection_pins_the_square_root_of_two() {
        // |q - sqrt(2)| <= 2^-10 after enough halvings, so the squared
        // defect stays under (q + sqrt(2)) * 2^-10 < 3 * 2^-9.
        let two = Rational::from_int(2);
        let sup = supremum_bisect(
            {
                let two = two.clone();
                move |q: &Rational| !q.is_negative() && (q * q) >= two
            },
            &Rational::one(),
            &two,
            20,
        )
        .unwrap();
        let q = sup.approx(&Rational::ratio(1, 1 << 10));
        let defect = (&(&q * &q) - &two).abs();
        assert!(defect <= Rational::ratio(3, 1 << 9), "defect {defect}");
    }

    #[test]
    fn inverted_bracket_is_rejected() {
        let r = supremum_bisect(
            |q| q >= &Rational::ratio(3, 2),
            &Rational::from_int(2),
            &Rational::one(),
            10,
        );
        assert!(matches!(r, Err(NumberError::BadBracket { .. })));
    }

    #[test]
    fn approximations_at_two_tolerances_are_consistent() {
        let x = harmonic_like();
        let pairs = [
            (Rational::ratio(1, 50), Rational::ratio(1, 2)),
            (Rational::ratio(1, 400), Rational::ratio(1, 20)),
        ];
        for (fine, coarse) in pairs {
            let gap = (&x.approx(&fine) - &x.approx(&coarse)).abs();
            assert!(gap <= &fine + &coarse);
        }
    }
}
