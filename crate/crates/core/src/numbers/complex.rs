//! Complex numbers as ordered pairs over an underlying kind.
//!
//! [`ComplexRational`] is the exact kind used by the linear-algebra layer.
//! [`ComplexReal`] pairs two Cauchy reals; its reciprocal needs an apartness
//! witness because zero-testing the squared magnitude is undecidable.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use super::rational::Rational;
use super::real::CauchyReal;
use super::NumberError;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ComplexRational {
    pub re: Rational,
    pub im: Rational,
}

impl ComplexRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        ComplexRational { re, im }
    }

    pub fn from_rational(re: Rational) -> Self {
        ComplexRational {
            re,
            im: Rational::zero(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_int(n))
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn i() -> Self {
        ComplexRational {
            re: Rational::zero(),
            im: Rational::one(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// Conjugate `z* = a - ib`.
    pub fn conj(&self) -> Self {
        ComplexRational {
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    /// `|z|^2 = a^2 + b^2`, exact.
    pub fn norm_sq(&self) -> Rational {
        &(&self.re * &self.re) + &(&self.im * &self.im)
    }

    /// `(c,d)^{-1} = (c,-d) / (c^2 + d^2)`.
    pub fn inv(&self) -> Result<Self, NumberError> {
        if self.is_zero() {
            return Err(NumberError::DivisionByZero);
        }
        let n = self.norm_sq();
        Ok(ComplexRational {
            re: &self.re / &n,
            im: &(-&self.im) / &n,
        })
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, NumberError> {
        Ok(self * &rhs.inv()?)
    }
}

impl Add for &ComplexRational {
    type Output = ComplexRational;
    fn add(self, rhs: &ComplexRational) -> ComplexRational {
        ComplexRational {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl Sub for &ComplexRational {
    type Output = ComplexRational;
    fn sub(self, rhs: &ComplexRational) -> ComplexRational {
        ComplexRational {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl Neg for &ComplexRational {
    type Output = ComplexRational;
    fn neg(self) -> ComplexRational {
        ComplexRational {
            re: -&self.re,
            im: -&self.im,
        }
    }
}

impl Mul for &ComplexRational {
    type Output = ComplexRational;
    fn mul(self, rhs: &ComplexRational) -> ComplexRational {
        // (a,b) * (c,d) = (ac - bd, ad + bc)
        let (a, b) = (&self.re, &self.im);
        let (c, d) = (&rhs.re, &rhs.im);
        ComplexRational {
            re: &(a * c) - &(b * d),
            im: &(a * d) + &(b * c),
        }
    }
}

impl fmt::Display for ComplexRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.im.is_negative() {
            write!(f, "{}-{}i", self.re, self.im.abs())
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

impl fmt::Debug for ComplexRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ComplexRational({self})")
    }
}

/// Accepts `a`, `a+bi`, `a-bi`, or `bi`, with rational `a`, `b`.
impl FromStr for ComplexRational {
    type Err = NumberError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if let Some(body) = t.strip_suffix('i') {
            // Split at the last +/- that is not part of the leading sign.
            let split = body
                .char_indices()
                .skip(1)
                .find(|(_, c)| *c == '+' || *c == '-')
                .map(|(i, _)| i);
            match split {
                Some(i) => {
                    let re: Rational = body[..i].parse()?;
                    let im_str = &body[i..];
                    let im: Rational = if im_str == "+" || im_str == "-" {
                        if im_str == "-" {
                            -&Rational::one()
                        } else {
                            Rational::one()
                        }
                    } else {
                        im_str.parse()?
                    };
                    Ok(ComplexRational { re, im })
                }
                None => {
                    let im: Rational = if body.is_empty() || body == "+" {
                        Rational::one()
                    } else if body == "-" {
                        -&Rational::one()
                    } else {
                        body.parse()?
                    };
                    Ok(ComplexRational {
                        re: Rational::zero(),
                        im,
                    })
                }
            }
        } else {
            Ok(ComplexRational::from_rational(t.parse()?))
        }
    }
}

/// A complex number whose components are Cauchy reals.
#[derive(Clone)]
pub struct ComplexReal {
    pub re: CauchyReal,
    pub im: CauchyReal,
}

impl ComplexReal {
    pub fn new(re: CauchyReal, im: CauchyReal) -> Self {
        ComplexReal { re, im }
    }

    pub fn constant(re: Rational, im: Rational) -> Self {
        ComplexReal {
            re: CauchyReal::constant(re),
            im: CauchyReal::constant(im),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        ComplexReal {
            re: self.re.add(&rhs.re),
            im: self.im.add(&rhs.im),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        ComplexReal {
            re: self.re.sub(&rhs.re),
            im: self.im.sub(&rhs.im),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let (a, b) = (&self.re, &self.im);
        let (c, d) = (&rhs.re, &rhs.im);
        ComplexReal {
            re: a.mul(c).sub(&b.mul(d)),
            im: a.mul(d).add(&b.mul(c)),
        }
    }

    pub fn conj(&self) -> Self {
        ComplexReal {
            re: self.re.clone(),
            im: self.im.neg(),
        }
    }

    /// `|z|^2` as a Cauchy real.
    pub fn norm_sq(&self) -> CauchyReal {
        self.re.mul(&self.re).add(&self.im.mul(&self.im))
    }

    /// Reciprocal given a witness `0 < lower <= |z|^2`.
    pub fn recip(&self, norm_sq_lower: &Rational) -> Result<Self, NumberError> {
        let inv_norm = self.norm_sq().recip(norm_sq_lower)?;
        Ok(ComplexReal {
            re: self.re.mul(&inv_norm),
            im: self.im.neg().mul(&inv_norm),
        })
    }

    pub fn checked_div(&self, rhs: &Self, norm_sq_lower: &Rational) -> Result<Self, NumberError> {
        Ok(self.mul(&rhs.recip(norm_sq_lower)?))
    }

    /// Componentwise rational approximations within `eps`.
    pub fn approx(&self, eps: &Rational) -> (Rational, Rational) {
        (self.re.approx(eps), self.im.approx(eps))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn i_squared_is_minus_one() {
        let i = ComplexRational::i();
        assert_eq!(&i * &i, ComplexRational::from_int(-1));
    }

    #[test]
    fn inverse_of_three_plus_four_i() {
        let z = ComplexRational::new(Rational::from_int(3), Rational::from_int(4));
        let inv = z.inv().unwrap();
        assert_eq!(inv.re, Rational::ratio(3, 25));
        assert_eq!(inv.im, Rational::ratio(-4, 25));
        assert_eq!(&z * &inv, ComplexRational::one());
    }

    #[test]
    fn cartesian_decomposition() {
        // (a,b) = (a,0) + (b,0)*(0,1)
        let a = Rational::ratio(5, 3);
        let b = Rational::ratio(-7, 2);
        let z = ComplexRational::new(a.clone(), b.clone());
        let rebuilt = &ComplexRational::from_rational(a)
            + &(&ComplexRational::from_rational(b) * &ComplexRational::i());
        assert_eq!(z, rebuilt);
    }

    #[test]
    fn zero_has_no_inverse() {
        assert!(ComplexRational::zero().inv().is_err());
        let z = ComplexRational::new(Rational::one(), Rational::from_int(2));
        assert!(z.checked_div(&ComplexRational::zero()).is_err());
    }

    #[test]
    fn division_undoes_multiplication() {
        let z = ComplexRational::new(Rational::ratio(5, 2), Rational::ratio(-1, 3));
        let w = ComplexRational::new(Rational::from_int(3), Rational::from_int(4));
        let q = (&z * &w).checked_div(&w).unwrap();
        assert_eq!(q, z);

        let zr = ComplexReal::constant(Rational::from_int(2), Rational::from_int(1));
        let wr = ComplexReal::constant(Rational::from_int(3), Rational::from_int(4));
        // |w|^2 = 25; witness the full lower bound.
        let q = zr.mul(&wr).checked_div(&wr, &Rational::from_int(25)).unwrap();
        let eps = Rational::ratio(1, 10000);
        let (re, im) = q.approx(&eps);
        assert!((&re - &Rational::from_int(2)).abs() <= eps);
        assert!((&im - &Rational::one()).abs() <= eps);
    }

    #[test]
    fn parse_forms() {
        let z: ComplexRational = "3/25-4/25i".parse().unwrap();
        assert_eq!(z.re, Rational::ratio(3, 25));
        assert_eq!(z.im, Rational::ratio(-4, 25));
        let w: ComplexRational = "-i".parse().unwrap();
        assert_eq!(w, -&ComplexRational::i());
        let r: ComplexRational = "7/2".parse().unwrap();
        assert_eq!(r.im, Rational::zero());
        assert_eq!(ComplexRational::i().to_string(), "0+1i");
    }

    #[test]
    fn real_kind_squares_i() {
        let i = ComplexReal::constant(Rational::zero(), Rational::one());
        let sq = i.mul(&i);
        let eps = Rational::ratio(1, 1000);
        let (re, im) = sq.approx(&eps);
        assert!((&re + &Rational::one()).abs() <= eps);
        assert!(im.abs() <= eps);
    }

    #[test]
    fn real_kind_reciprocal_with_witness() {
        let z = ComplexReal::constant(Rational::from_int(3), Rational::from_int(4));
        let inv = z.recip(&Rational::from_int(25)).unwrap();
        let eps = Rational::ratio(1, 10000);
        let (re, im) = inv.approx(&eps);
        assert!((&re - &Rational::ratio(3, 25)).abs() <= eps);
        assert!((&im - &Rational::ratio(-4, 25)).abs() <= eps);
    }
}
