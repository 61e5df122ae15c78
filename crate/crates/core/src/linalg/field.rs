//! The scalar interface the matrix algorithms run over.

use std::fmt::{Debug, Display};

use crate::numbers::{ComplexRational, NumberError, Rational};

/// An exact field element with a conjugation involution. Conjugation is the
/// identity on rationals and complex conjugation on complex rationals.
pub trait FieldElement: Clone + PartialEq + Debug + Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Result<Self, NumberError>;
    fn conj(&self) -> Self;
    fn is_zero(&self) -> bool;

    fn div(&self, rhs: &Self) -> Result<Self, NumberError> {
        Ok(self.mul(&rhs.inv()?))
    }
}

impl FieldElement for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Result<Self, NumberError> {
        Rational::inv(self)
    }
    fn conj(&self) -> Self {
        self.clone()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
}

impl FieldElement for ComplexRational {
    fn zero() -> Self {
        ComplexRational::zero()
    }
    fn one() -> Self {
        ComplexRational::one()
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Result<Self, NumberError> {
        ComplexRational::inv(self)
    }
    fn conj(&self) -> Self {
        ComplexRational::conj(self)
    }
    fn is_zero(&self) -> bool {
        ComplexRational::is_zero(self)
    }
}
