//! Integers as pairs of naturals modulo `(a,b) ~ (c,d) <=> a+d = c+b`.
//!
//! The pair `(a, b)` stands for the difference `a - b`. Values are kept in
//! the normalized representative with `min(a, b) = 0`, so structural equality
//! coincides with equality of classes.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};

use super::natural::Natural;
use super::NumberError;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Int {
    /// First pair component. Normalized form has `a = 0` or `b = 0`.
    a: Natural,
    /// Second pair component.
    b: Natural,
}

impl Int {
    /// Class representative of the pair `(a, b)`, i.e. the integer `a - b`.
    pub fn from_pair(a: Natural, b: Natural) -> Self {
        // Cancel the common part so that min(a, b) = 0.
        match a.checked_sub(&b) {
            Some(diff) => Int {
                a: diff,
                b: Natural::zero(),
            },
            None => Int {
                a: Natural::zero(),
                b: b.checked_sub(&a).expect("b >= a here"),
            },
        }
    }

    pub fn zero() -> Self {
        Int::from_pair(Natural::zero(), Natural::zero())
    }

    pub fn one() -> Self {
        Int::from_pair(Natural::one(), Natural::zero())
    }

    pub fn pair(&self) -> (&Natural, &Natural) {
        (&self.a, &self.b)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        !self.a.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        !self.b.is_zero()
    }

    pub fn abs(&self) -> Int {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    /// Signum as an integer in `{-1, 0, 1}`.
    pub fn signum(&self) -> i8 {
        if self.is_positive() {
            1
        } else if self.is_negative() {
            -1
        } else {
            0
        }
    }

    pub fn to_bigint(&self) -> BigInt {
        BigInt::from_biguint(Sign::Plus, self.a.magnitude().clone())
            - BigInt::from_biguint(Sign::Plus, self.b.magnitude().clone())
    }

    pub fn from_bigint(n: &BigInt) -> Self {
        let (sign, mag) = n.clone().into_parts();
        match sign {
            Sign::Minus => Int::from_pair(Natural::zero(), Natural::from(mag)),
            _ => Int::from_pair(Natural::from(mag), Natural::zero()),
        }
    }

    /// Magnitude of the normalized representative.
    pub fn magnitude(&self) -> &BigUint {
        if self.is_negative() {
            self.b.magnitude()
        } else {
            self.a.magnitude()
        }
    }
}

impl From<i64> for Int {
    fn from(n: i64) -> Self {
        if n >= 0 {
            Int::from_pair(Natural::from(n as u64), Natural::zero())
        } else {
            Int::from_pair(Natural::zero(), Natural::from(n.unsigned_abs()))
        }
    }
}

impl Add for &Int {
    type Output = Int;
    fn add(self, rhs: &Int) -> Int {
        // [(a,b)] + [(c,d)] = [(a+c, b+d)]
        Int::from_pair(&self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl Neg for &Int {
    type Output = Int;
    fn neg(self) -> Int {
        // -[(a,b)] = [(b,a)]
        Int::from_pair(self.b.clone(), self.a.clone())
    }
}

impl Sub for &Int {
    type Output = Int;
    fn sub(self, rhs: &Int) -> Int {
        self + &(-rhs)
    }
}

impl Mul for &Int {
    type Output = Int;
    fn mul(self, rhs: &Int) -> Int {
        // [(a,b)] * [(c,d)] = [(ac+bd, ad+bc)]
        let (a, b) = (&self.a, &self.b);
        let (c, d) = (&rhs.a, &rhs.b);
        Int::from_pair(&(a * c) + &(b * d), &(a * d) + &(b * c))
    }
}

impl PartialOrd for Int {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Int {
    fn cmp(&self, other: &Self) -> Ordering {
        // [(a,b)] <= [(c,d)] iff (c+b, a+d) is a class [(n, 0)], i.e. a+d <= c+b.
        let left = &self.a + &other.b;
        let right = &other.a + &self.b;
        left.magnitude().cmp(right.magnitude())
    }
}

impl fmt::Display for Int {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_negative() {
            write!(f, "-{}", self.b)
        } else {
            write!(f, "{}", self.a)
        }
    }
}

impl fmt::Debug for Int {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Int({self})")
    }
}

impl FromStr for Int {
    type Err = NumberError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let big = BigInt::from_str(t).map_err(|_| NumberError::Parse(s.to_string()))?;
        Ok(Int::from_bigint(&big))
    }
}
