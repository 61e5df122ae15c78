//! Rationals as pairs `(p, q)` of integers, `q > 0`, modulo
//! `(a,b) ~ (c,d) <=> ad = bc`, stored with `gcd(|p|, q) = 1`.

use std::cmp::Ordering;
use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use super::integer::Int;
use super::natural::Natural;
use super::NumberError;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rational {
    /// Numerator; carries the sign.
    num: Int,
    /// Denominator; positive in normalized form.
    den: Int,
}

impl Rational {
    /// The class of `(num, den)`. Fails on a zero denominator.
    pub fn new(num: Int, den: Int) -> Result<Self, NumberError> {
        if den.is_zero() {
            return Err(NumberError::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(mut num: Int, mut den: Int) -> Self {
        if den.is_negative() {
            num = -&num;
            den = -&den;
        }
        if num.is_zero() {
            return Rational {
                num: Int::zero(),
                den: Int::one(),
            };
        }
        let g: BigUint = num.magnitude().gcd(den.magnitude());
        if !g.is_one() {
            let gi = Int::from_pair(Natural::from(g), Natural::zero());
            num = exact_div(&num, &gi);
            den = exact_div(&den, &gi);
        }
        Rational { num, den }
    }

    pub fn from_int(n: i64) -> Self {
        Rational {
            num: Int::from(n),
            den: Int::one(),
        }
    }

    /// Shorthand for `p/q` with machine integers.
    pub fn ratio(p: i64, q: i64) -> Self {
        Rational::new(Int::from(p), Int::from(q)).expect("nonzero literal denominator")
    }

    pub fn zero() -> Self {
        Rational::from_int(0)
    }

    pub fn one() -> Self {
        Rational::from_int(1)
    }

    pub fn numerator(&self) -> &Int {
        &self.num
    }

    pub fn denominator(&self) -> &Int {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.num.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.num.is_negative()
    }

    pub fn abs(&self) -> Rational {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    /// Multiplicative inverse `[(a,b)]^{-1} = [(b,a)]`; the operand must be nonzero.
    pub fn inv(&self) -> Result<Rational, NumberError> {
        if self.is_zero() {
            return Err(NumberError::DivisionByZero);
        }
        Ok(Rational::normalized(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &Rational) -> Result<Rational, NumberError> {
        Ok(self * &rhs.inv()?)
    }

    pub fn min(self, other: Rational) -> Rational {
        if self <= other {
            self
        } else {
            other
        }
    }

    pub fn max(self, other: Rational) -> Rational {
        if self >= other {
            self
        } else {
            other
        }
    }

    /// Smallest integer `n >= self`, as an `Int`.
    pub fn ceil(&self) -> Int {
        let n = self.num.to_bigint();
        let d = self.den.to_bigint();
        let q = n.div_floor(&d);
        if (&q * &d) == n {
            Int::from_bigint(&q)
        } else {
            Int::from_bigint(&(q + 1))
        }
    }

    /// `ceil` clamped into `u64`: negatives give 0, oversized values
    /// saturate.
    pub fn ceil_u64(&self) -> u64 {
        use num_traits::ToPrimitive;
        let c = self.ceil();
        if c.is_negative() {
            0
        } else {
            c.to_bigint().to_u64().unwrap_or(u64::MAX)
        }
    }

    pub fn to_f64(&self) -> f64 {
        let n = self.num.to_bigint().to_f64().unwrap_or(f64::NAN);
        let d = self.den.to_bigint().to_f64().unwrap_or(f64::NAN);
        n / d
    }

    pub fn from_f64_approx(x: f64, denominator: u64) -> Option<Rational> {
        if !x.is_finite() || denominator == 0 {
            return None;
        }
        let scaled = (x * denominator as f64).round();
        if !scaled.is_finite() || scaled.abs() >= i64::MAX as f64 {
            return None;
        }
        Some(Rational::ratio(scaled as i64, denominator as i64))
    }
}

fn exact_div(n: &Int, d: &Int) -> Int {
    let q = n.to_bigint() / d.to_bigint();
    Int::from_bigint(&q)
}

impl Add for &Rational {
    type Output = Rational;
    fn add(self, rhs: &Rational) -> Rational {
        // [(a,b)] + [(c,d)] = [(ad + bc, bd)]
        let num = &(&self.num * &rhs.den) + &(&self.den * &rhs.num);
        let den = &self.den * &rhs.den;
        Rational::normalized(num, den)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        // -[(a,b)] = [(-a,b)]
        Rational {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Sub for &Rational {
    type Output = Rational;
    fn sub(self, rhs: &Rational) -> Rational {
        self + &(-rhs)
    }
}

impl Mul for &Rational {
    type Output = Rational;
    fn mul(self, rhs: &Rational) -> Rational {
        // [(a,b)] * [(c,d)] = [(ac, bd)]
        Rational::normalized(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &Rational {
    type Output = Rational;
    fn div(self, rhs: &Rational) -> Rational {
        self.checked_div(rhs).expect("division by zero rational")
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        // [(a,b)] <= [(c,d)] iff ad - bc <= 0.
        let lhs = &self.num * &other.den;
        let rhs = &self.den * &other.num;
        lhs.cmp(&rhs)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == Int::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Rational({self})")
    }
}

/// Accepts `p/q` or a bare integer `p`.
impl FromStr for Rational {
    type Err = NumberError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        match t.split_once('/') {
            Some((p, q)) => {
                let num: Int = p.trim().parse()?;
                let den: Int = q.trim().parse()?;
                Rational::new(num, den)
            }
            None => Ok(Rational {
                num: t.parse()?,
                den: Int::one(),
            }),
        }
    }
}

impl serde::Serialize for Rational {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for Rational {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_swaps_the_pair() {
        let q = Rational::ratio(2, 3);
        assert_eq!(q.inv().unwrap(), Rational::ratio(3, 2));
        assert!(Rational::zero().inv().is_err());
    }

    #[test]
    fn addition_normalizes() {
        // 1/2 + 1/3 = (1*3 + 2*1, 6) = 5/6
        let sum = &Rational::ratio(1, 2) + &Rational::ratio(1, 3);
        assert_eq!(sum, Rational::ratio(5, 6));
        assert_eq!(sum.to_string(), "5/6");
    }

    #[test]
    fn one_is_multiplicative_identity() {
        for q in [Rational::ratio(-7, 3), Rational::zero(), Rational::ratio(22, 7)] {
            assert_eq!(&q * &Rational::one(), q);
        }
    }

    #[test]
    fn negative_denominator_normalizes() {
        let q = Rational::new(Int::from(3), Int::from(-6)).unwrap();
        assert_eq!(q, Rational::ratio(-1, 2));
        assert_eq!(q.to_string(), "-1/2");
    }

    #[test]
    fn order_is_cross_multiplication() {
        assert!(Rational::ratio(1, 3) < Rational::ratio(1, 2));
        assert!(Rational::ratio(-1, 2) < Rational::ratio(-1, 3));
        assert!(Rational::ratio(2, 4) == Rational::ratio(1, 2));
    }

    #[test]
    fn ceil_matches_definition() {
        assert_eq!(Rational::ratio(7, 2).ceil(), Int::from(4));
        assert_eq!(Rational::ratio(-7, 2).ceil(), Int::from(-3));
        assert_eq!(Rational::from_int(5).ceil(), Int::from(5));
        assert_eq!(Rational::ratio(6, 1).ceil(), Int::from(6));
    }

    #[test]
    fn parse_accepts_both_forms() {
        assert_eq!("5/6".parse::<Rational>().unwrap(), Rational::ratio(5, 6));
        assert_eq!("-4".parse::<Rational>().unwrap(), Rational::from_int(-4));
        assert_eq!("8/-2".parse::<Rational>().unwrap(), Rational::from_int(-4));
        assert!("1/0".parse::<Rational>().is_err());
    }
}
