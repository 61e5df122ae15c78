//! Natural numbers with successor-based arithmetic and the nested-set encoding.
//!
//! A [`Natural`] stores an arbitrary-precision magnitude. The successor
//! recursions for addition and multiplication are available as
//! [`successor_add`] and [`successor_mul`]; they unroll `a + S(b) = S(a + b)`
//! and `a * S(b) = (a * b) + a` literally and are meant for desk-scale
//! operands. The operator impls delegate to big-integer arithmetic, which the
//! recursions must agree with (covered by the oracle tests).

use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::NumberError;

/// A non-negative count of arbitrary precision.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Natural(BigUint);

impl Natural {
    pub fn zero() -> Self {
        Natural(BigUint::zero())
    }

    pub fn one() -> Self {
        Natural(BigUint::one())
    }

    /// The successor `S(n) = n + 1`.
    pub fn succ(&self) -> Self {
        Natural(&self.0 + 1u32)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn magnitude(&self) -> &BigUint {
        &self.0
    }

    /// `a - b` when `b <= a`.
    pub fn checked_sub(&self, other: &Natural) -> Option<Natural> {
        if other.0 <= self.0 {
            Some(Natural(&self.0 - &other.0))
        } else {
            None
        }
    }

    pub fn to_u64(&self) -> Option<u64> {
        use num_traits::ToPrimitive;
        self.0.to_u64()
    }
}

impl From<u64> for Natural {
    fn from(n: u64) -> Self {
        Natural(BigUint::from(n))
    }
}

impl From<BigUint> for Natural {
    fn from(n: BigUint) -> Self {
        Natural(n)
    }
}

impl fmt::Display for Natural {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for Natural {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Natural({})", self.0)
    }
}

impl Add for &Natural {
    type Output = Natural;
    fn add(self, rhs: &Natural) -> Natural {
        Natural(&self.0 + &rhs.0)
    }
}

impl Mul for &Natural {
    type Output = Natural;
    fn mul(self, rhs: &Natural) -> Natural {
        Natural(&self.0 * &rhs.0)
    }
}

/// Addition by unrolling `a + 0 = a`, `a + S(b) = S(a + b)`.
///
/// Runs `b` successor steps; keep `b` desk-scale.
pub fn successor_add(a: &Natural, b: &Natural) -> Natural {
    let mut acc = a.clone();
    let mut steps = b.0.clone();
    while !steps.is_zero() {
        acc = acc.succ();
        steps -= 1u32;
    }
    acc
}

/// Multiplication by unrolling `a * 0 = 0`, `a * S(b) = (a * b) + a`.
pub fn successor_mul(a: &Natural, b: &Natural) -> Natural {
    let mut acc = Natural::zero();
    let mut steps = b.0.clone();
    while !steps.is_zero() {
        acc = successor_add(&acc, a);
        steps -= 1u32;
    }
    acc
}

/// The order `a <= b` witnessed by `exists c: a + c = b`.
pub fn le_by_witness(a: &Natural, b: &Natural) -> bool {
    b.checked_sub(a).is_some()
}

/// A hereditarily finite set: `n` encoded as the set of all smaller encodings.
#[derive(Clone, PartialEq, Eq)]
pub struct VonNeumannSet {
    members: Vec<VonNeumannSet>,
}

impl VonNeumannSet {
    pub fn empty() -> Self {
        VonNeumannSet { members: vec![] }
    }

    pub fn members(&self) -> &[VonNeumannSet] {
        &self.members
    }

    /// Number of members, which equals the encoded value.
    pub fn cardinality(&self) -> usize {
        self.members.len()
    }
}

impl fmt::Display for VonNeumannSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.members.is_empty() {
            return write!(f, "{{}}");
        }
        write!(f, "{{")?;
        for (i, m) in self.members.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for VonNeumannSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Materializes the nested-set encoding of `n` via `S(X) = X ∪ {X}`.
///
/// The tree has on the order of `2^n` nodes, hence the cap.
pub fn von_neumann_encode(n: u32, cap: u32) -> Result<VonNeumannSet, NumberError> {
    if n > cap {
        return Err(NumberError::CapExceeded { value: n, cap });
    }
    let mut chain: Vec<VonNeumannSet> = Vec::with_capacity(n as usize + 1);
    chain.push(VonNeumannSet::empty());
    for k in 0..n as usize {
        // S(X) = X ∪ {X}: members of the next encoding are encode(0..=k).
        let next = VonNeumannSet {
            members: chain[..=k].to_vec(),
        };
        chain.push(next);
    }
    Ok(chain.pop().expect("chain is non-empty"))
}
