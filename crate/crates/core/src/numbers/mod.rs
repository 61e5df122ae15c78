//! The constructive number tower: naturals with successor arithmetic,
//! integers and rationals as pair quotients, reals as rational Cauchy
//! sequences with explicit moduli, and complex numbers as pairs.

pub mod complex;
pub mod integer;
pub mod natural;
pub mod rational;
pub mod real;

pub use complex::{ComplexRational, ComplexReal};
pub use integer::Int;
pub use natural::{
    le_by_witness, successor_add, successor_mul, von_neumann_encode, Natural, VonNeumannSet,
};
pub use rational::Rational;
pub use real::{supremum_bisect, CauchyReal, RealComparison};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NumberError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("nested-set encoding of {value} exceeds cap {cap}")]
    CapExceeded { value: u32, cap: u32 },
    #[error("Cauchy probe failed: |x_N - x_(N+7)| = {gap} > {eps} at N = {index}")]
    ModulusViolation { eps: String, index: u64, gap: String },
    #[error("no apartness witness: could not certify |x| >= {lower}")]
    ApartnessNotWitnessed { lower: String },
    #[error("bad bisection bracket [{lower}, {upper}]: lower must fail the predicate and upper satisfy it")]
    BadBracket { lower: String, upper: String },
    #[error("cannot parse number from {0:?}")]
    Parse(String),
}
