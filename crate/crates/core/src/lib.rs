//! Exact-arithmetic constructions and sampled-function analysis.
//!
//! The crate builds the classical objects of a first analysis course as
//! executable, tested artifacts:
//!
//! - [`quotient`]: equivalence relations and partitions of finite carriers.
//! - [`numbers`]: the number tower from naturals through complex numbers,
//!   with computable reals as Cauchy sequences carrying explicit moduli.
//! - [`groups`]: permutations, Cayley tables, subgroups, cosets and
//!   homomorphism checks.
//! - [`linalg`]: exact dense matrix algebra over rational and
//!   complex-rational entries.
//! - [`metric`]: finite metric spaces, greedy epsilon-nets and the
//!   completion distance of Cauchy sequences.
//! - [`measure`]: interval unions, length and counting measures, and the
//!   simple-function integral.
//! - [`analysis`]: finite differences, moduli of continuity, smoothness
//!   norms, polynomial expansions and convex gauges on sampled functions.
//! - [`distributions`]: test functions and the classical functionals paired
//!   against them.

pub mod analysis;
pub mod distributions;
pub mod groups;
pub mod linalg;
pub mod measure;
pub mod metric;
pub mod numbers;
pub mod quotient;
