//! Exact kernels for sums of recurrence terms landing in Pell solution sets.
//!
//! The crate is `no_std` (it needs `alloc`). Everything here is pure: no IO,
//! no threads, no global state. The companion `pellrec` crate adds the CLI,
//! file formats and the parallel search driver.
//!
//! Layout:
//!
//! * [`arith`]: integer square roots, perfect squares, continued fractions of `√d`.
//! * [`poly`]: integer and rational polynomials, resultants, cyclotomic polynomials.
//! * [`algebraic`]: algebraic numbers with certified isolating boxes, root-of-unity,
//!   degeneracy and multiplicative-dependence predicates, arithmetic in `ℚ(√d)`.
//! * [`pell`]: `x² − dy² = t`, its solution classes and coordinate membership tests.
//! * [`recurrence`]: integer linear recurrences, exact Binet forms, hypothesis classifier.
//! * [`bounds`]: set partitions, relation lattices `G(π)`, explicit solution-count bounds.
//! * [`search`]: exhaustive `(n₁, n₂)` search and the canned counterexample scenarios.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod algebraic;
pub mod arith;
pub mod bounds;
pub mod pell;
pub mod poly;
pub mod recurrence;
pub mod search;

mod error;

pub use error::{Error, Result};

pub use num_bigint::{BigInt, BigUint};
pub use num_rational::BigRational;
