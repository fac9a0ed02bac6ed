//! Arbitrary-precision rational arithmetic and exact univariate polynomial
//! algebra: dense polynomials over Q, Taylor shift, and Sturm-sequence root
//! counting on the positive half-line.
//!
//! Everything here is exact. Values are immutable after construction and all
//! operations are pure functions, so they can be shared and evaluated from
//! multiple workers without synchronization.

mod poly;
mod rational;
mod sturm;

pub use poly::RatPoly;
pub use rational::{decimal_string, rat, Rational};
pub use sturm::sturm_positive_root_count;
