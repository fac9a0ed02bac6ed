//! Computation and verification toolkit for the correction-series refinements
//! of Carleman's inequality.
//!
//! The expansion `(1 + 1/x)^x = e (1 - sum_k b_k/(1+x)^k)` and its recentred
//! variant with denominators `(x + 11/12)^k` (coefficients `d_k`) yield
//! successively sharper weights in Carleman's inequality. This crate
//!
//! - computes the coefficient sequences `b_k` and `d_k` exactly ([`coeffs`]),
//! - validates the integral identities behind them by high-precision
//!   quadrature ([`gquad`]),
//! - evaluates the partial sums `sigma_m`, `S_m` and their difference exactly
//!   ([`series`]),
//! - certifies `S_m(x) > sigma_m(x)` for all `x > 0` at any fixed `m` via
//!   exact rational polynomial positivity certificates ([`certify`]),
//! - and exercises the resulting refined inequalities on concrete sequences
//!   ([`carleman`]).
//!
//! All inequality assertions are decided in exact rational arithmetic;
//! floating point appears only in quadrature cross-checks and reports.

pub mod carleman;
pub mod certify;
pub mod coeffs;
mod error;
pub mod exactnum;
pub mod gquad;
pub mod report;
pub mod series;

pub use error::{Error, Result};
pub use exactnum::{RatPoly, Rational};
