//! Kernel evaluation and high-precision quadrature of the integral
//! identities behind the coefficient sequences.
//!
//! Quadrature is pure: independent integrals may run concurrently on
//! separate engines, and a single adaptive integration owns its subdivision
//! state exclusively.

mod identities;
mod kernel;
mod real;
mod tanhsinh;

pub use identities::{DecompositionCheck, GquadEngine, HIdentityCheck};
pub use real::{rational_to_f64, to_f64, RealCtx};
pub use tanhsinh::{Integrator, QuadNode, QuadResult, MAX_LEVEL};

use crate::error::{Error, Result};

/// Tolerance and working-precision configuration for the quadrature engine.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Precision {
    /// Absolute tolerance each integral is driven to.
    pub target_abs_tol: f64,
    /// Significant decimal digits of the underlying real arithmetic.
    pub working_digits: usize,
}

impl Precision {
    pub const DEFAULT_TOL: f64 = 1e-12;
    pub const DEFAULT_DIGITS: usize = 34;

    /// Validates that the tolerance is achievable: at least 25 working
    /// digits, and at least 3 digits beyond `-log10(tolerance)`.
    pub fn new(target_abs_tol: f64, working_digits: usize) -> Result<Self> {
        if !(target_abs_tol > 0.0 && target_abs_tol.is_finite()) {
            return Err(Error::Precision(format!(
                "tolerance must be a positive finite real, got {target_abs_tol}"
            )));
        }
        if working_digits < 25 {
            return Err(Error::Precision(format!(
                "working precision must be at least 25 digits, got {working_digits}"
            )));
        }
        let needed = (-target_abs_tol.log10()).ceil() as i64 + 3;
        if (working_digits as i64) < needed {
            return Err(Error::Precision(format!(
                "working precision {working_digits} digits cannot support tolerance \
                 {target_abs_tol:e}; need at least {needed}"
            )));
        }
        Ok(Precision {
            target_abs_tol,
            working_digits,
        })
    }

    /// Default tolerance with a custom digit count.
    pub fn with_digits(working_digits: usize) -> Result<Self> {
        Self::new(Self::DEFAULT_TOL, working_digits)
    }
}

impl Default for Precision {
    fn default() -> Self {
        Precision {
            target_abs_tol: Self::DEFAULT_TOL,
            working_digits: Self::DEFAULT_DIGITS,
        }
    }
}
