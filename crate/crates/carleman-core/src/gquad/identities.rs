//! High-precision validation of every integral identity relating the kernel
//! moments to the coefficient sequences:
//!
//! - moments: `int_0^1 g(s) s^(k-2) ds = e b_k` for `k >= 2`,
//! - reciprocal moments: `int_0^1 g(s)/s ds = int_0^1 g(s)/(1-s) ds = e/2 - 1`,
//! - the integral formula for `d_n` (numeric cross-check of the exact
//!   binomial transform),
//! - the residual identity `(1+x)(e - (1+1/x)^x) = e/2 + int_0^1 g(s)/(x+s) ds`,
//! - the integral decompositions of `e sigma_m(x)` and `e S_m(x)` and their
//!   difference.
//!
//! Exact parameters are rendered to working precision once per check, never
//! per node.

use astro_float::BigFloat;
use num_traits::One;

use super::kernel::{g_over_s_value, g_value};
use super::real::{to_f64, RealCtx};
use super::tanhsinh::{Integrator, QuadResult};
use super::Precision;
use crate::coeffs::{b_table, d_table};
use crate::error::{Error, Result};
use crate::exactnum::{rat, Rational};
use crate::series;

/// Both sides of the residual identity at one `x`.
#[derive(Clone, Debug)]
pub struct HIdentityCheck {
    pub x: f64,
    /// `(1+x)(e - (1+1/x)^x)`, computed directly.
    pub lhs: f64,
    /// `e/2 + int_0^1 g(s)/(x+s) ds`, by quadrature.
    pub rhs: f64,
    pub abs_diff: f64,
    pub quad: QuadResult,
}

/// Exact series value versus quadrature decomposition at one `(m, x)`.
#[derive(Clone, Debug)]
pub struct DecompositionCheck {
    pub m: usize,
    pub x: f64,
    /// The exact-coefficient side, rendered to working precision.
    pub exact_side: f64,
    /// The quadrature side.
    pub quad_side: f64,
    pub abs_diff: f64,
    pub converged: bool,
    pub subintervals_used: usize,
}

/// Quadrature engine bound to one precision configuration.
pub struct GquadEngine {
    prec: Precision,
    quad: Integrator,
    pi: BigFloat,
    e: BigFloat,
    tol: BigFloat,
}

impl GquadEngine {
    pub fn new(prec: Precision) -> Result<Self> {
        let mut quad = Integrator::new(prec.working_digits)?;
        let pi = quad.ctx().pi();
        let e = quad.ctx().e();
        let tol = quad.ctx().from_f64(prec.target_abs_tol);
        Ok(GquadEngine {
            prec,
            quad,
            pi,
            e,
            tol,
        })
    }

    pub fn precision(&self) -> &Precision {
        &self.prec
    }

    /// Euler's number at working precision.
    pub fn e_f64(&self) -> f64 {
        to_f64(&self.e)
    }

    /// Kernel value with the endpoint pinning `g(0) = g(1) = 0`.
    pub fn g_eval(&mut self, s: &BigFloat) -> Result<BigFloat> {
        let ctx = self.quad.ctx();
        let zero = ctx.zero();
        let one = ctx.from_i64(1);
        if !ctx.le(&zero, s) || !ctx.le(s, &one) {
            return Err(Error::Domain(format!(
                "s must be in [0, 1], got {}",
                to_f64(s)
            )));
        }
        let one_minus_s = ctx.sub(&one, s);
        Ok(g_value(ctx, &self.pi, s, &one_minus_s))
    }

    pub fn g_eval_f64(&mut self, s: f64) -> Result<f64> {
        let s_bf = self.quad.ctx().from_f64(s);
        Ok(to_f64(&self.g_eval(&s_bf)?))
    }

    /// The `g(s)/s` integrand under its continuous extension (1 at `s = 0`).
    pub fn reciprocal_integrand_f64(&mut self, s: f64) -> Result<f64> {
        if !(0.0..=1.0).contains(&s) {
            return Err(Error::Domain(format!("s must be in [0, 1], got {s}")));
        }
        let ctx = self.quad.ctx();
        let s_bf = ctx.from_f64(s);
        let one = ctx.from_i64(1);
        let oms = ctx.sub(&one, &s_bf);
        Ok(to_f64(&g_over_s_value(ctx, &self.pi, &s_bf, &oms)))
    }

    /// `int_0^1 g(s) s^(k-2) ds`, cross-checkable against `e * b_k`.
    pub fn moment(&mut self, k: usize) -> Result<QuadResult> {
        if k < 2 {
            return Err(Error::Domain(format!(
                "moment index k must be >= 2, got {k}"
            )));
        }
        let pi = self.pi.clone();
        self.unit_integral(move |ctx, s, oms| {
            let g = g_value(ctx, &pi, s, oms);
            let p = ctx.powi(s, k - 2);
            ctx.mul(&g, &p)
        })
    }

    /// `int_0^1 g(s) (1-s)^(k-2) ds`; equals `moment(k)` by symmetry.
    pub fn mirrored_moment(&mut self, k: usize) -> Result<QuadResult> {
        if k < 2 {
            return Err(Error::Domain(format!(
                "moment index k must be >= 2, got {k}"
            )));
        }
        let pi = self.pi.clone();
        self.unit_integral(move |ctx, s, oms| {
            let g = g_value(ctx, &pi, s, oms);
            let p = ctx.powi(oms, k - 2);
            ctx.mul(&g, &p)
        })
    }

    /// `int_0^1 g(s)/s ds`; the identity value is `e/2 - 1`.
    pub fn reciprocal_moment(&mut self) -> Result<QuadResult> {
        let pi = self.pi.clone();
        self.unit_integral(move |ctx, s, oms| g_over_s_value(ctx, &pi, s, oms))
    }

    /// `int_0^1 g(s)/(1-s) ds`; equals the reciprocal moment by symmetry.
    pub fn mirrored_reciprocal_moment(&mut self) -> Result<QuadResult> {
        let pi = self.pi.clone();
        self.unit_integral(move |ctx, s, oms| g_over_s_value(ctx, &pi, oms, s))
    }

    /// Numeric `d_n` from the integral formula, split at `t = 1/12` where
    /// `(12t - 1)^(n-1)` changes sign. Supported for `2 <= n <= 12`; beyond
    /// that the sign-alternating factor voids the error contract and the
    /// exact path must be used instead.
    pub fn d_numeric(&mut self, n: usize) -> Result<QuadResult> {
        if !(2..=12).contains(&n) {
            return Err(Error::Domain(format!(
                "d_numeric supports 2 <= n <= 12, got {n}; use the exact path"
            )));
        }
        let pi = self.pi.clone();
        let zero = self.quad.ctx().zero();
        let one = self.quad.ctx().from_i64(1);
        let twelfth = {
            let ctx = self.quad.ctx();
            let t = ctx.from_i64(12);
            ctx.recip(&t)
        };

        // Left panel [0, 1/12]: 12t - 1 = -12 * (1/12 - t), exact near the
        // sign change; 1 - t is far from zero and safe to form directly.
        let pi_l = pi.clone();
        let left = self
            .quad
            .integrate(&zero, &twelfth, &self.tol, move |ctx, node| {
                let one = ctx.from_i64(1);
                let oms = ctx.sub(&one, &node.x);
                let base = g_over_s_value(ctx, &pi_l, &node.x, &oms);
                let twelve = ctx.from_i64(-12);
                let factor = ctx.mul(&twelve, &node.from_right);
                let p = ctx.powi(&factor, n - 1);
                ctx.mul(&base, &p)
            })?;

        // Right panel [1/12, 1]: 12t - 1 = 12 * (t - 1/12).
        let pi_r = pi.clone();
        let right = self
            .quad
            .integrate(&twelfth, &one, &self.tol, move |ctx, node| {
                let base = g_over_s_value(ctx, &pi_r, &node.x, &node.from_right);
                let twelve = ctx.from_i64(12);
                let factor = ctx.mul(&twelve, &node.from_left);
                let p = ctx.powi(&factor, n - 1);
                ctx.mul(&base, &p)
            })?;

        let integral = left.combine(&right, self.quad.ctx());

        // d_n = ((-1)^(n-1) + integral) / (12^(n-1) e)
        let ctx = self.quad.ctx();
        let sign = ctx.from_i64(if (n - 1).is_multiple_of(2) { 1 } else { -1 });
        let twelve = ctx.from_i64(12);
        let scale = ctx.mul(&ctx.powi(&twelve, n - 1), &self.e);
        let value = ctx.div(&ctx.add(&sign, &integral.value), &scale);
        let err = ctx.div(&integral.abs_error_estimate, &scale);
        Ok(QuadResult {
            value,
            abs_error_estimate: err,
            subintervals_used: integral.subintervals_used,
            converged: integral.converged,
        })
    }

    /// Residual identity `(1+x)(e - (1+1/x)^x) = e/2 + int_0^1 g(s)/(x+s) ds`.
    pub fn h_identity_check(&mut self, x: f64) -> Result<HIdentityCheck> {
        if !x.is_finite() || x <= 0.0 {
            return Err(Error::Domain(format!("x must be > 0, got {x}")));
        }
        let x_bf = self.quad.ctx().from_f64(x);

        let pi = self.pi.clone();
        let xq = x_bf.clone();
        let quad = self.unit_integral(move |ctx, s, oms| {
            let g = g_value(ctx, &pi, s, oms);
            let denom = ctx.add(&xq, s);
            ctx.div(&g, &denom)
        })?;

        let ctx = self.quad.ctx();
        let one = ctx.from_i64(1);
        let two = ctx.from_i64(2);
        let one_plus_x = ctx.add(&one, &x_bf);
        // (1 + 1/x)^x = exp(x ln(1 + 1/x))
        let ratio = ctx.add(&one, &ctx.recip(&x_bf));
        let ln_ratio = ctx.ln(&ratio);
        let powed = ctx.exp(&ctx.mul(&x_bf, &ln_ratio));
        let lhs = ctx.mul(&one_plus_x, &ctx.sub(&self.e, &powed));
        let rhs = ctx.add(&ctx.div(&self.e, &two), &quad.value);
        let abs_diff = to_f64(&ctx.sub(&lhs, &rhs).abs());
        Ok(HIdentityCheck {
            x,
            lhs: to_f64(&lhs),
            rhs: to_f64(&rhs),
            abs_diff,
            quad,
        })
    }

    /// Exact `e sigma_m(x)` against its integral decomposition.
    pub fn sigma_decomposition_check(&mut self, m: usize, x: f64) -> Result<DecompositionCheck> {
        let xr = checked_rational(m, x)?;
        let (rhs, meta) = self.sigma_decomposition_rhs(m, &xr)?;

        let b = b_table(m)?;
        let sigma = series::eval_sigma(&b, m, &xr)?;
        let lhs = {
            let sigma_bf = self.quad.ctx().from_rational(&sigma);
            self.quad.ctx().mul(&self.e, &sigma_bf)
        };
        Ok(self.decomposition_result(m, x, lhs, rhs, meta))
    }

    /// Exact `e S_m(x)` against its integral decomposition.
    pub fn s_decomposition_check(&mut self, m: usize, x: f64) -> Result<DecompositionCheck> {
        let xr = checked_rational(m, x)?;
        let (rhs, meta) = self.s_decomposition_rhs(m, &xr)?;

        let d = d_table(m)?;
        let s = series::eval_s(&d, m, &xr)?;
        let lhs = {
            let s_bf = self.quad.ctx().from_rational(&s);
            self.quad.ctx().mul(&self.e, &s_bf)
        };
        Ok(self.decomposition_result(m, x, lhs, rhs, meta))
    }

    /// The difference of the two decompositions against `e * delta_m(x)`:
    /// re-derivation of the subtraction identity the positivity analysis
    /// starts from.
    pub fn difference_decomposition_check(
        &mut self,
        m: usize,
        x: f64,
    ) -> Result<DecompositionCheck> {
        let xr = checked_rational(m, x)?;
        let (rhs_s, meta_s) = self.s_decomposition_rhs(m, &xr)?;
        let (rhs_sigma, meta_sigma) = self.sigma_decomposition_rhs(m, &xr)?;
        let rhs = self.quad.ctx().sub(&rhs_s, &rhs_sigma);

        let b = b_table(m)?;
        let d = d_table(m)?;
        let delta = series::delta(&b, &d, m, &xr)?;
        let lhs = {
            let delta_bf = self.quad.ctx().from_rational(&delta);
            self.quad.ctx().mul(&self.e, &delta_bf)
        };
        let meta = meta_s.combine(&meta_sigma, self.quad.ctx());
        Ok(self.decomposition_result(m, x, lhs, rhs, meta))
    }

    /// `e/(2(1+x)) + (1/(1+x)) int g/(1+x-s) - (1/(1+x)^m) int (g/s) s^m/(1+x-s)`
    fn sigma_decomposition_rhs(
        &mut self,
        m: usize,
        xr: &Rational,
    ) -> Result<(BigFloat, QuadResult)> {
        let x_bf = self.quad.ctx().from_rational(xr);
        let one_plus_x = self.quad.ctx().from_rational(&(Rational::one() + xr));

        // 1 + x - s = x + (1 - s): formed from the right-endpoint distance.
        let pi1 = self.pi.clone();
        let xq1 = x_bf.clone();
        let i1 = self.unit_integral(move |ctx, s, oms| {
            let g = g_value(ctx, &pi1, s, oms);
            let denom = ctx.add(&xq1, oms);
            ctx.div(&g, &denom)
        })?;

        let pi2 = self.pi.clone();
        let xq2 = x_bf.clone();
        let i2 = self.unit_integral(move |ctx, s, oms| {
            let base = g_over_s_value(ctx, &pi2, s, oms);
            let p = ctx.powi(s, m);
            let denom = ctx.add(&xq2, oms);
            ctx.div(&ctx.mul(&base, &p), &denom)
        })?;

        let ctx = self.quad.ctx();
        let two = ctx.from_i64(2);
        let lead = ctx.div(&self.e, &ctx.mul(&two, &one_plus_x));
        let term1 = ctx.div(&i1.value, &one_plus_x);
        let term2 = ctx.div(&i2.value, &ctx.powi(&one_plus_x, m));
        let rhs = ctx.sub(&ctx.add(&lead, &term1), &term2);
        Ok((rhs, i1.combine(&i2, ctx)))
    }

    /// `e/(2(x+11/12)) + (1/(x+11/12)) int (g/t)(t-1/12)(1-rho^(m-1))/(1+x-t)
    ///  + sum_{k=2}^m (-1)^(k-1) 12/(12x+11)^k`, with
    /// `rho = (t-1/12)/(x+11/12)`.
    fn s_decomposition_rhs(&mut self, m: usize, xr: &Rational) -> Result<(BigFloat, QuadResult)> {
        let x_bf = self.quad.ctx().from_rational(xr);
        let x_shift = {
            let r = rat(11, 12) + xr;
            self.quad.ctx().from_rational(&r)
        };

        let pi = self.pi.clone();
        let xq = x_bf.clone();
        let center = x_shift.clone();
        let i3 = self.unit_integral(move |ctx, s, oms| {
            let base = g_over_s_value(ctx, &pi, s, oms);
            let twelfth = {
                let t = ctx.from_i64(12);
                ctx.recip(&t)
            };
            let t_minus = ctx.sub(s, &twelfth);
            let rho = ctx.div(&t_minus, &center);
            let one = ctx.from_i64(1);
            let tail = ctx.sub(&one, &ctx.powi(&rho, m - 1));
            let denom = ctx.add(&xq, oms);
            let num = ctx.mul(&ctx.mul(&base, &t_minus), &tail);
            ctx.div(&num, &denom)
        })?;

        // Exact alternating prefix sum, rendered once.
        let mut alt = Rational::from_integer(0.into());
        let base = Rational::from_integer(12.into()) * (rat(11, 12) + xr); // 12x + 11
        let mut power = Rational::one();
        for k in 2..=m {
            power = if k == 2 {
                (&base * &base).recip()
            } else {
                power / &base
            };
            let term = Rational::from_integer(12.into()) * &power;
            if k % 2 == 0 {
                alt -= term;
            } else {
                alt += term;
            }
        }

        let alt_bf = self.quad.ctx().from_rational(&alt);
        let ctx = self.quad.ctx();
        let two = ctx.from_i64(2);
        let lead = ctx.div(&self.e, &ctx.mul(&two, &x_shift));
        let term3 = ctx.div(&i3.value, &x_shift);
        let rhs = ctx.add(&ctx.add(&lead, &term3), &alt_bf);
        Ok((rhs, i3))
    }

    fn decomposition_result(
        &mut self,
        m: usize,
        x: f64,
        lhs: BigFloat,
        rhs: BigFloat,
        meta: QuadResult,
    ) -> DecompositionCheck {
        let diff = self.quad.ctx().sub(&lhs, &rhs).abs();
        DecompositionCheck {
            m,
            x,
            exact_side: to_f64(&lhs),
            quad_side: to_f64(&rhs),
            abs_diff: to_f64(&diff),
            converged: meta.converged,
            subintervals_used: meta.subintervals_used,
        }
    }

    /// Integral over [0, 1]; the closure receives `(ctx, s, 1-s)` with both
    /// distances at full relative precision.
    fn unit_integral<F>(&mut self, mut f: F) -> Result<QuadResult>
    where
        F: FnMut(&mut RealCtx, &BigFloat, &BigFloat) -> BigFloat,
    {
        let zero = self.quad.ctx().zero();
        let one = self.quad.ctx().from_i64(1);
        self.quad
            .integrate(&zero, &one, &self.tol, move |ctx, node| {
                f(ctx, &node.x, &node.from_right)
            })
    }
}

fn checked_rational(m: usize, x: f64) -> Result<Rational> {
    if m < 2 {
        return Err(Error::Domain(format!(
            "decomposition checks need m >= 2, got {m}"
        )));
    }
    if !x.is_finite() || x <= 0.0 {
        return Err(Error::Domain(format!("x must be > 0, got {x}")));
    }
    Rational::from_float(x).ok_or_else(|| Error::Parse(format!("x not finite: {x}")))
}
