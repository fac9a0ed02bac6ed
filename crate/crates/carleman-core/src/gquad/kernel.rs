//! The moment kernel `g(s) = (1/pi) s^s (1-s)^(1-s) sin(pi s)` on [0, 1],
//! pinned to 0 at both endpoints.
//!
//! Evaluation works from `s` and `1-s` as independently supplied values, so
//! callers near an endpoint keep full relative precision in the small one.
//! The sine factor is always taken at `pi * min(s, 1-s)`, which is exact
//! under the `s <-> 1-s` symmetry and avoids the precision loss of
//! evaluating sin near pi.

use astro_float::BigFloat;

use super::real::RealCtx;

/// `s^s (1-s)^(1-s)` for interior points, via `exp(s ln s + (1-s) ln(1-s))`.
fn entropy_factor(ctx: &mut RealCtx, s: &BigFloat, one_minus_s: &BigFloat) -> BigFloat {
    let ln_s = ctx.ln(s);
    let ln_oms = ctx.ln(one_minus_s);
    let sum = ctx.add(&ctx.mul(s, &ln_s), &ctx.mul(one_minus_s, &ln_oms));
    ctx.exp(&sum)
}

/// `sin(pi s)` computed as `sin(pi * min(s, 1-s))`.
fn sin_pi_s(ctx: &mut RealCtx, pi: &BigFloat, s: &BigFloat, one_minus_s: &BigFloat) -> BigFloat {
    let m = ctx.min(s, one_minus_s).clone();
    let arg = ctx.mul(pi, &m);
    ctx.sin(&arg)
}

/// Kernel value at an interior point given `s` and `1-s`; returns 0 when
/// either distance is exactly zero.
pub(crate) fn g_value(
    ctx: &mut RealCtx,
    pi: &BigFloat,
    s: &BigFloat,
    one_minus_s: &BigFloat,
) -> BigFloat {
    if s.is_zero() || one_minus_s.is_zero() {
        return ctx.zero();
    }
    let base = entropy_factor(ctx, s, one_minus_s);
    let sin = sin_pi_s(ctx, pi, s, one_minus_s);
    ctx.div(&ctx.mul(&base, &sin), pi)
}

/// `g(s)/s` under its continuous extension: `s^s (1-s)^(1-s) sin(pi s)/(pi s)`,
/// which tends to 1 as `s -> 0` and to 0 as `s -> 1`.
pub(crate) fn g_over_s_value(
    ctx: &mut RealCtx,
    pi: &BigFloat,
    s: &BigFloat,
    one_minus_s: &BigFloat,
) -> BigFloat {
    if s.is_zero() {
        return ctx.from_i64(1);
    }
    if one_minus_s.is_zero() {
        return ctx.zero();
    }
    let base = entropy_factor(ctx, s, one_minus_s);
    let sin = sin_pi_s(ctx, pi, s, one_minus_s);
    let denom = ctx.mul(pi, s);
    ctx.div(&ctx.mul(&base, &sin), &denom)
}
