//! Thin context over arbitrary-precision binary floats.
//!
//! All operations round to a fixed working precision chosen from the decimal
//! digit request; the context owns the shared constants cache needed by the
//! transcendental functions. One context per integration engine, never
//! shared across threads.

use astro_float::{BigFloat, Consts, Radix, RoundingMode};
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::exactnum::Rational;

const RM: RoundingMode = RoundingMode::ToEven;

/// Working-precision real arithmetic context.
pub struct RealCtx {
    bits: usize,
    cc: Consts,
}

impl RealCtx {
    /// Context with at least `digits` significant decimal digits.
    pub fn new(digits: usize) -> Result<Self> {
        // log2(10) ~ 3.3219; a full word of guard bits on top.
        let bits = (digits as f64 * 3.321929).ceil() as usize + 64;
        let cc = Consts::new().map_err(|e| Error::Precision(format!("constants cache: {e:?}")))?;
        Ok(RealCtx { bits, cc })
    }

    pub fn bits(&self) -> usize {
        self.bits
    }

    pub fn zero(&self) -> BigFloat {
        BigFloat::from_i64(0, self.bits)
    }

    pub fn from_i64(&self, v: i64) -> BigFloat {
        BigFloat::from_i64(v, self.bits)
    }

    pub fn from_f64(&self, v: f64) -> BigFloat {
        BigFloat::from_f64(v, self.bits)
    }

    /// Exact rational rendered once to working precision.
    pub fn from_rational(&mut self, q: &Rational) -> BigFloat {
        let n = BigFloat::parse(
            &q.numer().to_string(),
            Radix::Dec,
            self.bits,
            RM,
            &mut self.cc,
        );
        let d = BigFloat::parse(
            &q.denom().to_string(),
            Radix::Dec,
            self.bits,
            RM,
            &mut self.cc,
        );
        n.div(&d, self.bits, RM)
    }

    pub fn pi(&mut self) -> BigFloat {
        self.cc.pi(self.bits, RM)
    }

    pub fn e(&mut self) -> BigFloat {
        self.cc.e(self.bits, RM)
    }

    pub fn add(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.add(b, self.bits, RM)
    }

    pub fn sub(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.sub(b, self.bits, RM)
    }

    pub fn mul(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.mul(b, self.bits, RM)
    }

    pub fn div(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.div(b, self.bits, RM)
    }

    pub fn recip(&self, a: &BigFloat) -> BigFloat {
        a.reciprocal(self.bits, RM)
    }

    pub fn exp(&mut self, x: &BigFloat) -> BigFloat {
        x.exp(self.bits, RM, &mut self.cc)
    }

    pub fn ln(&mut self, x: &BigFloat) -> BigFloat {
        x.ln(self.bits, RM, &mut self.cc)
    }

    pub fn sin(&mut self, x: &BigFloat) -> BigFloat {
        x.sin(self.bits, RM, &mut self.cc)
    }

    pub fn sinh(&mut self, x: &BigFloat) -> BigFloat {
        x.sinh(self.bits, RM, &mut self.cc)
    }

    pub fn cosh(&mut self, x: &BigFloat) -> BigFloat {
        x.cosh(self.bits, RM, &mut self.cc)
    }

    /// Integer power by the library's repeated squaring.
    pub fn powi(&self, x: &BigFloat, n: usize) -> BigFloat {
        if n == 0 {
            return self.from_i64(1);
        }
        x.powi(n, self.bits, RM)
    }

    /// `x^y` for positive `x`.
    pub fn pow(&mut self, x: &BigFloat, y: &BigFloat) -> BigFloat {
        x.pow(y, self.bits, RM, &mut self.cc)
    }

    pub fn min<'a>(&self, a: &'a BigFloat, b: &'a BigFloat) -> &'a BigFloat {
        if matches!(a.cmp(b), Some(c) if c <= 0) {
            a
        } else {
            b
        }
    }

    pub fn le(&self, a: &BigFloat, b: &BigFloat) -> bool {
        matches!(a.cmp(b), Some(c) if c <= 0)
    }

    pub fn lt(&self, a: &BigFloat, b: &BigFloat) -> bool {
        matches!(a.cmp(b), Some(c) if c < 0)
    }
}

/// Lossy conversion for reports and tolerance comparisons. Values beyond the
/// f64 exponent range collapse to 0 or +/-inf, which is the desired behavior
/// for error estimates far below any tolerance of interest.
pub fn to_f64(x: &BigFloat) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    if x.is_inf_pos() {
        return f64::INFINITY;
    }
    if x.is_inf_neg() {
        return f64::NEG_INFINITY;
    }
    // Display renders scientific notation that f64 parses directly.
    format!("{x}").parse().unwrap_or(f64::NAN)
}

/// Exact rational to f64, for report columns.
pub fn rational_to_f64(q: &Rational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    #[test]
    fn rational_rendering_round_trips() {
        let mut ctx = RealCtx::new(34).unwrap();
        let x = ctx.from_rational(&rat(1, 3));
        assert!((to_f64(&x) - 1.0 / 3.0).abs() < 1e-15);
        let y = ctx.from_rational(&rat(-139, 17280));
        assert!((to_f64(&y) + 139.0 / 17280.0).abs() < 1e-15);
    }

    #[test]
    fn huge_exponents_survive() {
        let mut ctx = RealCtx::new(34).unwrap();
        let big_neg = ctx.from_f64(-1100.0);
        let tiny = ctx.exp(&big_neg);
        assert!(!tiny.is_zero());
        assert!(to_f64(&tiny) == 0.0); // underflows only at the f64 boundary
        let back = ctx.ln(&tiny);
        assert!((to_f64(&back) + 1100.0).abs() < 1e-20);
    }

    #[test]
    fn constants_agree_with_f64() {
        let mut ctx = RealCtx::new(34).unwrap();
        assert!((to_f64(&ctx.pi()) - std::f64::consts::PI).abs() < 1e-15);
        assert!((to_f64(&ctx.e()) - std::f64::consts::E).abs() < 1e-15);
    }
}
