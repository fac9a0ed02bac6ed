//! Exact evaluation of the partial sums
//!
//! ```text
//! sigma_m(x) = sum_{k=1}^{m} b_k/(1+x)^k
//! S_m(x)     = sum_{k=1}^{m} d_k/(x + 11/12)^k
//! ```
//!
//! their difference `delta_m = S_m - sigma_m`, tail comparisons between the
//! two expansions, and the positive prefix appearing in the odd-order
//! positivity argument.
//!
//! Exact rational evaluation is the default for every inequality assertion;
//! floating-point evaluation exists only for plots and reports.

use num_traits::{Signed, ToPrimitive, Zero};

use crate::coeffs::{CoeffKind, CoeffTable};
use crate::error::{Error, Result};
use crate::exactnum::{rat, Rational};

/// One exact evaluation of both partial sums at `(m, x)`.
#[derive(Clone, Debug)]
pub struct SeriesPoint {
    pub m: usize,
    pub x: Rational,
    pub sigma: Rational,
    pub s: Rational,
    pub delta: Rational,
}

fn require_kind(table: &CoeffTable, kind: CoeffKind) -> Result<()> {
    if table.kind() != kind {
        return Err(Error::KindMismatch {
            expected: kind.name(),
            got: table.kind().name(),
        });
    }
    Ok(())
}

fn require_positive(x: &Rational) -> Result<()> {
    if !x.is_positive() {
        return Err(Error::Domain(format!("x must be > 0, got {x}")));
    }
    Ok(())
}

/// Exact `sigma_m(x)` from a `b` table of length >= m.
pub fn eval_sigma(b: &CoeffTable, m: usize, x: &Rational) -> Result<Rational> {
    require_kind(b, CoeffKind::B)?;
    require_positive(x)?;
    if m < 1 {
        return Err(Error::Domain("m must be >= 1".into()));
    }
    partial_sum(b, m, &(Rational::from_integer(1.into()) + x))
}

/// Exact `S_m(x)` from a `d` table of length >= m.
pub fn eval_s(d: &CoeffTable, m: usize, x: &Rational) -> Result<Rational> {
    require_kind(d, CoeffKind::D)?;
    require_positive(x)?;
    if m < 1 {
        return Err(Error::Domain("m must be >= 1".into()));
    }
    partial_sum(d, m, &(rat(11, 12) + x))
}

/// `sum_{k=1}^{m} c_k / base^k`, exactly.
fn partial_sum(table: &CoeffTable, m: usize, base: &Rational) -> Result<Rational> {
    if table.len() < m {
        return Err(Error::TableTooShort {
            need: m,
            have: table.len(),
        });
    }
    let inv = base.recip();
    let mut power = Rational::from_integer(1.into());
    let mut sum = Rational::zero();
    for k in 1..=m {
        power *= &inv;
        sum += table.get(k)? * &power;
    }
    Ok(sum)
}

/// Exact `S_m(x) - sigma_m(x)`. The conjecture under test asserts this is
/// strictly positive for all `m >= 1`, `x > 0`.
pub fn delta(b: &CoeffTable, d: &CoeffTable, m: usize, x: &Rational) -> Result<Rational> {
    Ok(eval_s(d, m, x)? - eval_sigma(b, m, x)?)
}

/// Both sums and their difference at `(m, x)`.
pub fn series_point(b: &CoeffTable, d: &CoeffTable, m: usize, x: &Rational) -> Result<SeriesPoint> {
    let sigma = eval_sigma(b, m, x)?;
    let s = eval_s(d, m, x)?;
    let delta = &s - &sigma;
    Ok(SeriesPoint {
        m,
        x: x.clone(),
        sigma,
        s,
        delta,
    })
}

/// The non-integral prefix of the odd-order positivity argument:
///
/// ```text
/// 1/(x+11/12) - 1/(x+1) + sum_{k=2}^{m} (-1)^{k-1} 12/(12x+11)^k
/// ```
///
/// The argument drops this quantity with a strict inequality, asserting it is
/// positive; it is returned exactly for empirical confirmation.
pub fn odd_prefix(m: usize, x: &Rational) -> Result<Rational> {
    if m.is_multiple_of(2) {
        return Err(Error::Domain(format!("m must be odd, got {m}")));
    }
    require_positive(x)?;
    let t = rat(11, 12) + x;
    let one_plus_x = Rational::from_integer(1.into()) + x;
    let mut sum = t.recip() - one_plus_x.recip();
    let base = Rational::from_integer(12.into()) * &t; // 12x + 11
    let twelve = Rational::from_integer(12.into());
    let mut power = Rational::from_integer(1.into());
    for k in 2..=m {
        power = if k == 2 {
            (&base * &base).recip()
        } else {
            power / &base
        };
        let term = &twelve * &power;
        if k % 2 == 0 {
            sum -= term; // (-1)^{k-1} = -1 for even k
        } else {
            sum += term;
        }
    }
    Ok(sum)
}

/// Truncated tails `sum_{k=m+1}^{K} b_k/(1+x)^k` and
/// `sum_{k=m+1}^{K} d_k/(x+11/12)^k`, in floating point. Reported, never
/// asserted: nothing is proven about the signs of `d_k`.
pub fn tail_compare(
    b: &CoeffTable,
    d: &CoeffTable,
    m: usize,
    x: f64,
    k_max: usize,
) -> Result<(f64, f64)> {
    require_kind(b, CoeffKind::B)?;
    require_kind(d, CoeffKind::D)?;
    if k_max <= m {
        return Err(Error::Domain(format!(
            "tail truncation K={k_max} must exceed m={m}"
        )));
    }
    if !x.is_finite() || x <= 0.0 {
        return Err(Error::Domain(format!("x must be > 0, got {x}")));
    }
    if b.len() < k_max || d.len() < k_max {
        return Err(Error::TableTooShort {
            need: k_max,
            have: b.len().min(d.len()),
        });
    }
    let mut sigma_tail = 0.0;
    let mut s_tail = 0.0;
    for k in (m + 1)..=k_max {
        let bk = b.get(k)?.to_f64().unwrap_or(f64::NAN);
        let dk = d.get(k)?.to_f64().unwrap_or(f64::NAN);
        sigma_tail += bk / (1.0 + x).powi(k as i32);
        s_tail += dk / (x + 11.0 / 12.0).powi(k as i32);
    }
    Ok((sigma_tail, s_tail))
}

/// True iff `t/(1+x) > (t - 1/12)/(x + 11/12)`, decided exactly.
///
/// Algebraically `t(x+11/12) - (t-1/12)(x+1) = (1+x-t)/12 > 0` whenever
/// `0 < t <= 1` and `x > 0`, so the result is always true on the stated
/// domain; the exact comparison documents that fact executably.
pub fn cross_bound_check(t: f64, x: f64) -> Result<bool> {
    if !(t > 0.0 && t <= 1.0) {
        return Err(Error::Domain(format!("t must be in (0, 1], got {t}")));
    }
    if !x.is_finite() || x <= 0.0 {
        return Err(Error::Domain(format!("x must be > 0, got {x}")));
    }
    let t = Rational::from_float(t).ok_or_else(|| Error::Parse("t not finite".into()))?;
    let x = Rational::from_float(x).ok_or_else(|| Error::Parse("x not finite".into()))?;
    let lhs = &t / (Rational::from_integer(1.into()) + &x);
    let rhs = (&t - rat(1, 12)) / (rat(11, 12) + &x);
    Ok(lhs > rhs)
}

/// Floating-point `sigma_m(x)` (reports only).
pub fn eval_sigma_f64(b: &CoeffTable, m: usize, x: f64) -> Result<f64> {
    require_kind(b, CoeffKind::B)?;
    float_partial_sum(b, m, 1.0 + x)
}

/// Floating-point `S_m(x)` (reports only).
pub fn eval_s_f64(d: &CoeffTable, m: usize, x: f64) -> Result<f64> {
    require_kind(d, CoeffKind::D)?;
    float_partial_sum(d, m, x + 11.0 / 12.0)
}

fn float_partial_sum(table: &CoeffTable, m: usize, base: f64) -> Result<f64> {
    if table.len() < m {
        return Err(Error::TableTooShort {
            need: m,
            have: table.len(),
        });
    }
    let mut sum = 0.0;
    for k in 1..=m {
        sum += table.get(k)?.to_f64().unwrap_or(f64::NAN) / base.powi(k as i32);
    }
    Ok(sum)
}

/// Deterministic log-spaced rational grid of `points` values covering
/// `[x_min, x_max]`, endpoints exact. Interior points are rounded to
/// denominator 10^6, keeping the exact arithmetic downstream compact.
pub fn log_grid(points: usize, x_min: &Rational, x_max: &Rational) -> Result<Vec<Rational>> {
    if points < 2 {
        return Err(Error::Domain("grid needs at least 2 points".into()));
    }
    if !x_min.is_positive() || x_max <= x_min {
        return Err(Error::Domain("need 0 < x_min < x_max".into()));
    }
    let lo = x_min.to_f64().unwrap().log10();
    let hi = x_max.to_f64().unwrap().log10();
    let scale = 1_000_000i64;
    let mut grid = Vec::with_capacity(points);
    grid.push(x_min.clone());
    for i in 1..points - 1 {
        let t = lo + (hi - lo) * (i as f64) / ((points - 1) as f64);
        let v = 10f64.powf(t);
        if !v.is_finite() {
            return Err(Error::Parse("grid point not finite".into()));
        }
        let x = rat((v * scale as f64).round() as i64, scale);
        if !x.is_positive() {
            return Err(Error::Domain("grid resolution underflow".into()));
        }
        grid.push(x);
    }
    grid.push(x_max.clone());
    for pair in grid.windows(2) {
        if pair[0] >= pair[1] {
            return Err(Error::Domain(
                "grid points collide at the requested resolution".into(),
            ));
        }
    }
    Ok(grid)
}

/// Closed form for `m = 1`: `delta_1(x) = (1/24)/((x+11/12)(x+1))`, derived
/// from the difference of the two leading terms. Used as a self-test.
pub fn delta1_closed_form(x: &Rational) -> Result<Rational> {
    require_positive(x)?;
    let t = rat(11, 12) + x;
    let u = Rational::from_integer(1.into()) + x;
    Ok(rat(1, 24) / (t * u))
}
