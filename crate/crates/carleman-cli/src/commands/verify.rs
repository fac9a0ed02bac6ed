use carleman_core::coeffs::{b_table, d_table};
use carleman_core::gquad::rational_to_f64;
use carleman_core::series;
use num_traits::Signed;

use super::Ctx;
use crate::output::{emit, fmt_f64, parse_rational};
use crate::Failure;

pub struct VerifySummary {
    pub rows: usize,
    pub positive: usize,
    pub csv: String,
}

/// Runs the exact (or floating) grid sweep and renders the CSV.
pub fn sweep(
    m_max: usize,
    x_min: &str,
    x_max: &str,
    points: usize,
    float_mode: bool,
) -> Result<VerifySummary, Failure> {
    if m_max < 1 {
        return Err(Failure::usage("m-max must be >= 1"));
    }
    let x_min = parse_rational(x_min)?;
    let x_max = parse_rational(x_max)?;
    let grid = series::log_grid(points, &x_min, &x_max)?;
    let b = b_table(m_max)?;
    let d = d_table(m_max)?;

    let mut csv = String::from("m,x,sigma,S,delta,positive\n");
    let mut positive = 0usize;
    let mut rows = 0usize;
    for m in 1..=m_max {
        for x in &grid {
            rows += 1;
            if float_mode {
                let xf = rational_to_f64(x);
                let sigma = series::eval_sigma_f64(&b, m, xf)?;
                let s = series::eval_s_f64(&d, m, xf)?;
                let delta = s - sigma;
                if delta > 0.0 {
                    positive += 1;
                }
                csv.push_str(&format!(
                    "{m},{},{},{},{},{}\n",
                    fmt_f64(xf),
                    fmt_f64(sigma),
                    fmt_f64(s),
                    fmt_f64(delta),
                    delta > 0.0
                ));
            } else {
                let point = series::series_point(&b, &d, m, x)?;
                let is_positive = point.delta.is_positive();
                if is_positive {
                    positive += 1;
                }
                csv.push_str(&format!(
                    "{m},{x},{},{},{},{}\n",
                    point.sigma, point.s, point.delta, is_positive
                ));
            }
        }
    }
    Ok(VerifySummary {
        rows,
        positive,
        csv,
    })
}

pub fn run(
    ctx: &Ctx,
    m_max: usize,
    x_min: &str,
    x_max: &str,
    points: usize,
    float_mode: bool,
) -> Result<(), Failure> {
    let summary = sweep(m_max, x_min, x_max, points, float_mode)?;
    emit(ctx.out.as_deref(), &summary.csv)?;
    eprintln!(
        "verify: {}/{} deltas positive (m <= {m_max}, {points} grid points, {})",
        summary.positive,
        summary.rows,
        if float_mode { "float" } else { "exact" }
    );
    if summary.positive != summary.rows {
        return Err(Failure::Check(format!(
            "{} grid points with non-positive delta",
            summary.rows - summary.positive
        )));
    }
    Ok(())
}
