use carleman_core::gquad::GquadEngine;

use super::Ctx;
use crate::output::{emit, parse_list, CheckLine};
use crate::Failure;

/// Decomposition checks for every `(m, x)` pair: both partial-sum
/// decompositions plus the re-derived difference identity.
pub fn check_lines(ctx: &Ctx, ms: &[usize], xs: &[f64]) -> Result<Vec<CheckLine>, Failure> {
    let tol = 1e-9;
    let mut eng = GquadEngine::new(ctx.precision)?;
    let mut lines = Vec::new();
    for &m in ms {
        for &x in xs {
            let sigma = eng.sigma_decomposition_check(m, x)?;
            lines.push(CheckLine {
                name: format!("sigma decomposition m={m} x={x}"),
                computed: sigma.quad_side,
                reference: sigma.exact_side,
                abs_diff: sigma.abs_diff,
                pass: sigma.converged && sigma.abs_diff <= tol,
            });
            let s = eng.s_decomposition_check(m, x)?;
            lines.push(CheckLine {
                name: format!("S decomposition m={m} x={x}"),
                computed: s.quad_side,
                reference: s.exact_side,
                abs_diff: s.abs_diff,
                pass: s.converged && s.abs_diff <= tol,
            });
            let diff = eng.difference_decomposition_check(m, x)?;
            lines.push(CheckLine {
                name: format!("difference identity m={m} x={x}"),
                computed: diff.quad_side,
                reference: diff.exact_side,
                abs_diff: diff.abs_diff,
                pass: diff.converged && diff.abs_diff <= tol,
            });
        }
    }
    Ok(lines)
}

pub fn run(ctx: &Ctx, m_list: &str, x_list: &str) -> Result<(), Failure> {
    let ms: Vec<usize> = parse_list(m_list, "m-list")?;
    let xs: Vec<f64> = parse_list(x_list, "x-list")?;
    if ms.is_empty() || xs.is_empty() {
        return Err(Failure::usage("m-list and x-list must be nonempty"));
    }
    let lines = check_lines(ctx, &ms, &xs)?;
    let content = super::integrals::render(&lines, ctx.format);
    emit(ctx.out.as_deref(), &content)?;
    let failures = lines.iter().filter(|l| !l.pass).count();
    if failures > 0 {
        return Err(Failure::Check(format!(
            "{failures} of {} decomposition checks failed",
            lines.len()
        )));
    }
    Ok(())
}
