use carleman_core::coeffs::{b_table, d_table};
use carleman_core::gquad::{rational_to_f64, GquadEngine};

use super::Ctx;
use crate::output::{emit, CheckLine};
use crate::{Failure, Format};

const E: f64 = std::f64::consts::E;

/// Builds the full identity check table at the context precision.
pub fn check_lines(ctx: &Ctx, k_max: usize) -> Result<Vec<CheckLine>, Failure> {
    if k_max < 2 {
        return Err(Failure::usage("k-max must be >= 2"));
    }
    let tol_moment = 1e-10;
    let mut eng = GquadEngine::new(ctx.precision)?;
    let b = b_table(k_max)?;
    let d = d_table(12)?;
    let mut lines = Vec::new();

    let mut push = |name: String, computed: f64, reference: f64, tol: f64, converged: bool| {
        let abs_diff = (computed - reference).abs();
        lines.push(CheckLine {
            name,
            computed,
            reference,
            abs_diff,
            pass: converged && abs_diff <= tol,
        });
    };

    let m2 = eng.moment(2)?;
    push(
        "int g".into(),
        m2.value_f64(),
        E / 24.0,
        tol_moment,
        m2.converged,
    );
    let m3 = eng.moment(3)?;
    push(
        "int g*s".into(),
        m3.value_f64(),
        E / 48.0,
        tol_moment,
        m3.converged,
    );
    let recip = eng.reciprocal_moment()?;
    push(
        "int g/s".into(),
        recip.value_f64(),
        E / 2.0 - 1.0,
        tol_moment,
        recip.converged,
    );
    let mirrored = eng.mirrored_reciprocal_moment()?;
    push(
        "int g/(1-s)".into(),
        mirrored.value_f64(),
        E / 2.0 - 1.0,
        tol_moment,
        mirrored.converged,
    );

    for k in 2..=k_max {
        let m = eng.moment(k)?;
        push(
            format!("moment({k})/e vs b_{k}"),
            m.value_f64() / E,
            rational_to_f64(b.get(k)?),
            tol_moment,
            m.converged,
        );
    }

    for k in [5usize, 9] {
        if k <= k_max {
            let direct = eng.moment(k)?;
            let mirror = eng.mirrored_moment(k)?;
            push(
                format!("mirror moment({k})"),
                mirror.value_f64(),
                direct.value_f64(),
                2.0 * ctx.precision.target_abs_tol,
                mirror.converged && direct.converged,
            );
        }
    }

    for x in [0.1, 1.0, 10.0] {
        let h = eng.h_identity_check(x)?;
        push(
            format!("h identity x={x}"),
            h.lhs,
            h.rhs,
            1e-10,
            h.quad.converged,
        );
    }

    for n in 2..=12 {
        let numeric = eng.d_numeric(n)?;
        let exact = rational_to_f64(d.get(n)?);
        let tol = if n == 2 { 1e-10 } else { 1e-8 * exact.abs() };
        push(
            format!("d_numeric({n})"),
            numeric.value_f64(),
            exact,
            tol,
            numeric.converged,
        );
    }

    Ok(lines)
}

pub fn run(ctx: &Ctx, k_max: usize) -> Result<(), Failure> {
    let lines = check_lines(ctx, k_max)?;
    let content = render(&lines, ctx.format);
    emit(ctx.out.as_deref(), &content)?;
    let failures = lines.iter().filter(|l| !l.pass).count();
    if failures > 0 {
        return Err(Failure::Check(format!(
            "{failures} of {} integral identities failed",
            lines.len()
        )));
    }
    Ok(())
}

pub fn render(lines: &[CheckLine], format: Format) -> String {
    match format {
        Format::Json => {
            let v: Vec<_> = lines.iter().map(CheckLine::json).collect();
            format!(
                "{}\n",
                serde_json::to_string_pretty(&serde_json::Value::Array(v)).expect("json")
            )
        }
        Format::Csv => {
            let mut out = String::from("identity,computed,reference,abs_diff,pass\n");
            for l in lines {
                out.push_str(&l.csv_row());
                out.push('\n');
            }
            out
        }
        Format::Text => {
            let mut out = format!(
                "{:<28} {:>24} {:>24} {:>12} result\n",
                "identity", "computed", "reference", "abs diff"
            );
            for l in lines {
                out.push_str(&l.text_row());
                out.push('\n');
            }
            let passed = lines.iter().filter(|l| l.pass).count();
            out.push_str(&format!("{passed}/{} identities pass\n", lines.len()));
            out
        }
    }
}
