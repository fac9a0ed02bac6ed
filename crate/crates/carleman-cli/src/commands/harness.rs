use std::fs;

use carleman_core::carleman::{inequality_report, parse_sequence_file, ReportRow, SequenceSpec};

use super::Ctx;
use crate::output::{emit, fmt_f64, parse_list};
use crate::{Failure, Format};

/// Parses `power:P`, `geom:R`, or `file:PATH` into a sequence spec.
pub fn parse_family(family: &str, terms: usize) -> Result<SequenceSpec, Failure> {
    let (name, arg) = family.split_once(':').ok_or_else(|| {
        Failure::usage(format!(
            "family must be power:P, geom:R, or file:PATH, got {family}"
        ))
    })?;
    match name {
        "power" => {
            let p: f64 = arg
                .parse()
                .map_err(|_| Failure::usage(format!("bad power exponent: {arg}")))?;
            Ok(SequenceSpec::power(p, terms)?)
        }
        "geom" => {
            let r: f64 = arg
                .parse()
                .map_err(|_| Failure::usage(format!("bad geometric ratio: {arg}")))?;
            Ok(SequenceSpec::geometric(r, terms)?)
        }
        "file" => {
            let content = fs::read_to_string(arg)
                .map_err(|e| Failure::usage(format!("cannot read {arg}: {e}")))?;
            Ok(SequenceSpec::custom(parse_sequence_file(&content)?, terms)?)
        }
        other => Err(Failure::usage(format!(
            "unknown family {other}; expected power, geom, or file"
        ))),
    }
}

/// Default sweep: decades up to `terms`, always including `terms`.
fn default_sweep(terms: usize) -> Vec<usize> {
    let mut sweep = Vec::new();
    let mut n = 10usize;
    while n < terms {
        sweep.push(n);
        n = n.saturating_mul(10);
    }
    sweep.push(terms);
    sweep
}

pub fn run(
    ctx: &Ctx,
    family: &str,
    terms: usize,
    m: usize,
    sweep: Option<&str>,
) -> Result<(), Failure> {
    let seq = parse_family(family, terms)?;
    let sweep = match sweep {
        Some(s) => parse_list(s, "sweep")?,
        None => default_sweep(terms),
    };
    let rows = inequality_report(&seq, m, &sweep)?;
    let content = render(&rows, ctx.format);
    emit(ctx.out.as_deref(), &content)?;

    let violations = rows
        .iter()
        .filter(|r| !(r.lhs_below_one && r.lhs_below_eleven_twelfths && r.rhs_ratio <= 1.0))
        .count();
    if violations > 0 {
        return Err(Failure::Check(format!(
            "{violations} of {} truncation rows violate the inequalities",
            rows.len()
        )));
    }
    Ok(())
}

pub fn render(rows: &[ReportRow], format: Format) -> String {
    match format {
        Format::Json => {
            let v: Vec<_> = rows
                .iter()
                .map(|r| {
                    serde_json::json!({
                        "n": r.n,
                        "lhs": r.lhs,
                        "rhs_center_one": r.rhs_center_one,
                        "rhs_center_eleven_twelfths": r.rhs_center_eleven_twelfths,
                        "lhs_below_one": r.lhs_below_one,
                        "lhs_below_eleven_twelfths": r.lhs_below_eleven_twelfths,
                        "rhs_ratio": r.rhs_ratio,
                    })
                })
                .collect();
            format!(
                "{}\n",
                serde_json::to_string_pretty(&serde_json::Value::Array(v)).expect("json")
            )
        }
        Format::Csv | Format::Text => {
            let mut out = String::from(
                "N,lhs,rhs_center1,rhs_center11_12,lhs_lt_center1,lhs_lt_center11_12,rhs_ratio\n",
            );
            for r in rows {
                out.push_str(&format!(
                    "{},{},{},{},{},{},{:.12}\n",
                    r.n,
                    fmt_f64(r.lhs),
                    fmt_f64(r.rhs_center_one),
                    fmt_f64(r.rhs_center_eleven_twelfths),
                    r.lhs_below_one,
                    r.lhs_below_eleven_twelfths,
                    r.rhs_ratio
                ));
            }
            out
        }
    }
}
