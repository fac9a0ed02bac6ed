//! Output sinks and shared rendering helpers.

use std::fs;
use std::io::Write;
use std::path::Path;

use crate::Failure;

/// Writes `content` to `out` when given, else to stdout.
pub fn emit(out: Option<&Path>, content: &str) -> Result<(), Failure> {
    match out {
        Some(path) => {
            if let Some(parent) = path.parent() {
                if !parent.as_os_str().is_empty() {
                    fs::create_dir_all(parent)?;
                }
            }
            fs::write(path, content)?;
            Ok(())
        }
        None => {
            std::io::stdout()
                .write_all(content.as_bytes())
                .map_err(Failure::from)?;
            Ok(())
        }
    }
}

/// Deterministic float rendering for tables and CSV.
pub fn fmt_f64(v: f64) -> String {
    format!("{v:.15e}")
}

/// Parses "a,b,c" into typed values.
pub fn parse_list<T: std::str::FromStr>(s: &str, what: &str) -> Result<Vec<T>, Failure> {
    s.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<T>()
                .map_err(|_| Failure::usage(format!("bad {what} entry: {tok}")))
        })
        .collect()
}

/// Parses a rational from "p/q" or a plain decimal string.
pub fn parse_rational(s: &str) -> Result<carleman_core::Rational, Failure> {
    use carleman_core::Rational;
    let s = s.trim();
    if let Ok(r) = s.parse::<Rational>() {
        return Ok(r);
    }
    // Decimal like "0.001": scale by a power of ten, exactly.
    if let Some((int_part, frac_part)) = s.split_once('.') {
        let digits = format!("{int_part}{frac_part}");
        if let Ok(n) = digits.parse::<num_bigint::BigInt>() {
            let denom = num_bigint::BigInt::from(10u32).pow(frac_part.len() as u32);
            return Ok(Rational::new(n, denom));
        }
    }
    Err(Failure::usage(format!("cannot parse rational: {s}")))
}

/// One pass/fail check line for text tables.
pub struct CheckLine {
    pub name: String,
    pub computed: f64,
    pub reference: f64,
    pub abs_diff: f64,
    pub pass: bool,
}

impl CheckLine {
    pub fn text_row(&self) -> String {
        format!(
            "{:<28} {:>24} {:>24} {:>12} {}",
            self.name,
            fmt_f64(self.computed),
            fmt_f64(self.reference),
            format!("{:.3e}", self.abs_diff),
            if self.pass { "pass" } else { "FAIL" }
        )
    }

    pub fn json(&self) -> serde_json::Value {
        serde_json::json!({
            "identity": self.name,
            "computed": self.computed,
            "reference": self.reference,
            "abs_diff": self.abs_diff,
            "pass": self.pass,
        })
    }

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{:.3e},{}",
            self.name,
            fmt_f64(self.computed),
            fmt_f64(self.reference),
            self.abs_diff,
            self.pass
        )
    }
}
