//! Empirical harness for the refined Carleman inequalities: both sides of
//!
//! ```text
//! sum_n (a_1 ... a_n)^(1/n)  <  e sum_n (1 - sum_{k=1}^m c_k/(n + eps)^k) a_n
//! ```
//!
//! with `(c, eps) = (b, 1)` and `(c, eps) = (d, 11/12)`, evaluated on
//! user-specified summable sequences. Truncated comparisons are meaningful
//! because the refinements hold term-by-term in the weights; the harness is
//! documented as empirical, not a proof.

use num_traits::ToPrimitive;

use crate::coeffs::{b_table, d_table, CoeffTable};
use crate::error::{Error, Result};

/// Families of nonnegative test sequences.
#[derive(Clone, Debug)]
pub enum SeqFamily {
    /// `a_n = n^(-p)`, summable for `p > 1`.
    PowerDecay(f64),
    /// `a_n = r^n` for `r` in (0, 1).
    Geometric(f64),
    /// Explicit terms, e.g. parsed from a file.
    Custom(Vec<f64>),
}

/// A truncated nonnegative sequence to feed through the inequalities.
#[derive(Clone, Debug)]
pub struct SequenceSpec {
    pub family: SeqFamily,
    /// Truncation length `N >= 1`.
    pub terms: usize,
}

impl SequenceSpec {
    pub fn power(p: f64, terms: usize) -> Result<Self> {
        let spec = SequenceSpec {
            family: SeqFamily::PowerDecay(p),
            terms,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn geometric(r: f64, terms: usize) -> Result<Self> {
        let spec = SequenceSpec {
            family: SeqFamily::Geometric(r),
            terms,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn custom(values: Vec<f64>, terms: usize) -> Result<Self> {
        let spec = SequenceSpec {
            family: SeqFamily::Custom(values),
            terms,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if self.terms < 1 {
            return Err(Error::Domain("sequence needs at least one term".into()));
        }
        match &self.family {
            SeqFamily::PowerDecay(p) => {
                if !p.is_finite() || *p <= 1.0 {
                    return Err(Error::Domain(format!(
                        "power decay requires p > 1 for summability, got {p}"
                    )));
                }
            }
            SeqFamily::Geometric(r) => {
                if !(*r > 0.0 && *r < 1.0) {
                    return Err(Error::Domain(format!(
                        "geometric ratio must lie in (0, 1), got {r}"
                    )));
                }
            }
            SeqFamily::Custom(values) => {
                if values.is_empty() {
                    return Err(Error::Domain("custom sequence is empty".into()));
                }
                for (i, v) in values.iter().enumerate() {
                    if !v.is_finite() || *v < 0.0 {
                        return Err(Error::InvalidSequenceEntry {
                            index: i + 1,
                            value: *v,
                        });
                    }
                }
                if values.iter().all(|v| *v == 0.0) {
                    return Err(Error::SequenceAllZero);
                }
            }
        }
        Ok(())
    }

    /// `a_n`, 1-indexed; custom sequences are zero-extended past their data.
    pub fn term(&self, n: usize) -> f64 {
        debug_assert!(n >= 1);
        match &self.family {
            SeqFamily::PowerDecay(p) => (n as f64).powf(-p),
            SeqFamily::Geometric(r) => r.powi(n as i32),
            SeqFamily::Custom(values) => values.get(n - 1).copied().unwrap_or(0.0),
        }
    }
}

/// `sum_{n=1}^{N} (a_1 a_2 ... a_n)^(1/n)`, products carried as running
/// log-sums to avoid underflow for long sequences. A zero term annihilates
/// every later product.
pub fn geometric_mean_sum(seq: &SequenceSpec) -> Result<f64> {
    seq.validate()?;
    let mut any_positive = false;
    let mut log_sum = 0.0f64;
    let mut zero_seen = false;
    let mut total = 0.0f64;
    for n in 1..=seq.terms {
        let a = seq.term(n);
        if a > 0.0 {
            any_positive = true;
        }
        if a == 0.0 {
            zero_seen = true;
        }
        if !zero_seen {
            log_sum += a.ln();
            total += (log_sum / n as f64).exp();
        }
    }
    if !any_positive {
        return Err(Error::SequenceAllZero);
    }
    Ok(total)
}

/// Which recentred expansion supplies the weights.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Center {
    /// Weights `1 - sum b_k/(n+1)^k`.
    One,
    /// Weights `1 - sum d_k/(n + 11/12)^k`.
    ElevenTwelfths,
}

impl Center {
    fn offset(self) -> f64 {
        match self {
            Center::One => 1.0,
            Center::ElevenTwelfths => 11.0 / 12.0,
        }
    }
}

fn weight_coeffs(table: &CoeffTable, m: usize) -> Result<Vec<f64>> {
    if table.len() < m {
        return Err(Error::TableTooShort {
            need: m,
            have: table.len(),
        });
    }
    Ok(table.values()[..m]
        .iter()
        .map(|c| c.to_f64().unwrap_or(f64::NAN))
        .collect())
}

/// The refinement weight `1 - sum_{k=1}^m c_k/(n + eps)^k`.
fn weight(coeffs: &[f64], offset: f64, n: usize) -> f64 {
    let base = n as f64 + offset;
    let mut acc = 0.0;
    let mut pow = 1.0;
    for c in coeffs {
        pow /= base;
        acc += c * pow;
    }
    1.0 - acc
}

/// Truncated right-hand side `e sum_n w(n) a_n` with exact-table weights
/// rendered to floating point once.
pub fn refined_rhs(seq: &SequenceSpec, m: usize, center: Center) -> Result<f64> {
    seq.validate()?;
    if m < 1 {
        return Err(Error::Domain("m must be >= 1".into()));
    }
    let table = match center {
        Center::One => b_table(m)?,
        Center::ElevenTwelfths => d_table(m)?,
    };
    let coeffs = weight_coeffs(&table, m)?;
    let offset = center.offset();
    let mut total = 0.0;
    for n in 1..=seq.terms {
        total += weight(&coeffs, offset, n) * seq.term(n);
    }
    Ok(std::f64::consts::E * total)
}

/// One truncation row of the comparison report.
#[derive(Clone, Debug)]
pub struct ReportRow {
    pub n: usize,
    pub lhs: f64,
    pub rhs_center_one: f64,
    pub rhs_center_eleven_twelfths: f64,
    pub lhs_below_one: bool,
    pub lhs_below_eleven_twelfths: bool,
    /// `rhs(11/12) / rhs(1)`; at most 1 when the refinement orders hold.
    pub rhs_ratio: f64,
}

/// Evaluates the inequality at each truncation in `n_sweep`. Prefix sums are
/// shared across rows, so a sweep costs one pass over the sequence.
pub fn inequality_report(
    seq: &SequenceSpec,
    m: usize,
    n_sweep: &[usize],
) -> Result<Vec<ReportRow>> {
    seq.validate()?;
    if m < 1 {
        return Err(Error::Domain("m must be >= 1".into()));
    }
    if n_sweep.iter().any(|&n| n < 1 || n > seq.terms) {
        return Err(Error::Domain(format!(
            "sweep truncations must lie in 1..={}",
            seq.terms
        )));
    }
    let b = weight_coeffs(&b_table(m)?, m)?;
    let d = weight_coeffs(&d_table(m)?, m)?;

    let mut sorted: Vec<usize> = n_sweep.to_vec();
    sorted.sort_unstable();
    sorted.dedup();

    let mut rows = Vec::with_capacity(sorted.len());
    let mut lhs = 0.0f64;
    let mut rhs_one = 0.0f64;
    let mut rhs_eleven = 0.0f64;
    let mut log_sum = 0.0f64;
    let mut zero_seen = false;
    let mut next = sorted.iter().copied().peekable();
    for n in 1..=seq.terms {
        let a = seq.term(n);
        if a == 0.0 {
            zero_seen = true;
        }
        if !zero_seen {
            log_sum += a.ln();
            lhs += (log_sum / n as f64).exp();
        }
        rhs_one += weight(&b, 1.0, n) * a;
        rhs_eleven += weight(&d, 11.0 / 12.0, n) * a;
        if next.peek() == Some(&n) {
            next.next();
            let r1 = std::f64::consts::E * rhs_one;
            let r11 = std::f64::consts::E * rhs_eleven;
            rows.push(ReportRow {
                n,
                lhs,
                rhs_center_one: r1,
                rhs_center_eleven_twelfths: r11,
                lhs_below_one: lhs < r1,
                lhs_below_eleven_twelfths: lhs < r11,
                rhs_ratio: r11 / r1,
            });
        }
        if next.peek().is_none() {
            break;
        }
    }
    Ok(rows)
}

/// Parses a one-value-per-line sequence file; blank lines and `#` comments
/// are skipped, anything negative or non-finite is rejected.
pub fn parse_sequence_file(content: &str) -> Result<Vec<f64>> {
    let mut values = Vec::new();
    for (lineno, line) in content.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let v: f64 = line
            .parse()
            .map_err(|_| Error::Parse(format!("line {}: not a number: {line}", lineno + 1)))?;
        if !v.is_finite() || v < 0.0 {
            return Err(Error::InvalidSequenceEntry {
                index: lineno + 1,
                value: v,
            });
        }
        values.push(v);
    }
    if values.is_empty() {
        return Err(Error::Domain("sequence file has no entries".into()));
    }
    Ok(values)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_sequence_sum() {
        // Geometric mean of equal values is the value itself.
        let seq = SequenceSpec::custom(vec![0.7; 40], 40).unwrap();
        let s = geometric_mean_sum(&seq).unwrap();
        assert!((s - 40.0 * 0.7).abs() < 1e-9);
    }

    #[test]
    fn zero_tail_annihilates() {
        let seq = SequenceSpec::custom(vec![1.0, 0.0, 5.0], 3).unwrap();
        // Only n = 1 contributes; later products all contain the zero.
        assert_eq!(geometric_mean_sum(&seq).unwrap(), 1.0);
    }

    #[test]
    fn all_zero_rejected() {
        assert!(matches!(
            SequenceSpec::custom(vec![0.0, 0.0], 2),
            Err(Error::SequenceAllZero)
        ));
    }

    #[test]
    fn geometric_closed_form() {
        // (a_1 ... a_n)^(1/n) = r^((n+1)/2) for a_n = r^n.
        let r: f64 = 0.5;
        let n_terms = 50;
        let seq = SequenceSpec::geometric(r, n_terms).unwrap();
        let harness = geometric_mean_sum(&seq).unwrap();
        let direct: f64 = (1..=n_terms).map(|n| r.powf((n as f64 + 1.0) / 2.0)).sum();
        assert!((harness - direct).abs() <= 1e-12);
    }

    #[test]
    fn weight_m1_center_one() {
        // b_1 = 1/2, so the m = 1 weight is 1 - (1/2)/(n+1).
        let b = weight_coeffs(&b_table(1).unwrap(), 1).unwrap();
        for n in 1..=5 {
            let expected = 1.0 - 0.5 / (n as f64 + 1.0);
            assert!((weight(&b, 1.0, n) - expected).abs() < 1e-15);
        }
    }

    #[test]
    fn weight_m2_center_eleven_twelfths() {
        // d_2 = 0, so the m = 2 weight collapses to 1 - (1/2)/(n + 11/12).
        let d = weight_coeffs(&d_table(2).unwrap(), 2).unwrap();
        for n in 1..=5 {
            let expected = 1.0 - 0.5 / (n as f64 + 11.0 / 12.0);
            assert!((weight(&d, 11.0 / 12.0, n) - expected).abs() < 1e-15);
        }
    }

    #[test]
    fn recentred_weights_are_smaller() {
        // Pointwise weight(11/12) < weight(1) is equivalent to
        // S_m(n) > sigma_m(n) at integer arguments. The difference falls
        // below f64 resolution already around m = 7, n = 46, so the strict
        // comparison is decided exactly; the floating weights only need to
        // agree within rounding.
        let b_exact = b_table(10).unwrap();
        let d_exact = d_table(10).unwrap();
        for m in 1..=10 {
            let b = weight_coeffs(&b_table(m).unwrap(), m).unwrap();
            let d = weight_coeffs(&d_table(m).unwrap(), m).unwrap();
            for n in 1..=50usize {
                let x = crate::exactnum::rat(n as i64, 1);
                let delta = crate::series::delta(&b_exact, &d_exact, m, &x).unwrap();
                assert!(num_traits::Signed::is_positive(&delta), "m={m} n={n}");
                let gap = weight(&b, 1.0, n) - weight(&d, 11.0 / 12.0, n);
                assert!(gap > -1e-15, "m={m} n={n}: float weights disagree: {gap}");
            }
        }
    }

    #[test]
    fn report_rows_hold_inequalities() {
        let seq = SequenceSpec::power(2.0, 1000).unwrap();
        let rows = inequality_report(&seq, 4, &[10, 100, 1000]).unwrap();
        assert_eq!(rows.len(), 3);
        for row in &rows {
            assert!(row.lhs_below_one);
            assert!(row.lhs_below_eleven_twelfths);
            assert!(row.rhs_ratio <= 1.0);
        }
    }

    #[test]
    fn increasing_m_tightens_center_one() {
        let seq = SequenceSpec::geometric(0.5, 100).unwrap();
        let mut last = f64::INFINITY;
        for m in 1..=8 {
            let rhs = refined_rhs(&seq, m, Center::One).unwrap();
            assert!(rhs < last, "m={m}");
            last = rhs;
        }
    }

    #[test]
    fn sequence_file_parsing() {
        let values = parse_sequence_file("1.0\n# comment\n\n0.25\n3e-2\n").unwrap();
        assert_eq!(values, vec![1.0, 0.25, 0.03]);
        assert!(parse_sequence_file("1.0\n-2.0\n").is_err());
        assert!(parse_sequence_file("abc\n").is_err());
        assert!(parse_sequence_file("# nothing\n").is_err());
    }

    #[test]
    fn invalid_families_rejected() {
        assert!(SequenceSpec::power(1.0, 10).is_err());
        assert!(SequenceSpec::geometric(1.0, 10).is_err());
        assert!(SequenceSpec::geometric(0.0, 10).is_err());
        assert!(SequenceSpec::custom(vec![1.0, f64::NAN], 2).is_err());
        assert!(SequenceSpec::custom(vec![1.0, -0.5], 2).is_err());
    }
}
