//! Side-by-side comparison of recomputed values against the published table
//! entries they contradict.
//!
//! Three published numbers fail exact recomputation, all in the order-4
//! worked example: the printed `b_4 = 73/5670` (the recursion gives
//! `73/5760`), the printed degree-4 numerator coefficient `89/60480` (exact
//! recomputation gives 0), and the row conversion `139/17280 =
//! 14630/1814400` (the correct multiplier is `139 * 105 = 14595`). The
//! report shows each recomputation next to the printed value; it never
//! alters engine values, and the positivity conclusion is unaffected either
//! way because the surviving numerator coefficients are all positive.

use num_traits::Signed;
use serde_json::json;

use crate::certify::certify_positivity;
use crate::coeffs::{b_table, d_from_b};
use crate::error::Result;
use crate::exactnum::rat;

/// One contested value: what the engine computes, what was published, and
/// the evidence distinguishing them.
#[derive(Clone, Debug)]
pub struct DiscrepancyRow {
    pub id: &'static str,
    pub computed: String,
    pub published: String,
    pub detail: String,
    /// Whether the difference changes the positivity conclusion.
    pub affects_conclusion: bool,
}

/// The full discrepancy report.
#[derive(Clone, Debug)]
pub struct DiscrepancyReport {
    pub rows: Vec<DiscrepancyRow>,
    pub conclusion: String,
}

impl DiscrepancyReport {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "rows": self.rows.iter().map(|r| json!({
                "id": r.id,
                "computed": r.computed,
                "published": r.published,
                "detail": r.detail,
                "affects_conclusion": r.affects_conclusion,
            })).collect::<Vec<_>>(),
            "conclusion": self.conclusion,
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str("discrepancy report: recomputed vs published values\n");
        for r in &self.rows {
            out.push_str(&format!(
                "- {}\n    computed:  {}\n    published: {}\n    {}\n",
                r.id, r.computed, r.published, r.detail
            ));
        }
        out.push_str(&format!("conclusion: {}\n", self.conclusion));
        out
    }
}

/// Builds the report from live engine values.
pub fn discrepancy_report() -> Result<DiscrepancyReport> {
    let b = b_table(4)?;
    let b4 = b.get(4)?;
    let b4_published = rat(73, 5670);

    // Which b_4 reproduces the published d_4 = 139/17280 through the
    // binomial transform? Only the recursion's.
    let d4_from_engine = d_from_b(4, b.values());
    let mut with_published = b.values().to_vec();
    with_published[3] = b4_published.clone();
    let d4_from_published = d_from_b(4, &with_published);

    let cert = certify_positivity(4)?;
    let n4 = &cert.numerator;
    let t4_with_published_b4 = rat(0, 1) - (&b4_published - b4);

    let rows = vec![
        DiscrepancyRow {
            id: "b4",
            computed: format!("b_4 = {b4} (recursion)"),
            published: format!("b_4 = {b4_published}"),
            detail: format!(
                "transform consistency favors the recursion: with b_4 = {b4} the \
                 published d_4 = {d4_from_engine} is reproduced exactly; with \
                 b_4 = {b4_published} it would be {d4_from_published}"
            ),
            affects_conclusion: false,
        },
        DiscrepancyRow {
            id: "numerator-t4-coefficient",
            computed: "0 (exact cancellation)".into(),
            published: "89/60480".into(),
            detail: format!(
                "the degree-4 coefficient of the order-4 numerator cancels exactly; \
                 with the published b_4 it would be {t4_with_published_b4} < 0, and the \
                 published entries themselves sum to -330/1814400, not 2670/1814400"
            ),
            affects_conclusion: false,
        },
        DiscrepancyRow {
            id: "row-arithmetic",
            computed: "139/17280 = 14595/1814400 (139 * 105 = 14595)".into(),
            published: "139/17280 = 14630/1814400".into(),
            detail: "the published consolidation row scales 139/17280 by 1814400/17280 = 105 \
                     but records 14630 instead of 14595"
                .into(),
            affects_conclusion: false,
        },
    ];

    let all_positive = n4.coeffs().iter().all(|c| c.is_positive());
    let conclusion = format!(
        "positivity of the order-4 difference is unaffected: the surviving numerator \
         coefficients [{}] are {} positive and the certificate is {}",
        n4.coeffs()
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(", "),
        if all_positive { "all" } else { "NOT all" },
        if cert.certified { "valid" } else { "INVALID" },
    );

    Ok(DiscrepancyReport { rows, conclusion })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_contains_all_three_rows() {
        let rep = discrepancy_report().unwrap();
        assert_eq!(rep.rows.len(), 3);
        let ids: Vec<_> = rep.rows.iter().map(|r| r.id).collect();
        assert_eq!(ids, ["b4", "numerator-t4-coefficient", "row-arithmetic"]);
        assert!(rep.rows.iter().all(|r| !r.affects_conclusion));
    }

    #[test]
    fn b4_row_distinguishes_the_candidates() {
        let rep = discrepancy_report().unwrap();
        let row = &rep.rows[0];
        assert!(row.computed.contains("73/5760"));
        assert!(row.published.contains("73/5670"));
        assert!(row.detail.contains("139/17280"));
        assert!(row.detail.contains("187/22680"));
    }

    #[test]
    fn t4_row_shows_exact_zero_and_negative_alternative() {
        let rep = discrepancy_report().unwrap();
        let row = &rep.rows[1];
        assert!(row.computed.starts_with('0'));
        assert_eq!(row.published, "89/60480");
        assert!(row.detail.contains("-73/362880"));
    }

    #[test]
    fn conclusion_reports_positive_survivors() {
        let rep = discrepancy_report().unwrap();
        assert!(rep.conclusion.contains("all positive"));
        assert!(rep.conclusion.contains("139/358318080"));
        assert!(rep.conclusion.contains("79/23040"));
        assert!(rep.conclusion.contains("valid"));
    }

    #[test]
    fn json_round_trip_shape() {
        let rep = discrepancy_report().unwrap();
        let v = rep.to_json();
        assert_eq!(v["rows"][0]["id"], "b4");
        assert!(v["conclusion"].as_str().unwrap().contains("unaffected"));
        let text = rep.to_text();
        assert!(text.contains("published: b_4 = 73/5670"));
    }
}
