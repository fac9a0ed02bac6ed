//! The `report` subcommand: the full verification bundle in one directory.
//!
//! Contents: both coefficient tables (JSON and CSV), the integral identity
//! checks, the decomposition checks, certificates through the requested
//! order, the exact grid sweep, the discrepancy report, and a one-page
//! summary. Every file is deterministic for a fixed configuration.

use std::fs;
use std::path::Path;

use carleman_core::coeffs::{b_table, d_table};
use carleman_core::report::discrepancy_report;

use super::{certify, coeffs, harness, identities, integrals, verify, Ctx};
use crate::{Failure, Format};

struct Section {
    name: &'static str,
    passed: bool,
    detail: String,
}

pub fn run(ctx: &Ctx, m_max_cert: usize) -> Result<(), Failure> {
    let dir = ctx
        .out
        .as_deref()
        .ok_or_else(|| Failure::usage("report requires --out DIR"))?;
    fs::create_dir_all(dir)?;

    let mut sections = Vec::new();

    // Coefficient tables, both formats.
    let b = b_table(32)?;
    let d = d_table(32)?;
    write(dir, "coeffs_b.json", &coeffs::render(&b, 12, Format::Json)?)?;
    write(dir, "coeffs_b.csv", &coeffs::render(&b, 12, Format::Csv)?)?;
    write(dir, "coeffs_d.json", &coeffs::render(&d, 12, Format::Json)?)?;
    write(dir, "coeffs_d.csv", &coeffs::render(&d, 12, Format::Csv)?)?;
    sections.push(Section {
        name: "coefficient tables",
        passed: true,
        detail: "b and d through k = 32, exact".into(),
    });

    // Integral identities.
    let lines = integrals::check_lines(ctx, 20)?;
    write(
        dir,
        "integrals.json",
        &integrals::render(&lines, Format::Json),
    )?;
    write(
        dir,
        "integrals.txt",
        &integrals::render(&lines, Format::Text),
    )?;
    let ok = lines.iter().filter(|l| l.pass).count();
    sections.push(Section {
        name: "integral identities",
        passed: ok == lines.len(),
        detail: format!("{ok}/{} identities within tolerance", lines.len()),
    });

    // Decomposition identities.
    let dec = identities::check_lines(ctx, &[2, 3, 8, 10], &[0.25, 1.0, 2.0, 100.0])?;
    write(
        dir,
        "identities.json",
        &integrals::render(&dec, Format::Json),
    )?;
    write(
        dir,
        "identities.txt",
        &integrals::render(&dec, Format::Text),
    )?;
    let ok = dec.iter().filter(|l| l.pass).count();
    sections.push(Section {
        name: "series decompositions",
        passed: ok == dec.len(),
        detail: format!("{ok}/{} decomposition checks within tolerance", dec.len()),
    });

    // Certificates.
    let certs = certify::certificates(1, m_max_cert)?;
    write(
        dir,
        "certificates.json",
        &certify::render(&certs, Format::Json),
    )?;
    write(
        dir,
        "certificates.txt",
        &certify::render(&certs, Format::Text),
    )?;
    let ok = certs.iter().filter(|c| c.certified).count();
    sections.push(Section {
        name: "positivity certificates",
        passed: ok == certs.len(),
        detail: format!("{ok}/{} orders certified (m <= {m_max_cert})", certs.len()),
    });

    // Exact grid sweep.
    let sweep = verify::sweep(20, "1/1000", "1000", 200, false)?;
    write(dir, "verify.csv", &sweep.csv)?;
    sections.push(Section {
        name: "grid positivity",
        passed: sweep.positive == sweep.rows,
        detail: format!("{}/{} deltas positive", sweep.positive, sweep.rows),
    });

    // Carleman harness on the standard sequences.
    let power = harness::parse_family("power:2", 10_000)?;
    let rows_p = carleman_core::carleman::inequality_report(&power, 4, &[10, 100, 1000, 10_000])?;
    let geo = harness::parse_family("geom:0.5", 100)?;
    let rows_g = carleman_core::carleman::inequality_report(&geo, 4, &[10, 50, 100])?;
    write(
        dir,
        "carleman_power2.csv",
        &harness::render(&rows_p, Format::Csv),
    )?;
    write(
        dir,
        "carleman_geom05.csv",
        &harness::render(&rows_g, Format::Csv),
    )?;
    let all_rows_ok = rows_p
        .iter()
        .chain(&rows_g)
        .all(|r| r.lhs_below_one && r.lhs_below_eleven_twelfths && r.rhs_ratio <= 1.0);
    sections.push(Section {
        name: "inequality harness",
        passed: all_rows_ok,
        detail: format!(
            "{} truncation rows, refined bounds hold on all",
            rows_p.len() + rows_g.len()
        ),
    });

    // Discrepancy report.
    let disc = discrepancy_report()?;
    write(
        dir,
        "discrepancies.json",
        &format!(
            "{}\n",
            serde_json::to_string_pretty(&disc.to_json()).expect("json")
        ),
    )?;
    write(dir, "discrepancies.txt", &disc.to_text())?;
    sections.push(Section {
        name: "discrepancy report",
        passed: true,
        detail: format!("{} published values flagged", disc.rows.len()),
    });

    // Summary.
    let all_passed = sections.iter().all(|s| s.passed);
    let mut summary = String::from("verification bundle summary\n");
    for s in &sections {
        summary.push_str(&format!(
            "  [{}] {:<24} {}\n",
            if s.passed { "pass" } else { "FAIL" },
            s.name,
            s.detail
        ));
    }
    summary.push_str(&format!(
        "overall: {}\n",
        if all_passed { "pass" } else { "FAIL" }
    ));
    write(dir, "summary.txt", &summary)?;
    print!("{summary}");

    if !all_passed {
        return Err(Failure::Check("one or more report sections failed".into()));
    }
    Ok(())
}

fn write(dir: &Path, name: &str, content: &str) -> Result<(), Failure> {
    fs::write(dir.join(name), content)?;
    Ok(())
}
