use carleman_core::certify::{certify_positivity, CertMethod, Certificate};

use super::Ctx;
use crate::output::emit;
use crate::{Failure, Format};

pub fn certificates(lo: usize, hi: usize) -> Result<Vec<Certificate>, Failure> {
    if lo < 1 || hi < lo {
        return Err(Failure::usage("need 1 <= m <= m-max"));
    }
    let mut certs = Vec::with_capacity(hi - lo + 1);
    for m in lo..=hi {
        certs.push(certify_positivity(m)?);
    }
    Ok(certs)
}

pub fn run(ctx: &Ctx, lo: usize, hi: usize) -> Result<(), Failure> {
    let certs = certificates(lo, hi)?;
    let content = render(&certs, ctx.format);
    emit(ctx.out.as_deref(), &content)?;
    let failed: Vec<usize> = certs.iter().filter(|c| !c.certified).map(|c| c.m).collect();
    if !failed.is_empty() {
        return Err(Failure::Check(format!(
            "certification failed for m in {failed:?}"
        )));
    }
    Ok(())
}

pub fn render(certs: &[Certificate], format: Format) -> String {
    match format {
        Format::Json => {
            let v: Vec<_> = certs.iter().map(Certificate::to_json).collect();
            format!(
                "{}\n",
                serde_json::to_string_pretty(&serde_json::Value::Array(v)).expect("json")
            )
        }
        Format::Csv => {
            let mut out = String::from("m,certified,method,degree,positive_roots,sample_at_one\n");
            for c in certs {
                out.push_str(&format!(
                    "{},{},{},{},{},{}\n",
                    c.m,
                    c.certified,
                    method_name(c.method),
                    c.numerator.degree(),
                    c.positive_roots_found,
                    c.sample_at_one
                ));
            }
            out
        }
        Format::Text => {
            let mut out = String::new();
            for c in certs {
                out.push_str(&format!(
                    "m = {:<3} {} via {} (numerator degree {}, {} vanished degrees{})\n",
                    c.m,
                    if c.certified {
                        "certified"
                    } else {
                        "NOT CERTIFIED"
                    },
                    method_name(c.method),
                    c.numerator.degree(),
                    c.vanished_degrees.len(),
                    if c.t_power_removed > 0 {
                        format!(", t^{} cancelled", c.t_power_removed)
                    } else {
                        String::new()
                    }
                ));
            }
            let ok = certs.iter().filter(|c| c.certified).count();
            out.push_str(&format!("{ok}/{} orders certified\n", certs.len()));
            out
        }
    }
}

fn method_name(m: CertMethod) -> &'static str {
    match m {
        CertMethod::AllCoeffsNonneg => "all_coeffs_nonneg",
        CertMethod::SturmNoRoots => "sturm_no_roots",
    }
}
