use carleman_core::coeffs::{b_table, coeff_decimal, d_table, CoeffTable, Derivation};

use super::Ctx;
use crate::output::emit;
use crate::{Failure, Format};

pub fn run(ctx: &Ctx, kind: &str, count: usize, decimal_digits: usize) -> Result<(), Failure> {
    let table = match kind {
        "b" => b_table(count)?,
        "d" => d_table(count)?,
        other => return Err(Failure::usage(format!("kind must be b or d, got {other}"))),
    };
    let content = render(&table, decimal_digits, ctx.format)?;
    emit(ctx.out.as_deref(), &content)
}

pub fn render(
    table: &CoeffTable,
    decimal_digits: usize,
    format: Format,
) -> Result<String, Failure> {
    let derivation = match table.derivation() {
        Derivation::Recursion => "recursion",
        Derivation::BinomialTransform => "binomial_transform",
    };
    let decimals: Vec<String> = (1..=table.len())
        .map(|k| coeff_decimal(table, k, decimal_digits).map_err(Failure::from))
        .collect::<Result<_, _>>()?;

    Ok(match format {
        Format::Json => {
            let v = serde_json::json!({
                "kind": table.kind().name(),
                "values": table.values().iter().map(|r| r.to_string()).collect::<Vec<_>>(),
                "decimal": decimals,
                "derivation": derivation,
            });
            format!("{}\n", serde_json::to_string_pretty(&v).expect("json"))
        }
        Format::Csv => {
            let mut out = String::from("k,exact,decimal\n");
            for (i, value) in table.values().iter().enumerate() {
                out.push_str(&format!("{},{},{}\n", i + 1, value, decimals[i]));
            }
            out
        }
        Format::Text => {
            let mut out = format!(
                "{} coefficients (derivation: {derivation})\n",
                table.kind().name()
            );
            for (i, value) in table.values().iter().enumerate() {
                out.push_str(&format!(
                    "  {}_{:<3} = {:>18}  ({})\n",
                    table.kind().name(),
                    i + 1,
                    value.to_string(),
                    decimals[i]
                ));
            }
            out
        }
    })
}
