//! End-to-end tests of the binary: output shapes, exit codes, determinism.

use std::process::{Command, Output};

fn carleman(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_carleman"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn coeffs_d_json_matches_published_values() {
    let out = carleman(&["coeffs", "--kind", "d", "--count", "4", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["kind"], "d");
    assert_eq!(v["derivation"], "binomial_transform");
    let values: Vec<&str> = v["values"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_str().unwrap())
        .collect();
    assert_eq!(values, ["1/2", "0", "5/288", "139/17280"]);
}

#[test]
fn coeffs_csv_has_exact_and_decimal_columns() {
    let out = carleman(&["coeffs", "--kind", "b", "--count", "3", "--format", "csv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("k,exact,decimal"));
    assert_eq!(lines.next(), Some("1,1/2,0.500000000000"));
    assert!(lines.next().unwrap().starts_with("2,1/24,"));
}

#[test]
fn certify_m2_single_certificate() {
    let out = carleman(&["certify", "--m", "2", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v[0]["m"], 2);
    assert_eq!(v[0]["certified"], true);
    assert_eq!(v[0]["numerator"].as_array().unwrap().len(), 1);
    assert_eq!(v[0]["numerator"][0], "1/288");
}

#[test]
fn certify_range_all_pass() {
    let out = carleman(&["certify", "--m-max", "8"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("8/8 orders certified"));
}

#[test]
fn verify_exact_small_grid_passes() {
    let out = carleman(&["verify", "--m-max", "3", "--points", "10"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("m,x,sigma,S,delta,positive"));
    // Exact rationals, never floats, in the CSV body.
    let second = text.lines().nth(1).unwrap();
    assert!(second.contains("1/1000"));
    assert!(second.ends_with("true"));
}

#[test]
fn verify_float_mode_loses_resolution_at_high_order() {
    // At m = 20 near x = 1000 the true delta is ~1e-63: far below f64
    // resolution of the two partial sums. The floating path must report the
    // failure honestly (exit 1) where the exact path proves positivity.
    let float = carleman(&["verify", "--m-max", "20", "--points", "40", "--float"]);
    assert_eq!(float.status.code(), Some(1));

    let exact = carleman(&["verify", "--m-max", "20", "--points", "40"]);
    assert_eq!(exact.status.code(), Some(0));
}

#[test]
fn identities_subcommand_passes() {
    let out = carleman(&["identities", "--m-list", "2,3", "--x-list", "0.5,1"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("12/12 identities pass"));
}

#[test]
fn harness_csv_shape() {
    let out = carleman(&[
        "carleman", "--family", "geom:0.5", "--terms", "100", "--m", "1",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with(
        "N,lhs,rhs_center1,rhs_center11_12,lhs_lt_center1,lhs_lt_center11_12,rhs_ratio"
    ));
    assert_eq!(text.lines().count(), 3); // header + N=10 + N=100
    for line in text.lines().skip(1) {
        assert!(line.contains("true,true"));
    }
}

#[test]
fn harness_reads_sequence_files() {
    let dir = std::env::temp_dir().join("carleman-cli-seq-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("seq.txt");
    std::fs::write(&path, "1.0\n0.5\n0.25\n0.125\n").unwrap();
    let family = format!("file:{}", path.display());
    let out = carleman(&[
        "carleman", "--family", &family, "--terms", "4", "--m", "1", "--sweep", "4",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().count(), 2);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(carleman(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        carleman(&["coeffs", "--kind", "q", "--count", "3"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        carleman(&["coeffs", "--kind", "b", "--count", "0"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        carleman(&["carleman", "--family", "power:0.5", "--terms", "10"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        carleman(&["verify", "--digits", "10"]).status.code(),
        Some(2)
    );
    assert_eq!(carleman(&["report"]).status.code(), Some(2));
}

#[test]
fn outputs_are_byte_identical_across_runs() {
    let a = carleman(&["coeffs", "--kind", "d", "--count", "16", "--format", "json"]);
    let b = carleman(&["coeffs", "--kind", "d", "--count", "16", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);

    let a = carleman(&["check-integrals", "--k-max", "4", "--format", "csv"]);
    let b = carleman(&["check-integrals", "--k-max", "4", "--format", "csv"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn report_bundle_is_deterministic() {
    let base = std::env::temp_dir().join("carleman-cli-report-test");
    let dir_a = base.join("a");
    let dir_b = base.join("b");
    for dir in [&dir_a, &dir_b] {
        if dir.exists() {
            std::fs::remove_dir_all(dir).unwrap();
        }
        let out = carleman(&[
            "report",
            "--out",
            dir.to_str().unwrap(),
            "--m-max-cert",
            "6",
        ]);
        assert!(
            out.status.success(),
            "report failed: {}",
            String::from_utf8_lossy(&out.stderr)
        );
        assert!(stdout(&out).contains("overall: pass"));
    }
    let mut names: Vec<String> = std::fs::read_dir(&dir_a)
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    names.sort();
    assert!(names.contains(&"summary.txt".to_string()));
    assert!(names.contains(&"verify.csv".to_string()));
    assert!(names.contains(&"discrepancies.json".to_string()));
    for name in names {
        let a = std::fs::read(dir_a.join(&name)).unwrap();
        let b = std::fs::read(dir_b.join(&name)).unwrap();
        assert_eq!(a, b, "{name} differs between runs");
    }
}
