use std::process::{Command, Output};

fn qdet(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qdet"))
        .args(args)
        .env_remove("QDET_JOBS")
        .output()
        .expect("failed to run qdet")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn matrix_text_grid() {
    let o = qdet(&["matrix", "--kind", "floor-qint", "-a", "1", "-n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 3);
    assert!(text.contains("-q^-1"));
    assert!(text.contains("-q^-1 - q^-2"));
}

#[test]
fn matrix_json_in_t() {
    let o = qdet(&["matrix", "--kind", "q-fractional", "-a", "1", "-n", "3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["variable"], "t");
    assert_eq!(v["kind"], "Q_FRACTIONAL");
    let entries = v["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 3);
    assert_eq!(entries[0], serde_json::json!(["t^-2", "1", "t^-1"]));
}

#[test]
fn matrix_csv_rows() {
    let o = qdet(&["matrix", "--kind", "ceil-power", "-a", "-2", "-n", "5", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let mut r = csv::ReaderBuilder::new()
        .has_headers(false)
        .from_reader(o.stdout.as_slice());
    let rows: Vec<csv::StringRecord> = r.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 5);
    assert!(rows.iter().all(|row| row.len() == 5));
}

#[test]
fn even_order_rejected() {
    let o = qdet(&["matrix", "--kind", "floor-qint", "-a", "1", "-n", "4"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("n must be odd"));
}

#[test]
fn bad_flags_exit_two() {
    assert_eq!(qdet(&["matrix", "--kind", "no-such-kind", "-a", "1", "-n", "3"]).status.code(), Some(2));
    assert_eq!(qdet(&["det", "-a", "1", "-n", "3"]).status.code(), Some(2));
    assert_eq!(qdet(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn det_values() {
    let o = qdet(&["det", "--kind", "floor-qint", "-a", "1", "-n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "q^-4");

    let o = qdet(&["det", "--kind", "floor-qint", "-a", "2", "-n", "3"]);
    assert_eq!(stdout(&o).trim(), "0");

    let o = qdet(&["det", "--kind", "ceil-qint", "-a", "1", "-n", "3", "--expected"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "-q  PASS");
}

#[test]
fn det_expected_other_kinds() {
    for kind in ["floor-x", "ceil-x", "q-fractional", "floor-qint"] {
        let o = qdet(&["det", "--kind", kind, "-a", "-3", "-n", "7", "--expected"]);
        assert_eq!(o.status.code(), Some(0), "{kind}: {}", stderr(&o));
        assert!(stdout(&o).trim_end().ends_with("PASS"));
    }
    // no closed form for the power matrices
    let o = qdet(&["det", "--kind", "floor-power", "-a", "1", "-n", "3", "--expected"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn det_json() {
    let o = qdet(&["det", "--kind", "q-fractional", "-a", "1", "-n", "3", "--expected", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["pass"], true);
    assert_eq!(v["det"], v["expected"]);
}

#[test]
fn full_sweep_passes() {
    let o = qdet(&["verify", "--all", "-n", "1..25", "-a", "-6..6"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).trim_end().ends_with("0 failures"));
    assert!(!stdout(&o).contains("FAIL "));
}

#[test]
fn zolotarev_sweep_defaults_to_all_residues() {
    let o = qdet(&["verify", "--identity", "zolotarev", "-n", "1..99"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    // 1 + 3 + ... + 99 cases
    assert!(text.trim_end().ends_with("2500 cases, 493 skipped, 0 failures"), "{text}");
}

#[test]
fn verify_rejects_even_orders() {
    let o = qdet(&["verify", "--identity", "thm-floor", "-n", "2..4"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("offending values: 2, 4"));
}

#[test]
fn verify_config_errors() {
    assert_eq!(qdet(&["verify", "-n", "3"]).status.code(), Some(2));
    assert_eq!(qdet(&["verify", "--identity", "thm-bogus", "-n", "3"]).status.code(), Some(2));
    assert_eq!(qdet(&["verify", "--all", "-n", "3", "--tol", "-1"]).status.code(), Some(2));
    assert_eq!(qdet(&["verify", "--all", "-n", "3", "--jobs", "0"]).status.code(), Some(2));
    assert_eq!(qdet(&["verify", "--all", "-n", "3", "-a", "5..1"]).status.code(), Some(2));
}

#[test]
fn failing_check_exits_one() {
    let o = qdet(&["verify", "--identity", "ucv-factorization", "-n", "5", "-a", "1", "--tol", "1e-300"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL UCV_FACTORIZATION"));
}

#[test]
fn jsonl_schema_and_determinism() {
    let args = ["verify", "--all", "-n", "1..9", "-a", "-3..3", "--format", "json"];
    let run = |jobs: &str| {
        let o = Command::new(env!("CARGO_BIN_EXE_qdet"))
            .args(args)
            .env("QDET_JOBS", jobs)
            .output()
            .unwrap();
        assert_eq!(o.status.code(), Some(0));
        assert!(stderr(&o).contains("0 failures"));
        stdout(&o)
            .lines()
            .map(|l| {
                let mut v: serde_json::Value = serde_json::from_str(l).unwrap();
                for key in ["identity", "a", "n", "pass", "skipped", "lhs", "rhs", "elapsed_ms", "numeric"] {
                    assert!(v.get(key).is_some(), "missing {key} in {l}");
                }
                v.as_object_mut().unwrap().remove("elapsed_ms");
                v
            })
            .collect::<Vec<_>>()
    };
    let one = run("1");
    let three = run("3");
    assert!(!one.is_empty());
    assert_eq!(one, three);
    assert!(one.iter().any(|v| v["numeric"] == true));
    assert!(one.iter().any(|v| v["skipped"] == true));
}

#[test]
fn csv_output_to_file() {
    let dir = std::env::temp_dir().join(format!("qdet-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("reports.csv");
    let o = qdet(&[
        "verify", "--identity", "thm-floor", "--identity", "thm-ceil", "-n", "1..7", "-a", "-2..2",
        "--format", "csv", "--out", path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("40 cases, 0 skipped, 0 failures"));
    let mut r = csv::Reader::from_path(&path).unwrap();
    let header: Vec<String> = r.headers().unwrap().iter().map(String::from).collect();
    assert_eq!(header, ["identity", "a", "n", "pass", "lhs", "rhs", "elapsed_ms"]);
    let rows: Vec<csv::StringRecord> = r.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 40);
    assert!(rows.iter().all(|row| &row[3] == "true"));
    std::fs::remove_dir_all(&dir).unwrap();
}
