//! End-to-end tests of the batch interface: golden outputs, exit codes and
//! byte-level determinism of reports.

use std::path::PathBuf;
use std::process::{Command, Output};

fn exactlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_exactlab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    assert!(
        out.status.success(),
        "command failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is a JSON report")
}

fn write_temp(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("exactlab-test-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).expect("temp file writes");
    path
}

#[test]
fn matrix_mul_reproduces_the_worked_column() {
    let a = write_temp("a.json", r#"[["9","6","7"],["8","-5","4"],["0","-1","2"]]"#);
    let b = write_temp("b.json", r#"[["1"],["-4"],["-5"]]"#);
    let out = exactlab(&[
        "matrix",
        "mul",
        "--a",
        a.to_str().unwrap(),
        "--b",
        b.to_str().unwrap(),
    ]);
    let report = stdout_json(&out);
    assert_eq!(
        report["result"]["matrix"],
        serde_json::json!([["-50"], ["8"], ["-6"]])
    );
}

#[test]
fn perm_compose_applies_q_first() {
    let out = exactlab(&["perm", "compose", "--p", "2 3 1", "--q", "2 1 3"]);
    let report = stdout_json(&out);
    assert_eq!(report["result"]["image"], "3 2 1");
}

#[test]
fn real_sup_finds_the_square_root_of_two() {
    let out = exactlab(&[
        "real",
        "sup",
        "--bracket",
        "1,2",
        "--steps",
        "20",
        "--predicate",
        "sq_ge:2",
    ]);
    let report = stdout_json(&out);
    let decimal: f64 = report["result"]["decimal"]
        .as_str()
        .unwrap()
        .parse()
        .unwrap();
    assert!((decimal - std::f64::consts::SQRT_2).abs() <= 0.5f64.powi(20));
}

#[test]
fn real_approx_returns_the_modulus_term() {
    let out = exactlab(&["real", "approx", "--real", "recip-succ", "--eps", "1/2"]);
    let report = stdout_json(&out);
    assert_eq!(report["result"]["approx"], "1/7");
    assert_eq!(report["diagnostics"]["index"], 6);
}

#[test]
fn quotient_partition_pairs_square_classes() {
    let out = exactlab(&[
        "quotient",
        "partition",
        "--carrier",
        "-2,-1,0,1,2",
        "--relation",
        "square",
    ]);
    let report = stdout_json(&out);
    assert_eq!(
        report["result"]["classes"],
        serde_json::json!([[-2, 2], [-1, 1], [0]])
    );
}

#[test]
fn quotient_partition_rejects_non_equivalences() {
    let out = exactlab(&[
        "quotient",
        "partition",
        "--carrier",
        "0,1,2",
        "--relation",
        "le",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("not an equivalence"), "stderr: {err}");
}

#[test]
fn metric_net_covers_the_integer_line() {
    let mut dist_rows = Vec::new();
    for i in 0..10i64 {
        let row: Vec<String> = (0..10).map(|j| format!("\"{}\"", (i - j).abs())).collect();
        dist_rows.push(format!("[{}]", row.join(",")));
    }
    let points: Vec<String> = (0..10).map(|i| format!("\"{i}\"")).collect();
    let space = format!(
        r#"{{"points":[{}],"dist":[{}]}}"#,
        points.join(","),
        dist_rows.join(",")
    );
    let path = write_temp("space.json", &space);
    let out = exactlab(&[
        "metric",
        "net",
        "--space",
        path.to_str().unwrap(),
        "--eps",
        "5/2",
    ]);
    let report = stdout_json(&out);
    assert_eq!(report["result"]["centers"], serde_json::json!(["0", "3", "6", "9"]));
    assert_eq!(report["diagnostics"]["metric_verified"], true);
}

#[test]
fn measure_integrate_evaluates_the_two_step_function() {
    let simple = write_temp(
        "simple.json",
        r#"[{"value":"2","support":[["0","1"]]},{"value":"5","support":[["1","3"]]}]"#,
    );
    let over = write_temp("over.json", r#"[["0","3"]]"#);
    let out = exactlab(&[
        "measure",
        "integrate",
        "--simple",
        simple.to_str().unwrap(),
        "--over",
        over.to_str().unwrap(),
    ]);
    let report = stdout_json(&out);
    assert_eq!(report["result"]["integral"], "12");
}

#[test]
fn norms_run_on_csv_and_json_inputs() {
    // f(x) = x on [0, 1] with 65 samples, as CSV.
    let mut csv = String::new();
    for i in 0..65 {
        let x = i as f64 / 64.0;
        csv.push_str(&format!("{x},{x}\n"));
    }
    let path = write_temp("f.csv", &csv);
    let out = exactlab(&[
        "norms",
        "lp",
        "--input",
        path.to_str().unwrap(),
        "--p",
        "inf",
    ]);
    let report = stdout_json(&out);
    assert_eq!(report["result"]["norm"], "1");

    let out = exactlab(&[
        "norms",
        "omega",
        "--input",
        path.to_str().unwrap(),
        "--m",
        "1",
        "--p",
        "inf",
        "--t",
        "0.25",
    ]);
    let report = stdout_json(&out);
    assert_eq!(report["result"]["omega"], "0.25");
}

#[test]
fn dist_apply_evaluates_the_step_derivative_pairing() {
    let out = exactlab(&[
        "dist",
        "apply",
        "--functional",
        "regular:heaviside",
        "--testfn",
        "bump:0,1",
        "--derivative",
        "1",
    ]);
    let report = stdout_json(&out);
    let v: f64 = report["result"]["value"].as_str().unwrap().parse().unwrap();
    assert!((v - (-1.0f64).exp()).abs() < 1e-5);
}

#[test]
fn fourier_evaluates_the_gaussian_transform() {
    let grid: Vec<String> = (0..1025)
        .map(|i| {
            let x = -8.0 + i as f64 * (16.0 / 1024.0);
            format!("{}", (-x * x / 2.0).exp())
        })
        .collect();
    let json = format!(
        r#"{{"dim":1,"origin":[-8.0],"spacing":{},"shape":[1025],"values":[{}]}}"#,
        16.0 / 1024.0,
        grid.join(",")
    );
    let path = write_temp("gauss.json", &json);
    let out = exactlab(&[
        "fourier",
        "--input",
        path.to_str().unwrap(),
        "--at",
        "0,1,2",
    ]);
    let report = stdout_json(&out);
    let transform = report["result"]["transform"].as_array().unwrap();
    for (i, y) in [0.0f64, 1.0, 2.0].iter().enumerate() {
        let re: f64 = transform[i]["re"].as_str().unwrap().parse().unwrap();
        assert!((re - (-y * y / 2.0).exp()).abs() < 1e-4, "at {y}");
    }
}

#[test]
fn usage_errors_exit_two() {
    let out = exactlab(&["matrix", "frobenius"]);
    assert_eq!(out.status.code(), Some(2));
    let out = exactlab(&["norms", "lp", "--input", "f.json", "--p", "2", "--bogus"]);
    assert_eq!(out.status.code(), Some(2));
    let out = exactlab(&[]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn domain_errors_exit_one_without_panicking() {
    // Unreadable input file.
    let out = exactlab(&["norms", "lp", "--input", "/nonexistent.json", "--p", "2"]);
    assert_eq!(out.status.code(), Some(1));

    // Singular matrix.
    let a = write_temp("singular.json", r#"[["1","2"],["2","4"]]"#);
    let out = exactlab(&["matrix", "inv", "--a", a.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("singular"));

    // Malformed JSON must not panic.
    let bad = write_temp("bad.json", "not json at all");
    let out = exactlab(&["matrix", "inv", "--a", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(!String::from_utf8_lossy(&out.stderr).contains("panic"));
}

#[test]
fn reports_are_byte_for_byte_deterministic() {
    let run = || {
        exactlab(&[
            "real",
            "sup",
            "--bracket",
            "1,2",
            "--steps",
            "30",
            "--predicate",
            "sq_ge:2",
        ])
        .stdout
    };
    let first = run();
    let second = run();
    assert_eq!(first, second);
    assert!(!first.is_empty());
}
