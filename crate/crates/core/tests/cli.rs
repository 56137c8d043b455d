use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use zalcman_core::cli::verify_sample;
use zalcman_core::ClassSpec;

fn zalcman(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zalcman"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json report")
}

#[test]
fn verify_hull_convex_passes() {
    let out = zalcman(&[
        "--command", "verify", "--class", "hull_convex", "--samples", "1000", "--seed", "7", "--lambda-grid", "0,1,3 x 8",
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let summary = String::from_utf8_lossy(&out.stderr);
    assert!(summary.starts_with("hull_convex, pairs tested:"), "{summary}");
}

#[test]
fn zero_samples_is_usage_error() {
    let out = zalcman(&["--command", "verify", "--class", "hull_convex", "--samples", "0"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn missing_command_and_bad_class_are_usage_errors() {
    assert_eq!(code(&zalcman(&["--class", "nw"])), 2);
    assert_eq!(code(&zalcman(&["--command", "verify", "--class", "bogus"])), 2);
    assert_eq!(code(&zalcman(&["--command", "verify", "--class", "hull_convex_alpha"])), 2);
}

#[test]
fn injected_nonmember_is_excluded() {
    let out = zalcman(&[
        "--command", "verify", "--class", "hurwitz", "--samples", "2", "--inject", "2=1", "--format", "json",
        "--lambda-grid", "1",
    ]);
    assert_eq!(code(&out), 0);
    let rows = json(&out)["rows"].as_array().unwrap().clone();
    assert_eq!(rows[0]["flag"], "excluded");
    assert!(rows[0]["residual"].as_f64().unwrap() >= 1.0);
    assert_eq!(rows[1]["flag"], "ok");
}

#[test]
fn assertion_failure_exits_1() {
    // one sweep cannot close the gap to the bound
    let out = zalcman(&[
        "--command", "search", "--class", "hull_convex", "--lambda-grid", "3", "--restarts", "1", "--max-iter", "1",
        "--tol", "1e-12",
    ]);
    assert_eq!(code(&out), 1);
}

#[test]
fn extremal_examples() {
    for (class, lam) in [("hull_starlike", "0"), ("nw", "2"), ("hurwitz", "1.3333333333333333")] {
        let out = zalcman(&["--command", "extremal", "--class", class, "--lambda-grid", lam, "--format", "json"]);
        assert_eq!(code(&out), 0, "{class}");
        for row in json(&out)["rows"].as_array().unwrap() {
            assert_eq!(row["pass"], true);
        }
    }
    let out = zalcman(&["--command", "extremal", "--class", "koebe"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn search_reports_small_gap() {
    let out = zalcman(&[
        "--command", "search", "--class", "hull_convex", "--m", "2", "--n", "2", "--lambda-grid", "3", "--format",
        "json",
    ]);
    assert_eq!(code(&out), 0);
    let row = &json(&out)["rows"][0];
    assert!(row["gap"].as_f64().unwrap() <= 1e-6);
    assert_eq!(row["bound"].as_f64().unwrap(), 2.0);
    let params: Value = serde_json::from_str(row["params"].as_str().unwrap()).unwrap();
    assert!(params["atoms"].is_array());
}

#[test]
fn hayman_koebe_final_value() {
    let out = zalcman(&["--command", "hayman", "--function", "koebe", "--deterministic"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    let last = text.lines().last().unwrap();
    let fields: Vec<&str> = last.split(',').collect();
    assert_eq!(fields[0], "20");
    assert!(fields[2].parse::<f64>().unwrap() >= 0.999);
}

#[test]
fn audit_rejects_inadmissible_pair() {
    let out = zalcman(&["--command", "audit", "--n", "5", "--a-n", "1", "--a-2n1", "10"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("hypothesis"));
}

#[test]
fn audit_random_pairs_agree() {
    let out = zalcman(&["--command", "audit", "--n", "2..6", "--samples", "200", "--seed", "3"]);
    assert_eq!(code(&out), 0);
}

#[test]
fn scan_and_ratio_run() {
    let out = zalcman(&[
        "--command", "scan", "--class", "hurwitz", "--predicate", "C", "--param", "1", "--n", "2..8", "--samples", "100",
    ]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines().skip_while(|l| l.starts_with('#'));
    assert_eq!(lines.next(), Some("predicate,param,n,sample_index,slack,violated"));
    assert!(lines.all(|l| l.ends_with("false")));

    let out = zalcman(&["--command", "ratio", "--function", "odd_half_plane", "--n", "50..60", "--format", "json"]);
    assert_eq!(code(&out), 0);
    for row in json(&out)["rows"].as_array().unwrap() {
        assert!(row["ratio"].as_f64().unwrap() <= 1e-3);
    }
}

#[test]
fn timestamp_header_only_without_deterministic() {
    let base = ["--command", "verify", "--class", "nw", "--samples", "2", "--lambda-grid", "1"];
    let with = zalcman(&base);
    assert!(String::from_utf8_lossy(&with.stdout).starts_with("# generated"));
    let mut args = base.to_vec();
    args.push("--deterministic");
    let without = zalcman(&args);
    assert!(String::from_utf8_lossy(&without.stdout).starts_with("class,m,n,"));
}

#[test]
fn rows_regenerate_their_sample() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.csv");
    let out = zalcman(&[
        "--command", "verify", "--class", "hull_starlike", "--samples", "5", "--seed", "42", "--lambda-grid", "0.5",
        "--deterministic", "--out", path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let mut reader = csv::Reader::from_path(Path::new(&path)).unwrap();
    for rec in reader.records() {
        let rec = rec.unwrap();
        let seed: u64 = rec[9].parse().unwrap();
        let index: usize = rec[10].parse().unwrap();
        let value: f64 = rec[5].parse().unwrap();
        let f = verify_sample(&ClassSpec::HullStarlike, 4, seed, index).unwrap();
        let lam = zalcman_core::Complex64::new(rec[3].parse().unwrap(), rec[4].parse().unwrap());
        let spec = zalcman_core::FunctionalSpec::new(lam, 2, 2).unwrap();
        assert_eq!(zalcman_core::functional::zalcman(&f, &spec).unwrap().norm(), value);
    }
}

#[test]
fn config_file_with_flag_override() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.json");
    std::fs::write(
        &cfg,
        r#"{"command": "verify", "class": "hull_convex_alpha", "alpha": 0.5, "samples": 0, "lambda-grid": "2"}"#,
    )
    .unwrap();
    assert_eq!(code(&zalcman(&["--config", cfg.to_str().unwrap()])), 2);
    assert_eq!(code(&zalcman(&["--config", cfg.to_str().unwrap(), "--samples", "3"])), 0);
}
