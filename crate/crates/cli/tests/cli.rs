use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kbonacci"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8 output")
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    serde_json::from_str(&stdout(&full)).expect("valid JSON")
}

#[test]
fn count_examples() {
    assert_eq!(stdout(&["count", "--n", "3", "--k", "3"]), "7\n");
    assert_eq!(stdout(&["count", "--n", "3"]), "5\n");
    assert_eq!(stdout(&["count", "--n", "0", "--k", "4"]), "1\n");
    assert_eq!(json(&["count", "--n", "40"])["count"], "267914296");
    assert_eq!(
        stdout(&["--format", "csv", "count", "--n", "3", "--k", "3"]),
        "n,k,count\n3,3,7\n"
    );
}

#[test]
fn enumerate_with_stats() {
    let text = stdout(&["enumerate", "--n", "2", "--with-stats"]);
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(rows.len(), 4);
    assert!(rows[0].starts_with("word  area  sper"));
    assert_eq!(
        rows[1].split_whitespace().collect::<Vec<_>>(),
        ["00", "2", "3", "6", "7", "4", "2", "0", "true"]
    );
    assert_eq!(
        rows[2].split_whitespace().collect::<Vec<_>>(),
        ["01", "3", "4", "8", "10", "5", "2", "1", "true"]
    );

    let v = json(&["enumerate", "--n", "3", "--k", "3", "--with-stats"]);
    let words: Vec<&str> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["word"].as_str().unwrap())
        .collect();
    assert_eq!(words, ["000", "001", "010", "011", "100", "101", "110"]);
    let row = &v[3];
    assert_eq!(row["area"], 5);
    assert_eq!(row["ham"], false);

    let capped = json(&["--ham-cap", "2", "enumerate", "--n", "3", "--with-stats"]);
    assert!(capped[0]["ham"].is_null());
    let csv = stdout(&[
        "--ham-cap",
        "2",
        "--format",
        "csv",
        "enumerate",
        "--n",
        "3",
        "--with-stats",
    ]);
    assert!(csv.lines().nth(1).unwrap().ends_with(",-"));
}

#[test]
fn enumerate_drawings() {
    let text = stdout(&["enumerate", "--n", "2", "--draw", "--dot"]);
    assert!(text.contains("graph \"w01\" {"));
    let v = json(&["enumerate", "--n", "1", "--dot"]);
    assert!(v[0]["dot"].as_str().unwrap().starts_with("graph"));
    assert_eq!(
        run(&["--format", "csv", "enumerate", "--n", "2", "--draw"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn series_examples() {
    let poly = stdout(&["series", "--family", "poly", "--k", "3", "--terms", "3"]);
    assert_eq!(
        poly.lines().nth(2),
        Some("p^4*q^3 + 3*p^5*q^4 + 2*p^5*q^5 + p^6*q^5")
    );
    assert_eq!(
        stdout(&["series", "--family", "ham-total", "--terms", "4"]),
        "2\n3\n5\n8\n"
    );
    assert_eq!(
        stdout(&[
            "series",
            "--family",
            "poly",
            "--terms",
            "2",
            "--vars-at-1",
            "p,q"
        ]),
        "2\n3\n"
    );
    let v = json(&["series", "--family", "degree", "--k", "3", "--terms", "2"]);
    assert_eq!(v["vars"], serde_json::json!(["q2", "q3", "q4"]));
    assert_eq!(v["coefficients"][0]["n"], 1);
    assert_eq!(
        stdout(&["series", "--family", "area", "--terms", "3"]),
        "3\n8\n20\n"
    );
    assert_eq!(
        run(&["series", "--family", "poly", "--terms", "0"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["series", "--family", "poly", "--vars-at-1", "z"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn sequence_examples() {
    assert_eq!(
        stdout(&["sequence", "--name", "narayana", "--n", "6"]),
        "6\n"
    );
    assert_eq!(
        stdout(&["sequence", "--name", "d4", "--n", "2"]),
        "1 + 2*q\n"
    );
    assert_eq!(stdout(&["sequence", "--name", "area", "--n", "3"]), "20\n");
    let v = json(&["sequence", "--name", "v", "--n", "2"]);
    assert_eq!(v["value"], "p^7*q^6 + 2*p^10*q^8");
}

#[test]
fn asymptotics_report() {
    let text = stdout(&["asymptotics", "--n", "200"]);
    assert!(text.contains("limit: (7 - √5)/22"));
    assert!(text.contains("limit: (4 + √5)/11"));
    assert!(text.contains("sum_of_ratios: 1\n"));
    let v = json(&["asymptotics", "--degree", "3", "--n", "500"]);
    assert_eq!(v["reports"][0]["limit_decimal"], "0.5669152707");
    assert!(v.get("sum_of_ratios").is_none());
    assert_eq!(
        run(&["asymptotics", "--degree", "5"]).status.code(),
        Some(2)
    );
}

#[test]
fn verify_passes_and_is_byte_stable() {
    let args = [
        "--format",
        "json",
        "verify",
        "--max-n",
        "6",
        "--max-k",
        "3",
        "--no-timings",
    ];
    let a = stdout(&args);
    let b = stdout(&args);
    assert_eq!(a, b);
    let mut seq = args.to_vec();
    seq.push("--sequential");
    assert_eq!(stdout(&seq), a);
    let v: Value = serde_json::from_str(&a).unwrap();
    let reports = v.as_array().unwrap();
    assert!(reports.iter().all(|r| r["status"] != "fail"));
    assert_eq!(serde_json::to_string_pretty(&v).unwrap() + "\n", a);

    let text = stdout(&[
        "verify",
        "--suite",
        "formulas",
        "--max-n",
        "8",
        "--no-timings",
    ]);
    assert!(text
        .lines()
        .any(|l| l.starts_with("summary: ") && l.contains(" 0 fail")));
}

#[test]
fn bad_input_exits_nonzero() {
    assert_eq!(
        run(&["count", "--n", "3", "--k", "1"]).status.code(),
        Some(2)
    );
    let out = run(&["count", "--n", "3", "--k", "1"]);
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error: "));
    assert!(!run(&["count", "--bogus"]).status.success());
    assert!(!run(&["verify", "--suite", "everything"]).status.success());
    assert!(!run(&[]).status.success());
    assert_eq!(run(&["verify", "--max-k", "1"]).status.code(), Some(2));
}
