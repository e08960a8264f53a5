use apring_cli::ResultEnvelope;
use serde_json::Value;
use std::process::{Command, Output};

fn apring(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_apring"))
        .args(args)
        .env_remove(apring_cli::THREADS_ENV)
        .output()
        .expect("binary runs")
}

/// Runs a command expected to succeed and checks that its envelope survives a
/// print/parse cycle unchanged.
fn envelope(args: &[&str]) -> ResultEnvelope {
    let out = apring(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = String::from_utf8(out.stdout).unwrap();
    let env = ResultEnvelope::from_json(&text).unwrap();
    assert_eq!(env.to_json(), text);
    assert_eq!(ResultEnvelope::from_json(&env.to_json()).unwrap(), env);
    env
}

fn code(args: &[&str]) -> i32 {
    apring(args).status.code().unwrap()
}

#[test]
fn partition_examples() {
    let dp = envelope(&["partition", "--weights", "5,5,6,7,9", "--method", "dp"]);
    assert_eq!(dp.command, "partition");
    assert_eq!(dp.outputs["m"], 0.0);
    assert_eq!(dp.outputs["method"], "IntegerDP");
    let signs: Vec<i64> = dp.outputs["signs"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s.as_i64().unwrap())
        .collect();
    let signed: i64 = [5, 5, 6, 7, 9].iter().zip(&signs).map(|(w, s)| w * s).sum();
    assert_eq!(signed, 0);

    let kk = envelope(&["partition", "--weights", "5,5,6,7,9", "--method", "kk"]);
    assert_eq!(kk.outputs["m"], 2.0);
    let one = envelope(&["partition", "--weights", "7", "--method", "auto"]);
    assert_eq!(one.outputs["m"], 7.0);
    assert_eq!(one.outputs["method"], "ClosedForm");

    let scaled = envelope(&[
        "partition",
        "--weights",
        "0.5,1.25,0.75",
        "--method",
        "dp",
        "--scale",
        "4",
    ]);
    assert_eq!(scaled.outputs["m"], 0.0);
}

#[test]
fn partition_reads_weight_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("weights.csv");
    std::fs::write(&path, "5\n5\n6\n7\n9\n").unwrap();
    let env = envelope(&[
        "partition",
        "--weights",
        path.to_str().unwrap(),
        "--method",
        "mim",
    ]);
    assert_eq!(env.outputs["m"], 0.0);
    assert_eq!(env.outputs["n"], 5);
}

#[test]
fn analyze_examples() {
    let env = envelope(&[
        "analyze",
        "--example",
        "2.16",
        "--a",
        "2",
        "--window",
        "6.2832",
        "--step",
        "0.001",
        "--refine",
    ]);
    assert_eq!(env.outputs["formulas"]["M"], 3.0);
    assert_eq!(env.outputs["formulas"]["m"], 1.0);
    let min = env.outputs["scan"]["min_val"].as_f64().unwrap();
    assert!((min - 1.0).abs() <= 1e-9);

    let env = envelope(&[
        "analyze",
        "--example",
        "2.19",
        "--window",
        "100",
        "--step",
        "0.001",
    ]);
    assert_eq!(env.outputs["formulas"]["M"], 2.1);
    assert_eq!(env.outputs["formulas"]["m"], 0.1);
    assert_eq!(env.outputs["independence"], "Dependent");
    assert_eq!(env.outputs["schedule"], Value::Null);

    let env = envelope(&[
        "analyze",
        "--example",
        "2.8",
        "--window",
        "100",
        "--step",
        "0.001",
        "--refine",
    ]);
    assert!(env.outputs["scan"]["min_val"].as_f64().unwrap() <= 1e-6);
    assert_eq!(env.outputs["independence"], "Independent");
}

#[test]
fn analyze_spec_and_schedule() {
    let spec = r#"{"terms":[{"modulus":1,"frequency":{"kind":"rational","num":1,"den":1}},
                            {"modulus":0.5,"frequency":{"kind":"sqrt","radicand":2}}]}"#;
    let env = envelope(&[
        "analyze",
        "--spec",
        spec,
        "--window",
        "50",
        "--schedule",
        "10,20,50",
    ]);
    assert_eq!(env.outputs["formulas"]["M"], 1.5);
    let rows = env.outputs["schedule"].as_array().unwrap();
    assert_eq!(rows.len(), 3);
    let mins: Vec<f64> = rows
        .iter()
        .map(|r| r["min_val"].as_f64().unwrap())
        .collect();
    assert!(mins.windows(2).all(|w| w[1] <= w[0]));
    assert!(mins.iter().all(|&m| m >= 0.5 - 1e-12));
    assert_eq!(env.inputs["spec"]["terms"][1]["phase"], 0.0);
}

#[test]
fn curve_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let svg = dir.path().join("fig1.svg");
    let env = envelope(&[
        "curve",
        "--figure",
        "1",
        "--format",
        "svg",
        "--out",
        svg.to_str().unwrap(),
    ]);
    assert_eq!(env.outputs["samples"], 20001);
    let text = std::fs::read_to_string(&svg).unwrap();
    assert!(text.starts_with("<?xml"));
    assert!(text.contains("viewBox=\"-2.1 -2.1 4.2 4.2\""));
    assert_eq!(text.matches("<polyline").count(), 1);
    assert!(text.trim_end().ends_with("</svg>"));

    let csv = dir.path().join("fig3.csv");
    envelope(&[
        "curve",
        "--figure",
        "3",
        "--format",
        "csv",
        "--out",
        csv.to_str().unwrap(),
    ]);
    assert!(std::fs::read_to_string(&csv)
        .unwrap()
        .starts_with("t,x,y\n"));

    let spec = dir.path().join("ex28.json");
    std::fs::write(
        &spec,
        r#"{"terms":[{"modulus":1,"frequency":{"kind":"rational","num":1,"den":1}},
                     {"modulus":1,"frequency":{"kind":"sqrt","radicand":2}}]}"#,
    )
    .unwrap();
    let out = apring(&[
        "curve",
        "--spec",
        spec.to_str().unwrap(),
        "--tmax",
        "6.2832",
        "--tstep",
        "0.01",
        "--format",
        "csv",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    // t = 0, 0.01, …, 6.28
    assert_eq!(text.lines().count(), 629 + 1);
    assert_eq!(text.lines().nth(1).unwrap(), "0,2,0");
}

#[test]
fn converge_examples() {
    let env = envelope(&["converge", "--series", "geometric:0.5,0.5", "--nmax", "10"]);
    let rows = env.outputs["rows"].as_array().unwrap();
    assert_eq!(rows[9]["m_n"].as_f64().unwrap(), 2f64.powi(-10));
    assert_eq!(env.outputs["cauchy_check"], true);
    assert!(env.outputs["table"]
        .as_str()
        .unwrap()
        .starts_with("n,m_n,tail\n"));

    let env = envelope(&["converge", "--series", "explicit:5,5,6,7,9", "--nmax", "5"]);
    assert_eq!(env.outputs["rows"][4]["m_n"], 0.0);
    let env = envelope(&["converge", "--series", "explicit:1", "--nmax", "1"]);
    assert_eq!(env.outputs["rows"][0]["m_n"], 1.0);
    assert_eq!(env.outputs["table"], "n,m_n,tail\n1,1,0\n");
}

#[test]
fn kronecker_examples() {
    let env = envelope(&[
        "kronecker",
        "--freqs",
        "[1, 3]",
        "--targets",
        "0,0",
        "--delta",
        "1e-6",
    ]);
    assert_eq!(env.outputs["tau"], 0.0);

    let env = envelope(&[
        "kronecker",
        "--freqs",
        "[1, 2]",
        "--targets",
        "pi/2,0",
        "--delta",
        "0.1",
        "--window",
        "1000",
    ]);
    assert_eq!(env.outputs["found"], false);
    assert_eq!(env.outputs["tau"], Value::Null);

    let env = envelope(&[
        "kronecker",
        "--freqs",
        r#"[1, {"kind":"sqrt","radicand":2}]"#,
        "--targets",
        "0,pi",
        "--delta",
        "0.05",
        "--window",
        "1e4",
    ]);
    assert_eq!(env.outputs["found"], true);
    assert_eq!(env.outputs["verified"], true);
    let tau = env.outputs["tau"].as_f64().unwrap();
    let d1 = tau.rem_euclid(std::f64::consts::TAU);
    assert!(d1.min(std::f64::consts::TAU - d1) < 0.05);
    assert!(env.outputs["max_distance"].as_f64().unwrap() < 0.05);
}

#[test]
fn probe_flags_dependent_case() {
    let env = envelope(&["probe", "--schedule", "1e2,1e3"]);
    assert_eq!(env.outputs["contradicted"], true);
    let probes = env.outputs["probes"].as_array().unwrap();
    assert_eq!(probes[0]["formula_min"], 1.0);
    assert_eq!(
        probes[0]["status"],
        "numerically contradicted in the dependent case"
    );
}

#[test]
fn deterministic_flag_zeroes_timing() {
    let args = [
        "--deterministic",
        "converge",
        "--series",
        "powerlaw:2,1",
        "--nmax",
        "12",
    ];
    let a = apring(&args).stdout;
    assert_eq!(a, apring(&args).stdout);
    assert_eq!(
        ResultEnvelope::from_json(std::str::from_utf8(&a).unwrap())
            .unwrap()
            .elapsed_ms,
        0.0
    );
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["--version"]), 0);
    assert_eq!(code(&[]), 1);
    assert_eq!(code(&["partition"]), 1);
    assert_eq!(
        code(&["partition", "--weights", "1", "--method", "greedy"]),
        1
    );
    assert_eq!(
        code(&[
            "partition",
            "--weights",
            "1,2",
            "--method",
            "kk",
            "--scale",
            "2"
        ]),
        1
    );
    assert_eq!(code(&["analyze", "--example", "9.9"]), 1);
    assert_eq!(code(&["curve", "--spec", "{}"]), 1);

    assert_eq!(code(&["partition", "--weights", "1,x"]), 2);
    assert_eq!(code(&["partition", "--weights", "1,-2"]), 2);
    assert_eq!(code(&["analyze", "--spec", "{\"terms\":[]}"]), 2);
    assert_eq!(
        code(&["analyze", "--spec", "{\"terms\":[],\"extra\":0}"]),
        2
    );
    assert_eq!(code(&["converge", "--series", "geometric:1,2"]), 2);
    assert_eq!(
        code(&[
            "kronecker",
            "--freqs",
            "[1",
            "--targets",
            "0",
            "--delta",
            "0.1"
        ]),
        2
    );
    assert_eq!(
        code(&[
            "kronecker",
            "--freqs",
            "[1]",
            "--targets",
            "tau",
            "--delta",
            "0.1"
        ]),
        2
    );

    assert_eq!(
        code(&["partition", "--weights", "0.5,1.5,2,3,4", "--method", "dp"]),
        3
    );
    assert_eq!(
        code(&["partition", "--weights", "1,2,3,4,5", "--method", "closed"]),
        3
    );
    assert_eq!(code(&["analyze", "--example", "2.8", "--step", "1"]), 3);
    assert_eq!(
        code(&["converge", "--series", "geometric:0.5,0.5", "--nmax", "41"]),
        3
    );
    assert_eq!(
        code(&[
            "kronecker",
            "--freqs",
            "[1]",
            "--targets",
            "0",
            "--delta",
            "4"
        ]),
        3
    );

    assert_eq!(code(&["partition", "--weights", "no/such/file.csv"]), 4);
    assert_eq!(code(&["analyze", "--spec", "no/such/spec.json"]), 4);
    assert_eq!(
        code(&["curve", "--figure", "1", "--out", "/no/such/dir/f.svg"]),
        4
    );
}

#[test]
fn bad_thread_setting_is_a_usage_error() {
    let out = Command::new(env!("CARGO_BIN_EXE_apring"))
        .args(["partition", "--weights", "1"])
        .env(apring_cli::THREADS_ENV, "zero")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}
