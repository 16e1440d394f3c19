use std::path::{Path, PathBuf};
use std::process::Command;

use maxangle_cli::{run_cli, PointSetFile};
use maxangle_core::fixtures;
use serde_json::Value;

struct Run {
    code: i32,
    out: String,
    err: String,
}

fn run(args: &[&str]) -> Run {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("maxangle").chain(args.iter().copied());
    let code = run_cli(argv, &mut out, &mut err);
    Run {
        code,
        out: String::from_utf8(out).unwrap(),
        err: String::from_utf8(err).unwrap(),
    }
}

fn json(r: &Run) -> Value {
    serde_json::from_str(&r.out).unwrap_or_else(|e| panic!("{e}: {}", r.out))
}

fn fig1_file(dir: &Path) -> PathBuf {
    let path = dir.join("fig1.json");
    PointSetFile::new(fixtures::fig1_points(), Some("fig1".into()))
        .write(&path)
        .unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn bound_prints_expression_and_value() {
    let r = run(&["bound", "--n", "8", "--x", "6"]);
    assert_eq!(r.code, 0, "{}", r.err);
    let v = json(&r);
    assert_eq!(v["expression"], "2π − π/14");
    let b = v["bound"].as_f64().unwrap();
    assert!((b - (2.0 * std::f64::consts::PI - std::f64::consts::PI / 14.0)).abs() < 1e-10);
}

#[test]
fn bound_rejects_convex_position() {
    let r = run(&["bound", "--n", "6", "--x", "6"]);
    assert_eq!(r.code, 2);
    assert!(r.err.contains("convex"));
}

#[test]
fn unknown_flag_is_a_usage_error() {
    let r = run(&["polygonize", "--input", "x.json", "--frobnicate"]);
    assert_eq!(r.code, 2);
    assert!(r.err.contains("Usage"));
    assert_eq!(run(&["nosuchcommand"]).code, 2);
}

#[test]
fn missing_or_malformed_input() {
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("none.json");
    assert_eq!(run(&["polygonize", "--input", s(&missing)]).code, 2);
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"points\": [[0, 0], [1, 1], [2, 2], [0, 3]]}").unwrap();
    let r = run(&["verify", "--input", s(&bad)]);
    assert_eq!(r.code, 2);
    assert!(r.err.contains("collinear"), "{}", r.err);
    std::fs::write(&bad, "{\"points\": [[0, 0], [1, 1],").unwrap();
    assert_eq!(run(&["verify", "--input", s(&bad)]).code, 2);
}

#[test]
fn unknown_strategy_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let f = fig1_file(dir.path());
    let r = run(&["polygonize", "--input", s(&f), "--solver", "genetic"]);
    assert_eq!(r.code, 2);
    let r = run(&["polygonize", "--input", s(&f), "--simplicity", "guess"]);
    assert_eq!(r.code, 2);
}

#[test]
fn verify_fig1_passes() {
    let dir = tempfile::tempdir().unwrap();
    let f = fig1_file(dir.path());
    let r = run(&["verify", "--input", s(&f)]);
    assert_eq!(r.code, 0, "{}", r.err);
    let v = json(&r);
    assert_eq!(v["verdicts"]["theorem"], "pass");
    assert_eq!(v["verdicts"]["property1"], "pass");
    assert_eq!(v["verdicts"]["property2"], "pass");
    assert_eq!(v["input"]["x_count"], 6);
    assert!((v["circle"]["radius"].as_f64().unwrap() - 5.0).abs() < 1e-9);
    assert!(v.get("timings").is_none());
}

#[test]
fn oracle_on_star3_flags_equality() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("star3.json");
    assert_eq!(run(&["gen", "star", "--m", "3", "--out", s(&f)]).code, 0);
    let r = run(&["oracle", "--input", s(&f)]);
    assert_eq!(r.code, 0, "{}", r.err);
    let v = json(&r);
    assert!((v["minmax_angle"].as_f64().unwrap() - 4.0 * std::f64::consts::PI / 3.0).abs() < 1e-9);
    assert_eq!(v["conjecture"], "holds-with-equality");
    assert_eq!(v["dominance"], "pass");
    let r = run(&["conjecture", "--input", s(&f)]);
    assert_eq!(r.code, 0);
    assert_eq!(json(&r)["conjecture"], "holds-with-equality");
}

#[test]
fn oracle_limit_flag() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("r.json");
    assert_eq!(
        run(&["gen", "random", "--n", "9", "--seed", "3", "--out", s(&f)]).code,
        0
    );
    let r = run(&["oracle", "--input", s(&f), "--limit", "8"]);
    assert_eq!(r.code, 2);
    assert!(r.err.contains("limit"), "{}", r.err);
}

#[test]
fn oracle_limit_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("r.json");
    assert_eq!(
        run(&["gen", "random", "--n", "7", "--seed", "3", "--out", s(&f)]).code,
        0
    );
    let bin = env!("CARGO_BIN_EXE_maxangle");
    let status = |limit: &str| {
        Command::new(bin)
            .args(["conjecture", "--input", s(&f)])
            .env("MAXANGLE_ORACLE_LIMIT", limit)
            .output()
            .unwrap()
            .status
            .code()
    };
    assert_eq!(status("6"), Some(2));
    assert_eq!(status("7"), Some(0));
    assert_eq!(status("seven"), Some(2));
}

#[test]
fn degrees_flag() {
    let dir = tempfile::tempdir().unwrap();
    let f = fig1_file(dir.path());
    let rad = json(&run(&["polygonize", "--input", s(&f)]));
    let deg = json(&run(&["polygonize", "--input", s(&f), "--degrees"]));
    assert_eq!(deg["angle_unit"], "degrees");
    let a = rad["best"]["max_angle"].as_f64().unwrap();
    let b = deg["best"]["max_angle"].as_f64().unwrap();
    assert!((a.to_degrees() - b).abs() < 1e-7);
}

#[test]
fn solvers_agree_on_small_input() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("r.json");
    run(&["gen", "random", "--n", "7", "--seed", "11", "--out", s(&f)]);
    let cand = json(&run(&["polygonize", "--input", s(&f)]));
    let orc = json(&run(&[
        "polygonize",
        "--input",
        s(&f),
        "--solver",
        "oracle",
    ]));
    let pair = json(&run(&[
        "polygonize",
        "--input",
        s(&f),
        "--simplicity",
        "pairwise",
    ]));
    assert_eq!(cand["best"], pair["best"]);
    assert!(
        orc["best"]["max_angle"].as_f64().unwrap()
            <= cand["best"]["max_angle"].as_f64().unwrap() + 1e-9
    );
    assert_eq!(orc["solver"], "oracle");
}

#[test]
fn reports_are_byte_identical_across_thread_counts() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("r.json");
    run(&["gen", "random", "--n", "30", "--seed", "5", "--out", s(&f)]);
    let mut reports = Vec::new();
    let mut svgs = Vec::new();
    for threads in ["1", "2", "4"] {
        let rep = dir.path().join(format!("rep{threads}.json"));
        let svg = dir.path().join(format!("fig{threads}.svg"));
        let r = run(&[
            "verify",
            "--input",
            s(&f),
            "--parallel",
            threads,
            "--report",
            s(&rep),
            "--svg",
            s(&svg),
        ]);
        assert_eq!(r.code, 0, "{}", r.err);
        assert!(r.out.is_empty());
        reports.push(std::fs::read(&rep).unwrap());
        svgs.push(std::fs::read(&svg).unwrap());
    }
    let unthreaded = run(&["verify", "--input", s(&f)]);
    assert_eq!(unthreaded.out.as_bytes(), reports[0].as_slice());
    assert!(reports.windows(2).all(|w| w[0] == w[1]));
    assert!(svgs.windows(2).all(|w| w[0] == w[1]));
    assert_eq!(
        run(&["verify", "--input", s(&f), "--parallel", "0"]).code,
        2
    );
}

#[test]
fn timings_only_on_request() {
    let dir = tempfile::tempdir().unwrap();
    let f = fig1_file(dir.path());
    let v = json(&run(&["polygonize", "--input", s(&f), "--timings"]));
    let t = &v["timings"];
    for key in ["circle_ms", "arcs_ms", "candidates_ms", "selection_ms"] {
        assert!(t[key].as_f64().unwrap() >= 0.0, "{key}");
    }
}

#[test]
fn generators_are_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    run(&[
        "gen",
        "random",
        "--n",
        "12",
        "--seed",
        "42",
        "--out",
        s(&a),
        "--bbox",
        "-5,-5,5,5",
    ]);
    run(&[
        "gen",
        "random",
        "--n",
        "12",
        "--seed",
        "42",
        "--out",
        s(&b),
        "--bbox",
        "-5,-5,5,5",
    ]);
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    let v: Value = serde_json::from_slice(&std::fs::read(&a).unwrap()).unwrap();
    assert_eq!(v["points"].as_array().unwrap().len(), 12);
    assert_eq!(run(&["gen", "star", "--m", "4", "--out", s(&a)]).code, 2);
    assert_eq!(
        run(&[
            "gen",
            "random",
            "--n",
            "12",
            "--seed",
            "1",
            "--out",
            s(&a),
            "--bbox",
            "1,1"
        ])
        .code,
        2
    );
}

#[test]
fn convex_input_short_circuits() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("hex.json");
    std::fs::write(&f, r#"{"points": [[0,0],[4,-1],[6,2],[4,5],[0,4],[-2,2]]}"#).unwrap();
    let r = run(&["verify", "--input", s(&f)]);
    assert_eq!(r.code, 0, "{}", r.err);
    let v = json(&r);
    assert_eq!(v["verdicts"]["theorem"], "not-run");
    assert!(v["theorem_bound"].is_null());
}

#[test]
fn strategies_lists_registries() {
    let v = json(&run(&["strategies"]));
    let names: Vec<&str> = v["solvers"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s["name"].as_str().unwrap())
        .collect();
    assert_eq!(names, ["candidates", "oracle"]);
}
