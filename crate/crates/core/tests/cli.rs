use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_p3walls")).args(args).output().unwrap()
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_p3walls"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn wall_section_through_the_figure_three_crossing() {
    let out = run(&["wall", "section", "--v", "1,3,9/2,9/2", "--w", "0,0,2,3", "--s", "1/3", "--beta", "3/2"]);
    let v = json(&out);
    assert_eq!(v["a"], serde_json::json!(["3/4"]));
    assert_eq!(v["points"][0]["alpha_decimal"], "0.866025403784");
    assert_eq!(v["schema_version"], 1);
}

#[test]
fn output_keys_are_sorted() {
    let out = run(&["wall", "tilt", "--v", "1,0,0,0", "--w", "0,1,-1/2,1/6"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with(r#"{"apex":{"a":"1/4","beta":"-1/2"},"center":"-1/2","kind":"semicircle","radius2":"1/4""#), "{text}");
}

#[test]
fn slopes_and_lattice_operations() {
    assert_eq!(json(&run(&["chern", "dual", "--ch", "0,0,2,-3"]))["ch"], serde_json::json!(["0", "0", "2", "3"]));
    let lambda = run(&["slope", "lambda", "--ch", "0,1,-1/2,1/6", "--beta", "-2", "--alpha", "1", "--s", "1/3"]);
    assert_eq!(json(&lambda)["value"], "4/9");
    let squared = run(&["slope", "lambda", "--ch", "0,1,-1/2,1/6", "--beta", "-2", "--alpha2", "1", "--s", "1/3"]);
    assert_eq!(json(&squared)["value"], "4/9");
    assert_eq!(json(&run(&["slope", "mu", "--ch", "0,0,0,1"]))["value"], "inf");
    assert_eq!(json(&run(&["hilbert", "--ch", "0,0,2,-3"]))["polynomial"], "2t + 1");
    assert_eq!(json(&run(&["curve", "theta", "--w", "2,0,-2,0"]))["polynomial"], "β^2 - a - 2");
}

#[test]
fn asymptotic_commands() {
    let limit = json(&run(&["asym", "limit", "--v", "1,0,0,0", "--side", "left", "--cgamma", "1/4"]));
    assert_eq!(limit["value"], "3/8");
    assert_eq!(limit["closed_form"], "3/8");
    let compare = json(&run(&["asym", "compare", "--side", "left", "--s", "1/3", "--v", "0,1,-1/2,1/6", "--u", "0,0,0,1"]));
    assert_eq!(compare["sign"], "less");
    let classify = run_stdin(
        &["asym", "classify", "--side", "left", "--s", "1/3", "--v", "0,1,-1/2,1/6", "--candidates", "/dev/stdin", "--strict"],
        "# one subsheaf\n0,1,-3/2,7/6\n",
    );
    let classify = json(&classify);
    assert_eq!(classify["verdict"], "stable");
    assert_eq!(classify["candidates"], 1);
}

#[test]
fn enumerate_finds_the_twisted_line_bundle_wall() {
    let v = json(&run(&["enumerate", "--v", "2,0,-2,0", "--beta-min", "-3", "--beta-max", "0", "--max-qtilt", "16"]));
    let walls = v["walls"].as_array().unwrap();
    assert!(walls
        .iter()
        .any(|w| w["geometry"]["center"] == "-3/2" && w["geometry"]["radius2"] == "1/4"));
    let line = json(&run(&["enumerate", "--v", "1,0,0,0", "--beta-min", "-3", "--beta-max", "3", "--max-qtilt", "16"]));
    assert_eq!(line["walls"], serde_json::json!([]));
}

#[test]
fn usage_errors_exit_one() {
    for args in [
        vec!["slope", "mu", "--ch", "1,0,0,0", "--bogus"],
        vec!["slope", "nu", "--ch", "1,0,0,0", "--beta", "x", "--alpha2", "1"],
        vec!["frobnicate"],
        vec![],
    ] {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        assert!(out.stdout.is_empty());
    }
}

#[test]
fn domain_errors_exit_two_with_json_on_stderr() {
    for (args, code) in [
        (vec!["chern", "dual", "--ch", "1,2"], "WrongArity"),
        (vec!["plot", "--figure", "9", "--out", "unused.csv"], "UnknownFigure"),
        (vec!["slope", "nu", "--ch", "0,0,0,0", "--beta", "0", "--alpha2", "1"], "ZeroCharacter"),
    ] {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty());
        let err: Value = serde_json::from_slice(&out.stderr).unwrap();
        assert_eq!(err["code"], code, "{args:?}");
        assert_eq!(err["schema_version"], 1);
        assert!(err["message"].is_string());
    }
}

#[test]
fn plot_writes_the_requested_format() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("fig3.csv");
    let summary = json(&run(&["plot", "--figure", "3", "--out", csv.to_str().unwrap()]));
    assert_eq!(summary["format"], "csv");
    let text = std::fs::read_to_string(&csv).unwrap();
    assert!(text.starts_with("curve_id,beta,alpha\n"));
    assert!(text.contains("wall_o_sum,1.50000000000,0.866025403784\n"));

    let svg = dir.path().join("fig1.svg");
    json(&run(&["plot", "--figure", "1", "--out", svg.to_str().unwrap(), "--n", "41"]));
    let text = std::fs::read_to_string(&svg).unwrap();
    assert!(text.starts_with("<svg") || text.starts_with("<?xml"));
    for id in ["gamma", "l", "theta"] {
        assert!(text.contains(&format!("id=\"{id}\"")), "{id}");
    }
}

#[test]
fn plot_from_a_spec_file() {
    let dir = tempfile::tempdir().unwrap();
    let spec = dir.path().join("spec.json");
    std::fs::write(
        &spec,
        r#"{"beta_min":"-3","beta_max":"3","alpha_max":"3","samples":7,
            "curves":[{"id":"t","kind":"theta","w":"2,0,-2,0"}]}"#,
    )
    .unwrap();
    let out = dir.path().join("t.csv");
    let summary = json(&run(&["plot", "--spec", spec.to_str().unwrap(), "--out", out.to_str().unwrap()]));
    assert_eq!(summary["curves"][0]["id"], "t");
    let rows: Vec<String> = std::fs::read_to_string(&out).unwrap().lines().skip(1).map(String::from).collect();
    // β = ±2, ±3 have real points on β² − α² = 2
    assert_eq!(rows.len(), 4, "{rows:?}");
    assert!(rows.contains(&"t,2.00000000000,1.41421356237".to_string()), "{rows:?}");
}
