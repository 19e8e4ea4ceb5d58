//! End-to-end tests of the polycover binary: output stability, exit-code
//! contract, golden replays, and certificate verification round trips.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_polycover"))
}

fn fixtures() -> PathBuf {
    PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_line(output: &Output) -> String {
    assert!(
        output.status.success(),
        "command failed: {}",
        String::from_utf8_lossy(&output.stderr)
    );
    String::from_utf8(output.stdout.clone()).expect("utf8 stdout")
}

fn fixture(name: &str) -> String {
    fixtures().join(name).to_string_lossy().into_owned()
}

fn write_temp(dir: &Path, name: &str, contents: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, contents).expect("write temp fixture");
    path.to_string_lossy().into_owned()
}

#[test]
fn repeat_runs_are_byte_identical() {
    let first = run(&["vertices", "--ideal", &fixture("ex71.json")]);
    let second = run(&["vertices", "--ideal", &fixture("ex71.json")]);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
    assert!(!first.stdout.is_empty());
}

#[test]
fn stdout_is_a_single_json_document() {
    let output = run(&["graph-invariants", "--graph", &fixture("bowtie.json")]);
    let text = stdout_line(&output);
    let value: serde_json::Value = serde_json::from_str(text.trim()).expect("stdout parses");
    assert!(value.is_object());
    assert_eq!(text.trim().lines().count(), 1);
}

#[test]
fn timing_goes_to_stderr_not_stdout() {
    let output = run(&["waldschmidt", "--matrix", &fixture("c73.json")]);
    let err = String::from_utf8_lossy(&output.stderr);
    assert!(err.contains("waldschmidt"), "stderr carries the timing line");
    assert!(!String::from_utf8_lossy(&output.stdout).contains('#'));
}

#[test]
fn conflicting_inputs_exit_one() {
    let output = run(&[
        "vertices",
        "--ideal",
        &fixture("ex71.json"),
        "--matrix",
        &fixture("c73.json"),
    ]);
    assert_eq!(output.status.code(), Some(1));
}

#[test]
fn missing_file_exits_one() {
    let output = run(&["vertices", "--ideal", "/nonexistent/ideal.json"]);
    assert_eq!(output.status.code(), Some(1));
}

#[test]
fn unknown_subcommand_exits_one() {
    let output = run(&["frobnicate"]);
    assert_eq!(output.status.code(), Some(1));
}

#[test]
fn domain_error_exits_two() {
    let dir = tempfile::tempdir().expect("tempdir");
    let ideal = write_temp(dir.path(), "sq.json", r#"{"vars":2,"gens":[[2,0],[0,2]]}"#);
    let output = run(&["symbolic-power", "--ideal", &ideal, "--n", "2"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn size_guard_exits_three() {
    let output = bin()
        .args(["vertices", "--ideal", &fixture("ex71.json")])
        .env("POLYCOVER_MAX_DIM", "2")
        .output()
        .expect("binary runs");
    assert_eq!(output.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&output.stderr).contains("size guard"));
}

#[test]
fn replay_checks_match_golden_files() {
    for which in ["a1", "a2", "a3", "a4"] {
        let output = run(&["replay", "--which", which, "--check"]);
        assert!(
            output.status.success(),
            "replay {which} diverged: {}",
            String::from_utf8_lossy(&output.stderr)
        );
    }
}

#[test]
fn replay_check_detects_divergence() {
    let dir = tempfile::tempdir().expect("tempdir");
    let golden = dir.path().join("golden");
    std::fs::create_dir(&golden).expect("mkdir golden");
    for name in ["ex71.json", "c73.json", "bowtie.json"] {
        std::fs::copy(fixtures().join(name), dir.path().join(name)).expect("copy fixture");
    }
    std::fs::write(golden.join("a1.json"), "{\"binding\":[],\"vertices\":[]}\n").expect("stub");
    let output = run(&[
        "replay",
        "--which",
        "a1",
        "--check",
        "--fixtures",
        &dir.path().to_string_lossy(),
    ]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn bowtie_edge_resurgence_matches_published_value() {
    let output = run(&[
        "resurgence-ic",
        "--graph",
        &fixture("bowtie.json"),
        "--edge-ideal",
    ]);
    let payload: serde_json::Value =
        serde_json::from_str(stdout_line(&output).trim()).expect("json");
    assert_eq!(payload["value"], "4/3");
    assert_eq!(
        payload["vertex"],
        serde_json::json!(["2/3", "2/3", "2/3", "0", "0", "0", "0", "4/3", "1", "0"])
    );
    assert_eq!(
        payload["witness_facet"],
        serde_json::json!([1, 1, 1, 1, 1, 1, 1, -2])
    );
}

#[test]
fn bowtie_cover_resurgence_matches_clique_bound() {
    let output = run(&[
        "resurgence-ic",
        "--graph",
        &fixture("bowtie.json"),
        "--cover-ideal",
    ]);
    let payload: serde_json::Value =
        serde_json::from_str(stdout_line(&output).trim()).expect("json");
    assert_eq!(payload["value"], "4/3");
    let bound = run(&["cover-bound", "--graph", &fixture("bowtie.json")]);
    let bound: serde_json::Value = serde_json::from_str(stdout_line(&bound).trim()).expect("json");
    assert_eq!(bound["bound"], "4/3");
    assert_eq!(bound["exact"], true);
}

#[test]
fn reciprocal_column_generators_have_thirteen_rows() {
    let output = run(&["rees-generators", "--matrix", &fixture("c73.json")]);
    let payload: serde_json::Value =
        serde_json::from_str(stdout_line(&output).trim()).expect("json");
    let generators = payload["generators"].as_array().expect("array");
    assert_eq!(generators.len(), 13);
    let degree_two: Vec<&serde_json::Value> = generators
        .iter()
        .filter(|g| g["degree"] == 2)
        .collect();
    assert_eq!(degree_two.len(), 2);
    assert_eq!(degree_two[0]["exponents"], serde_json::json!([1, 3, 10]));
    assert_eq!(degree_two[1]["exponents"], serde_json::json!([1, 4, 8]));
}

#[test]
fn waldschmidt_of_reciprocal_column_is_two() {
    let output = run(&["waldschmidt", "--matrix", &fixture("c73.json")]);
    let payload: serde_json::Value =
        serde_json::from_str(stdout_line(&output).trim()).expect("json");
    assert_eq!(payload["value"], "2");
}

#[test]
fn verify_round_trips_every_report_family() {
    let dir = tempfile::tempdir().expect("tempdir");
    let sq = write_temp(dir.path(), "sq.json", r#"{"vars":2,"gens":[[2,0],[0,2]]}"#);
    let cases: Vec<(Vec<String>, Vec<String>)> = vec![
        (
            vec!["vertices".into(), "--ideal".into(), fixture("ex71.json")],
            vec![
                "--command".into(),
                "vertices".into(),
                "--ideal".into(),
                fixture("ex71.json"),
            ],
        ),
        (
            vec!["waldschmidt".into(), "--matrix".into(), fixture("c73.json")],
            vec![
                "--command".into(),
                "waldschmidt".into(),
                "--matrix".into(),
                fixture("c73.json"),
            ],
        ),
        (
            vec![
                "resurgence-ic".into(),
                "--graph".into(),
                fixture("bowtie.json"),
                "--edge-ideal".into(),
            ],
            vec![
                "--command".into(),
                "resurgence-ic".into(),
                "--graph".into(),
                fixture("bowtie.json"),
                "--edge-ideal".into(),
            ],
        ),
        (
            vec!["normal".into(), "--ideal".into(), sq.clone()],
            vec!["--command".into(), "normal".into(), "--ideal".into(), sq.clone()],
        ),
    ];
    for (index, (produce, check)) in cases.iter().enumerate() {
        let produced = bin().args(produce).output().expect("binary runs");
        let report_path = dir.path().join(format!("report{index}.json"));
        std::fs::write(&report_path, &produced.stdout).expect("save report");
        let mut args: Vec<String> = vec!["verify".into()];
        args.extend(check.clone());
        args.push("--report".into());
        args.push(report_path.to_string_lossy().into_owned());
        let verified = bin().args(&args).output().expect("binary runs");
        assert!(
            verified.status.success(),
            "verify case {index} failed: {}",
            String::from_utf8_lossy(&verified.stderr)
        );
        let payload: serde_json::Value =
            serde_json::from_str(String::from_utf8_lossy(&verified.stdout).trim()).expect("json");
        assert_eq!(payload["verified"], true);
    }
}

#[test]
fn verify_rejects_tampered_value() {
    let dir = tempfile::tempdir().expect("tempdir");
    let produced = run(&["waldschmidt", "--matrix", &fixture("c73.json")]);
    let mut payload: serde_json::Value =
        serde_json::from_str(stdout_line(&produced).trim()).expect("json");
    payload["value"] = serde_json::json!("3");
    let report = write_temp(dir.path(), "tampered.json", &payload.to_string());
    let output = run(&[
        "verify",
        "--command",
        "waldschmidt",
        "--report",
        &report,
        "--matrix",
        &fixture("c73.json"),
    ]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn verify_rejects_forged_resurgence_vertex() {
    let dir = tempfile::tempdir().expect("tempdir");
    let produced = run(&[
        "resurgence-ic",
        "--graph",
        &fixture("bowtie.json"),
        "--edge-ideal",
    ]);
    let mut payload: serde_json::Value =
        serde_json::from_str(stdout_line(&produced).trim()).expect("json");
    payload["vertex"][0] = serde_json::json!("1");
    let report = write_temp(dir.path(), "forged.json", &payload.to_string());
    let output = run(&[
        "verify",
        "--command",
        "resurgence-ic",
        "--report",
        &report,
        "--graph",
        &fixture("bowtie.json"),
        "--edge-ideal",
    ]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn filtration_power_accepts_matrix_route() {
    let output = run(&["power", "--matrix", &fixture("c74.json"), "--n", "2"]);
    let payload: serde_json::Value =
        serde_json::from_str(stdout_line(&output).trim()).expect("json");
    assert_eq!(payload["gens"], serde_json::json!([[2, 2]]));
}

#[test]
fn acknowledged_symbolic_power_intersects_component_closures() {
    let dir = tempfile::tempdir().expect("tempdir");
    let ideal = write_temp(dir.path(), "mixed.json", r#"{"vars":2,"gens":[[2,0],[0,2]]}"#);
    let output = run(&[
        "symbolic-power",
        "--ideal",
        &ideal,
        "--n",
        "2",
        "--acknowledge-normal-components",
    ]);
    let payload: serde_json::Value =
        serde_json::from_str(stdout_line(&output).trim()).expect("json");
    // (t1^2, t2^2) is (t1, t2)-primary, so the symbolic power is the closure
    // of the square: all monomials on or above the segment from (0,4) to (4,0).
    assert_eq!(
        payload["gens"],
        serde_json::json!([[0, 4], [1, 3], [2, 2], [3, 1], [4, 0]])
    );
}
