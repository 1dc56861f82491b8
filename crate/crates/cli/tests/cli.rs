use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn homstar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_homstar")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

const ONE_STAR: &str = r#"{"vertices":["1","*"],"edges":[["1","1"],["*","*"]],"basepoint":"*"}"#;
const C5: &str = r#"{"vertices":["0","1","2","3","4"],
  "edges":[["0","0"],["1","1"],["2","2"],["3","3"],["4","4"],["0","1"],["1","2"],["2","3"],["3","4"],["4","0"]],
  "basepoint":"0"}"#;
const SQUARE_Y: &str = r#"{"vertices":["y","1","2","3"],
  "edges":[["y","y"],["y","1"],["1","2"],["2","3"],["3","y"]],"basepoint":"y"}"#;
const EDGE: &str = r#"{"vertices":["x","a"],"edges":[["x","x"],["x","a"]],"basepoint":"x"}"#;

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn hom_into_five_cycle_is_a_circle() {
    let dir = TempDir::new().unwrap();
    let (g, h) = (write(dir.path(), "g.json", ONE_STAR), write(dir.path(), "h.json", C5));
    let out = homstar(&["hom", p(&g), p(&h)]);
    assert!(out.status.success());
    let r = json(&out);
    assert_eq!(r["invariants"]["pi0"], 1);
    assert_eq!(r["invariants"]["euler"], 0);
    assert_eq!(r["invariants"]["h1"]["rank"], 1);
    assert_eq!(r["poset"]["elements"], 10);
}

#[test]
fn hom_into_a_point_and_empty_hom() {
    let dir = TempDir::new().unwrap();
    let (g, h) = (write(dir.path(), "g.json", C5), write(dir.path(), "h.json", ONE_STAR));
    let r = json(&homstar(&["hom", p(&g), p(&h)]));
    assert_eq!(r["poset"]["elements"], 1);
    assert_eq!(r["invariants"]["collapsible"], true);

    // The constant map makes Hom_* nonempty; an unlooped target empties Hom.
    let bare = write(dir.path(), "bare.json", r#"{"vertices":["a"],"edges":[]}"#);
    let r = json(&homstar(&["hom", "--unpointed", p(&h), p(&bare)]));
    assert_eq!(r["empty"], true);
    assert!(r["invariants"].is_null());
}

#[test]
fn loop_reports() {
    let dir = TempDir::new().unwrap();
    let g = write(dir.path(), "g.json", C5);
    let out = homstar(&["loop", p(&g), "--bound", "12"]);
    assert!(out.status.success());
    let r = json(&out);
    let windings: Vec<i64> = r["components"].as_array().unwrap().iter().map(|c| c["winding"].as_i64().unwrap()).collect();
    assert_eq!(windings, [0, 1, -1, 2, -2]);
    assert_eq!(r["group"]["identity"], 0);

    let r = json(&homstar(&["loop", p(&g), "--bound", "1"]));
    assert_eq!(r["components"].as_array().unwrap().len(), 1);

    let sq = write(dir.path(), "sq.json", SQUARE_Y);
    let r = json(&homstar(&["loop", p(&sq), "--bound", "10"]));
    assert_eq!(r["components"].as_array().unwrap().len(), 1);

    let r = json(&homstar(&["loop", p(&sq), "--bound", "3", "--depth", "2"]));
    assert_eq!(r["depth"], 2);

    assert_eq!(homstar(&["loop", p(&g), "--bound", "0"]).status.code(), Some(2));
    assert_eq!(homstar(&["loop", p(&g), "--bound", "4", "--depth", "3"]).status.code(), Some(2));
}

#[test]
fn verify_runs_and_is_deterministic() {
    let a = homstar(&["verify", "fold-invariance", "--trials", "5", "--seed", "7"]);
    let b = homstar(&["verify", "fold-invariance", "--trials", "5", "--seed", "7"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let reports = json(&a);
    assert_eq!(reports.as_array().unwrap().len(), 5);
    assert!(reports.as_array().unwrap().iter().all(|r| r["status"] == "pass"));
}

#[test]
fn failing_report_reruns_from_its_counterexample() {
    let dir = TempDir::new().unwrap();
    let out = homstar(&["verify", "loop-example"]);
    assert_eq!(out.status.code(), Some(1));
    let reports = json(&out);
    let failed = reports.as_array().unwrap().iter().find(|r| r["status"] == "fail").unwrap();
    let inst = write(dir.path(), "inst.json", &failed["counterexample"].to_string());
    let again = homstar(&["verify", "loop-example", "--instance", p(&inst)]);
    assert_eq!(again.status.code(), Some(1));
    assert_eq!(json(&again)[0]["status"], "fail");
}

#[test]
fn unknown_check_lists_the_suite() {
    let out = homstar(&["verify", "no-such-check"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("adjunction") && err.contains("sequence-maps"), "{err}");
}

#[test]
fn fold_and_product() {
    let dir = TempDir::new().unwrap();
    let g = write(dir.path(), "g.json", EDGE);
    let r = json(&homstar(&["fold", p(&g)]));
    assert_eq!(r["core"]["vertices"].as_array().unwrap().len(), 1);
    assert_eq!(r["folds"][0], serde_json::json!(["a", "x"]));

    let out = homstar(&["product", p(&g), p(&g), "--kind", "smash"]);
    assert!(out.status.success());
    assert_eq!(json(&out)["vertices"].as_array().unwrap().len(), 2);
    let r = json(&homstar(&["product", p(&g), p(&g), "--kind", "categorical"]));
    assert_eq!(r["vertices"].as_array().unwrap().len(), 4);
}

#[test]
fn io_errors_carry_the_file_name() {
    let dir = TempDir::new().unwrap();
    let bad = write(dir.path(), "bad.json", "{\n  \"vertices\": [\"a\",\n");
    let out = homstar(&["fold", p(&bad)]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("bad.json") && err.contains("line"), "{err}");
    assert_eq!(homstar(&["fold", "/nonexistent.json"]).status.code(), Some(2));
}

#[test]
fn out_file_and_text_format() {
    let dir = TempDir::new().unwrap();
    let (g, h) = (write(dir.path(), "g.json", ONE_STAR), write(dir.path(), "h.json", C5));
    let dest = dir.path().join("report.txt");
    let out = homstar(&["--format", "text", "--out", p(&dest), "hom", p(&g), p(&h)]);
    assert!(out.status.success() && out.stdout.is_empty());
    let text = std::fs::read_to_string(dest).unwrap();
    assert!(text.contains("invariants.euler: 0"), "{text}");
}
