use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_letproof"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("running letproof")
}

fn here(rel: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests").join(rel)
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn golden(name: &str, actual: &str) {
    let path = here(&format!("golden/{name}"));
    let expected = std::fs::read_to_string(&path).unwrap();
    assert_eq!(actual, expected, "output differs from {}", path.display());
}

#[test]
fn decide_verdicts_and_exit_codes() {
    let o = run(&["decide", "--logic", "letj", "@p, p, ~p => q"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "provable\n");

    let o = run(&["decide", "--logic", "gb-cutfree", "@(p&q), p, q, ~p =>"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "unprovable\n");

    let o = run(&["decide", "--logic", "letf", "@p, ~@p => q"]);
    assert_eq!(o.status.code(), Some(0));

    let o = run(&["decide", "--logic", "letf", "--letf-negcirc", "printed", "@p, ~@p => q"]);
    assert_eq!(o.status.code(), Some(1));

    let o = run(&["decide", "--logic", "letj", "--budget", "2", "@(p&q), p, q, ~p =>"]);
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(stdout(&o), "budget-exceeded\n");
}

#[test]
fn input_errors_exit_2() {
    let o = run(&["parse", "p ->"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("syntax error"));

    assert_eq!(run(&["decide", "--logic", "letj", "p => q, r"]).status.code(), Some(2));
    assert_eq!(run(&["decide", "--logic", "letf", "p -> q =>"]).status.code(), Some(2));
    assert_eq!(run(&["check", "--kind", "seq", "/nonexistent.json"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn parse_formats() {
    let o = run(&["parse", "@(p&q) -> ~r"]);
    assert_eq!(stdout(&o), "@(p & q) -> ~r\n");
    let o = run(&["parse", "~~p", "--format", "latex"]);
    assert_eq!(stdout(&o), "\\neg\\neg p\n");
    let o = run(&["parse", "~p | q", "--format", "json"]);
    assert_eq!(stdout(&o), "{\"or\":[{\"not\":{\"atom\":\"p\"}},{\"atom\":\"q\"}]}\n");
}

#[test]
fn emitted_proof_checks_and_translates() {
    let dir = tempfile::tempdir().unwrap();
    let proof = dir.path().join("proof.json");
    let o = run(&[
        "decide",
        "--logic",
        "letj",
        "@(p & q), p, q, ~p =>",
        "--emit-proof",
        proof.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["check", "--kind", "seq", proof.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).starts_with("valid GLETJ proof"));

    let o = run(&["translate", "--to", "nd", proof.to_str().unwrap(), "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let nd = dir.path().join("nd.json");
    std::fs::write(&nd, stdout(&o)).unwrap();
    let o = run(&["check", "--kind", "nd", nd.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).starts_with("valid NLETJ deduction of bot"));

    let o = run(&["translate", "--to", "seq", "--gletj", nd.to_str().unwrap(), "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let back = dir.path().join("back.json");
    std::fs::write(&back, stdout(&o)).unwrap();
    let o = run(&["cutelim", back.to_str().unwrap(), "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(!stdout(&o).contains("\"Cut\""));
}

#[test]
fn check_system_override_and_tampering() {
    let f = here("fixtures/circ_excluded_middle.nd.json");
    let o = run(&["check", "--kind", "nd", "--system", "nletf", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));

    let f = here("fixtures/circ_excluded_middle.seq.json");
    let text = std::fs::read_to_string(&f).unwrap();
    let bad = text.replacen("\"p | ~p\"", "\"q | ~p\"", 1);
    assert_ne!(bad, text);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, bad).unwrap();
    let o = run(&["check", "--kind", "seq", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn normalize_trace() {
    let f = here("fixtures/circ_excluded_middle.nd.json");
    let o = run(&["normalize", "--trace", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stderr(&o),
        "start (3, 1)\nstep 1: detour at [2, 0] (2, 1)\nstep 2: detour at [1, 0] (0, 0)\n"
    );
    assert_eq!(
        stdout(&o),
        "p | ~p  [PEM u1,u2]\n  @p  (open)\n  p | ~p  [OrI1]\n    [p]^u1\n  p | ~p  [OrI2]\n    [~p]^u2\n"
    );
}

#[test]
fn latex_golden_sequent_proof() {
    let o = run(&["decide", "--logic", "letj", "@p, p, ~p => q", "--format", "latex"]);
    let out = stdout(&o);
    let proof = out.strip_prefix("provable\n").unwrap();
    golden("explosion.seq.tex", proof);
}

#[test]
fn latex_golden_deduction() {
    let f = here("fixtures/circ_excluded_middle.nd.json");
    let o = run(&["normalize", f.to_str().unwrap(), "--format", "latex"]);
    golden("circ_excluded_middle.normal.tex", &stdout(&o));
}

#[test]
fn output_is_deterministic() {
    let args = ["decide", "--logic", "letf", "q => @p | ~@p", "--format", "json"];
    assert_eq!(stdout(&run(&args)), stdout(&run(&args)));
}

fn schema(name: &str) -> jsonschema::Validator {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../docs").join(name);
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    jsonschema::validator_for(&v).unwrap()
}

#[test]
fn json_output_matches_schemas() {
    let seq = schema("sequent-proof.schema.json");
    let nd = schema("deduction.schema.json");
    let o = run(&["decide", "--logic", "letf", "@p, ~@p => q", "--format", "json"]);
    let out = stdout(&o);
    let doc: serde_json::Value = serde_json::from_str(out.strip_prefix("provable\n").unwrap()).unwrap();
    assert!(seq.is_valid(&doc), "{doc}");

    let f = here("fixtures/circ_excluded_middle.nd.json");
    let o = run(&["normalize", f.to_str().unwrap(), "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(nd.is_valid(&doc), "{doc}");
    assert!(!nd.is_valid(&serde_json::json!({"kind": "lemma"})));
}
