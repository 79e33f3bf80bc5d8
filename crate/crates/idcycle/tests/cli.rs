//! CLI behavior tests driven through `run_cli` with captured output.

use idcycle::harness::run_cli;

const C21: &str = "RWWRRWWRWWRRWWRWWRRWW";

fn run(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let all: Vec<&str> = std::iter::once("idcycle").chain(args.iter().copied()).collect();
    let code = run_cli(all, &mut out);
    (code, String::from_utf8(out).unwrap())
}

#[test]
fn check_id_coloring() {
    let (code, out) = run(&["check", "RRWRWWW"]);
    assert_eq!(code, 0);
    assert!(out.contains("ID-coloring: yes"));
    assert!(out.contains("symmetric: no"));
}

#[test]
fn check_c21_example() {
    let (code, out) = run(&["check", C21]);
    assert_eq!(code, 0);
    assert!(out.contains("ID-coloring: no"));
    assert!(out.contains("central vertices 0 7 14"));
}

#[test]
fn check_json_schema() {
    let (code, out) = run(&["--json", "check", C21]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["n"], 21);
    assert_eq!(v["isId"], false);
    assert_eq!(v["witness"], serde_json::json!([0, 7]));
    assert_eq!(v["centralVertices"], serde_json::json!([0, 7, 14]));
}

#[test]
fn codes_golden() {
    let (code, out) = run(&["codes", C21]);
    assert_eq!(code, 0);
    assert!(out.contains("u0 [0,0,2,2,0,0,2,0,0,2]"));
    assert!(out.contains("u1 [1,1,1,1,1,1,0,1,1,1]"));
    assert_eq!(out.lines().count(), 21);
}

#[test]
fn codes_json() {
    let (code, out) = run(&["--json", "codes", "RWWRWWW"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["codes"].as_array().unwrap().len(), 7);
}

#[test]
fn trace_default_pair() {
    let (code, out) = run(&["trace", "RWWRWWW"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("trace n=7 a=0 b=3 k=4 central=5 success=true"));
    assert!(out.contains("pairs=(0,3) (4,6) (2,1)"));
}

#[test]
fn trace_explicit_pair_json() {
    let (code, out) = run(&["--json", "trace", "RWWRWWW", "--pair", "0,3"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["ctx"]["j"], 5);
    assert_eq!(v["k"], 4);
    assert_eq!(v["success"], true);
    assert_eq!(v["terminated_at_step"], 3);
    assert_eq!(v["steps"].as_array().unwrap().len(), 3);
}

#[test]
fn trace_composite_rejected() {
    let (code, out) = run(&["trace", C21, "--pair", "3,4"]);
    assert_eq!(code, 2);
    assert!(out.contains("not prime"));
}

#[test]
fn trace_on_id_coloring() {
    let (code, out) = run(&["trace", "RRWRWWW"]);
    assert_eq!(code, 0);
    assert!(out.contains("nothing to reconstruct"));
}

#[test]
fn trace_bad_pair_argument() {
    let (code, out) = run(&["trace", "RWWRWWW", "--pair", "0;3"]);
    assert_eq!(code, 2);
    assert!(out.contains("vertex pair"));
}

#[test]
fn generate_families() {
    let (code, out) = run(&["generate", "sa", "--n", "9", "--p", "3"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "WRWWRWRRW");

    let (code, out) = run(&["generate", "sa", "--n", "9"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "WRWWRWRRW");

    let (code, out) = run(&["generate", "multicentral", "--n", "15", "--p", "5"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "RWWWWRWWWWRWWWW");

    let (code, out) = run(&["generate", "singlered", "--n", "6"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "RWWWWW");

    let (code, out) = run(&["generate", "sa", "--n", "7"]);
    assert_eq!(code, 2);
    assert!(out.contains("odd composite"));
}

#[test]
fn verify_pass_and_domain_error() {
    let (code, out) = run(&["verify", "prime-equivalence", "--n", "11"]);
    assert_eq!(code, 0);
    assert!(out.contains("theorem T2.1 n=11 checked=2048 failures=0"));

    let (code, out) = run(&["verify", "prime-equivalence", "--n", "9"]);
    assert_eq!(code, 2);
    assert!(out.contains("not prime"));
}

#[test]
fn verify_json_schema() {
    let (code, out) = run(&["--json", "verify", "composite-counterexamples", "--n", "9"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["theorem"], "T3.1");
    assert_eq!(v["n"], 9);
    assert_eq!(v["checked"], 2);
    assert_eq!(v["failures"], serde_json::json!([]));
    assert!(v["elapsedMs"].is_u64());
}

#[test]
fn path_subcommands() {
    let (code, out) = run(&["path", "check", "RRWWRR"]);
    assert_eq!(code, 0);
    assert!(out.contains("ID-coloring: no"));

    let (code, out) = run(&["path", "criterion", "RRWWRW"]);
    assert_eq!(code, 0);
    assert!(out.contains("ID-coloring: yes"));

    let (code, out) = run(&["path", "criterion", "WRWWWW"]);
    assert_eq!(code, 2);
    assert!(out.contains("at least two red"));

    let (code, out) = run(&["--json", "path", "check", "RRWWRR"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["isId"], false);
}

#[test]
fn malformed_coloring_names_position() {
    let (code, out) = run(&["check", "RWXRW"]);
    assert_eq!(code, 2);
    assert!(out.contains("'X' at position 3"));
}

#[test]
fn usage_errors_and_help() {
    let (code, _) = run(&["frobnicate"]);
    assert_eq!(code, 2);

    let (code, out) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("Usage"));
}
