use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rainbow-sat"))
        .args(args)
        .env_remove("RAINBOW_SAT_BUDGET")
        .output()
        .unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{e}: {}", String::from_utf8_lossy(&out.stdout))
    })
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn verify_cyclic_code() {
    let dir = tempfile::tempdir().unwrap();
    let code = write(dir.path(), "cyclic3.code", "3 3\n1 2 3\n2 3 1\n3 1 2\n");
    let out = run(&["code", "verify", "--in", &code, "--s", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let bad = write(dir.path(), "bad.code", "3 3\n1 2 3\n3 2 1\n");
    let out = run(&["code", "verify", "--in", &bad, "--s", "2"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn empty_graph_is_not_saturated() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "empty3.graph", "3 3\n");
    let out = run(&["graph", "verify", "--in", &g, "--s", "3"]);
    assert_eq!(out.status.code(), Some(1));
    let r = json(&out);
    assert_eq!(r["schema"], 1);
    assert_eq!(r["blocking_pair"], serde_json::json!({"u": 1, "v": 2, "color": 1}));
}

#[test]
fn rsat_of_three_vertices() {
    let out = run(&["rsat", "exact", "--n", "3", "--s", "3", "--t", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["minimum"], 3);
}

#[test]
fn budget_flag_beats_environment() {
    let tiny = Command::new(env!("CARGO_BIN_EXE_rainbow-sat"))
        .args(["rsat", "exact", "--n", "4", "--s", "3", "--t", "3"])
        .env("RAINBOW_SAT_BUDGET", "10")
        .output()
        .unwrap();
    assert_eq!(tiny.status.code(), Some(3));
    let ok = Command::new(env!("CARGO_BIN_EXE_rainbow-sat"))
        .args(["rsat", "exact", "--n", "3", "--s", "3", "--t", "3", "--budget", "100000"])
        .env("RAINBOW_SAT_BUDGET", "10")
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));
}

#[test]
fn parameter_errors_exit_2() {
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["bounds", "--n", "10", "--s", "4", "--t", "5"]).status.code(), Some(2));
    assert_eq!(run(&["code", "construct", "--t", "3", "--s", "2", "--k", "4"]).status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let junk = write(dir.path(), "junk.graph", "3 3\n1 2\n");
    assert_eq!(run(&["graph", "verify", "--in", &junk, "--s", "3"]).status.code(), Some(2));
}

#[test]
fn resource_errors_exit_3() {
    let out = run(&["code", "exact", "--t", "3", "--s", "2", "--k", "5", "--limit", "100"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("3^5"));
}

#[test]
fn bounds_report() {
    let out = run(&["bounds", "--n", "1000", "--s", "3", "--t", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    let c = r["coefficient"].as_f64().unwrap();
    assert!((c - 3.0 / (2.0 * 2f64.ln())).abs() < 1e-10);
    let v = r["asymptotic_lower"].as_f64().unwrap();
    assert!((v - c * 1000.0 * 1000f64.ln()).abs() < 1e-6);
    assert_eq!(r["trivial_upper"], 499500);
}

#[test]
fn pipeline_round_trips_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let p = |name: &str| dir.path().join(name).to_str().unwrap().to_string();
    let code = write(dir.path(), "c.code", "3 3\n1 2 3\n2 3 1\n3 1 2\n");
    assert_eq!(run(&["code", "product", "--in", &code, "--in", &code, "--s", "2", "--out", &p("c2.code")]).status.code(), Some(0));
    assert_eq!(run(&["code", "verify", "--in", &p("c2.code"), "--s", "2"]).status.code(), Some(0));
    assert_eq!(run(&["graph", "build", "--code", &p("c2.code"), "--out", &p("g0.graph")]).status.code(), Some(0));
    assert_eq!(run(&["graph", "extend", "--in", &p("g0.graph"), "--s", "3", "--out", &p("h.graph")]).status.code(), Some(0));
    assert_eq!(run(&["graph", "verify", "--in", &p("h.graph"), "--s", "3"]).status.code(), Some(0));

    let out = run(&["witness", "check", "--in", &p("h.graph"), "--s", "3", "--d", "9", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["schema"], 1);
    assert_eq!(r["k"], 6);
    assert_eq!(r["passed"], true);
    assert!(r["jensen_lhs"].is_u64());

    // a file the tool wrote re-loads to the same bytes when written again
    let h1 = std::fs::read_to_string(p("h.graph")).unwrap();
    assert_eq!(run(&["graph", "extend", "--in", &p("h.graph"), "--s", "3", "--out", &p("h2.graph")]).status.code(), Some(0));
    assert_eq!(std::fs::read_to_string(p("h2.graph")).unwrap(), h1);
}

#[test]
fn witness_check_on_unsaturated_graph_is_a_contract_failure() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "e.graph", "3 3\n");
    let out = run(&["witness", "check", "--in", &g, "--s", "3", "--d", "1", "--json"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn seeded_greedy_is_reproducible() {
    let args = ["code", "greedy", "--t", "3", "--s", "2", "--k", "5", "--seed", "42", "--restarts", "8"];
    let a = run(&args);
    let b = run(&args);
    let mut with_threads = args.to_vec();
    with_threads.extend(["--threads", "4"]);
    let c = run(&with_threads);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);
}
