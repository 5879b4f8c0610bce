use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::{json, Value};

fn relkk() -> Command {
    Command::new(env!("CARGO_BIN_EXE_relkk"))
}

fn run(args: &[&str]) -> (i32, Value) {
    let out = relkk().args(args).output().unwrap();
    parse(out)
}

fn parse(out: Output) -> (i32, Value) {
    let code = out.status.code().unwrap();
    let text = if out.stdout.is_empty() {
        out.stderr
    } else {
        out.stdout
    };
    let doc = serde_json::from_slice(&text)
        .unwrap_or_else(|e| panic!("not JSON ({e}): {}", String::from_utf8_lossy(&text)));
    (code, doc)
}

#[test]
fn exit_codes_distinguish_accept_reject_and_bad_input() {
    let (code, doc) = run(&["rel-f-check", "[0,0,4]", "4"]);
    assert_eq!(code, 0);
    assert_eq!(doc["schema"], 1);
    assert_eq!(doc["accepted"], true);

    let (code, doc) = run(&["rel-f-check", "[0,0,4]", "2"]);
    assert_eq!(code, 1);
    assert_eq!(doc["failed_index"], 0);

    let (code, doc) = run(&["rel-f-check", "[0,\"x\"]", "2"]);
    assert_eq!(code, 2);
    assert!(doc["error"].is_string());

    let (code, _) = run(&["oracle", "complexes", "9"]);
    assert_eq!(code, 3);
}

#[test]
fn large_values_are_written_as_strings() {
    let (code, doc) = run(&["shadow", "upper", "1000000000000000000000", "3"]);
    assert_eq!(code, 0);
    assert!(doc["value"].is_string(), "{doc}");
    let (_, small) = run(&["shadow", "lower", "4", "2"]);
    assert!(small["value"].is_number(), "{small}");
}

#[test]
fn witness_f_round_trips_through_f_vector() {
    let (code, doc) = run(&["witness-f", "[0,0,4]", "4"]);
    assert_eq!(code, 0);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("witness.json");
    std::fs::write(&path, doc["witness"].to_string()).unwrap();
    let (code, out) = run(&["f-vector", path.to_str().unwrap(), "--expect", "[0,0,4]"]);
    assert_eq!(code, 0, "{out}");
    assert_eq!(out["f"]["entries"], json!([0, 0, 4]));
}

#[test]
fn witness_h_shelling_verifies() {
    let (code, doc) = run(&["witness-h", "[0,1,1]", "4"]);
    assert_eq!(code, 0);
    let psi = doc["witness"].to_string();
    let order = doc["shelling"].to_string();
    let (code, out) = run(&["shell-verify", &psi, &order]);
    assert_eq!(code, 0, "{out}");
}

#[test]
fn decomposition_feeds_the_witness_builder_via_stdin() {
    let (code, doc) = run(&["decompose", "[0,2,1]", "1", "1"]);
    assert_eq!(code, 0);
    let mut child = relkk()
        .args(["decomp-witness", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(doc["decomposition"].to_string().as_bytes())
        .unwrap();
    let (code, out) = parse(child.wait_with_output().unwrap());
    assert_eq!(code, 0, "{out}");
}

#[test]
fn output_flag_writes_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.json");
    let out = relkk()
        .args(["-o", path.to_str().unwrap(), "binom-rep", "10", "3"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(doc["schema"], 1);
}

#[test]
fn oracle_results_are_cached() {
    let dir = tempfile::tempdir().unwrap();
    let first = relkk()
        .args(["oracle", "rel-f", "3"])
        .env("RELKK_ORACLE_CACHE", dir.path())
        .output()
        .unwrap();
    assert!(first.status.success());
    let cached: Vec<_> = std::fs::read_dir(dir.path()).unwrap().collect();
    assert_eq!(cached.len(), 1);
    let second = relkk()
        .args(["oracle", "rel-f", "3"])
        .env("RELKK_ORACLE_CACHE", dir.path())
        .output()
        .unwrap();
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn fully_shellable_depends_on_the_ground_set() {
    let psi = json!({
        "delta": {"n": 4, "facets": [[1,2],[1,3],[1,4],[2,3],[2,4],[3,4]]},
        "gamma": {"n": 4, "facets": [[1,3],[2,4]]}
    })
    .to_string();
    let (code, _) = run(&["fully-shellable", &psi]);
    assert_eq!(code, 1);
    let (code, doc) = run(&["fully-shellable", &psi, "--ground", "5"]);
    assert_eq!(code, 0, "{doc}");
}
