use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

const Z4: &str = r#"{"name":"Z4","format":"table","table":[[0,1,2,3],[1,2,3,0],[2,3,0,1],[3,0,1,2]]}"#;

fn twisted(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_twisted")).args(args).output().expect("binary runs")
}

fn json(output: &Output) -> Value {
    serde_json::from_slice(&output.stdout).unwrap_or_else(|e| {
        panic!("{e}: {}{}", String::from_utf8_lossy(&output.stdout), String::from_utf8_lossy(&output.stderr))
    })
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let path: PathBuf = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_owned()
}

fn code(output: &Output) -> i32 {
    output.status.code().expect("exited")
}

#[test]
fn classes_of_inversion_on_z4() {
    let dir = TempDir::new().unwrap();
    let group = write(&dir, "z4.json", Z4);
    let aut = write(&dir, "inv.json", r#"{"images": [0, 3, 2, 1]}"#);
    let out = twisted(&["classes", "--group", &group, "--aut", &aut]);
    assert_eq!(code(&out), 0);
    let report = json(&out);
    assert_eq!(report["command"], "classes");
    assert_eq!(report["results"]["reidemeister"], 2);
    let members: Vec<&Value> = report["results"]["classes"].as_array().unwrap().iter().map(|c| &c["members"]).collect();
    assert_eq!(members, [&serde_json::json!([0, 2]), &serde_json::json!([1, 3])]);
    assert_eq!(report["passed"], true);
}

#[test]
fn identity_gives_ordinary_classes() {
    let out = twisted(&["classes", "--corpus", "S3", "--aut-index", "0"]);
    let report = json(&out);
    assert_eq!(report["results"]["reidemeister"], 3);
    let mut sizes: Vec<usize> = report["results"]["classes"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["members"].as_array().unwrap().len())
        .collect();
    sizes.sort();
    assert_eq!(sizes, [1, 2, 3]);
}

#[test]
fn malformed_input_exits_2() {
    let dir = TempDir::new().unwrap();
    let group = write(&dir, "bad.json", r#"{"format": "table", "table": [[0, 1], [0, 1]]}"#);
    let out = twisted(&["classes", "--group", &group, "--aut-index", "0"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("NotLatinSquare"));

    let out = twisted(&["classes", "--group", &write(&dir, "junk.json", "{"), "--aut-index", "0"]);
    assert_eq!(code(&out), 2);
    let out = twisted(&["classes", "--corpus", "Z4", "--aut-index", "7"]);
    assert_eq!(code(&out), 2);
    let faulty = write(&dir, "swap.json", r#"{"images": [0, 2, 1, 3]}"#);
    let out = twisted(&["classes", "--corpus", "Z4", "--aut", &faulty]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("NotHomomorphism"));
}

#[test]
fn order_cap_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_twisted"))
        .args(["classes", "--corpus", "S4", "--aut-index", "0"])
        .env("TWISTED_ORDER_CAP", "10")
        .output()
        .unwrap();
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("OrderLimitExceeded"));
    let out = Command::new(env!("CARGO_BIN_EXE_twisted"))
        .args(["classes", "--corpus", "S3", "--aut-index", "0"])
        .env("TWISTED_ORDER_CAP", "ten")
        .output()
        .unwrap();
    assert_eq!(code(&out), 2);
}

#[test]
fn tbft_over_all_automorphisms() {
    let out = twisted(&["tbft", "--corpus", "S3", "--all-automorphisms", "--deep"]);
    assert_eq!(code(&out), 0);
    let report = json(&out);
    let rows = report["results"]["automorphisms"].as_array().unwrap();
    assert_eq!(rows.len(), 6);
    for row in rows {
        assert_eq!(row["reidemeister"], 3);
        assert_eq!(row["fixed_characters"], 3);
        assert_eq!(row["coinvariants"], 3);
    }

    let dir = TempDir::new().unwrap();
    let group = write(&dir, "z4.json", Z4);
    let aut = write(&dir, "inv.json", r#"{"generator_images": [3]}"#);
    let report = json(&twisted(&["tbft", "--group", &group, "--aut", &aut]));
    assert_eq!(report["results"]["automorphisms"][0]["reidemeister"], 2);
    assert_eq!(report["results"]["automorphisms"][0]["fixed_characters"], 2);

    let trivial = write(&dir, "trivial.json", r#"{"format": "table", "table": [[0]]}"#);
    let report = json(&twisted(&["tbft", "--group", &trivial, "--aut-index", "0"]));
    assert_eq!(report["results"]["automorphisms"][0]["reidemeister"], 1);
    assert_eq!(report["passed"], true);
}

#[test]
fn spectra() {
    let report = json(&twisted(&["spectrum", "--family", "z"]));
    let values: Vec<&Value> = report["results"]["realized"].as_array().unwrap().iter().map(|w| &w["value"]).collect();
    assert_eq!(values, [&Value::from(2)]);
    assert_eq!(report["results"]["includes_infinity"], true);

    let report = json(&twisted(&["spectrum", "--family", "zn", "--n", "2", "--value-bound", "20"]));
    let values: Vec<u64> =
        report["results"]["realized"].as_array().unwrap().iter().map(|w| w["value"].as_u64().unwrap()).collect();
    assert_eq!(values, (1..=20).collect::<Vec<_>>());
    assert_eq!(report["passed"], true);

    let report = json(&twisted(&["spectrum", "--family", "heisenberg", "--search-bound", "6"]));
    let values: Vec<u64> =
        report["results"]["realized"].as_array().unwrap().iter().map(|w| w["value"].as_u64().unwrap()).collect();
    assert_eq!(values[0], 2);
    assert!(values.iter().all(|v| v % 2 == 0));
    assert_eq!(report["passed"], true);

    assert_eq!(code(&twisted(&["spectrum", "--family", "zn", "--n", "1", "--value-bound", "3"])), 3);
    assert_eq!(code(&twisted(&["spectrum", "--family", "z", "--value-bound", "0"])), 2);
}

#[test]
fn congruences() {
    let dir = TempDir::new().unwrap();
    let cat = write(&dir, "cat.json", r#"{"n": 2, "entries": [[2, 1], [1, 1]]}"#);
    let out = twisted(&["congruence", "--matrix", &cat, "--max-n", "3", "--periods"]);
    assert_eq!(code(&out), 0);
    let report = json(&out);
    let rows = report["results"]["rows"].as_array().unwrap();
    let table: Vec<(u64, u64, u64)> = rows
        .iter()
        .map(|r| (r["n"].as_u64().unwrap(), r["sum"].as_u64().unwrap(), r["quotient"].as_u64().unwrap()))
        .collect();
    assert_eq!(table, [(1, 1, 1), (2, 4, 2), (3, 15, 5)]);
    assert_eq!(report["results"]["periods"]["reports"].as_array().unwrap().len(), 3);

    let identity = write(&dir, "id.json", r#"{"n": 2, "entries": [[1, 0], [0, 1]]}"#);
    let out = twisted(&["congruence", "--matrix", &identity, "--max-n", "3"]);
    assert_eq!(code(&out), 3);
    assert!(String::from_utf8_lossy(&out.stderr).contains("R(φ^1) is infinite"));

    let report = json(&twisted(&["congruence", "--corpus", "S3", "--aut-index", "0", "--max-n", "6", "--periods"]));
    assert_eq!(report["passed"], true);
    let sums: Vec<i64> = report["results"]["rows"].as_array().unwrap().iter().map(|r| r["sum"].as_i64().unwrap()).collect();
    assert_eq!(sums, [3, 0, 0, 0, 0, 0]);

    let singular = write(&dir, "sing.json", r#"{"n": 2, "entries": [[2, 0], [0, 1]]}"#);
    assert_eq!(code(&twisted(&["congruence", "--matrix", &singular])), 2);
}

#[test]
fn isogredience_counts() {
    let s = |group: &str| json(&twisted(&["isogredience", "--corpus", group, "--aut-index", "0"]))["results"]["classes"].clone();
    assert_eq!(s("Q8"), 4);
    assert_eq!(s("Z6"), 1);
    assert_eq!(s("S3"), 3);
}

#[test]
fn character_table() {
    let report = json(&twisted(&["char-table", "--corpus", "S3"]));
    assert_eq!(report["results"]["degrees"], serde_json::json!([1, 1, 2]));
    assert_eq!(report["passed"], true);
    let report = json(&twisted(&["char-table", "--corpus", "Q8", "--lift"]));
    assert!(report["results"]["lift"].is_object());
}

#[test]
fn verify_corpus_runs() {
    let report = json(&twisted(&["verify-corpus", "--max-order", "1"]));
    assert_eq!(report["passed"], true);
    assert_eq!(report["results"]["summary"].as_array().unwrap().len(), 1);

    let report = json(&twisted(&["verify-corpus", "--max-order", "12"]));
    assert_eq!(report["passed"], true);
    assert!(report["checks"].as_array().unwrap().iter().any(|c| c["property"] == "twisted-inner-character"));
}

#[test]
fn faulty_fixture_is_named() {
    let dir = TempDir::new().unwrap();
    let extra = write(
        &dir,
        "extra.json",
        &format!(r#"{{"group": {Z4}, "automorphisms": [[0, 1, 2, 3], [0, 2, 1, 3]]}}"#),
    );
    let out = twisted(&["verify-corpus", "--max-order", "4", "--extra", &extra]);
    assert_eq!(code(&out), 1);
    let report = json(&out);
    let failures = report["results"]["failures"].as_array().unwrap();
    assert_eq!(failures.len(), 1);
    assert_eq!(failures[0]["group"], "Z4");
    assert_eq!(failures[0]["automorphism_index"], 1);
    assert_eq!(failures[0]["property"], "valid-automorphism");
    assert!(String::from_utf8_lossy(&out.stderr).contains("Z4 automorphism 1"));
}

#[test]
fn results_are_deterministic() {
    let run = || json(&twisted(&["tbft", "--corpus", "D4", "--all-automorphisms"]));
    let (a, b) = (run(), run());
    assert_eq!(a["results"], b["results"]);
    assert_eq!(a["inputs_digest"], b["inputs_digest"]);
    let other = json(&twisted(&["tbft", "--corpus", "D5", "--all-automorphisms"]));
    assert_ne!(a["inputs_digest"], other["inputs_digest"]);
}

#[test]
fn pretty_tables() {
    let out = twisted(&["--pretty", "classes", "--corpus", "Z4", "--aut-index", "1"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("Z4: R(φ) = 2"), "{text}");
    assert!(text.contains("[pass] orbit-stabilizer"));
}
