use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn qrep(args: &[&str]) -> Output {
    qrep_env(args, &[])
}

fn qrep_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_qrep"));
    cmd.args(args).env_remove("QREP_PRIME");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("qrep runs")
}

fn write_quiver(dir: &TempDir, name: &str, json: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, json).unwrap();
    path
}

fn arg(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

const A2: &str = r#"{"vertices": 2, "arrows": [[0, 1]]}"#;
const D4: &str = r#"{"vertices": 4, "arrows": [[0, 1], [2, 1], [1, 3]]}"#;

#[test]
fn ice_lists_six_subcategories_for_a2() {
    let dir = TempDir::new().unwrap();
    let q = write_quiver(&dir, "a2.json", A2);
    let out = qrep(&["ice", arg(&q), "--list"]);
    assert!(out.status.success());
    let list: Vec<Value> = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(list.len(), 6);
    assert_eq!(list[0], serde_json::json!({"progenerator": [], "members": []}));
    let everything = serde_json::json!({"progenerator": [[0, 1], [1, 1]], "members": [[0, 1], [1, 0], [1, 1]]});
    assert!(list.contains(&everything));
}

#[test]
fn ice_and_rigid_have_the_same_size() {
    let dir = TempDir::new().unwrap();
    let q = write_quiver(&dir, "d4.json", D4);
    let ice: Value = serde_json::from_str(&stdout(&qrep(&["ice", arg(&q)]))).unwrap();
    let rigid: Vec<Value> = serde_json::from_str(&stdout(&qrep(&["rigid", arg(&q)]))).unwrap();
    assert_eq!(ice["count"], rigid.len());
    assert_eq!(rigid.len(), 120);
}

#[test]
fn mutate_reverses_the_sink() {
    let dir = TempDir::new().unwrap();
    let q = write_quiver(&dir, "a2.json", A2);
    let out = qrep(&["mutate", arg(&q), "--vertex", "1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), r#"{"vertices":2,"arrows":[[1,0]]}"#);
    let d4 = write_quiver(&dir, "d4.json", D4);
    assert_eq!(qrep(&["mutate", arg(&d4), "--vertex", "1"]).status.code(), Some(3));
    assert_eq!(qrep(&["mutate", arg(&d4), "--vertex", "9"]).status.code(), Some(3));
}

#[test]
fn count_table_for_a2() {
    let out = qrep(&["count", "--type", "A2", "--orientation", "0"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "type,orientation-id,i,enumerated,closed_form,match\nA2,0,0,1,1,true\nA2,0,1,3,3,true\nA2,0,2,2,2,true\n"
    );
    let all = stdout(&qrep(&["count", "--type", "D4"]));
    assert_eq!(all.lines().count(), 1 + 8 * 5);
    assert!(all.lines().skip(1).all(|l| l.ends_with(",true")));
}

#[test]
fn rigid_profile_formats() {
    let dir = TempDir::new().unwrap();
    let q = write_quiver(&dir, "a2.json", A2);
    let json: Value = serde_json::from_str(&stdout(&qrep(&["rigid", arg(&q), "--profile"]))).unwrap();
    assert_eq!(json, serde_json::json!({"type": "A2", "profile": [1, 3, 2], "total": 6}));
    assert_eq!(stdout(&qrep(&["rigid", arg(&q), "--profile", "--csv"])), "i,count\n0,1\n1,3\n2,2\n");
}

#[test]
fn indec_reports_tables() {
    let dir = TempDir::new().unwrap();
    let q = write_quiver(&dir, "a2.json", A2);
    let json: Value = serde_json::from_str(&stdout(&qrep(&["indec", arg(&q)]))).unwrap();
    assert_eq!(json["prime"], 5);
    assert_eq!(json["hom"], serde_json::json!([[1, 0, 1], [0, 1, 0], [0, 1, 1]]));
    assert_eq!(json["ext"][1][0], 1);
    let dims: Vec<&Value> = json["indecomposables"].as_array().unwrap().iter().map(|m| &m["dim"]).collect();
    assert_eq!(dims, [&serde_json::json!([0, 1]), &serde_json::json!([1, 0]), &serde_json::json!([1, 1])]);
}

#[test]
fn exit_codes_for_bad_input() {
    let dir = TempDir::new().unwrap();
    let bad = write_quiver(&dir, "bad.json", "{not json");
    assert_eq!(qrep(&["rigid", arg(&bad)]).status.code(), Some(3));
    let cyclic = write_quiver(&dir, "cyc.json", r#"{"vertices": 2, "arrows": [[0, 1], [1, 0]]}"#);
    assert_eq!(qrep(&["rigid", arg(&cyclic)]).status.code(), Some(3));
    let missing = dir.path().join("missing.json");
    assert_eq!(qrep(&["ice", arg(&missing)]).status.code(), Some(3));
    let affine = write_quiver(&dir, "tri.json", r#"{"vertices": 3, "arrows": [[0, 1], [1, 2], [0, 2]]}"#);
    assert_eq!(qrep(&["ice", arg(&affine)]).status.code(), Some(4));
    let star = write_quiver(&dir, "star.json", r#"{"vertices": 5, "arrows": [[0, 4], [1, 4], [2, 4], [3, 4]]}"#);
    assert_eq!(qrep(&["rigid", arg(&star), "--profile"]).status.code(), Some(4));
    assert_eq!(qrep(&["count", "--type", "E9"]).status.code(), Some(3));
    assert_eq!(qrep(&["verify", "--suite", "nonsense"]).status.code(), Some(3));
    let a2 = write_quiver(&dir, "a2.json", A2);
    assert_eq!(qrep_env(&["rigid", arg(&a2)], &[("QREP_PRIME", "4")]).status.code(), Some(3));
}

#[test]
fn prime_override_changes_only_the_field() {
    let dir = TempDir::new().unwrap();
    let q = write_quiver(&dir, "d4.json", D4);
    let p5: Value = serde_json::from_str(&stdout(&qrep(&["indec", arg(&q)]))).unwrap();
    let p2: Value = serde_json::from_str(&stdout(&qrep_env(&["indec", arg(&q)], &[("QREP_PRIME", "2")]))).unwrap();
    assert_eq!(p2["prime"], 2);
    assert_eq!(p2["hom"], p5["hom"]);
    assert_eq!(p2["ext"], p5["ext"]);
}

#[test]
fn verify_exit_codes() {
    let out = qrep(&["verify", "--suite", "counts", "--rank-bound", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let report: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["suite"], "counts");
    assert!(report["checks"].as_array().unwrap().iter().all(|c| c["status"] == "pass" && c.get("counterexample").is_none()));

    // nothing fits in a budget of one element
    let out = qrep(&["verify", "--suite", "ice-closure", "--rank-bound", "2", "--map-budget", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let report: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(report["checks"].as_array().unwrap().iter().any(|c| c["status"] == "budget_exceeded"));
}

#[test]
fn output_is_identical_across_thread_counts() {
    let dir = TempDir::new().unwrap();
    let q = write_quiver(&dir, "d4.json", D4);
    for args in [vec!["ice", arg(&q), "--list"], vec!["rigid", arg(&q)]] {
        let one = qrep_env(&args, &[("RAYON_NUM_THREADS", "1")]);
        let four = qrep_env(&args, &[("RAYON_NUM_THREADS", "4")]);
        let again = qrep_env(&args, &[("RAYON_NUM_THREADS", "4")]);
        assert!(one.status.success());
        assert_eq!(one.stdout, four.stdout);
        assert_eq!(four.stdout, again.stdout);
    }
}

#[test]
fn seed_table_is_reused() {
    let dir = TempDir::new().unwrap();
    let q = write_quiver(&dir, "d4.json", D4);
    let cache = dir.path().join("tables.json");
    let fresh = qrep(&["indec", arg(&q)]);
    let first = qrep(&["--seed-table", arg(&cache), "indec", arg(&q)]);
    assert!(cache.exists());
    let second = qrep(&["indec", arg(&q), "--seed-table", arg(&cache)]);
    assert_eq!(fresh.stdout, first.stdout);
    assert_eq!(first.stdout, second.stdout);

    let other_prime = qrep_env(&["--seed-table", arg(&cache), "indec", arg(&q)], &[("QREP_PRIME", "3")]);
    assert!(other_prime.status.success());
    let entries: Value = serde_json::from_str(&std::fs::read_to_string(&cache).unwrap()).unwrap();
    assert_eq!(entries.as_object().unwrap().len(), 2);

    std::fs::write(&cache, "garbage").unwrap();
    assert_eq!(qrep(&["--seed-table", arg(&cache), "indec", arg(&q)]).status.code(), Some(3));
}
