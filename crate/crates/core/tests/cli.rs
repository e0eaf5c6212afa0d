use std::fs;
use std::process::{Command, Output};

fn plcolor(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_plcolor")).args(args).output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn check_prints_json_and_succeeds() {
    let o = plcolor(&["check", "--family", "cycle:5", "--family", "complete:3", "--jobs", "2"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["summary"]["graphs"], 2);
    assert_eq!(v["summary"]["proved_failures"], 0);
    assert!(String::from_utf8_lossy(&o.stderr).contains("0 counterexamples"));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(code(&plcolor(&["check", "--bogus"])), 1);
    assert_eq!(code(&plcolor(&["frobnicate"])), 1);
    assert_eq!(code(&plcolor(&["check", "--family", "cycle:2"])), 1);
    assert_eq!(code(&plcolor(&["hunt", "--p", "half", "--count", "1"])), 1);
    assert_eq!(code(&plcolor(&["--help"])), 0);
}

#[test]
fn table_and_csv_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("t.json");
    let csv = dir.path().join("t.csv");
    let o = plcolor(&[
        "table",
        "--family",
        "complete:4",
        "--out-json",
        json.to_str().unwrap(),
        "--out-csv",
        csv.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(v["tables"][0]["table"]["values"], serde_json::json!([0, 1, 2, 3, 4]));
    let rows = fs::read_to_string(&csv).unwrap();
    assert_eq!(rows.lines().next(), Some("index,graph,t,lambda"));
    assert!(rows.contains("0,C~,3,3"));
}

#[test]
fn witness_round_trip_and_tampering() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache.jsonl");
    let c = cache.to_str().unwrap();
    assert_eq!(code(&plcolor(&["witness", "--cache", c, "--graph", "Bw", "--t", "2"])), 1);
    assert_eq!(code(&plcolor(&["table", "--family", "complete:3", "--cache", c])), 0);
    let o = plcolor(&["witness", "--cache", c, "--graph", "Bw", "--t", "2"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["value"], 2);
    assert_eq!(v["assignment"]["lists"], serde_json::json!([[0, 1], [0, 1], [0, 1]]));

    let text = fs::read_to_string(&cache).unwrap();
    fs::write(&cache, text.replacen("\"value\":2", "\"value\":3", 1)).unwrap();
    let o = plcolor(&["check", "--family", "complete:3", "--cache", c]);
    assert_eq!(code(&o), 1);
    assert!(String::from_utf8_lossy(&o.stderr).contains("integrity"));
}

#[test]
fn inconsistent_table_is_a_solver_bug() {
    // a self-consistent but non-minimal entry: disjoint lists on K3 color everything
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache.jsonl");
    fs::write(
        &cache,
        r#"{"version":1,"graph":"Bw","t":2,"palette":6,"value":3,"palette_limited":false,"lists":[3,12,48]}"#,
    )
    .unwrap();
    let c = cache.to_str().unwrap();
    let o = plcolor(&["table", "--family", "complete:3", "--cache", c]);
    assert_eq!(code(&o), 3, "{}", String::from_utf8_lossy(&o.stderr));
    assert!(String::from_utf8_lossy(&o.stderr).contains("solver bug"));
    let o = plcolor(&["check", "--family", "complete:3", "--cache", c]);
    assert_eq!(code(&o), 3);
}

#[test]
fn hunt_writes_nothing_without_counterexamples() {
    let dir = tempfile::tempdir().unwrap();
    let bundles = dir.path().join("b.jsonl");
    let out = dir.path().join("h.json");
    let args = |o: &str| {
        vec![
            "hunt".to_string(),
            "--n-min=5".into(),
            "--n-max=6".into(),
            "--count=8".into(),
            "--seed=3".into(),
            format!("--bundles={}", bundles.display()),
            format!("--out-json={o}"),
        ]
    };
    let run = |o: &str| Command::new(env!("CARGO_BIN_EXE_plcolor")).args(args(o)).output().unwrap();
    assert_eq!(code(&run(out.to_str().unwrap())), 0);
    let again = dir.path().join("h2.json");
    assert_eq!(code(&run(again.to_str().unwrap())), 0);
    assert_eq!(fs::read(&out).unwrap(), fs::read(&again).unwrap());
    assert!(fs::read_to_string(&bundles).map(|s| s.is_empty()).unwrap_or(true));
}
