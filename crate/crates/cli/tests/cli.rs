use std::process::{Command, Output};

use serde_json::Value;

fn slittle(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_slittle"))
        .args(args)
        .env_remove("SIGNED_LITTLE_JOBS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let o = slittle(&all);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn words_lists_and_counts() {
    let o = slittle(&["words", "[2,1,5,4,3]"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 9);
    assert_eq!(lines[..8], ["1343", "1434", "3143", "3413", "3431", "4134", "4314", "4341"]);
    assert_eq!(lines[8], "count: 8");

    let v = json(&["words", "[1]"]);
    assert_eq!(v["count"], 1);
    assert_eq!(v["words"], serde_json::json!([""]));

    let v = json(&["words", "[-1,-2]"]);
    assert_eq!(v["words"], serde_json::json!(["0101", "1010"]));
}

#[test]
fn output_is_deterministic() {
    let a = slittle(&["words", "[3,-1,2]"]);
    let b = slittle(&["words", "[3,-1,2]"]);
    assert_eq!(a.stdout, b.stdout);
    let a = slittle(&["graph", "ck-b", "[-2,-1,3]", "--format", "json"]);
    let b = slittle(&["graph", "ck-b", "[-2,-1,3]", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn malformed_input_is_a_usage_error() {
    assert_eq!(slittle(&["words", "[2,2]"]).status.code(), Some(2));
    assert_eq!(slittle(&["words", "[a]"]).status.code(), Some(2));
    assert_eq!(slittle(&["verify", "nope"]).status.code(), Some(2));
    assert_eq!(slittle(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(slittle(&["insert", "11", "--type=b"]).status.code(), Some(2));
    assert_eq!(slittle(&["insert", "0", "--type=a"]).status.code(), Some(2));
}

#[test]
fn bump_trace_and_inverse() {
    let v = json(&["bump", "1021201", "--i=-2", "--j=1", "--down"]);
    let pushes: Vec<(i64, i64)> = v["steps"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| (s["position"].as_i64().unwrap(), s["delta"].as_i64().unwrap()))
        .collect();
    assert_eq!(
        pushes,
        [(3, -1), (4, -1), (6, 1), (7, 1), (1, -1), (2, 1), (3, 1), (5, 1)]
    );
    assert_eq!(v["result"], "0120312");
    assert_eq!(v["start"], serde_json::json!({"i": -2, "j": 1, "delta": -1}));

    // Undo with the reported inverse.
    let inv = &v["inverse"];
    let (i, j) = (format!("--i={}", inv["i"]), format!("--j={}", inv["j"]));
    let dir = if inv["delta"] == 1 { "--up" } else { "--down" };
    let back = json(&["bump", "0120312", &i, &j, dir]);
    assert_eq!(back["result"], "1021201");
}

#[test]
fn bump_diagnostics() {
    let o = slittle(&["bump", "1021201", "--i=2", "--j=3"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("inversion"), "{err}");

    let o = slittle(&["bump", "0", "--canonical"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("increasing"));

    let v = json(&["bump", "1343", "--canonical"]);
    assert_eq!(v["start"]["delta"], -1);
}

#[test]
fn insertion_pairs() {
    let v = json(&["insert", "1343", "--type=b"]);
    assert_eq!(v["p"]["rows"], serde_json::json!([[4, 3, 4], [1]]));
    assert_eq!(v["q"]["rows"], serde_json::json!([[1, 2, 3], [4]]));
    let v = json(&["insert", "1343", "--type=a"]);
    assert_eq!(v["p"]["rows"], serde_json::json!([[1, 3, 4], [4]]));
    assert_eq!(v["q"]["rows"], serde_json::json!([[1, 2, 3], [4]]));
    let v = json(&["insert", "021032101", "--type=b"]);
    assert_eq!(v["p"]["rows"], serde_json::json!([[3, 2, 1, 0, 1], [2, 1, 0], [0]]));
    assert_eq!(v["q"]["rows"], serde_json::json!([[1, 2, 4, 5, 9], [3, 6, 8], [7]]));
    assert_eq!(v["rendered"]["q"], "    7\n  3 6 8\n1 2 4 5 9\n");
}

#[test]
fn graph_exports() {
    let dot = stdout(&slittle(&["graph", "sg", "[3,2,1]"]));
    assert!(dot.starts_with("graph"));
    assert_eq!(dot.matches(" -- ").count(), 3);
    let v = json(&["graph", "ck-a", "[2,1,5,4,3]"]);
    assert_eq!(v["vertices"].as_array().unwrap().len(), 8);
    let wiring = stdout(&slittle(&["graph", "wiring", "0120312"]));
    assert!(wiring.contains("graph") || wiring.contains("digraph"));
    assert_eq!(slittle(&["graph", "ck-a", "[-1]"]).status.code(), Some(2));
}

#[test]
fn expansion_agrees_with_insertion() {
    let v = json(&["expand", "[3,-1,2]", "--vars", "3"]);
    assert!(v["g"].as_object().is_some_and(|g| !g.is_empty()));
    assert!(v["polynomial"].as_object().is_some());
    let v = json(&["expand", "[-2,-1]"]);
    assert_eq!(v["leaves"], serde_json::json!({"[-2,-1]": 1}));
}

#[test]
fn verify_suites_and_exit_codes() {
    let o = slittle(&["verify", "transition", "--group=B3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("PASS"));
    let v = json(&["verify", "ckcommute", "--group=B5", "--len=4", "--jobs", "2"]);
    assert_eq!(v["report"]["passed"], v["report"]["instances"]);
    let v = json(&["verify", "sdeg-axioms", "--maxcells=8"]);
    assert!(v["report"]["failures"].as_array().unwrap().is_empty());
    assert_eq!(slittle(&["verify", "peaks", "--group=C3"]).status.code(), Some(2));
}

#[test]
fn config_file_supplies_defaults() {
    let dir = std::env::temp_dir().join(format!("slittle-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("config.toml");
    std::fs::write(&path, "format = \"json\"\nrank = 2\nlen = 3\n").unwrap();
    let cfg = path.to_str().unwrap();
    let o = slittle(&["--config", cfg, "verify", "peaks"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["bounds"]["rank"], 2);
    assert_eq!(v["bounds"]["max_len"], 3);
    // Flags win over the file.
    let o = slittle(&["--config", cfg, "--format", "text", "verify", "peaks", "--len", "2"]);
    assert!(stdout(&o).starts_with("PASS peaks (B_2, length ≤ 2"));
    std::fs::write(&path, "colour = 1\n").unwrap();
    assert_eq!(slittle(&["--config", cfg, "words", "[1]"]).status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}
