use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_antiramsey")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut a = args.to_vec();
    a.push("--json");
    let o = run(&a);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn compute_p4() {
    let o = run(&["compute", "--graph", "P4", "--n", "5", "--phi", "od"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("Od(5, P4) = 3"), "{text}");
    assert!(text.contains("witness at m=2"), "{text}");

    let v = json(&["compute", "--graph", "P4", "--n", "5", "--phi", "od"]);
    assert_eq!(v["phi"], 3);
    assert_eq!(v["witness"]["m"], 2);
    assert_eq!(v["witness"]["edge_order"], "lex-pairs");
    assert_eq!(v["known"]["value"], 3);
}

#[test]
fn verify_construction() {
    let o = run(&["verify", "--pattern", "krs:1", "--n", "20", "--graph", "C4", "--phi", "lr"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("certificate: true"), "{text}");
    assert!(text.contains(">= 21"), "{text}");
    let v = json(&["verify", "--pattern", "krs:1", "--n", "20", "--graph", "C4", "--phi", "lr"]);
    assert_eq!(v["implied_lower_bound"], 21);
}

#[test]
fn witness_round_trip_and_tampering() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("w.json");
    let p = path.to_str().unwrap();
    let o = run(&["compute", "--graph", "C4", "--n", "5", "--phi", "od", "--out", p]);
    assert_eq!(o.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(doc["m"], 5);
    assert_eq!(doc["verified"], true);
    let o = run(&["verify", "--witness", p]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("Od(5, C4) >= 6"));

    // all colors distinct: every C4 copy is now odd-colored
    let mut bad = doc.clone();
    bad["colors"] = serde_json::json!((0..10).collect::<Vec<u32>>());
    bad["m"] = serde_json::json!(10);
    std::fs::write(&path, bad.to_string()).unwrap();
    let o = run(&["verify", "--witness", p]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("failed verification"));

    // a single flipped entry changes the color count
    let mut bad = doc.clone();
    bad["colors"][9] = serde_json::json!(0);
    std::fs::write(&path, bad.to_string()).unwrap();
    assert_eq!(run(&["verify", "--witness", p]).status.code(), Some(1));
}

#[test]
fn missing_witness_is_an_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("none.json");
    let o = run(&["decide", "--graph", "C3", "--n", "4", "--m", "4", "--phi", "ar", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("no"));
    assert!(String::from_utf8_lossy(&o.stderr).contains("no witness"));
    assert!(!path.exists());
}

#[test]
fn decide() {
    let v = json(&["decide", "--graph", "C4", "--n", "4", "--m", "3", "--phi", "od"]);
    assert_eq!(v["avoidable"], true);
    assert_eq!(v["witness"].as_array().unwrap().len(), 6);
    let v = json(&["decide", "--graph", "C3", "--n", "4", "--m", "4", "--phi", "ar"]);
    assert_eq!(v["avoidable"], false);
}

#[test]
fn table_matches_registry() {
    let v = json(&["table", "--n", "5", "--max-edges", "4"]);
    let rows = v["rows"].as_array().unwrap();
    assert!(rows.len() >= 10);
    for row in rows {
        assert!(row["hierarchy_violations"].as_array().unwrap().is_empty());
        let cells = row["cells"].as_array().unwrap();
        assert_eq!(cells.len(), 8);
        for c in cells {
            assert_ne!(c["status"], "mismatch", "{row}");
            assert_ne!(c["status"], "inexact", "{row}");
        }
    }
    let c4 = rows.iter().find(|r| r["pattern"] == "C4").unwrap();
    assert_eq!(c4["cells"][3]["value"], 6);
    assert_eq!(c4["cells"][3]["status"], "match");
}

#[test]
fn budget_exhaustion_exits_2() {
    let o = run(&["compute", "--graph", "K4", "--n", "7", "--phi", "sod", "--budget-nodes", "2000"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("not exact"));
}

#[test]
fn usage_errors_exit_1() {
    assert_eq!(run(&[]).status.code(), Some(1));
    assert_eq!(run(&["nope"]).status.code(), Some(1));
    assert_eq!(run(&["compute", "--graph", "P4", "--n", "5"]).status.code(), Some(1));
    let o = run(&["compute", "--graph", "Q9", "--n", "5", "--phi", "od"]);
    assert_eq!(o.status.code(), Some(1));
    let o = run(&["construct", "--pattern", "krs:9", "--n", "6"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("krs needs"));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn hierarchy_and_registry() {
    let v = json(&["check-hierarchy", "--values", "od=4,cf=3"]);
    let viol = v["violations"].as_array().unwrap();
    assert_eq!(viol.len(), 1);
    assert!(viol[0].as_str().unwrap().starts_with("Cf->Od"));
    let v = json(&["check-hierarchy", "--graph", "P4", "--n", "5"]);
    assert!(v["violations"].as_array().unwrap().is_empty());
    assert_eq!(v["values"]["lp"], 1);
    let v = json(&["known", "--graph", "K4", "--n", "12", "--phi", "sod"]);
    assert_eq!(v["known"]["lo"], 22);
    assert_eq!(v["known"]["hi"], 60);
}

#[test]
fn orientations() {
    let v = json(&["orient", "--graph", "K4-e"]);
    assert_eq!(v["result"]["perm"].as_array().unwrap().len(), 4);
    let v = json(&["orient", "--graph", "C5"]);
    assert!(v["result"].is_null());
    let v = json(&["count-orient", "--graph", "P3", "--kind", "omo"]);
    assert!(v["count"].as_u64().unwrap() > 0);
    let v = json(&["experiment-omo-bipartite", "--max-order", "6"]);
    assert_eq!(v["counterexamples"].as_array().unwrap().len(), 0);
}

#[test]
fn construct_and_diagnostics() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c.json");
    let o = run(&["construct", "--pattern", "lex", "--n", "6", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(doc["m"], 5);
    assert_eq!(doc["claimed"], 5);
    let v = json(&["canonical-clique", "--pattern", "rainbow", "--n", "6", "--k", "4"]);
    assert_eq!(v["clique"]["type"], "rainbow");
    let v = json(&["critical", "--pattern", "lex", "--n", "6", "--vertex", "5"]);
    assert_eq!(v["critical"].as_array().unwrap().len(), 1);
}
