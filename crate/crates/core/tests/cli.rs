use std::process::{Command, Output};

use serde_json::Value;

fn antipodal(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_antipodal")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("bad json ({e}): {}", String::from_utf8_lossy(&out.stdout)))
}

#[test]
fn q_and_table() {
    let out = antipodal(&["q", "--h", "2"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["q"], 3);
    assert_eq!(v["min_vertices"], 4);

    let v = json(&antipodal(&["q", "--h", "0"]));
    assert_eq!(v["q"], 1);
    assert!(v["min_vertices"].is_null());

    let v = json(&antipodal(&["table", "--h-max", "6"]));
    let qs: Vec<u64> = v["entries"].as_array().unwrap().iter().map(|e| e["q"].as_u64().unwrap()).collect();
    assert_eq!(qs, vec![1, 2, 3, 3, 4, 4, 5]);
}

#[test]
fn build_then_verify_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let caps = dir.path().join("caps.json");
    let lifted = dir.path().join("lift.json");
    let out = antipodal(&["cover", "build", "--dim", "2", "--method", "caps", "--out", caps.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(json(&out)["n_sets"], 4);
    let out = antipodal(&[
        "cover", "build", "--dim", "3", "--method", "lift", "--epsilon", "0.05", "--out", lifted.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert_eq!(json(&out)["n_sets"], 5);

    let out = antipodal(&["cover", "verify", "--in", caps.to_str().unwrap(), "--samples", "20000", "--nerve"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["verdict"], "pass");
    assert_eq!(v["report"]["max_multiplicity"], 3);
    assert_eq!(v["report"]["seed"], 42);
    assert_eq!(v["nerve"]["dimension"], 2);

    let out = antipodal(&["cover", "verify", "--in", lifted.to_str().unwrap(), "--samples", "20000"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["cover"]["epsilon"], 0.05);
    assert!(v["report"]["max_multiplicity"].as_u64().unwrap() <= 4);
    assert!(v.get("nerve").is_none());
}

#[test]
fn failing_verdict_exits_with_one() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("wide.json");
    std::fs::write(
        &path,
        r#"{"sphere_dim": 2, "sets": [{"kind": "cap", "normal": [0.0, 0.0, 1.0], "threshold": 0.5}]}"#,
    )
    .unwrap();
    let out = antipodal(&["cover", "verify", "--in", path.to_str().unwrap(), "--samples", "100"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["verdict"], "fail");
    assert_eq!(v["report"]["antipodal_free"], false);
    assert_eq!(v["report"]["covered"], false);
}

#[test]
fn errors_exit_with_two() {
    let out = antipodal(&["check", "--id", "thm9.9"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(json(&out)["error"].as_str().unwrap().contains("unknown check id"));

    let out = antipodal(&["check", "--id", "thm4.3-even", "--k", "5", "--allow-large"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(json(&out)["error"].as_str().unwrap().contains("infeasible size"));

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("x.json");
    let out = antipodal(&["cover", "build", "--dim", "2", "--method", "lift", "--epsilon", "0.5", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    std::fs::write(&path, r#"{"sphere_dim": 1, "sets": [{"kind": "cap", "normal": [2.0, 0.0], "threshold": 0.0}]}"#)
        .unwrap();
    let out = antipodal(&["cover", "verify", "--in", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn checks_pass_and_record_parameters() {
    let v = json(&antipodal(&["check", "--id", "thm4.3-odd", "--k", "2"]));
    assert_eq!(v["verdict"], "pass");
    assert_eq!(v["parameters"]["k"], 2);
    assert!(v["evidence"]["assertions"].as_array().unwrap().iter().all(|a| a["pass"] == true));

    let v = json(&antipodal(&["check", "--id", "remark4.4", "--parity", "odd"]));
    assert_eq!(v["verdict"], "pass");
    assert_eq!(v["evidence"]["details"]["odd"]["deleted_square"]["betti"]["betti"], serde_json::json!([1, 1]));

    let v = json(&antipodal(&["check", "--id", "lemma4.1-lift", "--h", "3", "--samples", "5000", "--seed", "9"]));
    assert_eq!(v["verdict"], "pass");
    assert_eq!(v["parameters"]["seed"], 9);
    assert_eq!(v["parameters"]["epsilon"], 0.05);
}

#[test]
fn complex_listing() {
    let v = json(&antipodal(&["complex", "--n-vertices", "3", "--k", "1"]));
    assert_eq!(v["cell_counts"], serde_json::json!([6, 6]));
    let cells = v["cells"].as_array().unwrap();
    let edge = cells.iter().find(|c| c["label"] == "[0]x[1,2]").unwrap();
    assert_eq!(edge["boundary"], serde_json::json!(["[0]x[1]", "[0]x[2]"]));

    let v = json(&antipodal(&["complex", "--n-vertices", "3", "--k", "1", "--orbit"]));
    assert_eq!(v["cell_counts"], serde_json::json!([3, 3]));
}
