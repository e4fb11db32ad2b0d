use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn em3(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_em3"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let o = em3(&all);
    (
        serde_json::from_slice(&o.stdout).unwrap(),
        o.status.code().unwrap(),
    )
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.display().to_string()
}

#[test]
fn nu_prints_value_and_matching() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(
        dir.path(),
        "f.txt",
        "# two disjoint edges\n6 3\n1 2 3\n1 2 4\n4 5 6\n",
    );
    let o = em3(&["nu", &f]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "nu = 2\n1 2 3\n4 5 6\n");
    let (v, code) = json(&["nu", &f]);
    assert_eq!(code, 0);
    assert_eq!(v["command"], "nu");
    assert_eq!(v["results"]["nu"], 2);
    assert_eq!(v["results"]["edges"], 3);
    assert!(v["elapsed_ms"].is_u64());
    assert!(v["version"].is_string());
}

#[test]
fn shift_writes_a_stable_family() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "f.txt", "6 2\n2 4 6\n3 5 6\n");
    let out = dir.path().join("out.txt");
    let o = em3(&["shift", &f, "-o", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(fs::read_to_string(&out).unwrap(), "6 2\n1 2 3\n1 2 4\n");
    let o = em3(&["shift", &f]);
    assert_eq!(stdout(&o), "6 2\n1 2 3\n1 2 4\n");
    let (v, _) = json(&["shift", &f]);
    assert_eq!(v["results"]["input_stable"], false);
}

#[test]
fn malformed_input_names_the_line() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "bad.txt", "5 2\n1 2 3\n1 2 9\n");
    let o = em3(&["nu", &f]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
    let o = em3(&["nu", dir.path().join("missing.txt").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_text_and_exit_codes() {
    let o = em3(&["verify", "--n", "9", "--s", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "m=56 M=56 OK\n");
    let o = em3(&["verify", "--n", "8", "--s", "1", "--one"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "m_ONE=16 M=21 OK\n");
    assert_eq!(
        em3(&["verify", "--n", "6", "--s", "1", "--mode", "brute", "--one"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        em3(&["verify", "--n", "20", "--s", "2"]).status.code(),
        Some(2)
    );
    assert_eq!(
        em3(&["verify", "--n", "12", "--s", "3", "--max-nodes", "10"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(em3(&["verify", "--n", "6"]).status.code(), Some(2));
    assert_eq!(em3(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn verify_writes_the_witness() {
    let dir = tempfile::tempdir().unwrap();
    let w = dir.path().join("w.txt");
    let (v, code) = json(&[
        "verify",
        "--n",
        "10",
        "--s",
        "2",
        "--witness",
        w.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let r = &v["results"];
    assert_eq!(r["m"], 64);
    assert_eq!(r["M"], "64");
    assert_eq!(r["status"], "equal");
    assert_eq!(r["witness"].as_array().unwrap().len(), 64);
    let text = fs::read_to_string(&w).unwrap();
    assert!(text.starts_with("10 64\n"));
    let o = em3(&["nu", w.to_str().unwrap()]);
    assert!(stdout(&o).starts_with("nu = 2\n"));
}

#[test]
fn results_do_not_depend_on_thread_count() {
    for args in [
        vec!["verify", "--n", "12", "--s", "3", "--one"],
        vec!["board-check", "--s-min", "8", "--s-max", "8"],
    ] {
        let runs: Vec<Value> = ["1", "3"]
            .iter()
            .map(|t| {
                let mut a = vec!["--threads", t];
                a.extend(args.iter().copied());
                json(&a).0["results"].clone()
            })
            .collect();
        assert_eq!(runs[0], runs[1], "{args:?}");
    }
    assert_eq!(
        em3(&["--threads", "0", "n1", "--s-max", "3"]).status.code(),
        Some(2)
    );
}

#[test]
fn n1_table() {
    let o = em3(&["n1", "--s-max", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<String> = stdout(&o)
        .lines()
        .map(|l| l.split_whitespace().collect::<Vec<_>>().join(" "))
        .collect();
    assert_eq!(
        lines,
        ["s n1_exact n1_formula", "1 6 6", "2 10 10", "3 13 13"]
    );
    let (v, _) = json(&["n1", "--s-max", "25"]);
    assert_eq!(v["results"][24]["n1_exact"], 90);
}

#[test]
fn facts_report() {
    let (v, code) = json(&["facts", "--s-max", "30", "--weights"]);
    assert_eq!(code, 0);
    let rows = v["results"]["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 30);
    assert_eq!(rows[0]["s"], 1);
    assert_eq!(rows[0]["n1"], 6);
    assert_eq!(rows[0]["bounds_ok"], serde_json::json!([true, true, null]));
    assert_eq!(rows[1]["bounds_ok"], serde_json::json!([true, true, true]));
    let w = &v["results"]["weights"][1];
    assert_eq!(w["s"], 4);
    assert_eq!(w["W"], serde_json::json!({"num": "91", "den": "1"}));
    let summary = &v["results"]["summary"];
    assert_eq!(summary["final_from"], 24);
    assert_eq!(summary["weights_all"], true);
}

#[test]
fn board_check_bound_and_exact() {
    let (v, code) = json(&["board-check", "--s-min", "25", "--s-max", "25"]);
    assert_eq!(code, 0);
    let r = &v["results"][0];
    assert_eq!(r["verified"], true);
    assert_eq!(r["mode"], "bound");
    assert_eq!(r["n"], Value::Null);
    assert_eq!(r["max_weight"], r["W"]);
    assert_eq!(r["W"], serde_json::json!({"num": "1463", "den": "46"}));
    assert!(r.get("witness").is_none());

    let (v, code) = json(&[
        "board-check",
        "--s-min",
        "25",
        "--s-max",
        "25",
        "--mode",
        "exact",
    ]);
    assert_eq!(code, 0);
    let ns: Vec<&Value> = v["results"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| &r["n"])
        .collect();
    assert_eq!(ns, [&serde_json::json!(89), &serde_json::json!(90)]);
}

#[test]
fn board_check_failure_emits_a_witness() {
    let o = em3(&["board-check", "--s-min", "4", "--s-max", "4"]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(
        text.starts_with("s=4 n=- mode=bound max_weight=93/1 W=91/1"),
        "{text}"
    );
    assert!(text.contains("VIOLATED"));
    assert!(text.contains("  witness: "));
    assert_eq!(
        em3(&["board-check", "--s-min", "5", "--s-max", "4"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        em3(&["board-check", "--s-min", "3", "--s-max", "3"])
            .status
            .code(),
        Some(2)
    );
}
