use std::process::{Command, Output};

use serde_json::{json, Value};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qtbranch")).args(args).env_remove("QTBRANCH_MAX_GROUP").output().unwrap()
}

fn json_of(out: &Output) -> Value {
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn c_qt_golden() {
    let v = json_of(&run(&["compute", "c-qt", "--lambda", "2,1", "--mu", "1"]));
    assert_eq!(v["result"], json!({"num": [[2, 0, "2"], [0, 2, "-1"], [0, 0, "-1"]], "den": [[2, 0, "1"], [0, 0, "-1"]]}));
    assert_eq!(v["meta"]["n"], json!(2));
    assert_eq!(v["meta"]["method"], json!("psi-omega"));
}

#[test]
fn hall_littlewood_two_one() {
    let v = json_of(&run(&["compute", "hl", "--lambda", "2,1", "--n", "2"]));
    let one = json!({"num": [[0, 0, "1"]], "den": [[0, 0, "1"]]});
    assert_eq!(v["result"], json!({"n": 2, "terms": [[[2, 1], one], [[1, 2], one]]}));
}

#[test]
fn alpha_count() {
    let v = json_of(&run(&["compute", "alpha", "--lambda", "1,1", "--mu", "1", "--p", "3"]));
    assert_eq!(v["result"], json!(4));
    assert_eq!(v["meta"]["max_group"], json!(243));
}

#[test]
fn chain_count() {
    let out = run(&["compute", "chains", "--lambda", "1,1", "--mu", "1", "--mu", "", "--format", "pretty"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "4\n");
}

#[test]
fn default_cutoff_is_echoed() {
    let v = json_of(&run(&["compute", "trace", "--lambda", "1,0", "--q0"]));
    assert_eq!(v["meta"]["cutoff"], json!(5));
    assert_eq!(v["result"]["cutoff"], json!(5));
}

#[test]
fn pfaff_sweep_passes() {
    let out = run(&["verify", "pfaff", "--max-size", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(v["result"][0]["cases"].as_array().unwrap().iter().all(|c| c["pass"] == json!(true)));
}

#[test]
fn injected_fault_fails_verification() {
    let out = run(&["verify", "all", "--max-size", "2", "--inject-fault", "sk", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().any(|l| l.starts_with("pfaff,") && l.contains(",false,")), "{text}");
}

#[test]
fn invalid_partition_exits_2() {
    let out = run(&["compute", "c-qt", "--lambda", "1,2", "--mu", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("part 1"));
    assert_eq!(run(&["compute", "sk", "--lambda", "2,x", "--mu", "1"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "nonsense"]).status.code(), Some(2));
}

#[test]
fn group_bound_exits_3() {
    let out = run(&["compute", "alpha", "--lambda", "3,3", "--mu", "1"]);
    assert_eq!(out.status.code(), Some(3));
    let raised = Command::new(env!("CARGO_BIN_EXE_qtbranch"))
        .args(["compute", "alpha", "--lambda", "3,3", "--mu", "1"])
        .env("QTBRANCH_MAX_GROUP", "729")
        .output()
        .unwrap();
    assert_eq!(raised.status.code(), Some(0));
}

#[test]
fn alpha_table_csv() {
    let out = run(&["table", "alpha", "--lambda", "1,1", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text, "lambda,mu,p,alpha,predicted,match\n\"1,1\",0,3,1,1,true\n\"1,1\",1,3,4,4,true\n\"1,1\",\"1,1\",3,1,1,true\n");
}

#[test]
fn output_independent_of_jobs() {
    let args = ["table", "branch", "--lambda", "2,1,0", "--cutoff", "4"];
    let one = run(&[&args[..], &["--jobs", "1"]].concat());
    let two = run(&[&args[..], &["--jobs", "3"]].concat());
    assert!(one.status.success());
    assert_eq!(one.stdout, two.stdout);
}

#[test]
fn out_file() {
    let dir = std::env::temp_dir().join(format!("qtbranch-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("c.json");
    let out = run(&["compute", "c-hl", "--lambda", "2,1", "--mu", "1", "--out", path.to_str().unwrap()]);
    assert!(out.status.success() && out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["result"], json!({"num": [[0, 2, "1"], [0, 0, "1"]], "den": [[0, 0, "1"]]}));
    std::fs::remove_dir_all(dir).unwrap();
}
