use std::path::PathBuf;
use std::process::{Command, Output};

fn pellrec(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pellrec"))
        .args(args)
        .env_remove("PELLREC_JOBS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn golden(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

#[test]
fn fundamental_json() {
    let o = pellrec(&["pell", "fundamental", "-d", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["x1"], "9");
    assert_eq!(v["y1"], "4");
}

#[test]
fn remarks_match_golden_files() {
    for id in 1..=4 {
        let o = pellrec(&["remark", "verify", &id.to_string()]);
        assert_eq!(o.status.code(), Some(0), "scenario {id}");
        let expected = std::fs::read_to_string(golden(&format!("remark{id}.json"))).unwrap();
        assert_eq!(stdout(&o), expected, "scenario {id}");
    }
}

#[test]
fn bound_report() {
    let o = pellrec(&["bound", "--k", "2", "--field-degree", "2"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["partition_count"], 203);
    assert_eq!(v["log2_per_partition"], 7776);
    assert_eq!(v["A"], 6);
}

#[test]
fn exit_codes() {
    assert_eq!(pellrec(&["--no-such-flag"]).status.code(), Some(64));
    assert_eq!(pellrec(&["pell", "fundamental"]).status.code(), Some(64));
    assert_eq!(pellrec(&["pell", "fundamental", "-d", "4"]).status.code(), Some(1));
    assert_eq!(pellrec(&["pell", "solve", "-d", "3", "-t", "0"]).status.code(), Some(1));
    assert_eq!(pellrec(&["remark", "verify", "7"]).status.code(), Some(1));
    assert_eq!(pellrec(&["bound", "--k", "9", "--field-degree", "2"]).status.code(), Some(3));
    let huge = pellrec(&["search", "--rec-spec", "1;2;1", "-d", "2", "-t", "1", "-N", "40000"]);
    assert_eq!(huge.status.code(), Some(3));
    assert_eq!(pellrec(&["--help"]).status.code(), Some(0));
}

#[test]
fn search_csv_and_output_file() {
    let dir = std::env::temp_dir().join(format!("pellrec-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out = dir.join("r.csv");
    let o = pellrec(&[
        "search", "--rec-spec", "2;0,1;0,2", "-d", "5", "-t", "1", "-N", "9", "--format", "csv", "--output",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&out).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n1,n2,v,side,witness"));
    assert_eq!(lines.filter(|l| l.contains(",4,Y,9")).count(), 15);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn recurrence_files() {
    let dir = std::env::temp_dir().join(format!("pellrec-rec-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let text = dir.join("r.txt");
    let json = dir.join("r.json");
    std::fs::write(&text, "# U_n = 2^n + 3^n\norder 2; coeffs 5,-6; init 2,5\n").unwrap();
    std::fs::write(&json, r#"{"order": 2, "coeffs": [5, "-6"], "init": [2, 5]}"#).unwrap();
    let a = pellrec(&["seq", "terms", "--rec", text.to_str().unwrap(), "-n", "10"]);
    let b = pellrec(&["seq", "terms", "--rec", json.to_str().unwrap(), "-n", "10"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&b));
    let v: serde_json::Value = serde_json::from_str(&stdout(&a)).unwrap();
    assert_eq!(v["terms"][10], "60073");
    let missing = pellrec(&["seq", "terms", "--rec", dir.join("none").to_str().unwrap(), "-n", "3"]);
    assert_eq!(missing.status.code(), Some(1));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn jobs_from_environment() {
    let args = ["search", "--rec-spec", "3;3,-3,2;0,1,1", "-d", "2", "-t", "1", "-N", "80"];
    let base = pellrec(&args);
    let env = Command::new(env!("CARGO_BIN_EXE_pellrec"))
        .args(args)
        .env("PELLREC_JOBS", "3")
        .output()
        .unwrap();
    assert_eq!(base.stdout, env.stdout);
    let bad = Command::new(env!("CARGO_BIN_EXE_pellrec"))
        .args(args)
        .env("PELLREC_JOBS", "zero")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(64));
}

#[test]
fn classify_reports_hypotheses() {
    let o = pellrec(&["seq", "classify", "--rec-spec", "2;5,-6;2,5", "-d", "2"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["theorem_applies"], true);
    let o = pellrec(&["seq", "classify", "--rec-spec", "2;4,-1;0,1", "-d", "3"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["excluded_binary_form"], true);
    assert_eq!(v["theorem_applies"], false);
}
