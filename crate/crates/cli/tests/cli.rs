use std::fs;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_adapted-pairs")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn verify_passing_case_exits_zero_and_prints_json() {
    let o = run(&["verify", "--family", "B", "--rank", "4", "--s", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["verdict"]["pass"], true);
    assert_eq!(v["degrees"][0]["den"], 1);
}

#[test]
fn out_of_scope_and_usage_errors_exit_two() {
    assert_eq!(run(&["verify", "--family", "B", "--rank", "5", "--s", "3"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--family", "D", "--rank", "4", "--s", "4"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--family", "E8", "--rank", "8", "--s", "1"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--family", "B"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["cascade", "--family", "E6", "--rank", "7"]).status.code(), Some(2));
}

#[test]
fn malformed_report_input_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    fs::write(&bad, "{\"schema\": 1, \"case\": 3}").unwrap();
    assert_eq!(run(&["report", "--in", bad.to_str().unwrap()]).status.code(), Some(2));
    let missing = dir.path().join("missing.json");
    assert_eq!(run(&["report", "--in", missing.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn cascade_of_b4_lists_four_roots() {
    let o = run(&["cascade", "--family", "B", "--rank", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 4, "{text}");
    for root in ["ε₁+ε₂", "ε₁−ε₂", "ε₃+ε₄", "ε₃−ε₄"] {
        assert!(text.lines().any(|l| l.split_whitespace().nth(1) == Some(root)), "{root} missing from\n{text}");
    }
}

#[test]
fn e6_report_renders_h_exactly() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("e6.json");
    let o = run(&["verify", "--family", "E6", "--rank", "6", "--s", "6", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("pass"));
    for fmt in ["md", "txt"] {
        let r = run(&["report", "--in", path.to_str().unwrap(), "--format", fmt]);
        assert_eq!(r.status.code(), Some(0));
        let text = stdout(&r);
        assert!(text.contains("−2α₁∨ − α₂∨ + α₃∨ + 6α₄∨ − 5α₅∨"), "{text}");
        assert!(text.contains("PASS") || text.contains("pass"));
    }
    assert_eq!(run(&["report", "--in", path.to_str().unwrap(), "--format", "pdf"]).status.code(), Some(2));
}

#[test]
fn sweep_writes_certificates_and_summary() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(&["sweep", "--max-rank", "4", "--out", dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let summary: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("summary.json")).unwrap()).unwrap();
    let cases = summary["cases"].as_array().unwrap();
    let slugs: Vec<&str> = cases.iter().map(|c| c["slug"].as_str().unwrap()).collect();
    assert_eq!(cases.len(), stdout(&o).lines().count() - 1);
    for slug in &slugs {
        assert!(dir.path().join(format!("{slug}.json")).exists());
    }
    assert!(cases.iter().all(|c| c["pass"] == true));
    let names: Vec<String> = cases
        .iter()
        .map(|c| format!("{}{} s={}", c["case"]["family"].as_str().unwrap(), c["case"]["rank"], c["case"]["s"]))
        .collect();
    for want in ["B2 s=2", "B4 s=2", "B4 s=4", "D4 s=2"] {
        assert!(names.iter().any(|n| n == want), "{want} not in {names:?}");
    }
}
