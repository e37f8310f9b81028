use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lexorder"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn normalize_and_iso() {
    let o = run(&["normalize", "(1+w)*w"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "w^2");

    let o = run(&["iso", "L(0)*w", "L(1)"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "isomorphic");

    let o = run(&["iso", "L(0)", "L(1)"]);
    assert_eq!(stdout(&o).trim(), "not_isomorphic");
}

#[test]
fn sequences() {
    let o = run(&[
        "tail-equiv",
        "seq{pre=[1]; per=[2]}",
        "seq{pre=[]; per=[2]}",
        "--mod2",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "true");

    let o = run(&[
        "tail-equiv",
        "seq{pre=[1]; per=[1,2]}",
        "seq{pre=[]; per=[1,2]}",
        "--mod2",
    ]);
    assert_eq!(stdout(&o).trim(), "false");

    let o = run(&["label", "seq{pre=[2]; per=[1,2]}"]);
    assert_eq!(stdout(&o).trim(), "odd");
}

#[test]
fn input_errors_exit_with_2() {
    let o = run(&["parse", "w + * 3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("offset 4"));

    assert_eq!(run(&["normalize", "Q(3)"]).status.code(), Some(2));
    assert_eq!(run(&["no-such-command"]).status.code(), Some(2));

    let o = run(&["normalize", "4294967296 * 4294967296"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("overflows"));
    assert_eq!(run(&["verify", "--range", "3", "1"]).status.code(), Some(2));
}

#[test]
fn verify_small_range_passes() {
    let o = run(&["verify", "--range", "0", "0"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.matches("[PASS]").count(), 8);
    assert!(out
        .trim_end()
        .lines()
        .last()
        .unwrap()
        .starts_with("overall: PASS"));
}

#[test]
fn verify_json_is_machine_readable() {
    let o = run(&["verify", "--json", "--range", "-4", "4", "--seed", "7"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["passed"], true);
    let checks = v["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 8);
    for (i, c) in checks.iter().enumerate() {
        assert_eq!(c["id"], format!("C{}", i + 1));
        assert_eq!(c["verdict"], "pass");
    }
    assert_eq!(v["config"]["seed"], 7);
}

#[test]
fn flatten_demo_reports_json() {
    let o = run(&[
        "flatten-demo",
        "--alphabet",
        "3",
        "--samples",
        "200",
        "--seed",
        "1",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let line = text.lines().last().unwrap();
    let v: serde_json::Value = serde_json::from_str(line).unwrap();
    assert_eq!(v["violations"], 0);
}
