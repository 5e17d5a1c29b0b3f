use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hurwitz-cf")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn expand_plain_and_bracket() {
    let o = run(&["expand", "--algo", "h", "sqrt(2+i)-2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "[0; over(-1-i, -3-i, 1+i, 3+i)]\n");

    let o = run(&["expand", "--algo", "t", "--paper-style", "(2+i)/(9+8i)"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "[0;5+i,2-2i,\\overline{0}]\n");
}

#[test]
fn expand_json_record() {
    let o = run(&["expand", "--algo", "t", "--json", "(2+i)/(9+8i)"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["schema"], "hurwitz-cf/1");
    assert_eq!(v["input"], "(2+i)/(9+8i)");
    assert_eq!(v["algorithm"], "T");
    assert_eq!(v["initial"], "0");
    assert_eq!(v["preperiod"], serde_json::json!(["5+i", "2-2i"]));
    assert_eq!(v["period"], serde_json::json!(["0"]));
    assert_eq!(v["status"], "minus-one-tail");
    assert!(v.get("classification").is_none());
}

#[test]
fn expand_initial_quotient() {
    let o = run(&["expand", "--json", "sqrt(2+i)"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["initial"], "2");
    assert_eq!(v["status"], "periodic");
}

#[test]
fn truncation_exits_3() {
    let o = run(&["expand", "--max-steps", "3", "sqrt(2+i)-2"]);
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(stdout(&o), "[0; -1-i, -3-i, 1+i, ...]\n");
}

#[test]
fn input_errors_exit_2() {
    for args in [
        &["expand", "sqrt(2)+sqrt(3)"][..],
        &["expand", "1/(i-i)"],
        &["expand", "2+"],
        &["expand", "--algo", "d", "1/3"],
        &["classify", "1/2"],
        &["verify", "--suite", "nope"],
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn classify_reports_both_sides() {
    let o = run(&["classify", "--algo", "h", "sqrt(2+i)-2"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("criterion: true\norbit: true\nperiod length: 4\n"), "{s}");

    let o = run(&["classify", "--algo", "t", "--json", "(sqrt(2)-1)/3"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["classification"]["predicate"], false);
    assert_eq!(v["classification"]["oracle"], false);
}

#[test]
fn tables_match() {
    let o = run(&["tables", "--table", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("24 of 24 rows match\n"));
}

#[test]
fn verify_small_suite() {
    let o = run(&["verify", "--suite", "tilings", "--seed", "3", "--count", "50"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("0 failed (seed 3)"), "{s}");
    assert_eq!(s, stdout(&run(&["verify", "--suite", "tilings", "--seed", "3", "--count", "50"])));
}

#[test]
fn out_writes_file_only() {
    let path = std::env::temp_dir().join(format!("hurwitz-cf-out-{}.txt", std::process::id()));
    let p = path.to_str().unwrap();
    let o = run(&["expand", "--out", p, "2/5"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "[0; 2, 2]\n");
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn no_color_does_not_change_output() {
    let plain = run(&["expand", "sqrt(3+2i)"]);
    let o = Command::new(env!("CARGO_BIN_EXE_hurwitz-cf"))
        .args(["expand", "sqrt(3+2i)"])
        .env("NO_COLOR", "1")
        .output()
        .unwrap();
    assert_eq!(plain.stdout, o.stdout);
}
