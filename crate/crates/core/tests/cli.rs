use std::process::{Command, Output};

use sipq::cli::{Report, SCHEMA};

fn sipq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sipq"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn verify_all_passes() {
    let o = sipq(&["verify-all", "--trunc", "40"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 12);
    assert!(text.lines().all(|l| l.starts_with("PASS ")), "{text}");
}

#[test]
fn verify_json_report() {
    let o = sipq(&["verify", "--identity", "glasgow-mod8", "--output", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let report: Report = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(report.schema, SCHEMA);
    assert_eq!(report.command, "verify");
    assert_eq!(report.results.len(), 1);
    assert!(report.results[0].pass);
    assert_eq!(report.results[0].trunc, 40);
    // absent fields stay absent
    assert!(!stdout(&o).contains("first_mismatch"));
}

#[test]
fn unknown_identity_exit_code() {
    let o = sipq(&["verify", "--identity", "rogers-ramanujan-2"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("unknown identity"));
}

#[test]
fn usage_errors() {
    assert_eq!(
        sipq(&["basis", "--spec", "k=3,c=1:2,d=2:3", "--n", "2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        sipq(&["decompose", "--spec", "schur", "--partition", "1,x"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(sipq(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn basis_listing() {
    let o = sipq(&[
        "basis",
        "--spec",
        "k=2,c=1:2,d=2:3",
        "--n",
        "2",
        "--output",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let report: Report = serde_json::from_str(&stdout(&o)).unwrap();
    let payload = report.payload.unwrap();
    assert_eq!(payload["count"], 4);
    assert_eq!(
        payload["elements"],
        serde_json::json!([[1, 3], [1, 4], [2, 5], [2, 6]])
    );
}

#[test]
fn decompose_and_non_member() {
    let o = sipq(&[
        "decompose",
        "--spec",
        "k=3,c=1:2:3,d=3:3:4",
        "--partition",
        "2,7",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("round trip ok"));
    let o = sipq(&[
        "decompose",
        "--spec",
        "rogers-ramanujan",
        "--partition",
        "3,4",
    ]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn oracle_command() {
    let o = sipq(&["oracle", "--identity", "slater-86", "--total-max", "20"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 2);
    assert_eq!(
        sipq(&["oracle", "--identity", "mod7-sum"]).status.code(),
        Some(2)
    );
}

#[test]
fn help_documents_grammar() {
    let o = sipq(&["--help"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("k=K,c=C1:...:CK"));
    assert!(text.contains("value:subscript"));
}
