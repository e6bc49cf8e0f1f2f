//! The exit-code contract: 0 for clean runs, 1 when a check fails,
//! 2 for usage and input errors.

use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_cusp"))
}

#[test]
fn failing_check_exits_one() {
    // A witness scan over all-real rank-3 values completes but finds
    // nothing, which is a failed check in witness mode.
    let dir = tempfile::tempdir().unwrap();
    let t3 = dir.path().join("real3.tbl");
    let t2 = dir.path().join("g5.tbl");
    std::fs::write(
        &t3,
        "label=rv group=GL3 level=11 weight=3 field=imaginary:-1\n2 1 0\n3 4 0\n7 1 0\n",
    )
    .unwrap();
    std::fs::write(
        &t2,
        "label=g5 group=GL2 level=5 weight=4 field=rational\n2 1\n3 0\n7 2\n",
    )
    .unwrap();
    let out = bin()
        .args(["hecke", "--witness"])
        .arg("--table")
        .arg(&t3)
        .arg("--table")
        .arg(&t2)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1), "absent witness is a failed check");
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("FAIL non-selfduality witness found"), "{text}");
}

#[test]
fn input_errors_exit_two() {
    // unreadable table file
    let out = bin()
        .args(["hecke", "--witness", "--table", "/no/such/file.tbl"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    // malformed descriptor
    let out = bin()
        .args(["decide", "--pair", "pi2 shape=nonsense"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    // unknown subcommand
    let out = bin().arg("frobnicate").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    // conflicting decide selectors
    let out = bin()
        .args(["decide", "--pair", "x", "--group", "S4"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    // fetch without a source
    let out = bin().args(["hecke", "--fetch", "f53"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn clean_run_exits_zero_and_help_works() {
    let out = bin().args(["arch", "--n", "6"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("(9, 11)"), "{text}");
    let out = bin().arg("--help").output().unwrap();
    assert_eq!(out.status.code(), Some(0));
}
