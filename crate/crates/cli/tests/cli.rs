use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_weilcert"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn verify_identities_prints_17_pass_lines() {
    let o = run(&["verify", "identities"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().filter(|l| l.starts_with("PASS ")).count(), 17);
    assert!(!out.contains("FAIL"));
}

#[test]
fn universal_checks_pass() {
    for check in ["eigenspaces", "diagonal", "genus"] {
        assert_eq!(run(&["verify", check]).status.code(), Some(0), "{check}");
    }
}

#[test]
fn detm_at_origin_is_one() {
    let o = run(&["detm", "--at", "0,0,0,0,0,0,0,0,0"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "1");
}

#[test]
fn detm_zero_fails() {
    let o = run(&["detm", "--at", "1,0,0,0,0,0,1/4,0,0"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o).trim(), "0");
}

#[test]
fn detm_symbolic_json() {
    let o = run(&["--json", "detm", "--symbolic"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["detm_at_origin"], "1");
    assert_eq!(v["detm_term_count"], 383);
    assert_eq!(v["detm_nonzero"], true);
}

#[test]
fn quadric_exit_codes() {
    assert_eq!(run(&["quadric", "--at", "0,0,0,0,0,0,0,0,0"]).status.code(), Some(1));
    let o = run(&["--json", "quadric", "--at", "1,1,1,1,1,1,1,1,1"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["witness_kernel_dim"], 1);
}

#[test]
fn fpf_verdicts() {
    let o = run(&["fpf", "--at", "-7,3,10,2,-5,-1,4,6,-9"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "CertifiedEmpty");
    let o = run(&["fpf", "--at", "1/2,0,0,1/4,0,0,1/4,0,0"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o).trim(), "Inconclusive");
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&[]).status.code(), Some(2));
    assert_eq!(run(&["detm"]).status.code(), Some(2));
    assert_eq!(run(&["detm", "--at", "1,2,3"]).status.code(), Some(2));
    assert_eq!(run(&["quadric", "--at", "1,2,3,4,5,6,7,8,x"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "everything"]).status.code(), Some(2));
    assert_eq!(run(&["parse", "--expr", "2 s"]).status.code(), Some(2));
    assert_eq!(run(&["parse", "--expr", "s + q"]).status.code(), Some(2));
    assert_eq!(run(&["recheck", "--cert", "/nonexistent/cert.json"]).status.code(), Some(2));
}

#[test]
fn parse_prints_canonical_form() {
    let o = run(&["parse", "--expr", "s - i*t - x + i*y"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "s - i*t - x + i*y");
    let o = run(&["parse", "--expr", "(s+t)^2 - s^2 - 2*s*t - t^2"]);
    assert_eq!(stdout(&o).trim(), "0");
    let o = run(&["parse", "--expr", "-A1*a1", "--vars", "a1,A1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "-a1*A1");
}

#[test]
fn certify_and_recheck_round_trip() {
    let dir = tempdir();
    let path = dir.join("cert.json");
    let p = path.to_str().unwrap();
    let o = run(&["certify", "--seed", "7", "--max-attempts", "100", "--out", p]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(doc["overall"], "Pass");
    assert_eq!(doc["seed"], 7);

    let o = run(&["recheck", "--cert", p]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));

    let mut tampered = doc.clone();
    tampered["witness_detm"] = Value::String("12345".into());
    std::fs::write(&path, serde_json::to_string_pretty(&tampered).unwrap()).unwrap();
    let o = run(&["recheck", "--cert", p]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("witness_detm"));

    let o = run(&["certify", "--seed", "7", "--max-attempts", "0", "--out", p]);
    assert_eq!(o.status.code(), Some(1));
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(doc["overall"], "Fail");
    assert_eq!(doc["witness"], Value::Null);
    assert_eq!(doc["genus"], 13);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn json_certificate_on_stdout_is_deterministic() {
    let a = stdout(&run(&["--json", "certify", "--seed", "3", "--max-attempts", "5"]));
    let b = stdout(&run(&["--json", "certify", "--seed", "3", "--max-attempts", "5"]));
    assert_eq!(a, b);
    let v: Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["seed"], 3);
}

fn tempdir() -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("weilcert-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}
