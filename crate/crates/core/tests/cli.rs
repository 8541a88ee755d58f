use std::process::{Command, Output};

fn ogs(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ogs"))
        .args(args)
        .env_remove("OGS_FORMAT")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn worked_giambelli_text_and_json() {
    let o = ogs(&["giambelli", "--k", "2", "--n", "5", "--lambda", "3,2,2", "--type", "2"]);
    assert!(o.status.success());
    let text = stdout(&o);
    for term in ["τ₃τ′₂(τ₂+τ′₂)", "τ₄τ′₂τ₁", "τ₃²τ₁", "τ₄τ₃", "τ₆τ₁", "τ₇"] {
        assert!(text.contains(term), "{term} missing from {text}");
    }

    let o = ogs(&["--format", "json", "giambelli", "--k", "2", "--n", "5", "--lambda", "3,2,2", "--type", "2"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["coefficients"], "tau");
    let coefs: Vec<&str> = v["terms"].as_array().unwrap().iter().map(|t| t["coef"].as_str().unwrap()).collect();
    assert!(coefs.iter().all(|c| *c == "1" || *c == "-1"), "{coefs:?}");
}

#[test]
fn json_output_is_byte_identical() {
    let args = ["--format", "json", "qmultiply", "--k", "2", "--n", "3", "--lambda", "2,1", "--mu", "3,2"];
    let a = ogs(&args);
    let b = ogs(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert!(v.is_object());
}

#[test]
fn weyl_and_bruhat() {
    let o = ogs(&["weyl", "convert", "--k", "3", "--lambda", "7,4,3,2", "--type", "2"]);
    assert_eq!(stdout(&o).trim(), "-3 6 7 -5 -2 -1 4 8");

    let o = ogs(&["weyl", "convert", "--k", "3", "--perm", "-3,6,7,-5,-2,-1,4,8"]);
    assert!(stdout(&o).contains("7,4,3,2"), "{}", stdout(&o));

    let o = ogs(&["--format", "json", "bruhat", "order", "--N", "8", "--q", "1,4", "--p", "1,5"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["leq"], true);
    assert_eq!(v["preceq"]["holds"], false);
    assert_eq!(v["preceq"]["critical"], 4);
}

#[test]
fn exit_codes() {
    assert_eq!(ogs(&["--help"]).status.code(), Some(0));
    assert_eq!(ogs(&["no-such-command"]).status.code(), Some(2));
    // (3,3) is not 1-strict
    assert_eq!(ogs(&["giambelli", "--k", "1", "--n", "3", "--lambda", "3,3"]).status.code(), Some(3));
    assert_eq!(ogs(&["verify", "order-laws"]).status.code(), Some(0));
}
