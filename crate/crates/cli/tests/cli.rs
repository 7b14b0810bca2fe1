use std::process::{Command, Output};

fn hypalg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hypalg")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> &str {
    std::str::from_utf8(&o.stdout).unwrap()
}

#[test]
fn eval_text_and_json() {
    let o = hypalg(&["eval", "(1 + i) * (1 - i) + 2*j*s3"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "2 + 2*j*s3\n");

    let o = hypalg(&["eval", "bar(1 + 2*i + 3*j + 4*ij)", "--json"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&o)).unwrap();
    assert_eq!(v["kind"], "hypercomplex");
    assert_eq!(v["coeffs"], serde_json::json!([1.0, -2.0, -3.0, 4.0]));
}

#[test]
fn eval_output_reparses() {
    let first = hypalg(&["eval", "exp(0.3*i*s1) * boost(0.2, -0.1, 0.4)"]);
    let text = stdout(&first).trim().to_string();
    let again = hypalg(&["eval", &text]);
    assert_eq!(stdout(&again).trim(), text);
}

#[test]
fn exit_codes() {
    let syntax = hypalg(&["eval", "1 + * 2"]);
    assert_eq!(syntax.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&syntax.stderr).contains("byte 4"));
    assert!(syntax.stdout.is_empty());
    assert_eq!(hypalg(&["eval", "s1 + (1"]).status.code(), Some(2));
    assert_eq!(hypalg(&["eval", "inv(1 + j)"]).status.code(), Some(3));
    assert_eq!(hypalg(&["eval", "inv(s1 + j)"]).status.code(), Some(3));
    assert_eq!(hypalg(&["eval", "rot(i, 0, 0)"]).status.code(), Some(2));
    assert_eq!(hypalg(&["transform", "--vector", "1,2"]).status.code(), Some(2));
}

#[test]
fn transform_rotates_before_boosting() {
    let o = hypalg(&["transform", "--boost", "0,0,-1", "--rotate", "0,0,1.5707963267948966", "--vector", "1,1,0,0"]);
    assert_eq!(stdout(&o), "(1.54308063482, 0, 1, -1.17520119364)\n");
    let o = hypalg(&["transform", "--vector", "1,2,3,4", "--json"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&o)).unwrap();
    assert_eq!(v["coeffs"], serde_json::json!([1.0, 2.0, 3.0, 4.0]));
}

#[test]
fn spinor_views() {
    let args = ["spinor", "--phi", "0", "--theta", "0", "--xi", "0"];
    assert_eq!(stdout(&hypalg(&[&args[..], &["--column"]].concat())), "c1 = 1\nc2 = 0\n");
    assert_eq!(stdout(&hypalg(&[&args[..], &["--odd"]].concat())), "v = (1, 0, 0, 0)\neta = (0, 0, 0, 0)\n");
    let even = hypalg(&["spinor", "--phi", "0", "--theta", "0", "--xi", "1.2", "--json"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&even)).unwrap();
    assert!((v["s"].as_f64().unwrap() - 0.6f64.cosh()).abs() < 1e-11);
    assert!((v["b30"].as_f64().unwrap() - 0.6f64.sinh()).abs() < 1e-11);
    assert_eq!(v["b32"], serde_json::json!(0.0));
    assert_eq!(hypalg(&["spinor", "--odd", "--column"]).status.code(), Some(2));
}

#[test]
fn spinor_check() {
    let ok = hypalg(&["spinor", "--phi", "1.0", "--theta", "0.4", "--xi", "0", "--check"]);
    assert!(ok.status.success());
    let rapid = hypalg(&["spinor", "--phi", "1.0", "--theta", "0.4", "--xi", "-0.5", "--check"]);
    assert_eq!(rapid.status.code(), Some(1));
    assert!(stdout(&rapid).contains("check psi3210"));
}

#[test]
fn cross_section_json() {
    let o = hypalg(&["cross-section", "--phi", "0.3", "--theta", "1.1", "--xi", "0.7", "--json"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&o)).unwrap();
    let c2 = 0.55f64.cos().powi(2);
    assert!((v["real"].as_f64().unwrap() - c2).abs() < 1e-11);
    assert!((v["mott"].as_f64().unwrap() - c2).abs() < 1e-11);
    assert_eq!(v["ij"], serde_json::json!(0.0));
}

#[test]
fn negative_parameters() {
    let o = hypalg(&["cross-section", "--phi", "-1", "--theta", "-3.141592653589793", "--xi", "-2"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "real = 0\nij = 0\nmott = 0\n");
}
