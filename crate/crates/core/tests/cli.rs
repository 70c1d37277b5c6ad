use std::process::{Command, Output};

use kncurves::{parse_coords, DynnikovCoordinates, TriangleCoordinates};
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kncurves"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn invert_prints_triangle_json() {
    let o = run(&["invert", "(2; 1,0; -2; 2,0)", "--n", "2", "--json"]);
    assert!(o.status.success());
    let tri: TriangleCoordinates = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(tri.alpha, vec![1, 5]);
    assert_eq!(tri.beta, vec![6, 4, 4]);
    assert_eq!(tri.gamma, 4);
}

#[test]
fn invert_table_is_default() {
    let o = run(&["invert", "(2; 1,0; -2; 2,0)"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("beta   6 4 4"));
}

#[test]
fn intersect_single_curve_json() {
    let o = run(&[
        "intersect",
        "(-1; 1,0; 1; 1,1)",
        "--n",
        "2",
        "--curve",
        "D",
        "--json",
    ]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), r#"{"curve":"D","value":0}"#);
}

#[test]
fn intersect_all_lists_catalog() {
    let o = run(&["intersect", "(-1; 1,0; 1; 1,1)", "--all", "--json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let items = v.as_array().unwrap();
    assert_eq!(items.len(), 6);
    let c = items.iter().find(|x| x["curve"] == "C").unwrap();
    assert_eq!(c["value"], 2);
}

#[test]
fn zero_vector_exits_one() {
    let o = run(&["intersect", "(0;0,0;0;0,0)", "--curve", "D"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("zero vector"));
}

#[test]
fn syntax_and_flag_errors_exit_one() {
    assert_eq!(run(&["invert", "(2; 1,x; -2; 2,0)"]).status.code(), Some(1));
    assert_eq!(
        run(&["invert", "(2; 1,0; -2; 2,0)", "--n", "3"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(run(&["invert"]).status.code(), Some(1));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(
        run(&["intersect", "(2; 1,0; -2; 2,0)"]).status.code(),
        Some(1)
    );
}

#[test]
fn unrealizable_vector_exits_one() {
    let o = run(&["invert", "(0; 0,0; 1; 0,0)"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn file_input_and_json_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("v.txt");
    std::fs::write(&path, "(-1; 1,0; 1; 1,1)\n").unwrap();
    let o = run(&["invert", "--file", path.to_str().unwrap(), "--json"]);
    assert!(o.status.success());
    let tri_path = dir.path().join("tri.json");
    std::fs::write(&tri_path, stdout(&o)).unwrap();
    let back = run(&[
        "coordinatize",
        "--file",
        tri_path.to_str().unwrap(),
        "--json",
    ]);
    assert!(back.status.success());
    let v: DynnikovCoordinates = serde_json::from_str(&stdout(&back)).unwrap();
    assert_eq!(v, parse_coords("(-1; 1,0; 1; 1,1)", 2).unwrap());

    let json_in = dir.path().join("v.json");
    std::fs::write(&json_in, stdout(&back)).unwrap();
    let again = run(&["invert", "--file", json_in.to_str().unwrap(), "--json"]);
    assert_eq!(stdout(&again), stdout(&o));
}

#[test]
fn coordinatize_text_form() {
    let o = run(&["coordinatize", "(1,5; 6,4,4; 4; 2,0)"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("(2; 1,0; -2; 2,0)"));
}

#[test]
fn profile_with_large_counts() {
    let o = run(&[
        "profile",
        "(2; 1,0; -2; 2,0)",
        "--large",
        "1",
        "1",
        "--json",
    ]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["profile"]["s0_loops"], 3);
    assert_eq!(v["profile"]["crosscap1"]["below"], 2);
    assert_eq!(v["large"]["b_lm"], 4);
    let bad = run(&["profile", "(2; 1,0; -2; 2,0)", "--large", "3", "1"]);
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn render_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("k.svg");
    let a = run(&["render", "(2; 1,0; -2; 2,0)", "-o", out.to_str().unwrap()]);
    assert!(a.status.success());
    let b = run(&["render", "(2; 1,0; -2; 2,0)"]);
    let file = std::fs::read_to_string(&out).unwrap();
    assert_eq!(file, stdout(&b));
    assert!(file.starts_with("<svg") && file.trim_end().ends_with("</svg>"));
}

#[test]
fn selftest_default_exits_zero() {
    let o = run(&["selftest", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["n"], 2);
    assert_eq!(v["bound"], 2);
    assert_eq!(v["divergences"], 0);
}
