use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hilbcalc")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let out = run(&full);
    let v = serde_json::from_slice(&out.stdout).expect("JSON on stdout");
    (v, out.status.code().unwrap())
}

const Z0: &str = r#"{"base":{"kind":"Z"},"rank":0,"unit":[],"mult":[]}"#;
const CUBIC: &str = r#"{"base":{"kind":"Z"},"rank":3,"unit":["1","0","0"],"mult":[[["1","0","0"],["0","1","0"],["0","0","1"]],[["0","1","0"],["0","0","1"],["0","0","0"]],[["0","0","1"],["0","0","0"],["0","0","0"]]]}"#;

#[test]
fn verify_hilb3_payload() {
    let (v, code) = json(&["verify", "thm7-1"]);
    assert_eq!(code, 0);
    assert_eq!(v["status"], "ok");
    let p = &v["payload"];
    assert_eq!(p["generator"], "9*c2^2 - 2*c1^2*c2");
    assert_eq!(p["content"], 1);
    assert_eq!(p["decomposition"], serde_json::json!([[1, 0], [2, -1]]));
    assert_eq!(p["tangent_dim"], 6);
    let (same, _) = json(&["verify", "hilb3"]);
    assert_eq!(same, v);
}

#[test]
fn verify_witnesses_exits_zero() {
    let (v, code) = json(&["verify", "witnesses"]);
    assert_eq!(code, 0);
    assert_eq!(v["payload"]["three_lines"]["check"]["ok"], true);
    assert_eq!(v["payload"]["robber"]["check"]["ok"], true);
}

#[test]
fn bounds_report() {
    let (v, code) = json(&["bounds", "--n", "5", "--d", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["payload"]["complex_connectivity"], 6);
    assert_eq!(v["payload"]["complement_codimension"], 4);
    let (e, code) = json(&["bounds", "--n", "2", "--d", "3"]);
    assert_eq!(code, 1);
    assert_eq!(e["status"], "error");
}

#[test]
fn rank_zero_algebra_is_rejected() {
    for cmd in ["rees", "quotient-by-unit"] {
        let (v, code) = json(&[cmd, "--algebra", Z0]);
        assert_eq!(code, 1, "{cmd}");
        assert!(v["error"].as_str().unwrap().contains("rank 0"), "{v}");
    }
}

#[test]
fn unknown_subcommand_exits_two() {
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["verify"]).status.code(), Some(2));
}

#[test]
fn rees_then_specialize_round_trips() {
    let (v, code) = json(&["rees", "--algebra", CUBIC]);
    assert_eq!(code, 0);
    assert_eq!(v["payload"]["fiber_at_0_square_zero"], true);
    let family = v["payload"]["family"].to_string();
    let (one, _) = json(&["specialize", "--family", &family, "--t", "1"]);
    assert_eq!(one["payload"]["mult"][1][1], serde_json::json!(["0", "0", "1"]));
    let (zero, _) = json(&["specialize", "--family", &family, "--t", "0"]);
    let again = zero["payload"].to_string();
    let (cls, code) = json(&["classify", "--algebra", &again, "--p", "2"]);
    assert_eq!(code, 0);
    assert_eq!(cls["payload"]["lci"], false);
}

#[test]
fn classify_and_tangent() {
    let (v, _) = json(&["classify", "--algebra", CUBIC, "--p", "3"]);
    assert_eq!(v["payload"]["lci"], true);
    assert_eq!(v["payload"]["factors"][0]["hilbert_function"], serde_json::json!([1, 1, 1]));
    let (t, _) = json(&["tangent", "--ideal", "x^2, x*y, y^2", "--vars", "x,y", "--field", "F5"]);
    assert_eq!(t["payload"]["tangent_dim"], 6);
    assert_eq!(t["payload"]["colength"], 3);
    let (g, _) = json(&["groebner", "--ideal", "x^2 - y, y^2", "--vars", "x,y"]);
    assert_eq!(g["payload"]["standard_monomials"], serde_json::json!(["1", "x", "y", "x*y"]));
}

#[test]
fn counts_and_characters() {
    let (v, code) = json(&["count-nonsurj", "--n", "3", "--p", "2", "--algebra-homs"]);
    assert_eq!(code, 0);
    assert_eq!(v["payload"]["nonsurjective"], 176);
    let (c, _) = json(&["decompose-gl2", "--expr", "hom(sym(2, dual(V)), dual(V))"]);
    assert_eq!(c["payload"]["weights"], serde_json::json!([[1, 0], [2, -1]]));
    let (ch, _) = json(&["chern", "--expr", "sym(2, V)", "--k", "2"]);
    assert_eq!(ch["payload"]["classes"][0]["class"], "2*c1^2 + 4*c2");
}

#[test]
fn path_to_basepoint_reaches_square_zero() {
    let a = r#"{"base":{"kind":"Fp","p":3},"rank":3,"unit":["1","0","0"],"mult":[[["1","0","0"],["0","1","0"],["0","0","1"]],[["0","1","0"],["0","0","1"],["0","0","0"]],[["0","0","1"],["0","0","0"],["0","0","0"]]]}"#;
    let (v, code) = json(&["path-to-basepoint", "--algebra", a, "--images", r#"[["0","1","0"],["0","1","0"],["0","0","1"]]"#]);
    assert_eq!(code, 0);
    assert_eq!(v["payload"]["endpoint_is_canonical"], true);
    assert_eq!(v["payload"]["steps"].as_array().unwrap().len(), 2);
}
