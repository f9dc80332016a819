use std::process::Command;

use qwonder_cli::{run, EXIT_OK, EXIT_USER};
use serde_json::Value;

fn ok(args: &[&str]) -> Value {
    let mut full = vec!["qwonder"];
    full.extend_from_slice(args);
    let out = run(full);
    assert_eq!(out.code, EXIT_OK, "{args:?}: {}", out.stderr);
    serde_json::from_str(&out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    let mut full = vec!["qwonder"];
    full.extend_from_slice(args);
    run(full).code
}

#[test]
fn normal_form_of_da() {
    let j = ok(&["nf", "sl2", "d*a"]);
    assert_eq!(j["text"], "1 + q^-1*b*c");
    assert_eq!(j["context"], "sl2");
    assert_eq!(j["terms"][1]["word"], "b c");
    let via_flag = ok(&["--context", "sl2", "nf", "d*a"]);
    assert_eq!(j, via_flag);
}

#[test]
fn vinberg_degree_three() {
    assert_eq!(ok(&["dims", "vinberg", "3"])["dimension"], 20);
    for (n, d) in [(0, 1), (1, 4), (2, 10), (3, 20), (4, 35)] {
        assert_eq!(ok(&["dims", "vinberg", &n.to_string()])["dimension"], d);
    }
}

#[test]
fn gr_dimensions_are_squares() {
    for n in 0..=5u64 {
        assert_eq!(ok(&["dims", "gr0", &n.to_string()])["dimension"], (n + 1) * (n + 1));
        assert_eq!(ok(&["dims", "p1p1", &n.to_string()])["dimension"], (n + 1) * (n + 1));
    }
}

#[test]
fn z_alone_is_rejected() {
    assert_eq!(code(&["nf", "vinberg", "z"]), EXIT_USER);
    assert_eq!(ok(&["nf", "vinberg", "z^2"])["text"], "z^2");
}

#[test]
fn user_errors() {
    assert_eq!(code(&["nf", "sl2", "a +"]), EXIT_USER);
    assert_eq!(code(&["nf", "sl2", "x"]), EXIT_USER);
    assert_eq!(code(&["nf", "nowhere", "a"]), EXIT_USER);
    assert_eq!(code(&["verify", "no-such-suite"]), EXIT_USER);
    assert_eq!(code(&["bogus"]), EXIT_USER);
    assert_eq!(code(&["dims", "grD", "2"]), EXIT_USER);
}

#[test]
fn products_and_maps() {
    assert_eq!(ok(&["mul", "sl2", "d", "a"])["text"], "1 + q^-1*b*c");
    let r = ok(&["rees-mul", "vinberg", "az", "dz"]);
    assert_eq!(r["matq"]["text"], "a*d");
    let g = ok(&["gr-mul", "gr0", "a", "d"]);
    assert_eq!(g["p1p1"]["text"], "x*y*u*w");
    let p = ok(&["phi", "grD", "c[1;0,1]"]);
    assert_eq!(p["text"], "(a)|(b) + (b)|(d)");
    let p = ok(&["phi", "gr0", "c[1;0,1]"]);
    assert_eq!(p["text"], "(a)|(b)");
}

#[test]
fn brackets() {
    assert_eq!(ok(&["poisson", "sl2-cl", "a", "d"])["bracket"]["text"], "2*b*c");
    let s = ok(&["poisson", "sl2", "a", "d"]);
    assert_eq!(s["passed"], true);
    assert_eq!(s["semiclassical_limit"]["text"], "2*b*c");
    let v = ok(&["poisson", "vinberg", "az", "dz"]);
    assert_eq!(v["semiclassical_limit"]["text"], "2*(bz)*(cz)");
}

#[test]
fn torsion_verdicts() {
    assert_eq!(ok(&["torsion", "augmentation"])["certificate"]["verdict"], "torsion");
    assert_eq!(ok(&["torsion", "free"])["certificate"]["verdict"], "not_torsion");
    let z2 = ok(&["--horizon", "6", "torsion", "z2"]);
    assert_eq!(z2["certificate"]["verdict"], "not_torsion");
    let dims: Vec<u64> = z2["pieces"].as_array().unwrap().iter().map(|p| p["dimension"].as_u64().unwrap()).collect();
    assert_eq!(dims, vec![1, 4, 9, 16, 25]);
}

#[test]
fn q_evaluation_is_display_only() {
    let j = ok(&["--q-eval", "2", "nf", "sl2", "d*a"]);
    assert_eq!(j["text"], "1 + q^-1*b*c");
    assert_eq!(j["at_q"]["terms"][1]["coeff"], "1/2");
    assert_eq!(code(&["--q-eval", "x", "nf", "sl2", "a"]), EXIT_USER);
}

#[test]
fn verify_all_passes() {
    let j = ok(&["verify", "all"]);
    assert_eq!(j["passed"], true);
    assert_eq!(j["suites"].as_array().unwrap().len(), 12);
}

#[test]
fn output_is_deterministic() {
    let cases: &[&[&str]] = &[
        &["nf", "sl2", "(a + b)^3*d"],
        &["pw", "sl2", "a*d*a"],
        &["gr-mul", "grD", "c[2;0,1]", "c[1;1,0]"],
        &["veronese", "vinberg", "2"],
        &["dims", "gl2", "2"],
        &["verify", "hopf", "torsion"],
    ];
    for args in cases {
        let mut full = vec!["qwonder"];
        full.extend_from_slice(args);
        let a = run(full.clone());
        let b = run(full);
        assert_eq!(a, b, "{args:?}");
    }
}

#[test]
fn custom_presentation_file() {
    let dir = std::env::temp_dir().join(format!("qwonder-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("plane.pres");
    std::fs::write(&path, "name: plane\ngenerators: x y\ngrading: x=1 y=1\nrules:\n  y x -> q*x*y\n").unwrap();
    let p = path.to_str().unwrap();
    assert_eq!(ok(&["--presentation", p, "nf", "y*x^2"])["text"], "q^2*x^2*y");
    assert_eq!(ok(&["--presentation", p, "dims", "3"])["dimension"], 4);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_qwonder");
    let out = Command::new(bin).args(["nf", "sl2", "d*a"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let j: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(j["text"], "1 + q^-1*b*c");
    let out = Command::new(bin).args(["nf", "vinberg", "z"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("z alone"));
}
