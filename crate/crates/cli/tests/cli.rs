use std::io::Write;
use std::process::{Command, Output, Stdio};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use schubert_sem::lpr::{LatticeRep, PathSystem};
use schubert_sem::verify::random_thirteen_avoiding;
use schubert_sem::{Permutation, Poly, Sem};
use serde_json::Value;

fn semdet(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_semdet")).args(args).output().expect("binary runs")
}

fn semdet_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_semdet"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(out: &Output) -> String {
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn worked_examples() {
    assert_eq!(stdout(&semdet(&["sem", "--perm", "4 1 3 2"])).trim(), "e112 - e103 - e022");
    assert_eq!(stdout(&semdet(&["schubert", "--perm", "4132"])).trim(), "x1^3*x2 + x1^3*x3");
    let classify = stdout(&semdet(&["classify", "--perm", "3 2 1 5 7 6 8 4"]));
    assert!(classify.contains("Q = {3,7,8}"));
    assert!(classify.contains("u = 87321564"));
    assert!(classify.contains("v = 34562718"));
    let verify = stdout(&semdet(&["verify", "--n", "6", "--check", "sem-bound"]));
    assert!(verify.starts_with("PASS sem-bound: 720 passed, 0 failed"));
    let paths = stdout(&semdet(&["paths", "--perm", "4132"]));
    assert!(paths.starts_with("2 nonintersecting path systems"));
}

#[test]
fn exit_codes() {
    let out = semdet(&["rep", "--perm", "2 5 1 3 2 4"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--perm"));

    let out = semdet(&["schubert"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--perm"));

    let out = semdet(&["frobnicate", "--perm", "21"]);
    assert_eq!(out.status.code(), Some(2));

    let out = semdet(&["rep", "--perm", "6 1 3 2 4 5"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr).to_string();
    assert!(err.contains("51324") && err.contains("[1, 2, 3, 4, 5]"), "{err}");

    let out = semdet(&["sem", "--poly", "x1^5", "--n", "3"]);
    assert_eq!(out.status.code(), Some(1));

    let out = semdet(&["schubert", "--perm", "321", "--format", "svg"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn json_round_trips() {
    let w = "4132";
    let poly: Poly = serde_json::from_str(&stdout(&semdet(&["schubert", "--perm", w, "--format", "json"]))).unwrap();
    assert_eq!(poly.to_string(), "x1^3*x2 + x1^3*x3");

    let q: Poly = serde_json::from_str(&stdout(&semdet(&["quantum", "--perm", w, "--format", "json"]))).unwrap();
    assert_eq!(q.at_q_zero(), poly);

    let sem: Sem = serde_json::from_str(&stdout(&semdet(&["sem", "--perm", w, "--format", "json"]))).unwrap();
    assert_eq!(sem.evaluate(), poly);

    let text = stdout(&semdet(&["rep", "--perm", w, "--format", "json"]));
    let rep: LatticeRep = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_string_pretty(&rep).unwrap(), text.trim_end());

    let det: Value = serde_json::from_str(&stdout(&semdet(&["det", "--perm", w, "--format", "json"]))).unwrap();
    assert_eq!(serde_json::from_value::<LatticeRep>(det["rep"].clone()).unwrap(), rep);
    assert_eq!(serde_json::from_value::<Poly>(det["determinant"].clone()).unwrap(), poly);

    let paths: Value = serde_json::from_str(&stdout(&semdet(&["paths", "--perm", w, "--format", "json"]))).unwrap();
    assert_eq!(paths["count"], 2);
    for sys in paths["systems"].as_array().unwrap() {
        let obj = serde_json::json!({ "steps": sys["steps"], "sigma": sys["sigma"] });
        let p: PathSystem = serde_json::from_value(obj).unwrap();
        assert!(p.sigma.is_identity());
    }

    let classify: Value =
        serde_json::from_str(&stdout(&semdet(&["classify", "--perm", "32157684", "--format", "json"]))).unwrap();
    let u: Permutation = serde_json::from_value(classify["factorization"]["u"].clone()).unwrap();
    assert_eq!(u.to_string(), "87321564");

    let expand: Value =
        serde_json::from_str(&stdout(&semdet(&["expand-schubert", "--poly", "x1^2", "--format", "json"]))).unwrap();
    let terms = expand.as_array().unwrap();
    assert_eq!(terms.len(), 1);
    let perm: Permutation = serde_json::from_value(terms[0]["perm"].clone()).unwrap();
    assert_eq!(perm.to_string(), "312");
}

#[test]
fn rep_piped_through_det_reproduces_schubert() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..200 {
        let w = random_thirteen_avoiding(&mut rng, 6).to_string();
        let rep = stdout(&semdet(&["rep", "--perm", &w, "--format", "json"]));
        let det: Value = serde_json::from_str(&stdout(&semdet_stdin(&["det", "--input", "-", "--format", "json"], &rep))).unwrap();
        let expected: Value = serde_json::from_str(&stdout(&semdet(&["schubert", "--perm", &w, "--format", "json"]))).unwrap();
        assert_eq!(det["determinant"], expected, "{w}");
    }
}

#[test]
fn renderers() {
    let svg = stdout(&semdet(&["rep", "--perm", "4132", "--format", "svg"]));
    assert!(svg.starts_with("<svg") && svg.trim_end().ends_with("</svg>"));
    let tex = stdout(&semdet(&["det", "--perm", "4132", "--format", "latex"]));
    assert!(tex.contains(r"e_1^{(1)}&e_2^{(2)}&0\\"));
    assert!(tex.trim_end().ends_with("= x_1^3x_2 + x_1^3x_3"));
    let tex = stdout(&semdet(&["sem", "--perm", "4132", "--format", "latex"]));
    assert_eq!(tex.trim(), "e_{112} - e_{103} - e_{022}");
}
