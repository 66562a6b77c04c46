//! Command-line behavior: exit codes, error codes, determinism and reports.

use std::path::PathBuf;
use std::process::Command;

use jetorder::cli::run;
use serde_json::Value;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("examples/data").join(name).to_string_lossy().into_owned()
}

fn temp_file(name: &str, contents: &str) -> String {
    let dir = std::env::temp_dir().join(format!("jetorder-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path.to_string_lossy().into_owned()
}

fn invoke(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("jetorder").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> Value {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let (code, out, err) = invoke(&all);
    assert_eq!(code, 0, "{err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn generic_orders_of_cubic() {
    let v = json(&["orders", &data("cubic.json"), "--generic"]);
    assert_eq!(v["command"], "orders");
    assert_eq!(v["result"]["n_inj"], 2);
    assert_eq!(v["result"]["rank_profile"], serde_json::json!([1, 2, 3]));
}

#[test]
fn orders_at_point_with_rational_coordinates() {
    let v = json(&["orders", &data("shifted.json"), "--at", "-1/2"]);
    assert_eq!(v["result"]["n_inj"], 2);
    assert_eq!(v["result"]["point"], serde_json::json!(["-1/2"]));
}

#[test]
fn scan_reports_each_point() {
    let (code, out, _) = invoke(&["scan", &data("cubic.json"), "--points", &data("line_points.json")]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 4);
    assert!(lines[0].starts_with("(0): n_inj 3"));
    assert!(lines[1..].iter().all(|l| l.contains("n_inj 2")));
}

#[test]
fn minors_of_cubic() {
    let v = json(&["minors", &data("cubic.json")]);
    assert_eq!(v["result"]["minors"][0][1]["text"], "3*x");
    assert_eq!(v["result"]["truncated"], false);
}

#[test]
fn dv_image_rank() {
    let v = json(&["dv", &data("cubic.json"), "--order", "2"]);
    assert_eq!(v["result"]["image"]["rank"], 8);
    assert_eq!(v["result"]["full"], false);
    let v = json(&["dv", &data("cubic.json"), "--order", "3", "--weights", "-3:3"]);
    assert_eq!(v["result"]["image"]["rank"], 9);
}

#[test]
fn toric_report_of_hirzebruch() {
    let v = json(&["toric", &data("hirzebruch_131_polytope.json"), "--report"]);
    let r = &v["result"];
    assert_eq!((r["points"].as_u64(), r["n_inj_generic"].as_u64()), (Some(7), Some(3)));
    assert_eq!((r["n_inj_max"].as_u64(), r["n_surj"].as_u64(), r["n1_surj"].as_i64()), (Some(4), Some(1), Some(1)));
}

#[test]
fn non_smooth_polytope_with_n_surj_is_an_input_error() {
    let (code, _, err) = invoke(&["toric", &data("thin_triangle.json"), "--n-surj"]);
    assert_eq!(code, 2);
    assert!(err.contains("basis condition fails at vertex"), "{err}");
}

#[test]
fn verify_suites_exit_zero() {
    let (code, out, _) = invoke(&["verify", "hirzebruch", "--r", "1", "--k", "3", "--l", "1"]);
    assert_eq!(code, 0);
    assert!(out.contains("overall: pass"));
    let (code, _, _) = invoke(&["verify", "veronese", "--n", "2", "--m", "2"]);
    assert_eq!(code, 0);
}

#[test]
fn verify_domain_error_exits_two() {
    let (code, _, err) = invoke(&["verify", "hirzebruch", "--r", "1", "--k", "1", "--l", "1"]);
    assert_eq!(code, 2);
    assert!(err.starts_with("error[E100]"), "{err}");
}

#[test]
fn input_errors_carry_distinct_codes() {
    let cases = [
        ("syntax.json", "{\"nvars\": 1, \"monomials\": [[0]", "E001"),
        ("rational.json", "{\"nvars\": 1, \"polynomials\": [{\"[0]\": \"1/0\"}]}", "E002"),
        ("negative.json", "{\"nvars\": 1, \"monomials\": [[-1]]}", "E003"),
        ("dimension.json", "{\"nvars\": 2, \"monomials\": [[0]]}", "E004"),
        ("duplicate.json", "{\"nvars\": 1, \"monomials\": [[0], [0]]}", "E005"),
        ("dependent.json", "{\"nvars\": 1, \"polynomials\": [{\"[1]\": \"1\"}, {\"[1]\": \"2\"}]}", "E006"),
    ];
    for (name, text, want) in cases {
        let path = temp_file(name, text);
        let (code, _, err) = invoke(&["orders", &path, "--generic"]);
        assert_eq!(code, 2, "{name}");
        assert!(err.starts_with(&format!("error[{want}]")), "{name}: {err}");
    }
    let (code, _, err) = invoke(&["orders", "/nonexistent/space.json", "--generic"]);
    assert_eq!(code, 2);
    assert!(err.starts_with("error[E200]"), "{err}");
}

#[test]
fn usage_errors_exit_two() {
    let (code, _, _) = invoke(&["orders", &data("cubic.json")]);
    assert_eq!(code, 2);
    let (code, _, _) = invoke(&["frobnicate"]);
    assert_eq!(code, 2);
    let (code, _, _) = invoke(&["--help"]);
    assert_eq!(code, 0);
}

#[test]
fn identical_inputs_give_identical_bytes() {
    for args in [
        vec!["--json", "orders", &data("cubic.json"), "--generic"][..].to_vec(),
        vec!["--json", "--seed", "7", "toric", &data("hirzebruch_131_polytope.json"), "--report"],
        vec!["verify", "hirzebruch", "--r", "1", "--k", "3", "--l", "1"],
    ] {
        let first = invoke(&args);
        let second = invoke(&args);
        assert_eq!(first, second);
    }
}

#[test]
fn seed_flag_and_environment_reach_the_report() {
    let v = json(&["--seed", "42", "orders", &data("cubic.json"), "--generic"]);
    assert_eq!(v["seed"], 42);
    let out = Command::new(env!("CARGO_BIN_EXE_jetorder"))
        .args(["--json", "orders", &data("cubic.json"), "--generic"])
        .env("JETORDER_SEED", "9")
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["seed"], 9);
}

#[test]
fn binary_exit_codes() {
    let status = |args: &[&str]| Command::new(env!("CARGO_BIN_EXE_jetorder")).args(args).output().unwrap().status.code();
    assert_eq!(status(&["orders", &data("cubic.json"), "--generic"]), Some(0));
    assert_eq!(status(&["toric", &data("thin_triangle.json"), "--n-surj"]), Some(2));
}
