use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rpd-lab")).args(args).env_remove("RPD_QUAD_TOL").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn eval_csv() {
    let o = run(&["eval", "--kernel", "omega:3", "--at", "0", "--grid", "0:2:3"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("r,f(r)"));
    assert_eq!(lines.count(), 4);
    let last: f64 = text.lines().last().unwrap().split(',').nth(1).unwrap().parse().unwrap();
    assert!((last - 2f64.sin() / 2.0).abs() < 1e-15);
}

#[test]
fn inertia_of_simplex_witness() {
    let o = run(&["inertia", "--kernel", "omega:2", "--config", "simplex-center:2@0.1"]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["n_neg"], 1);
    assert_eq!(v["order"], 5);
    assert!(v["min_eigenvalue"].as_f64().unwrap() < 0.0);
}

#[test]
fn moment_test_verdict() {
    let o = run(&["moment-test", "--n", "3"]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["verdict"], "Ω₃ ∉ Φ₄");
    assert!((v["witness"]["determinant"].as_f64().unwrap() + 8.0 / 45.0).abs() < 1e-14);
}

#[test]
fn polygon_header_counts_negatives() {
    let o = run(&["polygon-spectrum", "--kernel", "pow:2(cos:1)", "--m", "64", "--r", "4"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let header = text.lines().next().unwrap();
    let n_neg: usize = header.rsplit("n_neg=").next().unwrap().parse().unwrap();
    let counted = text.lines().skip(2).filter(|l| l.split(',').nth(1).unwrap().parse::<f64>().unwrap() < -1e-9).count();
    assert_eq!(n_neg, counted);
    assert_eq!(text.lines().count(), 66);
}

#[test]
fn density_files_round_trip() {
    let o = run(&["density", "--of", "exp:3", "--grid", "0.5:2:4"]);
    assert!(o.status.success());
    let samples = rpd_core::io::parse_density_csv(&stdout(&o)).unwrap();
    assert_eq!(samples.len(), 4);
}

#[test]
fn growth_and_search_failures() {
    let o = run(&["negeigs-growth", "--kernel", "omega:2", "--base", "simplex-center:2@0.5", "--n", "2"]);
    assert!(o.status.success());
    assert_eq!(json(&o)["passed"], true);

    let o = run(&["simplex-scan", "--kernel", "gauss", "--m", "2"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["eval", "--kernel", "bogus", "--at", "1"][..],
        &["eval", "--kernel", "exp", "--at", "-1"],
        &["eval", "--kernel", "exp"],
        &["polygon-spectrum", "--kernel", "exp", "--m", "2", "--r", "1"],
        &["eval", "--kernel", "exp", "--grid", "2:1:5"],
        &["verify", "--only", "nothing"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
    let o = Command::new(env!("CARGO_BIN_EXE_rpd-lab"))
        .args(["eval", "--kernel", "exp", "--at", "1"])
        .env("RPD_QUAD_TOL", "-3")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn quadrature_tolerance_from_env() {
    let o = Command::new(env!("CARGO_BIN_EXE_rpd-lab"))
        .args(["fourier", "--kernel", "omega:2", "--r", "2", "--k-max", "2"])
        .env("RPD_QUAD_TOL", "1e-6")
        .output()
        .unwrap();
    assert!(o.status.success());
}

#[test]
fn verify_subset_is_deterministic() {
    let a = run(&["verify", "--only", "1,2"]);
    let b = run(&["verify", "--only", "moments,1"]);
    assert!(a.status.success());
    assert_eq!(stdout(&a), stdout(&b));
    assert!(stdout(&a).lines().all(|l| !l.starts_with("FAIL")));
}
