use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_osp-capelli")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let out = run(&all);
    let v = serde_json::from_slice(&out.stdout).expect("stdout is json");
    (v, out.status.code().unwrap())
}

#[test]
fn eigenvalue_spot_values() {
    let (v, code) = json(&["eigenvalue", "--n", "1", "--nu", "1,1", "--mu", "2,1", "--oracle"]);
    assert_eq!(code, 0);
    let row = &v["tables"]["eigenvalues"][0];
    assert_eq!(row["c_formula"], "-1");
    assert_eq!(row["c_oracle"], "-1");
    assert_eq!(row["agree"], true);

    let (v, _) = json(&["eigenvalue", "--n", "2", "--nu", "0,0", "--mu", "3,1"]);
    assert_eq!(v["tables"]["eigenvalues"][0]["c_formula"], "1");
    let (v, _) = json(&["eigenvalue", "--n", "1", "--nu", "2,0", "--mu", "1,0"]);
    assert_eq!(v["tables"]["eigenvalues"][0]["c_formula"], "0");
}

#[test]
fn eigenvalue_grid_with_oracle() {
    let (v, code) = json(&["eigenvalue", "--n", "2", "--nu", "2,1", "--max-degree", "5", "--oracle"]);
    assert_eq!(code, 0);
    assert_eq!(v["status"], "pass");
    assert!(v["tables"]["eigenvalues"].as_array().unwrap().len() > 5);
}

#[test]
fn matrix_reports() {
    let (v, code) = json(&["matrix", "--n", "1", "--d", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["summary"]["det_md"], "4*x");
    assert_eq!(v["summary"]["det_md_prime"], "4");
    let factors = v["tables"]["factors"].as_array().unwrap();
    assert_eq!(factors.len(), 1);
    assert_eq!(factors[0]["s"], 0);
    assert_eq!(factors[0]["f"], 1);

    let (v, _) = json(&["matrix", "--n", "2", "--d", "1"]);
    assert_eq!(v["summary"]["degree"], 0);
    assert!(v["tables"]["factors"].as_array().unwrap().iter().all(|r| r["f"] == 0));

    let (v, code) = json(&["matrix", "--n", "3", "--d", "8"]);
    assert_eq!((code, v["status"].as_str()), (0, Some("pass")));
}

#[test]
fn express_outputs() {
    let (v, _) = json(&["express", "--n", "1", "--nu", "1,0"]);
    for row in v["tables"]["coefficients"].as_array().unwrap() {
        let want = if row["mu"] == "(1,0)" { "1" } else { "0" };
        assert_eq!(row["coefficient"], want);
    }
    let (v, _) = json(&["express", "--n", "1", "--nu", "0,0"]);
    assert_eq!(v["tables"]["coefficients"][0]["coefficient"], "1");
    let (v, code) = json(&["express", "--n", "1", "--nu", "1,1", "--verify-blocks", "6"]);
    assert_eq!(code, 0);
    assert_eq!(v["summary"]["block_check"], "pass");
}

#[test]
fn decompose_dimensions() {
    let (v, code) = json(&["decompose", "--n", "1", "--max-degree", "3"]);
    assert_eq!(code, 0);
    let comps = v["tables"]["components"].as_array().unwrap();
    let find = |nu: &str| comps.iter().find(|c| c["nu"] == nu).unwrap()["dim"].as_i64().unwrap();
    assert_eq!(find("(0,0)"), 1);
    assert_eq!(find("(3,0)"), 1);
    assert_eq!(find("(2,1)"), 3);

    let (v, code) = json(&["decompose", "--n", "2", "--max-degree", "5"]);
    assert_eq!(code, 0);
    for row in v["tables"]["degrees"].as_array().unwrap() {
        assert_eq!(row["dim"], row["component_sum"]);
    }
}

#[test]
fn verify_smoke_and_fault() {
    let (v, code) = json(&["verify", "--n", "1", "--max-degree", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["summary"]["failed"], 0);

    let (v, code) = json(&["verify", "--n", "1", "--max-degree", "4", "--inject-fault", "laplacian-sign"]);
    assert_eq!(code, 1);
    let checks = v["tables"]["checks"].as_array().unwrap();
    let sl2 = checks.iter().find(|c| c["check"] == "sl2").unwrap();
    assert_eq!(sl2["status"], "fail");
}

#[test]
fn verify_is_deterministic() {
    let args = ["verify", "--n", "1..2", "--max-degree", "4", "--seed", "3", "--format", "csv"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["eigenvalue", "--n", "1", "--nu", "1,2"][..],
        &["eigenvalue", "--n", "1", "--nu", "4,0"],
        &["eigenvalue", "--n", "0", "--nu", "1,0"],
        &["verify", "--n", "3..1"],
        &["matrix", "--n", "1"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty());
    }
}

#[test]
fn rationals_are_strings_and_decimal_is_labeled() {
    let (v, _) = json(&["express", "--n", "1", "--nu", "1,1", "--decimal"]);
    let row = &v["tables"]["coefficients"][1];
    assert_eq!(row["coefficient"], "3/2");
    assert_eq!(row["coefficient_approx"], "1.5");
}
