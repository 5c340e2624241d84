use std::path::PathBuf;
use std::process::Command;

use beta_gompertz::datasets::aarset;
use beta_gompertz::inference::{family_log_likelihood, fit_mle, FitOptions};
use beta_gompertz::submodels::{ModelFamily, ModelSpec};
use serde_json::Value;

fn bgz(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_bgz")).args(args).output().unwrap();
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn aarset_path() -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../data/aarset.txt")
        .to_string_lossy()
        .into_owned()
}

#[test]
fn fit_report_reproduces_loglik() {
    let path = aarset_path();
    let (code, out, err) = bgz(&["fit", "--family", "GG", "--data", &path]);
    assert_eq!(code, 0, "{err}");
    let v: Value = serde_json::from_str(&out).unwrap();
    let reported = v["fit"]["loglik"].as_f64().unwrap();
    let values: Vec<f64> = v["fit"]["estimate"]["values"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_f64().unwrap())
        .collect();
    let spec = ModelSpec::new(ModelFamily::GG, values).unwrap();
    let d = aarset().unwrap();
    let recomputed = family_log_likelihood(&d.values, &spec).unwrap();
    assert!(((reported - recomputed) / recomputed).abs() < 1e-9, "{reported} vs {recomputed}");
    let direct = fit_mle(&d, ModelFamily::GG, &FitOptions::default()).unwrap();
    assert!(((reported - direct.loglik) / direct.loglik).abs() < 1e-9);
    assert_eq!(v["fit"]["status"], "converged");
    assert!(v["gof"]["aic"].as_f64().unwrap() > 0.0);
}

#[test]
fn compare_table_lists_every_family() {
    let (code, out, _) = bgz(&["compare", "--data", &aarset_path(), "--format", "table"]);
    assert_eq!(code, 0);
    for f in ["E ", "GE ", "BE ", "G ", "GG ", "BG "] {
        assert!(out.lines().any(|l| l.starts_with(f)), "{f} missing in\n{out}");
    }
    assert_eq!(out.matches("LRT vs BG").count(), 5);
}

#[test]
fn sampling_is_seed_reproducible() {
    let args = ["sample", "--params", "0.5,0.5,2,2", "--n", "20", "--seed", "42"];
    let (c1, a, _) = bgz(&args);
    let (c2, b, _) = bgz(&args);
    assert_eq!((c1, c2), (0, 0));
    assert_eq!(a, b);
    let (_, c, _) = bgz(&["sample", "--params", "0.5,0.5,2,2", "--n", "20", "--seed", "43"]);
    assert_ne!(a, c);
}

#[test]
fn sample_with_ecdf() {
    let (code, out, _) = bgz(&["sample", "--params", "1,1,2,2", "--n", "50", "--with-ecdf"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    let ecdf = v["ecdf"].as_array().unwrap();
    assert_eq!(ecdf.len(), 50);
    assert_eq!(ecdf[49][1].as_f64().unwrap(), 1.0);
    assert!(v["ks"]["pvalue"].as_f64().unwrap() > 0.0);
    let (_, table, _) = bgz(&["sample", "--params", "1,1,2,2", "--n", "5", "--with-ecdf", "--format", "table"]);
    assert_eq!(table.lines().filter(|l| !l.starts_with('#')).count(), 5);
}

#[test]
fn eval_series_and_quantiles() {
    let (code, out, _) = bgz(&[
        "eval", "--params", "1,0.5,2,2", "--at", "0.7", "--probs", "0.5", "--curve", "5",
        "--series-max-terms", "500", "--series-tol", "1e-12",
    ]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    let pt = &v["points"][0];
    assert!((pt["pdf"].as_f64().unwrap() - 0.9038841261).abs() < 1e-9);
    assert!((pt["cdf_series"].as_f64().unwrap() - pt["cdf"].as_f64().unwrap()).abs() < 1e-9);
    assert_eq!(v["curve"].as_array().unwrap().len(), 5);
    assert_eq!(v["series_control"]["max_terms"], 500);
}

#[test]
fn shape_and_simstudy_run() {
    let (code, out, _) = bgz(&["shape", "--params", "1,1,1,1", "--curve", "3"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["rows"].as_array().unwrap().len(), 9);
    let (code, out, _) = bgz(&["simstudy", "--params", "0.5,0.5,2,2", "--n", "50", "--reps", "4", "--seed", "3"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["scenarios"][0]["reps"], 4);
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let (code, _, _) = bgz(&["fit", "--data", "/nonexistent/file.txt"]);
    assert_eq!(code, 3);
    let (code, _, _) = bgz(&["eval", "--params", "1,1,-2,2", "--at", "1"]);
    assert_eq!(code, 2);
    let (code, _, _) = bgz(&["eval", "--params", "1,1,2", "--at", "1"]);
    assert_eq!(code, 2);
    let (code, _, _) = bgz(&["frobnicate"]);
    assert_eq!(code, 2);
    let (code, _, _) = bgz(&["sample", "--params", "1,1,2,2"]);
    assert_eq!(code, 2);

    let zero = dir.path().join("zero.txt");
    std::fs::write(&zero, "1\n2\n0\n3\n4\n5\n").unwrap();
    let (code, _, err) = bgz(&["fit", "--data", zero.to_str().unwrap()]);
    assert_eq!(code, 2, "{err}");

    let constant = dir.path().join("constant.txt");
    std::fs::write(&constant, "2\n2\n2\n2\n2\n2\n").unwrap();
    let (code, _, _) = bgz(&["fit", "--data", constant.to_str().unwrap()]);
    assert_eq!(code, 2);

    let out = dir.path().join("report.json");
    let (code, stdout, _) = bgz(&["eval", "--params", "1,1,2,2", "--at", "1", "--out", out.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(stdout.is_empty());
    assert!(std::fs::read_to_string(&out).unwrap().contains("\"points\""));
    let (code, _, _) = bgz(&["eval", "--params", "1,1,2,2", "--at", "1", "--out", "/nonexistent/dir/x.json"]);
    assert_eq!(code, 3);
}

#[test]
fn json_numbers_have_ten_significant_digits() {
    let (_, out, _) = bgz(&["eval", "--params", "1,1,2,2", "--at", "0.3"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    let pdf = v["points"][0]["pdf"].as_f64().unwrap();
    let digits = format!("{pdf:e}").split('e').next().unwrap().replace(['.', '-'], "").len();
    assert!(digits <= 10, "{pdf}");
}
