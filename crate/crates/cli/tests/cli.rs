mod common;

use common::{golden_path, read, run, GOLDEN};
use serde_json::Value;

/// Set `BIORTH_BLESS=1` to rewrite the golden files from the current binary.
#[test]
fn golden_outputs() {
    let bless = std::env::var_os("BIORTH_BLESS").is_some();
    for (stem, args) in GOLDEN {
        let out = run(args);
        assert!(out.status.success(), "{stem}: {}", String::from_utf8_lossy(&out.stderr));
        let path = golden_path(stem);
        if bless {
            std::fs::write(&path, &out.stdout).unwrap();
        }
        assert_eq!(String::from_utf8_lossy(&read(&path)), String::from_utf8_lossy(&out.stdout), "{stem}");
    }
}

fn exit_code(args: &[&str]) -> i32 {
    run(args).status.code().expect("exit code")
}

#[test]
fn exit_codes() {
    assert_eq!(exit_code(&["poly", "--family", "{ex}/jacobi.json", "--mu", "1,2"]), 0);
    // usage and configuration problems
    assert_eq!(exit_code(&["poly", "--family", "{ex}/jacobi.json", "--mu", "sqrt2"]), 2);
    assert_eq!(exit_code(&["poly", "--family", "{ex}/missing.json", "--mu", "1"]), 2);
    assert_eq!(exit_code(&["hyper", "--family", "{ex}/jacobi.json", "--mu", "2", "--output", "csv"]), 2);
    assert_eq!(exit_code(&["poly", "--family", "{ex}/jacobi.json", "--mu", "1,2", "--n", "3"]), 2);
    // mathematical failures
    assert_eq!(exit_code(&["poly", "--family", "{ex}/jacobi.json", "--mu", "1,1"]), 3);
    assert_eq!(exit_code(&["poly", "--family", "{ex}/bessel-case.json", "--mu", "1,2"]), 3);
}

#[test]
fn errors_are_reported_as_json() {
    let out = run(&["poly", "--family", "{ex}/jacobi.json", "--mu", "1,1"]);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["error"], "DegenerateMu");
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error: DegenerateMu"));
}

#[test]
fn corrupted_config_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, r#"{"name": "bad", "a": ["1"]}"#).unwrap();
    let out = run(&["moments", "--family", path.to_str().unwrap(), "--mu", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_passes_on_bundled_families() {
    for config in ["jacobi", "power-weight"] {
        let family = format!("{{ex}}/{config}.json");
        let out = run(&["verify", "--family", &family, "--n", "6", "--seed", "7"]);
        assert_eq!(out.status.code(), Some(0), "{config}: {}", String::from_utf8_lossy(&out.stdout));
        let v: Value = serde_json::from_slice(&out.stdout).unwrap();
        assert_eq!(v["summary"]["failed"], 0);
        assert!(v["summary"]["passed"].as_u64().unwrap() > 0);
    }
}

#[test]
fn sweep_csv_is_right_padded() {
    let out = run(&["sweep", "--family", "{ex}/jacobi.json", "--mu", "1,2", "--output", "csv"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,mu,path,f_0,f_1,f_2");
    assert_eq!(lines.len(), 4);
    assert!(lines.iter().all(|l| l.split(',').count() == 6));
    assert!(lines[1].starts_with("0,,"));
}

#[test]
fn float_mode_emits_numbers() {
    let out = run(&["poly", "--family", "{ex}/jacobi.json", "--mu", "1,2", "--mode", "float"]);
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let f: Vec<f64> = v["f"].as_array().unwrap().iter().map(|x| x.as_f64().unwrap()).collect();
    let want = [1.0, -6.0, 6.0];
    assert!(f.iter().zip(want).all(|(a, b)| (a - b).abs() < 1e-10), "{f:?}");
}
