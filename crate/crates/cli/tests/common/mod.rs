#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

/// Golden cases: file stem and arguments after the binary name. `{ex}` is the
/// bundled examples directory.
pub const GOLDEN: &[(&str, &[&str])] = &[
    ("jacobi.poly", &["poly", "--family", "{ex}/jacobi.json", "--mu", "1,2"]),
    ("jacobi.hyper", &["hyper", "--family", "{ex}/jacobi.json", "--mu", "5/2"]),
    ("power-weight.poly", &["poly", "--family", "{ex}/power-weight.json", "--mu", "2,3"]),
    ("power-weight.hyper", &["hyper", "--family", "{ex}/power-weight.json", "--mu", "2", "--theta-gate", "any"]),
    ("bessel-case.poly", &["poly", "--family", "{ex}/bessel-case.json", "--mu", "1"]),
    ("bessel-case.hyper", &["hyper", "--family", "{ex}/bessel-case.json", "--mu", "1"]),
];

pub fn manifest_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

pub fn examples() -> PathBuf {
    manifest_dir().join("examples")
}

pub fn golden_path(stem: &str) -> PathBuf {
    manifest_dir().join("tests/golden").join(format!("{stem}.json"))
}

pub fn run(args: &[&str]) -> Output {
    let ex = examples();
    let ex = ex.to_str().expect("utf-8 path");
    let args: Vec<String> = args.iter().map(|a| a.replace("{ex}", ex)).collect();
    Command::new(env!("CARGO_BIN_EXE_biorth")).args(&args).output().expect("binary runs")
}

pub fn read(path: &Path) -> Vec<u8> {
    std::fs::read(path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}
