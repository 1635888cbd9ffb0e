use std::path::Path;
use std::process::{Command, Output};

use eqkl::{braid, SchurExpansion};

fn eqkl(cache: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eqkl"))
        .args(args)
        .env("EQKL_CACHE", cache)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn data(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
        .display()
        .to_string()
}

#[test]
fn braid_coefficient_in_canonical_order() {
    let dir = tempfile::tempdir().unwrap();
    let out = eqkl(dir.path(), &["braid", "-n", "6", "--coeff", "2", "--format", "text"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "s[2,2,2] + s[4,2] + s[6]\n");
}

#[test]
fn boolean_uniform_matroid_is_trivial() {
    let dir = tempfile::tempdir().unwrap();
    let out = eqkl(dir.path(), &["uniform", "-m", "0", "-d", "5"]);
    assert_eq!(stdout(&out), "s[5]\n");
}

#[test]
fn k4_graphic_matroid() {
    let dir = tempfile::tempdir().unwrap();
    let out = eqkl(dir.path(), &["matroid", "--input", &data("k4.json")]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "chi(t) = t^3 - 6t^2 + 11t - 6\nP(t) = 1 + t\n");
    let out = eqkl(
        dir.path(),
        &["--format", "json", "matroid", "--input", &data("k4.json")],
    );
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["flats"], 15);
    assert_eq!(v["rank"], 3);
}

#[test]
fn latex_rendering() {
    let dir = tempfile::tempdir().unwrap();
    let out = eqkl(
        dir.path(),
        &["--format", "latex", "uniform", "-m", "2", "-d", "4", "--coeff", "1"],
    );
    assert_eq!(stdout(&out), "V[4,2]\\oplus V[3,3]\n");
}

#[test]
fn json_round_trips_and_matches_fixture_schema() {
    let dir = tempfile::tempdir().unwrap();
    let out = eqkl(dir.path(), &["--format", "json", "braid", "-n", "7", "--coeff", "2"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["n"], 7);
    assert_eq!(v["i"], 2);
    let value: SchurExpansion = serde_json::from_value(v["value"].clone()).unwrap();
    assert_eq!(value, braid::braid_coefficient(7, 2).unwrap());

    let out = eqkl(dir.path(), &["--format", "json", "uniform", "-m", "1", "-d", "5"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let p: eqkl::GradedSchur = serde_json::from_value(v["value"].clone()).unwrap();
    assert_eq!(p, eqkl::uniform::kl_uniform_closed(1, 5));
}

#[test]
fn closed_form_and_recursion_agree() {
    let dir = tempfile::tempdir().unwrap();
    let a = eqkl(dir.path(), &["uniform", "-m", "3", "-d", "6", "--closed-form"]);
    let b = eqkl(dir.path(), &["uniform", "-m", "3", "-d", "6", "--recursion"]);
    assert_eq!(stdout(&a), stdout(&b));
    let both = eqkl(
        dir.path(),
        &["uniform", "-m", "3", "-d", "6", "--closed-form", "--recursion"],
    );
    assert_eq!(both.status.code(), Some(2));
}

#[test]
fn cache_never_changes_output() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["--format", "json", "braid", "-n", "8"];
    let cold = eqkl(dir.path(), &args);
    let warm = eqkl(dir.path(), &args);
    let uncached = eqkl(dir.path(), &["--no-cache", "--format", "json", "braid", "-n", "8"]);
    assert_eq!(cold.stdout, warm.stdout);
    assert_eq!(cold.stdout, uncached.stdout);

    let stats = eqkl(dir.path(), &["--format", "json", "cache", "stats"]);
    let v: serde_json::Value = serde_json::from_slice(&stats.stdout).unwrap();
    assert_eq!(v["entries"], 1);

    for entry in std::fs::read_dir(dir.path()).unwrap() {
        std::fs::write(entry.unwrap().path(), "{\"family\": 3").unwrap();
    }
    let corrupt = eqkl(dir.path(), &args);
    assert!(corrupt.status.success());
    assert_eq!(cold.stdout, corrupt.stdout);

    let cleared = eqkl(dir.path(), &["cache", "clear"]);
    assert!(stdout(&cleared).starts_with("removed 1 entries"));
    let stats = eqkl(dir.path(), &["cache", "stats"]);
    assert!(stdout(&stats).contains("entries: 0"));
}

#[test]
fn bad_input_exits_with_two() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(eqkl(dir.path(), &["braid", "-n", "11"]).status.code(), Some(2));
    assert_eq!(eqkl(dir.path(), &["braid", "-n", "0"]).status.code(), Some(2));
    assert_eq!(
        eqkl(dir.path(), &["verify", "--suite", "everything"]).status.code(),
        Some(2)
    );
    assert_eq!(
        eqkl(dir.path(), &["matroid", "--input", "/nonexistent.json"])
            .status
            .code(),
        Some(2)
    );

    let bad = dir.path().join("bad.json");
    std::fs::write(
        &bad,
        r#"{"type": "bases", "ground": [0, 1, 2], "bases": [[0, 1], [2]]}"#,
    )
    .unwrap();
    let out = eqkl(dir.path(), &["matroid", "--input", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("invalid matroid"));

    let config = dir.path().join("eqkl.toml");
    std::fs::write(&config, "max_brade_n = 3\n").unwrap();
    let out = eqkl(dir.path(), &["--config", config.to_str().unwrap(), "braid", "-n", "4"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn config_limits_apply() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("eqkl.toml");
    std::fs::write(&config, "max_braid_n = 5\n").unwrap();
    let cfg = config.to_str().unwrap();
    assert!(eqkl(dir.path(), &["--config", cfg, "braid", "-n", "5"])
        .status
        .success());
    assert_eq!(
        eqkl(dir.path(), &["--config", cfg, "braid", "-n", "6"]).status.code(),
        Some(2)
    );
}

#[test]
fn table_suite_passes() {
    let dir = tempfile::tempdir().unwrap();
    let out = eqkl(dir.path(), &["--format", "json", "verify", "--suite", "tables"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["passed"], true);
    let out = eqkl(dir.path(), &["braid", "-n", "7", "--verify-tables"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("D(7,2)"));
}

#[test]
fn degree_cap_is_bad_input() {
    let dir = tempfile::tempdir().unwrap();
    let out = eqkl(
        dir.path(),
        &["verify", "--suite", "logconcavity", "--max-md", "7", "--max-n", "3"],
    );
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("Kronecker degree"));
}
