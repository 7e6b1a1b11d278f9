//! End-to-end tests of the `dmoments` binary: flag handling, exit codes,
//! file outputs, and the environment-variable output directory.

use std::fs;
use std::path::PathBuf;
use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_dmoments"))
}

fn temp_dir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("dmoments-cli-{tag}-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn spectrum_accepts_zero_field() {
    let out = bin()
        .args(["spectrum", "--n", "0", "--k", "0", "--B", "0"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout).to_string();
    assert!(text.contains("5.109989500000e5") || text.contains("5.10998950"), "{text}");
}

#[test]
fn edm_zero_field_exits_2() {
    let out = bin()
        .args(["edm", "--B", "0", "--epsilon-eV", "2.6e5"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn edm_missing_energy_exits_2() {
    let out = bin().args(["edm", "--B", "1.0"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr).to_string();
    assert!(err.contains("epsilon"), "{err}");
}

#[test]
fn edm_conflicting_field_flags_exit_2() {
    let out = bin()
        .args(["edm", "--B", "1.0", "--B-gauss", "1e4", "--epsilon-eV", "1e5"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn edm_point_query_matches_published_example() {
    let out = bin()
        .args([
            "edm",
            "--B-gauss",
            "1e-3",
            "--epsilon-eV",
            "2.6e5",
            "--n",
            "0",
            "--k",
            "0",
            "--compare-paper",
            "--quadrature",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout).to_string();
    // closed form and quadrature agree to the printed precision
    assert_eq!(text.matches("7.205710e-20").count(), 3, "{text}");
    assert!(text.contains("3.1e-24"), "{text}");
}

#[test]
fn edm_accepts_joules() {
    // 4.165659248440000e-14 J = 2.6e5 eV
    let out = bin()
        .args(["edm", "--B", "1e-7", "--epsilon-J", "4.16565924844e-14"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout).to_string();
    assert!(text.contains("7.2057"), "{text}");
}

#[test]
fn mdm_quadrature_runs() {
    let out = bin()
        .args(["mdm", "--B", "1e10", "--n", "1", "--k", "1", "--quadrature"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout).to_string();
    assert!(text.contains("mu_B"), "{text}");
    assert!(text.contains("quadrature"), "{text}");
}

#[test]
fn sweep_writes_csv_and_svg() {
    let dir = temp_dir("sweep");
    let config = dir.join("cfg.json");
    fs::write(
        &config,
        r#"{"quantity":"edm","n":0,"k":0,"fixed_epsilon_eV":2.6e5,
            "axis":"B_tesla","grid":{"min":1e-9,"max":4e-7,"points":5,"spacing":"linear"}}"#,
    )
    .unwrap();
    let csv = dir.join("out.csv");
    let svg = dir.join("out.svg");
    let st = bin()
        .arg("sweep")
        .arg(&config)
        .arg("--out")
        .arg(&csv)
        .arg("--svg")
        .arg(&svg)
        .status()
        .unwrap();
    assert!(st.success());
    let text = fs::read_to_string(&csv).unwrap();
    assert!(text.starts_with(
        "axis_name,axis_value,B_tesla,epsilon_eV,n,k,scale_eV,regime,value,value_unit,method"
    ));
    assert_eq!(text.lines().count(), 6);
    assert!(fs::read_to_string(&svg).unwrap().contains("<polyline"));
    fs::remove_dir_all(&dir).ok();
}

#[test]
fn sweep_schema_violation_names_field_and_exits_2() {
    let dir = temp_dir("schema");
    let config = dir.join("bad.json");
    fs::write(
        &config,
        r#"{"quantity":"edm","n":0,"k":0,
            "axis":"B_tesla","grid":{"min":1e-9,"max":4e-7,"points":5,"spacing":"linear"}}"#,
    )
    .unwrap();
    let out = bin().arg("sweep").arg(&config).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr).to_string();
    assert!(err.contains("fixed_epsilon_eV"), "{err}");
    fs::remove_dir_all(&dir).ok();
}

#[test]
fn sweep_missing_config_exits_3() {
    let out = bin().args(["sweep", "/nonexistent/cfg.json"]).output().unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn sweep_uses_env_out_dir() {
    let dir = temp_dir("envdir");
    let config = dir.join("cfg.json");
    fs::write(
        &config,
        r#"{"quantity":"mdm","n":0,"k":0,
            "axis":"B_tesla","grid":{"min":1e-2,"max":1e2,"points":3,"spacing":"log"}}"#,
    )
    .unwrap();
    let st = bin()
        .arg("sweep")
        .arg(&config)
        .env("DMOMENTS_OUT_DIR", &dir)
        .status()
        .unwrap();
    assert!(st.success());
    assert!(dir.join("sweep.csv").exists());
    fs::remove_dir_all(&dir).ok();
}

#[test]
fn compare_unknown_table_exits_2() {
    let out = bin().args(["compare", "--table", "7"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn compare_writes_csv() {
    let dir = temp_dir("compare");
    let csv = dir.join("cmp.csv");
    let st = bin()
        .args(["compare", "--table", "1", "--out"])
        .arg(&csv)
        .status()
        .unwrap();
    assert!(st.success());
    let text = fs::read_to_string(&csv).unwrap();
    assert!(text.starts_with("source,epsilon_eV,B_gauss_lo"));
    assert_eq!(text.lines().count(), 5);
    fs::remove_dir_all(&dir).ok();
}

#[test]
fn verify_detects_injected_gamma_fault() {
    let out = bin()
        .args(["verify", "--perturb-gamma", "1e-3"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8_lossy(&out.stdout).to_string();
    assert!(text.contains("closed_vs_quadrature") && text.contains("FAIL"), "{text}");
}
