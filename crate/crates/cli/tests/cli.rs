//! End-to-end tests of the `gyro` binary: exit codes, file formats, and
//! determinism.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn gyro(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gyro"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn read(path: &Path) -> String {
    fs::read_to_string(path).unwrap()
}

fn data_rows(csv: &str) -> Vec<Vec<f64>> {
    csv.lines()
        .filter(|l| !l.starts_with('#'))
        .skip(1) // header
        .map(|l| l.split(',').map(|v| v.parse().unwrap()).collect())
        .collect()
}

#[test]
fn spectrum_default_sweep_emits_1001_rows_above_the_shot_floor() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("spectrum.csv");
    let status = gyro(&["spectrum", "--out", out.to_str().unwrap()]);
    assert!(status.status.success());
    let text = read(&out);
    let rows = data_rows(&text);
    assert_eq!(rows.len(), 1001);
    // n_i_sym (column 8) never dips below the vacuum shot floor
    assert!(rows.iter().all(|r| r[8] >= 1.0));
    assert!(rows.iter().flatten().all(|v| v.is_finite()));
}

#[test]
fn spectrum_squeezed_floor_matches_exp_minus_2r() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("squeezed.csv");
    let status = gyro(&[
        "spectrum",
        "--input",
        "squeezed:r=1.73",
        "--sweep",
        "omega:900000:1100000:401",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(status.status.success());
    let rows = data_rows(&read(&out));
    let floor = rows.iter().map(|r| r[8]).fold(f64::INFINITY, f64::min);
    let expected = (-2.0f64 * 1.73).exp();
    assert!(
        (floor - expected).abs() / expected < 1e-3,
        "floor {floor} vs {expected}"
    );
}

#[test]
fn spectrum_output_is_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let first = dir.path().join("a.csv");
    let second = dir.path().join("b.csv");
    for out in [&first, &second] {
        let status = gyro(&[
            "spectrum",
            "--input",
            "squeezed:r=0.5",
            "--omega-rot-sq",
            "0.3",
            "--out",
            out.to_str().unwrap(),
        ]);
        assert!(status.status.success());
    }
    assert_eq!(fs::read(&first).unwrap(), fs::read(&second).unwrap());
}

#[test]
fn reversed_sweep_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("bad.csv");
    let result = gyro(&[
        "spectrum",
        "--sweep",
        "omega:2000000:1000000:100",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(result.status.code(), Some(2));
    assert!(!out.exists());
}

#[test]
fn malformed_params_file_reports_location_and_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let params = dir.path().join("params.json");
    fs::write(&params, "{\n  \"omega_b\": 1e6,\n  \"bogus\": 1\n}").unwrap();
    let out = dir.path().join("x.csv");
    let result = gyro(&[
        "spectrum",
        "--params",
        params.to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(result.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&result.stderr);
    assert!(stderr.contains("line"), "stderr: {stderr}");
}

#[test]
fn params_file_round_trips_through_spectrum() {
    let dir = tempfile::tempdir().unwrap();
    let params = dir.path().join("params.json");
    fs::write(
        &params,
        r#"{"omega_b":1e6,"kappa":1e9,"gamma_x":1.0,"gamma_y":1.0,
            "g":15811.388300841896,"n_in":1.0,"mass":1.0,"n_th":0.0}"#,
    )
    .unwrap();
    let out = dir.path().join("s.csv");
    let status = gyro(&[
        "spectrum",
        "--params",
        params.to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(status.status.success());
    let text = read(&out);
    assert!(text.contains("# co = 1\n") || text.contains("# co = 0.999999999"));
}

#[test]
fn bounds_reports_the_closed_form_values() {
    let result = gyro(&["bounds", "--co", "1.0", "--r", "1.73"]);
    assert!(result.status.success());
    let json: serde_json::Value =
        serde_json::from_slice(&result.stdout).expect("bounds emits JSON");
    let ub_vacuum = json["omega_sq_ub_vacuum"].as_f64().unwrap();
    assert!((ub_vacuum - 2.75).abs() < 1e-12);
    let ub_squeezed = json["omega_sq_ub_squeezed"].as_f64().unwrap();
    assert!((ub_squeezed - 6.93).abs() < 0.01, "{ub_squeezed}");
    let floor = json["co_min_squeezed"].as_f64().unwrap();
    assert!((floor - 0.0348).abs() < 1e-3);
}

#[test]
fn bounds_at_the_vacuum_floor_closes_the_range() {
    let result = gyro(&["bounds", "--co", "0.08333333333333333"]);
    assert!(result.status.success());
    let json: serde_json::Value = serde_json::from_slice(&result.stdout).unwrap();
    let ub = json["omega_sq_ub_vacuum"].as_f64().unwrap();
    assert!(ub.abs() < 1e-12, "{ub}");
}

#[test]
fn bounds_below_the_floor_reports_null() {
    let result = gyro(&["bounds", "--co", "0.05"]);
    assert!(result.status.success());
    let json: serde_json::Value = serde_json::from_slice(&result.stdout).unwrap();
    assert!(json["omega_sq_ub_vacuum"].is_null());
}

#[test]
fn metrics_reports_consistent_json() {
    let result = gyro(&["metrics", "--co", "0.25"]);
    assert!(result.status.success());
    let json: serde_json::Value = serde_json::from_slice(&result.stdout).unwrap();
    let snr = json["snr_per_photon_resonance"].as_f64().unwrap();
    assert!((snr - 4.0).abs() < 1e-6, "{snr}"); // 256 C^2/(1+4C)^2 at C = 1/4
    let limit = json["limit"].as_f64().unwrap();
    assert!((limit - 0.125).abs() < 1e-12);
}

#[test]
fn unknown_figure_id_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let result = gyro(&["figure", "--which", "fig9", "--out-dir", dir.path().to_str().unwrap()]);
    assert_eq!(result.status.code(), Some(2));
}

#[test]
fn figure_all_writes_every_curve_file() {
    let dir = tempfile::tempdir().unwrap();
    let result = gyro(&["figure", "--which", "all", "--out-dir", dir.path().to_str().unwrap()]);
    assert!(result.status.success());
    let names: Vec<String> = fs::read_dir(dir.path())
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    for expected in [
        "fig2_squeezed_co1.csv",
        "fig2_vacuum_co1.csv",
        "fig3a_co1.csv",
        "fig3b_co1.csv",
        "fig3c_co0.25.csv",
        "fig4a_vacuum_co1.csv",
        "fig4a_squeezed_co1.csv",
        "fig4b_co1.csv",
        "fig4c_co1.csv",
    ] {
        assert!(names.iter().any(|n| n == expected), "missing {expected}");
    }
}

#[test]
fn verify_quick_passes_on_the_default_build() {
    let result = gyro(&["verify", "--level", "quick"]);
    let stdout = String::from_utf8_lossy(&result.stdout);
    assert!(result.status.success(), "verify failed:\n{stdout}");
    assert!(stdout.contains("all 16 checks passed"), "{stdout}");
}
