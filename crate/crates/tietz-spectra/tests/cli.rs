//! End-to-end tests of the command-line interface: flag handling, output
//! schemas, exit codes and the CSV/JSON value contract.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_tietz-spectra"))
}

fn run(args: &[&str]) -> Output {
    bin()
        .args(args)
        .env_remove("TIETZ_SPECTRA_DATA")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn csv_rows(text: &str) -> Vec<Vec<String>> {
    text.lines()
        .map(|line| line.split(',').map(|s| s.to_string()).collect())
        .collect()
}

#[test]
fn classify_reports_regime_and_threshold() {
    let out = run(&[
        "classify", "--b-h", "1.61890", "--r-e", "0.741", "--c-h", "0.5",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let rows = csv_rows(&stdout(&out));
    assert_eq!(rows[0][0], "regime");
    assert_eq!(rows[1][0], "Case1");
    let threshold: f64 = rows[1][3].parse().unwrap();
    assert!(((threshold - 0.301313237) / 0.301313237).abs() < 1e-6);

    let out = run(&["classify", "--b-h", "1.0", "--r-e", "1.0", "--c-h", "0"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("Morse"));
}

#[test]
fn classify_rejects_large_deformation_with_exit_2() {
    let out = run(&["classify", "--b-h", "1.0", "--r-e", "1.0", "--c-h", "1.2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("|c_h| must be < 1"));
}

#[test]
fn levels_morse_reference_row() {
    let out = run(&[
        "levels", "--D", "25", "--b-h", "1", "--r-e", "10", "--c-h", "0",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let rows = csv_rows(&stdout(&out));
    assert_eq!(rows[0], vec!["n_r", "l", "energy", "method", "residual"]);
    let e0: f64 = rows[1][2].parse().unwrap();
    assert!((e0 - 4.75).abs() < 1e-12);
    assert_eq!(rows.len() - 1, 5);
}

#[test]
fn levels_rejects_out_of_range_index() {
    let out = run(&[
        "levels", "--D", "10", "--b-h", "1", "--r-e", "2", "--c-h", "0.5", "--n-r", "7",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("n_r,max"), "stderr: {}", stderr(&out));
}

#[test]
fn levels_forces_s_waves_outside_case1() {
    let out = run(&[
        "levels", "--D", "10", "--b-h", "1", "--r-e", "2", "--c-h", "-0.3", "--l", "2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stderr(&out).contains("forcing l = 0"));
}

#[test]
fn potential_samples_well_and_asymptote() {
    let out = run(&[
        "potential", "--D", "10", "--b-h", "1", "--r-e", "2", "--c-h", "0.05",
        "--r-start", "2", "--r-stop", "12", "--grid", "101",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let rows = csv_rows(&stdout(&out));
    let v_first: f64 = rows[1][1].parse().unwrap();
    assert!(v_first.abs() < 1e-12, "V(r_e) = {v_first}");
    let v_last: f64 = rows.last().unwrap()[1].parse().unwrap();
    assert!((v_last - 10.0).abs() / 10.0 < 0.01, "V({}) = {v_last}", 12);
}

#[test]
fn potential_refuses_samples_below_the_wall() {
    // r0 = 2 + ln(0.5) = 1.307; r-start below it must be rejected.
    let out = run(&[
        "potential", "--D", "10", "--b-h", "1", "--r-e", "2", "--c-h", "0.5",
        "--r-start", "1.0", "--r-stop", "8",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("singular"));
    // Inverted range.
    let out = run(&[
        "potential", "--D", "10", "--b-h", "1", "--r-e", "2", "--c-h", "0.5",
        "--r-start", "5", "--r-stop", "3",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn wavefunction_emits_normalized_decaying_curve() {
    let out = run(&[
        "wavefunction", "--D", "10", "--b-h", "1", "--r-e", "2", "--c-h", "0.5",
        "--n-r", "0", "--grid", "2001",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let rows = csv_rows(&stdout(&out));
    let chi: Vec<f64> = rows[1..].iter().map(|r| r[1].parse().unwrap()).collect();
    let peak = chi.iter().fold(0.0_f64, |m, &v| m.max(v.abs()));
    assert!(peak > 0.1);
    // Endpoints below 1e-8 of peak, no interior node for the ground state.
    assert!(chi.first().unwrap().abs() <= 1e-8 * peak);
    assert!(chi.last().unwrap().abs() <= 1e-8 * peak);
    let sign_changes = chi
        .windows(2)
        .filter(|w| w[0].abs() > 1e-9 * peak && w[1].abs() > 1e-9 * peak && w[0] * w[1] < 0.0)
        .count();
    assert_eq!(sign_changes, 0);

    // One node for n_r = 1.
    let out = run(&[
        "wavefunction", "--D", "10", "--b-h", "1", "--r-e", "2", "--c-h", "0.5",
        "--n-r", "1", "--grid", "2001",
    ]);
    let rows = csv_rows(&stdout(&out));
    let chi: Vec<f64> = rows[1..].iter().map(|r| r[1].parse().unwrap()).collect();
    let peak = chi.iter().fold(0.0_f64, |m, &v| m.max(v.abs()));
    let sign_changes = chi
        .windows(2)
        .filter(|w| w[0].abs() > 1e-9 * peak && w[1].abs() > 1e-9 * peak && w[0] * w[1] < 0.0)
        .count();
    assert_eq!(sign_changes, 1);
}

#[test]
fn verify_passes_on_defaults_and_flags_coarse_grids() {
    let out = run(&[
        "verify", "--D", "10", "--b-h", "1", "--r-e", "2", "--c-h", "0.5",
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    assert!(stdout(&out).contains("pass"));

    let out = run(&[
        "verify", "--D", "25", "--b-h", "1", "--r-e", "10", "--c-h", "0", "--grid", "201",
    ]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("coarse"));
}

#[test]
fn verify_exact_centrifugal_is_informational() {
    let out = run(&[
        "verify", "--D", "10", "--b-h", "1", "--r-e", "2", "--c-h", "0.5", "--l", "2",
        "--centrifugal", "exact",
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    assert!(stdout(&out).contains("info"));
}

#[test]
fn molecules_lists_builtin_table_and_merges_files() {
    let out = run(&["molecules"]);
    assert_eq!(out.status.code(), Some(0));
    let rows = csv_rows(&stdout(&out));
    assert_eq!(rows.len() - 1, 11);
    let h2 = rows.iter().find(|r| r[0].starts_with("H2")).unwrap();
    let c_h_min: f64 = h2[3].parse().unwrap();
    assert!(((c_h_min - 0.301313237) / 0.301313237).abs() < 1e-6);

    let dir = std::env::temp_dir().join(format!("tietz-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let good: PathBuf = dir.join("good.mol");
    std::fs::write(&good, "name: X2\nb_h: 1.5\nr_e: 2.0\nD: 4.0\nmu: 1.0\n").unwrap();
    let out = run(&["molecules", "--file", good.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(csv_rows(&stdout(&out)).len() - 1, 12);

    let bad: PathBuf = dir.join("bad.mol");
    std::fs::write(&bad, "name: Y2\nr_e: 2.0\n").unwrap();
    let out = run(&["molecules", "--file", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = stderr(&out);
    assert!(err.contains("line 1") && err.contains("b_h"), "stderr: {err}");
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn molecule_lookup_feeds_classification() {
    let out = run(&["classify", "--molecule", "H2(X1Sigma_g+)", "--c-h", "0.5"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("Case1"));
    // Ambiguous prefix is rejected with candidates listed.
    let out = run(&["classify", "--molecule", "N", "--c-h", "0.5"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("ambiguous"));
    // Unknown name.
    let out = run(&["classify", "--molecule", "Xe2", "--c-h", "0.5"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn env_var_supplies_default_molecule_file() {
    let dir = std::env::temp_dir().join(format!("tietz-cli-env-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("env.mol");
    std::fs::write(&file, "name: Q2\nb_h: 1.1\nr_e: 1.9\n").unwrap();
    let out = bin()
        .args(["molecules"])
        .env("TIETZ_SPECTRA_DATA", file.to_str().unwrap())
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("Q2"));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn csv_and_json_carry_identical_values() {
    let args_common = [
        "levels", "--D", "10", "--b-h", "1", "--r-e", "2", "--c-h", "-0.3",
    ];
    let csv_out = run(&args_common);
    let mut json_args = args_common.to_vec();
    json_args.extend(["--format", "json"]);
    let json_out = run(&json_args);
    assert_eq!(csv_out.status.code(), Some(0));
    assert_eq!(json_out.status.code(), Some(0));

    let rows = csv_rows(&stdout(&csv_out));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&json_out)).unwrap();
    assert_eq!(doc["regime"], "Case3");
    let results = doc["results"].as_array().unwrap();
    assert_eq!(results.len(), rows.len() - 1);
    // Both formats print the identical 12-significant-digit decimal;
    // serde_json's reader is allowed a final-ulp wobble when parsing it
    // back, so the comparison tolerates one ulp.
    let ulp_eq = |a: f64, b: f64| (a - b).abs() <= 2.0 * f64::EPSILON * a.abs().max(b.abs());
    for (row, obj) in rows[1..].iter().zip(results) {
        let csv_energy: f64 = row[2].parse().unwrap();
        let json_energy = obj["energy"].as_f64().unwrap();
        assert!(ulp_eq(csv_energy, json_energy), "{csv_energy} vs {json_energy}");
        let csv_res: f64 = row[4].parse().unwrap();
        let json_res = obj["residual"].as_f64().unwrap();
        assert!(ulp_eq(csv_res, json_res), "{csv_res} vs {json_res}");
    }
    // JSON carries the params block.
    assert_eq!(doc["params"]["c_h"].as_f64().unwrap(), -0.3);
}

#[test]
fn output_file_flag_writes_the_report() {
    let dir = std::env::temp_dir().join(format!("tietz-cli-out-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.csv");
    let out = run(&[
        "classify", "--b-h", "1", "--r-e", "2", "--c-h", "0.1", "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.contains("Case2"));
    std::fs::remove_dir_all(&dir).ok();
}
