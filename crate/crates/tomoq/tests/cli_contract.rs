//! End-to-end checks of the binary interface: exit codes, report
//! schemas, file input/output, and the CSV layout.

use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;
use tomoq::linalg::DensityMatrix;

struct CliRun {
    stdout: String,
    stderr: String,
    code: i32,
}

fn run(args: &[&str]) -> CliRun {
    let output = Command::new(env!("CARGO_BIN_EXE_tomoq"))
        .args(args)
        .output()
        .expect("binary should run");
    CliRun {
        stdout: String::from_utf8(output.stdout).expect("stdout should be UTF-8"),
        stderr: String::from_utf8(output.stderr).expect("stderr should be UTF-8"),
        code: output.status.code().unwrap_or(-1),
    }
}

fn temp_path(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("tomoq_cli_{}_{name}", std::process::id()))
}

#[test]
fn verify_emits_schema_complete_reports() {
    let run = run(&[
        "verify", "--ineq", "sub-tomo", "--N", "6", "--shape", "2,3", "--q", "1,2", "--trials",
        "3", "--seed", "7",
    ]);
    assert_eq!(run.code, 0, "stderr: {}", run.stderr);
    let reports: Vec<Value> = serde_json::from_str(&run.stdout).expect("stdout should be JSON");
    assert_eq!(reports.len(), 6);
    for report in &reports {
        for key in [
            "inequality",
            "q",
            "N",
            "shape",
            "lhs",
            "rhs",
            "slack",
            "holds",
            "tolerance",
            "seed",
            "extra",
        ] {
            assert!(report.get(key).is_some(), "missing key {key}: {report}");
        }
        assert_eq!(report["inequality"], "sub-tomo");
        assert_eq!(report["N"], 6);
        assert_eq!(report["shape"], serde_json::json!([2, 3]));
        assert_eq!(report["seed"], 7);
        assert_eq!(report["holds"], true);
        assert!(report["extra"]["trial"].is_u64());
    }
    assert!(run.stderr.contains("violations"), "summary goes to stderr");
}

#[test]
fn usage_and_validation_errors_exit_one() {
    assert_eq!(run(&["verify", "--bogus-flag"]).code, 1);
    assert_eq!(run(&[]).code, 1);

    let bad_id = run(&["verify", "--ineq", "nonsense", "--shape", "2,3"]);
    assert_eq!(bad_id.code, 1);
    assert!(bad_id.stderr.contains("unknown inequality id"));

    let mismatch = run(&[
        "verify", "--ineq", "sub-tomo", "--N", "7", "--shape", "2,3", "--trials", "1",
    ]);
    assert_eq!(mismatch.code, 1);

    let bad_q = run(&[
        "verify", "--ineq", "sub-tomo", "--shape", "2,3", "--q", "0.5", "--trials", "1",
    ]);
    assert_eq!(bad_q.code, 1);

    let missing_shape = run(&["verify", "--ineq", "sub-tomo", "--N", "6", "--trials", "1"]);
    assert_eq!(missing_shape.code, 1);

    let missing_file = run(&[
        "verify", "--ineq", "sub-tomo", "--shape", "2,3", "--input", "/nonexistent/state.json",
    ]);
    assert_eq!(missing_file.code, 1);
    assert!(missing_file.stderr.contains("io error"));

    assert_eq!(run(&["demo", "j99"]).code, 1);
}

#[test]
fn violations_exit_two_with_counterexample() {
    // A negative slack tolerance rejects every report, so the honest
    // violation path (exit 2 plus an embedded counterexample) fires.
    let run = run(&[
        "verify", "--ineq", "ssa-tomo", "--N", "8", "--shape", "2,2,2", "--q", "2", "--trials",
        "2", "--seed", "0", "--tol", "-1",
    ]);
    assert_eq!(run.code, 2);
    let reports: Vec<Value> = serde_json::from_str(&run.stdout).unwrap();
    assert!(reports.iter().all(|r| r["holds"] == false));
    let counterexample = &reports[0]["extra"]["counterexample"];
    assert!(counterexample["rho"]["re"].is_array());
    assert!(counterexample["u"]["re"].is_array());
}

#[test]
fn help_and_version_exit_zero() {
    let help = run(&["--help"]);
    assert_eq!(help.code, 0);
    assert!(help.stdout.contains("verify"));
    assert!(help.stdout.contains("nosignal"));
    assert!(help.stdout.contains("demo"));
    assert!(help.stdout.contains("sweep"));
    assert_eq!(run(&["--version"]).code, 0);
}

#[test]
fn input_matrix_fixes_the_state() {
    let path = temp_path("uniform6.json");
    let text = DensityMatrix::maximally_mixed(6)
        .matrix()
        .to_json_string()
        .unwrap();
    std::fs::write(&path, text).unwrap();

    let run_ok = run(&[
        "verify",
        "--ineq",
        "sumform-a1",
        "--shape",
        "2,3",
        "--q",
        "2",
        "--input",
        path.to_str().unwrap(),
    ]);
    assert_eq!(run_ok.code, 0, "stderr: {}", run_ok.stderr);
    let reports: Vec<Value> = serde_json::from_str(&run_ok.stdout).unwrap();
    // A fixed input state defaults to a single trial.
    assert_eq!(reports.len(), 1);
    let report = &reports[0];
    assert_eq!(report["N"], 6);
    assert_eq!(report["holds"], true);
    assert_eq!(report["extra"]["printed_direction_holds"], false);
    assert!((report["lhs"].as_f64().unwrap() - 5.0 / 6.0).abs() < 1e-12);
    assert!((report["rhs"].as_f64().unwrap() - 7.0 / 6.0).abs() < 1e-12);

    // A dimension clash between the file and --N is a usage error.
    let clash = run(&[
        "verify",
        "--ineq",
        "sumform-a1",
        "--N",
        "8",
        "--shape",
        "2,4",
        "--input",
        path.to_str().unwrap(),
    ]);
    assert_eq!(clash.code, 1);

    let _ = std::fs::remove_file(&path);
}

#[test]
fn sweep_csv_layout() {
    let run = run(&[
        "sweep", "--ineq", "sub-tomo", "--N", "6", "--shape", "2,3", "--q", "1.5,2", "--trials",
        "3", "--seed", "2",
    ]);
    assert_eq!(run.code, 0);
    let lines: Vec<&str> = run.stdout.lines().collect();
    assert_eq!(lines[0], "inequality,q,N,shape,trial,lhs,rhs,slack,holds");
    assert_eq!(lines.len(), 7, "header plus 2 q values times 3 trials");
    for line in &lines[1..] {
        let fields: Vec<&str> = line.split(',').collect();
        assert_eq!(fields.len(), 9);
        assert_eq!(fields[0], "sub-tomo");
        assert!(fields[1] == "1.5" || fields[1] == "2.0");
        assert_eq!(fields[2], "6");
        assert_eq!(fields[3], "2x3");
        assert!(fields[4].parse::<usize>().unwrap() < 3);
        assert_eq!(fields[8], "true");
    }
}

#[test]
fn nosignal_reports_deviation_fields() {
    let run = run(&["nosignal", "--N", "6", "--shape", "2,3", "--trials", "2", "--seed", "0"]);
    assert_eq!(run.code, 0, "stderr: {}", run.stderr);
    let reports: Vec<Value> = serde_json::from_str(&run.stdout).unwrap();
    assert_eq!(reports.len(), 2, "one report per trial");
    for report in &reports {
        assert_eq!(report["inequality"], "nosig");
        assert_eq!(report["rhs"], 0.0);
        assert_eq!(report["holds"], true);
        assert_eq!(report["extra"]["partners"], 20);
        let deviation = report["extra"]["max_deviation"].as_f64().unwrap();
        assert!(deviation.abs() <= 1e-10);
    }
}

#[test]
fn pad_flag_embeds_smaller_states() {
    let padded = run(&[
        "verify", "--ineq", "ssa-tomo", "--N", "6", "--shape", "2,2,2", "--trials", "2",
        "--q", "2", "--pad",
    ]);
    assert_eq!(padded.code, 0, "stderr: {}", padded.stderr);
    let reports: Vec<Value> = serde_json::from_str(&padded.stdout).unwrap();
    for report in &reports {
        assert_eq!(report["N"], 8);
        assert_eq!(report["extra"]["padded_from"], 6);
    }

    let unpadded = run(&[
        "verify", "--ineq", "ssa-tomo", "--N", "6", "--shape", "2,2,2", "--trials", "2",
        "--q", "2",
    ]);
    assert_eq!(unpadded.code, 1);
}

#[test]
fn output_file_redirects_stdout() {
    let path = temp_path("reports.json");
    let run = run(&[
        "verify",
        "--ineq",
        "sub-tomo",
        "--N",
        "6",
        "--shape",
        "2,3",
        "--q",
        "2",
        "--trials",
        "2",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(run.code, 0);
    assert!(run.stdout.is_empty(), "reports go to the file, not stdout");
    let text = std::fs::read_to_string(&path).unwrap();
    let reports: Vec<Value> = serde_json::from_str(&text).unwrap();
    assert_eq!(reports.len(), 2);
    let _ = std::fs::remove_file(&path);
}
