use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cylwave"))
        .args(args)
        .env_remove("CYLWAVE_OUT_DIR")
        .output()
        .unwrap()
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

fn scratch_dir(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("cylwave-cli-{name}-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn shifts_are_exact_fractions() {
    let out = run(&["shifts", "--order", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["schema"], "1");
    assert_eq!(
        v["thetas"],
        serde_json::json!(["1", "0", "3/4", "0", "-3/128", "0"])
    );
}

#[test]
fn free_data_flag() {
    let v = json(&run(&["shifts", "--order", "4", "--free-data", "2=1/2"]));
    assert_eq!(v["thetas"][3], "3/4");
}

#[test]
fn residual_report_passes() {
    let out = run(&["residual", "--order", "10"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["all_pass"], true);
    assert!(v["entries"]
        .as_array()
        .unwrap()
        .iter()
        .all(|e| e["residual"] == "0"));
}

#[test]
fn two_word_subcommands() {
    let a = run(&["ode", "period", "--x0", "0.1"]);
    let b = run(&["ode-period", "--x0", "0.1"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    assert!((v["period"].as_f64().unwrap() - 6.259762302133395).abs() < 1e-12);
}

#[test]
fn ode_verify_reports_triangle() {
    let v = json(&run(&["ode-verify", "--x0", "0.1"]));
    for key in [
        "period_quadrature",
        "period_return",
        "period_series",
        "gap_quadrature_return",
        "gap_quadrature_series",
    ] {
        assert!(v[key].is_number(), "{key}");
    }
    assert!(v["gap_quadrature_return"].as_f64().unwrap() < 1e-8);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["expand", "--order", "0"][..],
        &["bogus"],
        &["shifts"],
        &["ode-period", "--x0", "0"],
        &[
            "pde-verify",
            "--epsilon",
            "0.05",
            "--order",
            "7",
            "--dt",
            "0",
        ],
        &["shifts", "--order", "3", "--free-data", "2:1/2"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn computational_failure_exits_one_with_json_error() {
    let out = run(&[
        "pde-simulate",
        "--epsilon",
        "0.05",
        "--order",
        "3",
        "--dt",
        "0.5",
        "--t-end",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert!(v["error"].as_str().unwrap().contains("dt * N"));
    assert_eq!(v["schema"], "1");
}

#[test]
fn csv_output_has_header_and_full_precision() {
    let out = run(&["ode-orbit", "--x0", "0.2", "--periods", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    let header = lines.next().unwrap();
    assert!(header.starts_with('t'), "{header}");
    let row: Vec<&str> = lines.next().unwrap().split(',').collect();
    let x: f64 = row[1].parse().unwrap();
    assert_eq!(x, 0.2);
    assert!(row[1].contains('e'));
}

#[test]
fn out_flag_writes_file_relative_to_env_dir() {
    let dir = scratch_dir("env");
    let status = Command::new(env!("CARGO_BIN_EXE_cylwave"))
        .args(["shifts", "--order", "4", "--out", "nested/shifts.json"])
        .env("CYLWAVE_OUT_DIR", &dir)
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(0));
    assert!(status.stdout.is_empty());
    let written = std::fs::read(dir.join("nested/shifts.json")).unwrap();
    assert_eq!(written, run(&["shifts", "--order", "4"]).stdout);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn out_flag_absolute_path_ignores_env_dir() {
    let dir = scratch_dir("abs");
    let target = dir.join("coeffs.csv");
    let out = Command::new(env!("CARGO_BIN_EXE_cylwave"))
        .args(["coeffs", "--max-index", "2", "--out"])
        .arg(&target)
        .env("CYLWAVE_OUT_DIR", "/nonexistent-cylwave")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&target).unwrap();
    assert_eq!(text.lines().count(), 1 + 3usize.pow(4));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn byte_identical_reruns() {
    let args = [
        "pde-verify",
        "--epsilon",
        "0.1",
        "--order",
        "3",
        "--modes",
        "8",
        "--dt",
        "0.01",
    ];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.stdout, b.stdout);
}
