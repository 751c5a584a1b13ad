//! Command-line front end. Every subcommand writes JSON or CSV to `--out`
//! (relative paths resolve against `$CYLWAVE_OUT_DIR` when set) or to
//! standard output.
//!
//! Exit codes: 0 success, 1 computational failure, 2 usage error.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::duffing;
use crate::modes;
use crate::pdesim;
use crate::rational::{self, Rational};
use crate::resonant::{ExpansionConfig, ModeCutoff, PerturbativeState};

pub const SCHEMA_VERSION: &str = "1";
pub const OUT_DIR_ENV: &str = "CYLWAVE_OUT_DIR";

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "cylwave",
    version,
    about = "Time-periodic solutions of the cubic wave equation on the Einstein cylinder"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output file; standard output when omitted.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

fn parse_free_datum(text: &str) -> Result<(usize, Rational), String> {
    let (order, value) = text
        .split_once('=')
        .ok_or_else(|| format!("expected ORDER=VALUE, got '{text}'"))?;
    let order: usize = order
        .trim()
        .parse()
        .map_err(|_| format!("invalid order in '{text}'"))?;
    let value =
        rational::parse_rational(value).ok_or_else(|| format!("invalid rational in '{text}'"))?;
    Ok((order, value))
}

#[derive(Subcommand, Clone, Debug, PartialEq)]
pub enum Command {
    /// Table of interaction coefficients C_ijk^(m) as CSV (i, j, k, m, value).
    Coeffs {
        /// Largest index included.
        #[arg(long, default_value_t = 4)]
        max_index: usize,
    },
    /// Perturbative expansion up to an order, as JSON.
    Expand {
        #[arg(long)]
        order: usize,
        /// Free datum f_l^(0)(0), as ORDER=VALUE with VALUE like 1/2; repeatable.
        #[arg(long = "free-data", value_parser = parse_free_datum)]
        free_data: Vec<(usize, Rational)>,
        /// Keep modes 0..=M instead of the automatic cutoff.
        #[arg(long)]
        cutoff: Option<usize>,
    },
    /// Frequency shifts theta_0 .. theta_{L-1} as exact fractions.
    Shifts {
        #[arg(long)]
        order: usize,
        #[arg(long = "free-data", value_parser = parse_free_datum)]
        free_data: Vec<(usize, Rational)>,
    },
    /// Exact residual check of every order and mode.
    Residual {
        #[arg(long)]
        order: usize,
        #[arg(long = "free-data", value_parser = parse_free_datum)]
        free_data: Vec<(usize, Rational)>,
        #[arg(long)]
        cutoff: Option<usize>,
    },
    /// Period of the Duffing orbit through (x0, 0) by quadrature.
    OdePeriod {
        #[arg(long, allow_hyphen_values = true)]
        x0: f64,
        #[arg(long, default_value_t = duffing::DEFAULT_QUAD_POINTS)]
        quad_points: usize,
    },
    /// Sampled Duffing orbit as CSV (t, X, Y, energy).
    OdeOrbit {
        #[arg(long, allow_hyphen_values = true)]
        x0: f64,
        #[arg(long)]
        periods: f64,
        #[arg(long, default_value_t = duffing::DEFAULT_TOLERANCE)]
        tol: f64,
    },
    /// Quadrature period, first-return time and series period compared.
    OdeVerify {
        #[arg(long, allow_hyphen_values = true)]
        x0: f64,
        /// Expansion order behind the series period.
        #[arg(long, default_value_t = 5)]
        order: usize,
        #[arg(long, default_value_t = duffing::DEFAULT_TOLERANCE)]
        tol: f64,
    },
    /// Spectral PDE run from perturbative initial data, as CSV (t, a_0.., energy).
    PdeSimulate {
        #[arg(long)]
        epsilon: f64,
        #[arg(long)]
        order: usize,
        #[arg(long, default_value_t = 32)]
        modes: usize,
        #[arg(long, default_value_t = 1e-3)]
        dt: f64,
        #[arg(long)]
        t_end: f64,
        /// Write every k-th step.
        #[arg(long, default_value_t = 1)]
        stride: usize,
    },
    /// Periodicity, energy drift and convergence slope of the PDE run.
    PdeVerify {
        #[arg(long)]
        epsilon: f64,
        #[arg(long)]
        order: usize,
        #[arg(long, default_value_t = 32)]
        modes: usize,
        #[arg(long, default_value_t = 1e-3)]
        dt: f64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    pub output_path: Option<PathBuf>,
    pub format: Format,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UsageError {
    pub message: String,
    /// 0 for `--help` and `--version`, 2 otherwise.
    pub exit_code: i32,
}

/// Joins two-word forms such as `ode period` into `ode-period`.
fn normalize(argv: &[String]) -> Vec<String> {
    let mut out = Vec::with_capacity(argv.len());
    let mut i = 0;
    while i < argv.len() {
        let word = &argv[i];
        let is_group = matches!(word.as_str(), "ode" | "pde");
        if is_group && out.len() == 1 && i + 1 < argv.len() && !argv[i + 1].starts_with('-') {
            out.push(format!("{word}-{}", argv[i + 1]));
            i += 2;
        } else {
            out.push(word.clone());
            i += 1;
        }
    }
    out
}

fn usage(message: impl Into<String>) -> UsageError {
    UsageError {
        message: message.into(),
        exit_code: EXIT_USAGE,
    }
}

fn validate(command: &Command) -> Result<(), UsageError> {
    let order_ok = |order: usize| {
        if order >= 1 {
            Ok(())
        } else {
            Err(usage("--order must be at least 1"))
        }
    };
    let finite = |name: &str, v: f64| {
        if v.is_finite() {
            Ok(())
        } else {
            Err(usage(format!("--{name} must be finite")))
        }
    };
    let positive = |name: &str, v: f64| {
        if v > 0.0 && v.is_finite() {
            Ok(())
        } else {
            Err(usage(format!("--{name} must be positive")))
        }
    };
    let free_ok = |data: &[(usize, Rational)]| match data.iter().find(|(o, _)| *o < 2) {
        Some((o, _)) => Err(usage(format!(
            "--free-data order {o} invalid: free data start at order 2"
        ))),
        None => Ok(()),
    };
    match command {
        Command::Coeffs { .. } => Ok(()),
        Command::Expand {
            order, free_data, ..
        }
        | Command::Shifts { order, free_data }
        | Command::Residual {
            order, free_data, ..
        } => {
            order_ok(*order)?;
            free_ok(free_data)
        }
        Command::OdePeriod { x0, quad_points } => {
            finite("x0", *x0)?;
            if *x0 == 0.0 {
                return Err(usage("--x0 must be nonzero: the equilibrium has no period"));
            }
            if *quad_points == 0 {
                return Err(usage("--quad-points must be at least 1"));
            }
            Ok(())
        }
        Command::OdeOrbit { x0, periods, tol } => {
            finite("x0", *x0)?;
            positive("periods", *periods)?;
            positive("tol", *tol)
        }
        Command::OdeVerify { x0, order, tol } => {
            finite("x0", *x0)?;
            if *x0 == 0.0 {
                return Err(usage("--x0 must be nonzero"));
            }
            order_ok(*order)?;
            positive("tol", *tol)
        }
        Command::PdeSimulate {
            epsilon,
            order,
            modes,
            dt,
            t_end,
            stride,
        } => {
            pde_common(*epsilon, *order, *modes, *dt)?;
            if !(*t_end >= 0.0 && t_end.is_finite()) {
                return Err(usage("--t-end must be nonnegative"));
            }
            if *stride == 0 {
                return Err(usage("--stride must be at least 1"));
            }
            Ok(())
        }
        Command::PdeVerify {
            epsilon,
            order,
            modes,
            dt,
        } => pde_common(*epsilon, *order, *modes, *dt),
    }
}

fn pde_common(epsilon: f64, order: usize, modes: usize, dt: f64) -> Result<(), UsageError> {
    if !(epsilon >= 0.0 && epsilon.is_finite()) {
        return Err(usage("--epsilon must be nonnegative"));
    }
    if order == 0 {
        return Err(usage("--order must be at least 1"));
    }
    if modes == 0 {
        return Err(usage("--modes must be at least 1"));
    }
    if !(dt > 0.0 && dt.is_finite()) {
        return Err(usage("--dt must be positive"));
    }
    Ok(())
}

/// Parses and validates `argv` (program name first).
pub fn parse_args<I, T>(argv: I) -> Result<RunConfig, UsageError>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString>,
{
    let raw: Vec<String> = argv
        .into_iter()
        .map(|a| a.into().to_string_lossy().into_owned())
        .collect();
    let cli = Cli::try_parse_from(normalize(&raw)).map_err(|e| {
        let exit_code = match e.kind() {
            ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
            _ => EXIT_USAGE,
        };
        UsageError {
            message: e.render().to_string(),
            exit_code,
        }
    })?;
    validate(&cli.command)?;
    let format = match cli.command {
        Command::Coeffs { .. } | Command::OdeOrbit { .. } | Command::PdeSimulate { .. } => {
            Format::Csv
        }
        _ => Format::Json,
    };
    Ok(RunConfig {
        command: cli.command,
        output_path: cli.out,
        format,
    })
}

/// Payload and exit status of a run, before anything is written.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub body: String,
    pub exit_code: i32,
}

fn config_from(free_data: &[(usize, Rational)], cutoff: Option<usize>) -> ExpansionConfig {
    let mut config = ExpansionConfig::default();
    for (order, value) in free_data {
        config = config.with_free_datum(*order, value.clone());
    }
    if let Some(m) = cutoff {
        config = config.with_cutoff(ModeCutoff::Fixed(m));
    }
    config
}

fn json_body(value: Value) -> String {
    let mut text = serde_json::to_string_pretty(&value).expect("JSON values serialize");
    text.push('\n');
    text
}

fn with_schema(mut value: Value) -> Value {
    if let Value::Object(map) = &mut value {
        map.insert("schema".into(), json!(SCHEMA_VERSION));
    }
    value
}

fn csv_float(x: f64) -> String {
    format!("{x:.16e}")
}

fn thetas_json(state: &PerturbativeState) -> Value {
    json!(state
        .thetas()
        .iter()
        .map(|t| t.to_string())
        .collect::<Vec<_>>())
}

fn expand_json(state: &PerturbativeState) -> Value {
    let mut modes_map = BTreeMap::new();
    for order in 1..=state.max_order() {
        let entry: BTreeMap<String, Value> = state
            .order_polys(order)
            .map(|(m, p)| (m.to_string(), json!(p.to_records())))
            .collect();
        if !entry.is_empty() {
            modes_map.insert(order.to_string(), entry);
        }
    }
    let log: Vec<Value> = state
        .forced_data_log()
        .iter()
        .map(|fd| {
            json!({
                "order": fd.order,
                "mode": fd.mode,
                "value": fd.value.to_string(),
                "obstruction": fd.obstruction.to_string(),
            })
        })
        .collect();
    let free: BTreeMap<String, String> = state
        .config()
        .free_data
        .iter()
        .map(|(o, v)| (o.to_string(), v.to_string()))
        .collect();
    json!({
        "order": state.max_order(),
        "thetas": thetas_json(state),
        "free_data": free,
        "modes": modes_map,
        "forced_data_log": log,
    })
}

fn run_expand(order: usize, config: ExpansionConfig) -> Result<PerturbativeState, String> {
    PerturbativeState::expand(order, config).map_err(|e| e.to_string())
}

fn coeffs_csv(max_index: usize) -> String {
    let mut out = String::from("i,j,k,m,value\n");
    let table = modes::shared_table();
    for i in 0..=max_index {
        for j in 0..=max_index {
            for k in 0..=max_index {
                for m in 0..=max_index {
                    let _ = writeln!(out, "{i},{j},{k},{m},{}", table.get(i, j, k, m));
                }
            }
        }
    }
    out
}

fn residual_json(state: &PerturbativeState) -> Result<(Value, bool), String> {
    let mut entries = Vec::new();
    let mut all_pass = true;
    for order in 1..=state.max_order() {
        for mode in state.modes_at(order) {
            let r = state.residual(order, mode).map_err(|e| e.to_string())?;
            let pass = r.is_zero();
            all_pass &= pass;
            entries.push(json!({
                "order": order,
                "mode": mode,
                "pass": pass,
                "residual": r.to_string(),
            }));
        }
    }
    Ok((
        json!({ "order": state.max_order(), "all_pass": all_pass, "entries": entries }),
        all_pass,
    ))
}

fn orbit_csv(x0: f64, periods: f64, tol: f64) -> Result<String, String> {
    let t_end =
        periods * duffing::period(x0, duffing::DEFAULT_QUAD_POINTS).map_err(|e| e.to_string())?;
    let orbit = duffing::integrate(x0, t_end, tol).map_err(|e| e.to_string())?;
    let mut out = String::from("t,X,Y,energy\n");
    for (t, p) in &orbit.samples {
        let _ = writeln!(
            out,
            "{},{},{},{}",
            csv_float(*t),
            csv_float(p.x),
            csv_float(p.y),
            csv_float(duffing::energy(*p))
        );
    }
    Ok(out)
}

fn ode_verify(x0: f64, order: usize, tol: f64) -> Result<Value, String> {
    let state = run_expand(order, ExpansionConfig::default())?;
    let omega = state.frequency(x0).map_err(|e| e.to_string())?;
    let report =
        duffing::verify(x0, 2.0 * std::f64::consts::PI / omega, tol).map_err(|e| e.to_string())?;
    let mut value = serde_json::to_value(report).expect("report serializes");
    value["series_order"] = json!(order);
    Ok(value)
}

fn pde_simulate_csv(
    epsilon: f64,
    order: usize,
    modes: usize,
    dt: f64,
    t_end: f64,
    stride: usize,
) -> Result<String, String> {
    let state = run_expand(order, ExpansionConfig::default())?;
    let initial = pdesim::project_initial(&state, epsilon, modes).map_err(|e| e.to_string())?;
    let mut out = String::from("t");
    for m in 0..modes {
        let _ = write!(out, ",a_{m}");
    }
    out.push_str(",energy\n");
    let mut step = 0usize;
    let mut last_written = None;
    let row = |s: &pdesim::SpectralState, e: &pdesim::EnergyReport, out: &mut String| {
        out.push_str(&csv_float(s.t));
        for a in &s.a {
            out.push(',');
            out.push_str(&csv_float(*a));
        }
        out.push(',');
        out.push_str(&csv_float(e.total));
        out.push('\n');
    };
    let mut body = String::new();
    let end = pdesim::simulate_observed(&initial, t_end, dt, |s, e| {
        if step.is_multiple_of(stride) {
            row(s, e, &mut body);
            last_written = Some(step);
        }
        step += 1;
    })
    .map_err(|e| e.to_string())?;
    if last_written != Some(step - 1) {
        let report = pdesim::energy_report(&end, 2 * modes);
        row(&end, &report, &mut body);
    }
    out.push_str(&body);
    Ok(out)
}

fn pde_verify(epsilon: f64, order: usize, modes: usize, dt: f64) -> Result<Value, String> {
    let state = run_expand(order, ExpansionConfig::default())?;
    let run = |eps: f64| {
        pdesim::periodicity_run(&state, eps, order, modes, dt).map_err(|e| e.to_string())
    };
    let main = run(epsilon)?;
    let slope_test = if epsilon > 0.0 {
        let epsilons = [2.0 * epsilon, epsilon, epsilon / 2.0];
        let mut points = Vec::new();
        for &e in &epsilons {
            let err = if e == epsilon {
                main.periodicity_error
            } else {
                run(e)?.periodicity_error
            };
            points.push((e, err));
        }
        let expected = (order + 1) as f64;
        let slope = pdesim::log_log_slope(&points);
        json!({
            "epsilons": epsilons,
            "errors": points.iter().map(|p| p.1).collect::<Vec<_>>(),
            "slope": slope,
            "expected": expected,
            "pass": (slope - expected).abs() <= 0.5,
        })
    } else {
        Value::Null
    };
    Ok(json!({
        "epsilon": epsilon,
        "order": order,
        "modes": modes,
        "dt": dt,
        "period": main.period,
        "periodicity_error": main.periodicity_error,
        "energy_drift": main.energy_drift,
        "slope_test": slope_test,
    }))
}

fn failure(message: String) -> Outcome {
    Outcome {
        body: json_body(with_schema(json!({ "error": message }))),
        exit_code: EXIT_FAILURE,
    }
}

fn success_json(value: Value) -> Outcome {
    Outcome {
        body: json_body(with_schema(value)),
        exit_code: EXIT_OK,
    }
}

/// Runs the pipeline and returns the payload without writing it.
pub fn render(config: &RunConfig) -> Outcome {
    let result: Result<Outcome, String> = (|| match &config.command {
        Command::Coeffs { max_index } => Ok(Outcome {
            body: coeffs_csv(*max_index),
            exit_code: EXIT_OK,
        }),
        Command::Expand {
            order,
            free_data,
            cutoff,
        } => {
            let state = run_expand(*order, config_from(free_data, *cutoff))?;
            Ok(success_json(expand_json(&state)))
        }
        Command::Shifts { order, free_data } => {
            let state = run_expand(*order, config_from(free_data, None))?;
            Ok(success_json(
                json!({ "order": order, "thetas": thetas_json(&state) }),
            ))
        }
        Command::Residual {
            order,
            free_data,
            cutoff,
        } => {
            let state = run_expand(*order, config_from(free_data, *cutoff))?;
            let (value, pass) = residual_json(&state)?;
            let mut out = success_json(value);
            if !pass {
                out.exit_code = EXIT_FAILURE;
            }
            Ok(out)
        }
        Command::OdePeriod { x0, quad_points } => {
            let period = duffing::period(*x0, *quad_points).map_err(|e| e.to_string())?;
            Ok(success_json(
                json!({ "x0": x0, "quad_points": quad_points, "period": period }),
            ))
        }
        Command::OdeOrbit { x0, periods, tol } => Ok(Outcome {
            body: orbit_csv(*x0, *periods, *tol)?,
            exit_code: EXIT_OK,
        }),
        Command::OdeVerify { x0, order, tol } => Ok(success_json(ode_verify(*x0, *order, *tol)?)),
        Command::PdeSimulate {
            epsilon,
            order,
            modes,
            dt,
            t_end,
            stride,
        } => Ok(Outcome {
            body: pde_simulate_csv(*epsilon, *order, *modes, *dt, *t_end, *stride)?,
            exit_code: EXIT_OK,
        }),
        Command::PdeVerify {
            epsilon,
            order,
            modes,
            dt,
        } => Ok(success_json(pde_verify(*epsilon, *order, *modes, *dt)?)),
    })();
    result.unwrap_or_else(failure)
}

/// Resolves `--out` against `$CYLWAVE_OUT_DIR` for relative paths.
pub fn resolve_output(path: &std::path::Path) -> PathBuf {
    match std::env::var_os(OUT_DIR_ENV) {
        Some(dir) if path.is_relative() => PathBuf::from(dir).join(path),
        _ => path.to_path_buf(),
    }
}

/// Runs the pipeline, writes the payload and returns the exit status.
pub fn execute(config: &RunConfig) -> i32 {
    let outcome = render(config);
    match &config.output_path {
        None => {
            let mut stdout = std::io::stdout().lock();
            match stdout
                .write_all(outcome.body.as_bytes())
                .and_then(|()| stdout.flush())
            {
                Ok(()) => outcome.exit_code,
                // a closed reader downstream is not our failure
                Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => outcome.exit_code,
                Err(e) => {
                    eprintln!("cannot write to standard output: {e}");
                    EXIT_FAILURE
                }
            }
        }
        Some(path) => {
            let path = resolve_output(path);
            if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
                if let Err(e) = std::fs::create_dir_all(parent) {
                    eprintln!("cannot create {}: {e}", parent.display());
                    return EXIT_FAILURE;
                }
            }
            match std::fs::write(&path, &outcome.body) {
                Ok(()) => outcome.exit_code,
                Err(e) => {
                    eprintln!("cannot write {}: {e}", path.display());
                    EXIT_FAILURE
                }
            }
        }
    }
}

/// Entry point shared by the binary: parse, run, report.
pub fn main_with_args<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString>,
{
    match parse_args(argv) {
        Ok(config) => execute(&config),
        Err(e) => {
            if e.exit_code == EXIT_OK {
                print!("{}", e.message);
            } else {
                eprint!("{}", e.message);
                if !e.message.ends_with('\n') {
                    eprintln!();
                }
            }
            e.exit_code
        }
    }
}
