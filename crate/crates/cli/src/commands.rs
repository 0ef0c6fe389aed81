//! Implementations of the CLI subcommands.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use gyro_core::*;
use serde_json::json;

// the glob import brings in the crate's one-parameter `Result` alias
use std::result::Result;

use crate::csvout::Table;
use crate::figures::{figure_curves, FigureId, FigureOptions};
use crate::sweep::{Scale, SweepSpec, SweepVar};
use crate::verify::{run_verify, Hooks, Level};

/// Command-level failure; every variant maps to the usage/validation exit code.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Io(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "{msg}"),
            CliError::Io(msg) => write!(f, "{msg}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<GyroError> for CliError {
    fn from(e: GyroError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

/// Load a parameter file, or fall back to the documented normalized defaults.
pub fn load_params(path: Option<&Path>) -> Result<GyroParams<f64>, CliError> {
    match path {
        None => Ok(GyroParams::default_normalized()),
        Some(p) => {
            let text = fs::read_to_string(p)
                .map_err(|e| CliError::Io(format!("cannot read {}: {e}", p.display())))?;
            serde_json::from_str(&text).map_err(|e| {
                // serde_json reports the line and column of the offending token
                CliError::Usage(format!("cannot parse {}: {e}", p.display()))
            })
        }
    }
}

/// Parse `vacuum` or `squeezed:r=<float>`.
pub fn parse_input(spec: &str) -> Result<InputField<f64>, CliError> {
    if spec == "vacuum" {
        return Ok(InputField::Vacuum);
    }
    if let Some(rest) = spec.strip_prefix("squeezed:r=") {
        let r: f64 = rest
            .parse()
            .map_err(|_| CliError::Usage(format!("cannot parse squeeze parameter `{rest}`")))?;
        return Ok(InputField::SqueezedVacuum { r });
    }
    Err(CliError::Usage(format!(
        "unknown input `{spec}` (expected `vacuum` or `squeezed:r=<float>`)"
    )))
}

fn input_label(input: &InputField<f64>) -> String {
    match input {
        InputField::Vacuum => "vacuum".into(),
        InputField::SqueezedVacuum { r } => format!("squeezed:r={r}"),
    }
}

fn warn_regimes(cfg: &ValidatedConfig<f64>) {
    if !cfg.adiabatic_ok() {
        eprintln!(
            "warning: omega_b/kappa = {:.3e} exceeds the adiabatic threshold; \
             closed-form spectra are untrusted",
            cfg.params().omega_b / cfg.params().kappa
        );
    }
    if !cfg.resonance_regime_ok() {
        eprintln!(
            "warning: gamma/omega_b above 1e-2; resonance approximations are untrusted"
        );
    }
}

pub struct SpectrumArgs {
    pub params: Option<PathBuf>,
    pub input: String,
    pub co: Option<f64>,
    pub omega_rot_sq: f64,
    pub sweep: Option<String>,
    pub out: PathBuf,
}

pub fn cmd_spectrum(args: &SpectrumArgs) -> Result<(), CliError> {
    let params = load_params(args.params.as_deref())?;
    let input = parse_input(&args.input)?;
    let cfg = validate(params, input)?;
    warn_regimes(&cfg);
    let co = match args.co {
        Some(c) if c > 0.0 => c,
        Some(c) => return Err(CliError::Usage(format!("co must be positive, got {c}"))),
        None => cfg.cooperativity(),
    };
    let osq = AngularVelocity::from_squared(args.omega_rot_sq)?;

    let sweep = match &args.sweep {
        Some(text) => {
            let spec: SweepSpec = text
                .parse()
                .map_err(|e: crate::sweep::SweepParseError| CliError::Usage(e.to_string()))?;
            if spec.variable != SweepVar::Omega {
                return Err(CliError::Usage(format!(
                    "spectrum sweeps run over omega, got `{}`",
                    spec.variable.name()
                )));
            }
            spec
        }
        None => {
            let width = 10.0 * params.gamma_x.max(params.gamma_y);
            SweepSpec::new(
                SweepVar::Omega,
                params.omega_b - width,
                params.omega_b + width,
                1001,
                Scale::Linear,
            )
            .map_err(|e| CliError::Usage(e.to_string()))?
        }
    };

    let mut table = Table::new(&[
        "omega",
        "n_zpf",
        "n_ba",
        "n_ang",
        "n_im",
        "n_add",
        "n_x_total",
        "n_i_raw",
        "n_i_sym",
        "signal",
    ]);
    table.meta("generator", format!("gyro {}", env!("CARGO_PKG_VERSION")));
    table.meta("omega_b", params.omega_b);
    table.meta("kappa", params.kappa);
    table.meta("gamma_x", params.gamma_x);
    table.meta("gamma_y", params.gamma_y);
    table.meta("g", params.g);
    table.meta("n_in", params.n_in);
    table.meta("n_th", params.n_th);
    table.meta("co", co);
    table.meta("omega_rot_sq", args.omega_rot_sq);
    table.meta("input", input_label(&input));
    table.meta("adiabatic_ok", cfg.adiabatic_ok());
    table.meta("budget", "symmetrized");

    for w in sweep.values() {
        let budget = noise_budget_symmetrized(w, &cfg, co, osq, &input)?;
        let psd = photocurrent_psd(w, &cfg, co, osq, &input)?;
        let signal = signal_psd(w, &cfg, co, osq);
        table.push_row(vec![
            w,
            budget.n_zpf,
            budget.n_ba,
            budget.n_ang,
            budget.n_im,
            budget.n_add,
            budget.n_x_total,
            psd.raw,
            psd.symmetric,
            signal,
        ]);
    }
    table.write_to(&args.out)?;
    Ok(())
}

pub struct FigureArgs {
    pub which: String,
    pub out_dir: PathBuf,
    pub co_list: Option<String>,
}

fn parse_co_list(text: &str) -> Result<Vec<f64>, CliError> {
    text.split(',')
        .map(|part| {
            part.trim()
                .parse::<f64>()
                .map_err(|_| CliError::Usage(format!("cannot parse cooperativity `{part}`")))
        })
        .collect()
}

pub fn cmd_figure(args: &FigureArgs) -> Result<(), CliError> {
    let mut options = FigureOptions::default();
    if let Some(list) = &args.co_list {
        options.co_list = parse_co_list(list)?;
    }
    let figures: Vec<FigureId> = if args.which == "all" {
        FigureId::ALL.to_vec()
    } else {
        vec![FigureId::parse(&args.which).ok_or_else(|| {
            CliError::Usage(format!(
                "unknown figure `{}` (expected fig2, fig3a, fig3b, fig3c, fig4a, fig4b, fig4c, or all)",
                args.which
            ))
        })?]
    };
    for figure in figures {
        for curve in figure_curves(figure, &options) {
            let path = args.out_dir.join(&curve.file_name);
            curve.table.write_to(&path)?;
            println!("{}", path.display());
        }
    }
    Ok(())
}

pub struct BoundsArgs {
    pub co: f64,
    pub r: f64,
    pub out: Option<PathBuf>,
}

pub fn cmd_bounds(args: &BoundsArgs) -> Result<(), CliError> {
    if args.co.is_nan() || args.co <= 0.0 {
        return Err(CliError::Usage(format!(
            "co must be positive, got {}",
            args.co
        )));
    }
    if args.r < 0.0 {
        return Err(CliError::Usage(format!(
            "r must be nonnegative, got {}",
            args.r
        )));
    }
    let cfg = validate(GyroParams::default_normalized(), InputField::Vacuum)?;
    let vacuum = InputField::Vacuum;
    let squeezed = InputField::SqueezedVacuum { r: args.r };
    let at_rest = AngularVelocity::zero();

    let range_or_null = |input: &InputField<f64>| match omega_range(args.co, input) {
        Ok(v) => json!(v),
        Err(_) => serde_json::Value::Null,
    };

    let report = json!({
        "co": args.co,
        "r": args.r,
        "co_min_vacuum": co_min(&vacuum),
        "co_min_squeezed": co_min(&squeezed),
        "omega_sq_ub_vacuum": range_or_null(&vacuum),
        "omega_sq_ub_squeezed": range_or_null(&squeezed),
        "co_star_vacuum": sql_report(&cfg, at_rest, &vacuum).co_star,
        "co_star_squeezed": sql_report(&cfg, at_rest, &squeezed).co_star,
        "sensitivity_limit_vacuum": sensitivity_limit(&cfg, at_rest, &vacuum).limit,
        "sensitivity_limit_squeezed": sensitivity_limit(&cfg, at_rest, &squeezed).limit,
        "units": "omega_sq_ub in gamma_x*gamma_y; limits as sqrt(N_in)*delta_omega_sq at zero rotation; null means the range is empty",
    });
    emit_json(&report, args.out.as_deref())
}

pub struct MetricsArgs {
    pub params: Option<PathBuf>,
    pub input: String,
    pub co: Option<f64>,
    pub omega_rot_sq: f64,
    pub omega: Option<f64>,
    pub out: Option<PathBuf>,
}

pub fn cmd_metrics(args: &MetricsArgs) -> Result<(), CliError> {
    let params = load_params(args.params.as_deref())?;
    let input = parse_input(&args.input)?;
    let cfg = validate(params, input)?;
    warn_regimes(&cfg);
    let co = match args.co {
        Some(c) if c > 0.0 => c,
        Some(c) => return Err(CliError::Usage(format!("co must be positive, got {c}"))),
        None => cfg.cooperativity(),
    };
    let osq = AngularVelocity::from_squared(args.omega_rot_sq)?;
    let omega = args.omega.unwrap_or(params.omega_b);
    let report = metrics_report(omega, &cfg, co, osq, &input)?;
    let payload = json!({
        "omega": omega,
        "co": co,
        "omega_rot_sq": args.omega_rot_sq,
        "input": input_label(&input),
        "signal": report.signal,
        "psd": report.psd,
        "snr_per_photon": report.snr_per_photon,
        "sensitivity": report.sensitivity,
        "limit": report.limit,
        "ratio_to_vacuum": report.ratio_to_vacuum,
        "signal_resonance": report.signal_resonance,
        "snr_per_photon_resonance": report.snr_per_photon_resonance,
        "sensitivity_resonance": report.sensitivity_resonance,
        "co_at_equality": report.co_at_equality,
    });
    emit_json(&payload, args.out.as_deref())
}

fn emit_json(value: &serde_json::Value, out: Option<&Path>) -> Result<(), CliError> {
    let text = format!("{}\n", serde_json::to_string_pretty(value).expect("serializable"));
    match out {
        Some(path) => {
            if let Some(parent) = path.parent() {
                if !parent.as_os_str().is_empty() {
                    fs::create_dir_all(parent)?;
                }
            }
            fs::write(path, text)?;
        }
        None => print!("{text}"),
    }
    Ok(())
}

/// Run the verification suite; returns the process exit code.
pub fn cmd_verify(level_name: &str) -> Result<i32, CliError> {
    let level = match level_name {
        "quick" => Level::Quick,
        "full" => Level::Full,
        other => {
            return Err(CliError::Usage(format!(
                "unknown level `{other}` (expected quick or full)"
            )))
        }
    };
    let report = run_verify(level, Hooks::default());
    for outcome in &report.outcomes {
        let verdict = if outcome.passed { "ok  " } else { "FAIL" };
        match level {
            Level::Quick => println!("{verdict} {} - {}", outcome.name, outcome.detail),
            Level::Full => println!(
                "{verdict} {} - {} ({} ms)",
                outcome.name, outcome.detail, outcome.millis
            ),
        }
    }
    let failed = report.outcomes.iter().filter(|o| !o.passed).count();
    if failed == 0 {
        println!("all {} checks passed", report.outcomes.len());
        Ok(0)
    } else {
        println!("{failed} of {} checks failed", report.outcomes.len());
        Ok(1)
    }
}
