//! `gyro`: spectra sweeps, figure data, design bounds, operating-point
//! metrics, and the verification suite for the two-mode acoustic-cavity
//! gyroscope model.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or validation error.

use std::path::PathBuf;
use std::process::exit;

use clap::{Parser, Subcommand};

use gyro_cli::{
    cmd_bounds, cmd_figure, cmd_metrics, cmd_spectrum, cmd_verify, BoundsArgs, FigureArgs,
    MetricsArgs, SpectrumArgs,
};

#[derive(Parser)]
#[command(
    name = "gyro",
    version,
    about = "Noise, signal, and sensitivity calculator for a two-mode acoustic-cavity gyroscope"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sweep the noise budget, photocurrent PSD, and signal over frequency; emits CSV.
    Spectrum {
        /// Parameter file (flat JSON); defaults to the normalized parameter set.
        #[arg(long)]
        params: Option<PathBuf>,
        /// Input field: `vacuum` or `squeezed:r=<float>`.
        #[arg(long, default_value = "vacuum")]
        input: String,
        /// Cooperativity override; defaults to the value implied by `g`.
        #[arg(long)]
        co: Option<f64>,
        /// Squared angular velocity of the platform, (rad/s)^2.
        #[arg(long, default_value_t = 0.0)]
        omega_rot_sq: f64,
        /// Sweep spec `omega:<start>:<stop>:<points>[:log]`; defaults to
        /// 1001 points across omega_b +/- 10 gamma.
        #[arg(long)]
        sweep: Option<String>,
        /// Output CSV path.
        #[arg(long)]
        out: PathBuf,
    },
    /// Write the dimensionless curves of one figure (or all) as CSV files.
    Figure {
        /// One of fig2, fig3a, fig3b, fig3c, fig4a, fig4b, fig4c, or all.
        #[arg(long)]
        which: String,
        /// Directory for the CSV files.
        #[arg(long)]
        out_dir: PathBuf,
        /// Comma-separated cooperativity list for the multi-curve figures.
        #[arg(long)]
        co_list: Option<String>,
    },
    /// Report range bounds, cooperativity floors, and sensitivity limits as JSON.
    Bounds {
        /// Cooperativity.
        #[arg(long)]
        co: f64,
        /// Squeeze parameter for the squeezed-input columns.
        #[arg(long, default_value_t = 0.0)]
        r: f64,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Report all performance metrics at one operating point as JSON.
    Metrics {
        /// Parameter file (flat JSON); defaults to the normalized parameter set.
        #[arg(long)]
        params: Option<PathBuf>,
        /// Input field: `vacuum` or `squeezed:r=<float>`.
        #[arg(long, default_value = "vacuum")]
        input: String,
        /// Cooperativity override; defaults to the value implied by `g`.
        #[arg(long)]
        co: Option<f64>,
        /// Squared angular velocity of the platform, (rad/s)^2.
        #[arg(long, default_value_t = 0.0)]
        omega_rot_sq: f64,
        /// Probe frequency; defaults to the mechanical resonance.
        #[arg(long)]
        omega: Option<f64>,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the verification suite; exits 1 if any check fails.
    Verify {
        /// `quick` (fixed seeds, small grids) or `full` (wider sampling, timings).
        #[arg(long, default_value = "quick")]
        level: String,
    },
}

fn main() {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Spectrum {
            params,
            input,
            co,
            omega_rot_sq,
            sweep,
            out,
        } => cmd_spectrum(&SpectrumArgs {
            params,
            input,
            co,
            omega_rot_sq,
            sweep,
            out,
        })
        .map(|()| 0),
        Command::Figure {
            which,
            out_dir,
            co_list,
        } => cmd_figure(&FigureArgs {
            which,
            out_dir,
            co_list,
        })
        .map(|()| 0),
        Command::Bounds { co, r, out } => cmd_bounds(&BoundsArgs { co, r, out }).map(|()| 0),
        Command::Metrics {
            params,
            input,
            co,
            omega_rot_sq,
            omega,
            out,
        } => cmd_metrics(&MetricsArgs {
            params,
            input,
            co,
            omega_rot_sq,
            omega,
            out,
        })
        .map(|()| 0),
        Command::Verify { level } => cmd_verify(&level),
    };
    match outcome {
        Ok(code) => exit(code),
        Err(e) => {
            eprintln!("error: {e}");
            exit(2);
        }
    }
}
