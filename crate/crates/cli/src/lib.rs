//! Library surface of the `gyro` command-line tool, split out so the sweep,
//! CSV, figure, and verification logic can be tested directly.

pub mod commands;
pub mod csvout;
pub mod figures;
pub mod sweep;
pub mod verify;

pub use commands::{
    cmd_bounds, cmd_figure, cmd_metrics, cmd_spectrum, cmd_verify, BoundsArgs, CliError,
    FigureArgs, MetricsArgs, SpectrumArgs,
};
