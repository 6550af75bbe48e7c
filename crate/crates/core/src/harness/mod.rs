//! Experiment plumbing: seeds, binomial statistics, number formatting,
//! configuration and the commands behind the `slelab` binary.

mod commands;
mod config;
mod stats;

pub use commands::{
    avoidance_summary, random_covariance_case, residual_suite, run, within_mc_tolerance, Command,
    Outcome, ResidualRow, COVARIANCE_TOL, DEFAULT_SEED, EQUIVALENCE_TOL, MC_ABS_TOL, ODE_TOL,
    PDE_TOL,
};
pub use config::Config;
pub use stats::{wilson_ci, MCResult};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("invalid config: {0}")]
    Config(String),
    #[error("{context}: {message}")]
    Numeric { context: String, message: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl HarnessError {
    pub(crate) fn numeric(context: impl Into<String>, err: impl std::fmt::Display) -> Self {
        HarnessError::Numeric {
            context: context.into(),
            message: err.to_string(),
        }
    }

    /// Process exit code: 3 for configuration problems, 4 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            HarnessError::Config(_) => 3,
            HarnessError::Numeric { .. } | HarnessError::Io(_) => 4,
        }
    }
}

pub type Result<T> = std::result::Result<T, HarnessError>;

/// Seed of task `index` under the top-level `seed`: the splitmix64 output
/// function applied to `seed + (index + 1) · 0x9E3779B97F4A7C15`.
pub fn derive_seed(seed: u64, index: u64) -> u64 {
    let mut z = seed.wrapping_add(index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Shortest decimal form of `v` rounded to 12 significant digits;
/// scientific notation outside `[1e-5, 1e15)`.
pub fn format_number(v: f64) -> String {
    if !v.is_finite() {
        return v.to_string();
    }
    let rounded: f64 = format!("{v:.11e}").parse().expect("formatted float parses");
    let mag = rounded.abs();
    if rounded == 0.0 || (1e-5..1e15).contains(&mag) {
        format!("{rounded}")
    } else {
        format!("{rounded:e}")
    }
}
