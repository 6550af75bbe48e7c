use std::collections::BTreeMap;

use serde::Serialize;
use statrs::distribution::{ContinuousCDF, Normal};

use super::{HarnessError, Result};

/// Wilson score interval for `successes` out of `n` at confidence `level`.
pub fn wilson_ci(successes: usize, n: usize, level: f64) -> Result<(f64, f64)> {
    if n == 0 || successes > n {
        return Err(HarnessError::Config(format!(
            "wilson_ci needs 0 <= successes <= n and n >= 1, got {successes}/{n}"
        )));
    }
    if !(level > 0.0 && level < 1.0) {
        return Err(HarnessError::Config(format!(
            "confidence level {level} outside (0, 1)"
        )));
    }
    let z = Normal::standard().inverse_cdf(0.5 + 0.5 * level);
    let n_f = n as f64;
    let p = successes as f64 / n_f;
    let z2 = z * z;
    let denom = 1.0 + z2 / n_f;
    let center = (p + z2 / (2.0 * n_f)) / denom;
    let half = z / denom * (p * (1.0 - p) / n_f + z2 / (4.0 * n_f * n_f)).sqrt();
    let lo = if successes == 0 {
        0.0
    } else {
        (center - half).max(0.0)
    };
    let hi = if successes == n {
        1.0
    } else {
        (center + half).min(1.0)
    };
    Ok((lo, hi))
}

/// A binomial Monte Carlo estimate with its 95% Wilson interval.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MCResult {
    pub n_samples: usize,
    pub successes: usize,
    pub estimate: f64,
    pub stderr: f64,
    pub ci_lo: f64,
    pub ci_hi: f64,
    pub seed: u64,
    pub params: BTreeMap<String, f64>,
}

impl MCResult {
    /// # Panics
    /// If `n_samples == 0` or `successes > n_samples`.
    pub fn new(successes: usize, n_samples: usize, seed: u64, params: &[(&str, f64)]) -> Self {
        let (ci_lo, ci_hi) = wilson_ci(successes, n_samples, 0.95).expect("valid binomial counts");
        let estimate = successes as f64 / n_samples as f64;
        MCResult {
            n_samples,
            successes,
            estimate,
            stderr: (estimate * (1.0 - estimate) / n_samples as f64).sqrt(),
            ci_lo: ci_lo.min(estimate),
            ci_hi: ci_hi.max(estimate),
            seed,
            params: params.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
        }
    }
}
