//! Cross-ratio of the corners of a rectangle.

use super::{CrossRatioPoint, ObservableError, Result};
use crate::specfun::elliptic_k_from_complement;

const RHO_MIN: f64 = 0.05;
const RHO_MAX: f64 = 20.0;
const MAX_BISECTIONS: usize = 200;
const LOG_MODULUS_FLOOR: f64 = -700.0;
const LARGEST_BELOW_ONE: f64 = 1.0 - f64::EPSILON / 2.0;

/// `K(k') / K(k)` given the modulus and its complement.
fn period_ratio(k: f64, k_comp: f64) -> f64 {
    elliptic_k_from_complement(k) / elliptic_k_from_complement(k_comp)
}

fn complement(k: f64) -> f64 {
    ((1.0 - k) * (1.0 + k)).sqrt()
}

/// Bisects on `ln m` in `[LOG_MODULUS_FLOOR, ln(1/√2)]` for the root of the
/// decreasing function `g`.
fn bisect_log(g: impl Fn(f64) -> f64) -> Result<f64> {
    let mut lo = LOG_MODULUS_FLOOR;
    let mut hi = -0.5 * std::f64::consts::LN_2;
    for _ in 0..MAX_BISECTIONS {
        let mid = 0.5 * (lo + hi);
        if g(mid.exp()) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo <= 4.0 * f64::EPSILON * lo.abs().max(1.0) {
            return Ok(0.5 * (lo + hi));
        }
    }
    Err(ObservableError::NonConvergence("rectangle modulus"))
}

/// Cross-ratio `x` of the half-plane configuration `(0, x, 1, ∞)` that a
/// rectangle of aspect ratio `rho = height / width` maps to, with its left
/// edge sent to `(0, x)`.
///
/// The rectangle is `[-K, K] × [0, K']` with `K'/K = 2 rho`; the Jacobi sine
/// sends the corners to `(-1/k, -1, 1, 1/k)` and a Möbius map then gives
/// `x = ((1 - k)/(1 + k))^2`. `rho` is clamped to `[0.05, 20]`; above
/// `rho ≈ 12` the exact `x` is within rounding of 1 and the largest double
/// below 1 is returned.
pub fn rect_cross_ratio(rho: f64) -> Result<CrossRatioPoint> {
    super::require(rho > 0.0 && rho.is_finite(), "rho", rho, "(0, ∞)")?;
    let target = 2.0 * rho.clamp(RHO_MIN, RHO_MAX);
    let (k, k_comp) = if target >= 1.0 {
        // Small modulus; K'/K decreases in k.
        let k = bisect_log(|k| period_ratio(k, complement(k)) - target)?.exp();
        (k, complement(k))
    } else {
        // Small complementary modulus; K'/K increases in k'.
        let kc = bisect_log(|kc| target - period_ratio(complement(kc), kc))?.exp();
        (complement(kc), kc)
    };
    // (1 - k)/(1 + k) = k'^2 / (1 + k)^2 without cancellation.
    let r = k_comp * k_comp / ((1.0 + k) * (1.0 + k));
    CrossRatioPoint::new((r * r).min(LARGEST_BELOW_ONE))
}
