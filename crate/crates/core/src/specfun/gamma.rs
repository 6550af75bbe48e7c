use std::f64::consts::PI;

use super::{is_nonpositive_integer, Result, SpecFunError};

// Lanczos approximation, g = 7, nine terms.
const LANCZOS_G: f64 = 7.0;
#[allow(clippy::excessive_precision)]
const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// The Gamma function for real arguments.
///
/// Uses the Lanczos series for `x >= 1/2` and the reflection formula
/// below that. Fails at the poles `0, -1, -2, ...`.
pub fn gamma(x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(SpecFunError::Domain {
            function: "gamma",
            value: x,
            domain: "finite reals",
        });
    }
    if is_nonpositive_integer(x) {
        return Err(SpecFunError::Pole {
            function: "gamma",
            at: x,
        });
    }
    if x == x.floor() && x <= 171.0 {
        return Ok((2..x as u32).fold(1.0, |acc, k| acc * k as f64));
    }
    if x < 0.5 {
        // Γ(x)Γ(1-x) = π / sin(πx)
        return Ok(PI / (sin_pi(x) * lanczos(1.0 - x)));
    }
    Ok(lanczos(x))
}

fn lanczos(x: f64) -> f64 {
    let z = x - 1.0;
    let mut series = LANCZOS_COEFFS[0];
    for (i, c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        series += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    // t^(z+1/2) is split in two halves so the product stays finite past Γ(143).
    let half = t.powf(0.5 * (z + 0.5));
    (2.0 * PI).sqrt() * half * (half * (-t).exp()) * series
}

/// `sin(πx)` with the argument reduced first, so it vanishes exactly on the integers.
fn sin_pi(x: f64) -> f64 {
    let r = x - 2.0 * (0.5 * x).floor();
    // r in [0, 2)
    let (r, sign) = if r >= 1.0 { (r - 1.0, -1.0) } else { (r, 1.0) };
    let r = if r > 0.5 { 1.0 - r } else { r };
    sign * (PI * r).sin()
}
