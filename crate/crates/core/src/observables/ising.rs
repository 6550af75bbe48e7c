//! Three closed forms for the Type II probability of the critical Ising
//! model (κ = 3).

use std::sync::OnceLock;

use super::{CrossRatioPoint, ObservableError, Result};
use crate::specfun::{gamma, hyp2f1, integrate};

const A: f64 = 4.0 / 3.0;
const B: f64 = 3.0;
const C: f64 = 8.0 / 3.0;

/// `P1(x) = F(4/3, 3; 8/3; 1-x) / [F(4/3, 3; 8/3; x) + F(4/3, 3; 8/3; 1-x)]`.
pub fn ising_p1(x: CrossRatioPoint) -> Result<f64> {
    let x = x.value();
    let f_x = hyp2f1(A, B, C, x)?;
    let f_mirror = hyp2f1(A, B, C, 1.0 - x)?;
    Ok(f_mirror / (f_x + f_mirror))
}

/// `x^(5/3) (1-x)^(5/3) F(4/3, 3; 8/3; x)`, rewritten as the bounded
/// `x^(5/3) F(4/3, -1/3; 8/3; x)`.
fn regularised(x: f64) -> Result<f64> {
    Ok(x.powf(5.0 / 3.0) * hyp2f1(A, C - B, C, x)?)
}

/// `P2(x) = 1/2 - (9/20) Γ(1/3)/Γ(2/3)^2 · x^(5/3)(1-x)^(5/3)/(1-x+x^2)
/// · [F(4/3, 3; 8/3; x) - F(4/3, 3; 8/3; 1-x)]`.
pub fn ising_p2(x: CrossRatioPoint) -> Result<f64> {
    let x = x.value();
    let k = 0.45 * gamma(1.0 / 3.0)? / gamma(2.0 / 3.0)?.powi(2);
    let bracket = regularised(x)? - regularised(1.0 - x)?;
    Ok(0.5 - k * bracket / (1.0 - x + x * x))
}

fn density(y: f64) -> f64 {
    (y * (1.0 - y)).powf(2.0 / 3.0) / (1.0 - y + y * y).powi(2)
}

/// `N = ∫_0^1 y^(2/3)(1-y)^(2/3) / (1-y+y^2)^2 dy`, computed on first use.
pub fn ising_normalizer() -> Result<f64> {
    static NORMALIZER: OnceLock<std::result::Result<f64, ObservableError>> = OnceLock::new();
    NORMALIZER
        .get_or_init(|| integrate(density, 0.0, 1.0, 1e-10).map_err(Into::into))
        .clone()
}

/// `P3(x) = N^(-1) ∫_x^1 y^(2/3)(1-y)^(2/3) / (1-y+y^2)^2 dy`.
pub fn ising_p3(x: CrossRatioPoint) -> Result<f64> {
    let tail = integrate(density, x.value(), 1.0, 1e-13)?;
    Ok(tail / ising_normalizer()?)
}
