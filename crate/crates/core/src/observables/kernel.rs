use super::{ObservableError, Result};
use crate::mobius::Mobius;

/// Boundary Poisson-type kernel of the half plane, `|y - x|^(-2b)`,
/// normalised so that `H(0, ∞) = 1`.
pub fn kernel_h1(x: f64, y: f64, b: f64) -> Result<f64> {
    if x == y {
        return Err(ObservableError::Singular(x));
    }
    Ok((y - x).abs().powf(-2.0 * b))
}

/// Relative defect of the covariance rule
/// `H(x, y) = |f'(x)|^b |f'(y)|^b H(f(x), f(y))` under a half-plane
/// automorphism `f`. Zero up to rounding.
pub fn kernel_covariance_defect(x: f64, y: f64, b: f64, f: &Mobius) -> Result<f64> {
    let direct = kernel_h1(x, y, b)?;
    let transported = (f.derivative_real(x).abs() * f.derivative_real(y).abs()).powf(b)
        * kernel_h1(f.apply_real(x), f.apply_real(y), b)?;
    Ok(((transported - direct) / direct).abs())
}
