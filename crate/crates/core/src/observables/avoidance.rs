//! Probability that chordal SLE_κ avoids an independent Brownian excursion.

use super::{require, Result};
use crate::specfun::{gamma, hyp2f1, hyp2f1_at_1, hyp2f1_jet, Jet};

fn check_kappa(kappa: f64) -> Result<f64> {
    require(kappa > 0.0 && kappa <= 4.0, "kappa", kappa, "(0, 4]")?;
    Ok(2.0 / kappa)
}

/// `Γ(2a)Γ(4a+1) / (Γ(2a+2)Γ(4a-1))`
fn prefactor(a: f64) -> Result<f64> {
    Ok(gamma(2.0 * a)? * gamma(4.0 * a + 1.0)? / (gamma(2.0 * a + 2.0)? * gamma(4.0 * a - 1.0)?))
}

/// Probability that an SLE_κ from 0 to ∞ and a Brownian excursion between
/// `x` and `y` (`0 < x < y`) do not meet, as a function of `u = x/y`:
///
/// `φ(u) = Γ(2a)Γ(4a+1)/(Γ(2a+2)Γ(4a-1)) · u · F(2, 1-2a; 2a+2; u)`, `a = 2/κ`.
///
/// Accepts the closed interval: `φ(0) = 0` and `φ(1) = 1`.
pub fn excursion_avoid_prob(u: f64, kappa: f64) -> Result<f64> {
    let a = check_kappa(kappa)?;
    require((0.0..=1.0).contains(&u), "u", u, "[0, 1]")?;
    if u == 0.0 {
        return Ok(0.0);
    }
    let f = if u == 1.0 {
        hyp2f1_at_1(2.0, 1.0 - 2.0 * a, 2.0 * a + 2.0)?
    } else {
        hyp2f1(2.0, 1.0 - 2.0 * a, 2.0 * a + 2.0, u)?
    };
    Ok(prefactor(a)? * u * f)
}

/// `φ`, `φ'`, `φ''` at `u ∈ (0, 1)`.
pub fn excursion_avoid_prob_jet(u: f64, kappa: f64) -> Result<Jet> {
    let a = check_kappa(kappa)?;
    require(u > 0.0 && u < 1.0, "u", u, "(0, 1)")?;
    let k = prefactor(a)?;
    let f = hyp2f1_jet(2.0, 1.0 - 2.0 * a, 2.0 * a + 2.0, u)?;
    Ok(Jet {
        value: k * u * f.value,
        d1: k * (f.value + u * f.d1),
        d2: k * (2.0 * f.d1 + u * f.d2),
    })
}
