//! Residuals of the differential equations satisfied by the two-path mass
//! and the excursion-avoidance probability.
//!
//! The `*_ode_residual` functions take an arbitrary jet `(f, f', f'')` and
//! evaluate the left-hand side of the equation; the `ode_residual_*`
//! wrappers plug in the closed forms from this module.

use super::avoidance::excursion_avoid_prob_jet;
use super::two_path::tilde_h2_jet;
use super::{require, Result};
use crate::specfun::Jet;

/// `u²(1-u)²ψ'' + 2u(a - u + (1-a)u²)ψ' - a(3a-1)(1-u)²ψ`
pub fn psi_ode_residual(u: f64, a: f64, psi: &Jet) -> f64 {
    let w = 1.0 - u;
    u * u * w * w * psi.d2 + 2.0 * u * (a - u + (1.0 - a) * u * u) * psi.d1
        - a * (3.0 * a - 1.0) * w * w * psi.value
}

/// `3z(z-1)²g'' + 2(z-1)(z+1)g' - 2zg`
pub fn saint_ode_residual(z: f64, g: &Jet) -> f64 {
    let w = z - 1.0;
    3.0 * z * w * w * g.d2 + 2.0 * w * (z + 1.0) * g.d1 - 2.0 * z * g.value
}

/// `u²(1-u)φ'' + 2u(a + (a-1)u)φ' - 2a(1-u)φ`
pub fn phi_ode_residual(u: f64, a: f64, phi: &Jet) -> f64 {
    u * u * (1.0 - u) * phi.d2 + 2.0 * u * (a + (a - 1.0) * u) * phi.d1
        - 2.0 * a * (1.0 - u) * phi.value
}

/// Hypergeometric equation with parameters `(2a, 4a+1; 2a+2)`:
/// `u(1-u)ψ'' + (2a+2 - (6a+2)u)ψ' - 2a(4a+1)ψ`.
pub fn substituted_ode_residual(u: f64, a: f64, psi: &Jet) -> f64 {
    u * (1.0 - u) * psi.d2 + (2.0 * a + 2.0 - (6.0 * a + 2.0) * u) * psi.d1
        - 2.0 * a * (4.0 * a + 1.0) * psi.value
}

fn check_open_unit(what: &'static str, u: f64) -> Result<()> {
    require(u > 0.0 && u < 1.0, what, u, "(0, 1)")
}

/// ψ-equation residual of the two-path mass at `u`.
pub fn ode_residual_psi(u: f64, a: f64) -> Result<f64> {
    check_open_unit("u", u)?;
    Ok(psi_ode_residual(u, a, &tilde_h2_jet(u, a)?))
}

/// Residual of the κ = 3 equation in the variable `z = 1 - u`, applied to
/// `g(z) = ψ(1 - z)` with `a = 2/3`.
pub fn ode_residual_saint(z: f64) -> Result<f64> {
    check_open_unit("z", z)?;
    let psi = tilde_h2_jet(1.0 - z, 2.0 / 3.0)?;
    let g = Jet {
        value: psi.value,
        d1: -psi.d1,
        d2: psi.d2,
    };
    Ok(saint_ode_residual(z, &g))
}

/// φ-equation residual of the avoidance probability at `u` for `κ = 2/a`.
pub fn ode_residual_phi(u: f64, a: f64) -> Result<f64> {
    check_open_unit("u", u)?;
    Ok(phi_ode_residual(
        u,
        a,
        &excursion_avoid_prob_jet(u, 2.0 / a)?,
    ))
}

/// Residual of the hypergeometric equation for
/// `ψ(u) = u^(-1) (1-u)^(1-4a) φ(u)`.
pub fn ode_residual_phi_substituted(u: f64, a: f64) -> Result<f64> {
    check_open_unit("u", u)?;
    let phi = excursion_avoid_prob_jet(u, 2.0 / a)?;
    let e = 1.0 - 4.0 * a;
    let p = u.powi(-1) * (1.0 - u).powf(e);
    let l1 = -1.0 / u - e / (1.0 - u);
    let l2 = 1.0 / (u * u) - e / ((1.0 - u) * (1.0 - u)) + l1 * l1;
    let psi = Jet {
        value: p * phi.value,
        d1: p * (l1 * phi.value + phi.d1),
        d2: p * (l2 * phi.value + 2.0 * l1 * phi.d1 + phi.d2),
    };
    Ok(substituted_ode_residual(u, a, &psi))
}

/// Residual of the two-variable equation
/// `-a(1/x - 1/y)²Φ + (a/x)Φ_x + (a/y)Φ_y + Φ_xx/2 + Φ_yy/2 + Φ_xy`
/// for `Φ(x, y) = φ(x/y)`, `0 < x < y`.
pub fn pde_residual_phi(x: f64, y: f64, kappa: f64) -> Result<f64> {
    require(x > 0.0 && x.is_finite(), "x", x, "(0, y)")?;
    require(y > x && y.is_finite(), "y", y, "(x, ∞)")?;
    let a = 2.0 / kappa;
    let phi = excursion_avoid_prob_jet(x / y, kappa)?;
    let (f, f1, f2) = (phi.value, phi.d1, phi.d2);
    let y2 = y * y;
    let phi_x = f1 / y;
    let phi_y = -x * f1 / y2;
    let phi_xx = f2 / y2;
    let phi_yy = 2.0 * x * f1 / (y2 * y) + x * x * f2 / (y2 * y2);
    let phi_xy = -f1 / y2 - x * f2 / (y2 * y);
    let d = 1.0 / x - 1.0 / y;
    Ok(-a * d * d * f + a / x * phi_x + a / y * phi_y + 0.5 * phi_xx + 0.5 * phi_yy + phi_xy)
}
