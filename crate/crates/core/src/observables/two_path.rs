//! Two-path masses and the Type I / Type II crossing probabilities.

use super::{require, ConfigType, CrossRatioPoint, Result};
use crate::specfun::{gamma, hyp2f1, hyp2f1_at_1, hyp2f1_jet, Jet};

/// `Γ(2a)Γ(6a-1) / (Γ(4a)Γ(4a-1))`
fn mass_prefactor(a: f64) -> Result<f64> {
    Ok(gamma(2.0 * a)? * gamma(6.0 * a - 1.0)? / (gamma(4.0 * a)? * gamma(4.0 * a - 1.0)?))
}

fn check_a(a: f64) -> Result<()> {
    require(a > 0.25 && a.is_finite(), "a", a, "(1/4, ∞)")
}

/// Normalised two-path mass `ψ(u)` for the configuration `((0, x), (∞, y))`
/// with `u = x/y`:
/// `Γ(2a)Γ(6a-1)/(Γ(4a)Γ(4a-1)) · u^a · F(2a, 1-2a; 4a; u)`.
///
/// `ψ(0) = 0` and `ψ(1) = 1`.
pub fn tilde_h2(u: f64, a: f64) -> Result<f64> {
    check_a(a)?;
    require((0.0..=1.0).contains(&u), "u", u, "[0, 1]")?;
    if u == 0.0 {
        return Ok(0.0);
    }
    let k = mass_prefactor(a)?;
    let f = if u == 1.0 {
        hyp2f1_at_1(2.0 * a, 1.0 - 2.0 * a, 4.0 * a)?
    } else {
        hyp2f1(2.0 * a, 1.0 - 2.0 * a, 4.0 * a, u)?
    };
    Ok(k * u.powf(a) * f)
}

/// `ψ`, `ψ'`, `ψ''` at `u ∈ (0, 1)`.
pub fn tilde_h2_jet(u: f64, a: f64) -> Result<Jet> {
    check_a(a)?;
    require(u > 0.0 && u < 1.0, "u", u, "(0, 1)")?;
    let k = mass_prefactor(a)?;
    let f = hyp2f1_jet(2.0 * a, 1.0 - 2.0 * a, 4.0 * a, u)?;
    let p0 = u.powf(a);
    let p1 = a * u.powf(a - 1.0);
    let p2 = a * (a - 1.0) * u.powf(a - 2.0);
    Ok(Jet {
        value: k * p0 * f.value,
        d1: k * (p1 * f.value + p0 * f.d1),
        d2: k * (p2 * f.value + 2.0 * p1 * f.d1 + p0 * f.d2),
    })
}

/// Partition function of a Type I configuration,
/// `Γ(2a)Γ(6a-1)/(Γ(4a)Γ(4a-1)) · x^a (1-x)^a · F(2a, 6a-1; 4a; x)`.
pub fn partition_z_i(x: CrossRatioPoint, a: f64) -> Result<f64> {
    check_a(a)?;
    let x = x.value();
    let f = hyp2f1(2.0 * a, 6.0 * a - 1.0, 4.0 * a, x)?;
    Ok(mass_prefactor(a)? * (x * (1.0 - x)).powf(a) * f)
}

/// Partition function of a Type II configuration; by reflection symmetry
/// `Z_II(x) = Z_I(1 - x)`.
pub fn partition_z_ii(x: CrossRatioPoint, a: f64) -> Result<f64> {
    partition_z_i(x.mirrored(), a)
}

/// `x^(4a-1) F(2a, 1-2a; 4a; x)`, which is `(x(1-x))^(4a-1)` times
/// `F(2a, 6a-1; 4a; x)` and stays bounded on `[0, 1]`.
fn crossing_weight(x: f64, a: f64) -> Result<f64> {
    Ok(x.powf(4.0 * a - 1.0) * hyp2f1(2.0 * a, 1.0 - 2.0 * a, 4.0 * a, x)?)
}

fn crossing_probability(x: CrossRatioPoint, kappa: f64, which: ConfigType) -> Result<f64> {
    let a = 2.0 / kappa;
    let x = x.value();
    let w_x = crossing_weight(x, a)?;
    let w_mirror = crossing_weight(1.0 - x, a)?;
    let total = w_x + w_mirror;
    // The smaller probability is formed directly so it keeps full relative
    // precision; the larger is its complement.
    let type_i = if w_x <= w_mirror {
        w_x / total
    } else {
        1.0 - w_mirror / total
    };
    let type_ii = if w_x <= w_mirror {
        1.0 - w_x / total
    } else {
        w_mirror / total
    };
    Ok(match which {
        ConfigType::TypeI => type_i,
        ConfigType::TypeII => type_ii,
    })
}

/// Probability that two simple SLE_κ curves in the configuration
/// `(0, x, 1, ∞)` pair up as `which`:
/// `P_I = F(2a, 6a-1; 4a; x) / [F(2a, 6a-1; 4a; x) + F(2a, 6a-1; 4a; 1-x)]`,
/// `a = 2/κ`, and `P_II = 1 - P_I`.
pub fn prob_type(x: CrossRatioPoint, kappa: f64, which: ConfigType) -> Result<f64> {
    require(kappa > 0.0 && kappa <= 4.0, "kappa", kappa, "(0, 4]")?;
    crossing_probability(x, kappa, which)
}

/// [`prob_type`] with κ allowed in `(0, 8)`. For κ > 4 the value is the
/// formula continued past the simple-curve regime (κ = 6 gives Cardy's
/// formula) and has no simulation counterpart here.
pub fn prob_type_formal(x: CrossRatioPoint, kappa: f64, which: ConfigType) -> Result<f64> {
    require(kappa > 0.0 && kappa < 8.0, "kappa", kappa, "(0, 8)")?;
    crossing_probability(x, kappa, which)
}
