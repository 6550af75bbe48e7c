use serde::Serialize;

use super::{require, Result};

/// Parameters attached to one value of κ.
///
/// `c_central` and `lambda` are reported for completeness; no numeric
/// routine in this crate weights anything by them.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SleParams {
    pub kappa: f64,
    /// `2/κ`
    pub a: f64,
    /// Boundary scaling exponent `(6 - κ)/(2κ)`.
    pub b: f64,
    /// Central charge `(κ - 6)(8 - 3κ)/(2κ)`.
    pub c_central: f64,
    /// Loop-measure coefficient `-c/2`.
    pub lambda: f64,
}

pub fn params_from_kappa(kappa: f64) -> Result<SleParams> {
    require(kappa > 0.0 && kappa <= 4.0, "kappa", kappa, "(0, 4]")?;
    let c_central = (kappa - 6.0) * (8.0 - 3.0 * kappa) / (2.0 * kappa);
    Ok(SleParams {
        kappa,
        a: 2.0 / kappa,
        b: (6.0 - kappa) / (2.0 * kappa),
        c_central,
        lambda: -0.5 * c_central,
    })
}
