//! Closed-form observables for chordal SLE_κ, 0 < κ <= 4, and the critical
//! Ising model (κ = 3).
//!
//! Boundary points of the half plane are put in the normal form
//! `(0, x, 1, ∞)`; the cross-ratio of that configuration is `x` itself.

mod avoidance;
mod ising;
mod kernel;
mod params;
mod rectangle;
mod residuals;
mod two_path;

pub use avoidance::{excursion_avoid_prob, excursion_avoid_prob_jet};
pub use ising::{ising_normalizer, ising_p1, ising_p2, ising_p3};
pub use kernel::{kernel_covariance_defect, kernel_h1};
pub use params::{params_from_kappa, SleParams};
pub use rectangle::rect_cross_ratio;
pub use residuals::{
    ode_residual_phi, ode_residual_phi_substituted, ode_residual_psi, ode_residual_saint,
    pde_residual_phi, phi_ode_residual, psi_ode_residual, saint_ode_residual,
    substituted_ode_residual,
};
pub use two_path::{
    partition_z_i, partition_z_ii, prob_type, prob_type_formal, tilde_h2, tilde_h2_jet,
};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::specfun::SpecFunError;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ObservableError {
    #[error("{what} = {value} outside {domain}")]
    Domain {
        what: &'static str,
        value: f64,
        domain: &'static str,
    },
    #[error("kernel is singular at coincident points x = y = {0}")]
    Singular(f64),
    #[error("bisection for {0} failed to converge")]
    NonConvergence(&'static str),
    #[error(transparent)]
    SpecFun(#[from] SpecFunError),
}

pub type Result<T> = std::result::Result<T, ObservableError>;

pub(crate) fn require(
    ok: bool,
    what: &'static str,
    value: f64,
    domain: &'static str,
) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(ObservableError::Domain {
            what,
            value,
            domain,
        })
    }
}

/// The marked point `x` of the boundary configuration `(0, x, 1, ∞)`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
pub struct CrossRatioPoint(f64);

impl CrossRatioPoint {
    pub fn new(x: f64) -> Result<Self> {
        require(x > 0.0 && x < 1.0, "cross-ratio x", x, "(0, 1)")?;
        Ok(CrossRatioPoint(x))
    }

    pub fn value(self) -> f64 {
        self.0
    }

    /// `1 - x`, the point of the mirrored configuration.
    pub fn mirrored(self) -> Self {
        CrossRatioPoint(1.0 - self.0)
    }
}

/// Which pair of boundary points the two curves connect.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ConfigType {
    /// `0 ↔ ∞` and `x ↔ 1`.
    TypeI,
    /// `0 ↔ x` and `1 ↔ ∞`.
    TypeII,
}
