//! Real special functions used by every closed-form observable: Gamma,
//! the Gauss hypergeometric function on `[0, 1)`, the complete elliptic
//! integral of the first kind, and adaptive quadrature.
//!
//! Everything here is a pure function of its arguments.

mod elliptic;
mod gamma;
mod hypergeometric;
mod quadrature;

pub use elliptic::elliptic_k;
pub(crate) use elliptic::elliptic_k_from_complement;
pub use gamma::gamma;
pub use hypergeometric::{hyp2f1, hyp2f1_at_1, hyp2f1_deriv, hyp2f1_jet, Jet};
pub use quadrature::integrate;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpecFunError {
    #[error("pole of {function} at {at}")]
    Pole { function: &'static str, at: f64 },
    #[error("{function} diverges: {detail}")]
    Divergence {
        function: &'static str,
        detail: String,
    },
    #[error("{function} did not converge: {detail}")]
    NonConvergence {
        function: &'static str,
        detail: String,
    },
    #[error("{function}: argument {value} outside {domain}")]
    Domain {
        function: &'static str,
        value: f64,
        domain: &'static str,
    },
}

pub type Result<T> = std::result::Result<T, SpecFunError>;

/// True when `x` is one of 0, -1, -2, ...; exact comparison on purpose.
pub(crate) fn is_nonpositive_integer(x: f64) -> bool {
    x <= 0.0 && x == x.floor()
}
