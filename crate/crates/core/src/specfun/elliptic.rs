use std::f64::consts::FRAC_PI_2;

use super::{Result, SpecFunError};

/// Complete elliptic integral of the first kind `K(k)` (modulus convention),
/// by the arithmetic-geometric mean `K(k) = π / (2 AGM(1, k'))`.
pub fn elliptic_k(k: f64) -> Result<f64> {
    if k.is_nan() || !(0.0..=1.0).contains(&k) {
        return Err(SpecFunError::Domain {
            function: "elliptic_k",
            value: k,
            domain: "[0, 1)",
        });
    }
    if k == 1.0 {
        return Err(SpecFunError::Divergence {
            function: "elliptic_k",
            detail: "logarithmic singularity at k = 1".into(),
        });
    }
    let complement = ((1.0 - k) * (1.0 + k)).sqrt();
    Ok(FRAC_PI_2 / agm(1.0, complement))
}

/// `K` evaluated from the complementary modulus `k' = sqrt(1 - k^2)`,
/// which keeps full precision when `k` is within rounding of 1.
pub(crate) fn elliptic_k_from_complement(complement: f64) -> f64 {
    FRAC_PI_2 / agm(1.0, complement)
}

fn agm(mut a: f64, mut b: f64) -> f64 {
    for _ in 0..64 {
        if (a - b).abs() <= 4.0 * f64::EPSILON * a {
            break;
        }
        (a, b) = (0.5 * (a + b), (a * b).sqrt());
    }
    0.5 * (a + b)
}
