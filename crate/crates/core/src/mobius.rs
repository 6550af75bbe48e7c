//! Real Möbius maps `z ↦ (az + b)/(cz + d)` with `ad - bc > 0`, i.e. the
//! conformal automorphisms of the upper half plane.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Mobius {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

impl Mobius {
    pub const IDENTITY: Mobius = Mobius {
        a: 1.0,
        b: 0.0,
        c: 0.0,
        d: 1.0,
    };

    /// `None` unless the coefficients are finite with `ad - bc > 0`.
    pub fn new(a: f64, b: f64, c: f64, d: f64) -> Option<Self> {
        let m = Mobius { a, b, c, d };
        (m.determinant() > 0.0 && [a, b, c, d].iter().all(|v| v.is_finite())).then_some(m)
    }

    pub fn translation(shift: f64) -> Self {
        Mobius {
            a: 1.0,
            b: shift,
            c: 0.0,
            d: 1.0,
        }
    }

    pub fn scaling(factor: f64) -> Option<Self> {
        Mobius::new(factor, 0.0, 0.0, 1.0)
    }

    pub fn determinant(&self) -> f64 {
        self.a * self.d - self.b * self.c
    }

    /// The real point sent to infinity, if any.
    pub fn pole(&self) -> Option<f64> {
        (self.c != 0.0).then(|| -self.d / self.c)
    }

    pub fn apply(&self, z: Complex64) -> Complex64 {
        (z * self.a + self.b) / (z * self.c + self.d)
    }

    pub fn apply_real(&self, x: f64) -> f64 {
        (self.a * x + self.b) / (self.c * x + self.d)
    }

    /// `f'(x) = (ad - bc) / (cx + d)^2` on the real line.
    pub fn derivative_real(&self, x: f64) -> f64 {
        self.determinant() / (self.c * x + self.d).powi(2)
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &Mobius) -> Mobius {
        Mobius {
            a: self.a * inner.a + self.b * inner.c,
            b: self.a * inner.b + self.b * inner.d,
            c: self.c * inner.a + self.d * inner.c,
            d: self.c * inner.b + self.d * inner.d,
        }
    }

    pub fn inverse(&self) -> Mobius {
        Mobius {
            a: self.d,
            b: -self.b,
            c: -self.c,
            d: self.a,
        }
    }
}

/// Cross-ratio `(z1 - w1)(z2 - w2) / ((z1 - z2)(w1 - w2))` of four boundary
/// points. For `(0, x, 1, ∞)` it equals `x`.
pub fn cross_ratio(z1: f64, w1: f64, z2: f64, w2: f64) -> f64 {
    (z1 - w1) * (z2 - w2) / ((z1 - z2) * (w1 - w2))
}
