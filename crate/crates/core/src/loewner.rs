//! Chordal SLE_κ traces from the Loewner equation `∂g_t(z) = 2/(g_t(z) - √κ W_t)`
//! with piecewise-constant driving.
//!
//! On a step of length `Δt` with constant driving value `U` the inverse
//! map is the slit map `f(w) = U + sqrt((w - U)^2 - 4Δt)`, and the trace
//! point at step `k` is `f_1 ∘ ... ∘ f_k` applied just above `U_k`.

use std::io::Write;

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::mobius::Mobius;

/// Relative tip offset: trace points are evaluated at height `sqrt(ε Δt)`.
pub const TIP_EPS: f64 = 1e-3;
/// Closest approach to a Möbius pole tolerated by [`mobius_map_trace`].
pub const POLE_EPS: f64 = 1e-12;

#[derive(Debug, Error)]
pub enum LoewnerError {
    #[error("invalid {what}: {value}")]
    InvalidParameter { what: &'static str, value: f64 },
    #[error("driving function is malformed: {0}")]
    MalformedDriving(&'static str),
    #[error("inverse Loewner map overflowed at step {step}")]
    Overflow { step: usize },
    #[error("trace point {index} lies on the pole of the Möbius map")]
    Pole { index: usize },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, LoewnerError>;

/// Samples of `√κ W_t` on a time grid starting at 0.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DrivingFunction {
    pub times: Vec<f64>,
    pub values: Vec<f64>,
}

impl DrivingFunction {
    pub fn new(times: Vec<f64>, values: Vec<f64>) -> Result<Self> {
        if times.len() != values.len() || times.len() < 2 {
            return Err(LoewnerError::MalformedDriving(
                "need at least two matching samples",
            ));
        }
        if times[0] != 0.0 || values[0] != 0.0 {
            return Err(LoewnerError::MalformedDriving("must start at (0, 0)"));
        }
        if !times.windows(2).all(|w| w[1] > w[0]) {
            return Err(LoewnerError::MalformedDriving(
                "times must increase strictly",
            ));
        }
        if !values.iter().all(|v| v.is_finite()) {
            return Err(LoewnerError::MalformedDriving("values must be finite"));
        }
        Ok(DrivingFunction { times, values })
    }

    pub fn n_steps(&self) -> usize {
        self.times.len() - 1
    }

    /// Keeps every `factor`-th sample.
    pub fn subsample(&self, factor: usize) -> Self {
        let factor = factor.max(1);
        DrivingFunction {
            times: self.times.iter().step_by(factor).copied().collect(),
            values: self.values.iter().step_by(factor).copied().collect(),
        }
    }

    /// Driving `r U(t / r^2)` on times `r^2 t`.
    pub fn scaled(&self, r: f64) -> Self {
        DrivingFunction {
            times: self.times.iter().map(|t| r * r * t).collect(),
            values: self.values.iter().map(|v| r * v).collect(),
        }
    }
}

/// Gaussian random walk with per-step variance `κ Δt`, `Δt = t_max / n_steps`.
pub fn sample_driving(
    kappa: f64,
    n_steps: usize,
    t_max: f64,
    seed: u64,
) -> Result<DrivingFunction> {
    if !(kappa >= 0.0 && kappa.is_finite()) {
        return Err(LoewnerError::InvalidParameter {
            what: "kappa",
            value: kappa,
        });
    }
    if n_steps == 0 {
        return Err(LoewnerError::InvalidParameter {
            what: "n_steps",
            value: 0.0,
        });
    }
    if !(t_max > 0.0 && t_max.is_finite()) {
        return Err(LoewnerError::InvalidParameter {
            what: "t_max",
            value: t_max,
        });
    }
    let dt = t_max / n_steps as f64;
    let times: Vec<f64> = (0..=n_steps).map(|k| k as f64 * dt).collect();
    sample_driving_on_grid(kappa, &times, seed)
}

/// Capacity grid `t_k = t_max (k/n)^power`, concentrating steps near `t = 0`.
pub fn power_grid(n_steps: usize, t_max: f64, power: f64) -> Vec<f64> {
    let n = n_steps as f64;
    (0..=n_steps)
        .map(|k| t_max * (k as f64 / n).powf(power))
        .collect()
}

/// Brownian driving `sqrt(kappa) B_t` sampled at the given times, which must
/// start at 0 and increase strictly.
pub fn sample_driving_on_grid(kappa: f64, times: &[f64], seed: u64) -> Result<DrivingFunction> {
    if !(kappa >= 0.0 && kappa.is_finite()) {
        return Err(LoewnerError::InvalidParameter {
            what: "kappa",
            value: kappa,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut values = Vec::with_capacity(times.len());
    let mut u = 0.0;
    values.push(u);
    for w in times.windows(2) {
        let z: f64 = StandardNormal.sample(&mut rng);
        u += (kappa * (w[1] - w[0])).sqrt() * z;
        values.push(u);
    }
    DrivingFunction::new(times.to_vec(), values)
}

/// A polyline in the closed upper half plane with capacity times.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Trace {
    pub points: Vec<Complex64>,
    pub times: Vec<f64>,
}

impl Trace {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// The part of the trace with capacity time `<= t`.
    pub fn truncated(&self, t: f64) -> Trace {
        let n = self.times.partition_point(|&s| s <= t);
        Trace {
            points: self.points[..n].to_vec(),
            times: self.times[..n].to_vec(),
        }
    }

    /// Largest distance between two trace points (bounding-box estimate
    /// within a factor `√2`).
    pub fn diameter(&self) -> f64 {
        let (mut x0, mut x1, mut y0, mut y1) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
        for p in &self.points {
            x0 = x0.min(p.re);
            x1 = x1.max(p.re);
            y0 = y0.min(p.im);
            y1 = y1.max(p.im);
        }
        (x1 - x0).hypot(y1 - y0)
    }

    /// Writes `t,re,im` rows with a header.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["t", "re", "im"]).map_err(csv_io)?;
        for (t, p) in self.times.iter().zip(&self.points) {
            w.write_record([
                crate::harness::format_number(*t),
                crate::harness::format_number(p.re),
                crate::harness::format_number(p.im),
            ])
            .map_err(csv_io)?;
        }
        w.flush()?;
        Ok(())
    }
}

fn csv_io(e: csv::Error) -> LoewnerError {
    LoewnerError::Io(e.into())
}

/// Square root of `z` in the closed upper half plane.
#[inline]
fn sqrt_upper(z: Complex64) -> Complex64 {
    let (a, b) = (z.re, z.im);
    let t = (0.5 * ((a * a + b * b).sqrt() + a.abs())).sqrt();
    if t == 0.0 {
        return Complex64::new(0.0, 0.0);
    }
    if a >= 0.0 {
        Complex64::new(t.copysign(b), b.abs() / (2.0 * t))
    } else {
        Complex64::new(b / (2.0 * t), t)
    }
}

/// Trace of the Loewner chain driven by `drv`; `O(n^2)` in the number of
/// steps.
pub fn trace_from_driving(drv: &DrivingFunction) -> Result<Trace> {
    let n = drv.n_steps();
    let mut points = Vec::with_capacity(n + 1);
    points.push(Complex64::new(0.0, 0.0));
    let four_dt: Vec<f64> = drv.times.windows(2).map(|w| 4.0 * (w[1] - w[0])).collect();
    for k in 1..=n {
        let h_tip = (TIP_EPS * 0.25 * four_dt[k - 1]).sqrt();
        let mut w = Complex64::new(drv.values[k], h_tip);
        for j in (1..=k).rev() {
            let u = drv.values[j];
            let d = w - u;
            w = sqrt_upper(d * d - four_dt[j - 1]) + u;
        }
        if !(w.re.is_finite() && w.im.is_finite()) {
            return Err(LoewnerError::Overflow { step: k });
        }
        points.push(w);
    }
    Ok(Trace {
        points,
        times: drv.times.clone(),
    })
}

/// Pointwise image of a trace under a Möbius automorphism of the half plane.
pub fn mobius_map_trace(trace: &Trace, map: &Mobius) -> Result<Trace> {
    let points = trace
        .points
        .iter()
        .enumerate()
        .map(|(index, &z)| {
            let denom = z * map.c + map.d;
            if denom.norm() <= POLE_EPS {
                Err(LoewnerError::Pole { index })
            } else {
                Ok((z * map.a + map.b) / denom)
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Trace {
        points,
        times: trace.times.clone(),
    })
}
