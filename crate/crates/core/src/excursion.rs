//! Brownian excursions in the upper half plane between two real points and
//! polyline intersection tests against SLE traces.
//!
//! An excursion from 0 to ∞ is the pair (one-dimensional Brownian motion,
//! three-dimensional Bessel process); it is sampled exactly on a finite set
//! of times and carried to an excursion from `x` to `y` by
//! `z ↦ (yz + x)/(z + 1)`.

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::harness::{derive_seed, MCResult};
use crate::loewner::{self, LoewnerError, Trace};
use crate::observables::{self, ObservableError};

/// Fraction of the compactified clock `[0, 1)` at each end that is sampled
/// with [`END_REFINEMENT`]-times finer steps.
pub const END_WINDOW: f64 = 0.05;
pub const END_REFINEMENT: f64 = 10.0;
/// Capacity horizon of the SLE trace in units of `y^2`.
pub const T_MAX_FACTOR: f64 = 25.0;
/// Exponent of the SLE capacity grid `t_k = t_max (k/n)^p`.
pub const GRID_POWER: f64 = 3.0;
/// Excursion steps per SLE step in [`mc_avoidance`].
pub const EXCURSION_REFINEMENT: usize = 10;
/// Horizons (units of `y^2`) reported by the monotonicity diagnostic.
pub const T_MAX_DIAGNOSTIC: [f64; 3] = [5.0, 10.0, 25.0];
/// Multipliers of the contact tolerance reported by the sensitivity
/// diagnostic.
pub const TOL_FACTORS: [f64; 3] = [0.5, 1.0, 2.0];
const PILOT_SAMPLES: usize = 16;
const MAX_GRID_CELLS: usize = 512;

#[derive(Debug, Error)]
pub enum ExcursionError {
    #[error("invalid {what}: {value}")]
    InvalidParameter { what: &'static str, value: f64 },
    #[error(transparent)]
    Loewner(#[from] LoewnerError),
    #[error(transparent)]
    Observable(#[from] ObservableError),
}

pub type Result<T> = std::result::Result<T, ExcursionError>;

fn invalid(what: &'static str, value: f64) -> ExcursionError {
    ExcursionError::InvalidParameter { what, value }
}

/// A sampled excursion from `x` to `y`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExcursionPath {
    pub points: Vec<Complex64>,
    pub x: f64,
    pub y: f64,
    /// Bessel samples that landed exactly on 0 and were redrawn.
    pub redraws: usize,
}

/// Compactified clock values `0 = s_0 < ... < s_n < 1`: uniform with
/// `END_REFINEMENT`-times finer spacing on the two end windows.
pub fn clock_grid(n_steps: usize) -> Vec<f64> {
    let w = END_WINDOW;
    let r = END_REFINEMENT;
    let total = 2.0 * w * r + (1.0 - 2.0 * w);
    // The grid is uniform in the variable v, where dv/ds = r on the end
    // windows and 1 elsewhere; the last node stops one step short of 1.
    let to_s = |v: f64| {
        if v <= w * r {
            v / r
        } else if v <= w * r + 1.0 - 2.0 * w {
            w + (v - w * r)
        } else {
            1.0 - w + (v - w * r - (1.0 - 2.0 * w)) / r
        }
    };
    let dv = total / (n_steps + 1) as f64;
    (0..=n_steps).map(|j| to_s(j as f64 * dv)).collect()
}

/// Samples an excursion from `x` to `y` with `n_steps` steps on the
/// compactified clock `t = s/(1 - s)`. The last point is `y` itself.
pub fn sample_excursion(x: f64, y: f64, n_steps: usize, seed: u64) -> Result<ExcursionPath> {
    if !x.is_finite() || x <= 0.0 {
        return Err(invalid("x", x));
    }
    if !y.is_finite() || y <= x {
        return Err(invalid("y", y));
    }
    if n_steps < 100 {
        return Err(invalid("n_steps", n_steps as f64));
    }
    let (raw, redraws) = sample_half_line_excursion(n_steps, seed);
    let mut points: Vec<Complex64> = raw.iter().map(|&z| (z * y + x) / (z + 1.0)).collect();
    points.push(Complex64::new(y, 0.0));
    Ok(ExcursionPath {
        points,
        x,
        y,
        redraws,
    })
}

/// Excursion from 0 to ∞ on the clock grid, before the Möbius transport.
pub fn sample_half_line_excursion(n_steps: usize, seed: u64) -> (Vec<Complex64>, usize) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let grid = clock_grid(n_steps);
    let mut points = Vec::with_capacity(grid.len());
    points.push(Complex64::new(0.0, 0.0));
    let (mut bx, mut r3) = (0.0, [0.0f64; 3]);
    let mut t_prev = 0.0;
    let mut redraws = 0;
    for &s in &grid[1..] {
        let t = s / (1.0 - s);
        let sd = (t - t_prev).sqrt();
        t_prev = t;
        let z: f64 = StandardNormal.sample(&mut rng);
        bx += sd * z;
        let next = loop {
            let mut cand = r3;
            for c in cand.iter_mut() {
                let z: f64 = StandardNormal.sample(&mut rng);
                *c += sd * z;
            }
            if cand.iter().any(|&c| c != 0.0) {
                break cand;
            }
            redraws += 1;
        };
        r3 = next;
        let radius = (r3[0] * r3[0] + r3[1] * r3[1] + r3[2] * r3[2]).sqrt();
        points.push(Complex64::new(bx, radius));
    }
    (points, redraws)
}

/// Euclidean distance between segments `[p0, p1]` and `[q0, q1]`.
pub fn segment_distance(p0: Complex64, p1: Complex64, q0: Complex64, q1: Complex64) -> f64 {
    if segments_cross(p0, p1, q0, q1) {
        return 0.0;
    }
    point_segment_distance(p0, q0, q1)
        .min(point_segment_distance(p1, q0, q1))
        .min(point_segment_distance(q0, p0, p1))
        .min(point_segment_distance(q1, p0, p1))
}

fn cross(o: Complex64, a: Complex64, b: Complex64) -> f64 {
    (a.re - o.re) * (b.im - o.im) - (a.im - o.im) * (b.re - o.re)
}

fn segments_cross(p0: Complex64, p1: Complex64, q0: Complex64, q1: Complex64) -> bool {
    let d1 = cross(q0, q1, p0);
    let d2 = cross(q0, q1, p1);
    let d3 = cross(p0, p1, q0);
    let d4 = cross(p0, p1, q1);
    ((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0))
        && ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0))
}

fn point_segment_distance(p: Complex64, a: Complex64, b: Complex64) -> f64 {
    let ab = b - a;
    let len2 = ab.norm_sqr();
    let t = if len2 > 0.0 {
        (((p - a) * ab.conj()).re / len2).clamp(0.0, 1.0)
    } else {
        0.0
    };
    (p - (a + ab * t)).norm()
}

/// Uniform grid over the bounding box of a polyline; each cell lists the
/// segments whose box, padded by `pad`, meets it.
struct SegmentGrid<'a> {
    points: &'a [Complex64],
    x0: f64,
    y0: f64,
    cell: f64,
    nx: usize,
    ny: usize,
    cells: Vec<Vec<u32>>,
}

impl<'a> SegmentGrid<'a> {
    fn new(points: &'a [Complex64], pad: f64) -> Self {
        let (mut x0, mut x1, mut y0, mut y1) = bbox(points);
        x0 -= pad;
        y0 -= pad;
        x1 += pad;
        y1 += pad;
        let extent = (x1 - x0).max(y1 - y0).max(f64::MIN_POSITIVE);
        let cell = pad.max(extent / MAX_GRID_CELLS as f64);
        let nx = (((x1 - x0) / cell).ceil() as usize).clamp(1, MAX_GRID_CELLS);
        let ny = (((y1 - y0) / cell).ceil() as usize).clamp(1, MAX_GRID_CELLS);
        let mut grid = SegmentGrid {
            points,
            x0,
            y0,
            cell,
            nx,
            ny,
            cells: vec![Vec::new(); nx * ny],
        };
        for i in 0..points.len().saturating_sub(1) {
            let (a, b) = (points[i], points[i + 1]);
            let (cx0, cx1, cy0, cy1) = grid.cell_range(
                a.re.min(b.re) - pad,
                a.re.max(b.re) + pad,
                a.im.min(b.im) - pad,
                a.im.max(b.im) + pad,
            );
            for cy in cy0..=cy1 {
                for cx in cx0..=cx1 {
                    grid.cells[cy * nx + cx].push(i as u32);
                }
            }
        }
        grid
    }

    fn cell_range(&self, xa: f64, xb: f64, ya: f64, yb: f64) -> (usize, usize, usize, usize) {
        let ix = |v: f64| (((v - self.x0) / self.cell).floor().max(0.0) as usize).min(self.nx - 1);
        let iy = |v: f64| (((v - self.y0) / self.cell).floor().max(0.0) as usize).min(self.ny - 1);
        (ix(xa), ix(xb), iy(ya), iy(yb))
    }

    fn covers(&self, xa: f64, xb: f64, ya: f64, yb: f64) -> bool {
        xb >= self.x0
            && xa <= self.x0 + self.nx as f64 * self.cell
            && yb >= self.y0
            && ya <= self.y0 + self.ny as f64 * self.cell
    }

    /// Minimum distance from segment `[a, b]` to the polyline, or `None` if
    /// no indexed segment is within the padding.
    fn min_distance(
        &self,
        a: Complex64,
        b: Complex64,
        stamp: &mut [u32],
        pass: u32,
    ) -> Option<f64> {
        let (xa, xb, ya, yb) = (
            a.re.min(b.re),
            a.re.max(b.re),
            a.im.min(b.im),
            a.im.max(b.im),
        );
        if !self.covers(xa, xb, ya, yb) {
            return None;
        }
        let (cx0, cx1, cy0, cy1) = self.cell_range(xa, xb, ya, yb);
        let mut best: Option<f64> = None;
        for cy in cy0..=cy1 {
            for cx in cx0..=cx1 {
                for &i in &self.cells[cy * self.nx + cx] {
                    let i = i as usize;
                    if stamp[i] == pass {
                        continue;
                    }
                    stamp[i] = pass;
                    let d = segment_distance(a, b, self.points[i], self.points[i + 1]);
                    best = Some(best.map_or(d, |m: f64| m.min(d)));
                }
            }
        }
        best
    }
}

fn bbox(points: &[Complex64]) -> (f64, f64, f64, f64) {
    points.iter().fold(
        (f64::MAX, f64::MIN, f64::MAX, f64::MIN),
        |(x0, x1, y0, y1), p| (x0.min(p.re), x1.max(p.re), y0.min(p.im), y1.max(p.im)),
    )
}

/// For each tolerance, the first trace segment (1-based index of its end
/// point) that comes within that tolerance of the path, if any.
pub fn first_contacts(trace: &Trace, path: &ExcursionPath, tols: &[f64]) -> Vec<Option<usize>> {
    let mut out = vec![None; tols.len()];
    let pad = tols.iter().cloned().fold(0.0, f64::max);
    if trace.points.is_empty() || path.points.is_empty() {
        return out;
    }
    let single = |p: &[Complex64]| {
        if p.len() == 1 {
            vec![p[0], p[0]]
        } else {
            p.to_vec()
        }
    };
    let path_pts = single(&path.points);
    let trace_pts = single(&trace.points);
    let grid = SegmentGrid::new(&path_pts, pad);
    let mut stamp = vec![0u32; path_pts.len()];
    for k in 1..trace_pts.len() {
        if let Some(d) = grid.min_distance(trace_pts[k - 1], trace_pts[k], &mut stamp, k as u32) {
            for (slot, &tol) in out.iter_mut().zip(tols) {
                if slot.is_none() && d <= tol {
                    *slot = Some(k);
                }
            }
            if out.iter().all(Option::is_some) {
                break;
            }
        }
    }
    out
}

/// True iff some segment of the trace comes within `tol` of some segment of
/// the path.
pub fn paths_intersect(trace: &Trace, path: &ExcursionPath, tol: f64) -> bool {
    first_contacts(trace, path, &[tol.max(0.0)])[0].is_some()
}

fn median_segment_length(points: &[Complex64]) -> f64 {
    let mut lens: Vec<f64> = points.windows(2).map(|w| (w[1] - w[0]).norm()).collect();
    if lens.is_empty() {
        return 0.0;
    }
    let mid = lens.len() / 2;
    *lens.select_nth_unstable_by(mid, |a, b| a.total_cmp(b)).1
}

fn median(mut v: Vec<f64>) -> f64 {
    let mid = v.len() / 2;
    *v.select_nth_unstable_by(mid, |a, b| a.total_cmp(b)).1
}

/// Parameters of an SLE/excursion avoidance experiment.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AvoidanceParams {
    pub kappa: f64,
    pub u: f64,
    pub n_samples: usize,
    pub n_steps: usize,
    pub seed: u64,
}

/// One row of a diagnostic sweep.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Diagnostic {
    pub t_max: f64,
    pub tol: f64,
    pub result: MCResult,
}

/// Outcome of [`mc_avoidance`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AvoidanceReport {
    pub params: AvoidanceParams,
    /// Estimate at the nominal horizon and tolerance.
    pub result: MCResult,
    pub phi_formula: f64,
    pub t_max: f64,
    pub tol: f64,
    /// Nominal tolerance, horizons `T_MAX_DIAGNOSTIC · y^2`.
    pub by_t_max: Vec<Diagnostic>,
    /// Nominal horizon, tolerances `TOL_FACTORS · tol`.
    pub by_tol: Vec<Diagnostic>,
    pub bessel_redraws: usize,
}

impl AvoidanceReport {
    /// Estimates do not increase with the horizon.
    pub fn t_max_monotone(&self) -> bool {
        self.by_t_max
            .windows(2)
            .all(|w| w[1].result.estimate <= w[0].result.estimate)
    }
}

struct Sample {
    trace: Trace,
    path: ExcursionPath,
}

fn draw(p: &AvoidanceParams, index: u64) -> Result<Sample> {
    let s = derive_seed(p.seed, index);
    let grid = loewner::power_grid(p.n_steps, T_MAX_FACTOR, GRID_POWER);
    let drv = loewner::sample_driving_on_grid(p.kappa, &grid, derive_seed(s, 0))?;
    let trace = loewner::trace_from_driving(&drv)?;
    let path = sample_excursion(
        p.u,
        1.0,
        EXCURSION_REFINEMENT * p.n_steps,
        derive_seed(s, 1),
    )?;
    Ok(Sample { trace, path })
}

/// Contact tolerance: half the larger of the median trace and median path
/// segment lengths, each taken as the median over a fixed pilot set.
fn pilot_tolerance(p: &AvoidanceParams) -> Result<f64> {
    let pilots = (0..PILOT_SAMPLES as u64)
        .into_par_iter()
        .map(|i| {
            let s = draw(p, u64::MAX - i)?;
            Ok((
                median_segment_length(&s.trace.points),
                median_segment_length(&s.path.points),
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    let trace_scale = median(pilots.iter().map(|v| v.0).collect());
    let path_scale = median(pilots.iter().map(|v| v.1).collect());
    Ok(0.5 * trace_scale.max(path_scale))
}

/// Monte Carlo estimate of the probability that SLE_κ from 0 to ∞ avoids a
/// Brownian excursion from `u` to 1. The trace runs to capacity
/// `T_MAX_FACTOR` on a [`GRID_POWER`] grid of `n_steps` steps; prefixes give
/// the horizon diagnostic. Excursions use `EXCURSION_REFINEMENT * n_steps`
/// steps.
pub fn mc_avoidance(
    kappa: f64,
    u: f64,
    n_samples: usize,
    n_steps: usize,
    seed: u64,
) -> Result<AvoidanceReport> {
    if !(kappa > 0.0 && kappa <= 4.0) {
        return Err(invalid("kappa", kappa));
    }
    if !(u > 0.0 && u < 1.0) {
        return Err(invalid("u", u));
    }
    if n_samples == 0 {
        return Err(invalid("n_samples", 0.0));
    }
    if n_steps < 100 {
        return Err(invalid("n_steps", n_steps as f64));
    }
    let params = AvoidanceParams {
        kappa,
        u,
        n_samples,
        n_steps,
        seed,
    };
    let tol = pilot_tolerance(&params)?;
    let tols: Vec<f64> = TOL_FACTORS.iter().map(|f| f * tol).collect();
    let t_max = T_MAX_FACTOR;

    // Per sample: first contact time at each tolerance (∞ if none).
    let contacts = (0..n_samples as u64)
        .into_par_iter()
        .map(|i| {
            let s = draw(&params, i)?;
            let hits = first_contacts(&s.trace, &s.path, &tols);
            let times: Vec<f64> = hits
                .iter()
                .map(|h| h.map_or(f64::INFINITY, |k| s.trace.times[k]))
                .collect();
            Ok((times, s.path.redraws))
        })
        .collect::<Result<Vec<_>>>()?;

    let nominal = TOL_FACTORS.iter().position(|&f| f == 1.0).unwrap_or(0);
    let count = |tol_index: usize, horizon: f64| {
        contacts
            .iter()
            .filter(|(times, _)| times[tol_index] > horizon)
            .count()
    };
    let make = |successes: usize, t: f64, tl: f64| {
        let record = [
            ("kappa", kappa),
            ("u", u),
            ("n_steps", n_steps as f64),
            ("t_max", t),
            ("tol", tl),
        ];
        MCResult::new(successes, n_samples, seed, &record)
    };
    let result = make(count(nominal, t_max), t_max, tol);
    let by_t_max = T_MAX_DIAGNOSTIC
        .iter()
        .map(|&t| Diagnostic {
            t_max: t,
            tol,
            result: make(count(nominal, t), t, tol),
        })
        .collect();
    let by_tol = tols
        .iter()
        .enumerate()
        .map(|(j, &tl)| Diagnostic {
            t_max,
            tol: tl,
            result: make(count(j, t_max), t_max, tl),
        })
        .collect();
    Ok(AvoidanceReport {
        params,
        result,
        phi_formula: observables::excursion_avoid_prob(u, kappa)?,
        t_max,
        tol,
        by_t_max,
        by_tol,
        bessel_redraws: contacts.iter().map(|c| c.1).sum(),
    })
}
