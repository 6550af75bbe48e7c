//! Gauss hypergeometric function `2F1(a, b; c; x)` for real parameters and
//! `x` in `[0, 1)`.
//!
//! The power series is summed directly for `x <= 1/2`. Beyond that the
//! solution of the hypergeometric equation is carried from `x = 1/2` towards
//! `x` by a chain of Taylor re-expansions, each step covering at most half
//! the remaining distance to the singular point at 1. This keeps every
//! expansion at convergence ratio `<= 1/2` and needs no special handling of
//! integer `c - a - b` (where the usual `1 - x` connection formulas pick up
//! logarithms).

use super::{gamma, is_nonpositive_integer, Result, SpecFunError};

const SERIES_EPS: f64 = 1e-17;
const MAX_SERIES_TERMS: usize = 200_000;
const MAX_TAYLOR_TERMS: usize = 4_000;
const SERIES_LIMIT: f64 = 0.5;

/// A function value together with its first two derivatives.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Jet {
    pub value: f64,
    pub d1: f64,
    pub d2: f64,
}

fn check_args(a: f64, b: f64, c: f64, x: f64) -> Result<()> {
    if !(a.is_finite() && b.is_finite() && c.is_finite()) {
        return Err(SpecFunError::Domain {
            function: "hyp2f1",
            value: f64::NAN,
            domain: "finite parameters",
        });
    }
    if is_nonpositive_integer(c) {
        return Err(SpecFunError::Pole {
            function: "hyp2f1",
            at: c,
        });
    }
    if x.is_nan() || x < 0.0 {
        return Err(SpecFunError::Domain {
            function: "hyp2f1",
            value: x,
            domain: "[0, 1)",
        });
    }
    if x >= 1.0 {
        return Err(SpecFunError::Divergence {
            function: "hyp2f1",
            detail: format!("argument x = {x} is not below 1"),
        });
    }
    Ok(())
}

/// `2F1(a, b; c; x)` for `0 <= x < 1`.
///
/// Terminating series (a or b in `{0, -1, -2, ...}`) are summed as the exact
/// polynomial for every `x` in range.
pub fn hyp2f1(a: f64, b: f64, c: f64, x: f64) -> Result<f64> {
    check_args(a, b, c, x)?;
    if a == 0.0 || b == 0.0 || x == 0.0 {
        return Ok(1.0);
    }
    if let Some(degree) = terminating_degree(a, b) {
        return Ok(polynomial(a, b, c, x, degree));
    }
    if x <= SERIES_LIMIT {
        return power_series(a, b, c, x);
    }
    continue_to(a, b, c, x).map(|(value, _)| value)
}

/// `d/dx 2F1(a, b; c; x) = (ab/c) 2F1(a+1, b+1; c+1; x)`.
pub fn hyp2f1_deriv(a: f64, b: f64, c: f64, x: f64) -> Result<f64> {
    check_args(a, b, c, x)?;
    if a == 0.0 || b == 0.0 {
        return Ok(0.0);
    }
    Ok(a * b / c * hyp2f1(a + 1.0, b + 1.0, c + 1.0, x)?)
}

/// Value, first and second derivative of `2F1(a, b; c; x)`.
pub fn hyp2f1_jet(a: f64, b: f64, c: f64, x: f64) -> Result<Jet> {
    let value = hyp2f1(a, b, c, x)?;
    let d1 = hyp2f1_deriv(a, b, c, x)?;
    let d2 = if a == 0.0 || b == 0.0 {
        0.0
    } else {
        a * b / c * hyp2f1_deriv(a + 1.0, b + 1.0, c + 1.0, x)?
    };
    Ok(Jet { value, d1, d2 })
}

/// Gauss summation `2F1(a, b; c; 1) = Γ(c)Γ(c-a-b) / (Γ(c-a)Γ(c-b))`,
/// valid when `c - a - b > 0`.
pub fn hyp2f1_at_1(a: f64, b: f64, c: f64) -> Result<f64> {
    if is_nonpositive_integer(c) {
        return Err(SpecFunError::Pole {
            function: "hyp2f1_at_1",
            at: c,
        });
    }
    let excess = c - a - b;
    if excess.is_nan() || excess <= 0.0 {
        return Err(SpecFunError::Divergence {
            function: "hyp2f1_at_1",
            detail: format!("c - a - b = {excess} must be positive"),
        });
    }
    if a == 0.0 || b == 0.0 {
        return Ok(1.0);
    }
    Ok(gamma(c)? * gamma(excess)? * recip_gamma(c - a)? * recip_gamma(c - b)?)
}

/// `1/Γ(x)`, which is entire: zero at the poles of Γ.
fn recip_gamma(x: f64) -> Result<f64> {
    if is_nonpositive_integer(x) {
        Ok(0.0)
    } else {
        Ok(1.0 / gamma(x)?)
    }
}

fn terminating_degree(a: f64, b: f64) -> Option<usize> {
    [a, b]
        .into_iter()
        .filter(|&p| is_nonpositive_integer(p))
        .map(|p| (-p) as usize)
        .min()
}

fn polynomial(a: f64, b: f64, c: f64, x: f64, degree: usize) -> f64 {
    let mut term = 1.0;
    let mut sum = 1.0;
    for n in 0..degree {
        let k = n as f64;
        term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * x;
        sum += term;
    }
    sum
}

fn power_series(a: f64, b: f64, c: f64, x: f64) -> Result<f64> {
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut quiet = 0;
    for n in 0..MAX_SERIES_TERMS {
        let k = n as f64;
        let ratio = (a + k) * (b + k) / ((c + k) * (k + 1.0)) * x;
        term *= ratio;
        sum += term;
        if !sum.is_finite() {
            break;
        }
        if ratio.abs() < 0.9 && term.abs() <= SERIES_EPS * sum.abs() {
            quiet += 1;
            if quiet == 2 {
                return Ok(sum);
            }
        } else {
            quiet = 0;
        }
    }
    Err(SpecFunError::NonConvergence {
        function: "hyp2f1",
        detail: format!("power series at ({a}, {b}; {c}; {x})"),
    })
}

/// Carries `(F, F')` from `x = 1/2` to `target` through Taylor expansions
/// of the hypergeometric equation
/// `x(1-x)F'' + (c - (a+b+1)x)F' - abF = 0`.
fn continue_to(a: f64, b: f64, c: f64, target: f64) -> Result<(f64, f64)> {
    let mut x0 = SERIES_LIMIT;
    let mut value = power_series(a, b, c, x0)?;
    let mut slope = a * b / c * power_series(a + 1.0, b + 1.0, c + 1.0, x0)?;
    while x0 < target {
        let h = (target - x0).min(0.5 * (1.0 - x0));
        (value, slope) = taylor_step(a, b, c, x0, value, slope, h)?;
        x0 = if target - x0 <= h { target } else { x0 + h };
    }
    Ok((value, slope))
}

fn taylor_step(a: f64, b: f64, c: f64, x0: f64, f0: f64, d0: f64, h: f64) -> Result<(f64, f64)> {
    // x(1-x) = p0 + p1 t - t^2 and c - (a+b+1)x = q0 + q1 t with t = x - x0.
    let p0 = x0 * (1.0 - x0);
    let p1 = 1.0 - 2.0 * x0;
    let q0 = c - (a + b + 1.0) * x0;
    let q1 = -(a + b + 1.0);
    let r = -a * b;
    let radius = 1.0 - x0;

    // Scaled coefficients z_n = y_n h^n of the local expansion sum y_n t^n,
    // with z_0 = f0 and z_1 = d0 h.
    let mut z_n = f0;
    let mut z_n1 = d0 * h;
    let mut value = f0 + z_n1;
    let mut slope = d0;
    let mut quiet = 0;
    for n in 0..MAX_TAYLOR_TERMS {
        let k = n as f64;
        let z_n2 = -((p1 * k + q0) * (k + 1.0) * h * z_n1
            + (-k * (k - 1.0) + q1 * k + r) * h * h * z_n)
            / (p0 * (k + 2.0) * (k + 1.0));
        let ds = (k + 2.0) * z_n2 / h;
        value += z_n2;
        slope += ds;
        if !(value.is_finite() && slope.is_finite()) {
            break;
        }
        let scale = value.abs() + slope.abs() * radius;
        if z_n2.abs() + ds.abs() * radius <= SERIES_EPS * scale {
            quiet += 1;
            if quiet == 3 {
                return Ok((value, slope));
            }
        } else {
            quiet = 0;
        }
        z_n = z_n1;
        z_n1 = z_n2;
    }
    Err(SpecFunError::NonConvergence {
        function: "hyp2f1",
        detail: format!("continuation step from {x0} by {h} at ({a}, {b}; {c})"),
    })
}
