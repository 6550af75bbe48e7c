use std::fmt::Write as _;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{derive_seed, format_number as num, Config, HarnessError, Result};
use crate::excursion::{self, AvoidanceReport};
use crate::ising::{self, PairingReport};
use crate::mobius::Mobius;
use crate::observables::{self as obs, ConfigType, CrossRatioPoint};

pub const DEFAULT_SEED: u64 = 20_240_601;
pub const EQUIVALENCE_TOL: f64 = 1e-7;
pub const ODE_TOL: f64 = 1e-7;
pub const PDE_TOL: f64 = 1e-5;
pub const COVARIANCE_TOL: f64 = 1e-10;
pub const MC_ABS_TOL: f64 = 0.03;
const ODE_GRID_POINTS: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Command {
    Tables,
    Equivalence,
    OdeCheck,
    SleExcursion,
    Ising,
    CovarianceCheck,
}

impl Command {
    pub const ALL: [Command; 6] = [
        Command::Tables,
        Command::Equivalence,
        Command::OdeCheck,
        Command::SleExcursion,
        Command::Ising,
        Command::CovarianceCheck,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Command::Tables => "tables",
            Command::Equivalence => "equivalence",
            Command::OdeCheck => "ode-check",
            Command::SleExcursion => "sle-excursion",
            Command::Ising => "ising",
            Command::CovarianceCheck => "covariance-check",
        }
    }
}

impl FromStr for Command {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self> {
        Command::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| HarnessError::Config(format!("unknown command `{s}`")))
    }
}

/// What a command produced: a CSV table, a human-readable report, and
/// whether every check stayed within tolerance.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub csv: String,
    pub report: String,
    pub passed: bool,
}

impl Outcome {
    /// 0 when every check passed, 2 on a tolerance breach.
    pub fn exit_code(&self) -> i32 {
        if self.passed {
            0
        } else {
            2
        }
    }
}

/// Runs `command` with the parameters in `config`.
pub fn run(command: Command, config: &Config) -> Result<Outcome> {
    match command {
        Command::Tables => tables(config),
        Command::Equivalence => equivalence(config),
        Command::OdeCheck => ode_check(config),
        Command::SleExcursion => sle_excursion(config),
        Command::Ising => ising_cmd(config),
        Command::CovarianceCheck => covariance_check(config),
    }
}

struct Table {
    writer: csv::Writer<Vec<u8>>,
}

impl Table {
    fn new(header: &[&str]) -> Result<Self> {
        let mut writer = csv::Writer::from_writer(Vec::new());
        writer.write_record(header).map_err(csv_err)?;
        Ok(Table { writer })
    }

    fn row(&mut self, fields: &[String]) -> Result<()> {
        self.writer.write_record(fields).map_err(csv_err)
    }

    fn finish(self) -> Result<String> {
        let bytes = self
            .writer
            .into_inner()
            .map_err(|e| HarnessError::Io(e.into_error()))?;
        Ok(String::from_utf8(bytes).expect("CSV fields are UTF-8"))
    }
}

fn csv_err(e: csv::Error) -> HarnessError {
    HarnessError::Io(e.into())
}

/// `{0.05, 0.10, ..., 0.95}` style grid: `j / n` for `j = 1..n`.
fn unit_grid(n: usize) -> Vec<f64> {
    (1..n).map(|j| j as f64 / n as f64).collect()
}

fn point(x: f64, context: &str) -> Result<CrossRatioPoint> {
    CrossRatioPoint::new(x).map_err(|e| HarnessError::Config(format!("{context}: {e}")))
}

fn tables(config: &Config) -> Result<Outcome> {
    config.check_keys(&["kappa", "x_grid", "formal", "seed"])?;
    let formal = config.bool_or("formal", false)?;
    let kappa = config.f64_or("kappa", 3.0)?;
    let upper = if formal { 8.0 } else { 4.0 };
    if !(kappa > 0.0 && (kappa < upper || (!formal && kappa == 4.0))) {
        return Err(HarnessError::Config(format!(
            "kappa = {kappa} outside {} (use --formal for 4 < kappa < 8)",
            if formal { "(0, 8)" } else { "(0, 4]" }
        )));
    }
    let grid = config.f64_list_or("x_grid", &unit_grid(20))?;
    let mut table = Table::new(&["x", "P_I", "P_II", "phi"])?;
    for &x in &grid {
        let ctx = format!("row x = {x}");
        let p = point(x, &ctx)?;
        let prob = |which| {
            if kappa > 4.0 {
                obs::prob_type_formal(p, kappa, which)
            } else {
                obs::prob_type(p, kappa, which)
            }
        };
        let p1 = prob(ConfigType::TypeI).map_err(|e| HarnessError::numeric(&ctx, e))?;
        let p2 = prob(ConfigType::TypeII).map_err(|e| HarnessError::numeric(&ctx, e))?;
        let phi = if kappa <= 4.0 {
            num(obs::excursion_avoid_prob(x, kappa).map_err(|e| HarnessError::numeric(&ctx, e))?)
        } else {
            String::new()
        };
        table.row(&[num(x), num(p1), num(p2), phi])?;
    }
    let mut report = format!("tables: kappa = {kappa}, {} rows\n", grid.len());
    if kappa > 4.0 {
        report.push_str("formal evaluation above kappa = 4; phi left empty\n");
    }
    Ok(Outcome {
        csv: table.finish()?,
        report,
        passed: true,
    })
}

fn equivalence(config: &Config) -> Result<Outcome> {
    config.check_keys(&["x_grid", "p2_offset", "tolerance", "seed"])?;
    let grid = config.f64_list_or("x_grid", &unit_grid(100))?;
    // Fault injection for testing the failure path.
    let offset = config.f64_or("p2_offset", 0.0)?;
    let tol = config.f64_or("tolerance", EQUIVALENCE_TOL)?;
    let mut table = Table::new(&["x", "P1", "P2", "P3", "max_pair_diff"])?;
    let mut worst: (f64, f64) = (0.0, f64::NAN);
    for &x in &grid {
        let ctx = format!("row x = {x}");
        let p = point(x, &ctx)?;
        let wrap = |e| HarnessError::numeric(&ctx, e);
        let p1 = obs::ising_p1(p).map_err(wrap)?;
        let p2 = obs::ising_p2(p).map_err(wrap)? + offset;
        let p3 = obs::ising_p3(p).map_err(wrap)?;
        let d = (p1 - p2).abs().max((p1 - p3).abs()).max((p2 - p3).abs());
        if d > worst.0 || worst.1.is_nan() {
            worst = (d, x);
        }
        table.row(&[num(x), num(p1), num(p2), num(p3), num(d)])?;
    }
    let passed = worst.0 <= tol;
    let report = format!(
        "equivalence: max |Pi - Pj| = {} at x = {} over {} points (tolerance {}): {}\n",
        num(worst.0),
        num(worst.1),
        grid.len(),
        num(tol),
        verdict(passed)
    );
    Ok(Outcome {
        csv: table.finish()?,
        report,
        passed,
    })
}

fn verdict(passed: bool) -> &'static str {
    if passed {
        "PASS"
    } else {
        "FAIL"
    }
}

/// One residual evaluation of the ODE/PDE suite.
#[derive(Debug, Clone, PartialEq)]
pub struct ResidualRow {
    pub equation: &'static str,
    pub kappa: f64,
    pub u: f64,
    pub residual: f64,
    pub scale: f64,
    pub tolerance: f64,
}

impl ResidualRow {
    pub fn passed(&self) -> bool {
        self.residual.abs() <= self.tolerance * self.scale
    }
}

/// Residuals of all five equations on the interior grid `j/21`,
/// `j = 1..20`; the κ = 3 equation in `z` is evaluated once.
pub fn residual_suite(kappas: &[f64]) -> obs::Result<Vec<ResidualRow>> {
    let grid: Vec<f64> = (1..=ODE_GRID_POINTS)
        .map(|j| j as f64 / (ODE_GRID_POINTS + 1) as f64)
        .collect();
    let mut rows = Vec::new();
    let mut push = |equation, kappa, u, residual, scale: f64, tolerance| {
        rows.push(ResidualRow {
            equation,
            kappa,
            u,
            residual,
            scale: scale.abs().max(1.0),
            tolerance,
        })
    };
    for &u in &grid {
        push(
            "saint",
            3.0,
            u,
            obs::ode_residual_saint(u)?,
            obs::tilde_h2(1.0 - u, 2.0 / 3.0)?,
            ODE_TOL,
        );
    }
    for &kappa in kappas {
        let a = 2.0 / kappa;
        for &u in &grid {
            push(
                "psi",
                kappa,
                u,
                obs::ode_residual_psi(u, a)?,
                obs::tilde_h2(u, a)?,
                ODE_TOL,
            );
        }
        for &u in &grid {
            let phi = obs::excursion_avoid_prob(u, kappa)?;
            push("phi", kappa, u, obs::ode_residual_phi(u, a)?, phi, ODE_TOL);
            let substituted = phi / u * (1.0 - u).powf(1.0 - 4.0 * a);
            push(
                "phi_substituted",
                kappa,
                u,
                obs::ode_residual_phi_substituted(u, a)?,
                substituted,
                ODE_TOL,
            );
        }
        for &u in &grid {
            push(
                "pde",
                kappa,
                u,
                obs::pde_residual_phi(u, 1.0, kappa)?,
                1.0,
                PDE_TOL,
            );
        }
    }
    Ok(rows)
}

fn ode_check(config: &Config) -> Result<Outcome> {
    config.check_keys(&["kappa", "seed"])?;
    let kappas = config.f64_list_or("kappa", &[1.0, 2.0, 3.0, 4.0])?;
    if let Some(k) = kappas.iter().find(|&&k| !(k > 0.0 && k <= 4.0)) {
        return Err(HarnessError::Config(format!("kappa = {k} outside (0, 4]")));
    }
    let rows = residual_suite(&kappas).map_err(|e| HarnessError::numeric("residual suite", e))?;
    let mut table = Table::new(&[
        "equation",
        "kappa",
        "u",
        "residual",
        "scale",
        "tolerance",
        "pass",
    ])?;
    let mut report = String::from("ode-check:\n");
    let mut passed = true;
    for name in ["saint", "psi", "phi", "phi_substituted", "pde"] {
        let of: Vec<&ResidualRow> = rows.iter().filter(|r| r.equation == name).collect();
        let worst = of
            .iter()
            .map(|r| r.residual.abs() / r.scale)
            .fold(0.0, f64::max);
        let ok = of.iter().all(|r| r.passed());
        passed &= ok;
        let _ = writeln!(
            report,
            "  {name:<16} {:>3} points  max scaled |residual| = {}  {}",
            of.len(),
            num(worst),
            verdict(ok)
        );
    }
    for r in &rows {
        table.row(&[
            r.equation.to_string(),
            num(r.kappa),
            num(r.u),
            num(r.residual),
            num(r.scale),
            num(r.tolerance),
            r.passed().to_string(),
        ])?;
    }
    Ok(Outcome {
        csv: table.finish()?,
        report,
        passed,
    })
}

/// `|estimate - target| <= max(abs_tol, 3 stderr)`.
pub fn within_mc_tolerance(estimate: f64, stderr: f64, target: f64, abs_tol: f64) -> bool {
    (estimate - target).abs() <= abs_tol.max(3.0 * stderr)
}

fn sle_excursion(config: &Config) -> Result<Outcome> {
    config.check_keys(&[
        "kappa",
        "u",
        "n_samples",
        "n_steps",
        "seed",
        "abs_tolerance",
    ])?;
    let kappas = config.f64_list_or("kappa", &[2.0])?;
    let us = config.f64_list_or("u", &[0.5])?;
    let n_samples = config.usize_or("n_samples", 2000)?;
    let n_steps = config.usize_or("n_steps", 2000)?;
    let seed = config.u64_or("seed", DEFAULT_SEED)?;
    let abs_tol = config.f64_or("abs_tolerance", MC_ABS_TOL)?;
    for &k in &kappas {
        if !(k > 0.0 && k <= 4.0) {
            return Err(HarnessError::Config(format!("kappa = {k} outside (0, 4]")));
        }
    }
    for &u in &us {
        if !(u > 0.0 && u < 1.0) {
            return Err(HarnessError::Config(format!("u = {u} outside (0, 1)")));
        }
    }
    if n_samples == 0 || n_steps < 100 {
        return Err(HarnessError::Config(
            "need n_samples >= 1 and n_steps >= 100".into(),
        ));
    }
    let mut table = Table::new(&[
        "kappa",
        "u",
        "n_samples",
        "estimate",
        "stderr",
        "ci_lo",
        "ci_hi",
        "phi_formula",
        "t_max",
        "tol",
    ])?;
    let mut report = String::from("sle-excursion:\n");
    let mut passed = true;
    let mut task = 0u64;
    for &kappa in &kappas {
        for &u in &us {
            let ctx = format!("kappa = {kappa}, u = {u}");
            let rep =
                excursion::mc_avoidance(kappa, u, n_samples, n_steps, derive_seed(seed, task))
                    .map_err(|e| HarnessError::numeric(&ctx, e))?;
            task += 1;
            let r = &rep.result;
            let ok = within_mc_tolerance(r.estimate, r.stderr, rep.phi_formula, abs_tol)
                && rep.t_max_monotone();
            passed &= ok;
            table.row(&[
                num(kappa),
                num(u),
                r.n_samples.to_string(),
                num(r.estimate),
                num(r.stderr),
                num(r.ci_lo),
                num(r.ci_hi),
                num(rep.phi_formula),
                num(rep.t_max),
                num(rep.tol),
            ])?;
            report.push_str(&avoidance_summary(&rep, ok));
        }
    }
    Ok(Outcome {
        csv: table.finish()?,
        report,
        passed,
    })
}

/// Text block with the estimate and both diagnostics.
pub fn avoidance_summary(rep: &AvoidanceReport, ok: bool) -> String {
    let r = &rep.result;
    let mut s = format!(
        "  kappa = {}, u = {}: estimate {} ± {} (phi = {}, diff {}) {}\n",
        num(rep.params.kappa),
        num(rep.params.u),
        num(r.estimate),
        num(r.stderr),
        num(rep.phi_formula),
        num(r.estimate - rep.phi_formula),
        verdict(ok)
    );
    let by_t: Vec<String> = rep
        .by_t_max
        .iter()
        .map(|d| format!("t_max {} -> {}", num(d.t_max), num(d.result.estimate)))
        .collect();
    let _ = writeln!(
        s,
        "    horizon: {} (non-increasing: {})",
        by_t.join(", "),
        rep.t_max_monotone()
    );
    let by_tol: Vec<String> = rep
        .by_tol
        .iter()
        .map(|d| format!("tol {} -> {}", num(d.tol), num(d.result.estimate)))
        .collect();
    let _ = writeln!(s, "    tolerance: {}", by_tol.join(", "));
    let _ = writeln!(s, "    bessel redraws: {}", rep.bessel_redraws);
    s
}

fn ising_cmd(config: &Config) -> Result<Outcome> {
    config.check_keys(&[
        "rho",
        "L",
        "n_samples",
        "n_therm",
        "n_decorr",
        "beta",
        "seed",
        "abs_tolerance",
    ])?;
    let rhos = config.f64_list_or("rho", &[1.0])?;
    let ls = config.usize_list_or("L", &[64])?;
    let n_samples = config.usize_or("n_samples", 10_000)?;
    let n_therm = config.usize_or("n_therm", ising::DEFAULT_N_THERM)?;
    let n_decorr = config.usize_or("n_decorr", ising::DEFAULT_N_DECORR)?;
    let beta = config.f64_or("beta", ising::beta_critical())?;
    let seed = config.u64_or("seed", DEFAULT_SEED)?;
    let abs_tol = config.f64_or("abs_tolerance", MC_ABS_TOL)?;
    if beta.is_nan() || beta <= 0.0 || n_samples == 0 || n_decorr == 0 {
        return Err(HarnessError::Config(
            "need beta > 0, n_samples >= 1, n_decorr >= 1".into(),
        ));
    }
    for &rho in &rhos {
        if rho.is_nan() || rho <= 0.0 {
            return Err(HarnessError::Config(format!(
                "rho = {rho} must be positive"
            )));
        }
        for &l in &ls {
            let m = ising::height_for(rho, l);
            if l < ising::MIN_SIDE || m < ising::MIN_SIDE {
                return Err(HarnessError::Config(format!(
                    "lattice {l} x {m} is below 8 x 8"
                )));
            }
        }
    }
    let mut table = Table::new(&[
        "rho",
        "L",
        "M",
        "n_samples",
        "estimate",
        "stderr",
        "ci_lo",
        "ci_hi",
        "formula_value",
        "x_cross_ratio",
        "beta",
    ])?;
    let mut report = String::from("ising:\n");
    let mut passed = true;
    let mut task = 0u64;
    for &rho in &rhos {
        for &l in &ls {
            let ctx = format!("rho = {rho}, L = {l}");
            let rep = ising::mc_pairing_probability(
                rho,
                l,
                n_samples,
                n_therm,
                n_decorr,
                beta,
                derive_seed(seed, task),
            )
            .map_err(|e| HarnessError::numeric(&ctx, e))?;
            task += 1;
            let ok = within_mc_tolerance(
                rep.result.estimate,
                rep.result.stderr,
                rep.formula_value,
                abs_tol,
            );
            passed &= ok;
            table.row(&pairing_row(&rep))?;
            let _ = writeln!(
                report,
                "  rho = {}, {} x {}: estimate {} ± {} (formula {}, diff {}) {}",
                num(rho),
                l,
                rep.params.m,
                num(rep.result.estimate),
                num(rep.result.stderr),
                num(rep.formula_value),
                num(rep.result.estimate - rep.formula_value),
                verdict(ok)
            );
        }
    }
    Ok(Outcome {
        csv: table.finish()?,
        report,
        passed,
    })
}

fn pairing_row(rep: &PairingReport) -> Vec<String> {
    let r = &rep.result;
    vec![
        num(rep.params.rho),
        rep.params.l.to_string(),
        rep.params.m.to_string(),
        r.n_samples.to_string(),
        num(r.estimate),
        num(r.stderr),
        num(r.ci_lo),
        num(r.ci_hi),
        num(rep.formula_value),
        num(rep.x_cross_ratio),
        num(rep.params.beta),
    ]
}

/// A random automorphism of the half plane and two real points away from
/// its pole.
pub fn random_covariance_case<R: Rng>(rng: &mut R) -> (Mobius, f64, f64) {
    loop {
        let m = Mobius::new(
            rng.random_range(0.2..5.0),
            rng.random_range(-3.0..3.0),
            rng.random_range(-1.0..1.0),
            rng.random_range(0.2..5.0),
        );
        let Some(m) = m else { continue };
        let x: f64 = rng.random_range(-3.0..3.0);
        let y: f64 = rng.random_range(-3.0..3.0);
        let far = |p: f64| (m.c * p + m.d).abs() > 0.1;
        if (x - y).abs() > 1e-3 && far(x) && far(y) {
            return (m, x.min(y), x.max(y));
        }
    }
}

fn covariance_check(config: &Config) -> Result<Outcome> {
    config.check_keys(&["n_maps", "seed", "tolerance"])?;
    let n_maps = config.usize_or("n_maps", 50)?;
    let seed = config.u64_or("seed", DEFAULT_SEED)?;
    let tol = config.f64_or("tolerance", COVARIANCE_TOL)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut table = Table::new(&[
        "index",
        "a",
        "b",
        "c",
        "d",
        "x",
        "y",
        "b_exponent",
        "defect",
    ])?;
    let mut worst: f64 = 0.0;
    for i in 0..n_maps {
        let (m, x, y) = random_covariance_case(&mut rng);
        let kappa = rng.random_range(0.5..=4.0);
        let b = obs::params_from_kappa(kappa)
            .map_err(|e| HarnessError::numeric(format!("map {i}"), e))?
            .b;
        let defect = obs::kernel_covariance_defect(x, y, b, &m)
            .map_err(|e| HarnessError::numeric(format!("map {i}"), e))?;
        worst = worst.max(defect);
        table.row(&[
            i.to_string(),
            num(m.a),
            num(m.b),
            num(m.c),
            num(m.d),
            num(x),
            num(y),
            num(b),
            num(defect),
        ])?;
    }
    let passed = worst <= tol;
    let report = format!(
        "covariance-check: {n_maps} maps, max relative defect {} (tolerance {}): {}\n",
        num(worst),
        num(tol),
        verdict(passed)
    );
    Ok(Outcome {
        csv: table.finish()?,
        report,
        passed,
    })
}
