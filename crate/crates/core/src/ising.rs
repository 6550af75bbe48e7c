//! Critical Ising model on an `L × M` rectangle whose outer ring is frozen:
//! `+` on the left and right columns (corners included) and `-` on the top
//! and bottom rows. Swendsen-Wang updates; pairing of the four boundary
//! change points read off from spin-cluster crossings.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::harness::{derive_seed, MCResult};
use crate::observables::{self, ConfigType, ObservableError};

/// `β_c = ln(1 + √2) / 2`.
pub fn beta_critical() -> f64 {
    0.5 * (1.0 + 2f64.sqrt()).ln()
}

pub const MIN_SIDE: usize = 8;
/// Independent chains per estimate, fixed so results do not depend on the
/// thread count.
pub const N_CHAINS: usize = 8;
pub const DEFAULT_N_THERM: usize = 200;
pub const DEFAULT_N_DECORR: usize = 20;

#[derive(Debug, Error)]
pub enum IsingError {
    #[error("lattice side {0} is below the minimum of 8")]
    Size(usize),
    #[error("invalid {what}: {value}")]
    InvalidParameter { what: &'static str, value: f64 },
    #[error(transparent)]
    Observable(#[from] ObservableError),
}

pub type Result<T> = std::result::Result<T, IsingError>;

/// Spins on an `width × height` grid, row-major with row 0 at the bottom.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpinLattice {
    width: usize,
    height: usize,
    spins: Vec<i8>,
    frozen: Vec<bool>,
}

impl SpinLattice {
    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn index(&self, x: usize, y: usize) -> usize {
        y * self.width + x
    }

    pub fn spin(&self, x: usize, y: usize) -> i8 {
        self.spins[self.index(x, y)]
    }

    pub fn spins(&self) -> &[i8] {
        &self.spins
    }

    pub fn is_frozen(&self, x: usize, y: usize) -> bool {
        self.frozen[self.index(x, y)]
    }

    /// Sets a non-frozen spin; returns `false` (and does nothing) on a
    /// frozen site.
    pub fn set_spin(&mut self, x: usize, y: usize, s: i8) -> bool {
        let i = self.index(x, y);
        if self.frozen[i] {
            return false;
        }
        self.spins[i] = if s >= 0 { 1 } else { -1 };
        true
    }

    /// Lattice with no frozen sites and i.i.d. uniform spins.
    pub fn free(width: usize, height: usize, seed: u64) -> Result<Self> {
        check_size(width, height)?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let spins = (0..width * height).map(|_| random_spin(&mut rng)).collect();
        Ok(SpinLattice {
            width,
            height,
            spins,
            frozen: vec![false; width * height],
        })
    }

    /// Mean spin over all sites.
    pub fn magnetization(&self) -> f64 {
        self.spins.iter().map(|&s| s as f64).sum::<f64>() / self.spins.len() as f64
    }

    /// Mean spin over the non-frozen sites.
    pub fn interior_magnetization(&self) -> f64 {
        let (sum, n) = self
            .spins
            .iter()
            .zip(&self.frozen)
            .filter(|(_, &f)| !f)
            .fold((0.0, 0usize), |(s, n), (&v, _)| (s + v as f64, n + 1));
        sum / n.max(1) as f64
    }
}

fn check_size(width: usize, height: usize) -> Result<()> {
    for side in [width, height] {
        if side < MIN_SIDE {
            return Err(IsingError::Size(side));
        }
    }
    Ok(())
}

fn random_spin<R: Rng>(rng: &mut R) -> i8 {
    if rng.random::<bool>() {
        1
    } else {
        -1
    }
}

/// Rectangle of width `l` and height `m` with the frozen boundary ring and
/// i.i.d. uniform interior spins.
pub fn init_lattice(l: usize, m: usize, seed: u64) -> Result<SpinLattice> {
    check_size(l, m)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut spins = vec![0i8; l * m];
    let mut frozen = vec![false; l * m];
    for y in 0..m {
        for x in 0..l {
            let i = y * l + x;
            spins[i] = if x == 0 || x == l - 1 {
                frozen[i] = true;
                1
            } else if y == 0 || y == m - 1 {
                frozen[i] = true;
                -1
            } else {
                random_spin(&mut rng)
            };
        }
    }
    Ok(SpinLattice {
        width: l,
        height: m,
        spins,
        frozen,
    })
}

fn find(parent: &mut [u32], mut i: u32) -> u32 {
    while parent[i as usize] != i {
        let grand = parent[parent[i as usize] as usize];
        parent[i as usize] = grand;
        i = grand;
    }
    i
}

fn union(parent: &mut [u32], a: u32, b: u32) {
    let (ra, rb) = (find(parent, a), find(parent, b));
    if ra != rb {
        // Smaller index becomes the root.
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        parent[hi as usize] = lo;
    }
}

/// One Swendsen-Wang update. Bonds between equal neighbours open with
/// probability `1 - exp(-2β)`; clusters holding a frozen site keep their
/// sign, the others are resampled uniformly.
pub fn sw_update<R: Rng>(lattice: &mut SpinLattice, beta: f64, rng: &mut R) {
    let (w, h) = (lattice.width, lattice.height);
    let n = w * h;
    let p_open = -(-2.0 * beta).exp_m1();
    let mut parent: Vec<u32> = (0..n as u32).collect();
    let spins = &lattice.spins;
    for y in 0..h {
        for x in 0..w {
            let i = y * w + x;
            if x + 1 < w && spins[i] == spins[i + 1] && rng.random::<f64>() < p_open {
                union(&mut parent, i as u32, (i + 1) as u32);
            }
            if y + 1 < h && spins[i] == spins[i + w] && rng.random::<f64>() < p_open {
                union(&mut parent, i as u32, (i + w) as u32);
            }
        }
    }
    // Roots are the smallest index in their cluster, so a single forward
    // pass sees every root before its members.
    let mut new_spin = vec![0i8; n];
    let mut anchored = vec![false; n];
    for i in 0..n {
        if lattice.frozen[i] {
            let r = find(&mut parent, i as u32) as usize;
            anchored[r] = true;
        }
    }
    for i in 0..n {
        let r = find(&mut parent, i as u32) as usize;
        if r == i {
            new_spin[i] = if anchored[i] {
                lattice.spins[i]
            } else {
                random_spin(rng)
            };
        }
        lattice.spins[i] = new_spin[r];
    }
}

/// Which pair of opposite sides the `+` boundary arcs are joined through.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum PairingOutcome {
    /// A `+` path joins the left and right columns.
    Horizontal,
    /// Otherwise; then a `-` path joins top and bottom.
    Vertical,
}

impl PairingOutcome {
    /// Left side ↦ `(0, x)`, bottom ↦ `(x, 1)`, right ↦ `(1, ∞)`; a horizontal
    /// `+` crossing pairs `0 ↔ ∞` and `x ↔ 1`.
    pub fn config_type(self) -> ConfigType {
        match self {
            PairingOutcome::Horizontal => ConfigType::TypeI,
            PairingOutcome::Vertical => ConfigType::TypeII,
        }
    }
}

/// Index of the plaquette with lower-left site `(x, y)` in a link table of
/// length `(width - 1) * (height - 1)`.
pub fn plaquette_index(width: usize, x: usize, y: usize) -> usize {
    x + y * (width - 1)
}

/// Classification with `+` connectivity through nearest neighbours and,
/// across a plaquette, along a `+` diagonal whenever `plus_links` marks it.
/// Unmarked plaquettes give their diagonal to `-`, so exactly one of a
/// horizontal `+` crossing and a vertical `-` crossing exists.
pub fn classify_with(lattice: &SpinLattice, plus_links: &[bool]) -> PairingOutcome {
    let (w, h) = (lattice.width, lattice.height);
    assert_eq!(
        plus_links.len(),
        (w - 1) * (h - 1),
        "one link flag per plaquette"
    );
    let mut seen = vec![false; w * h];
    let mut stack: Vec<usize> = (0..h).map(|y| y * w).collect();
    for &i in &stack {
        seen[i] = true;
    }
    while let Some(i) = stack.pop() {
        let (x, y) = (i % w, i / w);
        if x == w - 1 {
            return PairingOutcome::Horizontal;
        }
        let mut visit = |j: usize| {
            if !seen[j] && lattice.spins[j] > 0 {
                seen[j] = true;
                stack.push(j);
            }
        };
        visit(i + 1);
        if x > 0 {
            visit(i - 1);
        }
        if y + 1 < h {
            visit(i + w);
        }
        if y > 0 {
            visit(i - w);
        }
        for (right, up) in [(true, true), (true, false), (false, true), (false, false)] {
            let (Some(nx), Some(ny)) = (
                if right { Some(x + 1) } else { x.checked_sub(1) },
                if up {
                    (y + 1 < h).then_some(y + 1)
                } else {
                    y.checked_sub(1)
                },
            ) else {
                continue;
            };
            if plus_links[plaquette_index(w, x.min(nx), y.min(ny))] {
                visit(nx + ny * w);
            }
        }
    }
    PairingOutcome::Vertical
}

/// [`classify_with`] with every diagonal given to `-`: `+` is 4-connected,
/// `-` is 8-connected.
pub fn classify(lattice: &SpinLattice) -> PairingOutcome {
    classify_with(
        lattice,
        &vec![false; (lattice.width - 1) * (lattice.height - 1)],
    )
}

/// Parameters of a pairing-probability experiment.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PairingParams {
    pub rho: f64,
    pub l: usize,
    pub m: usize,
    pub n_samples: usize,
    pub n_therm: usize,
    pub n_decorr: usize,
    pub beta: f64,
    pub seed: u64,
}

/// Outcome of [`mc_pairing_probability`]: the estimate of
/// `P{Horizontal}` and the κ = 3 prediction for the same rectangle.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PairingReport {
    pub params: PairingParams,
    pub result: MCResult,
    pub x_cross_ratio: f64,
    pub formula_value: f64,
}

/// Height for a width `l` and aspect ratio `rho`.
pub fn height_for(rho: f64, l: usize) -> usize {
    (rho * l as f64).round() as usize
}

fn run_chain(p: &PairingParams, chain: usize, n: usize) -> usize {
    let seed = derive_seed(p.seed, chain as u64);
    let mut lattice = init_lattice(p.l, p.m, derive_seed(seed, 0)).expect("size checked");
    let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(seed, 1));
    for _ in 0..p.n_therm {
        sw_update(&mut lattice, p.beta, &mut rng);
    }
    let mut links = vec![false; (p.l - 1) * (p.m - 1)];
    let mut hits = 0;
    for _ in 0..n {
        for _ in 0..p.n_decorr {
            sw_update(&mut lattice, p.beta, &mut rng);
        }
        links.iter_mut().for_each(|b| *b = rng.random());
        if classify_with(&lattice, &links) == PairingOutcome::Horizontal {
            hits += 1;
        }
    }
    hits
}

/// Estimates the probability of a horizontal `+` crossing on an
/// `L × round(rho L)` rectangle from [`N_CHAINS`] independent chains.
/// Each sample resolves its ambiguous plaquettes by fair coins, which keeps
/// the estimator symmetric under spin flip combined with a quarter turn.
pub fn mc_pairing_probability(
    rho: f64,
    l: usize,
    n_samples: usize,
    n_therm: usize,
    n_decorr: usize,
    beta: f64,
    seed: u64,
) -> Result<PairingReport> {
    if !(rho > 0.0 && rho.is_finite()) {
        return Err(IsingError::InvalidParameter {
            what: "rho",
            value: rho,
        });
    }
    if beta.is_nan() || beta <= 0.0 {
        return Err(IsingError::InvalidParameter {
            what: "beta",
            value: beta,
        });
    }
    if n_samples == 0 {
        return Err(IsingError::InvalidParameter {
            what: "n_samples",
            value: 0.0,
        });
    }
    if n_decorr == 0 {
        return Err(IsingError::InvalidParameter {
            what: "n_decorr",
            value: 0.0,
        });
    }
    let m = height_for(rho, l);
    check_size(l, m)?;
    let params = PairingParams {
        rho,
        l,
        m,
        n_samples,
        n_therm,
        n_decorr,
        beta,
        seed,
    };
    let successes: usize = (0..N_CHAINS)
        .into_par_iter()
        .map(|c| {
            let n = n_samples / N_CHAINS + usize::from(c < n_samples % N_CHAINS);
            run_chain(&params, c, n)
        })
        .sum();
    let x = observables::rect_cross_ratio(rho)?;
    let formula_value = observables::prob_type(x, 3.0, ConfigType::TypeI)?;
    let record = [
        ("rho", rho),
        ("L", l as f64),
        ("M", m as f64),
        ("beta", beta),
        ("n_therm", n_therm as f64),
        ("n_decorr", n_decorr as f64),
    ];
    Ok(PairingReport {
        params,
        result: MCResult::new(successes, n_samples, seed, &record),
        x_cross_ratio: x.value(),
        formula_value,
    })
}
