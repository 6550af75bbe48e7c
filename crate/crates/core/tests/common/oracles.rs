use std::collections::VecDeque;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use slelab::ising::SpinLattice;

/// Double-exponential (tanh-sinh) quadrature on `[lo, hi]` with step `h`
/// and truncation `|t| <= t_max`; tolerant of endpoint singularities.
pub fn tanh_sinh<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, h: f64, t_max: f64) -> f64 {
    let half = 0.5 * (hi - lo);
    let n = (t_max / h).ceil() as i64;
    let mut sum = 0.0;
    for k in -n..=n {
        let t = k as f64 * h;
        let s = std::f64::consts::FRAC_PI_2 * t.sinh();
        let w = std::f64::consts::FRAC_PI_2 * t.cosh() / s.cosh().powi(2);
        // Offset from the nearer endpoint, computed without cancellation.
        let gap = half * (-s.abs()).exp() / s.cosh();
        let x = if s < 0.0 { lo + gap } else { hi - gap };
        if x > lo && x < hi {
            sum += w * f(x);
        }
    }
    sum * h * half
}

/// Single-spin-flip Metropolis on a free-boundary lattice: mean |m| and
/// its batch-means standard error.
pub fn metropolis_abs_magnetization(l: usize, beta: f64, sweeps: usize, seed: u64) -> (f64, f64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut s: Vec<i32> = (0..l * l)
        .map(|_| if rng.random::<bool>() { 1 } else { -1 })
        .collect();
    let accept: Vec<f64> = (0..=8).map(|de| (-beta * de as f64).exp()).collect();
    let mut series = Vec::with_capacity(sweeps);
    for sweep in 0..sweeps + 2000 {
        for _ in 0..l * l {
            let i = rng.random_range(0..l * l);
            let (x, y) = (i % l, i / l);
            let mut h = 0;
            if x > 0 {
                h += s[i - 1];
            }
            if x + 1 < l {
                h += s[i + 1];
            }
            if y > 0 {
                h += s[i - l];
            }
            if y + 1 < l {
                h += s[i + l];
            }
            let de = 2 * s[i] * h;
            if de <= 0 || rng.random::<f64>() < accept[de as usize] {
                s[i] = -s[i];
            }
        }
        if sweep >= 2000 {
            series.push((s.iter().sum::<i32>() as f64 / (l * l) as f64).abs());
        }
    }
    batch_means(&series, 100)
}

pub fn batch_means(series: &[f64], batches: usize) -> (f64, f64) {
    let size = series.len() / batches;
    let means: Vec<f64> = series
        .chunks_exact(size)
        .map(|c| c.iter().sum::<f64>() / size as f64)
        .collect();
    let k = means.len() as f64;
    let mean = means.iter().sum::<f64>() / k;
    let var = means.iter().map(|m| (m - mean).powi(2)).sum::<f64>() / (k - 1.0);
    (mean, (var / k).sqrt())
}

/// Breadth-first connectivity with explicit neighbour lists. Diagonal steps
/// across the plaquette with lower-left corner `(px, py)` are open to `+`
/// when `plus_links[px + py (w - 1)]` holds and to `-` otherwise.
pub fn crosses(lat: &SpinLattice, sign: i8, plus_links: &[bool], horizontal: bool) -> bool {
    let (w, h) = (lat.width() as i64, lat.height() as i64);
    let inside = |x: i64, y: i64| x >= 0 && y >= 0 && x < w && y < h;
    let ok = |x: i64, y: i64| inside(x, y) && lat.spin(x as usize, y as usize) == sign;
    let diagonal_open = |x: i64, y: i64, nx: i64, ny: i64| {
        let link = plus_links[(x.min(nx) + y.min(ny) * (w - 1)) as usize];
        if sign > 0 {
            link
        } else {
            !link
        }
    };
    let mut seen = vec![vec![false; h as usize]; w as usize];
    let mut queue = VecDeque::new();
    let starts: Vec<(i64, i64)> = if horizontal {
        (0..h).map(|y| (0, y)).collect()
    } else {
        (1..w - 1).map(|x| (x, h - 1)).collect()
    };
    for (x, y) in starts {
        if ok(x, y) {
            seen[x as usize][y as usize] = true;
            queue.push_back((x, y));
        }
    }
    while let Some((x, y)) = queue.pop_front() {
        if (horizontal && x == w - 1) || (!horizontal && y == 0 && x > 0 && x < w - 1) {
            return true;
        }
        for dx in -1..=1i64 {
            for dy in -1..=1i64 {
                let (nx, ny) = (x + dx, y + dy);
                if (dx, dy) == (0, 0) || !ok(nx, ny) || seen[nx as usize][ny as usize] {
                    continue;
                }
                if dx != 0 && dy != 0 && !diagonal_open(x, y, nx, ny) {
                    continue;
                }
                seen[nx as usize][ny as usize] = true;
                queue.push_back((nx, ny));
            }
        }
    }
    false
}
