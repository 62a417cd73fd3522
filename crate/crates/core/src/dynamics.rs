//! Floating point quadratic family `f_μ(x) = μx(1-x)`.
//!
//! Used to realise kneading words numerically: a superstable parameter is a
//! root of `g(μ) = f_μ^n(1/2) - 1/2` whose critical itinerary spells the word.

use crate::error::{Error, Result};
use crate::symbolic::{KneadingWord, Symbol};

pub const TURNING_POINT: f64 = 0.5;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadMap {
    mu: f64,
}

impl QuadMap {
    pub fn new(mu: f64) -> Result<Self> {
        if !(0.0..=4.0).contains(&mu) {
            return Err(Error::ParameterOutOfRange(mu));
        }
        Ok(QuadMap { mu })
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    pub fn apply(&self, x: f64) -> f64 {
        self.mu * x * (1.0 - x)
    }

    pub fn iterate(&self, x0: f64, k: usize) -> f64 {
        (0..k).fold(x0, |x, _| self.apply(x))
    }

    /// Symbols of `x0, f(x0), …`: `C` within `tol` of the turning point,
    /// otherwise `L` or `R` by side.
    pub fn numeric_itinerary(&self, x0: f64, depth: usize, tol: f64) -> Vec<Symbol> {
        let mut x = x0;
        let mut out = Vec::with_capacity(depth);
        for _ in 0..depth {
            out.push(classify(x, tol));
            x = self.apply(x);
        }
        out
    }

    /// Itinerary of `f(c)`, i.e. the kneading sequence.
    pub fn kneading_prefix(&self, depth: usize, tol: f64) -> Vec<Symbol> {
        self.numeric_itinerary(self.apply(TURNING_POINT), depth, tol)
    }
}

fn classify(x: f64, tol: f64) -> Symbol {
    if (x - TURNING_POINT).abs() <= tol {
        Symbol::C
    } else if x > TURNING_POINT {
        Symbol::R
    } else {
        Symbol::L
    }
}

pub fn iterate(map: &QuadMap, x0: f64, k: usize) -> f64 {
    map.iterate(x0, k)
}

pub fn numeric_itinerary(map: &QuadMap, x0: f64, depth: usize, tol: f64) -> Vec<Symbol> {
    map.numeric_itinerary(x0, depth, tol)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverOptions {
    /// Bracket width at which bisection stops.
    pub tol: f64,
    /// Spacing of the sign-change scan over `(2, 4]`.
    pub grid_step: f64,
    /// Distance from `c` that still counts as `C` in itineraries.
    pub c_tol: f64,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions {
            tol: 1e-12,
            grid_step: 1e-4,
            c_tol: 1e-9,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuperstableResult {
    pub mu: f64,
    /// `|f_μ^n(c) - c|`.
    pub residual: f64,
    pub word_confirmed: bool,
    /// Itinerary of `f(c)` at `mu`, `2n` symbols.
    pub itinerary: Vec<Symbol>,
    /// Further confirmed roots, normally empty.
    pub other_roots: Vec<f64>,
}

const SCAN_START: f64 = 2.0;
const SCAN_END: f64 = 4.0;

/// Scans `g(μ) = f_μ^n(c) - c` on a grid over `(2, 4]`, bisects every sign
/// change and keeps the roots whose critical itinerary reproduces the word
/// for `2n` symbols.
pub fn find_superstable_mu(w: &KneadingWord, options: &SolverOptions) -> Result<SuperstableResult> {
    let n = w.len();
    if n < 2 {
        return Err(Error::PeriodTooShort(n));
    }
    if !(options.tol > 0.0 && options.grid_step > 0.0 && options.c_tol > 0.0) {
        return Err(Error::Solver("tolerances and grid step must be positive".into()));
    }
    let g = |mu: f64| QuadMap { mu }.iterate(TURNING_POINT, n) - TURNING_POINT;
    let depth = 2 * n;
    let target: Vec<Symbol> = (0..depth).map(|k| w.symbols()[k % n]).collect();

    let steps = ((SCAN_END - SCAN_START) / options.grid_step).ceil() as usize;
    let grid = |k: usize| (SCAN_START + k as f64 * options.grid_step).min(SCAN_END);

    let mut brackets = 0usize;
    let mut confirmed: Vec<(f64, f64, Vec<Symbol>)> = Vec::new();
    let mut lo = grid(1);
    let mut g_lo = g(lo);
    for k in 2..=steps {
        let hi = grid(k);
        let g_hi = g(hi);
        let root = if g_lo == 0.0 {
            Some(lo)
        } else if g_lo.signum() != g_hi.signum() && g_hi != 0.0 {
            Some(bisect(g, lo, hi, g_lo, options.tol))
        } else {
            None
        };
        if let Some(mu) = root {
            brackets += 1;
            let itinerary = QuadMap { mu }.kneading_prefix(depth, options.c_tol);
            if itinerary == target {
                confirmed.push((mu, g(mu).abs(), itinerary));
            }
        }
        lo = hi;
        g_lo = g_hi;
    }
    if g_lo == 0.0 {
        let itinerary = QuadMap { mu: lo }.kneading_prefix(depth, options.c_tol);
        brackets += 1;
        if itinerary == target {
            confirmed.push((lo, 0.0, itinerary));
        }
    }

    if brackets == 0 {
        return Err(Error::Solver(format!("no sign change of f^{n}(c) - c found")));
    }
    let mut roots = confirmed.into_iter();
    let (mu, residual, itinerary) = roots.next().ok_or_else(|| {
        Error::Solver(format!(
            "none of {brackets} roots reproduces {w}; the word may be inadmissible or the grid too coarse"
        ))
    })?;
    Ok(SuperstableResult {
        mu,
        residual,
        word_confirmed: true,
        itinerary,
        other_roots: roots.map(|(mu, _, _)| mu).collect(),
    })
}

/// Spatial order of the critical orbit `z_i = f^i(c)`, `i = 1..n`, read off
/// the floating point values. Returned 1-based, so `x_k = z_{rho[k-1]}`.
pub fn numeric_orbit_order(map: &QuadMap, n: usize) -> Vec<usize> {
    let mut points = Vec::with_capacity(n);
    let mut x = TURNING_POINT;
    for _ in 0..n {
        x = map.apply(x);
        points.push(x);
    }
    let mut rho: Vec<usize> = (1..=n).collect();
    rho.sort_by(|&a, &b| points[a - 1].total_cmp(&points[b - 1]));
    rho
}

fn bisect(g: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, mut g_lo: f64, tol: f64) -> f64 {
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let g_mid = g(mid);
        if g_mid == 0.0 {
            return mid;
        }
        if g_mid.signum() == g_lo.signum() {
            lo = mid;
            g_lo = g_mid;
        } else {
            hi = mid;
        }
    }
    if g_lo.abs() <= g(hi).abs() {
        lo
    } else {
        hi
    }
}
