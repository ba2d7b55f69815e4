//! Bose-Einstein occupations and the particle-number constraint.
//!
//! The constraint is solved in the shifted variable `x = alpha + b * e_1`,
//! which is the exponent of the ground-state occupation. At low temperature
//! `alpha` is a small difference of two large numbers while `x` stays close
//! to `ln(1 + 1/N)`, so nothing is lost to cancellation.

use crate::error::{Error, Result};
use crate::roots;
use crate::spectrum::WellSide;

/// Relative cutoff for the level sums: a sum stops at the first term below
/// this fraction of the running total.
pub const TERM_TOL: f64 = 1e-16;

/// Default relative tolerance on the particle-number constraint.
pub const DEFAULT_TOL: f64 = 1e-12;

pub const MAX_ITERATIONS: usize = 200;

/// Exponents beyond this give an occupation below the smallest double.
pub const EXPONENT_CLAMP: f64 = 700.0;

/// Particle count and dimensionless temperature of one half-well.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThermoPoint {
    particle_count: u64,
    temperature: f64,
    beta: f64,
}

impl ThermoPoint {
    pub fn new(particle_count: u64, temperature: f64) -> Result<Self> {
        if particle_count == 0 {
            return Err(Error::Domain("particle count must be at least 1".into()));
        }
        if !(temperature > 0.0 && temperature.is_finite()) {
            return Err(Error::Domain(format!(
                "temperature must be positive and finite, got {temperature}"
            )));
        }
        Ok(ThermoPoint {
            particle_count,
            temperature,
            beta: 1.0 / temperature,
        })
    }

    pub fn particle_count(&self) -> u64 {
        self.particle_count
    }

    pub fn n(&self) -> f64 {
        self.particle_count as f64
    }

    pub fn temperature(&self) -> f64 {
        self.temperature
    }

    /// Inverse temperature `b = 1 / t`.
    pub fn beta(&self) -> f64 {
        self.beta
    }
}

/// The Lagrange multiplier fixing the particle number, with diagnostics.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AlphaSolution {
    pub side: WellSide,
    pub beta: f64,
    pub alpha: f64,
    /// `alpha + b * e_1`; strictly positive.
    pub shifted_alpha: f64,
    /// `|sum_n N_n - N|` at the returned multiplier.
    pub residual: f64,
    pub levels_used: usize,
    pub iterations: usize,
}

impl AlphaSolution {
    /// Fugacity `q = exp(-alpha)`.
    pub fn fugacity(&self) -> f64 {
        (-self.alpha).exp()
    }
}

/// Occupation at exponent `z = alpha + b * e_n`.
pub fn bose_occupation(z: f64) -> Result<f64> {
    if !(z > 0.0) {
        return Err(Error::Domain(format!(
            "occupation exponent must be positive, got {z}"
        )));
    }
    if z > EXPONENT_CLAMP {
        return Ok(0.0);
    }
    Ok(1.0 / z.exp_m1())
}

pub fn occupation(alpha: f64, beta: f64, energy: f64) -> Result<f64> {
    bose_occupation(alpha + beta * energy)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct LevelSum {
    pub value: f64,
    /// Derivative of the sum with respect to the shifted multiplier.
    pub derivative: f64,
    pub levels: usize,
}

/// `sum_n weight(n) / (exp(x + b (e_n - e_1)) - 1)` with the relative tail
/// cutoff. Terms are strictly decreasing in `n` for non-decreasing weights
/// growing slower than the occupations decay.
pub(crate) fn weighted_level_sum<W>(
    side: WellSide,
    shifted_alpha: f64,
    beta: f64,
    term_tol: f64,
    weight: W,
) -> Result<LevelSum>
where
    W: Fn(i64) -> f64,
{
    if !(shifted_alpha > 0.0) {
        return Err(Error::Domain(format!(
            "ground-state exponent must be positive, got {shifted_alpha}"
        )));
    }
    let mut value = 0.0;
    let mut derivative = 0.0;
    let mut n: i64 = 1;
    loop {
        let z = shifted_alpha + beta * side.excitation(n);
        if z > EXPONENT_CLAMP {
            break;
        }
        let occ = 1.0 / z.exp_m1();
        let term = weight(n) * occ;
        value += term;
        derivative -= weight(n) * occ * (1.0 + occ);
        if term < term_tol * value {
            break;
        }
        n += 1;
    }
    Ok(LevelSum {
        value,
        derivative,
        levels: n as usize,
    })
}

/// Total particle number `sum_n N_n` at multiplier `alpha`.
pub fn total_number(side: WellSide, alpha: f64, beta: f64, term_tol: f64) -> Result<f64> {
    let x = alpha + beta * side.ground_energy();
    weighted_level_sum(side, x, beta, term_tol, |_| 1.0).map(|s| s.value)
}

/// Solves `sum_n N_n = N` for the multiplier of one half-well.
///
/// The root is bracketed between `ln(1 + 1/N)`, where the ground state alone
/// already holds all `N` particles, and an upper end doubled until the
/// total drops below `N`. Safeguarded Newton then runs to `|residual| <= tol * N`.
pub fn solve_alpha(side: WellSide, point: ThermoPoint, tol: f64) -> Result<AlphaSolution> {
    if !(tol > 0.0) {
        return Err(Error::Domain(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let n = point.n();
    let beta = point.beta();
    let constraint =
        |x: f64| -> Result<LevelSum> { weighted_level_sum(side, x, beta, TERM_TOL, |_| 1.0) };

    let lo = (1.0 / n).ln_1p();
    let mut hi = 2.0 * lo;
    let mut grown = 0;
    while constraint(hi)?.value > n {
        hi *= 2.0;
        grown += 1;
        if grown > MAX_ITERATIONS {
            return Err(Error::NoBracket(format!(
                "particle number never fell below {n} up to x = {hi}"
            )));
        }
    }

    let mut levels = 0;
    let root = roots::newton_bisect(
        |x| match constraint(x) {
            Ok(s) => {
                levels = s.levels;
                (s.value - n, s.derivative)
            }
            Err(_) => (f64::NAN, f64::NAN),
        },
        lo,
        hi,
        tol * n,
        MAX_ITERATIONS,
    )?;
    let x = root.x;
    let check = constraint(x)?;
    levels = levels.max(check.levels);
    Ok(AlphaSolution {
        side,
        beta,
        alpha: x - beta * side.ground_energy(),
        shifted_alpha: x,
        residual: (check.value - n).abs(),
        levels_used: levels,
        iterations: root.iterations,
    })
}
