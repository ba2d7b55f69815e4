//! Exact forces on the partition and temperature sweeps.
//!
//! In dimensionless units the force from one half-well is `f = sum_n e_n N_n`
//! and the net force on the partition is `delta_f = f_minus - f_plus`.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::approx;
use crate::error::{Error, Result};
use crate::occupancy::{self, AlphaSolution, ThermoPoint, TERM_TOL};
use crate::spectrum::WellSide;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ForcePair {
    pub f_plus: f64,
    pub f_minus: f64,
    pub delta_f: f64,
    pub alpha_plus: f64,
    pub alpha_minus: f64,
}

/// Force from one half-well at an already solved multiplier.
pub fn half_force_at(solution: &AlphaSolution) -> Result<f64> {
    let side = solution.side;
    occupancy::weighted_level_sum(side, solution.shifted_alpha, solution.beta, TERM_TOL, |n| {
        side.energy_level_extended(n)
    })
    .map(|s| s.value)
}

pub fn half_force(side: WellSide, point: ThermoPoint, tol: f64) -> Result<f64> {
    let solution = occupancy::solve_alpha(side, point, tol)?;
    half_force_at(&solution)
}

pub fn net_force(point: ThermoPoint, tol: f64) -> Result<ForcePair> {
    let plus = occupancy::solve_alpha(WellSide::Plus, point, tol)?;
    let minus = occupancy::solve_alpha(WellSide::Minus, point, tol)?;
    let f_plus = half_force_at(&plus)?;
    let f_minus = half_force_at(&minus)?;
    Ok(ForcePair {
        f_plus,
        f_minus,
        delta_f: f_minus - f_plus,
        alpha_plus: plus.alpha,
        alpha_minus: minus.alpha,
    })
}

/// Net force at `t = 0`, where every particle sits in its ground level.
pub fn net_force_zero_t(particle_count: u64) -> f64 {
    let n = particle_count as f64;
    n * (WellSide::Minus.ground_energy() - WellSide::Plus.ground_energy())
}

/// Evaluation route for one sweep row. Ordered by CSV name.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    HighT,
    Linear,
    LowT,
    Numeric,
    SemiAnalytic,
}

impl Method {
    pub const ALL: [Method; 5] = [
        Method::HighT,
        Method::Linear,
        Method::LowT,
        Method::Numeric,
        Method::SemiAnalytic,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::HighT => "high-t",
            Method::Linear => "linear",
            Method::LowT => "low-t",
            Method::Numeric => "numeric",
            Method::SemiAnalytic => "semi-analytic",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s.trim())
            .ok_or_else(|| {
                format!(
                    "unknown method '{s}' (expected one of numeric, low-t, linear, semi-analytic, high-t)"
                )
            })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GridScale {
    Linear,
    Log,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub particle_count: u64,
    pub t_min: f64,
    pub t_max: f64,
    pub grid_points: usize,
    pub grid_scale: GridScale,
    pub methods: Vec<Method>,
    pub tolerance: f64,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            particle_count: 100,
            t_min: 0.01,
            t_max: 160.0,
            grid_points: 400,
            grid_scale: GridScale::Log,
            methods: vec![Method::Numeric],
            tolerance: occupancy::DEFAULT_TOL,
        }
    }
}

impl SweepConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidSweep(msg));
        if self.particle_count == 0 {
            return bad("particle count must be at least 1".into());
        }
        if !(self.t_min > 0.0 && self.t_min.is_finite()) {
            return bad(format!("t_min must be positive, got {}", self.t_min));
        }
        if !(self.t_max >= self.t_min && self.t_max.is_finite()) {
            return bad(format!(
                "t_max must be finite and >= t_min, got {}",
                self.t_max
            ));
        }
        if self.grid_points == 0 {
            return bad("grid must have at least one point".into());
        }
        if self.methods.is_empty() {
            return bad("no methods selected".into());
        }
        if !(self.tolerance > 0.0) {
            return bad(format!(
                "tolerance must be positive, got {}",
                self.tolerance
            ));
        }
        Ok(())
    }

    /// Temperatures in increasing order; endpoints are hit exactly.
    pub fn grid(&self) -> Vec<f64> {
        let n = self.grid_points;
        if n == 1 {
            return vec![self.t_min];
        }
        let last = (n - 1) as f64;
        (0..n)
            .map(|i| {
                if i == 0 {
                    return self.t_min;
                }
                if i == n - 1 {
                    return self.t_max;
                }
                let frac = i as f64 / last;
                match self.grid_scale {
                    GridScale::Linear => self.t_min + frac * (self.t_max - self.t_min),
                    GridScale::Log => {
                        (self.t_min.ln() + frac * (self.t_max.ln() - self.t_min.ln())).exp()
                    }
                }
            })
            .collect()
    }
}

/// Values produced by one method at one temperature. Per-well fields are
/// present only for methods that resolve the two wells separately.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RowValues {
    pub alpha_plus: Option<f64>,
    pub alpha_minus: Option<f64>,
    pub f_plus: Option<f64>,
    pub f_minus: Option<f64>,
    pub delta_f: f64,
    /// False when the temperature lies outside the method's stated validity.
    pub in_range: bool,
}

impl RowValues {
    fn net_only(delta_f: f64, in_range: bool) -> Self {
        RowValues {
            alpha_plus: None,
            alpha_minus: None,
            f_plus: None,
            f_minus: None,
            delta_f,
            in_range,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub t: f64,
    pub method: Method,
    pub outcome: std::result::Result<RowValues, Error>,
}

pub fn evaluate(method: Method, particle_count: u64, t: f64, tol: f64) -> Result<RowValues> {
    let n = particle_count as f64;
    match method {
        Method::Numeric => {
            let pair = net_force(ThermoPoint::new(particle_count, t)?, tol)?;
            Ok(RowValues {
                alpha_plus: Some(pair.alpha_plus),
                alpha_minus: Some(pair.alpha_minus),
                f_plus: Some(pair.f_plus),
                f_minus: Some(pair.f_minus),
                delta_f: pair.delta_f,
                in_range: true,
            })
        }
        Method::LowT => Ok(RowValues::net_only(approx::delta_f_low_t(n, t), true)),
        Method::Linear => {
            let est = approx::delta_f_linear(n, t);
            Ok(RowValues::net_only(est.value, est.in_range))
        }
        Method::SemiAnalytic => {
            let sa = approx::semi_analytic_forces(particle_count, t)?;
            Ok(RowValues {
                alpha_plus: Some(sa.alpha_plus),
                alpha_minus: Some(sa.alpha_minus),
                f_plus: Some(sa.f_plus),
                f_minus: Some(sa.f_minus),
                delta_f: sa.delta_f,
                in_range: true,
            })
        }
        Method::HighT => Ok(RowValues::net_only(approx::delta_f_high_t(n, t), true)),
    }
}

/// Runs every selected method over the temperature grid.
///
/// Rows come back ordered by temperature, then by method name. A failure at
/// one point is recorded in that row and does not stop the sweep.
pub fn sweep(config: &SweepConfig) -> Result<Vec<SweepRow>> {
    config.validate()?;
    let mut methods = config.methods.clone();
    methods.sort();
    methods.dedup();
    let grid = config.grid();
    let rows: Vec<Vec<SweepRow>> = grid
        .par_iter()
        .map(|&t| {
            methods
                .iter()
                .map(|&method| SweepRow {
                    t,
                    method,
                    outcome: evaluate(method, config.particle_count, t, config.tolerance),
                })
                .collect()
        })
        .collect();
    Ok(rows.into_iter().flatten().collect())
}
