//! Analytic approximations to the net force and the summation identities
//! behind them.
//!
//! Four regimes are covered:
//!
//! * `t < 1`: only the first excited level matters ([`delta_f_low_t`]).
//! * `1 < t < 2N/3`: a heuristic linear decrease ([`delta_f_linear`]).
//! * `t >> 1`: sums replaced by trapezoid-rule integrals and the constraint
//!   solved in closed-ish form ([`semi_analytic_delta_f`]).
//! * `t >> N^2`: fugacity expansion after Poisson resummation
//!   ([`delta_f_high_t`]).
//!
//! How close each regime comes to the exact sums is quantified by the test
//! suites, not by any bound stated here.

mod poisson;
mod semi_analytic;
mod trapezoid;

use std::f64::consts::{E, PI};

pub use poisson::{
    force_sum_direct, fugacity_expansion, fugacity_series_force, fugacity_series_number,
    poisson_force_sum, theta_sum_direct, theta_sum_poisson, FugacityExpansion,
};
pub use semi_analytic::{
    semi_analytic_alpha, semi_analytic_constraint, semi_analytic_delta_f,
    semi_analytic_delta_f_from_alphas, semi_analytic_f, semi_analytic_forces, SemiAnalyticForces,
    SERIES_SWITCH,
};
pub use trapezoid::{bose_integral_closed, bose_integral_quadrature, trapezoid_sum};

/// Net force keeping only the `n = 2` correction above the zero-temperature
/// value. Accurate for `t < 1`.
pub fn delta_f_low_t(n: f64, t: f64) -> f64 {
    0.75 * n + 3.0 * (-3.0 / t).exp() - 2.0 * (-2.0 / t).exp()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinearEstimate {
    pub value: f64,
    /// False above `t = 2N/3`, where the estimate stops tracking the exact curve.
    pub in_range: bool,
}

/// Linear decrease `3N/4 - t / (e - 1)^2`.
///
/// The slope comes from the levels near `m` with `m^2 - m = t`, whose
/// Bose factors differ between the two wells by an order-one amount.
pub fn delta_f_linear(n: f64, t: f64) -> LinearEstimate {
    let em1 = E - 1.0;
    LinearEstimate {
        value: 0.75 * n - t / (em1 * em1),
        in_range: t <= 2.0 * n / 3.0,
    }
}

/// Leading high-temperature growth `(N/2) sqrt(t / pi)`.
pub fn delta_f_high_t(n: f64, t: f64) -> f64 {
    0.5 * n * (t / PI).sqrt()
}
