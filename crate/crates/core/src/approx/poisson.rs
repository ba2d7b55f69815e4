//! Gaussian level sums and their Poisson-resummed (theta series) forms.
//!
//! Expanding each occupation in the fugacity `q = e^-alpha` gives
//! `N = sum_k q^k Theta(k b)` and `f = sum_k q^k Phi(k b)` with
//! `Theta(a) = sum_{n>=1} e^(-a e_n)` and `Phi(a) = sum_{n>=1} e_n e^(-a e_n)`.
//! For small `a` the direct sums converge slowly while the resummed series
//! converge after a handful of Fourier modes.

use std::f64::consts::PI;

use crate::spectrum::WellSide;

const SERIES_TOL: f64 = 1e-16;

fn scaled_beta(k: u32, beta: f64) -> f64 {
    assert!(k >= 1, "fugacity power must be at least 1");
    k as f64 * beta
}

/// `sum_{n>=1} exp(-k b e_n)` by direct summation.
pub fn theta_sum_direct(side: WellSide, k: u32, beta: f64) -> f64 {
    let a = scaled_beta(k, beta);
    let mut sum = 0.0;
    for n in 1i64.. {
        let term = (-a * side.energy_level_extended(n)).exp();
        sum += term;
        if term == 0.0 || term < SERIES_TOL * sum {
            break;
        }
    }
    sum
}

/// The same sum as `-sigma/2 + sqrt(pi/(4kb)) sum_m tau^m exp(-pi^2 m^2 / (kb))`.
pub fn theta_sum_poisson(side: WellSide, k: u32, beta: f64) -> f64 {
    let a = scaled_beta(k, beta);
    let tau = side.tau();
    let mut modes = 0.0;
    let mut sign = 1.0;
    for m in 1.. {
        let gauss = (-PI * PI * (m * m) as f64 / a).exp();
        sign *= tau;
        modes += sign * gauss;
        if gauss < SERIES_TOL {
            break;
        }
    }
    -0.5 * side.sigma() + (PI / (4.0 * a)).sqrt() * (1.0 + 2.0 * modes)
}

/// `sum_{n>=1} e_n exp(-k b e_n)` by direct summation.
pub fn force_sum_direct(side: WellSide, k: u32, beta: f64) -> f64 {
    let a = scaled_beta(k, beta);
    let mut sum = 0.0;
    for n in 1i64.. {
        let e = side.energy_level_extended(n);
        let term = e * (-a * e).exp();
        sum += term;
        // terms only decrease once a e_n > 1
        if a * e > 1.0 && (term == 0.0 || term < SERIES_TOL * sum) {
            break;
        }
    }
    sum
}

/// The same sum as `sqrt(pi/(16 k^3 b^3)) sum_m tau^m (1 - 2 pi^2 m^2/(kb)) exp(-pi^2 m^2/(kb))`.
pub fn poisson_force_sum(side: WellSide, k: u32, beta: f64) -> f64 {
    let a = scaled_beta(k, beta);
    let tau = side.tau();
    let mut modes = 0.0;
    let mut sign = 1.0;
    for m in 1.. {
        let y = PI * PI * (m * m) as f64 / a;
        let gauss = (-y).exp();
        sign *= tau;
        modes += sign * (1.0 - 2.0 * y) * gauss;
        if (1.0 + 2.0 * y) * gauss < SERIES_TOL {
            break;
        }
    }
    (PI / (16.0 * a * a * a)).sqrt() * (1.0 + 2.0 * modes)
}

/// `sum_k q^k f(k)` for a fugacity `0 < q < 1`, stopped once `q^k` is negligible.
fn fugacity_series<F: Fn(u32) -> f64>(q: f64, f: F) -> f64 {
    assert!(
        q > 0.0 && q < 1.0,
        "fugacity series needs 0 < q < 1, got {q}"
    );
    let mut sum = 0.0;
    let mut qk = 1.0;
    for k in 1u32.. {
        qk *= q;
        let term = qk * f(k);
        sum += term;
        if qk < SERIES_TOL * 1e-2 || term.abs() < SERIES_TOL * sum.abs() * 1e-2 {
            break;
        }
    }
    sum
}

/// Particle number `sum_k q^k Theta(k b)` from the resummed theta series.
pub fn fugacity_series_number(side: WellSide, q: f64, beta: f64) -> f64 {
    fugacity_series(q, |k| theta_sum_poisson(side, k, beta))
}

/// Force `sum_k q^k Phi(k b)` from the resummed series.
pub fn fugacity_series_force(side: WellSide, q: f64, beta: f64) -> f64 {
    fugacity_series(q, |k| poisson_force_sum(side, k, beta))
}

/// Fugacity through order `b` from the `k = 1, 2` terms of the resummed
/// constraint with only the `m = 0` modes kept.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FugacityExpansion {
    /// `2N sqrt(b/pi)`
    pub q_leading: f64,
    /// `2N (sigma - sqrt(2) N) b/pi`
    pub q_subleading: f64,
    pub beta: f64,
}

impl FugacityExpansion {
    pub fn q(&self) -> f64 {
        self.q_leading + self.q_subleading
    }

    /// The expansion only describes a physical fugacity when `0 < q < 1`.
    pub fn is_valid(&self) -> bool {
        let q = self.q();
        q > 0.0 && q < 1.0
    }
}

pub fn fugacity_expansion(side: WellSide, particle_count: u64, beta: f64) -> FugacityExpansion {
    let n = particle_count as f64;
    FugacityExpansion {
        q_leading: 2.0 * n * (beta / PI).sqrt(),
        q_subleading: 2.0 * n * (side.sigma() - 2f64.sqrt() * n) * beta / PI,
        beta,
    }
}
