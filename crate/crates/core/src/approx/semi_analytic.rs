//! Trapezoid-rule treatment of the level sums for `t >> 1`.
//!
//! The particle-number constraint keeps the two lowest levels explicitly and
//! replaces the rest by an integral over `s = sqrt(b e)` cut off where the
//! exponent `alpha + s^2` reaches 2. On that range `1/(e^z - 1) ~ 1/z - 1/2`,
//! which integrates to an arctan (`alpha > 0`) or arctanh (`alpha < 0`).

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::roots;
use crate::spectrum::WellSide;

/// Below this `|alpha|` the arctan/arctanh quotient is replaced by its
/// power series.
pub const SERIES_SWITCH: f64 = 1e-6;

/// `A(sqrt(|alpha|) u) / sqrt(|alpha|)` with `A = atan` for positive and
/// `atanh` for negative `alpha`. Both branches share the series
/// `sum_j (-alpha)^j u^(2j+1) / (2j+1)`.
fn arc_quotient(alpha: f64, u: f64) -> f64 {
    if alpha.abs() < SERIES_SWITCH {
        let w = -alpha * u * u;
        return u * (1.0 + w * (1.0 / 3.0 + w * (1.0 / 5.0 + w * (1.0 / 7.0))));
    }
    let r = alpha.abs().sqrt();
    if u.is_infinite() {
        // only reachable for alpha = 2, where atan saturates
        return PI / (2.0 * r);
    }
    if alpha > 0.0 {
        (r * u).atan() / r
    } else {
        (r * u).atanh() / r
    }
}

/// Right-hand side of the approximate constraint: the particle number the
/// trapezoid treatment assigns to multiplier `alpha` at inverse temperature `beta`.
pub fn semi_analytic_constraint(side: WellSide, alpha: f64, beta: f64) -> Result<f64> {
    let x1 = alpha + beta * side.ground_energy();
    if !(x1 > 0.0) {
        return Err(Error::Domain(format!(
            "ground-state exponent must be positive, got {x1}"
        )));
    }
    if !(alpha <= 2.0) {
        return Err(Error::OutOfRange(format!("alpha = {alpha} exceeds 2")));
    }
    let e2 = side.energy_level_extended(2);
    let x2 = alpha + beta * e2;
    let s2 = (beta * e2).sqrt();
    let s_cut = (2.0 - alpha).sqrt();
    let root_beta = beta.sqrt();
    Ok(
        1.0 / x1 + 0.5 / x2 - 0.75 - (s_cut - s2) / (2.0 * root_beta)
            + (arc_quotient(alpha, 1.0 / s2) - arc_quotient(alpha, 1.0 / s_cut)) / root_beta,
    )
}

/// Solves the approximate constraint for `alpha` by Brent's method in the
/// shifted variable `alpha + b e_1`.
pub fn semi_analytic_alpha(side: WellSide, particle_count: u64, t: f64) -> Result<f64> {
    if particle_count == 0 || !(t > 0.0 && t.is_finite()) {
        return Err(Error::Domain(format!(
            "need N >= 1 and finite t > 0, got N = {particle_count}, t = {t}"
        )));
    }
    let n = particle_count as f64;
    let beta = 1.0 / t;
    let shift = beta * side.ground_energy();
    let g = |x: f64| match semi_analytic_constraint(side, x - shift, beta) {
        Ok(v) => v - n,
        Err(_) => f64::NAN,
    };

    let hi = 2.0 + shift;
    let g_hi = g(hi);
    if g_hi > 0.0 {
        return Err(Error::OutOfRange(format!(
            "approximate constraint needs alpha >= 2 at N = {n}, t = {t}"
        )));
    }
    let mut lo = hi;
    let mut halvings = 0;
    while !(g(lo) > 0.0) {
        lo *= 0.5;
        halvings += 1;
        if halvings > 1100 || lo == 0.0 {
            return Err(Error::NoBracket(format!(
                "approximate constraint never exceeds N = {n} at t = {t}"
            )));
        }
    }
    let root = roots::brent(g, lo, hi, 0.0, 300)?;
    Ok(root.x - shift)
}

/// One-well force `(-N alpha + 1/2 - sqrt(e_1)) t + (sqrt(pi)/96)(63 - 35 alpha) t^(3/2)`.
pub fn semi_analytic_f(side: WellSide, particle_count: u64, alpha: f64, t: f64) -> f64 {
    let n = particle_count as f64;
    (-n * alpha + 0.5 - side.ground_energy().sqrt()) * t
        + PI.sqrt() / 96.0 * (63.0 - 35.0 * alpha) * t.powf(1.5)
}

/// `(N t + (35/96) sqrt(pi) t^(3/2)) (alpha_plus - alpha_minus) + (sqrt(e1+) - sqrt(e1-)) t`.
pub fn semi_analytic_delta_f_from_alphas(
    particle_count: u64,
    t: f64,
    alpha_plus: f64,
    alpha_minus: f64,
) -> f64 {
    let n = particle_count as f64;
    let e1_gap = WellSide::Plus.ground_energy().sqrt() - WellSide::Minus.ground_energy().sqrt();
    (n * t + 35.0 / 96.0 * PI.sqrt() * t.powf(1.5)) * (alpha_plus - alpha_minus) + e1_gap * t
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SemiAnalyticForces {
    pub alpha_plus: f64,
    pub alpha_minus: f64,
    pub f_plus: f64,
    pub f_minus: f64,
    pub delta_f: f64,
}

pub fn semi_analytic_forces(particle_count: u64, t: f64) -> Result<SemiAnalyticForces> {
    let alpha_plus = semi_analytic_alpha(WellSide::Plus, particle_count, t)?;
    let alpha_minus = semi_analytic_alpha(WellSide::Minus, particle_count, t)?;
    Ok(SemiAnalyticForces {
        alpha_plus,
        alpha_minus,
        f_plus: semi_analytic_f(WellSide::Plus, particle_count, alpha_plus, t),
        f_minus: semi_analytic_f(WellSide::Minus, particle_count, alpha_minus, t),
        delta_f: semi_analytic_delta_f_from_alphas(particle_count, t, alpha_plus, alpha_minus),
    })
}

pub fn semi_analytic_delta_f(particle_count: u64, t: f64) -> Result<f64> {
    semi_analytic_forces(particle_count, t).map(|f| f.delta_f)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arc_quotient_branches_meet_at_zero() {
        for u in [0.3, 1.0, 6.0] {
            let right = arc_quotient(SERIES_SWITCH * 1.000_001, u);
            let left = arc_quotient(-SERIES_SWITCH * 1.000_001, u);
            let inner_r = arc_quotient(SERIES_SWITCH * 0.999_999, u);
            let inner_l = arc_quotient(-SERIES_SWITCH * 0.999_999, u);
            assert!((right - inner_r).abs() < 1e-12 * u.powi(3).max(1.0));
            assert!((left - inner_l).abs() < 1e-12 * u.powi(3).max(1.0));
            assert_eq!(arc_quotient(0.0, u), u);
        }
    }

    #[test]
    fn constraint_is_continuous_through_zero() {
        for side in WellSide::BOTH {
            for beta in [0.1, 0.01] {
                let left = semi_analytic_constraint(side, -1e-15, beta).unwrap();
                let right = semi_analytic_constraint(side, 1e-15, beta).unwrap();
                assert!((left - right).abs() < 1e-8, "{side} {beta}: {left} {right}");
                // no jump where the series hands over to atan/atanh
                let f = |a: f64| semi_analytic_constraint(side, a, beta).unwrap();
                for edge in [SERIES_SWITCH, -SERIES_SWITCH] {
                    let across = f(edge * 1.001) - f(edge * 0.999);
                    let beside = 0.5
                        * (f(edge * 1.003) - f(edge * 1.001) + f(edge * 0.999) - f(edge * 0.997));
                    assert!(
                        (across - beside).abs() < 1e-9,
                        "{side} {edge}: {across} vs {beside}"
                    );
                }
            }
        }
    }

    #[test]
    fn constraint_domain() {
        assert!(matches!(
            semi_analytic_constraint(WellSide::Plus, -0.3, 1.0),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            semi_analytic_constraint(WellSide::Plus, 2.5, 0.1),
            Err(Error::OutOfRange(_))
        ));
        assert!(semi_analytic_constraint(WellSide::Minus, 2.0, 0.1)
            .unwrap()
            .is_finite());
    }

    #[test]
    fn solves_with_small_residual() {
        for side in WellSide::BOTH {
            let alpha = semi_analytic_alpha(side, 100, 10.0).unwrap();
            assert!(alpha.is_finite());
            let r = semi_analytic_constraint(side, alpha, 0.1).unwrap() - 100.0;
            assert!(r.abs() < 1e-8, "{side}: residual {r}");
        }
    }

    #[test]
    fn rejects_invalid_inputs() {
        assert!(semi_analytic_alpha(WellSide::Plus, 0, 1.0).is_err());
        assert!(semi_analytic_alpha(WellSide::Plus, 10, -1.0).is_err());
    }

    #[test]
    fn per_well_force_values() {
        let c = 63.0 * PI.sqrt() / 96.0;
        assert!((semi_analytic_f(WellSide::Plus, 100, 0.0, 1.0) - c).abs() < 1e-15);
        assert!((semi_analytic_f(WellSide::Minus, 100, 0.0, 1.0) - (c - 0.5)).abs() < 1e-15);
        assert_eq!(semi_analytic_delta_f_from_alphas(100, 2.0, 0.3, 0.3), -1.0);
    }

    #[test]
    fn net_force_is_difference_of_well_forces() {
        let f = semi_analytic_forces(100, 50.0).unwrap();
        let diff = f.f_minus - f.f_plus;
        assert!((f.delta_f - diff).abs() < 1e-9 * f.delta_f.abs());
    }

    #[test]
    fn zero_temperature_limit_with_ground_state_alpha() {
        let n = 100u64;
        for t in [1e-4, 1e-6, 1e-8] {
            let ground = (1.0f64 / n as f64).ln_1p();
            let ap = ground - WellSide::Plus.ground_energy() / t;
            let am = ground - WellSide::Minus.ground_energy() / t;
            let d = semi_analytic_delta_f_from_alphas(n, t, ap, am);
            assert!((d - 75.0).abs() < 0.02, "t={t}: {d}");
        }
    }
}
