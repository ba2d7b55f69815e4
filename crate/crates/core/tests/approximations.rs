mod common;

use std::f64::consts::PI;

use wallforce::approx::{
    bose_integral_closed, bose_integral_quadrature, delta_f_linear, delta_f_low_t,
    force_sum_direct, poisson_force_sum, semi_analytic_alpha, semi_analytic_constraint,
    semi_analytic_delta_f, theta_sum_direct, theta_sum_poisson, trapezoid_sum,
};
use wallforce::{net_force, solve_alpha, ThermoPoint, WellSide, DEFAULT_TOL};

fn exact(t: f64) -> f64 {
    net_force(ThermoPoint::new(100, t).unwrap(), DEFAULT_TOL)
        .unwrap()
        .delta_f
}

const KB_GRID: [f64; 5] = [1e-3, 1e-2, 1e-1, 1.0, 10.0];

#[test]
fn theta_sums_agree_after_resummation() {
    for side in WellSide::BOTH {
        for kb in KB_GRID {
            for (k, b) in [(1u32, kb), (4, kb / 4.0)] {
                let direct = theta_sum_direct(side, k, b);
                let resummed = theta_sum_poisson(side, k, b);
                assert!(
                    (direct - resummed).abs() <= 1e-12 * direct.max(1.0),
                    "{side} kb={kb}"
                );
            }
        }
    }
}

#[test]
fn force_sums_agree_after_resummation() {
    for side in WellSide::BOTH {
        for kb in KB_GRID {
            let direct = force_sum_direct(side, 1, kb);
            let resummed = poisson_force_sum(side, 1, kb);
            assert!(
                (direct - resummed).abs() <= 1e-10 * direct,
                "{side} kb={kb}: {direct} {resummed}"
            );
        }
    }
}

#[test]
fn low_t_formula_tracks_plateau() {
    for i in 1..=20 {
        let t = i as f64 / 20.0;
        let gap = (delta_f_low_t(100.0, t) - exact(t)).abs();
        assert!(gap <= 0.05, "t={t}: {gap}");
    }
}

#[test]
fn linear_formula_tracks_initial_decrease() {
    // the heuristic slope overshoots once the curve bends toward its minimum;
    // the gap reaches 0.05 N near t = 56
    for i in 0..=50 {
        let t = 5.0 + i as f64;
        let est = delta_f_linear(100.0, t);
        assert!(est.in_range);
        let gap = (est.value - exact(t)).abs();
        assert!(gap <= 5.0, "t={t}: {gap}");
    }
}

#[test]
fn semi_analytic_tracks_exact_force() {
    for t in common::log_grid(10.0, 160.0, 25) {
        let approx = semi_analytic_delta_f(100, t).unwrap();
        let reference = exact(t);
        assert!(
            ((approx - reference) / reference).abs() <= 0.05,
            "t={t}: {approx} vs {reference}"
        );
    }
    let approx_alpha = semi_analytic_alpha(WellSide::Plus, 100, 100.0).unwrap();
    let exact_alpha = solve_alpha(
        WellSide::Plus,
        ThermoPoint::new(100, 100.0).unwrap(),
        DEFAULT_TOL,
    )
    .unwrap()
    .alpha;
    assert!(((approx_alpha - exact_alpha) / exact_alpha).abs() < 0.05);
}

#[test]
fn semi_analytic_solutions_satisfy_their_constraint() {
    for t in [10.0, 50.0, 160.0] {
        for side in WellSide::BOTH {
            let alpha = semi_analytic_alpha(side, 100, t).unwrap();
            assert!(alpha < 2.0);
            let residual = semi_analytic_constraint(side, alpha, 1.0 / t).unwrap() - 100.0;
            assert!(residual.abs() < 1e-8, "{side} t={t}: {residual}");
        }
    }
}

#[test]
fn trapezoid_rule_approximates_particle_sum() {
    // sum over n of N_n with s_n = sqrt(b e_n) equally spaced by sqrt(b)
    let t = 400.0;
    let beta = 1.0 / t;
    let sol = solve_alpha(
        WellSide::Plus,
        ThermoPoint::new(100, t).unwrap(),
        DEFAULT_TOL,
    )
    .unwrap();
    // keep the ground level exact as the sum is steep there
    let n1 = 1.0 / sol.shifted_alpha.exp_m1();
    let s2 = (beta * 2.25).sqrt();
    let rest = trapezoid_sum(|s| 1.0 / (sol.alpha + s * s).exp_m1(), s2, beta.sqrt()).unwrap();
    assert!(((n1 + rest) - 100.0).abs() < 0.05 * 100.0, "{}", n1 + rest);
}

#[test]
fn bose_integral_quadrature_matches_series_oracles() {
    let zeta = common::zeta(1.5, 1000);
    assert!((zeta - 2.612_375_348_685_488).abs() < 1e-14);
    let at_zero = PI.sqrt() / 4.0 * zeta;
    assert!((bose_integral_quadrature(0.0).unwrap() - at_zero).abs() < 1e-10);
    for alpha in [0.05, 0.1, 0.3, 0.5, 2.0] {
        let series = common::bose_integral_series(alpha);
        let quad = bose_integral_quadrature(alpha).unwrap();
        assert!(
            (quad - series).abs() < 1e-10,
            "alpha={alpha}: {quad} vs {series}"
        );
    }
}

#[test]
fn closed_form_integral_within_one_percent_for_small_alpha() {
    // the truncated expansion drifts past 1 % near alpha = 0.33
    for i in 0..=30 {
        let alpha = i as f64 * 0.01;
        let quad = bose_integral_quadrature(alpha).unwrap();
        let rel = (bose_integral_closed(alpha) - quad).abs() / quad;
        assert!(rel <= 0.01, "alpha={alpha}: {rel}");
    }
    let quad = bose_integral_quadrature(0.5).unwrap();
    assert!((bose_integral_closed(0.5) - quad).abs() / quad > 0.03);
}
