//! Brute-force references that share no code path with the library.
#![allow(dead_code)]

use std::f64::consts::PI;

/// Neumaier-compensated sum.
pub fn compensated_sum<I: IntoIterator<Item = f64>>(terms: I) -> f64 {
    let mut sum = 0.0f64;
    let mut carry = 0.0f64;
    for x in terms {
        let t = sum + x;
        if sum.abs() >= x.abs() {
            carry += (sum - t) + x;
        } else {
            carry += (x - t) + sum;
        }
        sum = t;
    }
    sum + carry
}

pub fn level(plus: bool, n: u64) -> f64 {
    let n = n as f64;
    if plus {
        (n - 0.5) * (n - 0.5)
    } else {
        n * n
    }
}

/// `sum_{n <= levels} weight(e_n) / (exp(alpha + b e_n) - 1)`, every level
/// evaluated, no early exit.
pub fn brute_sum(
    plus: bool,
    alpha: f64,
    beta: f64,
    levels: u64,
    weight: impl Fn(f64) -> f64,
) -> f64 {
    compensated_sum((1..=levels).map(|n| {
        let e = level(plus, n);
        weight(e) / (alpha + beta * e).exp_m1()
    }))
}

/// Multiplier by plain bisection on `alpha` over `levels` levels.
pub fn brute_alpha(plus: bool, n: f64, t: f64, levels: u64) -> f64 {
    let beta = 1.0 / t;
    let e1 = level(plus, 1);
    let mut lo = -beta * e1 + 1e-300_f64.max((1.0 / n).ln_1p() * 0.5);
    let mut hi = 50.0;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid == lo || mid == hi {
            break;
        }
        if brute_sum(plus, mid, beta, levels, |_| 1.0) > n {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

pub fn brute_delta_f(n: f64, t: f64, levels: u64) -> f64 {
    let beta = 1.0 / t;
    let ap = brute_alpha(true, n, t, levels);
    let am = brute_alpha(false, n, t, levels);
    brute_sum(false, am, beta, levels, |e| e) - brute_sum(true, ap, beta, levels, |e| e)
}

/// Riemann zeta at `s > 1` by Euler-Maclaurin with `k` explicit terms.
pub fn zeta(s: f64, k: u64) -> f64 {
    let head = compensated_sum((1..k).map(|j| (j as f64).powf(-s)));
    let kf = k as f64;
    head + kf.powf(1.0 - s) / (s - 1.0) + 0.5 * kf.powf(-s) + s * kf.powf(-s - 1.0) / 12.0
        - s * (s + 1.0) * (s + 2.0) * kf.powf(-s - 3.0) / 720.0
}

/// `integral_0^inf (alpha + s^2)/(e^(alpha + s^2) - 1) ds` for `alpha > 0` from
/// the geometric expansion of the Bose factor, integrated term by term.
pub fn bose_integral_series(alpha: f64) -> f64 {
    let rp = PI.sqrt();
    compensated_sum((1..200_000u64).map_while(|k| {
        let kf = k as f64;
        let decay = (-kf * alpha).exp();
        (decay > 1e-20)
            .then(|| decay * (alpha * rp / (2.0 * kf.sqrt()) + rp / (4.0 * kf.powf(1.5))))
    }))
}

pub fn log_grid(lo: f64, hi: f64, points: usize) -> Vec<f64> {
    (0..points)
        .map(|i| (lo.ln() + (hi.ln() - lo.ln()) * i as f64 / (points - 1) as f64).exp())
        .collect()
}
