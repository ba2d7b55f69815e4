use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::quadrature;

/// `sum_n y(s_n) ~ y(s_1)/2 + (1/ds) * integral_{s_1}^inf y(s) ds` for
/// equidistant `s_n` with spacing `ds`.
pub fn trapezoid_sum<F: Fn(f64) -> f64>(y: F, s1: f64, ds: f64) -> Result<f64> {
    if !(ds > 0.0) {
        return Err(Error::Domain(format!("spacing must be positive, got {ds}")));
    }
    let head = 0.5 * y(s1);
    let integral = quadrature::integrate_to_infinity(&y, s1, 1e-14, 1e-13)?;
    Ok(head + integral / ds)
}

/// `z / (e^z - 1)`, continuous through `z = 0`.
fn z_over_expm1(z: f64) -> f64 {
    if z == 0.0 {
        1.0
    } else if z > 700.0 {
        0.0
    } else {
        z / z.exp_m1()
    }
}

/// Small-`alpha` closed form `(sqrt(pi)/96) (63 - 35 alpha)` of
/// `integral_0^inf (alpha + s^2) / (e^(alpha + s^2) - 1) ds`, obtained from
/// `z/(e^z - 1) ~ e^-z (1 + z/2 + z^2/12)`.
pub fn bose_integral_closed(alpha: f64) -> f64 {
    PI.sqrt() / 96.0 * (63.0 - 35.0 * alpha)
}

/// The same integral by adaptive quadrature, absolute error below 1e-10.
pub fn bose_integral_quadrature(alpha: f64) -> Result<f64> {
    if !(alpha > -1.0) {
        return Err(Error::Domain(format!("alpha must exceed -1, got {alpha}")));
    }
    quadrature::integrate_to_infinity(|s| z_over_expm1(alpha + s * s), 0.0, 1e-12, 1e-13)
}
