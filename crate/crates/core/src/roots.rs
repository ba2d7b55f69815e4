//! Bracketed scalar root finders used by the constraint solvers.

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Root {
    pub x: f64,
    pub value: f64,
    pub iterations: usize,
}

fn same_sign(a: f64, b: f64) -> bool {
    (a > 0.0 && b > 0.0) || (a < 0.0 && b < 0.0)
}

/// Newton iteration kept inside a sign-change bracket.
///
/// `f` returns the function value and its derivative. Bisection is used
/// whenever the Newton step would leave the bracket or fails to halve it,
/// so the bracket always shrinks. Stops once `|f(x)| <= f_tol`.
pub fn newton_bisect<F>(mut f: F, lo: f64, hi: f64, f_tol: f64, max_iter: usize) -> Result<Root>
where
    F: FnMut(f64) -> (f64, f64),
{
    let (mut a, mut b) = (lo, hi);
    let (fa, _) = f(a);
    let (fb, _) = f(b);
    if fa.abs() <= f_tol {
        return Ok(Root {
            x: a,
            value: fa,
            iterations: 0,
        });
    }
    if fb.abs() <= f_tol {
        return Ok(Root {
            x: b,
            value: fb,
            iterations: 0,
        });
    }
    if same_sign(fa, fb) {
        return Err(Error::NoBracket(format!(
            "f({a}) = {fa:e} and f({b}) = {fb:e} share a sign"
        )));
    }
    // orient so that f(a) < 0 < f(b)
    if fa > 0.0 {
        std::mem::swap(&mut a, &mut b);
    }

    let mut x = 0.5 * (a + b);
    let mut step_before_last = (b - a).abs();
    let mut last_step = step_before_last;
    let (mut fx, mut dfx) = f(x);
    let mut best = Root {
        x,
        value: fx,
        iterations: 1,
    };

    for iter in 1..=max_iter {
        if fx.abs() < best.value.abs() {
            best = Root {
                x,
                value: fx,
                iterations: iter,
            };
        }
        if fx.abs() <= f_tol {
            return Ok(Root {
                x,
                value: fx,
                iterations: iter,
            });
        }
        if fx < 0.0 {
            a = x;
        } else {
            b = x;
        }

        let newton_leaves = ((x - b) * dfx - fx) * ((x - a) * dfx - fx) > 0.0;
        let newton_slow = (2.0 * fx).abs() > (step_before_last * dfx).abs();
        step_before_last = last_step;
        let next = if dfx == 0.0 || !dfx.is_finite() || newton_leaves || newton_slow {
            last_step = 0.5 * (b - a);
            a + last_step
        } else {
            last_step = fx / dfx;
            x - last_step
        };

        if next == x || (b - a).abs() <= 4.0 * f64::EPSILON * x.abs().max(f64::MIN_POSITIVE) {
            break;
        }
        x = next;
        (fx, dfx) = f(x);
    }

    if fx.abs() < best.value.abs() {
        best = Root {
            x,
            value: fx,
            iterations: max_iter,
        };
    }
    if best.value.abs() <= f_tol {
        return Ok(best);
    }
    Err(Error::NonConvergence {
        iterations: max_iter,
        lo: a.min(b),
        hi: a.max(b),
        residual: best.value.abs(),
    })
}

/// Brent's method on a sign-change bracket, terminating when the bracket is
/// narrower than `x_tol` (plus a few ulps) or the function vanishes.
pub fn brent<F>(mut f: F, lo: f64, hi: f64, x_tol: f64, max_iter: usize) -> Result<Root>
where
    F: FnMut(f64) -> f64,
{
    let (mut a, mut b) = (lo, hi);
    let (mut fa, mut fb) = (f(a), f(b));
    if fa == 0.0 {
        return Ok(Root {
            x: a,
            value: fa,
            iterations: 0,
        });
    }
    if fb == 0.0 {
        return Ok(Root {
            x: b,
            value: fb,
            iterations: 0,
        });
    }
    if same_sign(fa, fb) {
        return Err(Error::NoBracket(format!(
            "f({a}) = {fa:e} and f({b}) = {fb:e} share a sign"
        )));
    }

    let (mut c, mut fc) = (b, fb);
    let mut d = b - a;
    let mut e = d;
    for iter in 1..=max_iter {
        if same_sign(fb, fc) {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if fc.abs() < fb.abs() {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        let tol = 2.0 * f64::EPSILON * b.abs() + 0.5 * x_tol;
        let half = 0.5 * (c - b);
        if half.abs() <= tol || fb == 0.0 {
            return Ok(Root {
                x: b,
                value: fb,
                iterations: iter,
            });
        }
        if e.abs() >= tol && fa.abs() > fb.abs() {
            // inverse quadratic interpolation, or secant when only two points
            let s = fb / fa;
            let (mut p, mut q);
            if a == c {
                p = 2.0 * half * s;
                q = 1.0 - s;
            } else {
                let qa = fa / fc;
                let r = fb / fc;
                p = s * (2.0 * half * qa * (qa - r) - (b - a) * (r - 1.0));
                q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if p > 0.0 {
                q = -q;
            }
            p = p.abs();
            let min1 = 3.0 * half * q - (tol * q).abs();
            let min2 = (e * q).abs();
            if 2.0 * p < min1.min(min2) {
                e = d;
                d = p / q;
            } else {
                d = half;
                e = d;
            }
        } else {
            d = half;
            e = d;
        }
        a = b;
        fa = fb;
        b += if d.abs() > tol { d } else { tol.copysign(half) };
        fb = f(b);
    }
    Err(Error::NonConvergence {
        iterations: max_iter,
        lo: b.min(c),
        hi: b.max(c),
        residual: fb.abs(),
    })
}
