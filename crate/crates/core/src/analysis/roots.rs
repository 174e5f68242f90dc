//! Bracketed scalar root finding and derivative-free maximization.

use serde::Serialize;

use crate::error::{Error, Result};

const MAX_ITER: usize = 200;

/// Root of a scalar equation located inside `bracket`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RootResult {
    pub x_star: f64,
    /// `f(x_star)`.
    pub residual: f64,
    /// Initial search interval.
    pub bracket: (f64, f64),
    pub iterations: usize,
}

/// Brent's method (inverse quadratic / secant steps safeguarded by
/// bisection) on `[lo, hi]`.
///
/// Stops once `|f| ≤ f_tol` and the bracket is narrower than `x_tol`, or the
/// bracket cannot shrink any further in floating point.
pub fn brent<F>(f: F, lo: f64, hi: f64, f_tol: f64, x_tol: f64) -> Result<RootResult>
where
    F: Fn(f64) -> f64,
{
    let (mut a, mut b) = (lo, hi);
    let (mut fa, mut fb) = (f(a), f(b));
    if fa.is_nan() || fb.is_nan() || fa.signum() == fb.signum() && fa != 0.0 && fb != 0.0 {
        return Err(Error::NoBracket {
            lo,
            hi,
            f_lo: fa,
            f_hi: fb,
        });
    }
    if fa == 0.0 {
        return Ok(RootResult {
            x_star: a,
            residual: 0.0,
            bracket: (lo, hi),
            iterations: 0,
        });
    }

    let (mut c, mut fc) = (a, fa);
    let mut d = b - a;
    let mut e = d;

    for iter in 1..=MAX_ITER {
        if fb.signum() == fc.signum() {
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
        let converged = fb == 0.0 || (fb.abs() <= f_tol && half.abs() <= tol);
        let exhausted = half.abs() <= 2.0 * f64::EPSILON * b.abs();
        if converged || exhausted {
            return Ok(RootResult {
                x_star: b,
                residual: fb,
                bracket: (lo, hi),
                iterations: iter,
            });
        }
        if e.abs() >= tol && fa.abs() > fb.abs() {
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
    Err(Error::Inconsistent(format!(
        "root finder did not converge on [{lo}, {hi}] within {MAX_ITER} iterations"
    )))
}

/// Maximizer found by golden-section search.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Maximum {
    pub x: f64,
    pub value: f64,
    pub iterations: usize,
}

/// Golden-section search for the maximum of a unimodal `f` on `[lo, hi]`,
/// stopping when the interval is below `x_tol`.
pub fn golden_section_max<F>(f: F, lo: f64, hi: f64, x_tol: f64) -> Maximum
where
    F: Fn(f64) -> f64,
{
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let (mut a, mut b) = (lo, hi);
    let mut x1 = b - inv_phi * (b - a);
    let mut x2 = a + inv_phi * (b - a);
    let (mut f1, mut f2) = (f(x1), f(x2));
    let mut iterations = 0;
    while b - a > x_tol && iterations < 500 {
        iterations += 1;
        if f1 < f2 {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        }
    }
    let x = 0.5 * (a + b);
    Maximum {
        x,
        value: f(x),
        iterations,
    }
}
