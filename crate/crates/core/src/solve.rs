//! Scalar root finding and maximization used by the domain and scenario code.

use crate::error::{Error, Result};

const MAX_BISECTION_STEPS: usize = 200;

/// `n` points spaced uniformly in `ln x` over `[lo, hi]`, endpoints exact.
pub fn log_space(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    assert!(lo > 0.0 && hi >= lo && n >= 2);
    let (a, b) = (lo.ln(), hi.ln());
    let step = (b - a) / (n - 1) as f64;
    (0..n)
        .map(|i| match i {
            0 => lo,
            _ if i == n - 1 => hi,
            _ => (a + step * i as f64).exp(),
        })
        .collect()
}

/// Bracketed root of `f` on `[lo, hi]` where `f(lo)` and `f(hi)` differ in sign.
///
/// Bisects until `|f| <= residual_tol` or the bracket collapses to adjacent
/// floats, then takes one secant step across the final bracket and keeps it if
/// the residual improves.
pub fn bisect<F>(f: F, mut lo: f64, mut hi: f64, residual_tol: f64) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    let mut flo = f(lo);
    let mut fhi = f(hi);
    if !(flo.is_finite() && fhi.is_finite()) {
        return Err(Error::Solver {
            reason: "non-finite function value at bracket end".into(),
            lo,
            hi,
        });
    }
    if flo == 0.0 {
        return Ok(lo);
    }
    if fhi == 0.0 {
        return Ok(hi);
    }
    if flo.signum() == fhi.signum() {
        return Err(Error::Solver {
            reason: "bracket does not enclose a sign change".into(),
            lo,
            hi,
        });
    }

    for _ in 0..MAX_BISECTION_STEPS {
        let mid = lo + 0.5 * (hi - lo);
        if mid <= lo || mid >= hi {
            break;
        }
        let fmid = f(mid);
        if !fmid.is_finite() {
            return Err(Error::Solver {
                reason: "non-finite function value inside bracket".into(),
                lo,
                hi,
            });
        }
        if fmid == 0.0 {
            return Ok(mid);
        }
        if fmid.signum() == flo.signum() {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
            fhi = fmid;
        }
        if fmid.abs() <= residual_tol && hi - lo <= 4.0 * f64::EPSILON * hi.abs() {
            break;
        }
    }

    let (mut best, mut fbest) = if flo.abs() <= fhi.abs() {
        (lo, flo)
    } else {
        (hi, fhi)
    };
    let secant = hi - fhi * (hi - lo) / (fhi - flo);
    if secant > lo && secant < hi {
        let fs = f(secant);
        if fs.is_finite() && fs.abs() < fbest.abs() {
            best = secant;
            fbest = fs;
        }
    }
    if fbest.abs() > residual_tol {
        return Err(Error::Solver {
            reason: format!("residual {fbest:e} above tolerance {residual_tol:e}"),
            lo,
            hi,
        });
    }
    Ok(best)
}

/// Golden-section search for the maximum of a unimodal `f` on `[a, b]`.
/// Returns `(x_max, f_max)`.
pub fn golden_section_max<F>(f: F, mut a: f64, mut b: f64, x_tol: f64) -> (f64, f64)
where
    F: Fn(f64) -> f64,
{
    const INV_PHI: f64 = 0.618_033_988_749_894_9;

    let mut x1 = b - INV_PHI * (b - a);
    let mut x2 = a + INV_PHI * (b - a);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    for _ in 0..300 {
        if (b - a).abs() <= x_tol {
            break;
        }
        if f1 >= f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - INV_PHI * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + INV_PHI * (b - a);
            f2 = f(x2);
        }
    }
    if f1 >= f2 {
        (x1, f1)
    } else {
        (x2, f2)
    }
}
