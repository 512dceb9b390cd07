//! Scalar search primitives: golden-section extremum refinement and
//! bisection on a sign change / monotone predicate.

use crate::error::{Error, Result};

const INV_GOLDEN: f64 = 0.618_033_988_749_894_9; // 1/phi

/// Golden-section search for the maximum of `f` on `[a, b]`.
///
/// Shrinks the bracket until its width falls below `tol_x` (or the iteration
/// cap is hit). Returns `(x_max, f_max)`.
pub fn golden_section_max(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64, tol_x: f64) -> (f64, f64) {
    if a > b {
        std::mem::swap(&mut a, &mut b);
    }
    let mut x1 = b - INV_GOLDEN * (b - a);
    let mut x2 = a + INV_GOLDEN * (b - a);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    for _ in 0..200 {
        if (b - a).abs() <= tol_x {
            break;
        }
        if f1 > f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - INV_GOLDEN * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + INV_GOLDEN * (b - a);
            f2 = f(x2);
        }
    }
    if f1 > f2 {
        (x1, f1)
    } else {
        (x2, f2)
    }
}

/// Bisection for a root of `f` on `[lo, hi]`, assuming a sign change.
///
/// Returns the midpoint once the bracket width falls below `tol`.
pub fn bisect_root(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, tol: f64) -> Result<f64> {
    let mut flo = f(lo);
    let fhi = f(hi);
    if flo == 0.0 {
        return Ok(lo);
    }
    if fhi == 0.0 {
        return Ok(hi);
    }
    if flo.signum() == fhi.signum() {
        return Err(Error::Bracket(format!(
            "no sign change on [{lo}, {hi}]: f(lo) = {flo}, f(hi) = {fhi}"
        )));
    }
    for _ in 0..200 {
        if hi - lo <= tol {
            break;
        }
        let mid = 0.5 * (lo + hi);
        let fm = f(mid);
        if fm == 0.0 {
            return Ok(mid);
        }
        if fm.signum() == flo.signum() {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Bisection on a monotone boolean predicate: finds the threshold where
/// `pred` flips from false to true, given `pred(hi)` true and `pred(lo)`
/// false (or `lo` at the domain edge). Returns the upper endpoint of the
/// final bracket, so the result always satisfies the predicate direction
/// from above.
pub fn bisect_predicate(pred: impl Fn(f64) -> bool, mut lo: f64, mut hi: f64, tol: f64) -> f64 {
    for _ in 0..200 {
        if hi - lo <= tol {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if pred(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    0.5 * (lo + hi)
}
