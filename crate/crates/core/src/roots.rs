//! Root isolation on the unit interval for the denominator polynomials
//! controlling convergence radii.

use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::{NsgError, Result};
use crate::poly::Poly;

const TOL: f64 = 1e-12;

/// The unique sign-change root of `p` in (0,1), for polynomials with
/// `p(0) > 0 > p(1)`. Bisection brackets the root, Newton polishes it;
/// absolute tolerance 1e-12 (all radius polynomials here have simple roots).
pub fn real_root_in_unit_interval(p: &Poly<BigInt>) -> Result<f64> {
    let p0 = p.eval(&BigInt::from(0));
    let p1: BigInt = p.coeffs().iter().sum();
    if !(p0.is_positive() && p1.is_negative()) {
        return Err(NsgError::NoSignChange {
            p0: p.eval_scalar(&0.0),
            p1: p.eval_scalar(&1.0),
        });
    }
    let (mut lo, mut hi) = (0.0_f64, 1.0_f64);
    for _ in 0..40 {
        let mid = 0.5 * (lo + hi);
        if p.eval_scalar(&mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let mut x = 0.5 * (lo + hi);
    for _ in 0..60 {
        let f = p.eval_scalar(&x);
        let df = p.eval_derivative_scalar(&x);
        if df == 0.0 {
            break;
        }
        let step = f / df;
        let next = (x - step).clamp(lo, hi);
        if (next - x).abs() < TOL {
            x = next;
            break;
        }
        x = next;
    }
    Ok(x)
}
