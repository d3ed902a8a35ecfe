use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::evaluator::BivariateEvaluator;
use super::point::UnitPoint;
use crate::error::{Error, Result};

/// Step of the finite-difference partial derivative `∂C/∂u`.
pub const DERIVATIVE_STEP: f64 = 1e-6;

/// Conditional CDF `v ↦ ∂C/∂u (u, v)` by finite differences: central in the
/// interior, one-sided within `h/2` of the edges.
fn conditional_cdf<C: BivariateEvaluator + ?Sized>(c: &C, u: f64, v: f64) -> f64 {
    let h = DERIVATIVE_STEP;
    let (lo, hi) = if u < 0.5 * h {
        (0.0, h)
    } else if u > 1.0 - 0.5 * h {
        (1.0 - h, 1.0)
    } else {
        (u - 0.5 * h, u + 0.5 * h)
    };
    (c.at(hi, v) - c.at(lo, v)) / (hi - lo)
}

/// Draws `count` points from copula `c` by inverting the conditional
/// distribution of `V` given `U = u` with bisection to `inv_tol`.
///
/// Works for singular copulas: the conditional CDF is evaluated from `C`
/// itself, never from a density.
pub fn sample_conditional<C: BivariateEvaluator + ?Sized>(
    c: &C,
    count: usize,
    seed: u64,
    inv_tol: f64,
) -> Result<Vec<UnitPoint>> {
    if count == 0 {
        return Err(Error::InvalidSpec("sample count must be at least 1".into()));
    }
    if !(inv_tol > 0.0) {
        return Err(Error::InvalidSpec(format!(
            "inversion tolerance must be positive, got {inv_tol}"
        )));
    }
    // Slack for the monotonicity check: finite differences of values that
    // carry ~1e-16 rounding are noisy at the 1e-10 level.
    let slack = 1e-7;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let u: f64 = rng.gen();
        let w: f64 = rng.gen();
        let (mut lo, mut hi) = (0.0_f64, 1.0_f64);
        let (mut f_lo, mut f_hi) = (conditional_cdf(c, u, lo), conditional_cdf(c, u, hi));
        if f_hi < f_lo - slack {
            return Err(Error::NotMonotone {
                u,
                drop: f_lo - f_hi,
            });
        }
        while hi - lo > inv_tol {
            let mid = 0.5 * (lo + hi);
            let f_mid = conditional_cdf(c, u, mid);
            if f_mid < f_lo - slack || f_mid > f_hi + slack {
                return Err(Error::NotMonotone {
                    u,
                    drop: (f_lo - f_mid).max(f_mid - f_hi),
                });
            }
            if f_mid < w {
                lo = mid;
                f_lo = f_mid;
            } else {
                hi = mid;
                f_hi = f_mid;
            }
        }
        out.push(UnitPoint::clamped(u, 0.5 * (lo + hi)));
    }
    Ok(out)
}

/// Sample version of Spearman's footrule for points with uniform margins:
/// `1 - 3 E|U - V|`.
pub fn empirical_footrule(points: &[UnitPoint]) -> f64 {
    let mean = points.iter().map(|p| (p.u() - p.v()).abs()).sum::<f64>() / points.len() as f64;
    1.0 - 3.0 * mean
}
