//! Composite Simpson quadrature in one and two dimensions.

use rayon::prelude::*;

use crate::error::{Error, Result};

/// Default number of Simpson panels.
pub const DEFAULT_PANELS: usize = 2048;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scheme {
    CompositeSimpson,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuadratureConfig {
    n: usize,
    scheme: Scheme,
}

impl QuadratureConfig {
    /// `n` must be even and at least 2.
    pub fn simpson(n: usize) -> Result<Self> {
        if n < 2 || !n.is_multiple_of(2) {
            return Err(Error::InvalidSpec(format!(
                "Simpson needs an even panel count >= 2, got {n}"
            )));
        }
        Ok(Self {
            n,
            scheme: Scheme::CompositeSimpson,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn scheme(&self) -> Scheme {
        self.scheme
    }
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        Self {
            n: DEFAULT_PANELS,
            scheme: Scheme::CompositeSimpson,
        }
    }
}

#[inline]
fn simpson_weight(k: usize, n: usize) -> f64 {
    if k == 0 || k == n {
        1.0
    } else if k % 2 == 1 {
        4.0
    } else {
        2.0
    }
}

/// Composite Simpson rule for `f` on `[lo, hi]` with `n` (even) panels.
pub fn simpson<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, n: usize) -> f64 {
    debug_assert!(n >= 2 && n.is_multiple_of(2));
    let h = (hi - lo) / n as f64;
    let sum: f64 = (0..=n)
        .map(|k| simpson_weight(k, n) * f(lo + k as f64 * h))
        .sum();
    sum * h / 3.0
}

/// Integral over `[0, 1]` and a Richardson error estimate `|S_n - S_{n/2}| / 15`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub value: f64,
    pub error: f64,
}

pub fn integrate_unit<F: Fn(f64) -> f64>(f: F, q: QuadratureConfig) -> Estimate {
    let n = q.n();
    let h = 1.0 / n as f64;
    let nodes: Vec<f64> = (0..=n).map(|k| f(k as f64 * h)).collect();
    let fine: f64 = nodes
        .iter()
        .enumerate()
        .map(|(k, y)| simpson_weight(k, n) * y)
        .sum::<f64>()
        * h
        / 3.0;
    let error = if n.is_multiple_of(4) {
        let m = n / 2;
        let coarse: f64 = (0..=m)
            .map(|k| simpson_weight(k, m) * nodes[2 * k])
            .sum::<f64>()
            * 2.0
            * h
            / 3.0;
        (fine - coarse).abs() / 15.0
    } else {
        f64::NAN
    };
    Estimate { value: fine, error }
}

/// Tensor-product composite Simpson over the unit square, parallel over rows.
pub fn simpson_2d<F: Fn(f64, f64) -> f64 + Sync>(f: F, n: usize) -> f64 {
    debug_assert!(n >= 2 && n.is_multiple_of(2));
    let h = 1.0 / n as f64;
    let total: f64 = (0..=n)
        .into_par_iter()
        .map(|i| {
            let u = i as f64 * h;
            let row: f64 = (0..=n)
                .map(|j| simpson_weight(j, n) * f(u, j as f64 * h))
                .sum();
            simpson_weight(i, n) * row
        })
        .sum();
    total * h * h / 9.0
}
