use rayon::prelude::*;

use super::evaluator::BivariateEvaluator;
use super::grid::GridFunction;
use super::point::UnitPoint;
use crate::error::{Error, Result};

/// Result of a grid audit of the (quasi-)copula axioms.
#[derive(Debug, Clone, PartialEq)]
pub struct AxiomReport {
    /// Grounded, uniform margins, componentwise nondecreasing and 1-Lipschitz.
    pub is_quasicopula: bool,
    /// No grid cell has H-volume below `-tol`.
    pub is_two_increasing: bool,
    /// Smallest cell volume seen.
    pub worst_volume: f64,
    /// The cell where `worst_volume` occurs, as `(lo, hi)` corners.
    pub worst_rectangle: (UnitPoint, UnitPoint),
    /// Largest violation of `0 <= C(next) - C(this) <= 1/n` on adjacent nodes.
    pub lipschitz_violation: f64,
    /// Largest deviation from the boundary conditions.
    pub margin_violation: f64,
}

/// `C(hi) - C(hi.u, lo.v) - C(lo.u, hi.v) + C(lo)`.
pub fn h_volume<C: BivariateEvaluator + ?Sized>(
    c: &C,
    lo: UnitPoint,
    hi: UnitPoint,
) -> Result<f64> {
    if lo.u() > hi.u() || lo.v() > hi.v() {
        return Err(Error::BadRectangle {
            lo_u: lo.u(),
            lo_v: lo.v(),
            hi_u: hi.u(),
            hi_v: hi.v(),
        });
    }
    Ok(c.eval(hi) - c.at(hi.u(), lo.v()) - c.at(lo.u(), hi.v()) + c.eval(lo))
}

/// Audits `c` on the nodes `(i/n, j/n)`.
pub fn check_quasicopula<C: BivariateEvaluator + ?Sized>(
    c: &C,
    n: usize,
    tol: f64,
) -> Result<AxiomReport> {
    if !(tol > 0.0) {
        return Err(Error::InvalidSpec(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let grid = GridFunction::from_evaluator(c, n)?;
    Ok(audit_grid(&grid, tol))
}

pub fn audit_grid(grid: &GridFunction, tol: f64) -> AxiomReport {
    let n = grid.n();
    let h = 1.0 / n as f64;

    let mut margin: f64 = 0.0;
    for k in 0..=n {
        let t = k as f64 * h;
        margin = margin
            .max(grid.get(k, 0).abs())
            .max(grid.get(0, k).abs())
            .max((grid.get(k, n) - t).abs())
            .max((grid.get(n, k) - t).abs());
    }

    let lipschitz = (0..=n)
        .into_par_iter()
        .map(|i| {
            let mut worst: f64 = 0.0;
            for j in 0..=n {
                let here = grid.get(i, j);
                for next in [
                    (i < n).then(|| grid.get(i + 1, j)),
                    (j < n).then(|| grid.get(i, j + 1)),
                ]
                .into_iter()
                .flatten()
                {
                    let step = next - here;
                    worst = worst.max(-step).max(step - h);
                }
            }
            worst
        })
        .reduce(|| 0.0, f64::max);

    let (worst_volume, wi, wj) = (0..n)
        .into_par_iter()
        .map(|i| {
            (0..n)
                .map(|j| (grid.cell_volume(i, j), i, j))
                .fold((f64::INFINITY, 0, 0), |a, b| if b.0 < a.0 { b } else { a })
        })
        .reduce(
            || (f64::INFINITY, 0, 0),
            |a, b| {
                if b.0 < a.0 || (b.0 == a.0 && (b.1, b.2) < (a.1, a.2)) {
                    b
                } else {
                    a
                }
            },
        );

    AxiomReport {
        is_quasicopula: margin <= tol && lipschitz <= tol,
        is_two_increasing: worst_volume >= -tol,
        worst_volume,
        worst_rectangle: (
            UnitPoint::clamped(wi as f64 * h, wj as f64 * h),
            UnitPoint::clamped((wi + 1) as f64 * h, (wj + 1) as f64 * h),
        ),
        lipschitz_violation: lipschitz,
        margin_violation: margin,
    }
}

/// The rectangle with the most negative H-volume among those with corners on
/// an `n`x`n` grid over the whole square. Returns `(volume, lo, hi)`.
pub fn most_negative_rectangle<C: BivariateEvaluator + ?Sized>(
    c: &C,
    n: usize,
) -> Result<(f64, UnitPoint, UnitPoint)> {
    most_negative_rectangle_in(
        c,
        UnitPoint::clamped(0.0, 0.0),
        UnitPoint::clamped(1.0, 1.0),
        n,
    )
}

/// As [`most_negative_rectangle`], restricted to the window `[lo, hi]`.
/// Any rectangle is allowed, not just single cells.
pub fn most_negative_rectangle_in<C: BivariateEvaluator + ?Sized>(
    c: &C,
    lo: UnitPoint,
    hi: UnitPoint,
    n: usize,
) -> Result<(f64, UnitPoint, UnitPoint)> {
    if n == 0 {
        return Err(Error::InvalidSpec("grid size must be at least 1".into()));
    }
    if !(lo.u() < hi.u() && lo.v() < hi.v()) {
        return Err(Error::BadRectangle {
            lo_u: lo.u(),
            lo_v: lo.v(),
            hi_u: hi.u(),
            hi_v: hi.v(),
        });
    }
    let us: Vec<f64> = (0..=n)
        .map(|i| lo.u() + (hi.u() - lo.u()) * i as f64 / n as f64)
        .collect();
    let vs: Vec<f64> = (0..=n)
        .map(|j| lo.v() + (hi.v() - lo.v()) * j as f64 / n as f64)
        .collect();
    let values: Vec<f64> = us
        .par_iter()
        .flat_map_iter(|&u| vs.iter().map(move |&v| c.at(u, v)))
        .collect();
    let g = |i: usize, j: usize| values[i * (n + 1) + j];
    // for each pair of u-cuts the column volumes form a sequence whose most
    // negative contiguous run is found in one pass
    let (vol, i1, i2, j1, j2) = (0..n)
        .into_par_iter()
        .map(|i1| {
            let mut best = (f64::INFINITY, 0, 0, 0, 0);
            for i2 in i1 + 1..=n {
                let (mut run, mut start) = (0.0, 0);
                for j in 0..n {
                    let cell = g(i2, j + 1) - g(i2, j) - g(i1, j + 1) + g(i1, j);
                    if run > 0.0 {
                        run = 0.0;
                        start = j;
                    }
                    run += cell;
                    if run < best.0 {
                        best = (run, i1, i2, start, j + 1);
                    }
                }
            }
            best
        })
        .reduce(
            || (f64::INFINITY, 0, 0, 0, 0),
            |a, b| if b.0 < a.0 { b } else { a },
        );
    Ok((
        vol,
        UnitPoint::clamped(us[i1], vs[j1]),
        UnitPoint::clamped(us[i2], vs[j2]),
    ))
}
