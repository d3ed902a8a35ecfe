//! Effectiveness `m(k) = 1 - 6 ∬ |K̄_k - K̲_k|` of the local bounds: 1 when
//! the measure pins the copula down completely, 0 at the Fréchet bounds.

use rayon::prelude::*;

use crate::concordance::MeasureKind;
use crate::copula::UnitPoint;
use crate::error::{Error, Result};
use crate::footrule::{f_lower_bound, f_upper_bound, FootruleParam};
use crate::gini::{g_lower_bound, g_upper_bound, GiniParam};

/// Reference four-decimal values for k = -0.5, -0.4, ..., 1.0.
pub const REFERENCE_FOOTRULE: [f64; 16] = [
    0.7500, 0.3718, 0.2244, 0.1352, 0.0820, 0.0574, 0.0569, 0.0763, 0.1108, 0.1562, 0.2146, 0.2895,
    0.3860, 0.5130, 0.6889, 1.0000,
];

/// Reference four-decimal values for k = 0.0, 0.1, ..., 1.0.
pub const REFERENCE_GINI: [f64; 11] = [
    0.0581, 0.0633, 0.0792, 0.1059, 0.1438, 0.1942, 0.2587, 0.3422, 0.4565, 0.6320, 1.0000,
];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EffectivenessRow {
    pub kind: MeasureKind,
    pub k: f64,
    pub m: f64,
    pub quad_n: usize,
}

#[inline]
fn weight(k: usize, n: usize) -> f64 {
    if k == 0 || k == n {
        1.0
    } else if k % 2 == 1 {
        4.0
    } else {
        2.0
    }
}

/// `m_κ(k)` by composite Simpson on an `(n+1)²` node grid.
pub fn m_effectiveness(kind: MeasureKind, k: f64, n: usize) -> Result<EffectivenessRow> {
    if n < 64 || !n.is_multiple_of(2) {
        return Err(Error::OutOfRange {
            what: "quadrature n (even, >= 64)",
            value: n as f64,
            lo: 64.0,
            hi: f64::INFINITY,
        });
    }
    let gap: Box<dyn Fn(UnitPoint) -> (f64, f64) + Sync> = match kind {
        MeasureKind::Footrule => {
            let p = FootruleParam::new(k)?;
            Box::new(move |x| (f_lower_bound(p, x), f_upper_bound(p, x)))
        }
        MeasureKind::Gini => {
            let p = GiniParam::new(k)?;
            Box::new(move |x| (g_lower_bound(p, x), g_upper_bound(p, x)))
        }
        MeasureKind::Blomqvist => {
            return Err(Error::KindMismatch(
                "effectiveness is defined for footrule and gini".into(),
            ));
        }
    };
    let h = 1.0 / n as f64;
    let rows: Vec<f64> = (0..=n)
        .into_par_iter()
        .map(|i| {
            let u = i as f64 * h;
            let mut row = 0.0;
            for j in 0..=n {
                let v = j as f64 * h;
                let (lo, hi) = gap(UnitPoint::clamped(u, v));
                let diff = hi - lo;
                if diff < -1e-10 {
                    return Err(Error::BoundOrdering { u, v, diff });
                }
                row += weight(j, n) * diff.max(0.0);
            }
            Ok(weight(i, n) * row)
        })
        .collect::<Result<_>>()?;
    let integral = rows.iter().sum::<f64>() * h * h / 9.0;
    Ok(EffectivenessRow {
        kind,
        k,
        m: 1.0 - 6.0 * integral,
        quad_n: n,
    })
}

/// The parameter values tabulated for each measure.
pub fn table1_parameters() -> Vec<(MeasureKind, f64)> {
    let mut out: Vec<(MeasureKind, f64)> = (0..16)
        .map(|i| (MeasureKind::Footrule, (i as f64 - 5.0) / 10.0))
        .collect();
    out.extend((0..11).map(|i| (MeasureKind::Gini, i as f64 / 10.0)));
    out
}

/// The 16 footrule rows followed by the 11 gini rows.
pub fn table1(n: usize) -> Result<Vec<EffectivenessRow>> {
    table1_parameters()
        .into_iter()
        .map(|(kind, k)| m_effectiveness(kind, k, n))
        .collect()
}

/// Reference value for a tabulated `(kind, k)`, if there is one.
pub fn reference_value(kind: MeasureKind, k: f64) -> Option<f64> {
    let (table, start): (&[f64], f64) = match kind {
        MeasureKind::Footrule => (&REFERENCE_FOOTRULE, -0.5),
        MeasureKind::Gini => (&REFERENCE_GINI, 0.0),
        MeasureKind::Blomqvist => return None,
    };
    let idx = ((k - start) * 10.0).round();
    if idx < 0.0 || (k - start - idx / 10.0).abs() > 1e-9 {
        return None;
    }
    table.get(idx as usize).copied()
}
