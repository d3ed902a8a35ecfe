//! The concordance function, Spearman's footrule, Gini's gamma and
//! Blomqvist's beta, plus the measures of the extremal copulas in closed form.

use crate::copula::{
    frechet_m, frechet_w, BivariateEvaluator, ExtremalCopulaSpec, ExtremalKind, GridFunction,
    UnitPoint,
};
use crate::error::{Error, Result};
use crate::quadrature::{integrate_unit, QuadratureConfig};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MeasureKind {
    Footrule,
    Gini,
    Blomqvist,
}

impl MeasureKind {
    /// Range of the measure over all copulas.
    pub fn range(self) -> (f64, f64) {
        match self {
            MeasureKind::Footrule => (-0.5, 1.0),
            MeasureKind::Gini | MeasureKind::Blomqvist => (-1.0, 1.0),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            MeasureKind::Footrule => "footrule",
            MeasureKind::Gini => "gini",
            MeasureKind::Blomqvist => "blomqvist",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeasureValue {
    pub kind: MeasureKind,
    pub value: f64,
}

impl MeasureValue {
    /// Checked constructor.
    pub fn new(kind: MeasureKind, value: f64) -> Result<Self> {
        let (lo, hi) = kind.range();
        crate::error::check_range(kind.name(), value, lo, hi)?;
        Ok(Self { kind, value })
    }

    fn clamped(kind: MeasureKind, value: f64) -> Self {
        let (lo, hi) = kind.range();
        Self {
            kind,
            value: value.clamp(lo, hi),
        }
    }
}

/// Spearman's footrule `6 ∫ C(t,t) dt - 2`; also defined for quasi-copulas.
pub fn phi<C: BivariateEvaluator + ?Sized>(c: &C, q: QuadratureConfig) -> MeasureValue {
    let e = integrate_unit(|t| c.at(t, t), q);
    MeasureValue::clamped(MeasureKind::Footrule, 6.0 * e.value - 2.0)
}

/// Gini's gamma `4 ∫ (C(t,t) + C(t,1-t)) dt - 2`; also defined for quasi-copulas.
pub fn gamma<C: BivariateEvaluator + ?Sized>(c: &C, q: QuadratureConfig) -> MeasureValue {
    let e = integrate_unit(|t| c.at(t, t) + c.at(t, 1.0 - t), q);
    MeasureValue::clamped(MeasureKind::Gini, 4.0 * e.value - 2.0)
}

/// Blomqvist's beta `4 C(1/2, 1/2) - 1`.
pub fn beta<C: BivariateEvaluator + ?Sized>(c: &C) -> MeasureValue {
    MeasureValue::clamped(MeasureKind::Blomqvist, 4.0 * c.at(0.5, 0.5) - 1.0)
}

/// Discrete Stieltjes approximation of `Q(C1, C2) = 4 ∫ C2 dC1 - 1`, with the
/// mass of every cell of `c1` placed at the cell midpoint.
pub fn q_concordance<C: BivariateEvaluator + ?Sized>(c1: &GridFunction, c2: &C) -> Result<f64> {
    let n = c1.n();
    let h = 1.0 / n as f64;
    let mut total = 0.0;
    for i in 0..n {
        let u = (i as f64 + 0.5) * h;
        for j in 0..n {
            let vol = c1.cell_volume(i, j);
            if vol < -1e-9 {
                return Err(Error::NotACopulaGrid { i, j, volume: vol });
            }
            if vol != 0.0 {
                total += c2.at(u, (j as f64 + 0.5) * h) * vol;
            }
        }
    }
    Ok(4.0 * total - 1.0)
}

fn expect_kind(spec: &ExtremalCopulaSpec, kind: ExtremalKind) -> Result<()> {
    if spec.kind() == kind {
        Ok(())
    } else {
        Err(Error::InvalidSpec(format!(
            "expected a {kind:?} extremal spec, got {:?}",
            spec.kind()
        )))
    }
}

/// `Q(M, C̲)` for the lower extremal copula, nine cases tried in order.
pub fn q_m_extremal_lower(spec: &ExtremalCopulaSpec) -> Result<f64> {
    expect_kind(spec, ExtremalKind::Lower)?;
    Ok(q_m_lower_raw(spec.a(), spec.b(), spec.anchor_value()))
}

pub(crate) fn q_m_lower_raw(a: f64, b: f64, d: f64) -> f64 {
    let half1d = 0.5 * (1.0 + d);
    if b >= d + 0.5 {
        0.0
    } else if half1d <= b && a <= b - d {
        (2.0 * d + 1.0 - 2.0 * b).powi(2)
    } else if half1d <= b && a >= b - d {
        (1.0 + d - a - b) * (1.0 + 3.0 * d + a - 3.0 * b)
    } else if b <= half1d && a <= b - d {
        d * (2.0 + 3.0 * d - 4.0 * b)
    } else if d >= 2.0 * a - 1.0 && d >= 2.0 * b - 1.0 && d >= a - b && d >= b - a {
        2.0 * d * (1.0 + d - a - b) - (a - b).powi(2)
    } else if a <= half1d && b <= a - d {
        d * (2.0 + 3.0 * d - 4.0 * a)
    } else if half1d <= a && a <= d + 0.5 && b >= a - d {
        (1.0 + d - a - b) * (1.0 + 3.0 * d - 3.0 * a + b)
    } else if half1d <= a && a <= d + 0.5 && b <= a - d {
        (2.0 * d + 1.0 - 2.0 * a).powi(2)
    } else {
        // a >= d + 1/2
        0.0
    }
}

/// `Q(M, C̄) = 1 - 4(a - d2)(b - d2)`.
pub fn q_m_extremal_upper(spec: &ExtremalCopulaSpec) -> Result<f64> {
    expect_kind(spec, ExtremalKind::Upper)?;
    let d = spec.anchor_value();
    Ok(1.0 - 4.0 * (spec.a() - d) * (spec.b() - d))
}

/// `Q(W, C̲) = 4 d1 (1 - a - b + d1) - 1`.
pub fn q_w_extremal_lower(spec: &ExtremalCopulaSpec) -> Result<f64> {
    expect_kind(spec, ExtremalKind::Lower)?;
    let d = spec.anchor_value();
    Ok(4.0 * d * (1.0 - spec.a() - spec.b() + d) - 1.0)
}

fn check_anchor_value(a: f64, b: f64, d: f64) -> Result<(f64, f64, f64)> {
    crate::error::check_range("a", a, 0.0, 1.0)?;
    crate::error::check_range("b", b, 0.0, 1.0)?;
    let p = UnitPoint::clamped(a, b);
    let (w, m) = (frechet_w(p), frechet_m(p));
    crate::error::check_range("d", d, w - 1e-12, m + 1e-12)?;
    Ok((a, b, d.clamp(w, m)))
}

/// Maps `(a, b, d)` into the triangle `a <= b, a + b <= 1` using the
/// transpose and survival symmetries of the extremal copulas.
#[inline]
pub(crate) fn reduce_to_triangle(a: f64, b: f64, d: f64) -> (f64, f64, f64) {
    let (a, b, d) = if a + b > 1.0 {
        (1.0 - a, 1.0 - b, d - (a + b - 1.0))
    } else {
        (a, b, d)
    };
    if a > b {
        (b, a, d)
    } else {
        (a, b, d)
    }
}

/// Footrule of the minimal copula with `C(a,b) = d`.
pub fn f_lower(a: f64, b: f64, d: f64) -> Result<f64> {
    let (a, b, d) = check_anchor_value(a, b, d)?;
    Ok(f_lower_raw(a, b, d))
}

pub(crate) fn f_lower_raw(a: f64, b: f64, d: f64) -> f64 {
    let (a, b, d) = reduce_to_triangle(a, b, d);
    if b >= d + 0.5 {
        -0.5
    } else if b >= 0.5 * (1.0 + d) {
        1.5 * (2.0 * d + 1.0 - 2.0 * b).powi(2) - 0.5
    } else if b >= a + d {
        1.5 * d * (2.0 + 3.0 * d - 4.0 * b) - 0.5
    } else {
        3.0 * d * (1.0 + d - a - b) - 1.5 * (b - a).powi(2) - 0.5
    }
}

/// Footrule of the maximal copula with `C(a,b) = d`: `1 - 6(a-d)(b-d)`.
pub fn f_upper(a: f64, b: f64, d: f64) -> Result<f64> {
    let (a, b, d) = check_anchor_value(a, b, d)?;
    Ok(1.0 - 6.0 * (a - d) * (b - d))
}

/// Gini's gamma of the minimal copula with `C(a,b) = d`.
pub fn g_lower(a: f64, b: f64, d: f64) -> Result<f64> {
    let (a, b, d) = check_anchor_value(a, b, d)?;
    Ok(g_lower_raw(a, b, d))
}

pub(crate) fn g_lower_raw(a: f64, b: f64, d: f64) -> f64 {
    let (a, b, d) = reduce_to_triangle(a, b, d);
    let s = 1.0 - a - b + d;
    if b >= d + 0.5 {
        4.0 * d * s - 1.0
    } else if b >= 0.5 * (1.0 + d) {
        (1.0 - 2.0 * b + 2.0 * d).powi(2) + 4.0 * d * s - 1.0
    } else if b >= a + d {
        d * (6.0 - 4.0 * a - 8.0 * b + 7.0 * d) - 1.0
    } else {
        6.0 * d * s - (a - b).powi(2) - 1.0
    }
}
