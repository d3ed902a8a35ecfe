//! Local bounds of the copulas with a fixed value of Gini's gamma.
//!
//! `Ḡ_γ` is piecewise over nine regions `O1..O9` (eight distinct
//! expressions, `O1` and `O9` share one); `G̲_γ` follows by reflection.

use std::fmt;

use crate::concordance::{g_lower_raw, gamma, reduce_to_triangle};
use crate::copula::{frechet_m, frechet_w, BivariateEvaluator, UnitPoint};
use crate::error::{check_range, Result};
use crate::footrule::BoundSide;
use crate::quadrature::QuadratureConfig;

#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct GiniParam(f64);

impl GiniParam {
    pub fn new(gamma: f64) -> Result<Self> {
        check_range("gamma", gamma, -1.0, 1.0).map(Self)
    }

    pub fn value(self) -> f64 {
        self.0
    }

    fn negated(self) -> Self {
        Self(-self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OmegaRegionId {
    O1,
    O2,
    O3,
    O4,
    O5,
    O6,
    O7,
    O8,
    O9,
    None,
}

impl OmegaRegionId {
    pub const ALL: [OmegaRegionId; 9] = [
        OmegaRegionId::O1,
        OmegaRegionId::O2,
        OmegaRegionId::O3,
        OmegaRegionId::O4,
        OmegaRegionId::O5,
        OmegaRegionId::O6,
        OmegaRegionId::O7,
        OmegaRegionId::O8,
        OmegaRegionId::O9,
    ];

    pub fn index(self) -> Option<u8> {
        match self {
            OmegaRegionId::None => None,
            other => Some(Self::ALL.iter().position(|&r| r == other).unwrap() as u8 + 1),
        }
    }

    pub fn from_index(i: u8) -> Self {
        match i {
            1..=9 => Self::ALL[i as usize - 1],
            _ => OmegaRegionId::None,
        }
    }

    /// Region of `(b, a)` given the region of `(a, b)`.
    pub fn transposed(self) -> Self {
        self.index().map_or(self, |i| Self::from_index(10 - i))
    }

    /// Region of `(1-a, 1-b)` given the region of `(a, b)`.
    pub fn radial(self) -> Self {
        const MAP: [u8; 9] = [9, 8, 6, 7, 5, 3, 4, 2, 1];
        self.index()
            .map_or(self, |i| Self::from_index(MAP[i as usize - 1]))
    }
}

impl fmt::Display for OmegaRegionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.index() {
            Some(i) => write!(f, "O{i}"),
            None => f.write_str("M"),
        }
    }
}

// Quotient for region inequalities; `None` when the denominator vanishes,
// which makes the containing inequality false.
#[inline]
fn quot(num: f64, den: f64) -> Option<f64> {
    (den.abs() >= 1e-14).then(|| num / den)
}

fn in_omega_raw(i: u8, g1: f64, a: f64, b: f64) -> bool {
    let third = |x: f64, sign: f64| {
        (x + 1.0 + sign * 0.5 * ((2.0 * x - 1.0).powi(2) + 3.0 * g1).sqrt()) / 3.0
    };
    let eleventh = |x: f64, sign: f64| {
        (3.0 + 5.0 * x + sign * (9.0 * (2.0 * x - 1.0).powi(2) + 11.0 * g1).sqrt()) / 11.0
    };
    match i {
        1 => {
            a <= 0.5
                && quot(g1, 1.0 - 2.0 * a).is_some_and(|q| 0.5 * (1.0 + q) <= b)
                && quot(g1, 4.0 * a).is_some_and(|q| b <= 1.0 - q)
        }
        2 => {
            quot(g1, 1.0 - 2.0 * a)
                .is_some_and(|q| b <= 0.5 * (1.0 + q) && b >= 0.25 * (6.0 * a - 1.0 + q))
                && (1.0 + 2.0 * a - 2.0 * b).powi(2) + 4.0 * a * (1.0 - b) >= g1
                && b >= third(a, 1.0)
        }
        3 => {
            b <= third(a, 1.0)
                && quot(g1, a).is_some_and(|q| b <= (3.0 * a + 6.0 - q) / 8.0)
                && a <= eleventh(b, -1.0)
        }
        4 => {
            a >= third(b, -1.0)
                && quot(g1, 1.0 - b).is_some_and(|q| a >= (3.0 * b - 1.0 + q) / 8.0)
                && b >= eleventh(a, 1.0)
        }
        5 => {
            eleventh(b, -1.0) <= a
                && a <= eleventh(b, 1.0)
                && eleventh(a, -1.0) <= b
                && b <= eleventh(a, 1.0)
                && b <= -2.0 * a + (3.0 * a * (a + 2.0) - g1).sqrt()
                && a <= -2.0 * b + (3.0 * b * (b + 2.0) - g1).sqrt()
        }
        6..=9 => in_omega_raw(10 - i, g1, b, a),
        _ => false,
    }
}

/// Literal membership test for `O_i`, `i` in 1..=9.
pub fn in_omega(i: u8, gamma: GiniParam, p: UnitPoint) -> bool {
    in_omega_raw(i, 1.0 + gamma.value(), p.u(), p.v())
}

/// First region `O1..O9` containing `p`; always `None` for `γ > 1/2`.
pub fn omega_region(gamma: GiniParam, p: UnitPoint) -> OmegaRegionId {
    if gamma.value() > 0.5 {
        return OmegaRegionId::None;
    }
    (1..=9)
        .find(|&i| in_omega(i, gamma, p))
        .map_or(OmegaRegionId::None, OmegaRegionId::from_index)
}

/// The expression of `Ḡ_γ` attached to region `id` (`M` for `None`),
/// evaluated at `p` without any region check and clamped to `[W, M]`.
pub fn omega_value(id: OmegaRegionId, gamma: GiniParam, p: UnitPoint) -> f64 {
    let (a, b) = (p.u(), p.v());
    let g1 = 1.0 + gamma.value();
    let s = a + b - 1.0;
    let mixed = (1.0 - 2.0 * a) * (1.0 - 2.0 * b);
    let raw = match id.index() {
        Some(1) | Some(9) => 0.5 * (s + (s * s + g1).sqrt()),
        Some(2) => 0.25 * (a + 3.0 * b - 2.0 + (s * s + mixed + 2.0 * g1).sqrt()),
        Some(3) => {
            let t = 2.0 * a + 4.0 * b - 3.0;
            (t + (t * t + 7.0 * g1).sqrt()) / 7.0
        }
        Some(4) => {
            (3.0 * a + 5.0 * b - 4.0 + ((4.0 * a + 2.0 * b - 3.0).powi(2) + 7.0 * g1).sqrt()) / 7.0
        }
        Some(5) => 0.5 * (s + (3f64.sqrt() / 3.0) * (5.0 * s * s - 2.0 * mixed + 2.0 * g1).sqrt()),
        Some(6) => {
            (5.0 * a + 3.0 * b - 4.0 + ((2.0 * a + 4.0 * b - 3.0).powi(2) + 7.0 * g1).sqrt()) / 7.0
        }
        Some(7) => {
            let t = 4.0 * a + 2.0 * b - 3.0;
            (t + (t * t + 7.0 * g1).sqrt()) / 7.0
        }
        Some(8) => 0.25 * (3.0 * a + b - 2.0 + (s * s + mixed + 2.0 * g1).sqrt()),
        _ => frechet_m(p),
    };
    raw.clamp(frechet_w(p), frechet_m(p))
}

/// `Ḡ_γ(a, b)`.
pub fn g_upper_bound(gamma: GiniParam, p: UnitPoint) -> f64 {
    g_upper_with_region(gamma, p).0
}

/// `Ḡ_γ(a, b)` and the region whose expression produced it. Same reduction
/// as for the footrule: solve `g̲ = γ` on the branch found by comparing `γ`
/// with `g̲` at the breakpoints, inside `a <= b, a + b <= 1`.
pub fn g_upper_with_region(gamma: GiniParam, p: UnitPoint) -> (f64, OmegaRegionId) {
    let g = gamma.value();
    if g >= 0.5 {
        return (frechet_m(p), OmegaRegionId::None);
    }
    if g <= -1.0 {
        // the whole square is one degenerate configuration; report the region
        // the literal sets give
        return (frechet_w(p), omega_region(gamma, p));
    }
    let (a0, b0) = (p.u(), p.v());
    let radial = a0 + b0 > 1.0;
    let (a, b, _) = reduce_to_triangle(a0, b0, 0.0);
    let transposed = if radial { 1.0 - a0 > 1.0 - b0 } else { a0 > b0 };
    let m = a;

    let local = if g_lower_raw(a, b, m) <= g {
        OmegaRegionId::None
    } else {
        let e1 = b - 0.5;
        let e2 = e1.max(2.0 * b - 1.0);
        let e4 = e2.max(b - a);
        let at = |d: f64| g_lower_raw(a, b, d.clamp(0.0, m));
        if g >= at(e4) {
            OmegaRegionId::O5
        } else if g >= at(e2) {
            OmegaRegionId::O3
        } else if g >= at(e1) {
            OmegaRegionId::O2
        } else {
            OmegaRegionId::O1
        }
    };
    let mut value = omega_value(local, gamma, UnitPoint::clamped(a, b));
    let mut id = local;
    if transposed {
        id = id.transposed();
    }
    if radial {
        id = id.radial();
        value += a0 + b0 - 1.0;
    }
    (value.clamp(frechet_w(p), frechet_m(p)), id)
}

/// `G̲_γ(a, b) = a - Ḡ_{-γ}(a, 1-b)`.
pub fn g_lower_bound(gamma: GiniParam, p: UnitPoint) -> f64 {
    let g = gamma.value();
    let (w, m) = (frechet_w(p), frechet_m(p));
    if g <= -0.5 {
        return w;
    }
    if g >= 1.0 {
        return m;
    }
    let v = p.u() - g_upper_bound(gamma.negated(), UnitPoint::clamped(p.u(), 1.0 - p.v()));
    v.clamp(w, m)
}

/// Extended Gini's gamma of `G̲_γ` or `Ḡ_γ` by quadrature.
pub fn gamma_of_g_bounds(gamma_param: GiniParam, which: BoundSide, q: QuadratureConfig) -> f64 {
    gamma(
        &GiniBound {
            param: gamma_param,
            side: which,
        },
        q,
    )
    .value
}

/// `G̲_γ` or `Ḡ_γ` as an evaluator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GiniBound {
    pub param: GiniParam,
    pub side: BoundSide,
}

impl GiniBound {
    pub fn lower(param: GiniParam) -> Self {
        Self {
            param,
            side: BoundSide::Lower,
        }
    }

    pub fn upper(param: GiniParam) -> Self {
        Self {
            param,
            side: BoundSide::Upper,
        }
    }
}

impl BivariateEvaluator for GiniBound {
    fn eval(&self, p: UnitPoint) -> f64 {
        match self.side {
            BoundSide::Lower => g_lower_bound(self.param, p),
            BoundSide::Upper => g_upper_bound(self.param, p),
        }
    }

    fn label(&self) -> String {
        match self.side {
            BoundSide::Lower => format!("g-lower:{}", self.param.value()),
            BoundSide::Upper => format!("g-upper:{}", self.param.value()),
        }
    }
}
