//! Local bounds of the copulas with a fixed value of Spearman's footrule.
//!
//! `F̲_φ` is given by a single closed form. `F̄_φ` is piecewise: the unit
//! square splits into seven regions `D1..D7`, each with its own expression,
//! and outside all of them the bound is `M`.

use std::fmt;

use crate::concordance::{f_lower_raw, phi, reduce_to_triangle};
use crate::copula::{frechet_m, frechet_w, BivariateEvaluator, UnitPoint};
use crate::error::{check_range, Result};
use crate::quadrature::QuadratureConfig;

/// Which of the two local bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoundSide {
    Lower,
    Upper,
}

#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct FootruleParam(f64);

impl FootruleParam {
    pub fn new(phi: f64) -> Result<Self> {
        check_range("phi", phi, -0.5, 1.0).map(Self)
    }

    pub fn value(self) -> f64 {
        self.0
    }

    /// Half-width `√(3(1+2φ))/6` of the interval of `a` on which the
    /// singular part of `F̲_φ` follows the hyperbolas.
    pub fn ell(self) -> f64 {
        (3.0 * (1.0 + 2.0 * self.0)).sqrt() / 6.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DeltaRegionId {
    D1,
    D2,
    D3,
    D4,
    D5,
    D6,
    D7,
    None,
}

impl DeltaRegionId {
    pub const ALL: [DeltaRegionId; 7] = [
        DeltaRegionId::D1,
        DeltaRegionId::D2,
        DeltaRegionId::D3,
        DeltaRegionId::D4,
        DeltaRegionId::D5,
        DeltaRegionId::D6,
        DeltaRegionId::D7,
    ];

    /// 1..=7, or `None` outside every region.
    pub fn index(self) -> Option<u8> {
        match self {
            DeltaRegionId::None => None,
            other => Some(Self::ALL.iter().position(|&r| r == other).unwrap() as u8 + 1),
        }
    }

    pub fn from_index(i: u8) -> Self {
        match i {
            1..=7 => Self::ALL[i as usize - 1],
            _ => DeltaRegionId::None,
        }
    }

    /// Region of `(b, a)` given the region of `(a, b)`.
    pub fn transposed(self) -> Self {
        self.index().map_or(self, |i| Self::from_index(8 - i))
    }

    /// Region of `(1-a, 1-b)` given the region of `(a, b)`.
    pub fn radial(self) -> Self {
        const MAP: [u8; 7] = [7, 5, 6, 4, 2, 3, 1];
        self.index()
            .map_or(self, |i| Self::from_index(MAP[i as usize - 1]))
    }
}

impl fmt::Display for DeltaRegionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.index() {
            Some(i) => write!(f, "D{i}"),
            None => f.write_str("M"),
        }
    }
}

#[inline]
fn half_width(phi: f64) -> f64 {
    ((1.0 + 2.0 * phi) / 3.0).sqrt()
}

#[inline]
fn root(x: f64, phi: f64) -> f64 {
    ((2.0 * x - 1.0).powi(2) + 1.0 + 2.0 * phi).sqrt()
}

/// Literal membership test for `D_i`, `i` in 1..=7.
pub fn in_delta(i: u8, phi: FootruleParam, p: UnitPoint) -> bool {
    let (a, b, f) = (p.u(), p.v(), phi.value());
    let s = half_width(f);
    let (ra, rb) = (root(a, f), root(b, f));
    match i {
        1 => a <= 0.5 * (1.0 - s) && b >= 0.5 * (1.0 + s) && b <= a + 0.5 * (1.0 - s),
        2 => b <= 0.5 * (1.0 + s) && (2.0 * b - 1.0 + rb) / 3.0 <= a && a <= (b + 1.0 - rb) / 3.0,
        3 => a >= 0.5 * (1.0 - s) && (a + 1.0 + ra) / 3.0 <= b && b <= (2.0 * a + 2.0 - ra) / 3.0,
        4 => {
            let lim = 2.0 / 3.0 * (1.0 - f);
            (b + 1.0 - rb) / 3.0 <= a
                && a <= (b + 1.0 + rb) / 3.0
                && (a + 1.0 - ra) / 3.0 <= b
                && b <= (a + 1.0 + ra) / 3.0
                && a <= (lim - (b - 1.0).powi(2)).sqrt()
                && b <= (lim - (a - 1.0).powi(2)).sqrt()
        }
        5 => b >= 0.5 * (1.0 - s) && (b + 1.0 + rb) / 3.0 <= a && a <= (2.0 * b + 2.0 - rb) / 3.0,
        6 => a <= 0.5 * (1.0 + s) && (2.0 * a - 1.0 + ra) / 3.0 <= b && b <= (a + 1.0 - ra) / 3.0,
        7 => b <= 0.5 * (1.0 - s) && a >= 0.5 * (1.0 + s) && b >= a - 0.5 * (1.0 - s),
        _ => false,
    }
}

/// First region `D1..D7` containing `p`; always `None` for `φ > 1/4`.
pub fn delta_region(phi: FootruleParam, p: UnitPoint) -> DeltaRegionId {
    if phi.value() > 0.25 {
        return DeltaRegionId::None;
    }
    (1..=7)
        .find(|&i| in_delta(i, phi, p))
        .map_or(DeltaRegionId::None, DeltaRegionId::from_index)
}

/// The expression of `F̄_φ` attached to region `id` (`M` for `None`),
/// evaluated at `p` without any region check and clamped to `[W, M]`.
pub fn delta_value(id: DeltaRegionId, phi: FootruleParam, p: UnitPoint) -> f64 {
    let (a, b, f) = (p.u(), p.v(), phi.value());
    let s = half_width(f);
    let raw = match id.index() {
        Some(1) => 0.5 * (2.0 * b - 1.0 + s),
        Some(2) => (2.0 * b - 1.0 + root(b, f)) / 3.0,
        Some(3) => (a + 3.0 * b - 2.0 + root(a, f)) / 3.0,
        Some(4) => {
            let disc = 3.0 * (b - a).powi(2)
                + (1.0 - 2.0 * a) * (1.0 - 2.0 * b)
                + 2.0 / 3.0 * (1.0 + 2.0 * f);
            0.5 * (a + b - 1.0 + disc.sqrt())
        }
        Some(5) => (3.0 * a + b - 2.0 + root(b, f)) / 3.0,
        Some(6) => (2.0 * a - 1.0 + root(a, f)) / 3.0,
        Some(7) => 0.5 * (2.0 * a - 1.0 + s),
        _ => frechet_m(p),
    };
    raw.clamp(frechet_w(p), frechet_m(p))
}

/// `F̲_φ(a, b)`.
pub fn f_lower_bound(phi: FootruleParam, p: UnitPoint) -> f64 {
    let (a, b, f) = (p.u(), p.v(), phi.value());
    let (w, m) = (frechet_w(p), frechet_m(p));
    if f <= -0.5 {
        return w;
    }
    if f >= 1.0 {
        return m;
    }
    let k = 1.0 - f;
    let inside =
        b > 1e-12 && b < 1.0 - 1e-12 && 6.0 * a * b >= k && 6.0 * (1.0 - a) * (1.0 - b) >= k;
    if !inside {
        return w;
    }
    let v = 0.5 * (a + b - (2.0 / 3.0 * k + (b - a).powi(2)).sqrt());
    v.clamp(w, m)
}

/// `F̄_φ(a, b)`.
pub fn f_upper_bound(phi: FootruleParam, p: UnitPoint) -> f64 {
    f_upper_with_region(phi, p).0
}

/// `F̄_φ(a, b)` together with the region whose expression produced it.
///
/// The point is first moved into the triangle `a <= b, a + b <= 1` by the
/// symmetries of the bound. There `f̲` is nondecreasing in `d` with a known
/// sequence of branches, so the branch holding the solution of `f̲ = φ` is
/// found by comparing `φ` with `f̲` at the branch breakpoints.
pub fn f_upper_with_region(phi: FootruleParam, p: UnitPoint) -> (f64, DeltaRegionId) {
    let f = phi.value();
    if f >= 0.25 {
        return (frechet_m(p), DeltaRegionId::None);
    }
    let (a0, b0) = (p.u(), p.v());
    let radial = a0 + b0 > 1.0;
    let (a1, b1, _) = reduce_to_triangle(a0, b0, 0.0);
    let transposed = if radial { 1.0 - a0 > 1.0 - b0 } else { a0 > b0 };
    let (a, b) = (a1, b1);
    let m = a;

    let local = if f_lower_raw(a, b, m) <= f {
        DeltaRegionId::None
    } else {
        let e1 = b - 0.5;
        let e2 = e1.max(2.0 * b - 1.0);
        let e4 = e2.max(b - a);
        let at = |d: f64| f_lower_raw(a, b, d.clamp(0.0, m));
        if f >= at(e4) {
            DeltaRegionId::D4
        } else if f >= at(e2) {
            DeltaRegionId::D2
        } else {
            DeltaRegionId::D1
        }
    };
    let q = UnitPoint::clamped(a, b);
    let mut value = delta_value(local, phi, q);
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

/// `φ(F̲_φ) = 2 - φ - √(6(1-φ))`.
pub fn phi_of_f_lower(phi: FootruleParam) -> f64 {
    let f = phi.value();
    2.0 - f - (6.0 * (1.0 - f)).sqrt()
}

/// Extended footrule of `F̄_φ` by quadrature.
pub fn phi_of_f_upper(phi_param: FootruleParam, q: QuadratureConfig) -> f64 {
    phi(&FootruleBound::upper(phi_param), q).value
}

/// `φ(F̄_φ)` in closed form. On the diagonal `F̄_φ` is `δ⁴` on a centred
/// interval and `M` elsewhere, which integrates to
/// `½(2 - r + (1+2φ) ln((3+r)/(3-r)))` with `r = √(3-12φ)`, for `φ < 1/4`.
pub fn phi_of_f_upper_closed_form(phi: FootruleParam) -> f64 {
    let f = phi.value();
    if f >= 0.25 {
        return 1.0;
    }
    if f <= -0.5 {
        return -0.5;
    }
    let r = (3.0 - 12.0 * f).sqrt();
    0.5 * (2.0 - r + (1.0 + 2.0 * f) * ((3.0 + r) / (3.0 - r)).ln())
}

/// The variant `½(2 - r + (1+2φ) ln(3+r))` without the `3 - r` denominator.
/// It gives about 1.824 at `φ = 1/4`; kept to report how far off it is.
pub fn phi_of_f_upper_printed_form(phi: FootruleParam) -> f64 {
    let f = phi.value();
    let r = (3.0 - 12.0 * f).max(0.0).sqrt();
    0.5 * (2.0 - r + (1.0 + 2.0 * f) * (3.0 + r).ln())
}

/// `F̲_φ` or `F̄_φ` as an evaluator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FootruleBound {
    pub param: FootruleParam,
    pub side: BoundSide,
}

impl FootruleBound {
    pub fn lower(param: FootruleParam) -> Self {
        Self {
            param,
            side: BoundSide::Lower,
        }
    }

    pub fn upper(param: FootruleParam) -> Self {
        Self {
            param,
            side: BoundSide::Upper,
        }
    }
}

impl BivariateEvaluator for FootruleBound {
    fn eval(&self, p: UnitPoint) -> f64 {
        match self.side {
            BoundSide::Lower => f_lower_bound(self.param, p),
            BoundSide::Upper => f_upper_bound(self.param, p),
        }
    }

    fn label(&self) -> String {
        match self.side {
            BoundSide::Lower => format!("f-lower:{}", self.param.value()),
            BoundSide::Upper => format!("f-upper:{}", self.param.value()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::concordance::f_lower;
    use crate::copula::{check_quasicopula, h_volume, ShuffleSpec};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn fp(x: f64) -> FootruleParam {
        FootruleParam::new(x).unwrap()
    }

    fn pt(u: f64, v: f64) -> UnitPoint {
        UnitPoint::new(u, v).unwrap()
    }

    fn sweep() -> Vec<f64> {
        let mut v: Vec<f64> = (0..25).map(|i| -0.5 + 1.5 * i as f64 / 24.0).collect();
        v.push(0.25);
        v.push(0.25 - 1e-6);
        v.push(0.25 + 1e-6);
        v
    }

    // sup{d : f̲(a,b,d) <= φ} by bisection
    fn upper_oracle(phi: f64, a: f64, b: f64) -> f64 {
        let p = pt(a, b);
        let (mut lo, mut hi) = (frechet_w(p), frechet_m(p));
        if f_lower_raw(a, b, hi) <= phi {
            return hi;
        }
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if f_lower_raw(a, b, mid) <= phi {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        lo
    }

    // inf{d : f̄(a,b,d) >= φ} by bisection
    fn lower_oracle(phi: f64, a: f64, b: f64) -> f64 {
        let p = pt(a, b);
        let fu = |d: f64| 1.0 - 6.0 * (a - d) * (b - d);
        let (mut lo, mut hi) = (frechet_w(p), frechet_m(p));
        if fu(lo) >= phi {
            return lo;
        }
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if fu(mid) >= phi {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        hi
    }

    #[test]
    fn parameter_range() {
        assert!(FootruleParam::new(-0.51).is_err());
        assert!(FootruleParam::new(1.01).is_err());
        assert!((fp(0.0).ell() - 3f64.sqrt() / 6.0).abs() < 1e-15);
    }

    #[test]
    fn region_examples() {
        assert_eq!(delta_region(fp(0.0), pt(0.5, 0.5)), DeltaRegionId::D4);
        assert_eq!(delta_region(fp(0.3), pt(0.5, 0.5)), DeltaRegionId::None);
        assert_eq!(delta_region(fp(0.3), pt(0.1, 0.8)), DeltaRegionId::None);
        assert_eq!(delta_region(fp(-0.5), pt(0.25, 0.7)), DeltaRegionId::D1);
        assert_eq!(delta_region(fp(-0.5), pt(0.7, 0.25)), DeltaRegionId::D7);
        // (0.1, 0.8) sits above D1 at φ = -1/2, where the bound is M
        assert_eq!(delta_region(fp(-0.5), pt(0.1, 0.8)), DeltaRegionId::None);
        assert!((f_upper_bound(fp(-0.5), pt(0.1, 0.8)) - 0.1).abs() < 1e-15);
    }

    #[test]
    fn bound_examples() {
        let p = pt(0.5, 0.5);
        assert!((f_lower_bound(fp(0.0), p) - 0.5 * (1.0 - (2.0f64 / 3.0).sqrt())).abs() < 1e-12);
        assert!((f_upper_bound(fp(0.0), p) - 0.5 * (2.0f64 / 3.0).sqrt()).abs() < 1e-12);
        assert!((f_upper_bound(fp(-0.5), pt(0.25, 0.75)) - 0.25).abs() < 1e-12);
        let half_shift = ShuffleSpec::new(vec![0.0, 0.5, 1.0], vec![2, 1], vec![1, 1]).unwrap();
        for i in 0..=20 {
            for j in 0..=20 {
                let q = pt(i as f64 / 20.0, j as f64 / 20.0);
                assert!((f_upper_bound(fp(-0.5), q) - half_shift.eval(q)).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn closed_form_footrule_of_lower_bound() {
        assert_eq!(phi_of_f_lower(fp(1.0)), 1.0);
        assert!((phi_of_f_lower(fp(-0.5)) + 0.5).abs() < 1e-15);
        assert!((phi_of_f_lower(fp(0.0)) - (2.0 - 6f64.sqrt())).abs() < 1e-15);
    }

    #[test]
    fn footrule_of_upper_bound_by_quadrature() {
        let q = QuadratureConfig::simpson(4096).unwrap();
        assert!((phi_of_f_upper(fp(1.0), q) - 1.0).abs() < 1e-12);
        assert!((phi_of_f_upper(fp(0.5), q) - 1.0).abs() < 1e-12);
        assert!((phi_of_f_upper(fp(-0.5), q) + 0.5).abs() < 1e-6);
        for i in 1..30 {
            let f = -0.5 + 0.75 * i as f64 / 30.0;
            let v = phi_of_f_upper(fp(f), q);
            assert!(v > f);
            assert!(
                (v - phi_of_f_upper_closed_form(fp(f))).abs() < 1e-6,
                "φ={f}"
            );
        }
        assert!((phi_of_f_upper_printed_form(fp(0.25)) - 1.823959).abs() < 1e-6);
    }

    #[test]
    fn bounds_match_bisection_oracles() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..4000 {
            let f: f64 = rng.gen_range(-0.5..1.0);
            let (a, b): (f64, f64) = (rng.gen(), rng.gen());
            let up = f_upper_bound(fp(f), pt(a, b));
            assert!(
                (up - upper_oracle(f, a, b)).abs() < 1e-9,
                "upper φ={f} ({a},{b})"
            );
            let lo = f_lower_bound(fp(f), pt(a, b));
            assert!(
                (lo - lower_oracle(f, a, b)).abs() < 1e-9,
                "lower φ={f} ({a},{b})"
            );
        }
    }

    #[test]
    fn literal_regions_agree_with_reduced_dispatch() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for _ in 0..20000 {
            let f: f64 = rng.gen_range(-0.5..0.25);
            let p = pt(rng.gen(), rng.gen());
            let (v, reduced) = f_upper_with_region(fp(f), p);
            let literal = delta_region(fp(f), p);
            assert!(
                (delta_value(literal, fp(f), p) - v).abs() < 1e-9,
                "φ={f} {p:?} {literal} vs {reduced}"
            );
            // the ids may differ only where two expressions agree
            if literal != reduced {
                assert!((delta_value(reduced, fp(f), p) - v).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn region_continuity_on_boundaries() {
        // both sides are classified 1e-10 away from the crossing so that
        // rounding-width slivers between sets do not count as a side
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        let mut crossings = 0;
        while crossings < 10000 {
            let f: f64 = rng.gen_range(-0.5..0.25);
            let (p, q) = (pt(rng.gen(), rng.gen()), pt(rng.gen(), rng.gen()));
            let rp = delta_region(fp(f), p);
            if rp == delta_region(fp(f), q) {
                continue;
            }
            let len = ((q.u() - p.u()).powi(2) + (q.v() - p.v()).powi(2)).sqrt();
            let at = |x: f64| {
                UnitPoint::clamped(p.u() + x * (q.u() - p.u()), p.v() + x * (q.v() - p.v()))
            };
            let (mut s, mut t) = (0.0, 1.0);
            for _ in 0..60 {
                let mid = 0.5 * (s + t);
                if delta_region(fp(f), at(mid)) == rp {
                    s = mid;
                } else {
                    t = mid;
                }
            }
            let off = 1e-10 / len;
            let ix = delta_region(fp(f), at((s - off).max(0.0)));
            let iy = delta_region(fp(f), at((t + off).min(1.0)));
            let x = at(s);
            assert!(
                (delta_value(ix, fp(f), x) - delta_value(iy, fp(f), x)).abs() < 1e-9,
                "φ={f} {ix}/{iy} at {x:?}"
            );
            crossings += 1;
        }
    }

    #[test]
    fn symmetric_and_radially_symmetric() {
        let mut rng = ChaCha8Rng::seed_from_u64(14);
        for _ in 0..10000 {
            let f = fp(rng.gen_range(-0.5..1.0));
            let (a, b): (f64, f64) = (rng.gen(), rng.gen());
            for g in [f_lower_bound, f_upper_bound] {
                let v = g(f, pt(a, b));
                assert!((v - g(f, pt(b, a))).abs() < 1e-12);
                assert!((v - (a + b - 1.0 + g(f, pt(1.0 - a, 1.0 - b)))).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn ordered_and_monotone_in_phi() {
        let grid: Vec<UnitPoint> = (0..=50)
            .flat_map(|i| {
                (0..=50).map(move |j| UnitPoint::clamped(i as f64 / 50.0, j as f64 / 50.0))
            })
            .collect();
        let mut params = sweep();
        params.sort_by(|x, y| x.partial_cmp(y).unwrap());
        let mut prev: Option<(Vec<f64>, Vec<f64>)> = None;
        for &f in &params {
            let lo: Vec<f64> = grid.iter().map(|&p| f_lower_bound(fp(f), p)).collect();
            let up: Vec<f64> = grid.iter().map(|&p| f_upper_bound(fp(f), p)).collect();
            for (k, &p) in grid.iter().enumerate() {
                assert!(frechet_w(p) <= lo[k] && lo[k] <= up[k] + 1e-12 && up[k] <= frechet_m(p));
            }
            if let Some((pl, pu)) = &prev {
                for k in 0..grid.len() {
                    assert!(
                        pl[k] <= lo[k] + 1e-12 && pu[k] <= up[k] + 1e-12,
                        "φ={f} at {:?}",
                        grid[k]
                    );
                }
            }
            prev = Some((lo, up));
        }
    }

    #[test]
    fn inversion_sharpness() {
        let mut rng = ChaCha8Rng::seed_from_u64(15);
        let mut checked = 0;
        for _ in 0..5000 {
            let f: f64 = rng.gen_range(-0.5..0.25);
            let (a, b): (f64, f64) = (rng.gen(), rng.gen());
            let d = f_upper_bound(fp(f), pt(a, b));
            if d < a.min(b) - 1e-12 {
                assert!(
                    (f_lower(a, b, d).unwrap() - f).abs() < 1e-9,
                    "φ={f} ({a},{b})"
                );
                checked += 1;
            }
        }
        assert!(checked > 500);
    }

    #[test]
    fn copula_and_quasi_copula_dichotomy() {
        for &f in &[-0.25, 0.0, 0.25, 0.5, 0.75] {
            let r = check_quasicopula(&FootruleBound::lower(fp(f)), 200, 1e-12).unwrap();
            assert!(r.worst_volume >= -1e-12, "φ={f}: {r:?}");
        }
        for &f in &[-0.25, 0.0, 0.2] {
            let r = check_quasicopula(&FootruleBound::upper(fp(f)), 200, 1e-12).unwrap();
            assert!(r.is_quasicopula && !r.is_two_increasing, "φ={f}");
            assert!(r.worst_volume < -1e-6);
            let centre =
                h_volume(&FootruleBound::upper(fp(f)), pt(0.49, 0.49), pt(0.51, 0.51)).unwrap();
            assert!(centre < -1e-6, "φ={f}: {centre}");
        }
    }
}
