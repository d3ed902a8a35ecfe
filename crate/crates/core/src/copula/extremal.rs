use super::evaluator::{frechet_m, frechet_w, BivariateEvaluator};
use super::point::UnitPoint;
use super::shuffle::{Piece, ShuffleSpec};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtremalKind {
    Lower,
    Upper,
}

/// Minimal (`Lower`) or maximal (`Upper`) copula through a prescribed value.
///
/// `Lower` is the smallest copula with `C(a,b) = W(a,b) + c`. `Upper` is the
/// largest copula with `C(b,a) = M(a,b) - c`; note the transposed anchor, so
/// the maximal copula through `(a,b)` is `Upper` built on `(b,a)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExtremalCopulaSpec {
    a: f64,
    b: f64,
    c: f64,
    kind: ExtremalKind,
}

/// Largest admissible offset `c` at anchor `(a, b)`.
pub fn max_offset(a: f64, b: f64) -> f64 {
    a.min(b).min(1.0 - a).min(1.0 - b)
}

impl ExtremalCopulaSpec {
    pub fn new(kind: ExtremalKind, a: f64, b: f64, c: f64) -> Result<Self> {
        if !(a > 0.0 && a < 1.0 && b > 0.0 && b < 1.0) {
            return Err(Error::InvalidSpec(format!(
                "anchor ({a}, {b}) must lie in the open unit square"
            )));
        }
        let cmax = max_offset(a, b);
        if c.is_nan() || c < -1e-12 || c > cmax + 1e-12 {
            return Err(Error::InvalidSpec(format!(
                "offset c = {c} outside [0, {cmax}]"
            )));
        }
        Ok(Self {
            a,
            b,
            c: c.clamp(0.0, cmax),
            kind,
        })
    }

    pub fn lower(a: f64, b: f64, c: f64) -> Result<Self> {
        Self::new(ExtremalKind::Lower, a, b, c)
    }

    pub fn upper(a: f64, b: f64, c: f64) -> Result<Self> {
        Self::new(ExtremalKind::Upper, a, b, c)
    }

    /// Minimal copula taking the value `d` at `(a, b)`.
    pub fn lower_through(a: f64, b: f64, d: f64) -> Result<Self> {
        let w = (a + b - 1.0).max(0.0);
        Self::lower(a, b, d - w)
    }

    /// Maximal copula taking the value `d` at `(a, b)`.
    pub fn upper_through(a: f64, b: f64, d: f64) -> Result<Self> {
        Self::upper(b, a, a.min(b) - d)
    }

    pub fn a(&self) -> f64 {
        self.a
    }
    pub fn b(&self) -> f64 {
        self.b
    }
    pub fn c(&self) -> f64 {
        self.c
    }
    pub fn kind(&self) -> ExtremalKind {
        self.kind
    }

    /// `d1 = W(a,b) + c` for `Lower`, `d2 = M(a,b) - c` for `Upper`.
    pub fn anchor_value(&self) -> f64 {
        let p = UnitPoint::clamped(self.a, self.b);
        match self.kind {
            ExtremalKind::Lower => frechet_w(p) + self.c,
            ExtremalKind::Upper => frechet_m(p) - self.c,
        }
    }

    /// The point at which the copula takes [`anchor_value`](Self::anchor_value).
    pub fn pass_point(&self) -> UnitPoint {
        match self.kind {
            ExtremalKind::Lower => UnitPoint::clamped(self.a, self.b),
            ExtremalKind::Upper => UnitPoint::clamped(self.b, self.a),
        }
    }

    pub fn eval(&self, p: UnitPoint) -> f64 {
        let (u, v, a, b) = (p.u(), p.v(), self.a, self.b);
        let d = self.anchor_value();
        match self.kind {
            ExtremalKind::Lower => {
                let inner = d.min(u - a + d).min(v - b + d).min(u + v - a - b + d);
                frechet_w(p).max(inner)
            }
            ExtremalKind::Upper => {
                let inner = d.max(u - b + d).max(v - a + d).max(u + v - a - b + d);
                frechet_m(p).min(inner)
            }
        }
    }

    /// The same copula written as a shuffle of `M`. Zero-length pieces are
    /// dropped.
    pub fn to_shuffle(&self) -> ShuffleSpec {
        let (a, b) = (self.a, self.b);
        let d = self.anchor_value();
        let (cuts, targets, orientation) = match self.kind {
            ExtremalKind::Lower => ([0.0, a - d, a, 1.0 - b + d, 1.0], [4, 2, 3, 1], -1),
            ExtremalKind::Upper => ([0.0, d, b, a + b - d, 1.0], [1, 3, 2, 4], 1),
        };
        let raw: Vec<(f64, f64, usize)> =
            (0..4).map(|i| (cuts[i], cuts[i + 1], targets[i])).collect();
        // Renumber targets after dropping empty pieces.
        let kept: Vec<&(f64, f64, usize)> = raw.iter().filter(|(s, e, _)| e - s > 1e-15).collect();
        let mut order: Vec<usize> = kept.iter().map(|k| k.2).collect();
        order.sort_unstable();
        let pieces: Vec<Piece> = kept
            .iter()
            .map(|(s, e, t)| Piece {
                start: *s,
                end: *e,
                target: order.iter().position(|x| x == t).unwrap() + 1,
                orientation,
            })
            .collect();
        ShuffleSpec::from_pieces(pieces).expect("extremal shuffle pieces are valid")
    }
}

impl BivariateEvaluator for ExtremalCopulaSpec {
    fn eval(&self, p: UnitPoint) -> f64 {
        ExtremalCopulaSpec::eval(self, p)
    }

    fn label(&self) -> String {
        let k = match self.kind {
            ExtremalKind::Lower => "lower",
            ExtremalKind::Upper => "upper",
        };
        format!("extremal:{k},{},{},{}", self.a, self.b, self.c)
    }
}

/// Evaluates an extremal copula, checking the spec.
pub fn extremal_eval(spec: &ExtremalCopulaSpec, p: UnitPoint) -> f64 {
    spec.eval(p)
}
