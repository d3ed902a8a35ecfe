use std::sync::Arc;

use super::point::UnitPoint;

/// A deterministic function on the unit square: copulas, quasi-copulas and
/// the local bounds all implement this.
pub trait BivariateEvaluator: Send + Sync {
    fn eval(&self, p: UnitPoint) -> f64;

    fn label(&self) -> String;

    /// Evaluates at `(u, v)`, clamping the coordinates into the square.
    #[inline]
    fn at(&self, u: f64, v: f64) -> f64 {
        self.eval(UnitPoint::clamped(u, v))
    }
}

impl<T: BivariateEvaluator + ?Sized> BivariateEvaluator for &T {
    fn eval(&self, p: UnitPoint) -> f64 {
        (**self).eval(p)
    }
    fn label(&self) -> String {
        (**self).label()
    }
}

impl<T: BivariateEvaluator + ?Sized> BivariateEvaluator for Box<T> {
    fn eval(&self, p: UnitPoint) -> f64 {
        (**self).eval(p)
    }
    fn label(&self) -> String {
        (**self).label()
    }
}

impl<T: BivariateEvaluator + ?Sized> BivariateEvaluator for Arc<T> {
    fn eval(&self, p: UnitPoint) -> f64 {
        (**self).eval(p)
    }
    fn label(&self) -> String {
        (**self).label()
    }
}

/// Lower Fréchet–Hoeffding bound `W(u,v) = max{0, u+v-1}`.
#[inline]
pub fn frechet_w(p: UnitPoint) -> f64 {
    // u + v - 1 can round above min(u, v) when one argument is 1
    (p.u() + p.v() - 1.0).max(0.0).min(p.u().min(p.v()))
}

/// Upper Fréchet–Hoeffding bound `M(u,v) = min{u, v}`.
#[inline]
pub fn frechet_m(p: UnitPoint) -> f64 {
    p.u().min(p.v())
}

/// Independence copula `Π(u,v) = uv`.
#[inline]
pub fn product_pi(p: UnitPoint) -> f64 {
    p.u() * p.v()
}

/// Maximal asymmetry `min{u, v, 1-u, 1-v, |v-u|}` over all copulas.
pub fn max_asymmetry(p: UnitPoint) -> f64 {
    let (u, v) = (p.u(), p.v());
    u.min(v).min(1.0 - u).min(1.0 - v).min((v - u).abs())
}

/// The three fundamental copulas.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Basic {
    W,
    M,
    Pi,
}

impl BivariateEvaluator for Basic {
    #[inline]
    fn eval(&self, p: UnitPoint) -> f64 {
        match self {
            Basic::W => frechet_w(p),
            Basic::M => frechet_m(p),
            Basic::Pi => product_pi(p),
        }
    }

    fn label(&self) -> String {
        match self {
            Basic::W => "W",
            Basic::M => "M",
            Basic::Pi => "Pi",
        }
        .to_string()
    }
}

/// Symmetry operations on the square.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TransformKind {
    /// `C^t(u,v) = C(v,u)`
    Transpose,
    /// `C^{σ1}(u,v) = v - C(1-u, v)`
    Sigma1,
    /// `C^{σ2}(u,v) = u - C(u, 1-v)`
    Sigma2,
    /// `Ĉ(u,v) = u + v - 1 + C(1-u, 1-v)`
    Survival,
}

/// An evaluator seen through one of the [`TransformKind`] symmetries.
#[derive(Debug, Clone)]
pub struct Transformed<C> {
    inner: C,
    kind: TransformKind,
}

pub fn transform<C: BivariateEvaluator>(inner: C, kind: TransformKind) -> Transformed<C> {
    Transformed { inner, kind }
}

impl<C: BivariateEvaluator> BivariateEvaluator for Transformed<C> {
    fn eval(&self, p: UnitPoint) -> f64 {
        let (u, v) = (p.u(), p.v());
        let c = &self.inner;
        match self.kind {
            TransformKind::Transpose => c.eval(p.transposed()),
            TransformKind::Sigma1 => v - c.at(1.0 - u, v),
            TransformKind::Sigma2 => u - c.at(u, 1.0 - v),
            TransformKind::Survival => u + v - 1.0 + c.eval(p.radial()),
        }
    }

    fn label(&self) -> String {
        let tag = match self.kind {
            TransformKind::Transpose => "t",
            TransformKind::Sigma1 => "sigma1",
            TransformKind::Sigma2 => "sigma2",
            TransformKind::Survival => "survival",
        };
        format!("{}^{}", self.inner.label(), tag)
    }
}

/// Wraps a closure as an evaluator.
pub struct FnEvaluator<F> {
    f: F,
    label: String,
}

impl<F> FnEvaluator<F>
where
    F: Fn(UnitPoint) -> f64 + Send + Sync,
{
    pub fn new(label: impl Into<String>, f: F) -> Self {
        Self {
            f,
            label: label.into(),
        }
    }
}

impl<F> BivariateEvaluator for FnEvaluator<F>
where
    F: Fn(UnitPoint) -> f64 + Send + Sync,
{
    fn eval(&self, p: UnitPoint) -> f64 {
        (self.f)(p)
    }
    fn label(&self) -> String {
        self.label.clone()
    }
}
