use crate::error::{Error, Result};

/// Slack tolerated outside `[0, 1]` before a coordinate is rejected.
pub const CLAMP_SLACK: f64 = 1e-12;

/// A point `(u, v)` of the closed unit square.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitPoint {
    u: f64,
    v: f64,
}

fn clamp_coord(x: f64) -> Option<f64> {
    if x.is_nan() || !(-CLAMP_SLACK..=1.0 + CLAMP_SLACK).contains(&x) {
        None
    } else {
        Some(x.clamp(0.0, 1.0))
    }
}

impl UnitPoint {
    /// Builds a point, clamping coordinates that overshoot `[0, 1]` by at most
    /// [`CLAMP_SLACK`] and rejecting anything farther out.
    pub fn new(u: f64, v: f64) -> Result<Self> {
        match (clamp_coord(u), clamp_coord(v)) {
            (Some(u), Some(v)) => Ok(Self { u, v }),
            _ => Err(Error::PointOutOfSquare { u, v }),
        }
    }

    /// Clamps both coordinates into `[0, 1]` unconditionally. For node
    /// arithmetic that is known to stay inside the square.
    #[inline]
    pub fn clamped(u: f64, v: f64) -> Self {
        Self {
            u: u.clamp(0.0, 1.0),
            v: v.clamp(0.0, 1.0),
        }
    }

    #[inline]
    pub fn u(&self) -> f64 {
        self.u
    }

    #[inline]
    pub fn v(&self) -> f64 {
        self.v
    }

    /// The point reflected across the main diagonal.
    #[inline]
    pub fn transposed(&self) -> Self {
        Self {
            u: self.v,
            v: self.u,
        }
    }

    /// The point reflected through the centre `(1/2, 1/2)`.
    #[inline]
    pub fn radial(&self) -> Self {
        Self {
            u: 1.0 - self.u,
            v: 1.0 - self.v,
        }
    }
}
