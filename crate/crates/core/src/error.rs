use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("point ({u}, {v}) lies outside the unit square")]
    PointOutOfSquare { u: f64, v: f64 },

    #[error("invalid specification: {0}")]
    InvalidSpec(String),

    #[error("rectangle corners are not ordered: lo=({lo_u}, {lo_v}), hi=({hi_u}, {hi_v})")]
    BadRectangle {
        lo_u: f64,
        lo_v: f64,
        hi_u: f64,
        hi_v: f64,
    },

    #[error("{what} = {value} is outside [{lo}, {hi}]")]
    OutOfRange {
        what: &'static str,
        value: f64,
        lo: f64,
        hi: f64,
    },

    #[error("conditional distribution decreases at u = {u} (by {drop:e})")]
    NotMonotone { u: f64, drop: f64 },

    #[error("grid is not a copula: cell ({i}, {j}) has volume {volume:e}")]
    NotACopulaGrid { i: usize, j: usize, volume: f64 },

    #[error("{0} is not a copula (fails the 2-increasing audit)")]
    NotACopula(String),

    #[error("measure pair kind mismatch: {0}")]
    KindMismatch(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("bound ordering violated at ({u}, {v}): upper - lower = {diff:e}")]
    BoundOrdering { u: f64, v: f64, diff: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_range(what: &'static str, value: f64, lo: f64, hi: f64) -> Result<f64> {
    if value.is_nan() || value < lo || value > hi {
        Err(Error::OutOfRange {
            what,
            value,
            lo,
            hi,
        })
    } else {
        Ok(value)
    }
}
