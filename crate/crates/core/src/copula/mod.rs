//! Copula primitives: points, evaluators, symmetries, extremal copulas,
//! shuffles of `M`, gridded functions, axiom audits and samplers.

mod audit;
mod evaluator;
mod extremal;
mod grid;
mod point;
mod sample;
mod shuffle;

pub use audit::{
    audit_grid, check_quasicopula, h_volume, most_negative_rectangle, most_negative_rectangle_in,
    AxiomReport,
};
pub use evaluator::{
    frechet_m, frechet_w, max_asymmetry, product_pi, transform, Basic, BivariateEvaluator,
    FnEvaluator, TransformKind, Transformed,
};
pub use extremal::{extremal_eval, max_offset, ExtremalCopulaSpec, ExtremalKind};
pub use grid::GridFunction;
pub use point::{UnitPoint, CLAMP_SLACK};
pub use sample::{empirical_footrule, sample_conditional, DERIVATIVE_STEP};
pub use shuffle::{sample_shuffle, Piece, ShuffleSpec};
