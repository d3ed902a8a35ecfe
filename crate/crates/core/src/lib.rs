//! Best-possible bounds on bivariate copulas with a prescribed value of
//! Spearman's footrule or Gini's gamma, the regions of attainable
//! (measure, Blomqvist's beta) pairs, and the effectiveness of the bounds.

// `!(x > 0.0)` is used on purpose so that NaN is rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod concordance;
pub mod copula;
pub mod effectiveness;
pub mod error;
pub mod footrule;
pub mod gini;
pub mod quadrature;
pub mod regions;

pub use error::{Error, Result};
