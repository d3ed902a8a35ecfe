//! Grid audit of the bounds: the lower footrule bound is a copula, the upper
//! one only a quasi-copula, with its most negative rectangle located.

use copula_bounds::copula::{check_quasicopula, most_negative_rectangle, BivariateEvaluator};
use copula_bounds::footrule::{FootruleBound, FootruleParam};
use copula_bounds::gini::{GiniBound, GiniParam};

fn main() -> copula_bounds::Result<()> {
    let bounds: Vec<Box<dyn BivariateEvaluator>> = vec![
        Box::new(FootruleBound::lower(FootruleParam::new(-0.2)?)),
        Box::new(FootruleBound::upper(FootruleParam::new(-0.2)?)),
        Box::new(GiniBound::lower(GiniParam::new(-0.4)?)),
        Box::new(GiniBound::upper(GiniParam::new(-0.4)?)),
        Box::new(GiniBound::lower(GiniParam::new(0.4)?)),
        Box::new(GiniBound::upper(GiniParam::new(0.4)?)),
    ];
    println!(
        "{:<14} {:>6} {:>6} {:>11}  most negative rectangle",
        "bound", "quasi", "2-inc", "cell"
    );
    for c in &bounds {
        let r = check_quasicopula(c, 200, 1e-12)?;
        let (v, lo, hi) = most_negative_rectangle(c, 200)?;
        let rect = if v < -1e-12 {
            format!(
                "{v:.3e} on [{:.3}, {:.3}] x [{:.3}, {:.3}]",
                lo.u(),
                hi.u(),
                lo.v(),
                hi.v()
            )
        } else {
            "none".to_string()
        };
        println!(
            "{:<14} {:>6} {:>6} {:>11.3e}  {rect}",
            c.label(),
            r.is_quasicopula,
            r.is_two_increasing,
            r.worst_volume
        );
    }
    Ok(())
}
