//! Footrule, Gini's gamma and Blomqvist's beta of assorted copulas, and the
//! concordance of M with an extremal copula by quadrature and in closed form.

use copula_bounds::concordance::{
    beta, gamma, phi, q_concordance, q_m_extremal_lower, q_m_extremal_upper,
};
use copula_bounds::copula::{Basic, BivariateEvaluator, ExtremalCopulaSpec, GridFunction};
use copula_bounds::footrule::{
    phi_of_f_lower, phi_of_f_upper_closed_form, FootruleBound, FootruleParam,
};
use copula_bounds::gini::{GiniBound, GiniParam};
use copula_bounds::quadrature::QuadratureConfig;

fn main() -> copula_bounds::Result<()> {
    let q = QuadratureConfig::default();
    let f = FootruleParam::new(0.0)?;
    let copulas: Vec<Box<dyn BivariateEvaluator>> = vec![
        Box::new(Basic::W),
        Box::new(Basic::Pi),
        Box::new(Basic::M),
        Box::new(FootruleBound::lower(f)),
        Box::new(FootruleBound::upper(f)),
        Box::new(GiniBound::lower(GiniParam::new(0.2)?)),
        Box::new(GiniBound::upper(GiniParam::new(0.2)?)),
        Box::new(ExtremalCopulaSpec::upper(0.6, 0.3, 0.05)?),
    ];
    println!("{:<28} {:>9} {:>9} {:>9}", "copula", "phi", "gamma", "beta");
    for c in &copulas {
        println!(
            "{:<28} {:>9.5} {:>9.5} {:>9.5}",
            c.label(),
            phi(c, q).value,
            gamma(c, q).value,
            beta(c).value
        );
    }
    println!(
        "footrule of f-lower:0 in closed form {:.6}",
        phi_of_f_lower(f)
    );
    println!(
        "footrule of f-upper:0 in closed form {:.6}",
        phi_of_f_upper_closed_form(f)
    );

    let m = GridFunction::from_evaluator(&Basic::M, 2000)?;
    for spec in [
        ExtremalCopulaSpec::lower(0.3, 0.6, 0.25)?,
        ExtremalCopulaSpec::lower(0.7, 0.2, 0.15)?,
    ] {
        println!(
            "Q(M, {}) = {:.5} by quadrature, {:.5} exact",
            spec.label(),
            q_concordance(&m, &spec)?,
            q_m_extremal_lower(&spec)?
        );
    }
    let up = ExtremalCopulaSpec::upper(0.6, 0.3, 0.05)?;
    println!(
        "Q(M, {}) = {:.5} by quadrature, {:.5} exact",
        up.label(),
        q_concordance(&m, &up)?,
        q_m_extremal_upper(&up)?
    );
    Ok(())
}
