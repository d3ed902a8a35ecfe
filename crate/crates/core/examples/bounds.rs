//! Footrule and gamma bounds at a few points, with the active piece of the
//! upper bounds, and a check that the bounds invert the pointwise minima.

use copula_bounds::concordance::{f_lower, g_lower};
use copula_bounds::copula::{frechet_m, frechet_w, UnitPoint};
use copula_bounds::footrule::{f_lower_bound, f_upper_with_region, FootruleParam};
use copula_bounds::gini::{g_lower_bound, g_upper_with_region, GiniParam};

fn main() -> copula_bounds::Result<()> {
    let phi = FootruleParam::new(0.1)?;
    let gamma = GiniParam::new(-0.3)?;
    println!("phi = {}, gamma = {}", phi.value(), gamma.value());
    println!(
        "{:>5} {:>5} | {:>8} {:>8} {:>8} {:>8} | {:>8} {:>8} {:>8}",
        "a", "b", "W", "F-lo", "F-up", "M", "G-lo", "G-up", "regions"
    );
    for &(a, b) in &[
        (0.5, 0.5),
        (0.2, 0.3),
        (0.3, 0.8),
        (0.7, 0.6),
        (0.1, 0.95),
        (0.45, 0.55),
    ] {
        let p = UnitPoint::new(a, b)?;
        let (fu, dr) = f_upper_with_region(phi, p);
        let (gu, or) = g_upper_with_region(gamma, p);
        println!(
            "{a:>5.2} {b:>5.2} | {:>8.5} {:>8.5} {fu:>8.5} {:>8.5} | {:>8.5} {gu:>8.5} {:>4}/{or}",
            frechet_w(p),
            f_lower_bound(phi, p),
            frechet_m(p),
            g_lower_bound(gamma, p),
            dr.to_string(),
        );
        // where the upper bound is below M, the minimal footrule through it is phi
        if fu < frechet_m(p) - 1e-12 {
            assert!((f_lower(a, b, fu)? - phi.value()).abs() < 1e-9);
        }
        if gu < frechet_m(p) - 1e-12 {
            assert!((g_lower(a, b, gu)? - gamma.value()).abs() < 1e-9);
        }
    }
    Ok(())
}
