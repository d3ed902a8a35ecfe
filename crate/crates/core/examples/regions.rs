//! Attainable (footrule, beta) and (gamma, beta) pairs. Each end of the beta
//! range is reached by an extremal copula through (½, ½); the example
//! rebuilds those copulas and measures them by quadrature.

use copula_bounds::concordance::{beta, gamma, phi};
use copula_bounds::copula::{ExtremalCopulaSpec, UnitPoint};
use copula_bounds::footrule::{f_lower_bound, f_upper_bound, FootruleParam};
use copula_bounds::gini::{g_lower_bound, GiniParam};
use copula_bounds::quadrature::QuadratureConfig;
use copula_bounds::regions::{beta_range_given_gamma, beta_range_given_phi};

fn main() -> copula_bounds::Result<()> {
    let q = QuadratureConfig::simpson(4096)?;
    let centre = UnitPoint::new(0.5, 0.5)?;

    println!(
        "{:>6} {:>9} {:>9} | {:>9} {:>9} {:>9} {:>9}",
        "phi", "beta lo", "beta hi", "phi(C1)", "beta(C1)", "phi(C2)", "beta(C2)"
    );
    for i in 0..=6 {
        let f = (10 * i - 45) as f64 / 100.0;
        let p = FootruleParam::new(f)?;
        let (lo, hi) = beta_range_given_phi(p);
        // largest copula with C(½,½) = F_φ(½,½), smallest with C(½,½) = F̄_φ(½,½)
        let c1 = ExtremalCopulaSpec::upper_through(0.5, 0.5, f_lower_bound(p, centre))?;
        let c2 = ExtremalCopulaSpec::lower_through(0.5, 0.5, f_upper_bound(p, centre))?;
        println!(
            "{f:>6.2} {lo:>9.5} {hi:>9.5} | {:>9.5} {:>9.5} {:>9.5} {:>9.5}",
            phi(&c1, q).value,
            beta(&c1).value,
            phi(&c2, q).value,
            beta(&c2).value
        );
    }

    println!(
        "\n{:>6} {:>9} {:>9} | {:>9} {:>9}",
        "gamma", "beta lo", "beta hi", "gamma(C)", "beta(C)"
    );
    for i in 0..=6 {
        let g = (15 * i - 45) as f64 / 100.0;
        let p = GiniParam::new(g)?;
        let (lo, hi) = beta_range_given_gamma(p);
        let c = ExtremalCopulaSpec::upper_through(0.5, 0.5, g_lower_bound(p, centre))?;
        println!(
            "{g:>6.2} {lo:>9.5} {hi:>9.5} | {:>9.5} {:>9.5}",
            gamma(&c, q).value,
            beta(&c).value
        );
    }
    Ok(())
}
