//! Draws points from the footrule lower bound F_φ and compares the sample
//! footrule with its exact value.

use copula_bounds::copula::{empirical_footrule, sample_conditional};
use copula_bounds::footrule::{phi_of_f_lower, FootruleBound, FootruleParam};

fn main() -> copula_bounds::Result<()> {
    let count = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(20_000);
    println!("{:>6} {:>10} {:>10} {:>8}", "phi", "exact", "sample", "n");
    for (seed, &f) in [-0.5, -0.25, 0.0, 0.3, 0.6, 0.9].iter().enumerate() {
        let p = FootruleParam::new(f)?;
        let pts = sample_conditional(&FootruleBound::lower(p), count, seed as u64, 1e-9)?;
        println!(
            "{f:>6.2} {:>10.5} {:>10.5} {count:>8}",
            phi_of_f_lower(p),
            empirical_footrule(&pts)
        );
    }
    Ok(())
}
