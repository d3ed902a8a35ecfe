//! Gini's gamma as a difference of footrules, γ(C) = ⅔(φ(C) - φ(C^σ1)),
//! on random checkerboard copulas.

use copula_bounds::concordance::{gamma, phi};
use copula_bounds::copula::{transform, GridFunction, TransformKind};
use copula_bounds::quadrature::QuadratureConfig;

fn main() {
    let q = QuadratureConfig::simpson(512).unwrap();
    println!(
        "{:>4} {:>4} {:>10} {:>10} {:>10}",
        "seed", "m", "gamma", "identity", "diff"
    );
    for seed in 0..8u64 {
        let m = 2 + seed as usize % 5;
        let c = GridFunction::random_checkerboard_seeded(m, seed);
        let g = gamma(&c, q).value;
        let via = 2.0 / 3.0
            * (phi(&c, q).value - phi(&transform(c.clone(), TransformKind::Sigma1), q).value);
        println!("{seed:>4} {m:>4} {g:>10.6} {via:>10.6} {:>10.2e}", g - via);
    }
}
