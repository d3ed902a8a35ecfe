//! Effectiveness of the footrule and gamma bounds next to the four-decimal reference values.

use std::time::Instant;

use copula_bounds::effectiveness::{reference_value, table1};

fn main() -> copula_bounds::Result<()> {
    let n = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(2048);
    let start = Instant::now();
    let rows = table1(n)?;
    println!(
        "{:<9} {:>5} {:>9} {:>9} {:>9}",
        "measure", "k", "m", "table", "diff"
    );
    for r in &rows {
        let t = reference_value(r.kind, r.k).unwrap_or(f64::NAN);
        println!(
            "{:<9} {:>5.1} {:>9.5} {:>9.4} {:>+9.5}",
            r.kind.name(),
            r.k,
            r.m,
            t,
            r.m - t
        );
    }
    println!("n = {n}, {:.2?}", start.elapsed());
    Ok(())
}
