//! Footrule of the upper bound F̄_φ: quadrature against the closed form,
//! and the residual of the variant without the (3 - r) denominator.

use copula_bounds::footrule::{
    phi_of_f_upper, phi_of_f_upper_closed_form, phi_of_f_upper_printed_form, FootruleParam,
};
use copula_bounds::quadrature::QuadratureConfig;

fn main() {
    let q = QuadratureConfig::simpson(8192).unwrap();
    println!("phi,quadrature,closed_form,residual,variant,variant_residual");
    for i in 0..=15 {
        let f = -0.5 + 0.05 * i as f64;
        let p = FootruleParam::new(f).unwrap();
        let quad = phi_of_f_upper(p, q);
        let exact = phi_of_f_upper_closed_form(p);
        let variant = phi_of_f_upper_printed_form(p);
        println!(
            "{f:.2},{quad:.9},{exact:.9},{:.2e},{variant:.9},{:.2e}",
            exact - quad,
            variant - quad
        );
    }
}
