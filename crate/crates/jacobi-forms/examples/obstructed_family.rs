//! The rank-17 family 2E8 + <2n>: only n = 1 carries a 2-reflective form.
//!
//! At n = 1 the tail contributes two extra norm-1/2 coset vectors whose free
//! multiplicity lets the weight formula hit the rank-17 value 75. For n >= 2
//! that coset orbit is empty, the formula is pinned by the 480 roots alone,
//! and the numbers disagree.

use jacobi_forms::rat::render;
use jacobi_forms::reflective::check_tn;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("n | roots | coset shell | weight formula | required | obstructed");
    for n in 1..=6 {
        let r = check_tn(n)?;
        println!(
            "{} |  {}  |      {}      | {:>7}        | {}       | {}",
            r.n,
            r.roots,
            r.r_mu_total,
            render(&r.formula_weight_per_beta0),
            render(&r.required_weight_per_beta0),
            r.obstructed
        );
    }
    Ok(())
}
