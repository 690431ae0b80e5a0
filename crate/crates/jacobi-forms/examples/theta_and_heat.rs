//! Theta series as Jacobi forms, and the heat operator that raises weight
//! by two while acting diagonally on Fourier coefficients.

use jacobi_forms::jacobi::ez::{ez_generator, WeakGenerator};
use jacobi_forms::jacobi::JacobiExpansion;
use jacobi_forms::lattice::{build_named, NamedFamily};
use jacobi_forms::rat::render;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let a2 = build_named(NamedFamily::A, 2, 1)?;
    let theta = JacobiExpansion::theta_series(&a2, 4)?;
    println!(
        "theta({}): weight {}, class {:?}",
        a2.label(),
        render(&theta.weight()),
        theta.classify()
    );
    for n in 0..theta.trunc() {
        let layer: usize = theta.terms().iter().filter(|((m, _), _)| *m == n).count();
        println!("  q^{n}: {layer} terms");
    }

    // the heat operator multiplies c(n, l) by (2n - (l,l))/2, so the theta
    // relation c(n, l) != 0 => 2n = (l,l) kills every term
    let heated = theta.heat();
    println!(
        "heat(theta) is zero: {} (weight tag {} -> {})",
        heated.is_zero(),
        render(&theta.weight()),
        render(&heated.weight())
    );

    // the modified operator H_k adds the quasimodular correction and sends
    // weight k to honest weight k + 2; for a theta series k = rank/2 makes
    // the correction factor 2k - rank vanish too, the classical heat equation
    let corrected = theta.heat_hk(1)?;
    println!("H_1(theta) is zero (heat equation): {}", corrected.is_zero());

    // on a weak form H_k acts nontrivially
    let phi = ez_generator(WeakGenerator::Phi01, 3)?;
    let h0 = phi.heat_hk(0)?;
    h0.verify_elliptic_invariance()?;
    println!(
        "H_0(phi_{{0,1}}): weight {}, c(0, 0) = {}, c(1, 1) = {}",
        render(&h0.weight()),
        render(&h0.coefficient(0, &[0])?),
        render(&h0.coefficient(1, &[1])?)
    );

    // the plain heat operator is a derivation for the tensor product; theta
    // series would make both sides zero, so reuse the weak form
    let prod = phi.tensor(&phi)?;
    let lhs = prod.heat();
    let rhs = phi.heat().tensor(&phi)?.add(&phi.tensor(&phi.heat())?)?;
    println!(
        "Leibniz rule on phi_{{0,1}} x phi_{{0,1}}: {}",
        lhs.sub(&rhs)?.is_zero()
    );
    Ok(())
}
