//! When the divisor is the full norm-2 orbit, the weight-4 and weight-6
//! correction forms in the elimination chain have constant terms
//!
//!   g0 = R(1 - 14/n0) + 6(n0 - 26),   h0 = 24R/n0 - 720,
//!
//! and above rank 14 both are forced to vanish. The unique common zero is
//! rank 16 with 480 roots, the even unimodular point, where the chain
//! collapses onto the theta series of E8+E8.

use jacobi_forms::jacobi::JacobiExpansion;
use jacobi_forms::lattice::{build_named, NamedFamily};
use jacobi_forms::qseries::{delta, eisenstein, EisensteinKind};
use jacobi_forms::rat::{render, ri, rq};
use jacobi_forms::reflective::complete_divisor_case;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // sweep the root counts of the familiar rank-16 candidates
    for (n0, roots) in [(16i64, 480i64), (16, 224), (17, 480), (20, 760), (15, 420)] {
        let r = complete_divisor_case(n0, roots)?;
        println!(
            "n0 = {n0}, R = {roots}: g0 = {}, h0 = {}, verdict {}",
            render(&r.g0),
            render(&r.h0),
            r.verdict
        );
    }

    let mut zeros = Vec::new();
    for n0 in 15..=23i64 {
        for roots in 0..=1200i64 {
            let r = complete_divisor_case(n0, roots)?;
            if r.g0 == ri(0) && r.h0 == ri(0) {
                zeros.push((n0, roots));
            }
        }
    }
    println!("common zeros above rank 14: {zeros:?}");

    // at (16, 480): phi = (E4/Delta) theta, f2 = -3 H_0(phi), and
    // E4^2 phi - E6 f2 = 1728 theta exactly
    let trunc = 1;
    let e8 = build_named(NamedFamily::E8, 8, 1)?;
    let theta8 = JacobiExpansion::theta_series(&e8, trunc + 2)?;
    let theta = theta8.tensor(&theta8)?;
    let e4 = eisenstein(EisensteinKind::E4, trunc + 3)?;
    let e6 = eisenstein(EisensteinKind::E6, trunc + 3)?;
    let inv = delta(trunc + 3, true)?;

    let phi = theta.mul_scalar(&e4.mul(&inv))?;
    println!("c(0,0) of phi = {}", render(&phi.coefficient(0, &vec![0; 16])?));

    let f2 = phi.heat_hk(0)?.scale(&rq(24, 16 - 24));
    println!(
        "f2 layer q^-1..q^0: c(-1,0) = {}, c(0,0) = {}",
        render(&f2.coefficient(-1, &vec![0; 16])?),
        render(&f2.coefficient(0, &vec![0; 16])?)
    );

    let lhs = phi.mul_scalar(&e4.pow(2))?.sub(&f2.mul_scalar(&e6)?)?;
    let diff = lhs.sub(&theta.scale(&ri(1728)))?;
    println!(
        "E4^2*phi - E6*f2 - 1728*theta vanishes through q^{}: {}",
        diff.trunc() - 1,
        diff.is_zero()
    );
    Ok(())
}
