//! The constant-term identity for weight-0 weakly holomorphic Jacobi forms:
//! with at most a first-order q-pole,
//!
//!   sum_l c(0,l) - (12/rank) sum_l (l,l) c(0,l) - 24 sum_l c(-1,l) = 0.
//!
//! It is the q^0 coefficient of a weight-2 modular form that has none, and
//! it is the engine behind every weight computation in this crate.

use jacobi_forms::jacobi::ez::{ez_generator, WeakGenerator};
use jacobi_forms::jacobi::JacobiExpansion;
use jacobi_forms::qseries::{delta, eisenstein, EisensteinKind};
use jacobi_forms::rat::{render, Rat};
use num_traits::Zero;

fn report(name: &str, phi: &JacobiExpansion) -> Result<(), Box<dyn std::error::Error>> {
    let mut plain = Rat::zero();
    let mut weighted = Rat::zero();
    let mut pole = Rat::zero();
    for ((n, l), c) in phi.terms() {
        match n {
            -1 => pole += c,
            0 => {
                plain += c;
                weighted += c * phi.index().norm_of_pairings(l);
            }
            _ => {}
        }
    }
    let residual = phi.gritsenko_residual()?;
    println!(
        "{name}: sum c(0,l) = {}, sum (l,l)c(0,l) = {}, sum c(-1,l) = {}",
        render(&plain),
        render(&weighted),
        render(&pole)
    );
    println!(
        "  {} - (12/{})*{} - 24*{} = {}",
        render(&plain),
        phi.rank(),
        render(&weighted),
        render(&pole),
        render(&residual)
    );
    assert!(residual.is_zero());
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // holomorphic at q^-1: only the q^0 layer zeta + 10 + 1/zeta contributes
    let phi = ez_generator(WeakGenerator::Phi01, 2)?;
    report("phi_{0,1}", &phi)?;

    // j * phi_{0,1} picks up first-order poles in every elliptic direction
    let e4 = eisenstein(EisensteinKind::E4, 4)?;
    let j = e4.pow(3).mul(&delta(4, true)?);
    let jphi = ez_generator(WeakGenerator::Phi01, 3)?.mul_scalar(&j)?;
    report("j * phi_{0,1}", &jphi)?;

    // reading the identity the other way determines the weight of a lift:
    // an input c*(root orbit) + 2k + O(q) over E8 admits exactly one k
    let e8 = jacobi_forms::lattice::build_named(jacobi_forms::lattice::NamedFamily::E8, 8, 1)?;
    let (_, shell) = e8.minimal_dual_vectors()?;
    let k = jacobi_forms::dd::dd_weight(&e8, &shell, 1)?;
    println!("forced weight over E8 at multiplicity 1: k = {}", render(&k));
    Ok(())
}
