//! Weight of the reflective lift, read off two independent ways from one
//! weight-0 input: from the singular part (divisor multiplicities fed into
//! the weight formula) and from half the constant coefficient c(0,0).
//!
//! The three inputs lift to the 2-reflective forms of ranks 9, 10 and 17.

use jacobi_forms::jacobi::ez::{ez_generator, WeakGenerator};
use jacobi_forms::jacobi::JacobiExpansion;
use jacobi_forms::lattice::{build_named, NamedFamily, ReflectiveKind};
use jacobi_forms::qseries::{delta, eisenstein, EisensteinKind};
use jacobi_forms::rat::{render, rq};
use jacobi_forms::reflective::{derive_divisor, weight_two_reflective};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let trunc = 2;
    let e8 = build_named(NamedFamily::E8, 8, 1)?;
    let e41 = ez_generator(WeakGenerator::E41, trunc + 1)?;
    let theta = JacobiExpansion::theta_series(&e8, trunc + 1)?;
    let e4 = eisenstein(EisensteinKind::E4, trunc + 2)?;
    let inv = delta(trunc + 2, true)?;

    let rank9 = e41.mul_scalar(&e4.mul(&inv))?.tensor(&theta)?;
    let rank10 = e41.tensor(&e41)?.tensor(&theta)?.mul_scalar(&inv)?;
    let rank17 = e41.tensor(&theta)?.tensor(&theta)?.mul_scalar(&inv)?;

    for (name, phi) in [
        ("E4*E_{4,1} x theta(E8) / Delta", rank9),
        ("E_{4,1} x E_{4,1} x theta(E8) / Delta", rank10),
        ("E_{4,1} x theta(E8) x theta(E8) / Delta", rank17),
    ] {
        let divisor = derive_divisor(&phi, ReflectiveKind::TwoReflective)?;
        println!("{name} (rank {}):", phi.rank());
        println!("  root multiplicity beta0 = {}", divisor.beta0());
        for (class, beta) in divisor.classes() {
            println!(
                "    coset {:?}: beta = {beta}, short vectors = {}",
                class.representative().pairings(),
                phi.index().count_r_mu(class.representative())?
            );
        }
        let from_divisor = weight_two_reflective(phi.index(), &divisor)?;
        let from_constant = phi.coefficient(0, &vec![0; phi.rank()])? * rq(1, 2);
        println!(
            "  weight: {} from the divisor, {} from c(0,0)/2",
            render(&from_divisor),
            render(&from_constant)
        );
        assert_eq!(from_divisor, from_constant);
    }
    Ok(())
}
