//! Build root lattices, direct sums and rescalings, and inspect the data the
//! rest of the crate consumes: determinant, level, root counts, shells and
//! the distinguished coset classes.

use jacobi_forms::lattice::{build_named, NamedFamily, ReflectiveKind};
use jacobi_forms::rat::render;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let e8 = build_named(NamedFamily::E8, 8, 1)?;
    let (det, level) = e8.det_and_level();
    println!(
        "{}: rank {}, det {}, level {}, roots {}",
        e8.label(),
        e8.rank(),
        det,
        level,
        e8.count_roots()
    );

    let a1 = build_named(NamedFamily::A, 1, 1)?;
    let big = e8.direct_sum(&e8).direct_sum(&a1);
    println!(
        "{}: rank {}, roots {}",
        big.label(),
        big.rank(),
        big.count_roots()
    );
    for class in big.reflective_classes(ReflectiveKind::TwoReflective)? {
        println!(
            "  order-2 coset {:?}, norm mod 2 = {}, short vectors = {}",
            class.representative().pairings(),
            render(class.norm_mod_two()),
            big.count_r_mu(class.representative())?
        );
    }

    // a prime-level lattice and its isotropic cosets
    let d4 = build_named(NamedFamily::D, 4, 1)?;
    println!("{}: level {}", d4.label(), d4.level());
    for class in d4.reflective_classes(ReflectiveKind::PrimeLevel(2))? {
        println!(
            "  isotropic coset {:?}, vectors of norm 1/2: {}",
            class.representative().pairings(),
            d4.count_c_gamma(&class, 2)?
        );
    }

    // rescaling multiplies every norm; the minimal dual shell is unchanged
    // as a set of pairing vectors
    let a2 = build_named(NamedFamily::A, 2, 1)?;
    for m in [1i64, 2, 3] {
        let scaled = a2.rescale(m)?;
        let (norm, shell) = scaled.minimal_dual_vectors()?;
        println!(
            "{}: minimal dual norm {}, shell size {}",
            scaled.label(),
            render(&norm),
            shell.len()
        );
    }
    Ok(())
}
