//! Rank and root-count bounds for reflective forms on prime-level lattices,
//! from the valence inequality on level-p Eisenstein quotients, plus the
//! heat-operator elimination chain that pins the remaining multiplicities.

use jacobi_forms::rat::{render, ri};
use jacobi_forms::reflective::{
    chain_constants, min_root_bound, riemann_roch_rank_bound, solve_g_vanishing, u_nonvanishing,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // rank bound 8 + 24/(p+1) per prime level
    for p in [2i64, 3, 5, 7] {
        println!("p = {p}: rank <= {}", render(&riemann_roch_rank_bound(p)?));
    }

    // the second chain constant equals 1 only on isolated cells (n0, a);
    // there the weight-4 step decides nothing and the weight drops out of
    // the degenerate linear condition instead
    for (a, label) in [(6i64, "norm -1/2 coset"), (12, "p = 2"), (8, "p = 3")] {
        for n0 in 9..=23i64 {
            let c = chain_constants(n0, &ri(a), &ri(n0), 1)?;
            if c.c2 == ri(1) {
                let k = solve_g_vanishing(n0, &ri(a)).expect("degenerate cell");
                println!("a = {a} ({label}): c2 = 1 at n0 = {n0}, forced d/beta0 = {}", render(&k));
            }
        }
    }

    // off those cells the weight-6 residual u = A*d + B*beta0 often has a
    // fixed sign on the admissible region d >= n0, beta0 >= 1
    for n0 in [13i64, 14] {
        println!("u nonvanishing at (n0 = {n0}, a = 6): {}", u_nonvanishing(n0, &ri(6))?);
    }
    println!("u nonvanishing at (n0 = 16, a = 12): {}", u_nonvanishing(16, &ri(12))?);

    // minimum root counts needed to reach a target weight per multiplicity
    println!("p = 2, n0 = 20, k/beta0 = 24: R >= {}", min_root_bound(20, 2, &ri(24))?);
    println!("p = 3, n0 = 18, k/beta0 = 48: R >= {}", min_root_bound(18, 3, &ri(48))?);
    Ok(())
}
