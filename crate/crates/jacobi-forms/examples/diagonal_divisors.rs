//! Search for modular forms vanishing exactly on the diagonal, over the
//! rescaled lattices nA1(m), An(m) and Dn(m). The constant-term identity
//! forces the weight k from (n, m, c) alone; positivity and the singular
//! weight k >= rank/2 then cut the tables down to finitely many cells.

use jacobi_forms::dd::{enumerate_an_dn, enumerate_na1, exclude_index_five, DdFamily};
use jacobi_forms::rat::render;

fn family_label(family: DdFamily, n: usize, m: i64) -> String {
    let base = match family {
        DdFamily::NA1 => format!("{n}A1"),
        DdFamily::An => format!("A{n}"),
        DdFamily::Dn => format!("D{n}"),
    };
    if m == 1 { base } else { format!("{base}({m})") }
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("nA1(m) with multiplicity c:");
    for cand in enumerate_na1(5)? {
        if cand.admissible {
            println!(
                "  m = {}, n = {}, c = {}: k = {}",
                cand.m,
                cand.n,
                cand.c,
                render(&cand.k)
            );
        }
    }

    // A1(5) passes the linear identity but fails on the full expansion
    let ex = exclude_index_five()?;
    println!("index-5 exclusion: q^0 layer {:?}", ex.q0.iter().map(|(r, c)| (r, render(c))).collect::<Vec<_>>());
    println!(
        "  c(1, zeta^5) = {} < 0, so the form is not holomorphic: {}",
        render(&ex.q1_zeta5),
        ex.verdict
    );
    println!(
        "  indexes 1..4 all nonnegative there: {:?}",
        ex.counterparts_nonnegative
    );

    println!("An(m) and Dn(m):");
    for cand in enumerate_an_dn()? {
        if cand.admissible {
            let alt = cand
                .alt_weight
                .as_ref()
                .map(|w| format!(" (8-vector convention: {})", render(w)))
                .unwrap_or_default();
            println!(
                "  {} at c = {}: k = {}{}",
                family_label(cand.family, cand.n, cand.m),
                cand.c,
                render(&cand.k),
                alt
            );
        }
    }
    Ok(())
}
