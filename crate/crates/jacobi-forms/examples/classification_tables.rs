//! The rank-by-rank classification tables, with each row labeled by how it
//! is obtained: rows marked derived re-run their exact computations here,
//! rows marked documented quote results whose proofs live elsewhere.

use jacobi_forms::lattice::ReflectiveKind;
use jacobi_forms::reflective::{rank_classification, Derivation};

fn print_table(kind: ReflectiveKind) -> Result<(), Box<dyn std::error::Error>> {
    let table = rank_classification(kind)?;
    println!("{} classification:", table.kind);
    for row in &table.rows {
        println!("  rank {}: {}", row.ranks, row.conclusion);
        match &row.derivation {
            Derivation::Derived { checks } => {
                for check in checks {
                    println!("    [derived] {check}");
                }
            }
            Derivation::Documented { note } => println!("    [documented] {note}"),
        }
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    print_table(ReflectiveKind::TwoReflective)?;
    println!();
    print_table(ReflectiveKind::PrimeLevel(2))?;
    println!();
    print_table(ReflectiveKind::PrimeLevel(3))?;
    Ok(())
}
