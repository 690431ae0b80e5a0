//! Construction of the named lattice families used throughout.

use super::IntegerLattice;
use crate::{Error, Result};

/// Families accepted by [`build_named`].
///
/// * `A`, `D`: root lattices in their Cartan-matrix basis (`D` needs n >= 4).
/// * `E8`: the even unimodular rank-8 lattice (n is ignored).
/// * `A1Scaled`: n orthogonal copies of A1 rescaled by m, Gram 2m * Id.
/// * `Rank1`: the rank-1 lattice <2nm>.
///
/// The `m` argument rescales the form by m in every family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedFamily {
    A,
    D,
    E8,
    A1Scaled,
    Rank1,
}

pub fn build_named(family: NamedFamily, n: usize, m: i64) -> Result<IntegerLattice> {
    if m < 1 {
        return Err(Error::InvalidInput(format!("scaling factor {m} must be >= 1")));
    }
    match family {
        NamedFamily::A => {
            if n < 1 {
                return Err(Error::InvalidInput("A_n needs n >= 1".into()));
            }
            IntegerLattice::new(cartan_chain(n), format!("A{n}"))?.rescale(m)
        }
        NamedFamily::D => {
            if n < 4 {
                return Err(Error::InvalidInput("D_n needs n >= 4".into()));
            }
            // chain on nodes 0..n-2 with node n-1 attached to node n-3
            let mut gram = cartan_chain(n);
            gram[n - 1][n - 2] = 0;
            gram[n - 2][n - 1] = 0;
            gram[n - 1][n - 3] = -1;
            gram[n - 3][n - 1] = -1;
            IntegerLattice::new(gram, format!("D{n}"))?.rescale(m)
        }
        NamedFamily::E8 => {
            // chain on nodes 0,2,3,4,5,6,7 with node 1 attached to node 3
            let mut gram = vec![vec![0i64; 8]; 8];
            for i in 0..8 {
                gram[i][i] = 2;
            }
            let edges = [(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (1, 3)];
            for (a, b) in edges {
                gram[a][b] = -1;
                gram[b][a] = -1;
            }
            IntegerLattice::new(gram, "E8")?.rescale(m)
        }
        NamedFamily::A1Scaled => {
            if n < 1 {
                return Err(Error::InvalidInput("need at least one A1 copy".into()));
            }
            let mut gram = vec![vec![0i64; n]; n];
            for i in 0..n {
                gram[i][i] = 2 * m;
            }
            let base = if n == 1 { "A1".to_string() } else { format!("{n}A1") };
            let label = if m == 1 { base } else { format!("{base}({m})") };
            IntegerLattice::new(gram, label)
        }
        NamedFamily::Rank1 => {
            if n < 1 {
                return Err(Error::InvalidInput("rank-1 lattice needs n >= 1".into()));
            }
            let q = 2 * (n as i64) * m;
            IntegerLattice::new(vec![vec![q]], format!("<{q}>"))
        }
    }
}

fn cartan_chain(n: usize) -> Vec<Vec<i64>> {
    let mut gram = vec![vec![0i64; n]; n];
    for i in 0..n {
        gram[i][i] = 2;
        if i + 1 < n {
            gram[i][i + 1] = -1;
            gram[i + 1][i] = -1;
        }
    }
    gram
}
