//! Enumeration of modular forms vanishing exactly on the diagonal divisor,
//! over rescaled root lattices.
//!
//! The diagonal divisor of nA1(m) (and of An(m), Dn(m)) is cut out by the
//! minimal-norm dual vectors. The weight-0 input of the corresponding
//! product has q^0 layer c*(sum over that orbit) + 2k and no q-pole, so the
//! q^0 identity collapses to one linear relation between c and k. Everything
//! here evaluates that relation exactly and applies the positivity and
//! singular-weight floors k > 0, k >= rank/2.

use crate::jacobi::ez::solve_weak_basis;
use crate::lattice::{build_named, DualVector, IntegerLattice, NamedFamily};
use crate::rat::{render, ri, rq, Rat};
use crate::{Error, Result};
use num_traits::{Signed, Zero};
use std::collections::BTreeMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum DdFamily {
    NA1,
    An,
    Dn,
}

impl std::fmt::Display for DdFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DdFamily::NA1 => write!(f, "nA1"),
            DdFamily::An => write!(f, "An"),
            DdFamily::Dn => write!(f, "Dn"),
        }
    }
}

/// One cell of the diagonal-divisor search: the lattice parameters, the
/// multiplicity c used, and the weight forced by the q^0 identity.
#[derive(Debug, Clone, PartialEq)]
pub struct DdCandidate {
    pub family: DdFamily,
    pub n: usize,
    pub m: i64,
    pub c: i64,
    pub k: Rat,
    pub admissible: bool,
    pub exclusion_reason: Option<String>,
    /// D4 only: the weight under the 8-vector convention, next to the
    /// 24-vector value in `k`. Both conventions admit the same cells.
    pub alt_weight: Option<Rat>,
}

/// Weight forced by the q^0 identity for the input c*(sum over S) + 2k with
/// no q-pole: k = (1/2)[(12/rank) c sum (s,s) - c |S|].
pub fn dd_weight(lattice: &IntegerLattice, s: &[DualVector], c: i64) -> Result<Rat> {
    if lattice.rank() == 0 {
        return Err(Error::InvalidInput("the identity needs positive rank".into()));
    }
    if s.is_empty() {
        return Err(Error::InvalidInput("empty divisor orbit".into()));
    }
    if c < 1 {
        return Err(Error::InvalidInput("multiplicity must be positive".into()));
    }
    let rank = lattice.rank() as i64;
    let mut norm_sum = Rat::zero();
    for v in s {
        norm_sum += v.norm();
    }
    Ok((rq(12, rank) * ri(c) * norm_sum - ri(c * s.len() as i64)) / ri(2))
}

fn floor_reason(k: &Rat, rank: i64) -> Option<String> {
    if !k.is_positive() {
        Some(format!("weight {} is not positive", render(k)))
    } else if k < &rq(rank, 2) {
        Some(format!(
            "weight {} lies below the singular weight {}",
            render(k),
            render(&rq(rank, 2))
        ))
    } else {
        None
    }
}

/// Scans nA1(m) over nm <= 5 (any larger product makes the forced weight
/// nonpositive) with the smallest multiplicity c <= c_max giving an integral
/// q^0 layer: c = 1 for m <= 4, c = 5 at m = 5. Admissible cells must clear
/// the positivity and singular-weight floors; the (m, n) = (5, 1) cell
/// clears them and is flagged for the separate holomorphy check.
pub fn enumerate_na1(c_max: i64) -> Result<Vec<DdCandidate>> {
    if c_max < 5 {
        return Err(Error::InvalidInput(
            "multiplicity bound below 5 cannot reach the m = 5 cell".into(),
        ));
    }
    let mut out = Vec::new();
    for n in 1i64..=5 {
        for m in 1i64..=5 {
            if n * m > 5 {
                continue;
            }
            // smallest c with 2k = 2c(6/m - n) integral
            let per_c = rq(6, m) - ri(n);
            let c = (1..=c_max)
                .find(|c| (ri(2 * c) * &per_c).is_integer())
                .ok_or_else(|| {
                    Error::Inconsistent(format!(
                        "no multiplicity up to {c_max} makes the weight integral at ({n}, {m})"
                    ))
                })?;
            let lattice = build_named(NamedFamily::A1Scaled, n as usize, m)?;
            let (min_norm, shell) = lattice.minimal_dual_vectors()?;
            debug_assert_eq!(min_norm, rq(1, 2 * m));
            debug_assert_eq!(shell.len(), 2 * n as usize);
            let k = dd_weight(&lattice, &shell, c)?;
            debug_assert_eq!(k, ri(c) * &per_c);
            let (admissible, exclusion_reason) = match floor_reason(&k, n) {
                Some(reason) => (false, Some(reason)),
                None if m == 5 => (
                    false,
                    Some("needs holomorphy check: see the index-5 exclusion".into()),
                ),
                None => (true, None),
            };
            out.push(DdCandidate {
                family: DdFamily::NA1,
                n: n as usize,
                m,
                c,
                k,
                admissible,
                exclusion_reason,
                alt_weight: None,
            });
        }
    }
    out.sort_by_key(|cand| (cand.n, cand.m));
    Ok(out)
}

/// Outcome of the m = 5 holomorphy check and the m <= 4 consistency scan.
#[derive(Debug, Clone, PartialEq)]
pub struct IndexFiveExclusion {
    /// q^0 layer of the unique weak form, as (zeta-exponent, value) with
    /// exponents >= 0.
    pub q0: Vec<(i64, Rat)>,
    /// The q^1 zeta^5 coefficient, the negative singular entry.
    pub q1_zeta5: Rat,
    pub verdict: String,
    /// (m, all singular coefficients nonnegative) for the m <= 4 cells.
    pub counterparts_nonnegative: Vec<(i64, bool)>,
}

/// Settles the (m, n) = (5, 1) cell: the unique weak weight-0 index-5 form
/// with q^0 = 5 zeta^{+-1} + 2 has a negative singular coefficient at
/// q zeta^5, so the product it defines is not holomorphic. The m <= 4
/// counterparts are rebuilt the same way and scanned as a consistency check.
pub fn exclude_index_five() -> Result<IndexFiveExclusion> {
    let trunc = 3;
    let mut q0 = BTreeMap::new();
    q0.insert(0, ri(2));
    q0.insert(1, ri(5));
    let psi = solve_weak_basis(0, 5, &q0, trunc)?;
    let q1_zeta5 = psi.coefficient(1, &[5])?;
    if !q1_zeta5.is_negative() {
        return Err(Error::Inconsistent(format!(
            "the q zeta^5 coefficient is {}, expected a negative value",
            render(&q1_zeta5)
        )));
    }
    let q0_layer: Vec<(i64, Rat)> = (0..=5)
        .map(|r| Ok((r, psi.coefficient(0, &[r])?)))
        .collect::<Result<_>>()?;

    let mut counterparts_nonnegative = Vec::new();
    for m in 1i64..=4 {
        let mut q0m = BTreeMap::new();
        q0m.insert(0, rq(12, m) - ri(2));
        q0m.insert(1, ri(1));
        let f = solve_weak_basis(0, m, &q0m, trunc)?;
        let ok = f.singular_part().iter().all(|(_, _, c)| !c.is_negative());
        counterparts_nonnegative.push((m, ok));
    }

    Ok(IndexFiveExclusion {
        q0: q0_layer,
        q1_zeta5,
        verdict: "excluded: non-holomorphic product".into(),
        counterparts_nonnegative,
    })
}

fn an_dn_candidate(family: NamedFamily, n: usize, m: i64) -> Result<DdCandidate> {
    let lattice = build_named(family, n, m)?;
    let rank = lattice.rank() as i64;
    let (_, shell) = lattice.minimal_dual_vectors()?;
    let k = dd_weight(&lattice, &shell, 1)?;

    // D4's minimal dual shell carries three 8-vector orbits of the same
    // norm; the narrow convention keeps just one, and both conventions must
    // agree on admissibility. Rescaling leaves the pairing vectors alone, so
    // the orbits are read off the unscaled lattice.
    let alt_weight = if family == NamedFamily::D && n == 4 {
        let base = build_named(NamedFamily::D, 4, 1)?;
        let class0 = base.canonical_class_pairings(shell[0].pairings());
        let sub: Vec<DualVector> = shell
            .iter()
            .filter(|v| base.canonical_class_pairings(v.pairings()) == class0)
            .cloned()
            .collect();
        debug_assert_eq!(sub.len(), 8);
        Some(dd_weight(&lattice, &sub, 1)?)
    } else {
        None
    };

    let reason = floor_reason(&k, rank);
    if let Some(alt) = &alt_weight {
        let alt_reason = floor_reason(alt, rank);
        if reason.is_none() != alt_reason.is_none() {
            return Err(Error::Inconsistent(format!(
                "the two D4 conventions disagree on admissibility at m = {m}"
            )));
        }
    }
    Ok(DdCandidate {
        family: if family == NamedFamily::A { DdFamily::An } else { DdFamily::Dn },
        n,
        m,
        c: 1,
        k,
        admissible: reason.is_none(),
        exclusion_reason: reason,
        alt_weight,
    })
}

/// Scans An(m) for 2 <= n <= 10 and Dn(m) for 4 <= n <= 10, m <= 6, at
/// multiplicity 1 (the weight scales linearly in the multiplicity, so a cell
/// below the floors stays below them). The bounds contain the admissibility
/// frontier since the weight falls in both n and m.
pub fn enumerate_an_dn() -> Result<Vec<DdCandidate>> {
    let mut out = Vec::new();
    for n in 2..=10usize {
        for m in 1..=6i64 {
            out.push(an_dn_candidate(NamedFamily::A, n, m)?);
        }
    }
    for n in 4..=10usize {
        for m in 1..=6i64 {
            out.push(an_dn_candidate(NamedFamily::D, n, m)?);
        }
    }
    out.sort_by_key(|cand| (cand.family, cand.n, cand.m));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn admissible_pairs(cands: &[DdCandidate]) -> Vec<(usize, i64)> {
        cands
            .iter()
            .filter(|c| c.admissible)
            .map(|c| (c.n, c.m))
            .collect()
    }

    #[test]
    fn weight_identity_rearranges_exactly() {
        // m(2nc + 2k) = 12c over a grid, with k from the identity
        for n in 1i64..=12 {
            for m in 1i64..=12 {
                let lattice = build_named(NamedFamily::A1Scaled, n as usize, m).unwrap();
                let (_, shell) = lattice.minimal_dual_vectors().unwrap();
                for c in [1i64, 2, 7] {
                    let k = dd_weight(&lattice, &shell, c).unwrap();
                    assert_eq!(ri(m) * (ri(2 * n * c) + ri(2) * &k), ri(12 * c));
                }
            }
        }
    }

    #[test]
    fn weight_is_linear_in_multiplicity() {
        let a2 = build_named(NamedFamily::A, 2, 1).unwrap();
        let (_, shell) = a2.minimal_dual_vectors().unwrap();
        let k1 = dd_weight(&a2, &shell, 1).unwrap();
        let k5 = dd_weight(&a2, &shell, 5).unwrap();
        assert_eq!(k5, k1 * ri(5));
        // A2 at multiplicity 1: 6 vectors of norm 2/3 give 9
        assert_eq!(dd_weight(&a2, &shell, 1).unwrap(), ri(9));
    }

    #[test]
    fn weight_rejects_degenerate_input() {
        let a2 = build_named(NamedFamily::A, 2, 1).unwrap();
        let (_, shell) = a2.minimal_dual_vectors().unwrap();
        assert!(dd_weight(&a2, &[], 1).is_err());
        assert!(dd_weight(&a2, &shell, 0).is_err());
    }

    #[test]
    fn na1_eight_cells() {
        let cands = enumerate_na1(5).unwrap();
        let expected: Vec<(i64, i64, Rat)> = vec![
            (1, 1, ri(5)),
            (1, 2, ri(4)),
            (1, 3, ri(3)),
            (1, 4, ri(2)),
            (2, 1, ri(2)),
            (2, 2, ri(1)),
            (3, 1, ri(1)),
            (4, 1, rq(1, 2)),
        ];
        let got: Vec<(i64, i64, Rat)> = cands
            .iter()
            .filter(|c| c.admissible)
            .map(|c| (c.m, c.n as i64, c.k.clone()))
            .collect();
        let mut sorted = expected.clone();
        sorted.sort_by_key(|(m, n, _)| (*n as usize, *m));
        assert_eq!(got, sorted);

        let flagged = cands
            .iter()
            .find(|c| c.n == 1 && c.m == 5)
            .expect("the m = 5 cell is scanned");
        assert!(!flagged.admissible);
        assert_eq!(flagged.c, 5);
        assert_eq!(flagged.k, ri(1));
        assert!(flagged
            .exclusion_reason
            .as_deref()
            .unwrap()
            .contains("holomorphy"));

        let rejected = cands
            .iter()
            .find(|c| c.n == 5 && c.m == 1)
            .expect("the n = 5 cell is scanned");
        assert!(!rejected.admissible);
        assert_eq!(rejected.k, ri(1));
        assert!(rejected
            .exclusion_reason
            .as_deref()
            .unwrap()
            .contains("singular weight"));
    }

    #[test]
    fn na1_output_is_stable_in_c_max() {
        let base = admissible_pairs(&enumerate_na1(5).unwrap());
        for c_max in [6, 9, 24] {
            assert_eq!(admissible_pairs(&enumerate_na1(c_max).unwrap()), base);
        }
        assert!(enumerate_na1(4).is_err());
    }

    #[test]
    fn index_five_exclusion() {
        let report = exclude_index_five().unwrap();
        assert_eq!(report.q1_zeta5, ri(-1));
        assert_eq!(
            report.q0,
            vec![
                (0, ri(2)),
                (1, ri(5)),
                (2, ri(0)),
                (3, ri(0)),
                (4, ri(0)),
                (5, ri(0)),
            ]
        );
        assert_eq!(report.verdict, "excluded: non-holomorphic product");
        assert_eq!(
            report.counterparts_nonnegative,
            vec![(1, true), (2, true), (3, true), (4, true)]
        );
    }

    #[test]
    fn an_dn_fifteen_cells() {
        let cands = enumerate_an_dn().unwrap();
        let adm: Vec<(DdFamily, usize, i64)> = cands
            .iter()
            .filter(|c| c.admissible)
            .map(|c| (c.family, c.n, c.m))
            .collect();
        let expected = vec![
            (DdFamily::An, 2, 1),
            (DdFamily::An, 2, 2),
            (DdFamily::An, 2, 3),
            (DdFamily::An, 3, 1),
            (DdFamily::An, 3, 2),
            (DdFamily::An, 4, 1),
            (DdFamily::An, 5, 1),
            (DdFamily::An, 6, 1),
            (DdFamily::An, 7, 1),
            (DdFamily::Dn, 4, 1),
            (DdFamily::Dn, 4, 2),
            (DdFamily::Dn, 5, 1),
            (DdFamily::Dn, 6, 1),
            (DdFamily::Dn, 7, 1),
            (DdFamily::Dn, 8, 1),
        ];
        assert_eq!(adm, expected);

        let find = |fam: DdFamily, n: usize, m: i64| {
            cands
                .iter()
                .find(|c| c.family == fam && c.n == n && c.m == m)
                .unwrap()
        };
        // boundary weights on both sides of the frontier
        assert_eq!(find(DdFamily::An, 7, 1).k, ri(4));
        let a8 = find(DdFamily::An, 8, 1);
        assert!(!a8.admissible);
        assert_eq!(a8.k, ri(3));
        assert_eq!(find(DdFamily::An, 2, 3).k, ri(1));
        let a24 = find(DdFamily::An, 2, 4);
        assert!(!a24.admissible);
        assert!(a24.k.is_zero());
        let d42 = find(DdFamily::Dn, 4, 2);
        assert_eq!(d42.k, ri(6));
        assert_eq!(d42.alt_weight, Some(ri(2)));
        let d52 = find(DdFamily::Dn, 5, 2);
        assert!(!d52.admissible);
        // D4 carries both conventions everywhere, other ranks never do
        for c in &cands {
            assert_eq!(
                c.alt_weight.is_some(),
                c.family == DdFamily::Dn && c.n == 4
            );
        }
    }

    #[test]
    fn shells_are_negation_closed_with_constant_norm() {
        for (family, n) in [
            (NamedFamily::A, 3usize),
            (NamedFamily::D, 4),
            (NamedFamily::D, 6),
        ] {
            let lattice = build_named(family, n, 2).unwrap();
            let (norm, shell) = lattice.minimal_dual_vectors().unwrap();
            for v in &shell {
                assert_eq!(v.norm(), &norm);
                let neg: Vec<i64> = v.pairings().iter().map(|x| -x).collect();
                assert!(shell.iter().any(|w| w.pairings() == neg.as_slice()));
            }
        }
    }
}
