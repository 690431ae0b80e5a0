//! Fourier expansions of Jacobi forms of lattice index.
//!
//! An expansion stores exact coefficients f(n, l) keyed by the q-exponent n
//! and the integer pairing vector of the dual lattice element l. Coefficients
//! are valid on the window -pole_order <= n < trunc, which every operation
//! tracks; reading outside the window is an error, never a silent zero.
//!
//! Weights are stored doubled (2k) so that theta series of odd-rank lattices,
//! whose weight is half-integral, stay in integer arithmetic; the public
//! accessor reports the weight as an exact rational.

pub mod ez;

use crate::lattice::IntegerLattice;
use crate::qseries::{eisenstein, EisensteinKind, QSeries};
use crate::rat::{lex_cmp, render, ri, rq, Rat};
use crate::{Error, Result};
use num_traits::{Signed, Zero};
use std::collections::BTreeMap;

/// Where an expansion sits in the holomorphy hierarchy, judged from the
/// coefficients inside the window: `Holomorphic` means no term has
/// 2n - (l,l) < 0, `Weak` means no term has n < 0, and `WeaklyHolomorphic`
/// allows poles at the cusp.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HolomorphyClass {
    Holomorphic,
    Weak,
    WeaklyHolomorphic,
}

impl std::fmt::Display for HolomorphyClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            HolomorphyClass::Holomorphic => write!(f, "holomorphic"),
            HolomorphyClass::Weak => write!(f, "weak"),
            HolomorphyClass::WeaklyHolomorphic => write!(f, "weakly holomorphic"),
        }
    }
}

/// Truncated Fourier expansion of a Jacobi form of lattice index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacobiExpansion {
    index: IntegerLattice,
    weight2: i64,
    trunc: i64,
    pole_order: i64,
    coeffs: BTreeMap<(i64, Vec<i64>), Rat>,
}

impl JacobiExpansion {
    pub fn zero(index: IntegerLattice, weight2: i64, trunc: i64) -> Self {
        JacobiExpansion { index, weight2, trunc, pole_order: 0, coeffs: BTreeMap::new() }
    }

    pub(crate) fn from_terms(
        index: IntegerLattice,
        weight2: i64,
        trunc: i64,
        pole_order: i64,
        coeffs: BTreeMap<(i64, Vec<i64>), Rat>,
    ) -> Self {
        let mut coeffs = coeffs;
        coeffs.retain(|_, c| !c.is_zero());
        debug_assert!(coeffs
            .keys()
            .all(|(n, l)| *n >= -pole_order && *n < trunc && l.len() == index.rank()));
        JacobiExpansion { index, weight2, trunc, pole_order, coeffs }
    }

    pub fn index(&self) -> &IntegerLattice {
        &self.index
    }
    pub fn rank(&self) -> usize {
        self.index.rank()
    }
    /// Doubled weight (always an integer).
    pub fn weight2(&self) -> i64 {
        self.weight2
    }
    /// Weight as an exact rational.
    pub fn weight(&self) -> Rat {
        rq(self.weight2, 2)
    }
    pub fn trunc(&self) -> i64 {
        self.trunc
    }
    pub fn pole_order(&self) -> i64 {
        self.pole_order
    }
    pub fn terms(&self) -> &BTreeMap<(i64, Vec<i64>), Rat> {
        &self.coeffs
    }
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient f(n, l) with l given by its pairing vector. Errors outside
    /// the window.
    pub fn coefficient(&self, n: i64, pairings: &[i64]) -> Result<Rat> {
        if n < -self.pole_order || n >= self.trunc {
            return Err(Error::OutOfWindow { n, lo: -self.pole_order, hi: self.trunc });
        }
        if pairings.len() != self.rank() {
            return Err(Error::InvalidInput("pairing vector has the wrong length".into()));
        }
        Ok(self
            .coeffs
            .get(&(n, pairings.to_vec()))
            .cloned()
            .unwrap_or_else(Rat::zero))
    }

    pub fn scale(&self, factor: &Rat) -> JacobiExpansion {
        let coeffs = self
            .coeffs
            .iter()
            .map(|(k, c)| (k.clone(), c * factor))
            .collect();
        JacobiExpansion::from_terms(self.index.clone(), self.weight2, self.trunc, self.pole_order, coeffs)
    }

    /// Sum of two expansions with the same index and weight; the window
    /// shrinks to the intersection.
    pub fn add(&self, other: &JacobiExpansion) -> Result<JacobiExpansion> {
        if self.index != other.index {
            return Err(Error::InvalidInput("cannot add expansions with different index".into()));
        }
        if self.weight2 != other.weight2 {
            return Err(Error::WeightMismatch {
                expected: render(&self.weight()),
                found: render(&other.weight()),
            });
        }
        let trunc = self.trunc.min(other.trunc);
        let pole = self.pole_order.max(other.pole_order);
        let mut coeffs: BTreeMap<(i64, Vec<i64>), Rat> = BTreeMap::new();
        for (k, c) in self.coeffs.iter().chain(other.coeffs.iter()) {
            if k.0 < trunc {
                *coeffs.entry(k.clone()).or_insert_with(Rat::zero) += c;
            }
        }
        Ok(JacobiExpansion::from_terms(self.index.clone(), self.weight2, trunc, pole, coeffs))
    }

    pub fn sub(&self, other: &JacobiExpansion) -> Result<JacobiExpansion> {
        self.add(&other.scale(&ri(-1)))
    }

    /// Multiply by a scalar q-series (weight tag required). The window
    /// becomes min(trunc_phi + n_min_f, trunc_f - pole_phi).
    pub fn mul_scalar(&self, f: &QSeries) -> Result<JacobiExpansion> {
        let tag = f.weight_tag().ok_or(Error::MissingWeightTag)?;
        let trunc = (self.trunc + f.n_min()).min(f.trunc() - self.pole_order);
        if trunc < 1 {
            return Err(Error::WindowTooSmall { trunc });
        }
        let pole = (self.pole_order - f.n_min()).max(0);
        let mut coeffs: BTreeMap<(i64, Vec<i64>), Rat> = BTreeMap::new();
        for ((n, l), c) in &self.coeffs {
            // f iterates in ascending m, so the window closes monotonically
            for (&m, fm) in f.iter() {
                let nn = n + m;
                if nn >= trunc {
                    break;
                }
                if nn >= -pole {
                    *coeffs
                        .entry((nn, l.clone()))
                        .or_insert_with(Rat::zero) += c * fm;
                }
            }
        }
        Ok(JacobiExpansion::from_terms(
            self.index.clone(),
            self.weight2 + 2 * tag,
            trunc,
            pole,
            coeffs,
        ))
    }

    /// Tensor product: the index becomes the direct sum, q-exponents add and
    /// pairing vectors concatenate.
    pub fn tensor(&self, other: &JacobiExpansion) -> Result<JacobiExpansion> {
        let trunc = (self.trunc - other.pole_order).min(other.trunc - self.pole_order);
        if trunc < 1 {
            return Err(Error::WindowTooSmall { trunc });
        }
        let pole = self.pole_order + other.pole_order;
        let index = self.index.direct_sum(&other.index);
        let mut coeffs: BTreeMap<(i64, Vec<i64>), Rat> = BTreeMap::new();
        for ((n1, l1), c1) in &self.coeffs {
            // keys are ordered by n first, so stop once the q-exponent leaves
            // the window
            for ((n2, l2), c2) in &other.coeffs {
                let n = n1 + n2;
                if n >= trunc {
                    break;
                }
                let mut l = Vec::with_capacity(l1.len() + l2.len());
                l.extend_from_slice(l1);
                l.extend_from_slice(l2);
                *coeffs.entry((n, l)).or_insert_with(Rat::zero) += c1 * c2;
            }
        }
        Ok(JacobiExpansion::from_terms(
            index,
            self.weight2 + other.weight2,
            trunc,
            pole,
            coeffs,
        ))
    }

    /// Heat operator: multiplies f(n, l) by (2n - (l,l))/2. Annihilates
    /// exactly the singular-weight layer. The result is tagged two weights up
    /// so it can be combined with the correction term of [`heat_hk`].
    pub fn heat(&self) -> JacobiExpansion {
        let coeffs = self
            .coeffs
            .iter()
            .map(|((n, l), c)| {
                let norm = self.index.norm_of_pairings(l);
                let mult = (ri(2 * n) - norm) / ri(2);
                ((*n, l.clone()), c * &mult)
            })
            .collect();
        JacobiExpansion::from_terms(
            self.index.clone(),
            self.weight2 + 4,
            self.trunc,
            self.pole_order,
            coeffs,
        )
    }

    /// Modified heat operator H_k = H + (2k - rank) G2 * phi, which sends
    /// weight k to weight k + 2 within Jacobi forms. `k` must match the
    /// stored weight.
    pub fn heat_hk(&self, k: i64) -> Result<JacobiExpansion> {
        if self.weight2 != 2 * k {
            return Err(Error::WeightMismatch {
                expected: render(&self.weight()),
                found: k.to_string(),
            });
        }
        let g2 = eisenstein(EisensteinKind::G2, self.trunc + self.pole_order)?;
        let mult = ri(2 * k - self.rank() as i64);
        let correction = self.mul_scalar(&g2)?.scale(&mult);
        self.heat().add(&correction)
    }

    /// Theta series of the index lattice: sum over v in L of q^{(v,v)/2}
    /// zeta^v, truncated to `trunc`. The weight is rank/2.
    pub fn theta_series(index: &IntegerLattice, trunc: i64) -> Result<JacobiExpansion> {
        if trunc < 1 {
            return Err(Error::WindowTooSmall { trunc });
        }
        let trivial = index.trivial_coset();
        let mut coeffs = BTreeMap::new();
        for n in 0..trunc {
            for v in index.enumerate_vectors(&trivial, &ri(2 * n))? {
                coeffs.insert((n, v.pairings().to_vec()), ri(1));
            }
        }
        Ok(JacobiExpansion::from_terms(
            index.clone(),
            index.rank() as i64,
            trunc,
            0,
            coeffs,
        ))
    }

    /// A scalar series as an expansion of rank-0 index.
    pub fn from_qseries(f: &QSeries) -> Result<JacobiExpansion> {
        let tag = f.weight_tag().ok_or(Error::MissingWeightTag)?;
        let lattice = IntegerLattice::new(vec![], "0")?;
        let coeffs = f
            .iter()
            .map(|(&n, c)| ((n, Vec::new()), c.clone()))
            .collect();
        Ok(JacobiExpansion::from_terms(
            lattice,
            2 * tag,
            f.trunc(),
            (-f.n_min()).max(0),
            coeffs,
        ))
    }

    /// The terms with negative discriminant 2n - (l,l), which determine the
    /// divisor of the associated Borcherds product.
    pub fn singular_part(&self) -> Vec<(i64, Vec<i64>, Rat)> {
        let mut out: Vec<(i64, Vec<i64>, Rat)> = self
            .coeffs
            .iter()
            .filter(|((n, l), _)| {
                let disc = ri(2 * n) - self.index.norm_of_pairings(l);
                disc.is_negative()
            })
            .map(|((n, l), c)| (*n, l.clone(), c.clone()))
            .collect();
        out.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
        out
    }

    /// Holomorphy class read off the coefficients in the window.
    pub fn classify(&self) -> HolomorphyClass {
        if self.singular_part().is_empty() {
            HolomorphyClass::Holomorphic
        } else if self.coeffs.keys().all(|(n, _)| *n >= 0) {
            HolomorphyClass::Weak
        } else {
            HolomorphyClass::WeaklyHolomorphic
        }
    }

    /// Constant-term identity for weakly holomorphic weight-0 forms with at
    /// most a first-order pole, a = sum_l c(-1,l):
    ///
    ///   sum_l c(0,l) - (12/rank) sum_l c(0,l)(l,l) - 24a
    ///
    /// vanishes identically (the constant term of the weight-2 form
    /// H_0(phi)(tau, 0) is zero); the returned value is that left-hand side.
    pub fn gritsenko_residual(&self) -> Result<Rat> {
        if self.rank() == 0 {
            return Err(Error::InvalidInput(
                "constant-term identity needs positive rank".into(),
            ));
        }
        if self.weight2 != 0 {
            return Err(Error::WeightMismatch {
                expected: "0".into(),
                found: render(&self.weight()),
            });
        }
        if self.pole_order > 1 {
            return Err(Error::InvalidInput(format!(
                "pole order {} exceeds 1",
                self.pole_order
            )));
        }
        if self.trunc < 1 {
            return Err(Error::WindowTooSmall { trunc: self.trunc });
        }
        let mut a = Rat::zero();
        let mut sum = Rat::zero();
        let mut weighted = Rat::zero();
        for ((n, l), c) in &self.coeffs {
            if *n == -1 {
                a += c;
            } else if *n == 0 {
                sum += c;
                weighted += c * self.index.norm_of_pairings(l);
            }
        }
        Ok(sum - rq(12, self.rank() as i64) * weighted - ri(24) * a)
    }

    /// Checks that coefficients are constant on translation orbits: f(n, l)
    /// depends only on the coset of l and the discriminant 2n - (l,l). The
    /// check is complete within the window, counting orbit members by exact
    /// shell enumeration, so a coefficient that should be equal to a nonzero
    /// orbit value but is missing is an error.
    pub fn verify_elliptic_invariance(&self) -> Result<()> {
        #[derive(PartialEq, Eq, PartialOrd, Ord)]
        struct GroupKey {
            class: Vec<i64>,
            disc: Rat,
        }
        let mut groups: BTreeMap<GroupKey, (Rat, usize)> = BTreeMap::new();
        for ((n, l), c) in &self.coeffs {
            let class = self.index.canonical_class_pairings(l);
            let disc = ri(2 * n) - self.index.norm_of_pairings(l);
            let entry = groups
                .entry(GroupKey { class, disc })
                .or_insert_with(|| (c.clone(), 0));
            if &entry.0 != c {
                return Err(Error::Inconsistent(format!(
                    "coefficients differ on one translation orbit (n = {n}, disc = {})",
                    render(&(ri(2 * n) - self.index.norm_of_pairings(l)))
                )));
            }
            entry.1 += 1;
        }
        let mut shell_cache: BTreeMap<(Vec<i64>, Rat), usize> = BTreeMap::new();
        for (key, (_, count)) in &groups {
            let mut expected = 0usize;
            for n in -self.pole_order..self.trunc {
                let norm = ri(2 * n) - &key.disc;
                if norm.is_negative() {
                    continue;
                }
                let cache_key = (key.class.clone(), norm.clone());
                let shell = match shell_cache.get(&cache_key) {
                    Some(&s) => s,
                    None => {
                        let rep = self.index.dual_from_pairings(key.class.clone())?;
                        let coset = self.index.coset_class(&rep);
                        let s = self.index.count_vectors(&coset, &norm)?;
                        shell_cache.insert(cache_key, s);
                        s
                    }
                };
                expected += shell;
            }
            if *count != expected {
                return Err(Error::Inconsistent(format!(
                    "translation orbit at disc {} has {count} stored terms, expected {expected}",
                    render(&key.disc)
                )));
            }
        }
        Ok(())
    }

    /// Checks f(n, l) = f(n, -l); valid for even weight.
    pub fn verify_even_weight_parity(&self) -> Result<()> {
        if self.weight2 % 4 != 0 {
            return Err(Error::InvalidInput(format!(
                "parity check needs even weight, found {}",
                render(&self.weight())
            )));
        }
        for ((n, l), c) in &self.coeffs {
            let neg: Vec<i64> = l.iter().map(|&x| -x).collect();
            let mirror = self.coefficient(*n, &neg)?;
            if &mirror != c {
                return Err(Error::Inconsistent(format!(
                    "f({n}, l) = {} but f({n}, -l) = {}",
                    render(c),
                    render(&mirror)
                )));
            }
        }
        Ok(())
    }

    /// Line format used by the CLI dump: `n <tab> coords <tab> value`, with
    /// rational coordinates in the lattice basis, sorted by (n, coords).
    pub fn to_dump_string(&self) -> String {
        let mut rows: Vec<(i64, Vec<Rat>, &Rat)> = self
            .coeffs
            .iter()
            .map(|((n, l), c)| {
                let v = self
                    .index
                    .dual_from_pairings(l.clone())
                    .expect("stored keys are valid");
                (*n, v.coords().to_vec(), c)
            })
            .collect();
        rows.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| lex_cmp(&a.1, &b.1)));
        let mut out = String::new();
        for (n, coords, c) in rows {
            let coord_str = coords.iter().map(render).collect::<Vec<_>>().join(",");
            out.push_str(&format!("{n}\t{coord_str}\t{}\n", render(c)));
        }
        out
    }
}
