//! Exact short-vector enumeration.
//!
//! The quadratic form is decomposed once per lattice into the rational
//! Cholesky shape Q(c) = sum_i q_ii (c_i + sum_{j>i} q_ij c_j)^2 and vectors
//! are found by the usual backtracking recursion over the last coordinate
//! first. All pivots and bounds are exact rationals; the only floating point
//! is a first guess for the integer bounds, which is then corrected exactly.

use super::{sort_dual_vectors, CosetClass, DualVector, IntegerLattice};
use crate::rat::{int_range_quadratic, ri, Rat};
use crate::{Error, Result};
use num_traits::{Signed, ToPrimitive, Zero};

impl IntegerLattice {
    fn cholesky_data(&self) -> &[Vec<Rat>] {
        self.cholesky.get_or_init(|| {
            decompose(
                self.gram
                    .iter()
                    .map(|row| row.iter().map(|&x| ri(x)).collect())
                    .collect(),
            )
        })
    }

    // Runs the backtracking walk and hands every coset vector within the
    // bound to `emit` as (coordinates, exact norm), without keeping anything.
    fn visit_ball<F: FnMut(&[Rat], Rat)>(
        &self,
        coset: &CosetClass,
        bound: &Rat,
        emit: &mut F,
    ) -> Result<()> {
        if bound.is_negative() {
            return Err(Error::InvalidInput("negative norm bound".into()));
        }
        let n = self.rank();
        let rep = coset.representative();
        if rep.coords().len() != n {
            return Err(Error::InvalidInput("coset from a different lattice".into()));
        }
        if n == 0 {
            emit(&[], Rat::zero());
            return Ok(());
        }
        let q = self.cholesky_data();
        let mut coords = vec![Rat::zero(); n];
        walk(q, rep.coords(), n - 1, bound, &Rat::zero(), &mut coords, emit);
        Ok(())
    }

    /// All vectors of the coset `rep + L` with (v, v) <= bound, together with
    /// their exact norms, sorted lexicographically by coordinates.
    pub fn enumerate_ball(
        &self,
        coset: &CosetClass,
        bound: &Rat,
    ) -> Result<Vec<(DualVector, Rat)>> {
        let mut found: Vec<(Vec<Rat>, Rat)> = Vec::new();
        self.visit_ball(coset, bound, &mut |coords, norm| {
            found.push((coords.to_vec(), norm));
        })?;
        let mut out: Vec<(DualVector, Rat)> = found
            .into_iter()
            .map(|(coords, norm)| {
                let v = self
                    .dual_vector(coords)
                    .expect("coset translates stay in the dual lattice");
                debug_assert_eq!(v.norm, norm);
                (v, norm)
            })
            .collect();
        out.sort_by(|a, b| crate::rat::lex_cmp(a.0.coords(), b.0.coords()));
        Ok(out)
    }

    /// All vectors of the coset `rep + L` with (v, v) = norm exactly, in
    /// deterministic lexicographic order.
    pub fn enumerate_vectors(&self, coset: &CosetClass, norm: &Rat) -> Result<Vec<DualVector>> {
        if norm.is_negative() {
            return Err(Error::InvalidInput("negative norm".into()));
        }
        let mut out: Vec<DualVector> = Vec::new();
        self.visit_ball(coset, norm, &mut |coords, n| {
            if &n == norm {
                out.push(
                    self.dual_vector(coords.to_vec())
                        .expect("coset translates stay in the dual lattice"),
                );
            }
        })?;
        sort_dual_vectors(&mut out);
        Ok(out)
    }

    /// Number of coset vectors of the exact norm, without materializing the
    /// shell. Large shells (theta coefficients of high-rank lattices) only
    /// ever need this count.
    pub fn count_vectors(&self, coset: &CosetClass, norm: &Rat) -> Result<usize> {
        if norm.is_negative() {
            return Err(Error::InvalidInput("negative norm".into()));
        }
        let mut count = 0usize;
        self.visit_ball(coset, norm, &mut |_, n| {
            if &n == norm {
                count += 1;
            }
        })?;
        Ok(count)
    }

    /// Minimal norm of a nonzero dual vector and the full shell realizing it.
    pub fn minimal_dual_vectors(&self) -> Result<(Rat, Vec<DualVector>)> {
        if self.rank() == 0 {
            return Err(Error::InvalidInput("rank-0 lattice has no nonzero vectors".into()));
        }
        // dual vectors are exactly the integer pairing vectors a under the
        // form a^T G^-1 a, so one walk over that form covers every coset;
        // each dual basis vector is nonzero, so the smallest diagonal entry
        // of the inverse Gram matrix bounds the minimum
        let inv = self.inv_gram();
        let bound = (0..self.rank())
            .map(|i| inv[i][i].clone())
            .min()
            .expect("nonempty diagonal");
        let q = decompose(inv.to_vec());
        let zeros = vec![Rat::zero(); self.rank()];
        let mut coords = zeros.clone();
        let mut best: Option<Rat> = None;
        let mut found: Vec<Vec<i64>> = Vec::new();
        walk(&q, &zeros, self.rank() - 1, &bound, &Rat::zero(), &mut coords, &mut |a, norm| {
            if norm.is_zero() {
                return;
            }
            let pairings: Vec<i64> = a
                .iter()
                .map(|c| c.to_integer().to_i64().expect("pairing fits in i64"))
                .collect();
            match &best {
                Some(b) if &norm > b => {}
                Some(b) if &norm == b => found.push(pairings),
                _ => {
                    best = Some(norm);
                    found.clear();
                    found.push(pairings);
                }
            }
        });
        let min = best.expect("a nonzero dual vector within the bound exists");
        let mut shell = found
            .into_iter()
            .map(|p| self.dual_from_pairings(p).expect("valid pairing vector"))
            .collect::<Vec<_>>();
        sort_dual_vectors(&mut shell);
        Ok((min, shell))
    }
}

// In-place decomposition Q(c) = sum_i q_ii (c_i + sum_{j>i} q_ij c_j)^2 of a
// symmetric positive definite rational matrix.
fn decompose(mut q: Vec<Vec<Rat>>) -> Vec<Vec<Rat>> {
    let n = q.len();
    for i in 0..n {
        for j in i + 1..n {
            let scaled = &q[i][j] / &q[i][i];
            q[j][i] = q[i][j].clone();
            q[i][j] = scaled;
        }
        for k in i + 1..n {
            for l in k..n {
                let t = &q[k][i] * &q[i][l];
                q[k][l] -= t;
            }
        }
    }
    q
}

// Depth i walks from the last coordinate down; budget is what remains of the
// bound, spent accumulates the exact norm so far.
fn walk<F: FnMut(&[Rat], Rat)>(
    q: &[Vec<Rat>],
    rep: &[Rat],
    i: usize,
    budget: &Rat,
    spent: &Rat,
    coords: &mut Vec<Rat>,
    emit: &mut F,
) {
    // offset U_i = sum_{j>i} q_ij c_j
    let mut offset = rep[i].clone();
    for j in i + 1..q.len() {
        offset += &q[i][j] * &coords[j];
    }
    // rep[i] folded into the offset: c_i = rep_i + x_i with x integer
    let Some((lo, hi)) = int_range_quadratic(&q[i][i], &offset, budget) else {
        return;
    };
    for x in lo..=hi {
        let c = ri(x) + &rep[i];
        let term = {
            let s = ri(x) + &offset;
            &(&s * &s) * &q[i][i]
        };
        coords[i] = c;
        let new_budget = budget - &term;
        let new_spent = spent + &term;
        if i == 0 {
            emit(coords, new_spent);
        } else {
            walk(q, rep, i - 1, &new_budget, &new_spent, coords, emit);
        }
    }
}
