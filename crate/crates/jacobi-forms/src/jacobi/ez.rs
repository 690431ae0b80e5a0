//! Classical index-one generators and a solver for weak Jacobi forms of
//! rank-one index from their q^0 layer.
//!
//! The generators are built from first principles: theta constants and eta
//! as series on the (q^{1/24}, zeta^{1/2}) grid, combined into the weak
//! generators of weight 0 and -2 and the holomorphic weight-4 form. Each
//! construction double-checks a known layer and refuses to return on
//! mismatch, so downstream results never rest on a silently wrong series.

use super::JacobiExpansion;
use crate::lattice::{build_named, NamedFamily};
use crate::qseries::{eisenstein, EisensteinKind, QSeries};
use crate::rat::{ri, rq, Rat};
use crate::{Error, Result};
use num_traits::Zero;
use std::collections::BTreeMap;

/// Series in q^{1/24} and zeta^{1/2}: keys (m, s) stand for q^{m/24}
/// zeta^{s/2}. Valid for m < trunc24.
#[derive(Debug, Clone)]
struct EzSeries {
    coeffs: BTreeMap<(i64, i64), Rat>,
    trunc24: i64,
}

impl EzSeries {
    fn new(trunc24: i64) -> Self {
        EzSeries { coeffs: BTreeMap::new(), trunc24 }
    }

    fn insert(&mut self, m: i64, s: i64, c: Rat) {
        if m < self.trunc24 && !c.is_zero() {
            *self.coeffs.entry((m, s)).or_insert_with(Rat::zero) += c;
        }
    }

    fn valuation(&self) -> i64 {
        self.coeffs.keys().map(|(m, _)| *m).min().unwrap_or(self.trunc24)
    }

    fn normalized(mut self) -> Self {
        self.coeffs.retain(|_, c| !c.is_zero());
        self
    }

    fn mul(&self, other: &EzSeries) -> EzSeries {
        let trunc24 = (self.trunc24 + other.valuation()).min(other.trunc24 + self.valuation());
        let mut out = EzSeries::new(trunc24);
        for ((m1, s1), c1) in &self.coeffs {
            for ((m2, s2), c2) in &other.coeffs {
                if m1 + m2 < trunc24 {
                    out.insert(m1 + m2, s1 + s2, c1 * c2);
                }
            }
        }
        out.normalized()
    }

    fn add(&self, other: &EzSeries) -> EzSeries {
        let mut out = EzSeries::new(self.trunc24.min(other.trunc24));
        for ((m, s), c) in self.coeffs.iter().chain(other.coeffs.iter()) {
            out.insert(*m, *s, c.clone());
        }
        out.normalized()
    }

    fn scale(&self, factor: &Rat) -> EzSeries {
        let mut out = EzSeries::new(self.trunc24);
        for ((m, s), c) in &self.coeffs {
            out.insert(*m, *s, c * factor);
        }
        out.normalized()
    }

    /// Inverse of a series whose lowest q-order term is a single monomial.
    fn reciprocal(&self) -> Result<EzSeries> {
        let val = self.valuation();
        let lead: Vec<_> = self
            .coeffs
            .iter()
            .filter(|((m, _), _)| *m == val)
            .collect();
        if lead.len() != 1 {
            return Err(Error::InvalidInput(
                "reciprocal needs a monomial lowest term".into(),
            ));
        }
        let (&(m0, s0), c0) = lead[0];
        let c0 = c0.clone();
        // v = self / (c0 q^{m0/24} zeta^{s0/2}) - 1 has positive valuation
        let mut v = EzSeries::new(self.trunc24 - m0);
        for ((m, s), c) in &self.coeffs {
            if (*m, *s) != (m0, s0) {
                v.insert(m - m0, s - s0, c / &c0);
            }
        }
        let v = v.normalized();
        let mut inv_unit = EzSeries::new(v.trunc24);
        inv_unit.insert(0, 0, ri(1));
        if !v.coeffs.is_empty() {
            let vv = v.valuation();
            debug_assert!(vv > 0);
            let mut power = inv_unit.clone();
            let mut j = vv;
            while j < v.trunc24 {
                power = power.mul(&v).scale(&ri(-1));
                inv_unit = inv_unit.add(&power);
                j += vv;
            }
        }
        let mut out = EzSeries::new(inv_unit.trunc24 - m0);
        for ((m, s), c) in &inv_unit.coeffs {
            out.insert(m - m0, s - s0, c / &c0);
        }
        Ok(out.normalized())
    }

    /// Reads the series onto the integer (q, zeta) grid; any key off the
    /// grid means the construction went wrong.
    fn to_integer_grid(&self, weight2: i64, index_m: i64, trunc: i64) -> Result<Ez1Form> {
        if self.trunc24 < 24 * trunc {
            return Err(Error::WindowTooSmall { trunc: self.trunc24 / 24 });
        }
        let mut coeffs = BTreeMap::new();
        for ((m, s), c) in &self.coeffs {
            if m % 24 != 0 || s % 2 != 0 {
                return Err(Error::Inconsistent(format!(
                    "term q^{m}/24 zeta^{s}/2 off the integer grid"
                )));
            }
            if m / 24 < trunc {
                coeffs.insert((m / 24, s / 2), c.clone());
            }
        }
        Ok(Ez1Form { weight2, index_m, trunc, coeffs })
    }
}

/// Sum over n of sign(n) q^{(2n+1)^2/8} zeta^{(2n+1)/2}; with `signed` the
/// summand carries (-1)^n (the odd Jacobi theta), without it this is the
/// first even theta.
fn theta_sum_odd_exponents(trunc24: i64, signed: bool, with_z: bool) -> EzSeries {
    let mut out = EzSeries::new(trunc24);
    let mut n = 0i64;
    loop {
        let done: usize = [n, -n - 1]
            .iter()
            .map(|&k| {
                let h = 2 * k + 1;
                let m = 3 * h * h;
                if m >= trunc24 {
                    return 1;
                }
                let sign = if signed && k.rem_euclid(2) == 1 { -1 } else { 1 };
                out.insert(m, if with_z { h } else { 0 }, ri(sign));
                0
            })
            .sum();
        if done == 2 {
            break;
        }
        n += 1;
    }
    out.normalized()
}

/// Sum over n of (+-1)^n q^{n^2/2} zeta^n (the other two even thetas).
fn theta_sum_integer_exponents(trunc24: i64, signed: bool, with_z: bool) -> EzSeries {
    let mut out = EzSeries::new(trunc24);
    let mut n = 0i64;
    loop {
        let m = 12 * n * n;
        if m >= trunc24 {
            break;
        }
        let sign = if signed && n.rem_euclid(2) == 1 { -1 } else { 1 };
        let s = if with_z { 2 * n } else { 0 };
        out.insert(m, s, ri(sign));
        if n > 0 {
            out.insert(m, -s, ri(sign));
        }
        n += 1;
    }
    out.normalized()
}

fn eta_series(trunc24: i64) -> EzSeries {
    let mut out = EzSeries::new(trunc24);
    out.insert(1, 0, ri(1));
    let mut n = 1i64;
    while 24 * n < trunc24 {
        let mut next = EzSeries::new(trunc24);
        for ((m, s), c) in &out.coeffs {
            next.insert(*m, *s, c.clone());
            next.insert(m + 24 * n, *s, -c.clone());
        }
        out = next.normalized();
        n += 1;
    }
    out
}

/// Weak Jacobi form of rank-one index on the integer grid; exponents of
/// zeta are the pairings with the lattice generator.
#[derive(Debug, Clone)]
pub(crate) struct Ez1Form {
    weight2: i64,
    index_m: i64,
    trunc: i64,
    coeffs: BTreeMap<(i64, i64), Rat>,
}

impl Ez1Form {
    fn one(index_m: i64, trunc: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert((0, 0), ri(1));
        Ez1Form { weight2: 0, index_m, trunc, coeffs }
    }

    fn mul(&self, other: &Ez1Form) -> Ez1Form {
        let trunc = self.trunc.min(other.trunc);
        let mut coeffs: BTreeMap<(i64, i64), Rat> = BTreeMap::new();
        for ((n1, r1), c1) in &self.coeffs {
            for ((n2, r2), c2) in &other.coeffs {
                if n1 + n2 < trunc {
                    *coeffs
                        .entry((n1 + n2, r1 + r2))
                        .or_insert_with(Rat::zero) += c1 * c2;
                }
            }
        }
        coeffs.retain(|_, c| !c.is_zero());
        Ez1Form {
            weight2: self.weight2 + other.weight2,
            index_m: self.index_m + other.index_m,
            trunc,
            coeffs,
        }
    }

    fn mul_qseries(&self, f: &QSeries) -> Result<Ez1Form> {
        let tag = f.weight_tag().ok_or(Error::MissingWeightTag)?;
        if f.n_min() < 0 {
            return Err(Error::InvalidInput("scalar factor must be holomorphic here".into()));
        }
        let trunc = (self.trunc + f.n_min()).min(f.trunc());
        let mut coeffs: BTreeMap<(i64, i64), Rat> = BTreeMap::new();
        for ((n, r), c) in &self.coeffs {
            for (&m, fm) in f.iter() {
                if n + m < trunc {
                    *coeffs
                        .entry((n + m, *r))
                        .or_insert_with(Rat::zero) += c * fm;
                }
            }
        }
        coeffs.retain(|_, c| !c.is_zero());
        Ok(Ez1Form {
            weight2: self.weight2 + 2 * tag,
            index_m: self.index_m,
            trunc,
            coeffs,
        })
    }

    fn add_scaled(&self, other: &Ez1Form, factor: &Rat) -> Ez1Form {
        debug_assert_eq!(self.weight2, other.weight2);
        debug_assert_eq!(self.index_m, other.index_m);
        let trunc = self.trunc.min(other.trunc);
        let mut coeffs = self.coeffs.clone();
        coeffs.retain(|(n, _), _| *n < trunc);
        for (k, c) in &other.coeffs {
            if k.0 < trunc {
                *coeffs.entry(*k).or_insert_with(Rat::zero) += c * factor;
            }
        }
        coeffs.retain(|_, c| !c.is_zero());
        Ez1Form { weight2: self.weight2, index_m: self.index_m, trunc, coeffs }
    }

    fn pow(&self, k: u32) -> Ez1Form {
        let mut out = Ez1Form::one(0, self.trunc);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    fn coefficient(&self, n: i64, r: i64) -> Rat {
        self.coeffs.get(&(n, r)).cloned().unwrap_or_else(Rat::zero)
    }

    fn to_jacobi(&self) -> Result<JacobiExpansion> {
        let lattice = build_named(NamedFamily::A1Scaled, 1, self.index_m)?;
        let coeffs = self
            .coeffs
            .iter()
            .map(|((n, r), c)| ((*n, vec![*r]), c.clone()))
            .collect();
        Ok(JacobiExpansion::from_terms(lattice, self.weight2, self.trunc, 0, coeffs))
    }
}

fn check_q0_layer(form: &Ez1Form, expected: &[(i64, i64)], name: &str) -> Result<()> {
    for &(r, value) in expected {
        if form.coefficient(0, r) != ri(value) {
            return Err(Error::Inconsistent(format!(
                "{name}: q^0 zeta^{r} coefficient is {}, expected {value}",
                form.coefficient(0, r)
            )));
        }
    }
    let count = form.coeffs.keys().filter(|(n, _)| *n == 0).count();
    if count != expected.len() {
        return Err(Error::Inconsistent(format!(
            "{name}: q^0 layer has {count} terms, expected {}",
            expected.len()
        )));
    }
    Ok(())
}

/// Weight -2 generator, q^0 layer zeta - 2 + 1/zeta.
fn phi_m21(trunc: i64) -> Result<Ez1Form> {
    let trunc24 = 24 * (trunc + 2);
    let theta = theta_sum_odd_exponents(trunc24, true, true);
    let eta6 = {
        let eta = eta_series(trunc24);
        let e2 = eta.mul(&eta);
        let e4 = e2.mul(&e2);
        e4.mul(&e2)
    };
    let form = theta.mul(&theta).mul(&eta6.reciprocal()?);
    let out = form.to_integer_grid(-4, 1, trunc)?;
    check_q0_layer(&out, &[(-1, 1), (0, -2), (1, 1)], "weight -2 generator")?;
    Ok(out)
}

/// Weight 0 generator, q^0 layer zeta + 10 + 1/zeta, built as four times the
/// sum of the squared even theta ratios.
fn phi_01(trunc: i64) -> Result<Ez1Form> {
    let trunc24 = 24 * (trunc + 2);
    let mut total = EzSeries::new(trunc24);
    for (odd_exp, signed) in [(true, false), (false, false), (false, true)] {
        let (with_z, constant) = if odd_exp {
            (
                theta_sum_odd_exponents(trunc24, signed, true),
                theta_sum_odd_exponents(trunc24, signed, false),
            )
        } else {
            (
                theta_sum_integer_exponents(trunc24, signed, true),
                theta_sum_integer_exponents(trunc24, signed, false),
            )
        };
        let ratio = with_z
            .mul(&with_z)
            .mul(&constant.mul(&constant).reciprocal()?);
        total = total.add(&ratio);
    }
    let out = total.scale(&ri(4)).to_integer_grid(0, 1, trunc)?;
    check_q0_layer(&out, &[(-1, 1), (0, 10), (1, 1)], "weight 0 generator")?;
    Ok(out)
}

/// Holomorphic weight-4 index-one form normalized to constant term 1,
/// realized as (E4 phi_{0,1} - E6 phi_{-2,1}) / 12.
fn e41(trunc: i64) -> Result<Ez1Form> {
    let a = phi_01(trunc)?.mul_qseries(&eisenstein(EisensteinKind::E4, trunc)?)?;
    let b = phi_m21(trunc)?.mul_qseries(&eisenstein(EisensteinKind::E6, trunc)?)?;
    let out = a.add_scaled(&b, &ri(-1)).to_jacobi()?.scale(&rq(1, 12));
    if out.classify() != super::HolomorphyClass::Holomorphic {
        return Err(Error::Inconsistent("weight-4 form is not holomorphic".into()));
    }
    if out.coefficient(0, &[0])? != ri(1) || out.coefficient(0, &[1])? != ri(0) {
        return Err(Error::Inconsistent("weight-4 form q^0 layer is wrong".into()));
    }
    let back: BTreeMap<(i64, i64), Rat> = out
        .terms()
        .iter()
        .map(|((n, l), c)| ((*n, l[0]), c.clone()))
        .collect();
    Ok(Ez1Form { weight2: 8, index_m: 1, trunc: out.trunc(), coeffs: back })
}

/// The classical rank-one index generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeakGenerator {
    /// Weight 0, index 1, q^0 layer zeta + 10 + 1/zeta.
    Phi01,
    /// Weight -2, index 1, q^0 layer zeta - 2 + 1/zeta.
    PhiM21,
    /// Weight 4, index 1, holomorphic, constant term 1.
    E41,
}

pub fn ez_generator(which: WeakGenerator, trunc: i64) -> Result<JacobiExpansion> {
    if trunc < 1 {
        return Err(Error::WindowTooSmall { trunc });
    }
    match which {
        WeakGenerator::Phi01 => phi_01(trunc)?.to_jacobi(),
        WeakGenerator::PhiM21 => phi_m21(trunc)?.to_jacobi(),
        WeakGenerator::E41 => e41(trunc)?.to_jacobi(),
    }
}

/// Solves for the weak Jacobi form of the given even weight and rank-one
/// index whose q^0 layer matches `q0` (keys are zeta-exponents r >= 0;
/// omitted keys mean zero). Works in the monomial basis
/// phi_{0,1}^a phi_{-2,1}^b E4^c E6^d over exact rationals.
pub fn solve_weak_basis(
    weight: i64,
    index_m: i64,
    q0: &BTreeMap<i64, Rat>,
    trunc: i64,
) -> Result<JacobiExpansion> {
    if index_m < 1 {
        return Err(Error::InvalidInput("index must be positive".into()));
    }
    if trunc < 1 {
        return Err(Error::WindowTooSmall { trunc });
    }
    if q0.keys().any(|&r| r < 0) {
        return Err(Error::InvalidInput("q^0 target keys must be r >= 0".into()));
    }
    for (&r, c) in q0 {
        if r > index_m && !c.is_zero() {
            return Err(Error::NoSolution(format!(
                "a weak form of index {index_m} has no q^0 term at zeta^{r}"
            )));
        }
    }

    let p0 = phi_01(trunc)?;
    let pm = phi_m21(trunc)?;
    let e4 = eisenstein(EisensteinKind::E4, trunc)?;
    let e6 = eisenstein(EisensteinKind::E6, trunc)?;

    let mut monomials: Vec<Ez1Form> = Vec::new();
    for b in 0..=index_m {
        let a = index_m - b;
        let scalar_weight = weight + 2 * b;
        if scalar_weight < 0 {
            continue;
        }
        for d in 0..=(scalar_weight / 6) {
            let rem = scalar_weight - 6 * d;
            if rem % 4 != 0 {
                continue;
            }
            let c = rem / 4;
            let mut mono = p0.pow(a as u32).mul(&pm.pow(b as u32));
            for _ in 0..c {
                mono = mono.mul_qseries(&e4)?;
            }
            for _ in 0..d {
                mono = mono.mul_qseries(&e6)?;
            }
            monomials.push(mono);
        }
    }

    // rows: q^0 coefficients at r = 0..=index_m; columns: monomials
    let rows = (index_m + 1) as usize;
    let cols = monomials.len();
    let mut aug: Vec<Vec<Rat>> = (0..rows)
        .map(|r| {
            let mut row: Vec<Rat> = monomials
                .iter()
                .map(|m| m.coefficient(0, r as i64))
                .collect();
            row.push(q0.get(&(r as i64)).cloned().unwrap_or_else(Rat::zero));
            row
        })
        .collect();

    let mut pivot_cols = Vec::new();
    let mut row = 0usize;
    for col in 0..cols {
        let Some(p) = (row..rows).find(|&r| !aug[r][col].is_zero()) else {
            continue;
        };
        aug.swap(row, p);
        let inv = aug[row][col].clone();
        for x in aug[row].iter_mut() {
            *x = &*x / &inv;
        }
        for r in 0..rows {
            if r != row && !aug[r][col].is_zero() {
                let f = aug[r][col].clone();
                for c in 0..=cols {
                    let delta = &aug[row][c] * &f;
                    aug[r][c] -= delta;
                }
            }
        }
        pivot_cols.push(col);
        row += 1;
        if row == rows {
            break;
        }
    }
    for r in row..rows {
        if !aug[r][cols].is_zero() {
            return Err(Error::NoSolution(
                "q^0 target is not the principal part of any weak form".into(),
            ));
        }
    }
    if pivot_cols.len() < cols {
        return Err(Error::NonUnique { dimension: cols - pivot_cols.len() });
    }

    let mut solution: Vec<Rat> = vec![Rat::zero(); cols];
    for (r, &col) in pivot_cols.iter().enumerate() {
        solution[col] = aug[r][cols].clone();
    }
    let mut out = Ez1Form {
        weight2: 2 * weight,
        index_m,
        trunc,
        coeffs: BTreeMap::new(),
    };
    for (mono, x) in monomials.iter().zip(&solution) {
        out = out.add_scaled(mono, x);
    }
    out.to_jacobi()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jacobi::HolomorphyClass;

    #[test]
    fn weight_zero_generator_layers() {
        let p = ez_generator(WeakGenerator::Phi01, 3).unwrap();
        assert_eq!(p.weight(), ri(0));
        assert_eq!(p.coefficient(0, &[0]).unwrap(), ri(10));
        assert_eq!(p.coefficient(0, &[1]).unwrap(), ri(1));
        assert_eq!(p.coefficient(1, &[0]).unwrap(), ri(108));
        assert_eq!(p.coefficient(1, &[-1]).unwrap(), ri(-64));
        assert_eq!(p.coefficient(1, &[2]).unwrap(), ri(10));
        assert_eq!(p.coefficient(1, &[3]).unwrap(), ri(0));
        p.verify_elliptic_invariance().unwrap();
        p.verify_even_weight_parity().unwrap();
        assert_eq!(p.classify(), HolomorphyClass::Weak);
    }

    #[test]
    fn weight_minus_two_generator_layers() {
        let p = ez_generator(WeakGenerator::PhiM21, 3).unwrap();
        assert_eq!(p.weight(), ri(-2));
        assert_eq!(p.coefficient(0, &[0]).unwrap(), ri(-2));
        assert_eq!(p.coefficient(1, &[0]).unwrap(), ri(-12));
        assert_eq!(p.coefficient(1, &[1]).unwrap(), ri(8));
        assert_eq!(p.coefficient(1, &[2]).unwrap(), ri(-2));
        p.verify_elliptic_invariance().unwrap();
    }

    #[test]
    fn weight_four_form_is_holomorphic_with_known_layers() {
        let e = ez_generator(WeakGenerator::E41, 3).unwrap();
        assert_eq!(e.weight(), ri(4));
        assert_eq!(e.classify(), HolomorphyClass::Holomorphic);
        assert_eq!(e.coefficient(0, &[0]).unwrap(), ri(1));
        assert_eq!(e.coefficient(0, &[1]).unwrap(), ri(0));
        assert_eq!(e.coefficient(1, &[0]).unwrap(), ri(126));
        assert_eq!(e.coefficient(1, &[1]).unwrap(), ri(56));
        assert_eq!(e.coefficient(1, &[2]).unwrap(), ri(1));
        e.verify_elliptic_invariance().unwrap();
    }

    #[test]
    fn solver_recovers_the_weight_zero_generator() {
        let mut q0 = BTreeMap::new();
        q0.insert(0, ri(10));
        q0.insert(1, ri(1));
        let solved = solve_weak_basis(0, 1, &q0, 3).unwrap();
        let direct = ez_generator(WeakGenerator::Phi01, 3).unwrap();
        assert_eq!(solved.terms(), direct.terms());
    }

    #[test]
    fn solver_index_two_form_is_integral() {
        // (phi_{0,1}^2 - E4 phi_{-2,1}^2)/24 has q^0 layer zeta + 4 + 1/zeta
        let mut q0 = BTreeMap::new();
        q0.insert(0, ri(4));
        q0.insert(1, ri(1));
        let psi = solve_weak_basis(0, 2, &q0, 3).unwrap();
        assert_eq!(psi.coefficient(0, &[2]).unwrap(), ri(0));
        for (_, c) in psi.terms() {
            assert!(c.is_integer(), "nonintegral coefficient {c}");
        }
        psi.verify_elliptic_invariance().unwrap();
    }

    #[test]
    fn solver_rejects_impossible_targets() {
        let mut q0 = BTreeMap::new();
        q0.insert(2, ri(1));
        assert!(matches!(
            solve_weak_basis(0, 1, &q0, 2),
            Err(Error::NoSolution(_))
        ));
        // zeta + 9 + 1/zeta is not the q^0 layer of a weak index-1 form
        let mut q0 = BTreeMap::new();
        q0.insert(0, ri(9));
        q0.insert(1, ri(1));
        assert!(matches!(
            solve_weak_basis(0, 1, &q0, 2),
            Err(Error::NoSolution(_))
        ));
    }
}
