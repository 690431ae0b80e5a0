//! Scalar q-expansions with exact rational coefficients.
//!
//! A series stores coefficients for exponents n with n_min <= n < trunc; the
//! window is tracked through every operation and access outside it is an
//! error rather than a silent zero. Modular forms carry their weight as an
//! optional tag so products of tagged series stay tagged.

use crate::rat::{ri, Rat};
use crate::{Error, Result};
use num_traits::Zero;
use std::collections::BTreeMap;

/// Laurent q-expansion, exact and truncated: coefficients are valid on the
/// window [n_min, trunc).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QSeries {
    coeffs: BTreeMap<i64, Rat>,
    n_min: i64,
    trunc: i64,
    weight_tag: Option<i64>,
}

/// The classical level-one series this crate needs by name.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EisensteinKind {
    /// G2 = -1/24 + sum sigma_1(n) q^n, the quasimodular weight-2 series.
    G2,
    /// E4 = 1 + 240 sum sigma_3(n) q^n.
    E4,
    /// E6 = 1 - 504 sum sigma_5(n) q^n.
    E6,
}

impl QSeries {
    pub fn zero(trunc: i64) -> Self {
        QSeries { coeffs: BTreeMap::new(), n_min: trunc, trunc, weight_tag: None }
    }

    pub fn one(trunc: i64) -> Self {
        let mut s = QSeries::zero(trunc);
        if trunc > 0 {
            s.coeffs.insert(0, ri(1));
            s.n_min = 0;
        }
        s.weight_tag = Some(0);
        s
    }

    pub fn from_coeffs(
        coeffs: impl IntoIterator<Item = (i64, Rat)>,
        trunc: i64,
        weight_tag: Option<i64>,
    ) -> Self {
        let mut map = BTreeMap::new();
        for (n, c) in coeffs {
            assert!(n < trunc, "coefficient beyond the truncation window");
            if !c.is_zero() {
                map.insert(n, c);
            }
        }
        let n_min = map.keys().next().copied().unwrap_or(trunc);
        QSeries { coeffs: map, n_min, trunc, weight_tag }
    }

    pub fn n_min(&self) -> i64 {
        self.n_min
    }

    pub fn trunc(&self) -> i64 {
        self.trunc
    }

    pub fn weight_tag(&self) -> Option<i64> {
        self.weight_tag
    }

    pub fn with_weight_tag(mut self, w: Option<i64>) -> Self {
        self.weight_tag = w;
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&i64, &Rat)> {
        self.coeffs.iter()
    }

    /// Coefficient of q^n; an error outside the valid window.
    pub fn coefficient(&self, n: i64) -> Result<Rat> {
        if n >= self.trunc {
            return Err(Error::OutOfWindow { n, lo: self.n_min, hi: self.trunc });
        }
        Ok(self.coeffs.get(&n).cloned().unwrap_or_else(Rat::zero))
    }

    fn normalized(mut self) -> Self {
        self.coeffs.retain(|_, c| !c.is_zero());
        self.n_min = self.coeffs.keys().next().copied().unwrap_or(self.trunc);
        self
    }

    pub fn add(&self, other: &QSeries) -> QSeries {
        let trunc = self.trunc.min(other.trunc);
        let mut coeffs = BTreeMap::new();
        for (&n, c) in self.coeffs.iter().chain(other.coeffs.iter()) {
            if n < trunc {
                *coeffs.entry(n).or_insert_with(Rat::zero) += c;
            }
        }
        let tag = match (self.weight_tag, other.weight_tag) {
            (Some(a), Some(b)) if a == b => Some(a),
            _ => None,
        };
        QSeries { coeffs, n_min: 0, trunc, weight_tag: tag }.normalized()
    }

    pub fn sub(&self, other: &QSeries) -> QSeries {
        self.add(&other.scale(&ri(-1)))
    }

    pub fn scale(&self, factor: &Rat) -> QSeries {
        let coeffs = self
            .coeffs
            .iter()
            .map(|(&n, c)| (n, c * factor))
            .collect();
        QSeries { coeffs, n_min: self.n_min, trunc: self.trunc, weight_tag: self.weight_tag }
            .normalized()
    }

    /// Product. The window shrinks to what both factors can support:
    /// min(trunc_a + n_min_b, trunc_b + n_min_a).
    pub fn mul(&self, other: &QSeries) -> QSeries {
        let trunc = (self.trunc + other.n_min).min(other.trunc + self.n_min);
        let mut coeffs: BTreeMap<i64, Rat> = BTreeMap::new();
        for (&a, ca) in &self.coeffs {
            for (&b, cb) in &other.coeffs {
                let n = a + b;
                if n < trunc {
                    *coeffs.entry(n).or_insert_with(Rat::zero) += ca * cb;
                }
            }
        }
        let tag = match (self.weight_tag, other.weight_tag) {
            (Some(a), Some(b)) => Some(a + b),
            _ => None,
        };
        QSeries { coeffs, n_min: 0, trunc, weight_tag: tag }.normalized()
    }

    pub fn pow(&self, k: u32) -> QSeries {
        let mut acc = QSeries::one(self.trunc - (self.n_min.min(0)) * (k as i64 - 1).max(0));
        // keep the window honest: repeated mul recomputes it anyway
        acc = acc.with_weight_tag(Some(0));
        let mut result = acc;
        for _ in 0..k {
            result = result.mul(self);
        }
        result
    }

    /// Multiply by q^shift (window shifts along).
    pub fn shift(&self, shift: i64) -> QSeries {
        let coeffs = self.coeffs.iter().map(|(&n, c)| (n + shift, c.clone())).collect();
        QSeries {
            coeffs,
            n_min: self.n_min + shift,
            trunc: self.trunc + shift,
            weight_tag: self.weight_tag,
        }
    }

    /// Reciprocal of a series whose lowest term is nonzero. The result is
    /// valid on a window of the same length starting at -n_min.
    pub fn reciprocal(&self) -> Result<QSeries> {
        if self.is_zero() {
            return Err(Error::InvalidInput("reciprocal of the zero series".into()));
        }
        let val = self.n_min;
        let lead = self.coeffs[&val].clone();
        let len = self.trunc - val;
        // u = self / (lead q^val) is 1 + O(q); invert by the usual recurrence
        let u: BTreeMap<i64, Rat> = self
            .coeffs
            .iter()
            .map(|(&n, c)| (n - val, c / &lead))
            .collect();
        let mut w: BTreeMap<i64, Rat> = BTreeMap::new();
        w.insert(0, ri(1));
        for n in 1..len {
            let mut acc = Rat::zero();
            for (&j, wj) in w.iter() {
                if let Some(uj) = u.get(&(n - j)) {
                    if n - j >= 1 {
                        acc += wj * uj;
                    }
                }
            }
            if !acc.is_zero() {
                w.insert(n, -acc);
            }
        }
        let coeffs: BTreeMap<i64, Rat> = w
            .into_iter()
            .map(|(n, c)| (n - val, c / &lead))
            .collect();
        Ok(QSeries {
            coeffs,
            n_min: -val,
            trunc: len - val,
            weight_tag: self.weight_tag.map(|t| -t),
        }
        .normalized())
    }
}

fn divisor_power_sum(n: i64, k: u32) -> Rat {
    let mut s = Rat::zero();
    for d in 1..=n {
        if n % d == 0 {
            s += ri(d.pow(k));
        }
    }
    s
}

/// The Eisenstein series of [`EisensteinKind`], truncated to `trunc`.
pub fn eisenstein(kind: EisensteinKind, trunc: i64) -> Result<QSeries> {
    if trunc < 1 {
        return Err(Error::WindowTooSmall { trunc });
    }
    let (constant, mult, power, tag) = match kind {
        EisensteinKind::G2 => (crate::rat::rq(-1, 24), ri(1), 1u32, 2),
        EisensteinKind::E4 => (ri(1), ri(240), 3, 4),
        EisensteinKind::E6 => (ri(1), ri(-504), 5, 6),
    };
    let mut coeffs = vec![(0, constant)];
    for n in 1..trunc {
        coeffs.push((n, &mult * divisor_power_sum(n, power)));
    }
    Ok(QSeries::from_coeffs(coeffs, trunc, Some(tag)))
}

/// The discriminant cusp form (E4^3 - E6^2)/1728, or its reciprocal, valid on
/// the full requested window (internally computed with margin).
pub fn delta(trunc: i64, inverse: bool) -> Result<QSeries> {
    if trunc < 1 {
        return Err(Error::WindowTooSmall { trunc });
    }
    let pad = if inverse { trunc + 3 } else { trunc };
    let e4 = eisenstein(EisensteinKind::E4, pad)?;
    let e6 = eisenstein(EisensteinKind::E6, pad)?;
    let num = e4.pow(3).sub(&e6.mul(&e6));
    let mut d = num.scale(&crate::rat::rq(1, 1728)).with_weight_tag(Some(12));
    if !inverse {
        if d.trunc > trunc {
            d.coeffs.retain(|&n, _| n < trunc);
            d.trunc = trunc;
        }
        return Ok(d.normalized());
    }
    let mut inv = d.reciprocal()?;
    if inv.trunc > trunc {
        inv.coeffs.retain(|&n, _| n < trunc);
        inv.trunc = trunc;
    }
    Ok(inv.normalized())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rq;

    #[test]
    fn eisenstein_leading_coefficients() {
        let g2 = eisenstein(EisensteinKind::G2, 6).unwrap();
        let got: Vec<Rat> = (0..6).map(|n| g2.coefficient(n).unwrap()).collect();
        assert_eq!(got, vec![rq(-1, 24), ri(1), ri(3), ri(4), ri(7), ri(6)]);

        let e4 = eisenstein(EisensteinKind::E4, 6).unwrap();
        let got: Vec<Rat> = (0..6).map(|n| e4.coefficient(n).unwrap()).collect();
        assert_eq!(got, vec![ri(1), ri(240), ri(2160), ri(6720), ri(17520), ri(30240)]);

        let e6 = eisenstein(EisensteinKind::E6, 5).unwrap();
        let got: Vec<Rat> = (0..5).map(|n| e6.coefficient(n).unwrap()).collect();
        assert_eq!(got, vec![ri(1), ri(-504), ri(-16632), ri(-122976), ri(-532728)]);
    }

    #[test]
    fn delta_has_the_classical_expansion() {
        let d = delta(9, false).unwrap();
        let got: Vec<Rat> = (0..9).map(|n| d.coefficient(n).unwrap()).collect();
        assert_eq!(
            got,
            vec![
                ri(0),
                ri(1),
                ri(-24),
                ri(252),
                ri(-1472),
                ri(4830),
                ri(-6048),
                ri(-16744),
                ri(84480)
            ]
        );
        assert_eq!(d.weight_tag(), Some(12));
        assert_eq!(d.n_min(), 1);
    }

    #[test]
    fn delta_inverse_is_a_left_and_right_inverse() {
        let d = delta(8, false).unwrap();
        let inv = delta(8, true).unwrap();
        assert_eq!(inv.n_min(), -1);
        assert_eq!(inv.coefficient(-1).unwrap(), ri(1));
        assert_eq!(inv.coefficient(0).unwrap(), ri(24));
        assert_eq!(inv.coefficient(1).unwrap(), ri(324));
        let prod = d.mul(&inv);
        assert_eq!(prod.coefficient(0).unwrap(), ri(1));
        for n in 1..prod.trunc() {
            assert_eq!(prod.coefficient(n).unwrap(), ri(0), "q^{n} of delta * 1/delta");
        }
        assert_eq!(prod.weight_tag(), Some(0));
    }

    #[test]
    fn window_bookkeeping() {
        let e4 = eisenstein(EisensteinKind::E4, 5).unwrap();
        let d_inv = delta(5, true).unwrap();
        let p = e4.mul(&d_inv);
        // trunc = min(5 + (-1), 5 + 0) = 4
        assert_eq!(p.trunc(), 4);
        assert_eq!(p.n_min(), -1);
        assert!(p.coefficient(4).is_err());
        assert_eq!(p.coefficient(-1).unwrap(), ri(1));
        assert_eq!(p.coefficient(0).unwrap(), ri(264));
        assert_eq!(p.weight_tag(), Some(-8));
    }

    #[test]
    fn e4_cubed_minus_e6_squared_is_1728_delta() {
        let n = 9;
        let e4 = eisenstein(EisensteinKind::E4, n).unwrap();
        let e6 = eisenstein(EisensteinKind::E6, n).unwrap();
        let lhs = e4.pow(3).sub(&e6.pow(2));
        let rhs = delta(n, false).unwrap().scale(&ri(1728));
        for k in 0..n {
            assert_eq!(lhs.coefficient(k).unwrap(), rhs.coefficient(k).unwrap(), "q^{k}");
        }
    }
}
