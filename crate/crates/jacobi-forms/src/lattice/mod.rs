//! Even positive definite lattices and their discriminant groups.
//!
//! A lattice is stored as an integer Gram matrix. Dual vectors are carried in
//! two coordinate systems at once: rational coordinates in the lattice basis,
//! and the integer pairing vector ((v, e_1), ..., (v, e_n)), which identifies
//! a dual vector uniquely and makes a clean map key. Cosets of the
//! discriminant group L'/L are canonicalized by reducing basis coordinates
//! into [0, 1).

mod enumerate;
pub mod matrix;
mod named;

pub use named::{build_named, NamedFamily};

use crate::rat::{frac, is_integer, lex_cmp, mod_two, ri, rq, Int, Rat};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::sync::OnceLock;

/// Even positive definite integer lattice, described by its Gram matrix.
#[derive(Debug, Clone)]
pub struct IntegerLattice {
    gram: Vec<Vec<i64>>,
    label: String,
    inv_gram: OnceLock<Vec<Vec<Rat>>>,
    cholesky: OnceLock<Vec<Vec<Rat>>>,
    scaled_inv: OnceLock<Option<(Vec<Vec<i64>>, i64)>>,
}

impl PartialEq for IntegerLattice {
    fn eq(&self, other: &Self) -> bool {
        self.gram == other.gram
    }
}
impl Eq for IntegerLattice {}

/// Element of the dual lattice L'. `coords` are rational coordinates in the
/// basis of L; `pairings` are the integers (v, e_i).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualVector {
    coords: Vec<Rat>,
    pairings: Vec<i64>,
    norm: Rat,
}

impl DualVector {
    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }
    pub fn pairings(&self) -> &[i64] {
        &self.pairings
    }
    pub fn norm(&self) -> &Rat {
        &self.norm
    }
    pub fn is_zero(&self) -> bool {
        self.pairings.iter().all(|&x| x == 0)
    }
    /// Smallest t >= 1 with t*v in L.
    pub fn denominator(&self) -> i64 {
        self.coords
            .iter()
            .fold(Int::one(), |acc, c| acc.lcm(c.denom()))
            .to_i64()
            .expect("coset order fits in i64")
    }
}

/// Coset of L'/L with its canonical representative (coordinates in [0, 1)),
/// its order in the discriminant group, and its norm modulo 2Z.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetClass {
    representative: DualVector,
    order: i64,
    norm_mod_two: Rat,
}

impl CosetClass {
    pub fn representative(&self) -> &DualVector {
        &self.representative
    }
    pub fn order(&self) -> i64 {
        self.order
    }
    pub fn norm_mod_two(&self) -> &Rat {
        &self.norm_mod_two
    }
    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }
}

/// Which reflective setting a computation runs in: divisors built from
/// norm -2 vectors with two multiplicities, or the analogous prime-level
/// setting with vectors of norm -2/p.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReflectiveKind {
    TwoReflective,
    PrimeLevel(i64),
}

impl std::fmt::Display for ReflectiveKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ReflectiveKind::TwoReflective => write!(f, "two-reflective"),
            ReflectiveKind::PrimeLevel(p) => write!(f, "prime-level p={p}"),
        }
    }
}

/// Outcome of the divisor-side reflectivity test for one primitive vector in
/// an ambient even lattice of arbitrary signature.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReflectiveVectorReport {
    pub vector: Vec<i64>,
    pub norm: i64,
    pub div: i64,
    pub is_reflective: bool,
}

impl IntegerLattice {
    /// Validates symmetry, even diagonal and positive definiteness.
    pub fn new(gram: Vec<Vec<i64>>, label: impl Into<String>) -> Result<Self> {
        let n = gram.len();
        for (i, row) in gram.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidLattice(format!(
                    "row {i} has length {} in a rank-{n} Gram matrix",
                    row.len()
                )));
            }
            if row[i] % 2 != 0 {
                return Err(Error::InvalidLattice(format!(
                    "diagonal entry ({i},{i}) = {} is odd",
                    row[i]
                )));
            }
            for j in 0..n {
                if gram[i][j] != gram[j][i] {
                    return Err(Error::InvalidLattice(format!(
                        "entries ({i},{j}) and ({j},{i}) differ"
                    )));
                }
            }
        }
        for (k, minor) in matrix::leading_minors(&gram).iter().enumerate() {
            if !minor.is_positive() {
                return Err(Error::InvalidLattice(format!(
                    "leading {}x{} minor is not positive",
                    k + 1,
                    k + 1
                )));
            }
        }
        Ok(IntegerLattice {
            gram,
            label: label.into(),
            inv_gram: OnceLock::new(),
            cholesky: OnceLock::new(),
            scaled_inv: OnceLock::new(),
        })
    }

    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub(crate) fn inv_gram(&self) -> &[Vec<Rat>] {
        self.inv_gram
            .get_or_init(|| matrix::inverse_rational(&self.gram))
    }

    // Adjugate matrix det*G^-1 together with det, when both fit in i64. The
    // adjugate is integral, so dual norms and coset reductions become machine
    // arithmetic for every lattice of practical size.
    fn scaled_inv(&self) -> Option<&(Vec<Vec<i64>>, i64)> {
        self.scaled_inv
            .get_or_init(|| {
                let det = self.det().to_i64()?;
                let det_rat = ri(det);
                let mut adj = Vec::with_capacity(self.rank());
                for row in self.inv_gram() {
                    let mut out = Vec::with_capacity(row.len());
                    for entry in row {
                        let scaled = entry * &det_rat;
                        if !is_integer(&scaled) {
                            return None;
                        }
                        out.push(scaled.numer().to_i64()?);
                    }
                    adj.push(out);
                }
                Some((adj, det))
            })
            .as_ref()
    }

    /// Norm (v, v) of the dual vector with the given pairing vector, without
    /// building the vector itself.
    pub fn norm_of_pairings(&self, pairings: &[i64]) -> Rat {
        assert_eq!(pairings.len(), self.rank(), "pairing vector length");
        if let Some((adj, det)) = self.scaled_inv() {
            if let Some(scaled) = quadratic_i128(adj, pairings) {
                return Rat::new(Int::from(scaled), Int::from(*det));
            }
        }
        let inv = self.inv_gram();
        let mut norm = Rat::zero();
        for (i, &a) in pairings.iter().enumerate() {
            for (j, &b) in pairings.iter().enumerate() {
                norm += &inv[i][j] * ri(a * b);
            }
        }
        norm
    }

    /// Determinant of the Gram matrix (order of the discriminant group).
    pub fn det(&self) -> Int {
        matrix::det_bareiss(&self.gram)
    }

    /// Smallest N with N*(v, v) in 2Z for every dual vector v. Read off the
    /// inverse Gram matrix: N clears every denominator and makes the diagonal
    /// even.
    pub fn level(&self) -> Int {
        let inv = self.inv_gram();
        let mut level = Int::one();
        for (i, row) in inv.iter().enumerate() {
            for (j, entry) in row.iter().enumerate() {
                let mut need = entry.denom().clone();
                if i == j && entry.numer().is_odd() {
                    need *= 2;
                }
                level = level.lcm(&need);
            }
        }
        level
    }

    pub fn det_and_level(&self) -> (Int, Int) {
        (self.det(), self.level())
    }

    /// Orthogonal direct sum; Gram matrices are placed block-diagonally.
    pub fn direct_sum(&self, other: &IntegerLattice) -> IntegerLattice {
        let n = self.rank() + other.rank();
        let mut gram = vec![vec![0i64; n]; n];
        for i in 0..self.rank() {
            for j in 0..self.rank() {
                gram[i][j] = self.gram[i][j];
            }
        }
        for i in 0..other.rank() {
            for j in 0..other.rank() {
                gram[self.rank() + i][self.rank() + j] = other.gram[i][j];
            }
        }
        let label = match (self.rank(), other.rank()) {
            (0, _) => other.label.clone(),
            (_, 0) => self.label.clone(),
            _ => format!("{}+{}", self.label, other.label),
        };
        IntegerLattice::new(gram, label).expect("direct sum of valid lattices is valid")
    }

    /// Same free module with the form multiplied by m.
    pub fn rescale(&self, m: i64) -> Result<IntegerLattice> {
        if m < 1 {
            return Err(Error::InvalidInput(format!("rescale factor {m} must be >= 1")));
        }
        let gram = self
            .gram
            .iter()
            .map(|row| row.iter().map(|&x| x * m).collect())
            .collect();
        let label = if m == 1 {
            self.label.clone()
        } else {
            format!("{}({m})", self.label)
        };
        IntegerLattice::new(gram, label)
    }

    /// Dual vector from rational coordinates in the lattice basis. Fails if
    /// the pairings with the basis are not integers.
    pub fn dual_vector(&self, coords: Vec<Rat>) -> Result<DualVector> {
        if coords.len() != self.rank() {
            return Err(Error::InvalidInput(format!(
                "coordinate vector of length {} for a rank-{} lattice",
                coords.len(),
                self.rank()
            )));
        }
        let mut pairings = Vec::with_capacity(self.rank());
        for row in &self.gram {
            let mut s = Rat::zero();
            for (g, c) in row.iter().zip(coords.iter()) {
                s += ri(*g) * c;
            }
            if !is_integer(&s) {
                return Err(Error::InvalidInput(
                    "coordinates do not define a dual vector (non-integral pairing)".into(),
                ));
            }
            pairings.push(s.numer().to_i64().ok_or_else(|| {
                Error::InvalidInput("pairing does not fit in i64".into())
            })?);
        }
        let norm = pairing_norm(&coords, &pairings);
        Ok(DualVector { coords, pairings, norm })
    }

    /// Dual vector from its integer pairing vector. Always well defined.
    pub fn dual_from_pairings(&self, pairings: Vec<i64>) -> Result<DualVector> {
        if pairings.len() != self.rank() {
            return Err(Error::InvalidInput(format!(
                "pairing vector of length {} for a rank-{} lattice",
                pairings.len(),
                self.rank()
            )));
        }
        let inv = self.inv_gram();
        let coords: Vec<Rat> = (0..self.rank())
            .map(|i| {
                let mut s = Rat::zero();
                for (j, &a) in pairings.iter().enumerate() {
                    s += &inv[i][j] * ri(a);
                }
                s
            })
            .collect();
        let norm = pairing_norm(&coords, &pairings);
        Ok(DualVector { coords, pairings, norm })
    }

    /// Lattice vector (integral coordinates) as a DualVector.
    pub fn lattice_vector(&self, coords: Vec<i64>) -> Result<DualVector> {
        self.dual_vector(coords.into_iter().map(ri).collect())
    }

    pub fn zero_vector(&self) -> DualVector {
        DualVector {
            coords: vec![Rat::zero(); self.rank()],
            pairings: vec![0; self.rank()],
            norm: Rat::zero(),
        }
    }

    /// Canonical pairing vector of the coset of `pairings`: reduce basis
    /// coordinates into [0,1) and convert back.
    pub(crate) fn canonical_class_pairings(&self, pairings: &[i64]) -> Vec<i64> {
        assert_eq!(pairings.len(), self.rank(), "pairing vector length");
        if let Some(fast) = self.canonical_class_fast(pairings) {
            return fast;
        }
        let v = self
            .dual_from_pairings(pairings.to_vec())
            .expect("pairings of correct length");
        let reduced: Vec<Rat> = v.coords.iter().map(frac).collect();
        self.dual_vector(reduced)
            .expect("fractional part stays in the dual lattice")
            .pairings
            .clone()
    }

    // det*coords = Adj*pairings, so reducing coords into [0,1) is a mod-det
    // reduction, and pairing the result with the basis is G*(..)/det, which
    // divides exactly. All in i128, bailing out to the rational path on
    // overflow.
    fn canonical_class_fast(&self, pairings: &[i64]) -> Option<Vec<i64>> {
        let (adj, det) = self.scaled_inv()?;
        let d = i128::from(*det);
        let n = self.rank();
        let mut reduced = vec![0i128; n];
        for i in 0..n {
            let mut s: i128 = 0;
            for j in 0..n {
                s = s.checked_add(i128::from(adj[i][j]).checked_mul(i128::from(pairings[j]))?)?;
            }
            reduced[i] = s.rem_euclid(d);
        }
        let mut out = Vec::with_capacity(n);
        for row in &self.gram {
            let mut s: i128 = 0;
            for (j, &g) in row.iter().enumerate() {
                s = s.checked_add(i128::from(g).checked_mul(reduced[j])?)?;
            }
            debug_assert_eq!(s.rem_euclid(d), 0);
            out.push(i64::try_from(s / d).ok()?);
        }
        Some(out)
    }

    /// Coset of the given dual vector, with canonical representative.
    pub fn coset_class(&self, v: &DualVector) -> CosetClass {
        let reduced: Vec<Rat> = v.coords.iter().map(frac).collect();
        let representative = self
            .dual_vector(reduced)
            .expect("fractional part stays in the dual lattice");
        let order = representative.denominator();
        let norm_mod_two = mod_two(&representative.norm);
        CosetClass { representative, order, norm_mod_two }
    }

    pub fn trivial_coset(&self) -> CosetClass {
        self.coset_class(&self.zero_vector())
    }

    /// All cosets of L'/L, canonically represented and sorted by pairing
    /// vector. Uses the Smith normal form of the Gram matrix.
    pub fn discriminant_classes(&self) -> Vec<CosetClass> {
        let det = self.det();
        let size = det.to_usize().expect("discriminant group is small");
        if self.rank() == 0 || size == 1 {
            return vec![self.trivial_coset()];
        }
        let (diag, uinv) = matrix::smith_normal_form(&self.gram);
        let mut classes = Vec::with_capacity(size);
        let mut counter: Vec<Int> = vec![Int::zero(); self.rank()];
        loop {
            // pairing vector uinv * counter
            let pairing_big: Vec<Int> = (0..self.rank())
                .map(|i| {
                    let mut s = Int::zero();
                    for (j, c) in counter.iter().enumerate() {
                        s += &uinv[i][j] * c;
                    }
                    s
                })
                .collect();
            let coords: Vec<Rat> = {
                let inv = self.inv_gram();
                (0..self.rank())
                    .map(|i| {
                        let mut s = Rat::zero();
                        for (j, a) in pairing_big.iter().enumerate() {
                            s += &inv[i][j] * Rat::from_integer(a.clone());
                        }
                        s
                    })
                    .collect()
            };
            let reduced: Vec<Rat> = coords.iter().map(frac).collect();
            let rep = self
                .dual_vector(reduced)
                .expect("representative lies in the dual lattice");
            classes.push(self.coset_class(&rep));

            // advance the mixed-radix counter over prod [0, diag_i)
            let mut pos = 0;
            loop {
                if pos == self.rank() {
                    debug_assert_eq!(classes.len(), size);
                    classes.sort_by(|a, b| {
                        a.representative.pairings.cmp(&b.representative.pairings)
                    });
                    classes.dedup_by(|a, b| a.representative.pairings == b.representative.pairings);
                    assert_eq!(classes.len(), size, "each coset appears exactly once");
                    return classes;
                }
                counter[pos] += 1;
                if counter[pos] < diag[pos] {
                    break;
                }
                counter[pos] = Int::zero();
                pos += 1;
            }
        }
    }

    /// Cosets that can support reflective divisor data: order-2 classes of
    /// norm 1/2 mod 2Z in the 2-reflective setting, classes of norm 2/p mod
    /// 2Z at prime level p. The trivial class is never included.
    pub fn reflective_classes(&self, kind: ReflectiveKind) -> Result<Vec<CosetClass>> {
        match kind {
            ReflectiveKind::TwoReflective => Ok(self
                .discriminant_classes()
                .into_iter()
                .filter(|c| c.order == 2 && c.norm_mod_two == rq(1, 2))
                .collect()),
            ReflectiveKind::PrimeLevel(p) => {
                if p < 2 || !is_prime(p) {
                    return Err(Error::InvalidInput(format!("{p} is not a prime")));
                }
                let level = self.level();
                if level != BigInt::from(p) {
                    return Err(Error::InvalidInput(format!(
                        "lattice has level {level}, expected {p}"
                    )));
                }
                Ok(self
                    .discriminant_classes()
                    .into_iter()
                    .filter(|c| c.norm_mod_two == rq(2, p))
                    .collect())
            }
        }
    }

    /// Number of norm-2 vectors.
    pub fn count_roots(&self) -> usize {
        self.count_vectors(&self.trivial_coset(), &ri(2))
            .expect("norm 2 is valid")
    }

    /// Number of dual vectors s with 2s of norm 2 in L and s - mu0_half in L.
    /// `mu0_half` must be half a lattice vector.
    pub fn count_r_mu(&self, mu0_half: &DualVector) -> Result<usize> {
        for c in &mu0_half.coords {
            if !is_integer(&(c * ri(2))) {
                return Err(Error::InvalidInput(
                    "representative is not half a lattice vector".into(),
                ));
            }
        }
        let coset = self.coset_class(mu0_half);
        self.count_vectors(&coset, &rq(1, 2))
    }

    /// Number of dual vectors of norm 2/p in the coset gamma.
    pub fn count_c_gamma(&self, gamma: &CosetClass, p: i64) -> Result<usize> {
        if p < 2 || !is_prime(p) {
            return Err(Error::InvalidInput(format!("{p} is not a prime")));
        }
        self.count_vectors(gamma, &rq(2, p))
    }
}

fn pairing_norm(coords: &[Rat], pairings: &[i64]) -> Rat {
    let mut norm = Rat::zero();
    for (c, &a) in coords.iter().zip(pairings.iter()) {
        norm += c * ri(a);
    }
    norm
}

// a^T M a with overflow checks; None asks the caller to redo it in rationals.
fn quadratic_i128(m: &[Vec<i64>], a: &[i64]) -> Option<i128> {
    let mut total: i128 = 0;
    for (i, row) in m.iter().enumerate() {
        let mut s: i128 = 0;
        for (j, &e) in row.iter().enumerate() {
            s = s.checked_add(i128::from(e).checked_mul(i128::from(a[j]))?)?;
        }
        total = total.checked_add(s.checked_mul(i128::from(a[i]))?)?;
    }
    Some(total)
}

pub(crate) fn is_prime(p: i64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Reflectivity test for a primitive vector v of negative even norm -2d in an
/// ambient even lattice given by `ambient_gram` (any signature): v defines a
/// reflective divisor when div(v), the positive generator of the pairing
/// ideal (v, M), is d or 2d.
pub fn reflection_check(
    v: &[i64],
    ambient_gram: &[Vec<i64>],
    norm: i64,
) -> Result<ReflectiveVectorReport> {
    let n = ambient_gram.len();
    if v.len() != n {
        return Err(Error::InvalidInput("vector length does not match Gram matrix".into()));
    }
    for (i, row) in ambient_gram.iter().enumerate() {
        if row.len() != n {
            return Err(Error::InvalidInput("Gram matrix is not square".into()));
        }
        for j in 0..n {
            if ambient_gram[i][j] != ambient_gram[j][i] {
                return Err(Error::InvalidInput("Gram matrix is not symmetric".into()));
            }
        }
    }
    if v.iter().all(|&x| x == 0) {
        return Err(Error::InvalidInput("zero vector has no reflection".into()));
    }
    let pairings: Vec<i64> = ambient_gram
        .iter()
        .map(|row| row.iter().zip(v.iter()).map(|(&g, &x)| g * x).sum())
        .collect();
    let computed: i64 = pairings.iter().zip(v.iter()).map(|(&a, &x)| a * x).sum();
    if computed != norm {
        return Err(Error::InvalidInput(format!(
            "declared norm {norm} but (v, v) = {computed}"
        )));
    }
    if norm >= 0 || norm % 2 != 0 {
        return Err(Error::InvalidInput(format!(
            "norm {norm} is not negative and even"
        )));
    }
    let g: i64 = v.iter().fold(0i64, |acc, &x| acc.gcd(&x));
    if g != 1 {
        return Err(Error::InvalidInput(format!("vector is not primitive (content {g})")));
    }
    let div = pairings.iter().fold(0i64, |acc, &a| acc.gcd(&a));
    let d = -norm / 2;
    Ok(ReflectiveVectorReport {
        vector: v.to_vec(),
        norm,
        div,
        is_reflective: div == d || div == 2 * d,
    })
}

/// Deterministic ordering of dual vectors: lexicographic on basis coordinates.
pub(crate) fn sort_dual_vectors(vs: &mut [DualVector]) {
    vs.sort_by(|a, b| lex_cmp(&a.coords, &b.coords));
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{ri, rq};

    #[test]
    fn rejects_bad_gram_matrices() {
        assert!(IntegerLattice::new(vec![vec![1]], "odd").is_err());
        assert!(IntegerLattice::new(vec![vec![2, 1], vec![0, 2]], "asym").is_err());
        assert!(IntegerLattice::new(vec![vec![-2]], "negdef").is_err());
        assert!(IntegerLattice::new(vec![vec![2, 3], vec![3, 2]], "indef").is_err());
    }

    #[test]
    fn det_and_level_on_named_lattices() {
        let e8 = build_named(NamedFamily::E8, 8, 1).unwrap();
        assert_eq!(e8.det_and_level(), (Int::from(1), Int::from(1)));

        let d4 = build_named(NamedFamily::D, 4, 1).unwrap();
        assert_eq!(d4.det_and_level(), (Int::from(4), Int::from(2)));

        let a2 = build_named(NamedFamily::A, 2, 1).unwrap();
        assert_eq!(a2.det_and_level(), (Int::from(3), Int::from(3)));

        let a1 = build_named(NamedFamily::A, 1, 1).unwrap();
        assert_eq!(a1.det_and_level(), (Int::from(2), Int::from(4)));
    }

    #[test]
    fn rescaled_a2_gram() {
        let a2_3 = build_named(NamedFamily::A, 2, 3).unwrap();
        assert_eq!(a2_3.gram(), &[vec![6, -3], vec![-3, 6]]);
        assert_eq!(a2_3.det(), Int::from(27));
    }

    #[test]
    fn discriminant_classes_of_a2() {
        let a2 = build_named(NamedFamily::A, 2, 1).unwrap();
        let classes = a2.discriminant_classes();
        assert_eq!(classes.len(), 3);
        let orders: Vec<i64> = classes.iter().map(|c| c.order()).collect();
        assert_eq!(orders.iter().filter(|&&o| o == 1).count(), 1);
        assert_eq!(orders.iter().filter(|&&o| o == 3).count(), 2);
        for c in &classes {
            if !c.is_trivial() {
                assert_eq!(c.norm_mod_two(), &rq(2, 3));
            }
        }
    }

    #[test]
    fn discriminant_classes_of_d4_and_scaled_a1() {
        let d4 = build_named(NamedFamily::D, 4, 1).unwrap();
        let classes = d4.discriminant_classes();
        assert_eq!(classes.len(), 4);
        assert_eq!(classes.iter().filter(|c| c.order() == 2).count(), 3);
        for c in classes.iter().filter(|c| !c.is_trivial()) {
            assert_eq!(c.norm_mod_two(), &ri(1));
        }

        // <2m> = A1(m): classes k/(2m) e with norms k^2/(2m) mod 2
        let a1_5 = build_named(NamedFamily::A1Scaled, 1, 5).unwrap();
        let classes = a1_5.discriminant_classes();
        assert_eq!(classes.len(), 10);
    }

    #[test]
    fn reflective_classes_two_reflective() {
        // 2E8 + A1: one order-2 class of norm 1/2
        let e8 = build_named(NamedFamily::E8, 8, 1).unwrap();
        let a1 = build_named(NamedFamily::A, 1, 1).unwrap();
        let l = e8.direct_sum(&e8).direct_sum(&a1);
        let classes = l.reflective_classes(ReflectiveKind::TwoReflective).unwrap();
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].norm_mod_two(), &rq(1, 2));

        // E8 + 2A1: two such classes
        let l = e8.direct_sum(&a1).direct_sum(&a1);
        let classes = l.reflective_classes(ReflectiveKind::TwoReflective).unwrap();
        assert_eq!(classes.len(), 2);

        // 2E8 + <4>: the order-2 class has norm 1, so no classes survive
        let a1_2 = build_named(NamedFamily::A1Scaled, 1, 2).unwrap();
        let l = e8.direct_sum(&e8).direct_sum(&a1_2);
        let classes = l.reflective_classes(ReflectiveKind::TwoReflective).unwrap();
        assert!(classes.is_empty());
    }

    #[test]
    fn reflective_classes_prime_level() {
        let a2 = build_named(NamedFamily::A, 2, 1).unwrap();
        let classes = a2.reflective_classes(ReflectiveKind::PrimeLevel(3)).unwrap();
        assert_eq!(classes.len(), 2);

        let d4 = build_named(NamedFamily::D, 4, 1).unwrap();
        let classes = d4.reflective_classes(ReflectiveKind::PrimeLevel(2)).unwrap();
        assert_eq!(classes.len(), 3, "all three D4 classes have norm 1 mod 2");

        // D8: the vector class has norm 1, the two spinor classes norm 2
        let d8 = build_named(NamedFamily::D, 8, 1).unwrap();
        let classes = d8.reflective_classes(ReflectiveKind::PrimeLevel(2)).unwrap();
        assert_eq!(classes.len(), 1);

        let e8 = build_named(NamedFamily::E8, 8, 1).unwrap();
        assert!(e8.reflective_classes(ReflectiveKind::PrimeLevel(2)).is_err());
    }

    #[test]
    fn count_r_mu_values() {
        let e8 = build_named(NamedFamily::E8, 8, 1).unwrap();
        let a1 = build_named(NamedFamily::A, 1, 1).unwrap();
        let l = e8.direct_sum(&e8).direct_sum(&a1);
        let classes = l.reflective_classes(ReflectiveKind::TwoReflective).unwrap();
        assert_eq!(l.count_r_mu(classes[0].representative()).unwrap(), 2);
        assert_eq!(l.count_r_mu(&l.zero_vector()).unwrap(), 0);

        // 2E8 + <2n>, n >= 2: no vectors of norm 1/2 in any coset of (1/2)L
        for n in 2..=3 {
            let ln = build_named(NamedFamily::A1Scaled, 1, n).unwrap();
            let l = e8.direct_sum(&e8).direct_sum(&ln);
            let half = l
                .dual_vector({
                    let mut c = vec![ri(0); 17];
                    c[16] = rq(1, 2);
                    c
                })
                .unwrap();
            assert_eq!(l.count_r_mu(&half).unwrap(), 0);
        }
    }

    #[test]
    fn count_c_gamma_values() {
        let a2 = build_named(NamedFamily::A, 2, 1).unwrap();
        for gamma in a2.reflective_classes(ReflectiveKind::PrimeLevel(3)).unwrap() {
            assert_eq!(a2.count_c_gamma(&gamma, 3).unwrap(), 3);
        }
        let d4 = build_named(NamedFamily::D, 4, 1).unwrap();
        for gamma in d4.discriminant_classes().iter().filter(|c| !c.is_trivial()) {
            assert_eq!(d4.count_c_gamma(gamma, 2).unwrap(), 8);
        }
    }

    #[test]
    fn reflection_check_examples() {
        // ambient 2U + A1(-1): hyperbolic planes and a negated A1
        let gram = vec![
            vec![0, 1, 0, 0, 0],
            vec![1, 0, 0, 0, 0],
            vec![0, 0, 0, 1, 0],
            vec![0, 0, 1, 0, 0],
            vec![0, 0, 0, 0, -2],
        ];
        let r = reflection_check(&[0, 0, 0, 0, 1], &gram, -2).unwrap();
        assert_eq!(r.div, 2);
        assert!(r.is_reflective);

        let r = reflection_check(&[1, -1, 0, 0, 0], &gram, -2).unwrap();
        assert_eq!(r.div, 1);
        assert!(r.is_reflective, "div = d = 1");

        let r = reflection_check(&[1, -3, 0, 0, 0], &gram, -6).unwrap();
        assert_eq!(r.div, 1);
        assert!(!r.is_reflective, "norm -6 with div 1 is not reflective");

        assert!(reflection_check(&[2, 0, 0, 0, 0], &gram, 0).is_err());
        assert!(reflection_check(&[1, 1, 0, 0, 0], &gram, -2).is_err());
    }

    #[test]
    fn canonical_class_pairings_identifies_cosets() {
        let a2 = build_named(NamedFamily::A, 2, 1).unwrap();
        let v = a2.dual_from_pairings(vec![1, 0]).unwrap();
        let w = a2.dual_from_pairings(vec![3, -1]).unwrap();
        let diff: Vec<Rat> = v
            .coords()
            .iter()
            .zip(w.coords().iter())
            .map(|(a, b)| a - b)
            .collect();
        let in_lattice = diff.iter().all(is_integer);
        assert_eq!(
            a2.canonical_class_pairings(v.pairings()) == a2.canonical_class_pairings(w.pairings()),
            in_lattice
        );
    }
}
