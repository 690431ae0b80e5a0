//! Exact linear algebra on small integer matrices.
//!
//! The matrices here are Gram matrices of rank at most ~20, so the simple
//! cubic algorithms below are more than fast enough and keep everything
//! exact: Bareiss elimination for determinants, Gauss-Jordan over rationals
//! for inverses, and an elementary Smith normal form that tracks the inverse
//! of the row transform (needed to pull discriminant-group representatives
//! back to pairing coordinates).

use crate::rat::{Int, Rat};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub type IntMatrix = Vec<Vec<Int>>;

pub fn to_bigint_matrix(m: &[Vec<i64>]) -> IntMatrix {
    m.iter()
        .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
        .collect()
}

/// Fraction-free determinant (Bareiss). Empty matrix has determinant 1.
pub fn det_bareiss(m: &[Vec<i64>]) -> Int {
    let n = m.len();
    if n == 0 {
        return Int::one();
    }
    let mut a = to_bigint_matrix(m);
    let mut sign = Int::one();
    let mut prev = Int::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let pivot = (k + 1..n).find(|&i| !a[i][k].is_zero());
            match pivot {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return Int::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = num / &prev;
            }
            a[i][k] = Int::zero();
        }
        prev = a[k][k].clone();
    }
    sign * a[n - 1][n - 1].clone()
}

/// Leading principal minors, for positive definiteness checks.
pub fn leading_minors(m: &[Vec<i64>]) -> Vec<Int> {
    (1..=m.len())
        .map(|k| {
            let sub: Vec<Vec<i64>> = m[..k].iter().map(|row| row[..k].to_vec()).collect();
            det_bareiss(&sub)
        })
        .collect()
}

/// Exact inverse over the rationals. Panics on singular input; callers check
/// the determinant first.
pub fn inverse_rational(m: &[Vec<i64>]) -> Vec<Vec<Rat>> {
    let n = m.len();
    let mut a: Vec<Vec<Rat>> = m
        .iter()
        .map(|row| row.iter().map(|&x| Rat::from_integer(BigInt::from(x))).collect())
        .collect();
    let mut inv: Vec<Vec<Rat>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Rat::one() } else { Rat::zero() })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .expect("matrix is singular");
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].clone();
        for j in 0..n {
            a[col][j] /= &p;
            inv[col][j] /= &p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for j in 0..n {
                    let t = &f * &a[col][j];
                    a[r][j] -= t;
                    let t = &f * &inv[col][j];
                    inv[r][j] -= t;
                }
            }
        }
    }
    inv
}

/// Smith normal form. Returns (diagonal entries, Uinv) where the input
/// satisfies m = Uinv * diag * (column transform); the diagonal entries are
/// nonnegative with d[i] | d[i+1]. Only the inverse row transform is kept:
/// cosets of Z^n / m Z^n are represented by Uinv * e with e ranging over the
/// box prod [0, d_i).
pub fn smith_normal_form(m: &[Vec<i64>]) -> (Vec<Int>, IntMatrix) {
    let n = m.len();
    let mut a = to_bigint_matrix(m);
    let mut uinv: IntMatrix = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Int::one() } else { Int::zero() })
                .collect()
        })
        .collect();

    // Row op a[i] += c * a[j] corresponds to uinv column op col_j -= c * col_i.
    fn row_add(a: &mut IntMatrix, uinv: &mut IntMatrix, i: usize, j: usize, c: &Int) {
        let n = a.len();
        for k in 0..n {
            let t = c * &a[j][k];
            a[i][k] += t;
        }
        for k in 0..n {
            let t = c * &uinv[k][i];
            uinv[k][j] -= t;
        }
    }
    fn row_swap(a: &mut IntMatrix, uinv: &mut IntMatrix, i: usize, j: usize) {
        a.swap(i, j);
        for row in uinv.iter_mut() {
            row.swap(i, j);
        }
    }
    fn row_negate(a: &mut IntMatrix, uinv: &mut IntMatrix, i: usize) {
        for x in a[i].iter_mut() {
            *x = -x.clone();
        }
        for row in uinv.iter_mut() {
            row[i] = -row[i].clone();
        }
    }
    fn col_add(a: &mut IntMatrix, i: usize, j: usize, c: &Int) {
        for row in a.iter_mut() {
            let t = c * &row[j];
            row[i] += t;
        }
    }
    fn col_swap(a: &mut IntMatrix, i: usize, j: usize) {
        for row in a.iter_mut() {
            row.swap(i, j);
        }
    }

    let mut t = 0;
    while t < n {
        // Find a nonzero pivot in the remaining block.
        let mut found = None;
        'search: for i in t..n {
            for j in t..n {
                if !a[i][j].is_zero() {
                    found = Some((i, j));
                    break 'search;
                }
            }
        }
        let Some((pi, pj)) = found else { break };
        row_swap(&mut a, &mut uinv, t, pi);
        col_swap(&mut a, t, pj);

        // Clear row and column t, restarting while remainders appear.
        loop {
            let mut dirty = false;
            for i in t + 1..n {
                if !a[i][t].is_zero() {
                    let q = -(&a[i][t] / &a[t][t]);
                    row_add(&mut a, &mut uinv, i, t, &q);
                    if !a[i][t].is_zero() {
                        row_swap(&mut a, &mut uinv, t, i);
                        dirty = true;
                    }
                }
            }
            for j in t + 1..n {
                if !a[t][j].is_zero() {
                    let q = -(&a[t][j] / &a[t][t]);
                    col_add(&mut a, j, t, &q);
                    if !a[t][j].is_zero() {
                        col_swap(&mut a, t, j);
                        dirty = true;
                    }
                }
            }
            if !dirty {
                break;
            }
        }

        // Ensure the pivot divides the rest of the block.
        let mut needs_restart = false;
        'divcheck: for i in t + 1..n {
            for j in t + 1..n {
                if !(&a[i][j] % &a[t][t]).is_zero() {
                    row_add(&mut a, &mut uinv, t, i, &Int::one());
                    needs_restart = true;
                    break 'divcheck;
                }
            }
        }
        if needs_restart {
            continue;
        }
        if a[t][t].is_negative() {
            row_negate(&mut a, &mut uinv, t);
        }
        t += 1;
    }

    let diag = (0..n).map(|i| a[i][i].clone()).collect();
    (diag, uinv)
}
