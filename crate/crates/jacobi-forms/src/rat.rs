//! Small helpers around `num_rational::BigRational`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub type Rat = num_rational::BigRational;
pub type Int = BigInt;

/// Integer as a rational.
pub fn ri(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Reduced fraction n/d.
pub fn rq(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn is_integer(r: &Rat) -> bool {
    r.denom().is_one()
}

/// Render exactly: integers plainly, everything else as num/den.
pub fn render(r: &Rat) -> String {
    if is_integer(r) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Exact floor as a BigInt.
pub fn floor_int(r: &Rat) -> Int {
    r.floor().to_integer()
}

/// Value mod 1, in [0, 1).
pub fn frac(r: &Rat) -> Rat {
    r - Rat::from_integer(floor_int(r))
}

/// Value mod 2, in [0, 2).
pub fn mod_two(r: &Rat) -> Rat {
    let two = ri(2);
    let m = r - &two * Rat::from_integer((r / &two).floor().to_integer());
    debug_assert!(!m.is_negative() && m < two);
    m
}

/// Inclusive integer range of x with (x + offset)^2 * scale <= budget.
///
/// Used by the short-vector recursion. The bounds are found from a floating
/// point estimate and then corrected by exact rational comparisons, so the
/// result is exact. Returns None when the range is empty.
pub fn int_range_quadratic(scale: &Rat, offset: &Rat, budget: &Rat) -> Option<(i64, i64)> {
    if budget.is_negative() {
        return None;
    }
    let to_f64 = |r: &Rat| {
        let n = r.numer().to_string().parse::<f64>().unwrap_or(f64::MAX);
        let d = r.denom().to_string().parse::<f64>().unwrap_or(f64::MAX);
        n / d
    };
    let half_width = (to_f64(budget) / to_f64(scale)).max(0.0).sqrt();
    let center = -to_f64(offset);
    let ok = |x: i64| {
        let c = ri(x) + offset;
        &(&c * &c) * scale <= *budget
    };
    // Start from the float guesses and walk to the exact boundary.
    let mut lo = (center - half_width).floor() as i64 - 1;
    let mut hi = (center + half_width).ceil() as i64 + 1;
    while !ok(lo) && lo <= hi {
        lo += 1;
    }
    while lo > i64::MIN && ok(lo - 1) {
        lo -= 1;
    }
    while !ok(hi) && hi >= lo {
        hi -= 1;
    }
    while hi < i64::MAX && ok(hi + 1) {
        hi += 1;
    }
    if lo > hi {
        None
    } else {
        Some((lo, hi))
    }
}

/// Lexicographic comparison of rational vectors.
pub fn lex_cmp(a: &[Rat], b: &[Rat]) -> std::cmp::Ordering {
    for (x, y) in a.iter().zip(b.iter()) {
        match x.cmp(y) {
            std::cmp::Ordering::Equal => continue,
            other => return other,
        }
    }
    a.len().cmp(&b.len())
}

pub fn rat_zero() -> Rat {
    Rat::zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadratic_range_matches_brute_force() {
        let cases = [
            (rq(1, 2), rq(1, 3), ri(5)),
            (ri(2), ri(0), ri(2)),
            (ri(3), rq(-7, 2), rq(49, 4)),
            (ri(1), ri(0), ri(0)),
            (ri(5), ri(2), rq(1, 7)),
        ];
        for (scale, offset, budget) in cases {
            let expect: Vec<i64> = (-50..=50)
                .filter(|&x| &(&(ri(x) + &offset) * &(ri(x) + &offset)) * &scale <= budget)
                .collect();
            match int_range_quadratic(&scale, &offset, &budget) {
                Some((lo, hi)) => {
                    assert_eq!(expect.first(), Some(&lo));
                    assert_eq!(expect.last(), Some(&hi));
                }
                None => assert!(expect.is_empty()),
            }
        }
    }

    #[test]
    fn mod_two_lands_in_window() {
        assert_eq!(mod_two(&rq(-7, 2)), rq(1, 2));
        assert_eq!(mod_two(&ri(6)), ri(0));
        assert_eq!(mod_two(&rq(9, 2)), rq(1, 2));
        assert_eq!(render(&rq(9, 2)), "9/2");
        assert_eq!(render(&ri(-3)), "-3");
    }
}
