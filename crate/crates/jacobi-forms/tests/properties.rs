//! Randomized structural properties of the exact kernels.

use std::collections::BTreeMap;

use jacobi_forms::dd::dd_weight;
use jacobi_forms::jacobi::ez::solve_weak_basis;
use jacobi_forms::jacobi::JacobiExpansion;
use jacobi_forms::lattice::{build_named, NamedFamily};
use jacobi_forms::qseries::{delta, eisenstein, EisensteinKind};
use jacobi_forms::rat::{render, ri, rq, Rat};
use jacobi_forms::reflective::chain_constants;
use jacobi_forms::IntegerLattice;
use num_traits::Zero;
use proptest::prelude::*;

fn convolve(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Even positive definite Gram matrix 2 T^t T from a random unimodular-ish
/// integer square T; singular draws are filtered out by the constructor.
fn random_lattice(rank: usize) -> impl Strategy<Value = IntegerLattice> {
    prop::collection::vec(prop::collection::vec(-2i64..=2, rank), rank).prop_filter_map(
        "nonsingular transform",
        move |t| {
            let mut gram = vec![vec![0i64; rank]; rank];
            for (i, row) in gram.iter_mut().enumerate() {
                for (j, entry) in row.iter_mut().enumerate() {
                    *entry = 2 * (0..rank).map(|k| t[k][i] * t[k][j]).sum::<i64>();
                }
            }
            IntegerLattice::new(gram, "random").ok()
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn enumeration_is_negation_closed_and_counts_match(lattice in (1usize..=3).prop_flat_map(random_lattice)) {
        let trivial = lattice.trivial_coset();
        let ball = lattice.enumerate_ball(&trivial, &ri(6)).unwrap();
        let mut by_coords: BTreeMap<Vec<String>, Rat> = BTreeMap::new();
        for (v, norm) in &ball {
            by_coords.insert(v.coords().iter().map(render).collect(), norm.clone());
        }
        for (v, norm) in &ball {
            let negated: Vec<String> = v.coords().iter().map(|c| render(&(-c))).collect();
            prop_assert_eq!(by_coords.get(&negated), Some(norm));
        }
        let mut shell_sizes: BTreeMap<String, usize> = BTreeMap::new();
        for (_, norm) in &ball {
            *shell_sizes.entry(render(norm)).or_default() += 1;
        }
        prop_assert_eq!(shell_sizes.get("0").copied(), Some(1));
        for norm in [0i64, 2, 4, 6] {
            let count = lattice.count_vectors(&trivial, &ri(norm)).unwrap();
            let listed = lattice.enumerate_vectors(&trivial, &ri(norm)).unwrap().len();
            prop_assert_eq!(count, listed);
            prop_assert_eq!(count, shell_sizes.get(&norm.to_string()).copied().unwrap_or(0));
        }
    }

    #[test]
    fn determinant_and_level_follow_sums_and_rescaling(
        a in (1usize..=2).prop_flat_map(random_lattice),
        b in (1usize..=2).prop_flat_map(random_lattice),
        m in 1i64..=6,
    ) {
        let sum = a.direct_sum(&b);
        prop_assert_eq!(sum.det(), a.det() * b.det());
        prop_assert_eq!(sum.rank(), a.rank() + b.rank());

        let scaled = a.rescale(m).unwrap();
        let mut det = a.det();
        for _ in 0..a.rank() {
            det *= m;
        }
        prop_assert_eq!(scaled.det(), det);
        // level(L) | level(L(m)) | m * level(L)
        let level = a.level();
        let scaled_level = scaled.level();
        prop_assert!((&scaled_level % &level).is_zero());
        prop_assert!(((level * m) % scaled_level).is_zero());
    }

    #[test]
    fn chain_c2_hits_one_exactly_on_the_prime_cells(
        p in prop::sample::select(vec![2i64, 3, 5, 7, 11, 13]),
        n0 in 9i64..=23,
    ) {
        let constants = chain_constants(n0, &rq(24, p), &ri(n0), 1).unwrap();
        prop_assert_eq!(constants.c2 == ri(1), p * (n0 - 14) == 12);
    }

    #[test]
    fn u_is_linear_in_the_divisor_data(
        n0 in 9i64..=23,
        a in prop::sample::select(vec![ri(6), ri(12), ri(8), rq(24, 5)]),
        d in 1i64..=200,
        beta0 in 1i64..=20,
        lambda in 1i64..=5,
    ) {
        let base = chain_constants(n0, &a, &ri(d), beta0).unwrap();
        let scaled = chain_constants(n0, &a, &ri(lambda * d), lambda * beta0).unwrap();
        prop_assert_eq!(scaled.u, base.u * ri(lambda));
        // the first elimination step, recomputed
        let d1 = rq(n0, n0 - 24) * (ri(d) - ri(24 * beta0));
        prop_assert_eq!(base.d1, d1);
    }

    #[test]
    fn heat_operator_is_a_derivation_across_tensor_products(
        a in (1usize..=2).prop_flat_map(random_lattice),
        b in (1usize..=2).prop_flat_map(random_lattice),
    ) {
        let ta = JacobiExpansion::theta_series(&a, 3).unwrap();
        let tb = JacobiExpansion::theta_series(&b, 3).unwrap();
        let pair = ta.tensor(&tb).unwrap();
        let leibniz = ta
            .heat()
            .tensor(&tb)
            .unwrap()
            .add(&ta.tensor(&tb.heat()).unwrap())
            .unwrap();
        prop_assert!(pair.heat().sub(&leibniz).unwrap().is_zero());
        prop_assert_eq!(pair.heat().trunc(), pair.trunc());
        prop_assert_eq!(pair.heat().pole_order(), pair.pole_order());
        prop_assert_eq!(pair.heat().weight(), pair.weight() + ri(2));
    }

    #[test]
    fn diagonal_weights_rearrange_and_scale(
        n in 1usize..=6,
        m in 1i64..=6,
        c in 1i64..=6,
    ) {
        let lattice = build_named(NamedFamily::A1Scaled, n, m).unwrap();
        let (_, shell) = lattice.minimal_dual_vectors().unwrap();
        let k = dd_weight(&lattice, &shell, c).unwrap();
        // m(2nc + 2k) = 12c for the minimal shell of n rescaled A1 blocks
        prop_assert_eq!(ri(m) * (ri(2 * (n as i64) * c) + ri(2) * &k), ri(12 * c));
        let unit = dd_weight(&lattice, &shell, 1).unwrap();
        prop_assert_eq!(k, unit * ri(c));
    }

    #[test]
    fn solver_outputs_satisfy_the_constant_term_identity(
        index_m in 1i64..=3,
        weights in prop::collection::vec(-5i64..=5, 4),
    ) {
        // an attainable q^0 layer is a combination of the layers
        // (z + 10 + 1/z)^(m-b) (z - 2 + 1/z)^b with b = 0 or 2 <= b <= m,
        // mirroring the generator monomials times a weight-2b scalar
        let m = index_m as usize;
        let mut target = vec![0i64; 2 * m + 1];
        for (b, w) in (0..=m).filter(|&b| b != 1).zip(weights.iter()) {
            let mut poly = vec![1i64];
            for _ in 0..m - b {
                poly = convolve(&poly, &[1, 10, 1]);
            }
            for _ in 0..b {
                poly = convolve(&poly, &[1, -2, 1]);
            }
            for (t, p) in target.iter_mut().zip(poly.iter()) {
                *t += w * p;
            }
        }
        let mut q0 = BTreeMap::new();
        for r in 0..=index_m {
            q0.insert(r, ri(target[m + r as usize]));
        }
        let phi = solve_weak_basis(0, index_m, &q0, 2).unwrap();
        prop_assert_eq!(phi.gritsenko_residual().unwrap(), ri(0));
        for (r, value) in &q0 {
            prop_assert_eq!(phi.coefficient(0, &[*r]).unwrap(), value.clone());
        }
        phi.verify_elliptic_invariance().unwrap();
        phi.verify_even_weight_parity().unwrap();
    }

    #[test]
    fn theta_series_are_normalized_symmetric_and_holomorphic(
        lattice in (1usize..=2).prop_flat_map(random_lattice),
    ) {
        let theta = JacobiExpansion::theta_series(&lattice, 2).unwrap();
        prop_assert_eq!(theta.coefficient(0, &vec![0; lattice.rank()]).unwrap(), ri(1));
        prop_assert_eq!(theta.weight(), rq(lattice.rank() as i64, 2));
        theta.verify_elliptic_invariance().unwrap();
        let roots = lattice.enumerate_vectors(&lattice.trivial_coset(), &ri(2)).unwrap();
        for root in &roots {
            prop_assert_eq!(theta.coefficient(1, root.pairings()).unwrap(), ri(1));
        }
        prop_assert_eq!(
            theta.terms().iter().filter(|((n, _), c)| *n == 1 && !c.is_zero()).count(),
            roots.len()
        );
    }

    #[test]
    fn eisenstein_products_keep_exact_windows(
        trunc in 2i64..=8,
    ) {
        let e4 = eisenstein(EisensteinKind::E4, trunc).unwrap();
        let e6 = eisenstein(EisensteinKind::E6, trunc).unwrap();
        let product = e4.mul(&e6);
        prop_assert_eq!(product.trunc(), trunc);
        prop_assert_eq!(product.weight_tag(), Some(10));
        // Delta * (1/Delta) = 1 on the shared window
        let unit = delta(trunc, false).unwrap().mul(&delta(trunc, true).unwrap());
        for n in 0..unit.trunc() {
            prop_assert_eq!(unit.coefficient(n).unwrap(), ri(i64::from(n == 0)));
        }
    }
}
