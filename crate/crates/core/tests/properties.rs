//! Algebraic invariants of the kernel, checked exactly on random inputs.

use higher_lie::lie_modules::{conj, f_from_psi, f_tilde_eval, foulkes, lie, PsiSpec};
use higher_lie::partition::{partitions_cached, Partition};
use higher_lie::plethysm::{
    h_lambda, pleth, pleth_e_pm, pleth_h, pleth_inverse, pleth_series, sym_powers, Series,
};
use higher_lie::symfunc::{character_table, e_of, h_of, int, s_of, to_schur, Coefficient, SymFunc};
use num::{BigInt, BigRational, One, Zero};
use proptest::prelude::*;

/// A random symmetric function of degree `n` with at most `terms` nonzero
/// small-integer coefficients.
fn symfunc(n: usize, terms: usize) -> impl Strategy<Value = SymFunc> {
    let parts = partitions_cached(n);
    let count = parts.len();
    prop::collection::vec((0..count, -3i64..=3), 0..=terms).prop_map(move |picks| {
        let parts = partitions_cached(n);
        SymFunc::from_terms(
            n,
            picks.into_iter().map(|(i, c)| (parts[i].clone(), int(c))),
        )
        .expect("sizes match")
    })
}

/// A sparse constant-free series: each degree in `1..=n` is zero or a
/// single term, with degree 1 forced to `p_1` when `unit` is set.
fn sparse_series(n: usize, unit: bool) -> impl Strategy<Value = Series> {
    let degrees: Vec<BoxedStrategy<SymFunc>> = (1..=n)
        .map(|d| {
            if d == 1 && unit {
                Just(SymFunc::p(Partition::new(vec![1]))).boxed()
            } else {
                let zero = Just(SymFunc::zero(d));
                prop_oneof![2 => zero, 1 => symfunc(d, 1)].boxed()
            }
        })
        .collect();
    degrees.prop_map(move |comps| {
        let mut s = Series::zero(n);
        for (i, f) in comps.into_iter().enumerate() {
            s.set(i + 1, f);
        }
        s
    })
}

fn p(parts: &[u32]) -> SymFunc {
    SymFunc::p(Partition::new(parts.to_vec()))
}

#[test]
fn characters_are_orthonormal() {
    for n in 1..=8 {
        let parts = partitions_cached(n);
        let table = character_table(n);
        let z: Vec<BigInt> = parts.iter().map(|m| m.z()).collect();
        for (i, row_i) in table.iter().enumerate() {
            for (j, row_j) in table.iter().enumerate() {
                let mut sum = BigRational::zero();
                for k in 0..parts.len() {
                    let prod = BigInt::from(row_i[k] * row_j[k]);
                    sum += BigRational::new(prod, z[k].clone());
                }
                let expected = if i == j {
                    BigRational::one()
                } else {
                    BigRational::zero()
                };
                assert_eq!(sum, expected, "rows {i}, {j} of S_{n}");
            }
        }
    }
}

#[test]
fn z_weighted_power_sums_give_h() {
    for n in 1..=9 {
        let terms = partitions_cached(n)
            .iter()
            .map(|l| (l.clone(), BigRational::new(BigInt::one(), l.z())))
            .collect::<Vec<_>>();
        assert_eq!(SymFunc::from_terms(n, terms).unwrap(), h_of(n));
    }
}

#[test]
fn hr_slices_match_h_lambda_sums() {
    for (name, q) in [
        ("Lie", Series::from_fn(8, lie)),
        ("Conj", Series::from_fn(8, conj)),
    ] {
        let powers = sym_powers(&q).unwrap();
        for r in 1..=4 {
            for n in r..=8 {
                let mut sum = SymFunc::zero(n);
                for lambda in partitions_cached(n).iter().filter(|l| l.len() == r) {
                    sum = sum.try_add(&h_lambda(&q, lambda).unwrap()).unwrap();
                }
                assert_eq!(powers[r].component(n), sum, "h_{r}[{name}] at degree {n}");
            }
        }
    }
}

#[test]
fn foulkes_characters_are_nonnegative_and_sum_to_regular() {
    for n in 1..=8 {
        let mut total = SymFunc::zero(n);
        for r in 1..=n as u64 {
            let f = foulkes(n, r).unwrap();
            assert!(to_schur(&f).negative_terms().is_empty(), "foulkes({n},{r})");
            total = total.try_add(&f).unwrap();
        }
        assert_eq!(total, p(&vec![1; n]));
    }
}

#[test]
fn lie_modules_decompose_regular_representation() {
    for n in 1..=10usize {
        let mut total = SymFunc::zero(n);
        for d in (1..=n).filter(|d| n % d == 0) {
            let term = lie(d).pleth_p((n / d) as u32).scale(&int(d as i64));
            total = total.try_add(&term).unwrap();
        }
        assert_eq!(total, p(&vec![1; n]));
    }
}

#[test]
fn f_tilde_at_plus_minus_one() {
    // Σ_{d|n} μ(d)(-1)^{n/d} vanishes for n ≥ 3; Σ_{d|n} φ(d) = n.
    for n in 1..=30usize {
        let mu = f_tilde_eval(n, &PsiSpec::Mu, -1);
        let expected = match n {
            1 => int(-1),
            2 => int(1),
            _ => int(0),
        };
        assert_eq!(mu, expected, "mu at n={n}");
        assert_eq!(f_tilde_eval(n, &PsiSpec::Mu, 1), int((n == 1) as i64));
        assert_eq!(f_tilde_eval(n, &PsiSpec::Phi, 1), int(1));
    }
}

#[test]
fn dimension_identity() {
    let psis = [PsiSpec::Mu, PsiSpec::Phi, PsiSpec::Foulkes(2)];
    for psi in &psis {
        for n in 1..=8usize {
            let f = f_from_psi(n, psi);
            let ones = Partition::new(vec![1; n]);
            let fact = |k: usize| (1..=k as i64).product::<i64>();
            let lhs: Coefficient = f.coefficient(&ones) * int(fact(n));
            assert_eq!(lhs, int(fact(n - 1) * psi.eval(1)), "{psi} at n={n}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn omega_is_an_involution(f in (1usize..=8).prop_flat_map(|n| symfunc(n, 6))) {
        prop_assert_eq!(f.omega().omega(), f);
    }

    #[test]
    fn omega_conjugates_schur_indices(f in (1usize..=7).prop_flat_map(|n| symfunc(n, 5))) {
        prop_assert_eq!(to_schur(&f.omega()), to_schur(&f).conjugate());
    }

    #[test]
    fn schur_round_trip(
        lambda in (1usize..=8).prop_flat_map(|n| {
            let count = partitions_cached(n).len();
            (0..count).prop_map(move |i| partitions_cached(n)[i].clone())
        })
    ) {
        let s = to_schur(&s_of(&lambda));
        let terms: Vec<_> = s.terms().collect();
        prop_assert_eq!(terms.len(), 1);
        prop_assert_eq!(terms[0].0, &lambda);
        prop_assert_eq!(terms[0].1, &int(1));
        prop_assert_eq!(s.to_power_sum(), s_of(&lambda));
    }

    #[test]
    fn power_sum_schur_round_trip(f in (1usize..=7).prop_flat_map(|n| symfunc(n, 5))) {
        prop_assert_eq!(to_schur(&f).to_power_sum(), f);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn plethysm_is_associative(
        which in 0usize..3,
        g in sparse_series(8, false),
        k in sparse_series(8, false),
    ) {
        let f = match which {
            0 => h_of(2),
            1 => e_of(2),
            _ => p(&[3]),
        };
        let left = pleth_series(&pleth(&f, &g).unwrap(), &k).unwrap();
        let right = pleth(&f, &pleth_series(&g, &k).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn h_and_e_pm_are_reciprocal(f in sparse_series(10, false)) {
        let product = pleth_h(&f).unwrap().mul(&pleth_e_pm(&f).unwrap());
        prop_assert_eq!(product, Series::one(10));
    }

    #[test]
    fn pleth_inverse_is_an_involution(f in sparse_series(8, true)) {
        let inv = pleth_inverse(&f).unwrap();
        prop_assert_eq!(pleth_inverse(&inv).unwrap(), f.clone());
        let id = Series::from_symfunc(&p(&[1]), 8);
        prop_assert_eq!(pleth_series(&f, &inv).unwrap(), id.clone());
        prop_assert_eq!(pleth_series(&inv, &f).unwrap(), id);
    }
}
