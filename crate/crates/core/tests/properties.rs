use proptest::prelude::*;

use coring_core::coend::{coend_coring, matches_comatrix};
use coring_core::coring::{comatrix_coring, comatrix_delta_with, hat_anti_iso};
use coring_core::fixtures::{random_bimodule, Gf2, Gf3};
use coring_core::linalg::{inverse, kernel, rank};
use coring_core::mat::{kron_vec, unit_vec, vec_sub, Mat};
use coring_core::moduli::{dual_basis, dual_basis_with, dual_module, Bimodule};
use coring_core::tensor::tensor_over;
use coring_core::{Fp, Rational, Scalar};

type Gf7 = Fp<7>;

fn bilinear_dim<F: Scalar>(m: &Bimodule<F>, n: &Bimodule<F>) -> usize {
    let (dm, dn) = (m.dim(), n.dim());
    let mut rows = Vec::new();
    for b in 0..m.right.dim() {
        for i in 0..dm {
            for j in 0..dn {
                let lhs = kron_vec(&m.right_action[b].col(i), &unit_vec(dn, j));
                let rhs = kron_vec(&unit_vec(dm, i), &n.left_action[b].col(j));
                rows.push(vec_sub(&lhs, &rhs));
            }
        }
    }
    dm * dn - rank(&Mat::from_rows(dm * dn, &rows).unwrap())
}

fn gf7_matrix(rows: usize, cols: usize) -> impl Strategy<Value = Mat<Gf7>> {
    prop::collection::vec(0u64..7, rows * cols).prop_map(move |v| Mat::from_vec(rows, cols, v.into_iter().map(Gf7::new).collect()).unwrap())
}

fn rational() -> impl Strategy<Value = Rational> {
    (-50i64..50, 1i64..20).prop_map(|(n, d)| Rational::new(n, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn comatrix_axioms_hold(seed in 0u64..10_000) {
        let sigma = random_bimodule::<Gf3>(seed);
        let dual = dual_module(&sigma);
        let db = dual_basis(&sigma, &dual).unwrap();
        let cm = comatrix_coring(&sigma, &dual, &db).unwrap();
        prop_assert!(cm.coring.check().is_ok());
    }

    #[test]
    fn comultiplication_ignores_generating_set(seed in 0u64..10_000, extra in prop::collection::vec(0u64..2, 6)) {
        let sigma = random_bimodule::<Gf2>(seed);
        let dual = dual_module(&sigma);
        let cm = comatrix_coring(&sigma, &dual, &dual_basis(&sigma, &dual).unwrap()).unwrap();
        let mut gens: Vec<Vec<Gf2>> = (0..sigma.dim()).map(|i| unit_vec(sigma.dim(), i)).collect();
        gens.push(extra.iter().take(sigma.dim()).map(|&x| Gf2::new(x)).collect());
        let other = dual_basis_with(&sigma, &dual, &gens).unwrap();
        prop_assert!(cm.coring.same_comultiplication(&comatrix_delta_with(&cm, &other)).unwrap());
    }

    #[test]
    fn tensor_dimension_matches_relation_rank(seed in 0u64..10_000) {
        let sigma = random_bimodule::<Gf3>(seed);
        let dual = dual_module(&sigma);
        let t = tensor_over(&dual.module, &sigma).unwrap();
        prop_assert_eq!(t.dim(), bilinear_dim(&dual.module, &sigma));
    }

    #[test]
    fn hat_is_bijective(seed in 0u64..10_000) {
        let sigma = random_bimodule::<Gf2>(seed);
        let dual = dual_module(&sigma);
        let cm = comatrix_coring(&sigma, &dual, &dual_basis(&sigma, &dual).unwrap()).unwrap();
        let h = hat_anti_iso(&cm).unwrap();
        prop_assert!(h.is_bijective());
        prop_assert!(h.counit_to_identity(&cm));
    }

    #[test]
    fn coend_is_the_comatrix_coring(seed in 0u64..10_000) {
        let sigma = random_bimodule::<Gf3>(seed);
        let dual = dual_module(&sigma);
        let db = dual_basis(&sigma, &dual).unwrap();
        let cm = comatrix_coring(&sigma, &dual, &db).unwrap();
        let co = coend_coring(&sigma, &db).unwrap();
        prop_assert!(matches_comatrix(&co, &cm));
    }

    #[test]
    fn random_bimodules_are_bimodules(seed in 0u64..10_000) {
        let sigma = random_bimodule::<Gf7>(seed);
        prop_assert!(sigma.check().is_ok());
        prop_assert!(sigma.right.dim() <= 4 && sigma.dim() <= 6);
    }
}

proptest! {
    #[test]
    fn rank_nullity(m in gf7_matrix(4, 6)) {
        let k = kernel(&m);
        prop_assert_eq!(rank(&m) + k.rows(), 6);
        prop_assert!(m.mul(&k.transpose()).is_zero());
    }

    #[test]
    fn inverse_is_two_sided(m in gf7_matrix(4, 4)) {
        match inverse(&m) {
            Some(inv) => {
                prop_assert!(m.mul(&inv).is_identity());
                prop_assert!(inv.mul(&m).is_identity());
            }
            None => prop_assert!(rank(&m) < 4),
        }
    }

    #[test]
    fn rational_field_laws(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!((a.clone() + b.clone()) * c.clone(), a.clone() * c.clone() + b.clone() * c.clone());
        if let Some(i) = a.inv() {
            prop_assert_eq!(a.clone() * i, Rational::from_i64(1));
        } else {
            prop_assert_eq!(a.clone(), Rational::from_i64(0));
        }
        prop_assert_eq!(Rational::parse(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn prime_field_laws(a in 0u64..7, b in 1u64..7) {
        let (a, b) = (Gf7::new(a), Gf7::new(b));
        prop_assert_eq!((a / b) * b, a);
        prop_assert_eq!(Gf7::parse(&a.to_string()).unwrap(), a);
        prop_assert_eq!(a * Gf7::new(7), Gf7::new(0));
    }
}
