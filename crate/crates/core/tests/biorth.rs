mod common;

use biorth_core::biorth::{
    biorthogonal_poly, divided_difference_path, divided_difference_solve, expand_in_mixed_basis,
    generalized_divided_differences, oracle_nullspace, orthogonality_residuals, qtilde_values, relative_residuals,
    triangular_system, zero_location_check, Normalization, Path, Reading, FLOAT_RESIDUAL_TOL,
};
use biorth_core::family::{MqfFamily, Support};
use biorth_core::{Error, Rational, Scalar};
use common::{distinct_rationals, q, valid_family};
use proptest::prelude::*;

#[test]
fn jacobi_shifted_legendre() {
    let fam = MqfFamily::<Rational>::jacobi();
    let mu = [q(1, 1), q(2, 1)];
    let res = biorthogonal_poly(&fam, &mu, Path::DividedDifference, Normalization::LeadingOne).unwrap();
    assert_ne!(res.path, Path::DividedDifference);
    assert_eq!(res.f, vec![q(1, 6), q(-1, 1), q(1, 1)]);
    assert!(zero_location_check(&res.p, Support::UnitInterval).unwrap().pass);
    assert_eq!(
        biorthogonal_poly(&fam, &[q(1, 1), q(1, 1)], Path::MixedBasis, Normalization::Expansion),
        Err(Error::DegenerateMu)
    );
}

#[test]
fn empty_parameter_list() {
    let res = biorthogonal_poly(&valid_family(), &[], Path::DividedDifference, Normalization::Expansion).unwrap();
    assert_eq!(res.f, vec![q(1, 1)]);
}

#[test]
fn literal_moment_reading_departs_from_forward_substitution() {
    let fam = valid_family();
    let mu = [q(1, 1), q(2, 1), q(7, 3)];
    let qt = qtilde_values(&fam, &mu).unwrap();
    let forward = divided_difference_solve(&fam, &qt).unwrap();
    assert_eq!(generalized_divided_differences(&fam, &qt, Reading::Ratio).unwrap(), forward);
    assert_ne!(generalized_divided_differences(&fam, &qt, Reading::Moment).unwrap(), forward);
}

#[test]
fn float_divided_differences_lose_accuracy_with_degree() {
    // The triangular rows m_k(lambda_l) are nearly parallel; rounding the
    // entries alone costs about a factor 30 per degree.
    let fam = valid_family().to_mode::<f64>();
    let mu = [0.25, 0.8, 2.0, 3.0, 8.0, 19.0, 4.5, 11.0];
    let raw = divided_difference_path(&fam, &mu).unwrap();
    let worst = relative_residuals(&fam, &mu, &raw.f).unwrap().into_iter().fold(0.0, f64::max);
    assert!(worst > FLOAT_RESIDUAL_TOL, "{worst}");
    let res = biorthogonal_poly(&fam, &mu, Path::DividedDifference, Normalization::Expansion).unwrap();
    assert_eq!(res.path, Path::MixedBasis);
    assert!(matches!(res.fallbacks[0], (Path::DividedDifference, Error::LostAccuracy(_))));
    assert!(res.warnings[0].contains("fell back to mixed-basis"));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn three_paths_agree(mu in distinct_rationals(1..=8, 1, 30)) {
        let fam = valid_family();
        let dd = divided_difference_path(&fam, &mu).unwrap();
        let mixed = expand_in_mixed_basis(&fam, &mu).unwrap();
        let oracle = oracle_nullspace(&fam, &mu, Normalization::Expansion).unwrap();
        prop_assert_eq!(&dd.f, &mixed.f);
        prop_assert_eq!(&dd.f, &oracle.f);
    }

    #[test]
    fn orthogonality_exact_and_float(mu in distinct_rationals(1..=8, 1, 30)) {
        let fam = valid_family();
        for path in [Path::DividedDifference, Path::MixedBasis, Path::Oracle] {
            let res = biorthogonal_poly(&fam, &mu, path, Normalization::Expansion).unwrap();
            prop_assert_eq!(res.path, path);
            for r in orthogonality_residuals(&fam, &mu, &res.f).unwrap() {
                prop_assert_eq!(r, q(0, 1));
            }
        }
        let ffam = fam.to_mode::<f64>();
        let fmu: Vec<f64> = mu.iter().map(Scalar::to_f64).collect();
        for path in [Path::DividedDifference, Path::MixedBasis, Path::Oracle] {
            // requested path, possibly after an accuracy fallback
            let res = biorthogonal_poly(&ffam, &fmu, path, Normalization::Expansion).unwrap();
            for r in relative_residuals(&ffam, &fmu, &res.f).unwrap() {
                prop_assert!(r <= FLOAT_RESIDUAL_TOL, "{:?}: {}", path, r);
            }
        }
        if mu.len() <= 5 {
            let raw = divided_difference_path(&ffam, &fmu).unwrap();
            for r in relative_residuals(&ffam, &fmu, &raw.f).unwrap() {
                prop_assert!(r <= FLOAT_RESIDUAL_TOL, "raw divided-difference: {}", r);
            }
        }
    }

    #[test]
    fn jacobi_orthogonality_on_fallback(mu in distinct_rationals(1..=8, 1, 30)) {
        let fam = MqfFamily::<Rational>::jacobi();
        let res = biorthogonal_poly(&fam, &mu, Path::DividedDifference, Normalization::Expansion).unwrap();
        prop_assert_ne!(res.path, Path::DividedDifference);
        for r in orthogonality_residuals(&fam, &mu, &res.f).unwrap() {
            prop_assert_eq!(r, q(0, 1));
        }
    }

    #[test]
    fn permutation_invariance(mu in distinct_rationals(1..=7, 1, 30), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut shuffled = mu.clone();
        shuffled.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        for fam in [valid_family(), MqfFamily::jacobi()] {
            let a = biorthogonal_poly(&fam, &mu, Path::DividedDifference, Normalization::Expansion).unwrap();
            let b = biorthogonal_poly(&fam, &shuffled, Path::DividedDifference, Normalization::Expansion).unwrap();
            prop_assert_eq!(a.f, b.f);
        }
    }

    #[test]
    fn triangular_system_has_zero_upper_part(n in 1usize..=8) {
        let rows = triangular_system(&valid_family(), n).unwrap();
        for (l, row) in rows.iter().enumerate() {
            for v in &row[l + 1..] {
                prop_assert_eq!(v.clone(), q(0, 1));
            }
            prop_assert_ne!(row[l].clone(), q(0, 1));
        }
    }

    #[test]
    fn solve_is_linear_in_qtilde(mu in distinct_rationals(1..=8, 1, 30), c in common::rational(-9, 9, 5)) {
        let fam = valid_family();
        let qt = qtilde_values(&fam, &mu).unwrap();
        let scaled: Vec<Rational> = qt.iter().map(|v| v.clone() * c.clone()).collect();
        let f = divided_difference_solve(&fam, &qt).unwrap();
        let g = divided_difference_solve(&fam, &scaled).unwrap();
        for (a, b) in f.iter().zip(&g) {
            prop_assert_eq!(a.clone() * c.clone(), b.clone());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn jacobi_zeros_are_real_simple_inside(mu in proptest::collection::btree_set((1i64..=20, 1i64..=2), 1..=8)) {
        // mu = p / d with p / d in (1/2, 10]
        let mu: std::collections::BTreeSet<Rational> = mu.into_iter().map(|(p, d)| q(p, d)).collect();
        let mu: Vec<Rational> = mu.into_iter().filter(|m| *m > q(1, 2)).collect();
        prop_assume!(!mu.is_empty());
        let fam = MqfFamily::<Rational>::jacobi();
        let res = biorthogonal_poly(&fam, &mu, Path::MixedBasis, Normalization::LeadingOne).unwrap();
        let report = zero_location_check(&res.p, Support::UnitInterval).unwrap();
        prop_assert!(report.pass, "{:?} {:?}", mu, report);
    }
}
