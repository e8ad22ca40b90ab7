use proptest::prelude::*;
use rpd_core::analysis::polygon_eigenvalues;
use rpd_core::geometry::{random_config, regular_polygon};
use rpd_core::matrices::{inertia_of, schoenberg_matrix_with, sym_eigenvalues};
use rpd_core::measures::{transition_density, RadialMeasure};
use rpd_core::{parse_config, QuadratureSpec, RadialKernel};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    // Ω_n is positive definite on R^n, so no negative eigenvalue may appear.
    #[test]
    fn omega_matrices_are_psd(n in 1u32..5, count in 2usize..30, seed in any::<u64>(), side in 0.5f64..20.0) {
        let spec = QuadratureSpec::default();
        let k = RadialKernel::omega(n).unwrap();
        let x = random_config(n as usize, count, seed, side).unwrap();
        let a = schoenberg_matrix_with(&k, &x, &spec).unwrap();
        prop_assert_eq!(inertia_of(&a, 1e-9 * count as f64).unwrap().n_neg, 0);
    }

    #[test]
    fn transition_lands_on_lower_family(m in 1u32..4, k1 in 1u32..3, k2 in 1u32..3, x in 0.2f64..3.0) {
        let spec = QuadratureSpec::default();
        let nu = RadialMeasure::gauss_family(m + k1 + k2).unwrap();
        let direct = transition_density(m, k1 + k2, &nu, x, &spec).unwrap();
        let target = RadialMeasure::gauss_family(m).unwrap().density(x).unwrap();
        prop_assert!((direct - target).abs() < 1e-9 * target.max(1.0));
    }

    #[test]
    fn polygon_spectrum_matches_dense(m in 3usize..40, r in 0.2f64..12.0) {
        let spec = QuadratureSpec::default();
        let k = RadialKernel::omega(2).unwrap();
        let mut fast = polygon_eigenvalues(&k, m, r).unwrap();
        fast.sort_by(f64::total_cmp);
        let dense = sym_eigenvalues(&schoenberg_matrix_with(&k, &regular_polygon(m, r).unwrap(), &spec).unwrap()).unwrap();
        for (a, b) in fast.iter().zip(&dense) {
            prop_assert!((a - b).abs() < 1e-10 * m as f64);
        }
    }
}

#[test]
fn config_labels_round_trip() {
    for text in ["simplex-center:3@0.25", "polygon:12@2.5", "random:3,9,4,2", "shifted(polygon:5@1; 0,7; axis=1)"] {
        let x = parse_config(text).unwrap();
        let again = parse_config(&x.label().to_string()).unwrap();
        assert_eq!(x.points(), again.points());
    }
}
