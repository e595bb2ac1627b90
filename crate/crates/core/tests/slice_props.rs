mod common;

use common::*;
use proptest::prelude::*;
use slicekit::checks::coordinate_box;
use slicekit::convolution::contracting_cocharacter;
use slicekit::rep;
use slicekit::slices::{self, SliceDatum};

#[test]
fn minuscule_slices_over_whole_orbits() {
    for g in [
        "GL2", "GL3", "GL4", "A1", "A2", "A3", "A4", "B2", "B3", "C3", "D4", "D5", "E6",
    ] {
        let d = datum(g);
        for (_, lambda) in rep::minuscule_fundamental_coweights(&d) {
            for mu in d.weyl_orbit(&lambda) {
                let s = SliceDatum::new(&d, lambda.clone(), mu.clone()).unwrap();
                let dim = slices::slice_dimension(&d, &s);
                let rep_dim = slices::repellent_dimension(&d, &s);
                assert_eq!(
                    slices::delta_mu_minus(&d, &mu).len() as i64,
                    rep_dim,
                    "{g} {mu}"
                );
                let ch = slices::minuscule_slice_character(&d, &s).unwrap();
                assert_eq!(ch.total_dimension(), dim);
                assert_eq!(ch.hbar_part(0).total_dimension(), rep_dim);
                assert_eq!(ch.hbar_part(1).total_dimension(), rep_dim);
                assert_eq!(
                    ch.attracting_dimension(&contracting_cocharacter(&d))
                        .unwrap(),
                    dim
                );
                let f = slices::fibration_decomposition(&d, &s).unwrap();
                assert!(f.is_affine_space);
                assert_eq!(f.affine_dim, dim);
            }
        }
    }
}

#[test]
fn deepest_stratum_conditions_agree_on_boxes_of_radius_three() {
    for g in [
        "GL2", "A1", "A2", "B2", "G2", "GL3", "A3", "B3", "C3", "GL4", "A4", "B4", "C4", "D4", "F4",
    ] {
        let d = datum(g);
        for mu in coordinate_box(d.rank, 3) {
            let r = slices::deepest_stratum_report(&d, &mu);
            assert!(r.agree, "{g} {mu}: {r:?}");
        }
    }
}

proptest! {
    #[test]
    fn mu_condition_below_lambda_gives_fixed_point(
        (d, lambda) in group_and_dominant(SMALL_GROUPS, 3),
        shifts in prop::collection::vec(0i64..=3, 4),
    ) {
        let mu = shifts
            .iter()
            .zip(&d.simple_coroots)
            .fold(lambda.clone(), |acc, (&k, alpha)| acc.add_scaled(-k, alpha));
        let s = SliceDatum::new(&d, lambda, mu.clone()).unwrap();
        if slices::mu_condition(&d, &mu) {
            prop_assert!(slices::has_torus_fixed_point(&d, &s));
            let f = slices::fibration_decomposition(&d, &s).unwrap();
            prop_assert_eq!(f.base_mu_plus, d.dominant_representative(&mu));
        } else {
            prop_assert!(slices::fibration_decomposition(&d, &s).is_err());
        }
    }

    #[test]
    fn slice_dimension_is_additive_through_mu_plus(
        (d, lambda) in group_and_dominant(SMALL_GROUPS, 3),
        shifts in prop::collection::vec(0i64..=2, 4),
    ) {
        let mu = shifts
            .iter()
            .zip(&d.simple_coroots)
            .fold(lambda.clone(), |acc, (&k, alpha)| acc.add_scaled(-k, alpha));
        let s = SliceDatum::new(&d, lambda.clone(), mu.clone()).unwrap();
        if let Ok(f) = slices::fibration_decomposition(&d, &s) {
            let base = SliceDatum::new(&d, lambda, f.base_mu_plus.clone()).unwrap();
            prop_assert_eq!(slices::slice_dimension(&d, &s), f.affine_dim + slices::slice_dimension(&d, &base));
        }
    }
}
