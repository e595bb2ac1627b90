mod common;

use common::*;
use proptest::prelude::*;
use slicekit::checks::coordinate_box;
use slicekit::rep;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn freudenthal_total_is_weyl_dimension((d, lambda) in group_and_dominant(SMALL_GROUPS, 3)) {
        let diagram = rep::weights_of(&d, &lambda).unwrap();
        prop_assert_eq!(u128::from(diagram.dimension()), rep::weyl_dimension(&d, &lambda).unwrap());
    }

    #[test]
    fn multiplicities_are_weyl_invariant((d, lambda) in group_and_dominant(SMALL_GROUPS, 3)) {
        let diagram = rep::weights_of(&d, &lambda).unwrap();
        for (mu, &m) in &diagram.mults {
            for i in 0..d.ss_rank {
                prop_assert_eq!(diagram.multiplicity(&d.reflect(i, mu)), m);
            }
        }
    }

    #[test]
    fn minuscule_weights_form_one_orbit((d, lambda) in group_and_dominant(SMALL_GROUPS, 2)) {
        if rep::is_minuscule(&d, &lambda).unwrap() {
            let diagram = rep::weights_of(&d, &lambda).unwrap();
            prop_assert!(diagram.mults.values().all(|&m| m == 1));
            let support: Vec<_> = diagram.weights().cloned().collect();
            prop_assert_eq!(support, d.weyl_orbit(&lambda));
        }
    }
}

#[test]
fn minuscule_paths_agree_on_box_of_radius_three() {
    for g in ["GL2", "GL3", "A2", "B2", "G2", "A3", "C3"] {
        let d = datum(g);
        for lambda in coordinate_box(d.rank, 3) {
            if d.is_dominant(&lambda) {
                assert_eq!(
                    rep::is_minuscule(&d, &lambda).unwrap(),
                    rep::is_minuscule_via_weights(&d, &lambda).unwrap(),
                    "{g} {lambda}"
                );
            }
        }
    }
}

#[test]
fn known_multiplicities() {
    let gl3 = datum("GL3");
    assert_eq!(
        rep::weight_multiplicity(&gl3, &cw(&[1, 0, -1]), &cw(&[0, 0, 0])).unwrap(),
        2
    );
    let gl2 = datum("GL2");
    assert_eq!(
        rep::weight_multiplicity(&gl2, &cw(&[2, 0]), &cw(&[1, 1])).unwrap(),
        1
    );
    assert_eq!(
        rep::weight_multiplicity(&gl2, &cw(&[2, 0]), &cw(&[0, 1])).unwrap(),
        0
    );
}
