mod common;

use common::*;
use slicekit::checks::{self, SweepReport};

fn in_pool<T: Send>(threads: usize, f: impl FnOnce() -> T + Send) -> T {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .unwrap()
        .install(f)
}

#[test]
fn documented_sweeps_have_no_counterexamples() {
    for (g, b) in [("GL2", 4), ("A2", 3), ("G2", 2)] {
        let r = checks::sweep_weight_rep(&datum(g), b);
        assert!(r.passed() && r.cases_checked > 0, "{r:?}");
    }
    for (g, b) in [("GL2", 3), ("A2", 2), ("B2", 2)] {
        let r = checks::sweep_pairing_orbit_equiv(&datum(g), b);
        assert!(r.passed() && r.cases_checked > 0, "{r:?}");
    }
}

#[test]
fn single_checks() {
    let gl2 = datum("GL2");
    assert!(checks::check_weight_rep(&gl2, &cw(&[2, 0]), &cw(&[1, 1])).unwrap());
    assert!(checks::check_weight_rep(&gl2, &cw(&[2, 0]), &cw(&[2, 0])).unwrap());
    assert!(checks::check_weight_rep(&datum("GL3"), &cw(&[1, 0, -1]), &cw(&[0, 0, 0])).unwrap());
    assert!(checks::check_weight_rep(&gl2, &cw(&[2, 0]), &cw(&[0, 2])).is_err());
    assert!(checks::check_no_dom_est(&gl2, &cw(&[0, 2])));
    assert!(checks::check_no_dom_est(&gl2, &cw(&[0, 1])));
    assert!(checks::check_no_dom_est(&gl2, &cw(&[3, 1])));
}

#[test]
fn pairing_orbit_case_count_is_box_volume() {
    for (g, r) in [("GL2", 3), ("B2", 2), ("A3", 1), ("G2", 3)] {
        let d = datum(g);
        let report = checks::sweep_pairing_orbit_equiv(&d, r);
        assert_eq!(
            report.cases_checked,
            ((2 * r + 1) as usize).pow(d.rank as u32)
        );
    }
}

#[test]
fn weight_rep_case_count_for_gl2() {
    // λ = a ω_1 + b ω_2 = (a + b, b); μ = λ - n α with 0 ≤ n ≤ (a + 1) / 2.
    for bound in 0..=5i64 {
        let mut expected = 0;
        for a in 0..=bound {
            for _b in 0..=(bound - a) {
                expected += (a + 1) / 2 + 1;
            }
        }
        let report = checks::sweep_weight_rep(&datum("GL2"), bound);
        assert_eq!(report.cases_checked as i64, expected, "bound {bound}");
    }
}

#[test]
fn sweeps_do_not_depend_on_worker_count() {
    let run = || -> Vec<SweepReport> {
        let mut out = Vec::new();
        for g in ["GL2", "B2", "G2", "A3"] {
            let d = datum(g);
            out.push(checks::sweep_weight_rep(&d, 2));
            out.push(checks::sweep_pairing_orbit_equiv(&d, 2));
            out.push(checks::sweep_oracle(
                &d,
                &checks::sample_dominant(&d, 3, 20, 11),
            ));
        }
        out
    };
    let one = in_pool(1, run);
    let four = in_pool(4, run);
    assert_eq!(
        serde_json::to_string(&one).unwrap(),
        serde_json::to_string(&four).unwrap()
    );
}
