#![allow(dead_code)]

use proptest::prelude::*;
use slicekit::{Coweight, RootDatum};

/// Groups small enough for exhaustive Weyl group work in debug builds.
pub const SMALL_GROUPS: &[&str] = &[
    "GL2", "GL3", "GL4", "A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2",
];

pub fn datum(label: &str) -> RootDatum {
    RootDatum::parse(label).expect("valid descriptor")
}

pub fn cw(v: &[i64]) -> Coweight {
    Coweight(v.to_vec())
}

/// A group together with a coweight in `[-r, r]^rank`.
pub fn group_and_coweight(
    groups: &'static [&'static str],
    r: i64,
) -> impl Strategy<Value = (RootDatum, Coweight)> {
    prop::sample::select(groups).prop_flat_map(move |g| {
        let d = datum(g);
        let rank = d.rank;
        (
            Just(d),
            prop::collection::vec(-r..=r, rank).prop_map(Coweight),
        )
    })
}

/// A group together with a dominant coweight of fundamental-coefficient sum at most `bound`.
pub fn group_and_dominant(
    groups: &'static [&'static str],
    bound: i64,
) -> impl Strategy<Value = (RootDatum, Coweight)> {
    prop::sample::select(groups).prop_flat_map(move |g| {
        let d = datum(g);
        let cone = slicekit::checks::dominant_cone(&d, bound);
        (Just(d), prop::sample::select(cone))
    })
}

/// One convolution datum of the Poincare grid.
#[derive(Debug, Clone)]
pub struct GridCase {
    pub group: &'static str,
    pub lambdas: Vec<Coweight>,
    pub mu: Coweight,
}

/// `GL_2` with `λ̲ = (ω_1)^N`, `N ≤ 6`, and `GL_3` with `λ_i ∈ {ω_1, ω_2}`,
/// `N ≤ 4`; `μ` runs over the weights of `V^λ` satisfying the μ-condition.
pub fn convolution_grid() -> Vec<GridCase> {
    let mut out = Vec::new();
    let gl2 = datum("GL2");
    for n in 1..=6 {
        push_cases(&mut out, "GL2", &gl2, vec![cw(&[1, 0]); n]);
    }
    let gl3 = datum("GL3");
    let w = [cw(&[1, 0, 0]), cw(&[1, 1, 0])];
    for n in 1..=4u32 {
        for mask in 0..(1usize << n) {
            let lambdas = (0..n as usize)
                .map(|i| w[(mask >> i) & 1].clone())
                .collect();
            push_cases(&mut out, "GL3", &gl3, lambdas);
        }
    }
    out
}

fn push_cases(out: &mut Vec<GridCase>, group: &'static str, d: &RootDatum, lambdas: Vec<Coweight>) {
    let total = lambdas
        .iter()
        .fold(Coweight::zero(d.rank), |acc, l| &acc + l);
    let diagram = slicekit::rep::weights_of(d, &total).expect("dominant");
    for mu in diagram.weights() {
        if slicekit::slices::mu_condition(d, mu) {
            out.push(GridCase {
                group,
                lambdas: lambdas.clone(),
                mu: mu.clone(),
            });
        }
    }
}
