//! Exhaustive verification of the representation-theoretic statements about
//! the μ-condition over bounded boxes of coweights.
//!
//! Sweeps run on the ambient rayon pool; results are collected in input
//! order so reports do not depend on the number of workers.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rep;
use crate::root_datum::{Coweight, RootDatum};
use crate::slices;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Counterexample {
    /// `μ ≤ λ` satisfies the μ-condition but is not a weight of `V^λ`.
    WeightRep {
        lambda: Coweight,
        mu: Coweight,
        mu_plus: Coweight,
        pairings: Vec<i64>,
        multiplicity: u64,
    },
    /// The pairing condition and the no-intermediate-dominant condition
    /// disagree.
    PairingOrbit {
        mu: Coweight,
        mu_plus: Coweight,
        interval: Vec<Coweight>,
        pairings: Vec<i64>,
        cond_pairing: bool,
        cond_no_intermediate: bool,
    },
    /// The multiplicity oracle is inconsistent with itself.
    Oracle {
        lambda: Coweight,
        freudenthal_total: u64,
        weyl_dimension: u128,
        weyl_invariant: bool,
        minuscule_fast: bool,
        minuscule_slow: bool,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub suite: String,
    pub group: String,
    /// The λ bound for weight-rep sweeps, the coordinate box radius for
    /// pairing-orbit sweeps, the sample count for oracle sweeps.
    pub box_radius: i64,
    pub cases_checked: usize,
    pub counterexamples: Vec<Counterexample>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// Default `(λ bound, box radius)` by rank.
pub fn default_bounds(datum: &RootDatum) -> (i64, i64) {
    match datum.rank {
        0..=2 => (4, 3),
        3..=4 => (3, 2),
        _ => (2, 1),
    }
}

/// Dominant `Σ c_i ω_i` with `c_i ≥ 0` and `Σ c_i ≤ bound`, sorted.
pub fn dominant_cone(datum: &RootDatum, bound: i64) -> Vec<Coweight> {
    let fundamentals = datum.fundamental_coweights();
    let mut out = Vec::new();
    let mut coeffs = vec![0i64; fundamentals.len()];
    fn rec(
        i: usize,
        left: i64,
        coeffs: &mut Vec<i64>,
        fundamentals: &[Coweight],
        rank: usize,
        out: &mut Vec<Coweight>,
    ) {
        if i == coeffs.len() {
            let w = coeffs
                .iter()
                .zip(fundamentals)
                .fold(Coweight::zero(rank), |acc, (&c, f)| acc.add_scaled(c, f));
            out.push(w);
            return;
        }
        for c in 0..=left {
            coeffs[i] = c;
            rec(i + 1, left - c, coeffs, fundamentals, rank, out);
        }
        coeffs[i] = 0;
    }
    rec(
        0,
        bound.max(-1),
        &mut coeffs,
        fundamentals,
        datum.rank,
        &mut out,
    );
    out.sort();
    out
}

fn pairings(datum: &RootDatum, mu: &Coweight) -> Vec<i64> {
    datum.positive_roots.iter().map(|r| r.pair(mu)).collect()
}

/// Every `μ ≤ λ` satisfying the μ-condition, sorted.
///
/// Writing `λ - μ = Σ n_i α_i`, pairing with `2ρ∨` gives
/// `2 Σ n_i = ⟨2ρ∨, λ⟩ - ⟨2ρ∨, μ⟩ ≤ ⟨2ρ∨, λ⟩ + |Δ∨_+|`, so the search is a
/// finite simplex in the coefficients.
pub fn mu_condition_candidates(datum: &RootDatum, lambda: &Coweight) -> Vec<Coweight> {
    let budget = (datum.pairing_with_two_rho_check(lambda) + datum.positive_roots.len() as i64) / 2;
    let mut out = Vec::new();
    fn rec(datum: &RootDatum, i: usize, left: i64, cur: Coweight, out: &mut Vec<Coweight>) {
        if i == datum.ss_rank {
            if slices::mu_condition(datum, &cur) {
                out.push(cur);
            }
            return;
        }
        for k in 0..=left {
            rec(
                datum,
                i + 1,
                left - k,
                cur.add_scaled(-k, &datum.simple_coroots[i]),
                out,
            );
        }
    }
    if budget >= 0 {
        rec(datum, 0, budget, lambda.clone(), &mut out);
    }
    out.sort();
    out
}

/// For dominant `λ`, `μ ≤ λ` with the μ-condition: is `μ` a weight of `V^λ`?
pub fn check_weight_rep(datum: &RootDatum, lambda: &Coweight, mu: &Coweight) -> Result<bool> {
    if !datum.is_dominant(lambda) {
        return Err(Error::NotDominant(lambda.clone()));
    }
    if !datum.dominance_leq(mu, lambda) {
        return Err(Error::NotBelow {
            mu: mu.clone(),
            lambda: lambda.clone(),
        });
    }
    slices::require_mu_condition(datum, mu)?;
    Ok(rep::weight_multiplicity(datum, lambda, mu)? > 0)
}

pub fn sweep_weight_rep(datum: &RootDatum, lambda_bound: i64) -> SweepReport {
    let per_lambda: Vec<(usize, Vec<Counterexample>)> = dominant_cone(datum, lambda_bound)
        .par_iter()
        .map(|lambda| {
            let table =
                rep::dominant_multiplicities(datum, lambda).expect("cone elements are dominant");
            let candidates = mu_condition_candidates(datum, lambda);
            let bad = candidates
                .iter()
                .filter_map(|mu| {
                    let mu_plus = datum.dominant_representative(mu);
                    let m = table.get(&mu_plus).copied().unwrap_or(0);
                    (m == 0).then(|| Counterexample::WeightRep {
                        lambda: lambda.clone(),
                        mu: mu.clone(),
                        mu_plus,
                        pairings: pairings(datum, mu),
                        multiplicity: m,
                    })
                })
                .collect();
            (candidates.len(), bad)
        })
        .collect();
    SweepReport {
        suite: "weight-rep".into(),
        group: datum.label.clone(),
        box_radius: lambda_bound,
        cases_checked: per_lambda.iter().map(|(n, _)| n).sum(),
        counterexamples: per_lambda.into_iter().flat_map(|(_, c)| c).collect(),
    }
}

/// If `μ⁺` is the only dominant coweight in `[μ, μ⁺]`, then `μ` satisfies
/// the μ-condition.
pub fn check_no_dom_est(datum: &RootDatum, mu: &Coweight) -> bool {
    let mu_plus = datum.dominant_representative(mu);
    let no_intermediate = slices::dominant_interval(datum, mu, &mu_plus) == [mu_plus];
    !no_intermediate || slices::mu_condition(datum, mu)
}

/// All integer vectors in `[-r, r]^rank`, lexicographically.
pub fn coordinate_box(rank: usize, r: i64) -> Vec<Coweight> {
    let mut out = vec![Vec::with_capacity(rank)];
    for _ in 0..rank {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<i64>| {
                (-r..=r).map(move |x| {
                    let mut v = prefix.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
    }
    out.into_iter().map(Coweight).collect()
}

pub fn sweep_pairing_orbit_equiv(datum: &RootDatum, box_radius: i64) -> SweepReport {
    let cases = coordinate_box(datum.rank, box_radius);
    let counterexamples: Vec<Counterexample> = cases
        .par_iter()
        .filter_map(|mu| {
            let report = slices::deepest_stratum_report(datum, mu);
            if report.agree && check_no_dom_est(datum, mu) {
                return None;
            }
            let mu_plus = datum.dominant_representative(mu);
            Some(Counterexample::PairingOrbit {
                interval: slices::dominant_interval(datum, mu, &mu_plus),
                mu: mu.clone(),
                mu_plus,
                pairings: pairings(datum, mu),
                cond_pairing: report.cond_pairing,
                cond_no_intermediate: report.cond_no_intermediate,
            })
        })
        .collect();
    SweepReport {
        suite: "pairing-orbit".into(),
        group: datum.label.clone(),
        box_radius,
        cases_checked: cases.len(),
        counterexamples,
    }
}

/// Freudenthal total against the Weyl dimension formula, Weyl invariance of
/// multiplicities, and agreement of the two minuscule tests.
pub fn check_oracle(datum: &RootDatum, lambda: &Coweight) -> Result<Option<Counterexample>> {
    let diagram = rep::weights_of(datum, lambda)?;
    let total = diagram.dimension();
    let dim = rep::weyl_dimension(datum, lambda)?;
    let weyl_invariant = diagram.mults.iter().all(|(mu, &m)| {
        (0..datum.ss_rank).all(|i| diagram.multiplicity(&datum.reflect(i, mu)) == m)
    });
    let fast = rep::is_minuscule(datum, lambda)?;
    let slow = rep::is_minuscule_via_weights(datum, lambda)?;
    let ok = u128::from(total) == dim && weyl_invariant && fast == slow;
    Ok((!ok).then(|| Counterexample::Oracle {
        lambda: lambda.clone(),
        freudenthal_total: total,
        weyl_dimension: dim,
        weyl_invariant,
        minuscule_fast: fast,
        minuscule_slow: slow,
    }))
}

/// `samples` dominant coweights drawn uniformly from the cone of
/// fundamental-coefficient sum `≤ bound`.
pub fn sample_dominant(datum: &RootDatum, bound: i64, samples: usize, seed: u64) -> Vec<Coweight> {
    let cone = dominant_cone(datum, bound);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..samples)
        .map(|_| cone.choose(&mut rng).expect("cone contains 0").clone())
        .collect()
}

pub fn sweep_oracle(datum: &RootDatum, lambdas: &[Coweight]) -> SweepReport {
    let counterexamples = lambdas
        .par_iter()
        .filter_map(|l| check_oracle(datum, l).expect("sampled coweights are dominant"))
        .collect();
    SweepReport {
        suite: "oracle".into(),
        group: datum.label.clone(),
        box_radius: lambdas.len() as i64,
        cases_checked: lambdas.len(),
        counterexamples,
    }
}
