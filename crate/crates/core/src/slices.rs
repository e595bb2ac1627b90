//! Invariants of a single generalized slice `W̄^λ_μ`.

use serde::Serialize;

use crate::characters::EquivariantCharacter;
use crate::error::{Error, Result};
use crate::rep;
use crate::root_datum::{Coweight, RootChar, RootDatum};

/// A pair `(λ, μ)` with `λ` dominant and `μ ≤ λ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SliceDatum {
    pub lambda: Coweight,
    pub mu: Coweight,
}

impl SliceDatum {
    pub fn new(datum: &RootDatum, lambda: Coweight, mu: Coweight) -> Result<Self> {
        if !datum.is_dominant(&lambda) {
            return Err(Error::NotDominant(lambda));
        }
        if !datum.dominance_leq(&mu, &lambda) {
            return Err(Error::NotBelow { mu, lambda });
        }
        Ok(SliceDatum { lambda, mu })
    }
}

/// `W̄^λ_μ ≅ A^{affine_dim} × W̄^λ_{μ⁺}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FibrationDecomposition {
    pub base_lambda: Coweight,
    pub base_mu_plus: Coweight,
    pub affine_dim: i64,
    /// Set when `μ ∈ Wλ`: the base is a point and the slice is affine space.
    pub is_affine_space: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DeepestStratumReport {
    pub cond_pairing: bool,
    pub cond_no_intermediate: bool,
    pub agree: bool,
}

/// `⟨2ρ∨, λ - μ⟩`
pub fn slice_dimension(datum: &RootDatum, s: &SliceDatum) -> i64 {
    datum.pairing_with_two_rho_check(&(&s.lambda - &s.mu))
}

/// The torus-fixed locus is a single point iff `μ` is a weight of `V^λ`.
pub fn has_torus_fixed_point(datum: &RootDatum, s: &SliceDatum) -> bool {
    rep::weight_multiplicity(datum, &s.lambda, &s.mu).expect("λ is dominant") > 0
}

/// The first positive root with `⟨α∨, μ⟩ ≤ -2`, if any.
pub fn mu_condition_violation(datum: &RootDatum, mu: &Coweight) -> Option<(RootChar, i64)> {
    datum
        .positive_roots
        .iter()
        .map(|r| (r, r.pair(mu)))
        .find(|(_, p)| *p < -1)
        .map(|(r, p)| (r.clone(), p))
}

/// `⟨α∨, μ⟩ ≥ -1` for every positive root.
pub fn mu_condition(datum: &RootDatum, mu: &Coweight) -> bool {
    mu_condition_violation(datum, mu).is_none()
}

pub(crate) fn require_mu_condition(datum: &RootDatum, mu: &Coweight) -> Result<()> {
    match mu_condition_violation(datum, mu) {
        None => Ok(()),
        Some((root, pairing)) => Err(Error::MuConditionFailed {
            mu: mu.clone(),
            root,
            pairing,
        }),
    }
}

pub fn fibration_decomposition(
    datum: &RootDatum,
    s: &SliceDatum,
) -> Result<FibrationDecomposition> {
    require_mu_condition(datum, &s.mu)?;
    let mu_plus = datum.dominant_representative(&s.mu);
    let affine_dim = datum.pairing_with_two_rho_check(&(&mu_plus - &s.mu));
    Ok(FibrationDecomposition {
        is_affine_space: mu_plus == s.lambda,
        base_lambda: s.lambda.clone(),
        base_mu_plus: mu_plus,
        affine_dim,
    })
}

/// Negative roots `α∨` with `⟨α∨, μ⟩ > 0`, sorted.
pub fn delta_mu_minus(datum: &RootDatum, mu: &Coweight) -> Vec<RootChar> {
    let mut out: Vec<RootChar> = datum
        .positive_roots
        .iter()
        .map(|r| -r)
        .filter(|r| r.pair(mu) > 0)
        .collect();
    out.sort();
    out
}

/// `⟨ρ∨, λ - μ⟩`
pub fn repellent_dimension(datum: &RootDatum, s: &SliceDatum) -> i64 {
    datum.pairing_with_rho_check(&(&s.lambda - &s.mu))
}

pub(crate) fn require_minuscule_orbit(
    datum: &RootDatum,
    lambda: &Coweight,
    mu: &Coweight,
) -> Result<()> {
    if !rep::is_minuscule(datum, lambda)? {
        return Err(Error::NotMinuscule(lambda.clone()));
    }
    if datum.dominant_representative(mu) != *lambda {
        return Err(Error::MuNotInOrbit {
            mu: mu.clone(),
            lambda: lambda.clone(),
        });
    }
    Ok(())
}

/// `Σ_{α∨ ∈ Δ∨_{μ,-}} (e^{α∨} + ħ e^{-α∨})` for minuscule `λ` and `μ ∈ Wλ`.
pub fn minuscule_slice_character(
    datum: &RootDatum,
    s: &SliceDatum,
) -> Result<EquivariantCharacter> {
    require_minuscule_orbit(datum, &s.lambda, &s.mu)?;
    let mut ch = EquivariantCharacter::zero();
    for alpha in delta_mu_minus(datum, &s.mu) {
        ch.add_term(1, -&alpha, 1);
        ch.add_term(0, alpha, 1);
    }
    Ok(ch)
}

/// Dominant `λ'` with `μ ≤ λ' ≤ λ`, sorted. Empty if `μ ≰ λ`.
pub fn dominant_interval(datum: &RootDatum, mu: &Coweight, lambda: &Coweight) -> Vec<Coweight> {
    if !datum.is_dominant(lambda) {
        // The search below starts at a dominant top; fall back to scanning.
        return dominant_interval_scan(datum, mu, lambda);
    }
    if !datum.dominance_leq(mu, lambda) {
        return Vec::new();
    }
    rep::dominant_between(datum, lambda, Some(mu))
}

fn dominant_interval_scan(datum: &RootDatum, mu: &Coweight, lambda: &Coweight) -> Vec<Coweight> {
    let Some(bounds) = datum.coroot_coefficients(mu, lambda) else {
        return Vec::new();
    };
    if bounds.iter().any(|&b| b < 0) {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut n = vec![0i64; bounds.len()];
    'outer: loop {
        let candidate = n
            .iter()
            .zip(&datum.simple_coroots)
            .fold(lambda.clone(), |acc, (&k, a)| acc.add_scaled(-k, a));
        if datum.is_dominant(&candidate) {
            out.push(candidate);
        }
        for i in 0..n.len() {
            if n[i] < bounds[i] {
                n[i] += 1;
                continue 'outer;
            }
            n[i] = 0;
        }
        break;
    }
    out.sort();
    out
}

pub fn deepest_stratum_report(datum: &RootDatum, mu: &Coweight) -> DeepestStratumReport {
    let cond_pairing = mu_condition(datum, mu);
    let mu_plus = datum.dominant_representative(mu);
    let cond_no_intermediate = dominant_interval(datum, mu, &mu_plus) == [mu_plus];
    DeepestStratumReport {
        cond_pairing,
        cond_no_intermediate,
        agree: cond_pairing == cond_no_intermediate,
    }
}
