//! Irreducible representations `V^λ` of the Langlands dual group.
//!
//! Weights of `V^λ` live in `Λ` and the roots of the dual group are the
//! coroots `Δ_+ ⊂ Λ`. Multiplicities come from the Freudenthal recursion,
//! run over dominant weights only and extended to full orbits by Weyl
//! symmetry; [`weyl_dimension`] is an independent check on the total.

use std::collections::BTreeMap;

use num_rational::Ratio;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{RatMatrix, Rational};
use crate::root_datum::{Coweight, RootDatum};

/// `(x, y)` for the W-invariant form, normalized so short coroots have
/// square length 2 and central directions are orthogonal to the coroots.
/// For `GL_n` this is the standard dot product.
pub fn invariant_form(datum: &RootDatum) -> Vec<Vec<Ratio<i64>>> {
    datum.form().clone()
}

pub(crate) fn form_eval(form: &RatMatrix, x: &Coweight, y: &Coweight) -> Rational {
    let mut acc = Rational::zero();
    for (i, row) in form.iter().enumerate() {
        if x.0[i] == 0 {
            continue;
        }
        let inner = row
            .iter()
            .zip(&y.0)
            .fold(Rational::zero(), |a, (&m, &yj)| a + m * yj);
        acc += inner * x.0[i];
    }
    acc
}

fn require_dominant(datum: &RootDatum, lambda: &Coweight) -> Result<()> {
    if datum.is_dominant(lambda) {
        Ok(())
    } else {
        Err(Error::NotDominant(lambda.clone()))
    }
}

/// Dominant `ν` with `floor ≤ ν ≤ λ` (no lower bound if `floor` is `None`).
///
/// Searches downward from `λ` by positive coroots, staying dominant. This
/// reaches every dominant `ν ≤ λ`: a cover in the dominance order on
/// dominant coweights always differs by a positive coroot.
pub(crate) fn dominant_between(
    datum: &RootDatum,
    lambda: &Coweight,
    floor: Option<&Coweight>,
) -> Vec<Coweight> {
    let mut seen = std::collections::BTreeSet::new();
    let mut stack = vec![lambda.clone()];
    seen.insert(lambda.clone());
    while let Some(nu) = stack.pop() {
        for beta in &datum.positive_coroots {
            let next = &nu - beta;
            if !datum.is_dominant(&next) || seen.contains(&next) {
                continue;
            }
            if floor.is_some_and(|f| !datum.dominance_leq(f, &next)) {
                continue;
            }
            seen.insert(next.clone());
            stack.push(next);
        }
    }
    seen.into_iter().collect()
}

/// Every dominant `μ ≤ λ`, with the coefficients of `λ - μ`, highest first.
fn dominant_below(datum: &RootDatum, lambda: &Coweight) -> Vec<(Coweight, Vec<i64>)> {
    let mut out: Vec<(Coweight, Vec<i64>)> = dominant_between(datum, lambda, None)
        .into_iter()
        .map(|mu| {
            let n = datum
                .coroot_coefficients(&mu, lambda)
                .expect("reached by coroot steps");
            (mu, n)
        })
        .collect();
    out.sort_by_key(|(mu, n)| (n.iter().sum::<i64>(), mu.clone()));
    out
}

/// Multiplicities of dominant weights of `V^λ`, computed with the given form.
pub(crate) fn dominant_multiplicities_with_form(
    datum: &RootDatum,
    form: &RatMatrix,
    lambda: &Coweight,
) -> BTreeMap<Coweight, u64> {
    let coroot_coeffs: Vec<Vec<i64>> = datum
        .positive_coroots
        .iter()
        .map(|a| {
            datum
                .coroot_coefficients(&Coweight::zero(datum.rank), a)
                .expect("coroots lie in the coroot lattice")
        })
        .collect();
    let lambda_shift = lambda.add_scaled(1, &datum.two_rho);
    let mut table: BTreeMap<Coweight, u64> = BTreeMap::new();
    for (mu, depth) in dominant_below(datum, lambda) {
        if &mu == lambda {
            table.insert(mu, 1);
            continue;
        }
        let mut sum = Rational::zero();
        for (alpha, coeffs) in datum.positive_coroots.iter().zip(&coroot_coeffs) {
            let alpha_mu = form_eval(form, &mu, alpha);
            let alpha_alpha = form_eval(form, alpha, alpha);
            let mut j = 1i64;
            // μ + jα ≤ λ  iff  depth - j * coeffs ≥ 0
            while depth.iter().zip(coeffs).all(|(&d, &c)| d - j * c >= 0) {
                let nu = mu.add_scaled(j, alpha);
                let m = table
                    .get(&datum.dominant_representative(&nu))
                    .copied()
                    .unwrap_or(0);
                if m > 0 {
                    sum += (alpha_mu + alpha_alpha * j) * (m as i64);
                }
                j += 1;
            }
        }
        let diff = lambda - &mu;
        let denom = form_eval(form, &diff, &lambda_shift.add_scaled(1, &mu));
        assert!(
            denom > Rational::zero(),
            "Freudenthal denominator must be positive"
        );
        let m = sum * 2 / denom;
        assert!(
            m.is_integer() && m >= Rational::zero(),
            "non-integral multiplicity {m}"
        );
        table.insert(mu, m.to_integer() as u64);
    }
    table.retain(|_, m| *m > 0);
    table
}

/// Multiplicities of the dominant weights of `V^λ`.
pub fn dominant_multiplicities(
    datum: &RootDatum,
    lambda: &Coweight,
) -> Result<BTreeMap<Coweight, u64>> {
    require_dominant(datum, lambda)?;
    Ok(dominant_multiplicities_with_form(
        datum,
        datum.form(),
        lambda,
    ))
}

/// `dim V^λ_μ`. Zero when `μ ≰ λ`.
pub fn weight_multiplicity(datum: &RootDatum, lambda: &Coweight, mu: &Coweight) -> Result<u64> {
    require_dominant(datum, lambda)?;
    if !datum.dominance_leq(mu, lambda) {
        return Ok(0);
    }
    let table = dominant_multiplicities_with_form(datum, datum.form(), lambda);
    Ok(table
        .get(&datum.dominant_representative(mu))
        .copied()
        .unwrap_or(0))
}

/// All weights of `V^λ` with their multiplicities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightDiagram {
    pub highest: Coweight,
    pub mults: BTreeMap<Coweight, u64>,
}

impl WeightDiagram {
    pub fn multiplicity(&self, mu: &Coweight) -> u64 {
        self.mults.get(mu).copied().unwrap_or(0)
    }

    pub fn dimension(&self) -> u64 {
        self.mults.values().sum()
    }

    /// Weights in lexicographic order.
    pub fn weights(&self) -> impl Iterator<Item = &Coweight> {
        self.mults.keys()
    }
}

pub fn weights_of(datum: &RootDatum, lambda: &Coweight) -> Result<WeightDiagram> {
    let dominant = dominant_multiplicities(datum, lambda)?;
    let mut mults = BTreeMap::new();
    for (mu, m) in dominant {
        for nu in datum.weyl_orbit(&mu) {
            mults.insert(nu, m);
        }
    }
    Ok(WeightDiagram {
        highest: lambda.clone(),
        mults,
    })
}

/// Weyl dimension formula `Π ⟨β, λ+ρ⟩/⟨β, ρ⟩` over the positive roots
/// `β ∈ Λ*` dual to the positive coroots.
pub fn weyl_dimension(datum: &RootDatum, lambda: &Coweight) -> Result<u128> {
    require_dominant(datum, lambda)?;
    let shifted = lambda.scaled(2).add_scaled(1, &datum.two_rho);
    let mut acc = Ratio::<i128>::from_integer(1);
    for beta in &datum.positive_roots {
        acc *= Ratio::new(
            beta.pair(&shifted) as i128,
            beta.pair(&datum.two_rho) as i128,
        );
    }
    assert!(acc.is_integer());
    Ok(acc.to_integer() as u128)
}

/// `⟨α∨, λ⟩ ≤ 1` for every positive root.
pub fn is_minuscule(datum: &RootDatum, lambda: &Coweight) -> Result<bool> {
    require_dominant(datum, lambda)?;
    Ok(datum.positive_roots.iter().all(|r| r.pair(lambda) <= 1))
}

/// Slow path: every weight of `V^λ` lies in `Wλ`.
pub fn is_minuscule_via_weights(datum: &RootDatum, lambda: &Coweight) -> Result<bool> {
    let diagram = weights_of(datum, lambda)?;
    let orbit = datum.weyl_orbit(lambda);
    Ok(diagram.mults.len() == orbit.len() && orbit.iter().all(|mu| diagram.mults.contains_key(mu)))
}

/// The fundamental coweights that are minuscule, with their index (1-based).
pub fn minuscule_fundamental_coweights(datum: &RootDatum) -> Vec<(usize, Coweight)> {
    datum
        .fundamental_coweights()
        .iter()
        .enumerate()
        .filter(|(_, w)| is_minuscule(datum, w).unwrap_or(false))
        .map(|(i, w)| (i + 1, w.clone()))
        .collect()
}
