//! Convolution diagrams `W̃^λ̲_μ` over generalized slices.
//!
//! Torus fixed points are tuples `(μ_1, …, μ_N)` with `μ_i` a weight of
//! `V^{λ_i}` summing to `μ`. When every `λ_i` is minuscule the diagram is
//! smooth and the tangent character at each fixed point is explicit; the
//! Poincare polynomial of compactly supported cohomology then follows by
//! counting attracting tangent weights for the cocharacter `(-2ρ, d)`,
//! `d ≫ 0`.

use serde::Serialize;

use crate::characters::{EquivariantCharacter, QPolynomial};
use crate::error::{Error, Result};
use crate::rep;
use crate::root_datum::{Coweight, RootChar, RootDatum};
use crate::slices::{self, SliceDatum};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConvolutionDatum {
    pub lambdas: Vec<Coweight>,
    pub mu: Coweight,
}

impl ConvolutionDatum {
    pub fn new(datum: &RootDatum, lambdas: Vec<Coweight>, mu: Coweight) -> Result<Self> {
        if lambdas.is_empty() {
            return Err(Error::EmptyConvolution);
        }
        if let Some(bad) = lambdas.iter().find(|l| !datum.is_dominant(l)) {
            return Err(Error::NotDominant(bad.clone()));
        }
        let c = ConvolutionDatum { lambdas, mu };
        let total = c.total_lambda();
        if !datum.dominance_leq(&c.mu, &total) {
            return Err(Error::NotBelow {
                mu: c.mu,
                lambda: total,
            });
        }
        Ok(c)
    }

    /// `λ = λ_1 + … + λ_N`
    pub fn total_lambda(&self) -> Coweight {
        let mut it = self.lambdas.iter();
        let first = it.next().expect("nonempty").clone();
        it.fold(first, |acc, l| &acc + l)
    }

    /// `⟨2ρ∨, λ - μ⟩`, the dimension of the diagram.
    pub fn dimension(&self, datum: &RootDatum) -> i64 {
        datum.pairing_with_two_rho_check(&(&self.total_lambda() - &self.mu))
    }

    fn require_minuscule(&self, datum: &RootDatum) -> Result<()> {
        for l in &self.lambdas {
            if !rep::is_minuscule(datum, l)? {
                return Err(Error::NotMinuscule(l.clone()));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct FixedPointTuple {
    pub mus: Vec<Coweight>,
}

impl FixedPointTuple {
    pub fn new(mus: Vec<Coweight>) -> Self {
        FixedPointTuple { mus }
    }
}

impl std::fmt::Display for FixedPointTuple {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, m) in self.mus.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, ")")
    }
}

/// All torus fixed points, in lexicographic order.
pub fn fixed_points(datum: &RootDatum, c: &ConvolutionDatum) -> Vec<FixedPointTuple> {
    let n = c.lambdas.len();
    let weights: Vec<Vec<Coweight>> = c
        .lambdas
        .iter()
        .map(|l| {
            rep::weights_of(datum, l)
                .expect("λ_i is dominant")
                .weights()
                .cloned()
                .collect()
        })
        .collect();
    // Bounds on what the factors i.. can still contribute.
    let mut high = vec![Coweight::zero(datum.rank); n + 1];
    let mut low = vec![Coweight::zero(datum.rank); n + 1];
    for i in (0..n).rev() {
        high[i] = &high[i + 1] + &c.lambdas[i];
        low[i] = &low[i + 1] + &datum.antidominant_representative(&c.lambdas[i]);
    }

    let mut out = Vec::new();
    let mut stack: Vec<Coweight> = Vec::with_capacity(n);
    fn descend(
        datum: &RootDatum,
        weights: &[Vec<Coweight>],
        high: &[Coweight],
        low: &[Coweight],
        remaining: &Coweight,
        stack: &mut Vec<Coweight>,
        out: &mut Vec<FixedPointTuple>,
    ) {
        let i = stack.len();
        if i == weights.len() {
            if remaining.is_zero() {
                out.push(FixedPointTuple::new(stack.clone()));
            }
            return;
        }
        for w in &weights[i] {
            let rest = remaining - w;
            if datum.dominance_leq(&rest, &high[i + 1]) && datum.dominance_leq(&low[i + 1], &rest) {
                stack.push(w.clone());
                descend(datum, weights, high, low, &rest, stack, out);
                stack.pop();
            }
        }
    }
    descend(datum, &weights, &high, &low, &c.mu, &mut stack, &mut out);
    out
}

fn check_fixed_point(datum: &RootDatum, c: &ConvolutionDatum, t: &FixedPointTuple) -> Result<()> {
    if t.mus.len() != c.lambdas.len() {
        return Err(Error::TupleNotFixedPoint(format!(
            "expected {} entries, got {}",
            c.lambdas.len(),
            t.mus.len()
        )));
    }
    for m in &t.mus {
        if m.rank() != datum.rank {
            return Err(Error::RankMismatch {
                expected: datum.rank,
                found: m.rank(),
            });
        }
    }
    let sum = t
        .mus
        .iter()
        .fold(Coweight::zero(datum.rank), |acc, m| &acc + m);
    if sum != c.mu {
        return Err(Error::TupleNotFixedPoint(format!(
            "{t} sums to {sum}, not {}",
            c.mu
        )));
    }
    for (l, m) in c.lambdas.iter().zip(&t.mus) {
        if rep::weight_multiplicity(datum, l, m)? == 0 {
            return Err(Error::TupleNotFixedPoint(format!(
                "{m} is not a weight of V^{l}"
            )));
        }
    }
    Ok(())
}

/// Summands `(α∨, ⟨α∨, μ_1 + … + μ_{i-1}⟩)` indexing the tangent space at a
/// fixed point: one per `i` and per `α∨ ∈ Δ∨_{μ_i,-}`.
fn tangent_index(datum: &RootDatum, t: &FixedPointTuple) -> Vec<(RootChar, i64)> {
    let mut partial = Coweight::zero(datum.rank);
    let mut out = Vec::new();
    for m in &t.mus {
        for alpha in slices::delta_mu_minus(datum, m) {
            let p = alpha.pair(&partial);
            out.push((alpha, p));
        }
        partial = &partial + m;
    }
    out
}

/// `Σ_i Σ_{α∨ ∈ Δ∨_{μ_i,-}} (ħ^{-p} e^{α∨} + ħ^{1+p} e^{-α∨})` with
/// `p = ⟨α∨, μ_1 + … + μ_{i-1}⟩`.
pub fn tangent_character(
    datum: &RootDatum,
    c: &ConvolutionDatum,
    t: &FixedPointTuple,
) -> Result<EquivariantCharacter> {
    c.require_minuscule(datum)?;
    check_fixed_point(datum, c, t)?;
    let mut ch = EquivariantCharacter::zero();
    for (alpha, p) in tangent_index(datum, t) {
        ch.add_term(1 + p, -&alpha, 1);
        ch.add_term(-p, alpha, 1);
    }
    Ok(ch)
}

fn gl2_root() -> RootChar {
    RootChar(vec![1, -1])
}

fn check_subset(n: usize, k: usize, subset: &[usize]) -> Result<()> {
    if subset.len() != k {
        return Err(Error::MalformedSubset(format!(
            "expected {k} indices, got {}",
            subset.len()
        )));
    }
    if subset.iter().any(|&i| i == 0 || i > n) {
        return Err(Error::MalformedSubset(format!(
            "indices must lie in 1..={n}"
        )));
    }
    if subset.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::MalformedSubset(
            "indices must be strictly increasing".into(),
        ));
    }
    Ok(())
}

/// For `GL_2`, `λ̲ = (ω_1)^N`: the fixed point with `μ_i = (0,1)` for `i` in
/// the subset and `(1,0)` otherwise.
pub fn gl2_subset_tuple(n: usize, subset: &[usize]) -> Result<FixedPointTuple> {
    check_subset(n, subset.len(), subset)?;
    Ok(FixedPointTuple::new(
        (1..=n)
            .map(|i| {
                if subset.contains(&i) {
                    Coweight(vec![0, 1])
                } else {
                    Coweight(vec![1, 0])
                }
            })
            .collect(),
    ))
}

/// `Σ_{l=1}^k ħ^{i_l - 2l + 1} e^{-α∨_1} + ħ^{2l - i_l} e^{α∨_1}` for the
/// subset `i_1 < … < i_k` of `{1, …, N}`.
pub fn gl2_tangent_character(n: usize, k: usize, subset: &[usize]) -> Result<EquivariantCharacter> {
    check_subset(n, k, subset)?;
    let alpha = gl2_root();
    let mut ch = EquivariantCharacter::zero();
    for (l, &i) in subset.iter().enumerate() {
        let (l, i) = (l as i64 + 1, i as i64);
        ch.add_term(i - 2 * l + 1, -&alpha, 1);
        ch.add_term(2 * l - i, alpha.clone(), 1);
    }
    Ok(ch)
}

/// The contracting cocharacter `-2ρ`.
pub fn contracting_cocharacter(datum: &RootDatum) -> Coweight {
    datum.two_rho.scaled(-1)
}

fn require_poincare_hypotheses(datum: &RootDatum, c: &ConvolutionDatum) -> Result<()> {
    c.require_minuscule(datum)?;
    slices::require_mu_condition(datum, &c.mu)
}

/// Attracting dimension at every fixed point, in fixed-point order.
pub fn cell_dimensions(
    datum: &RootDatum,
    c: &ConvolutionDatum,
) -> Result<Vec<(FixedPointTuple, i64)>> {
    require_poincare_hypotheses(datum, c)?;
    let xi = contracting_cocharacter(datum);
    fixed_points(datum, c)
        .into_iter()
        .map(|t| {
            let ch = tangent_character(datum, c, &t)?;
            let a = ch.attracting_dimension(&xi)?;
            Ok((t, a))
        })
        .collect()
}

/// `Σ_{fixed points} q^{2 · attracting dimension}`.
pub fn poincare_polynomial(datum: &RootDatum, c: &ConvolutionDatum) -> Result<QPolynomial> {
    let mut p = QPolynomial::zero();
    for (_, a) in cell_dimensions(datum, c)? {
        p.add_monomial(2 * a as u32, 1);
    }
    Ok(p)
}

fn closed_form_cell(datum: &RootDatum, t: &FixedPointTuple, offset: i64) -> i64 {
    let index = tangent_index(datum, t);
    let hits = index.iter().filter(|(_, p)| *p == offset).count();
    (index.len() + hits) as i64
}

/// The closed-form cell count `Σ|Δ∨_{μ_i,-}| + #{α∨ ∈ Δ∨_{μ_i,-} :
/// ⟨α∨, μ_1 + … + μ_{i-1}⟩ = offset}` summed into a polynomial.
/// `offset = -1` is the condition as usually printed; `offset = 0` agrees
/// with the direct attracting count.
pub fn poincare_closed_form(
    datum: &RootDatum,
    c: &ConvolutionDatum,
    offset: i64,
) -> Result<QPolynomial> {
    if offset != 0 && offset != -1 {
        return Err(Error::BadOffset(offset));
    }
    require_poincare_hypotheses(datum, c)?;
    let mut p = QPolynomial::zero();
    for t in fixed_points(datum, c) {
        p.add_monomial(2 * closed_form_cell(datum, &t, offset) as u32, 1);
    }
    Ok(p)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CellComparison {
    pub tuple: FixedPointTuple,
    pub direct: i64,
    pub offset0: i64,
    pub as_printed: i64,
}

/// Direct count versus both closed-form variants, per point and in total.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClosedFormReport {
    pub direct: QPolynomial,
    pub offset0: QPolynomial,
    pub as_printed: QPolynomial,
    pub offset0_matches: bool,
    pub as_printed_matches: bool,
    pub offset0_matches_per_point: bool,
    pub as_printed_matches_per_point: bool,
    pub cells: Vec<CellComparison>,
}

pub fn closed_form_report(datum: &RootDatum, c: &ConvolutionDatum) -> Result<ClosedFormReport> {
    let direct_cells = cell_dimensions(datum, c)?;
    let mut direct = QPolynomial::zero();
    let mut offset0 = QPolynomial::zero();
    let mut as_printed = QPolynomial::zero();
    let mut cells = Vec::new();
    for (t, a) in direct_cells {
        let z = closed_form_cell(datum, &t, 0);
        let m = closed_form_cell(datum, &t, -1);
        direct.add_monomial(2 * a as u32, 1);
        offset0.add_monomial(2 * z as u32, 1);
        as_printed.add_monomial(2 * m as u32, 1);
        cells.push(CellComparison {
            tuple: t,
            direct: a,
            offset0: z,
            as_printed: m,
        });
    }
    Ok(ClosedFormReport {
        offset0_matches: offset0 == direct,
        as_printed_matches: as_printed == direct,
        offset0_matches_per_point: cells.iter().all(|c| c.offset0 == c.direct),
        as_printed_matches_per_point: cells.iter().all(|c| c.as_printed == c.direct),
        direct,
        offset0,
        as_printed,
        cells,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoveringChart {
    pub tuple: FixedPointTuple,
    /// `dim W̄^{λ_i}_{μ_i}` for each factor.
    pub chart_dims: Vec<i64>,
}

impl CoveringChart {
    pub fn total(&self) -> i64 {
        self.chart_dims.iter().sum()
    }
}

/// One chart per fixed point. For minuscule `λ_i` every chart is an affine
/// space of dimension `⟨2ρ∨, λ - μ⟩`.
pub fn covering_charts(datum: &RootDatum, c: &ConvolutionDatum) -> Result<Vec<CoveringChart>> {
    slices::require_mu_condition(datum, &c.mu)?;
    let all_minuscule = c.require_minuscule(datum).is_ok();
    let dim = c.dimension(datum);
    fixed_points(datum, c)
        .into_iter()
        .map(|t| {
            let chart_dims = c
                .lambdas
                .iter()
                .zip(&t.mus)
                .map(|(l, m)| {
                    let s = SliceDatum::new(datum, l.clone(), m.clone())?;
                    Ok(slices::slice_dimension(datum, &s))
                })
                .collect::<Result<Vec<_>>>()?;
            let chart = CoveringChart {
                tuple: t,
                chart_dims,
            };
            if all_minuscule {
                assert_eq!(
                    chart.total(),
                    dim,
                    "chart dimension mismatch at {}",
                    chart.tuple
                );
            }
            Ok(chart)
        })
        .collect()
}
