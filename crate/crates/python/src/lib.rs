//! Python bindings for `slicekit`.
//!
//! Coweights are passed as lists of integers or as strings in the CLI
//! syntax (`"1,0,-1"`, `"w1"`, `"2w1+w2"`). Characters come back as lists of
//! `(hbar, weight, coeff)` tuples, polynomials as `{degree: coeff}` dicts and
//! sweep reports as dicts.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use slicekit::checks;
use slicekit::cli::parse_lambda_list;
use slicekit::convolution::{self, ConvolutionDatum};
use slicekit::rep;
use slicekit::slices::{self, SliceDatum};
use slicekit::{Coweight, EquivariantCharacter, QPolynomial};

fn err(e: slicekit::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

#[derive(FromPyObject)]
enum CoweightArg {
    Coords(Vec<i64>),
    Text(String),
}

#[derive(FromPyObject)]
enum LambdasArg {
    List(Vec<CoweightArg>),
    Text(String),
}

#[pyclass(name = "RootDatum", frozen)]
struct PyRootDatum {
    inner: slicekit::RootDatum,
}

impl PyRootDatum {
    fn coweight(&self, arg: CoweightArg) -> PyResult<Coweight> {
        match arg {
            CoweightArg::Coords(v) => self.inner.coweight(v).map_err(err),
            CoweightArg::Text(s) => self.inner.parse_coweight(&s).map_err(err),
        }
    }

    fn lambdas(&self, arg: LambdasArg) -> PyResult<Vec<Coweight>> {
        match arg {
            LambdasArg::List(items) => items.into_iter().map(|a| self.coweight(a)).collect(),
            LambdasArg::Text(s) => parse_lambda_list(&self.inner, &s).map_err(err),
        }
    }

    fn slice(&self, lambda: CoweightArg, mu: CoweightArg) -> PyResult<SliceDatum> {
        SliceDatum::new(&self.inner, self.coweight(lambda)?, self.coweight(mu)?).map_err(err)
    }

    fn convolution(&self, lambdas: LambdasArg, mu: CoweightArg) -> PyResult<ConvolutionDatum> {
        ConvolutionDatum::new(&self.inner, self.lambdas(lambdas)?, self.coweight(mu)?).map_err(err)
    }
}

fn coords(c: &Coweight) -> Vec<i64> {
    c.0.clone()
}

fn character_terms(ch: &EquivariantCharacter) -> Vec<(i64, Vec<i64>, i64)> {
    ch.terms().map(|t| (t.hbar, t.weight.0, t.coeff)).collect()
}

fn polynomial_dict<'py>(py: Python<'py>, p: &QPolynomial) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    for (deg, c) in p.coeffs() {
        d.set_item(deg, c)?;
    }
    Ok(d)
}

fn json_to_py<'py, T: serde::Serialize>(py: Python<'py>, value: &T) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(value).map_err(|e| PyValueError::new_err(e.to_string()))?;
    py.import("json")?.call_method1("loads", (text,))
}

#[pymethods]
impl PyRootDatum {
    #[new]
    fn new(descriptor: &str) -> PyResult<Self> {
        Ok(PyRootDatum {
            inner: slicekit::RootDatum::parse(descriptor).map_err(err)?,
        })
    }

    #[getter]
    fn label(&self) -> String {
        self.inner.label.clone()
    }

    #[getter]
    fn rank(&self) -> usize {
        self.inner.rank
    }

    #[getter]
    fn ss_rank(&self) -> usize {
        self.inner.ss_rank
    }

    #[getter]
    fn cartan(&self) -> Vec<Vec<i64>> {
        self.inner.cartan.clone()
    }

    #[getter]
    fn positive_roots(&self) -> Vec<Vec<i64>> {
        self.inner
            .positive_roots
            .iter()
            .map(|r| r.0.clone())
            .collect()
    }

    #[getter]
    fn positive_coroots(&self) -> Vec<Vec<i64>> {
        self.inner.positive_coroots.iter().map(coords).collect()
    }

    #[getter]
    fn two_rho(&self) -> Vec<i64> {
        coords(&self.inner.two_rho)
    }

    #[getter]
    fn two_rho_check(&self) -> Vec<i64> {
        self.inner.two_rho_check.0.clone()
    }

    fn parse_coweight(&self, text: &str) -> PyResult<Vec<i64>> {
        Ok(coords(&self.inner.parse_coweight(text).map_err(err)?))
    }

    fn is_dominant(&self, mu: CoweightArg) -> PyResult<bool> {
        Ok(self.inner.is_dominant(&self.coweight(mu)?))
    }

    fn dominance_leq(&self, mu: CoweightArg, lambda: CoweightArg) -> PyResult<bool> {
        Ok(self
            .inner
            .dominance_leq(&self.coweight(mu)?, &self.coweight(lambda)?))
    }

    fn dominant_representative(&self, mu: CoweightArg) -> PyResult<Vec<i64>> {
        Ok(coords(
            &self.inner.dominant_representative(&self.coweight(mu)?),
        ))
    }

    fn weyl_orbit(&self, lambda: CoweightArg) -> PyResult<Vec<Vec<i64>>> {
        Ok(self
            .inner
            .weyl_orbit(&self.coweight(lambda)?)
            .iter()
            .map(coords)
            .collect())
    }

    fn weyl_group_order(&self) -> usize {
        self.inner.weyl_group_order()
    }

    fn weight_multiplicity(&self, lambda: CoweightArg, mu: CoweightArg) -> PyResult<u64> {
        rep::weight_multiplicity(&self.inner, &self.coweight(lambda)?, &self.coweight(mu)?)
            .map_err(err)
    }

    fn weyl_dimension(&self, lambda: CoweightArg) -> PyResult<u128> {
        rep::weyl_dimension(&self.inner, &self.coweight(lambda)?).map_err(err)
    }

    fn is_minuscule(&self, lambda: CoweightArg) -> PyResult<bool> {
        rep::is_minuscule(&self.inner, &self.coweight(lambda)?).map_err(err)
    }

    /// `[(index, coweight), ...]` with 1-based indices.
    fn minuscule_fundamental_coweights(&self) -> Vec<(usize, Vec<i64>)> {
        rep::minuscule_fundamental_coweights(&self.inner)
            .into_iter()
            .map(|(i, c)| (i, coords(&c)))
            .collect()
    }

    fn mu_condition(&self, mu: CoweightArg) -> PyResult<bool> {
        Ok(slices::mu_condition(&self.inner, &self.coweight(mu)?))
    }

    fn slice_dimension(&self, lambda: CoweightArg, mu: CoweightArg) -> PyResult<i64> {
        Ok(slices::slice_dimension(
            &self.inner,
            &self.slice(lambda, mu)?,
        ))
    }

    fn repellent_dimension(&self, lambda: CoweightArg, mu: CoweightArg) -> PyResult<i64> {
        Ok(slices::repellent_dimension(
            &self.inner,
            &self.slice(lambda, mu)?,
        ))
    }

    fn fibration_decomposition<'py>(
        &self,
        py: Python<'py>,
        lambda: CoweightArg,
        mu: CoweightArg,
    ) -> PyResult<Bound<'py, PyAny>> {
        let s = self.slice(lambda, mu)?;
        json_to_py(
            py,
            &slices::fibration_decomposition(&self.inner, &s).map_err(err)?,
        )
    }

    fn minuscule_slice_character(
        &self,
        lambda: CoweightArg,
        mu: CoweightArg,
    ) -> PyResult<Vec<(i64, Vec<i64>, i64)>> {
        let s = self.slice(lambda, mu)?;
        Ok(character_terms(
            &slices::minuscule_slice_character(&self.inner, &s).map_err(err)?,
        ))
    }

    fn fixed_points(&self, lambdas: LambdasArg, mu: CoweightArg) -> PyResult<Vec<Vec<Vec<i64>>>> {
        let c = self.convolution(lambdas, mu)?;
        Ok(convolution::fixed_points(&self.inner, &c)
            .iter()
            .map(|t| t.mus.iter().map(coords).collect())
            .collect())
    }

    /// Tangent character at the fixed point with the given index in
    /// canonical order.
    fn tangent_character(
        &self,
        lambdas: LambdasArg,
        mu: CoweightArg,
        index: usize,
    ) -> PyResult<Vec<(i64, Vec<i64>, i64)>> {
        let c = self.convolution(lambdas, mu)?;
        let fps = convolution::fixed_points(&self.inner, &c);
        let t = fps.get(index).ok_or_else(|| {
            PyValueError::new_err(format!(
                "index {index} out of range ({} fixed points)",
                fps.len()
            ))
        })?;
        Ok(character_terms(
            &convolution::tangent_character(&self.inner, &c, t).map_err(err)?,
        ))
    }

    /// Direct attracting count, or a closed form with `offset` 0 or -1.
    #[pyo3(signature = (lambdas, mu, offset=None))]
    fn poincare_polynomial<'py>(
        &self,
        py: Python<'py>,
        lambdas: LambdasArg,
        mu: CoweightArg,
        offset: Option<i64>,
    ) -> PyResult<Bound<'py, PyDict>> {
        let c = self.convolution(lambdas, mu)?;
        let p = match offset {
            None => convolution::poincare_polynomial(&self.inner, &c),
            Some(o) => convolution::poincare_closed_form(&self.inner, &c, o),
        }
        .map_err(err)?;
        polynomial_dict(py, &p)
    }

    fn render_character(&self, terms: Vec<(i64, Vec<i64>, i64)>, latex: bool) -> PyResult<String> {
        let mut ch = EquivariantCharacter::zero();
        for (h, w, c) in terms {
            ch.add_term(h, slicekit::RootChar(w), c);
        }
        if latex {
            ch.render_latex(&self.inner).map_err(err)
        } else {
            ch.render_plain(&self.inner).map_err(err)
        }
    }

    /// Runs `weight-rep`, `pairing-orbit` or `oracle`; the bound is the λ
    /// bound, the box radius, or the sample count respectively.
    #[pyo3(signature = (suite, bound=None, seed=0))]
    fn sweep<'py>(
        &self,
        py: Python<'py>,
        suite: &str,
        bound: Option<i64>,
        seed: u64,
    ) -> PyResult<Bound<'py, PyAny>> {
        let (lambda_bound, box_radius) = checks::default_bounds(&self.inner);
        let report = match suite {
            "weight-rep" => checks::sweep_weight_rep(&self.inner, bound.unwrap_or(lambda_bound)),
            "pairing-orbit" => {
                checks::sweep_pairing_orbit_equiv(&self.inner, bound.unwrap_or(box_radius))
            }
            "oracle" => {
                let samples = bound.unwrap_or(100).max(0) as usize;
                checks::sweep_oracle(
                    &self.inner,
                    &checks::sample_dominant(&self.inner, 4, samples, seed),
                )
            }
            other => return Err(PyValueError::new_err(format!("unknown suite {other:?}"))),
        };
        json_to_py(py, &report)
    }

    fn __repr__(&self) -> String {
        format!("RootDatum({:?})", self.inner.label)
    }
}

#[pymodule]
fn pyslicekit(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyRootDatum>()?;
    Ok(())
}
