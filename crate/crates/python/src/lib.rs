//! Python bindings for the trigonometric-spline library.
//!
//! Errors surface as `ConfigError` (a `ValueError`) for bad input and
//! `NumericalError` (an `ArithmeticError`) when a series or quadrature fails.

use pyo3::create_exception;
use pyo3::exceptions::{PyArithmeticError, PyValueError};
use pyo3::prelude::*;

use trigspline::alias::fold_table as core_fold_table;
use trigspline::kernel::{alpha as core_alpha, filter_response as core_filter_response};
use trigspline::signal::{suite, suite_signal};
use trigspline::spline::curvature_functional;
use trigspline::verify::{check_bound as core_check_bound, BoundKind};
use trigspline::{
    build_spline, discrete_coeffs, make_grid, sample, AnalyticSignal, DiscreteSpectrum, Harmonic,
    KernelConfig, PeriodicFunction, SampleVector, SigmaVariant, SmoothnessInfo, SpectralError,
    TrigSpline,
};

create_exception!(pytrigspline, ConfigError, PyValueError);
create_exception!(pytrigspline, NumericalError, PyArithmeticError);

fn to_py(e: SpectralError) -> PyErr {
    if e.is_numerical() {
        NumericalError::new_err(e.to_string())
    } else {
        ConfigError::new_err(e.to_string())
    }
}

/// Builds a kernel configuration from plain arguments.
pub fn kernel_config(
    n: usize,
    r: u32,
    variant: &str,
    tail_tol: f64,
) -> trigspline::Result<KernelConfig> {
    let variant: SigmaVariant = variant.parse()?;
    KernelConfig::new(r, make_grid(n)?, variant)?.with_tail_tol(tail_tol)
}

/// A periodic test signal with known Fourier coefficients.
#[pyclass(name = "Signal", module = "pytrigspline", frozen)]
pub struct PySignal {
    inner: AnalyticSignal,
}

#[pymethods]
impl PySignal {
    /// Finite sum of `(k, a, b)` harmonics declared `r` times differentiable.
    #[staticmethod]
    #[pyo3(signature = (terms, r = 2))]
    fn harmonic_sum(terms: Vec<(u32, f64, f64)>, r: u32) -> PyResult<Self> {
        let terms = terms.into_iter().map(|(k, a, b)| Harmonic::new(k, a, b));
        let inner = AnalyticSignal::harmonic_sum(terms, r).map_err(to_py)?;
        Ok(PySignal { inner })
    }

    /// `sum cos(kt) / k^p` with the given smoothness order and variation.
    #[staticmethod]
    fn power_decay_cosine(p: f64, r: u32, variation: f64) -> PyResult<Self> {
        let s = SmoothnessInfo::new(r, variation).map_err(to_py)?;
        let inner = AnalyticSignal::power_decay_cosine(p, s).map_err(to_py)?;
        Ok(PySignal { inner })
    }

    /// `sum sin(kt) / k^p` with the given smoothness order and variation.
    #[staticmethod]
    fn power_decay_sine(p: f64, r: u32, variation: f64) -> PyResult<Self> {
        let s = SmoothnessInfo::new(r, variation).map_err(to_py)?;
        let inner = AnalyticSignal::power_decay_sine(p, s).map_err(to_py)?;
        Ok(PySignal { inner })
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let inner = AnalyticSignal::from_json(text).map_err(to_py)?;
        Ok(PySignal { inner })
    }

    /// A member of the reference suite, by name.
    #[staticmethod]
    fn suite(name: &str) -> PyResult<Self> {
        suite_signal(name)
            .map(|inner| PySignal { inner })
            .ok_or_else(|| ConfigError::new_err(format!("unknown suite signal '{name}'")))
    }

    #[staticmethod]
    fn suite_names() -> Vec<&'static str> {
        suite().into_iter().map(|s| s.name).collect()
    }

    fn to_json(&self) -> String {
        self.inner.to_json()
    }

    /// `(r, variation)` of the declared smoothness class.
    #[getter]
    fn smoothness(&self) -> (u32, f64) {
        let s = self.inner.smoothness();
        (s.r, s.variation)
    }

    fn __call__(&self, t: f64) -> f64 {
        self.inner.value(t)
    }

    fn values(&self, ts: Vec<f64>) -> Vec<f64> {
        ts.into_iter().map(|t| self.inner.value(t)).collect()
    }

    /// Exact `(a_k, b_k)`.
    fn true_coeff(&self, k: u64) -> (f64, f64) {
        self.inner.true_coeff(k)
    }

    /// Values at the `2n + 1` uniform nodes.
    fn sample(&self, n: usize) -> PyResult<Vec<f64>> {
        let samples = sample(&self.inner, make_grid(n).map_err(to_py)?).map_err(to_py)?;
        Ok(samples.values().to_vec())
    }

    fn __repr__(&self) -> String {
        format!("Signal({:?})", self.inner.kind())
    }
}

/// The interpolating trigonometric polynomial of a sample vector.
#[pyclass(name = "Spectrum", module = "pytrigspline", frozen)]
pub struct PySpectrum {
    inner: DiscreteSpectrum,
}

#[pymethods]
impl PySpectrum {
    #[getter]
    fn n(&self) -> usize {
        self.inner.grid().n()
    }

    #[getter]
    fn a0(&self) -> f64 {
        self.inner.a0()
    }

    /// `(a*_k, b*_k)` for `0 <= k <= n`.
    fn coeff(&self, k: usize) -> PyResult<(f64, f64)> {
        if k > self.inner.grid().n() {
            return Err(ConfigError::new_err(format!(
                "k = {k} is above n = {}",
                self.inner.grid().n()
            )));
        }
        Ok(self.inner.coeff(k))
    }

    fn cos_coeffs(&self) -> Vec<f64> {
        self.inner.cos_coeffs().to_vec()
    }

    fn sin_coeffs(&self) -> Vec<f64> {
        self.inner.sin_coeffs().to_vec()
    }

    fn __call__(&self, t: f64) -> f64 {
        self.inner.value(t)
    }

    fn to_json(&self) -> String {
        self.inner.to_json()
    }
}

fn samples_from(values: Vec<f64>) -> trigspline::Result<SampleVector> {
    if values.len().is_multiple_of(2) {
        return Err(SpectralError::Domain(format!(
            "need an odd number of samples, got {}",
            values.len()
        )));
    }
    SampleVector::new(make_grid(values.len() / 2)?, values)
}

/// Discrete Fourier coefficients of `2n + 1` equispaced samples.
#[pyfunction]
fn dft(values: Vec<f64>) -> PyResult<PySpectrum> {
    let samples = samples_from(values).map_err(to_py)?;
    Ok(PySpectrum {
        inner: discrete_coeffs(&samples),
    })
}

/// A periodic spline of order `r` through equispaced samples.
#[pyclass(name = "Spline", module = "pytrigspline", frozen)]
pub struct PySpline {
    inner: TrigSpline,
}

#[pymethods]
impl PySpline {
    /// Interpolates `2n + 1` samples taken at `t_j = 2 pi j / (2n + 1)`.
    #[new]
    #[pyo3(signature = (values, r = 3, variant = "sinc", tail_tol = 1e-12))]
    fn new(values: Vec<f64>, r: u32, variant: &str, tail_tol: f64) -> PyResult<Self> {
        let samples = samples_from(values).map_err(to_py)?;
        let cfg = kernel_config(samples.grid().n(), r, variant, tail_tol).map_err(to_py)?;
        let inner = build_spline(&samples, &cfg).map_err(to_py)?;
        Ok(PySpline { inner })
    }

    /// Samples `signal` on `2n + 1` nodes and interpolates.
    #[staticmethod]
    #[pyo3(signature = (signal, n, r = 3, variant = "sinc", tail_tol = 1e-12))]
    fn from_signal(
        signal: &PySignal,
        n: usize,
        r: u32,
        variant: &str,
        tail_tol: f64,
    ) -> PyResult<Self> {
        let cfg = kernel_config(n, r, variant, tail_tol).map_err(to_py)?;
        let samples = sample(&signal.inner, cfg.grid).map_err(to_py)?;
        let inner = build_spline(&samples, &cfg).map_err(to_py)?;
        Ok(PySpline { inner })
    }

    #[getter]
    fn r(&self) -> u32 {
        self.inner.config().r
    }

    #[getter]
    fn variant(&self) -> &'static str {
        self.inner.config().variant.tag()
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.config().grid.n()
    }

    /// Number of harmonics kept by the truncated series.
    #[getter]
    fn truncation(&self) -> usize {
        self.inner.truncation()
    }

    #[getter]
    fn a0(&self) -> f64 {
        self.inner.a0()
    }

    fn __call__(&self, t: f64) -> f64 {
        self.inner.eval(t)
    }

    fn values(&self, ts: Vec<f64>) -> Vec<f64> {
        ts.into_iter().map(|t| self.inner.eval(t)).collect()
    }

    /// The `q`-th derivative at `t`, for `q <= r`.
    fn derivative(&self, t: f64, q: u32) -> PyResult<f64> {
        self.inner.derivative(t, q).map_err(to_py)
    }

    /// `(a_j, b_j)` of the unfolded series.
    fn fourier_coeff(&self, j: u64) -> (f64, f64) {
        self.inner.fourier_coeff(j)
    }

    /// `(j, a_j, b_j)` for `1 <= j <= j_max`.
    fn unfolded_spectrum(&self, j_max: u64) -> Vec<(u64, f64, f64)> {
        self.inner.unfolded_spectrum(j_max)
    }

    /// The trigonometric polynomial through the same samples.
    fn spectrum(&self) -> PySpectrum {
        PySpectrum {
            inner: self.inner.spectrum().clone(),
        }
    }

    /// `∫ (f^{(order)})^2 dt` over one period.
    #[pyo3(signature = (order = 2, resolution = 8192))]
    fn curvature(&self, order: u32, resolution: usize) -> PyResult<f64> {
        curvature_functional(&self.inner, order, resolution).map_err(to_py)
    }

    fn to_json(&self) -> String {
        self.inner.to_json()
    }

    fn __repr__(&self) -> String {
        let c = self.inner.config();
        format!(
            "Spline(N={}, r={}, variant={})",
            c.grid.len(),
            c.r,
            c.variant
        )
    }
}

/// Filter weight `alpha(r, j)` on a grid of `2n + 1` nodes.
#[pyfunction]
#[pyo3(signature = (j, n, r, variant = "sinc"))]
fn alpha(j: u64, n: usize, r: u32, variant: &str) -> PyResult<f64> {
    let cfg = kernel_config(n, r, variant, 1e-12).map_err(to_py)?;
    core_alpha(j, &cfg).map_err(to_py)
}

/// `[alpha(r, j) for j in 1..=j_max]`, with `j_max` defaulting to `2N`.
#[pyfunction]
#[pyo3(signature = (n, r, variant = "sinc", j_max = None))]
fn filter_response(n: usize, r: u32, variant: &str, j_max: Option<usize>) -> PyResult<Vec<f64>> {
    let cfg = kernel_config(n, r, variant, 1e-12).map_err(to_py)?;
    let j_max = j_max.unwrap_or(2 * cfg.grid.len());
    let table = core_filter_response(&cfg, j_max).map_err(to_py)?;
    Ok((1..=j_max as u64).map(|j| table.alpha(j)).collect())
}

type FoldTuple = (usize, f64, f64, f64, f64, f64);

/// Rows `(k, fold_a, fold_b, dft_a, dft_b, bound)` comparing folded exact
/// coefficients with the DFT of the samples.
#[pyfunction]
#[pyo3(signature = (signal, n, tol = 1e-12))]
fn fold_table(signal: &PySignal, n: usize, tol: f64) -> PyResult<Vec<FoldTuple>> {
    let grid = make_grid(n).map_err(to_py)?;
    let rows = core_fold_table(&signal.inner, &grid, tol).map_err(to_py)?;
    Ok(rows
        .iter()
        .map(|r| {
            (
                r.fold.k,
                r.fold.folded_value_a,
                r.fold.folded_value_b,
                r.dft_a,
                r.dft_b,
                r.bound,
            )
        })
        .collect())
}

/// Rows `(k, measured, bound, holds)` for one bound family:
/// `coeff`, `alias`, `time`, `cnorm` or `refined`.
#[pyfunction]
#[pyo3(signature = (kind, signal, n, r = 3, variant = "sinc", bound_scale = 1.0))]
fn check_bound(
    kind: &str,
    signal: &PySignal,
    n: usize,
    r: u32,
    variant: &str,
    bound_scale: f64,
) -> PyResult<Vec<(u64, f64, f64, bool)>> {
    let kind: BoundKind = kind.parse().map_err(to_py)?;
    let cfg = kernel_config(n, r, variant, 1e-12).map_err(to_py)?;
    let rows = core_check_bound(kind, &signal.inner, &cfg, bound_scale).map_err(to_py)?;
    Ok(rows
        .iter()
        .map(|r| (r.k, r.measured, r.bound, r.holds))
        .collect())
}

#[pymodule]
pub fn pytrigspline(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PySignal>()?;
    m.add_class::<PySpectrum>()?;
    m.add_class::<PySpline>()?;
    m.add_function(wrap_pyfunction!(dft, m)?)?;
    m.add_function(wrap_pyfunction!(alpha, m)?)?;
    m.add_function(wrap_pyfunction!(filter_response, m)?)?;
    m.add_function(wrap_pyfunction!(fold_table, m)?)?;
    m.add_function(wrap_pyfunction!(check_bound, m)?)?;
    m.add("ConfigError", m.py().get_type::<ConfigError>())?;
    m.add("NumericalError", m.py().get_type::<NumericalError>())?;
    Ok(())
}
