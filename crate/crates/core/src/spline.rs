//! Trigonometric spline `St(t) = a*_0/2 + sum_j alpha_j [a*_j cos jt + b*_j sin jt]`,
//! where `a*_j`, `b*_j` are the discrete coefficients extended to every
//! `j` through its alias class and the DC class `j = mN` is dropped.
//!
//! Pointwise values use the class-wise closed form: the members of class
//! `k` are `N(m + k/N)` and `N(m + 1 - k/N)`, so each class contributes a
//! pair of shifted Lerch series evaluated at `θ = N t`.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Result, SpectralError};
use crate::function::{rotate_quarter_turns, PeriodicFunction, TermwiseDerivative};
use crate::kernel::{filter_response, FilterTable, KernelConfig, SigmaVariant};
use crate::output::CsvTable;
use crate::sampling::{discrete_coeffs, DiscreteSpectrum, SampleVector};
use crate::signal::AnalyticSignal;
use crate::special::LerchSeries;

/// Largest truncation multiple `L` in `J = L N`.
pub const MAX_TRUNCATION_MULTIPLE: u64 = 64;

#[derive(Debug, Clone, Copy)]
struct ClassTerm {
    /// `a*_k - i b*_k`
    z: Complex64,
    /// `C_k N^{-s} / H(r, k)`
    weight: f64,
    shift: f64,
    co_shift: f64,
}

#[derive(Debug, Clone)]
pub struct TrigSpline {
    config: KernelConfig,
    spectrum: DiscreteSpectrum,
    table: FilterTable,
    /// `(â_j, b̂_j)` for `j = 1..=J`.
    coeffs: Vec<(f64, f64)>,
    truncation_tail: f64,
    classes: Vec<ClassTerm>,
    kernels: Vec<(LerchSeries, LerchSeries)>,
}

/// Build the spline of order `config.r` through the samples.
pub fn build_spline(samples: &SampleVector, config: &KernelConfig) -> Result<TrigSpline> {
    config.validate()?;
    let grid = samples.grid();
    if grid != config.grid {
        return Err(SpectralError::GridMismatch {
            expected: config.grid.len(),
            found: grid.len(),
        });
    }
    let n = grid.n();
    let len = grid.len();
    let spectrum = snap_roundoff(discrete_coeffs(samples), samples)?;
    let norms = filter_response(config, n)?;

    let weights: Vec<f64> = (1..=n)
        .map(|k| {
            let (a, b) = spectrum.coeff(k);
            a.abs() + b.abs()
        })
        .collect();
    let mut multiple = MAX_TRUNCATION_MULTIPLE;
    let mut truncation_tail = f64::INFINITY;
    for l in 1..=MAX_TRUNCATION_MULTIPLE {
        let mut tail = 0.0;
        for (i, &w) in weights.iter().enumerate() {
            if w > 0.0 {
                tail += w * norms.class_abs_tail(i + 1, l)?;
            }
        }
        truncation_tail = tail;
        if tail < config.tail_tol {
            multiple = l;
            break;
        }
    }
    let j_max = multiple as usize * len;
    let table = filter_response(config, j_max)?;

    let coeffs = (1..=j_max as u64)
        .map(|j| {
            if j % len as u64 == 0 {
                (0.0, 0.0)
            } else {
                let (a, b) = spectrum.extended_coeff(j);
                let alpha = table.alpha(j);
                (alpha * a, alpha * b)
            }
        })
        .collect();

    let s = config.exponent() as i32;
    let lenf = len as f64;
    let mut classes = Vec::with_capacity(n);
    for k in 1..=n {
        let (a, b) = spectrum.coeff(k);
        classes.push(ClassTerm {
            z: Complex64::new(a, -b),
            weight: config.class_scale(k) * lenf.powi(-s) / table.h(k),
            shift: k as f64 / lenf,
            co_shift: (len - k) as f64 / lenf,
        });
    }
    let kernels = class_kernels(&classes, s as u32)?;

    Ok(TrigSpline {
        config: *config,
        spectrum,
        table,
        coeffs,
        truncation_tail,
        classes,
        kernels,
    })
}

/// Zero the band coefficients that are pure round-off of the DFT, so a
/// constant signal yields a constant spline with no oscillating part.
fn snap_roundoff(spectrum: DiscreteSpectrum, samples: &SampleVector) -> Result<DiscreteSpectrum> {
    let peak = samples.values().iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let floor = 16.0 * f64::EPSILON * peak;
    let snap = |v: &f64| if v.abs() <= floor { 0.0 } else { *v };
    DiscreteSpectrum::new(
        spectrum.grid(),
        spectrum.a0(),
        spectrum.cos_coeffs().iter().map(snap).collect(),
        spectrum.sin_coeffs().iter().map(snap).collect(),
    )
}

fn class_kernels(classes: &[ClassTerm], order: u32) -> Result<Vec<(LerchSeries, LerchSeries)>> {
    classes
        .iter()
        .map(|c| {
            Ok((
                LerchSeries::new(order as f64, c.shift)?,
                LerchSeries::new(order as f64, c.co_shift)?,
            ))
        })
        .collect()
}

impl TrigSpline {
    pub fn config(&self) -> &KernelConfig {
        &self.config
    }

    pub fn spectrum(&self) -> &DiscreteSpectrum {
        &self.spectrum
    }

    pub fn filter(&self) -> &FilterTable {
        &self.table
    }

    /// `J`, the number of stored coefficients.
    pub fn truncation(&self) -> usize {
        self.coeffs.len()
    }

    /// Bound on `sum_{j > J} (|â_j| + |b̂_j|)`.
    pub fn truncation_tail(&self) -> f64 {
        self.truncation_tail
    }

    pub fn a0(&self) -> f64 {
        self.spectrum.a0()
    }

    /// Largest `m` with `St^{(m)}` of bounded variation. The even kernels
    /// of `abs-sinc` / `inv-power` with even `r` put a logarithmic
    /// singularity into `St^{(r)}`.
    pub fn smoothness_order(&self) -> u32 {
        let r = self.config.r;
        if self.config.variant == SigmaVariant::SincPower || r % 2 == 1 {
            r
        } else {
            r - 1
        }
    }

    /// `(â_j, b̂_j)` for any `j >= 0`.
    pub fn fourier_coeff(&self, j: u64) -> (f64, f64) {
        if j == 0 {
            return (self.a0(), 0.0);
        }
        match self.coeffs.get(j as usize - 1) {
            Some(&c) => c,
            None => {
                if j.is_multiple_of(self.config.grid.len() as u64) {
                    (0.0, 0.0)
                } else {
                    let (a, b) = self.spectrum.extended_coeff(j);
                    let alpha = self.table.alpha(j);
                    (alpha * a, alpha * b)
                }
            }
        }
    }

    /// `(j, â_j, b̂_j)` for `j = 0..=j_max`.
    pub fn unfolded_spectrum(&self, j_max: u64) -> Vec<(u64, f64, f64)> {
        (0..=j_max)
            .map(|j| {
                let (a, b) = self.fourier_coeff(j);
                (j, a, b)
            })
            .collect()
    }

    /// `St(t)` from the closed form.
    pub fn eval(&self, t: f64) -> f64 {
        self.eval_with(&self.kernels, t, 0)
    }

    /// `St(t)` from the stored `J` coefficients.
    pub fn eval_truncated(&self, t: f64) -> f64 {
        self.termwise_derivative(t, 0)
    }

    /// `St^{(q)}(t)` for `q <= r`.
    pub fn derivative(&self, t: f64, q: u32) -> Result<f64> {
        Ok(self.derivative_evaluator(q)?.value(t))
    }

    /// Evaluator for `St^{(q)}`; the class kernels are built once.
    pub fn derivative_evaluator(&self, q: u32) -> Result<SplineDerivative<'_>> {
        if q > self.config.r {
            return Err(SpectralError::domain(format!(
                "spline of order {} has no derivative of order {q}",
                self.config.r
            )));
        }
        let kernels = if q == 0 {
            None
        } else {
            Some(class_kernels(&self.classes, self.config.exponent() - q)?)
        };
        Ok(SplineDerivative {
            spline: self,
            order: q,
            kernels,
        })
    }

    fn eval_with(&self, kernels: &[(LerchSeries, LerchSeries)], t: f64, q: u32) -> f64 {
        let lenf = self.config.grid.len() as f64;
        let theta = lenf * t.rem_euclid(TAU);
        let alternating = self.config.alternating();
        let scale = lenf.powi(q as i32);
        let mut sum = Complex64::new(0.0, 0.0);
        for (class, (plus, minus)) in self.classes.iter().zip(kernels) {
            if class.z == Complex64::new(0.0, 0.0) {
                continue;
            }
            let (p, m) = if alternating {
                (
                    Complex64::from_polar(1.0, -PI * class.shift) * plus.eval(theta + PI),
                    Complex64::from_polar(1.0, -PI * class.co_shift) * minus.eval(PI - theta),
                )
            } else {
                (plus.eval(theta), minus.eval(-theta))
            };
            // d^q/dt^q: plus family gains (iN)^q, minus family (-iN)^q
            let (pr, pi) = rotate_quarter_turns(p.re, p.im, q);
            let (mr, mi) = rotate_quarter_turns(m.re, m.im, 3 * q);
            sum += class.z * class.weight * Complex64::new(pr + mr, pi + mi);
        }
        let base = if q == 0 { 0.5 * self.a0() } else { 0.0 };
        base + scale * sum.re
    }

    /// `{"r", "variant", "N", "J", "a0", "coeffs": [[j, a, b], ...]}` with
    /// all-zero coefficient pairs omitted.
    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Doc {
            r: u32,
            variant: SigmaVariant,
            #[serde(rename = "N")]
            len: usize,
            #[serde(rename = "J")]
            j: usize,
            a0: f64,
            coeffs: Vec<(u64, f64, f64)>,
        }
        let doc = Doc {
            r: self.config.r,
            variant: self.config.variant,
            len: self.config.grid.len(),
            j: self.truncation(),
            a0: self.a0(),
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .filter(|(_, &(a, b))| a != 0.0 || b != 0.0)
                .map(|(i, &(a, b))| (i as u64 + 1, a, b))
                .collect(),
        };
        serde_json::to_string_pretty(&doc).expect("finite coefficients serialize")
    }

    /// Unfolded spectrum for `j = 0..=j_max`, with the true coefficients and
    /// absolute errors when `truth` is given.
    pub fn unfolded_csv(&self, j_max: u64, truth: Option<&AnalyticSignal>) -> String {
        match truth {
            None => {
                let mut table = CsvTable::new(&["j", "a_hat", "b_hat"]);
                for (j, a, b) in self.unfolded_spectrum(j_max) {
                    table.row(&[j.into(), a.into(), b.into()]);
                }
                table.into_string()
            }
            Some(f) => {
                let mut table = CsvTable::new(&[
                    "j",
                    "a_hat",
                    "b_hat",
                    "a_true",
                    "b_true",
                    "abs_err_a",
                    "abs_err_b",
                ]);
                for (j, a, b) in self.unfolded_spectrum(j_max) {
                    let (ta, tb) = f.true_coeff(j);
                    table.row(&[
                        j.into(),
                        a.into(),
                        b.into(),
                        ta.into(),
                        tb.into(),
                        (a - ta).abs().into(),
                        (b - tb).abs().into(),
                    ]);
                }
                table.into_string()
            }
        }
    }
}

impl PeriodicFunction for TrigSpline {
    fn value(&self, t: f64) -> f64 {
        self.eval(t)
    }
}

impl TermwiseDerivative for TrigSpline {
    /// Derivative of the truncated series `j <= J`.
    fn termwise_derivative(&self, t: f64, order: u32) -> f64 {
        let mut sum = if order == 0 { 0.5 * self.a0() } else { 0.0 };
        for (i, &(a, b)) in self.coeffs.iter().enumerate() {
            if a == 0.0 && b == 0.0 {
                continue;
            }
            let j = i + 1;
            let (s, c) = (j as f64 * t).sin_cos();
            let (c, s) = rotate_quarter_turns(c, s, order);
            sum += (j as f64).powi(order as i32) * (a * c + b * s);
        }
        sum
    }
}

/// `St^{(q)}` of a [`TrigSpline`].
#[derive(Debug, Clone)]
pub struct SplineDerivative<'a> {
    spline: &'a TrigSpline,
    order: u32,
    kernels: Option<Vec<(LerchSeries, LerchSeries)>>,
}

impl PeriodicFunction for SplineDerivative<'_> {
    fn value(&self, t: f64) -> f64 {
        let kernels = self.kernels.as_deref().unwrap_or(&self.spline.kernels);
        self.spline.eval_with(kernels, t, self.order)
    }
}

/// `∫_0^{2π} (f^{(order)})^2 dt` by the periodic trapezoid rule on
/// `resolution` points, with derivatives taken term by term.
pub fn curvature_functional<F: TermwiseDerivative + ?Sized>(
    f: &F,
    order: u32,
    resolution: usize,
) -> Result<f64> {
    if order % 2 == 1 {
        return Err(SpectralError::domain(format!(
            "curvature functional needs an even derivative order, got {order}"
        )));
    }
    if resolution == 0 {
        return Err(SpectralError::domain("resolution must be positive"));
    }
    let h = TAU / resolution as f64;
    let sum: f64 = (0..resolution)
        .map(|i| {
            let v = f.termwise_derivative(i as f64 * h, order);
            v * v
        })
        .sum();
    Ok(h * sum)
}
