//! Spline filter: the weights `sigma_j`, their per-class normalisers `H`
//! and the resulting response `alpha_j = sigma_j / H(r, k(j))`.
//!
//! Within an alias class `k` every member `j` is `mN + k` or `mN - k`, and
//! all three weight families reduce to `C_k j^{-s}` times a class-constant
//! sign pattern (`s = r + 1`). Class sums are therefore Hurwitz zeta values,
//! evaluated by Euler-Maclaurin with a certified remainder.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Result, SpectralError};
use crate::output::CsvTable;
use crate::sampling::{alias_class, UniformGrid};
use crate::special::{hurwitz_zeta_within, zeta};

pub const DEFAULT_TAIL_TOL: f64 = 1e-12;
pub const DEFAULT_M_MAX_CAP: usize = 1_000_000;

/// `H` is treated as zero when it falls below this fraction of `|sigma_k|`.
const DEGENERACY_RATIO: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SigmaVariant {
    /// `sinc(πj/N)^(r+1)`, sign kept.
    #[serde(rename = "sinc")]
    SincPower,
    /// `|sinc(πj/N)|^(r+1)`.
    #[serde(rename = "abs-sinc")]
    AbsSincPower,
    /// `j^-(r+1)`.
    #[serde(rename = "inv-power")]
    InversePower,
}

impl SigmaVariant {
    pub const ALL: [SigmaVariant; 3] = [
        SigmaVariant::SincPower,
        SigmaVariant::AbsSincPower,
        SigmaVariant::InversePower,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            SigmaVariant::SincPower => "sinc",
            SigmaVariant::AbsSincPower => "abs-sinc",
            SigmaVariant::InversePower => "inv-power",
        }
    }
}

impl fmt::Display for SigmaVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for SigmaVariant {
    type Err = SpectralError;

    fn from_str(s: &str) -> Result<Self> {
        SigmaVariant::ALL
            .into_iter()
            .find(|v| v.tag() == s)
            .ok_or_else(|| {
                SpectralError::domain(format!(
                    "unknown variant '{s}' (expected sinc, abs-sinc or inv-power)"
                ))
            })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelConfig {
    pub r: u32,
    pub grid: UniformGrid,
    pub variant: SigmaVariant,
    pub tail_tol: f64,
    pub m_max_cap: usize,
}

impl KernelConfig {
    pub fn new(r: u32, grid: UniformGrid, variant: SigmaVariant) -> Result<Self> {
        let config = KernelConfig {
            r,
            grid,
            variant,
            tail_tol: DEFAULT_TAIL_TOL,
            m_max_cap: DEFAULT_M_MAX_CAP,
        };
        config.validate()?;
        Ok(config)
    }

    pub fn with_tail_tol(mut self, tail_tol: f64) -> Result<Self> {
        self.tail_tol = tail_tol;
        self.validate()?;
        Ok(self)
    }

    pub fn with_m_max_cap(mut self, cap: usize) -> Result<Self> {
        self.m_max_cap = cap;
        self.validate()?;
        Ok(self)
    }

    pub fn validate(&self) -> Result<()> {
        if self.r < 1 {
            return Err(SpectralError::domain("spline order r must be >= 1"));
        }
        if !(self.tail_tol > 0.0 && self.tail_tol.is_finite()) {
            return Err(SpectralError::domain(format!(
                "tail_tol must be positive, got {}",
                self.tail_tol
            )));
        }
        if self.m_max_cap < 1 {
            return Err(SpectralError::domain("m_max_cap must be >= 1"));
        }
        Ok(())
    }

    /// `s = r + 1`.
    pub fn exponent(&self) -> u32 {
        self.r + 1
    }

    /// Whether class members alternate in sign (signed sinc with odd `s`).
    pub fn alternating(&self) -> bool {
        self.variant == SigmaVariant::SincPower && self.exponent() % 2 == 1
    }

    /// `C_k`: `sigma_j = C_k j^{-s}` up to sign for `j` in class `k >= 1`.
    pub(crate) fn class_scale(&self, k: usize) -> f64 {
        match self.variant {
            SigmaVariant::InversePower => 1.0,
            _ => {
                let len = self.grid.len() as f64;
                (len * (PI * k as f64 / len).sin() / PI).powi(self.exponent() as i32)
            }
        }
    }
}

/// `sigma_j`. For the inverse-power variant `j = 0` is a domain error.
pub fn sigma(j: u64, config: &KernelConfig) -> Result<f64> {
    let s = config.exponent() as i32;
    match config.variant {
        SigmaVariant::InversePower => {
            if j == 0 {
                Err(SpectralError::domain(
                    "inverse-power weight undefined at j = 0",
                ))
            } else {
                Ok((j as f64).powi(-s))
            }
        }
        variant => {
            if j == 0 {
                return Ok(1.0);
            }
            let len = config.grid.len() as u64;
            // sin(πj/N) from the exactly reduced index
            let rem = j % (2 * len);
            let sin = (PI * rem as f64 / len as f64).sin();
            let sinc = sin / (PI * j as f64 / len as f64);
            Ok(if variant == SigmaVariant::SincPower {
                sinc.powi(s)
            } else {
                sinc.abs().powi(s)
            })
        }
    }
}

/// Normaliser of one alias class.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassNorm {
    pub k: usize,
    /// `H(r, k) = sum_{j in class} sigma_j`.
    pub h: f64,
    /// Bound on the error of `h` from the series truncation.
    pub uncertainty: f64,
    /// Terms summed explicitly before the Euler-Maclaurin tail.
    pub m_used: usize,
}

#[derive(Debug, Clone, Copy)]
struct PartialSum {
    value: f64,
    remainder: f64,
    terms: usize,
}

/// `sum_{m >= m0}` over the class members `mN + k` and `mN - k` of
/// `sigma_j`, or of `|sigma_j|` when `absolute`.
fn class_sum_from(config: &KernelConfig, k: usize, m0: u64, absolute: bool) -> Result<PartialSum> {
    let s = config.exponent() as f64;
    let len = config.grid.len() as f64;
    let a = k as f64 / len;
    let b = (config.grid.len() - k) as f64 / len;
    let m0f = m0 as f64;
    let scale = config.class_scale(k) * len.powf(-s);
    let cap = config.m_max_cap;
    let tol = config.tail_tol;
    // each zeta gets tol relative to its own leading term
    let z = |x: f64| hurwitz_zeta_within(s, x, tol * x.powf(-s), cap);

    if config.alternating() && !absolute {
        let half = 2f64.powf(-s);
        let sign = if m0.is_multiple_of(2) { 1.0 } else { -1.0 };
        let p1 = z((m0f + a) / 2.0)?;
        let p2 = z((m0f + a + 1.0) / 2.0)?;
        let q1 = z((m0f - 1.0 + b) / 2.0)?;
        let q2 = z((m0f + b) / 2.0)?;
        // plus family sign (-1)^m, minus family (-1)^(m+1)
        let value = sign * half * ((p1.value - p2.value) - (q1.value - q2.value));
        let remainder = half * (p1.remainder + p2.remainder + q1.remainder + q2.remainder);
        Ok(PartialSum {
            value: scale * value,
            remainder: scale * remainder,
            terms: p1.terms.max(p2.terms).max(q1.terms).max(q2.terms),
        })
    } else {
        // (mN - k)/N = (m - 1) + b
        let p = z(m0f + a)?;
        let q = z(m0f - 1.0 + b)?;
        Ok(PartialSum {
            value: scale * (p.value + q.value),
            remainder: scale * (p.remainder + q.remainder),
            terms: p.terms.max(q.terms),
        })
    }
}

fn check_class(k: usize, config: &KernelConfig) -> Result<()> {
    if k == 0 || k > config.grid.n() {
        return Err(SpectralError::domain(format!(
            "class index must satisfy 1 <= k <= {}, got {k}",
            config.grid.n()
        )));
    }
    Ok(())
}

/// `H(r, k)` with its truncation uncertainty, for `k` in `1..=n`.
pub fn class_norm(k: usize, config: &KernelConfig) -> Result<ClassNorm> {
    config.validate()?;
    check_class(k, config)?;
    let sigma_k = sigma(k as u64, config)?;
    let rest = class_sum_from(config, k, 1, false)?;
    let h = sigma_k + rest.value;
    if !(h.abs() >= DEGENERACY_RATIO * sigma_k.abs()) {
        return Err(SpectralError::DegenerateKernel { k, h });
    }
    Ok(ClassNorm {
        k,
        h,
        uncertainty: rest.remainder,
        m_used: rest.terms.max(1),
    })
}

/// `H(r, k) = sum_m sigma_{|mN + k|}` for `k` in `1..=n`.
pub fn h_factor(k: usize, config: &KernelConfig) -> Result<f64> {
    Ok(class_norm(k, config)?.h)
}

/// Normaliser of the DC class `{mN}`.
pub fn h_factor_dc(config: &KernelConfig) -> Result<f64> {
    config.validate()?;
    match config.variant {
        SigmaVariant::InversePower => {
            let s = config.exponent() as f64;
            Ok(1.0 + 2.0 * (config.grid.len() as f64).powf(-s) * zeta(s))
        }
        // sinc vanishes at every nonzero multiple of N
        _ => Ok(1.0),
    }
}

/// `alpha_j` for `j` up to `j_max`, with the class normalisers.
#[derive(Debug, Clone)]
pub struct FilterTable {
    config: KernelConfig,
    norms: Vec<ClassNorm>,
    h_dc: f64,
    alpha: Vec<f64>,
}

impl FilterTable {
    pub fn config(&self) -> &KernelConfig {
        &self.config
    }

    pub fn j_max(&self) -> usize {
        self.alpha.len() - 1
    }

    /// Class normalisers for `k = 1..=n`.
    pub fn norms(&self) -> &[ClassNorm] {
        &self.norms
    }

    pub fn h(&self, k: usize) -> f64 {
        if k == 0 {
            self.h_dc
        } else {
            self.norms[k - 1].h
        }
    }

    /// `alpha_j`; values past `j_max` are computed on demand.
    pub fn alpha(&self, j: u64) -> f64 {
        match self.alpha.get(j as usize) {
            Some(&v) => v,
            None => self.compute_alpha(j),
        }
    }

    fn compute_alpha(&self, j: u64) -> f64 {
        let k = alias_class(j, self.config.grid.len()).k;
        let sigma_j = if j == 0 && self.config.variant == SigmaVariant::InversePower {
            1.0
        } else {
            sigma(j, &self.config).expect("nonzero index")
        };
        sigma_j / self.h(k)
    }

    /// `sum` of `alpha` over class `k` (`1..=n`): the first `m_terms`
    /// members on each side explicitly, the rest from the zeta tail.
    pub fn class_partition_sum(&self, k: usize, m_terms: u64) -> Result<f64> {
        check_class(k, &self.config)?;
        let len = self.config.grid.len() as u64;
        let k64 = k as u64;
        let mut sum = self.alpha(k64);
        for m in 1..=m_terms {
            sum += self.alpha(m * len + k64) + self.alpha(m * len - k64);
        }
        let tail = class_sum_from(&self.config, k, m_terms + 1, false)?;
        Ok(sum + tail.value / self.h(k))
    }

    /// Bound on `sum |alpha_j|` over the members of class `k` above `j_cut = L N`.
    pub(crate) fn class_abs_tail(&self, k: usize, l: u64) -> Result<f64> {
        // plus family m >= L, minus family m >= L + 1
        let s = self.config.exponent() as f64;
        let len = self.config.grid.len() as f64;
        let a = k as f64 / len;
        let b = (self.config.grid.len() - k) as f64 / len;
        let scale = self.config.class_scale(k) * len.powf(-s) / self.h(k).abs();
        let lf = l as f64;
        let z = |x: f64| -> Result<f64> {
            let em = hurwitz_zeta_within(
                s,
                x,
                self.config.tail_tol * x.powf(-s),
                self.config.m_max_cap,
            )?;
            Ok(em.value + em.remainder)
        };
        Ok(scale * (z(lf + a)? + z(lf + b)?))
    }

    pub fn to_csv(&self) -> String {
        let mut table = CsvTable::new(&["j", "k_class", "sigma", "H", "alpha"]);
        let len = self.config.grid.len();
        for j in 1..=self.j_max() as u64 {
            let k = alias_class(j, len).k;
            let sigma_j = sigma(j, &self.config).expect("j >= 1");
            table.row(&[
                j.into(),
                k.into(),
                sigma_j.into(),
                self.h(k).into(),
                self.alpha[j as usize].into(),
            ]);
        }
        table.into_string()
    }
}

/// Filter response `alpha_j` for `j = 0..=j_max` (`j_max >= n`).
pub fn filter_response(config: &KernelConfig, j_max: usize) -> Result<FilterTable> {
    config.validate()?;
    let n = config.grid.n();
    if j_max < n {
        return Err(SpectralError::domain(format!(
            "j_max = {j_max} must be at least n = {n}"
        )));
    }
    let norms = (1..=n)
        .map(|k| class_norm(k, config))
        .collect::<Result<Vec<_>>>()?;
    let mut table = FilterTable {
        config: *config,
        norms,
        h_dc: h_factor_dc(config)?,
        alpha: Vec::new(),
    };
    table.alpha = (0..=j_max as u64).map(|j| table.compute_alpha(j)).collect();
    Ok(table)
}

/// `alpha_j` for a single index.
pub fn alpha(j: u64, config: &KernelConfig) -> Result<f64> {
    let len = config.grid.len();
    let k = alias_class(j, len).k;
    let h = if k == 0 {
        h_factor_dc(config)?
    } else {
        h_factor(k, config)?
    };
    let sigma_j = if j == 0 && config.variant == SigmaVariant::InversePower {
        1.0
    } else {
        sigma(j, config)?
    };
    Ok(sigma_j / h)
}
