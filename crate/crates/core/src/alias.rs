//! Frequency folding of true coefficients onto the Nyquist band, the
//! resulting coefficient and time-domain error bounds, and the band /
//! out-of-band split of a signal.
//!
//! Sampling on `N = 2n + 1` nodes makes harmonic `mN ± k` indistinguishable
//! from `k`, so the discrete coefficients are the fold sums
//!
//! ```text
//! a*_0 = a_0 + 2 sum_{m>=1} a_{mN}
//! a*_k = a_k + sum_{m>=1} (a_{mN+k} + a_{mN-k})
//! b*_k = b_k + sum_{m>=1} (b_{mN+k} - b_{mN-k})
//! ```
//!
//! For power-decay signals the infinite sums are Hurwitz zeta values.

use std::f64::consts::PI;

use crate::error::{Result, SpectralError};
use crate::function::PeriodicFunction;
use crate::output::CsvTable;
use crate::sampling::{alias_class, discrete_coeffs, sample, UniformGrid};
use crate::signal::{AnalyticSignal, SignalKind, SmoothnessInfo};
use crate::special::{hurwitz_zeta_within, LerchSeries};

const FOLD_TERM_CAP: usize = 1_000_000;

/// Fold sum for one band index.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FoldReport {
    pub k: usize,
    pub folded_value_a: f64,
    pub folded_value_b: f64,
    /// Fold terms summed directly (for infinite series, before the
    /// Euler-Maclaurin tail).
    pub m_used: usize,
    /// Bound on what the truncation left out.
    pub tail_bound: f64,
}

struct FoldExcess {
    da: f64,
    db: f64,
    m_used: usize,
    tail_bound: f64,
}

fn check_tol(tol: f64) -> Result<()> {
    if tol > 0.0 && tol.is_finite() {
        Ok(())
    } else {
        Err(SpectralError::domain(format!(
            "tolerance must be positive, got {tol}"
        )))
    }
}

fn check_band(k: usize, grid: &UniformGrid) -> Result<()> {
    if k > grid.n() {
        return Err(SpectralError::domain(format!(
            "band index {k} exceeds n = {}",
            grid.n()
        )));
    }
    Ok(())
}

/// `a*_k - a_k` and `b*_k - b_k`: everything that folds onto `k`.
fn fold_excess(
    signal: &AnalyticSignal,
    grid: &UniformGrid,
    k: usize,
    tol: f64,
) -> Result<FoldExcess> {
    let len = grid.len();
    match signal.kind() {
        SignalKind::HarmonicSum => {
            let (mut da, mut db, mut m_used) = (0.0, 0.0, 1usize);
            for h in signal.terms() {
                let j = h.k as u64;
                if j as usize <= grid.n() {
                    continue;
                }
                let class = alias_class(j, len);
                if class.k != k {
                    continue;
                }
                m_used = m_used.max((j as usize + k) / len);
                if k == 0 {
                    da += 2.0 * h.a;
                } else {
                    da += h.a;
                    db += f64::from(class.sin_sign) * h.b;
                }
            }
            Ok(FoldExcess {
                da,
                db,
                m_used,
                tail_bound: 0.0,
            })
        }
        kind => {
            let p = signal.decay_exponent().expect("power-decay signal");
            let scale = (len as f64).powf(-p);
            // each zeta value carries at most tol / 2 after scaling
            let zeta_tol = 0.5 * tol / scale;
            if k == 0 {
                let em = hurwitz_zeta_within(p, 1.0, zeta_tol, FOLD_TERM_CAP)?;
                let d = 2.0 * scale * em.value;
                let (da, db) = if kind == SignalKind::PowerDecaySine {
                    (0.0, 0.0)
                } else {
                    (d, 0.0)
                };
                return Ok(FoldExcess {
                    da,
                    db,
                    m_used: em.terms.max(1),
                    tail_bound: 2.0 * scale * em.remainder,
                });
            }
            let a = k as f64 / len as f64;
            let plus = hurwitz_zeta_within(p, 1.0 + a, zeta_tol, FOLD_TERM_CAP)?;
            // sum_{m>=1} (mN - k)^{-p} = N^{-p} zeta(p, 1 - k/N)
            let minus =
                hurwitz_zeta_within(p, (len - k) as f64 / len as f64, zeta_tol, FOLD_TERM_CAP)?;
            let (sp, sm) = (scale * plus.value, scale * minus.value);
            let (da, db) = if kind == SignalKind::PowerDecaySine {
                (0.0, sp - sm)
            } else {
                (sp + sm, 0.0)
            };
            Ok(FoldExcess {
                da,
                db,
                m_used: plus.terms.max(minus.terms).max(1),
                tail_bound: scale * (plus.remainder + minus.remainder),
            })
        }
    }
}

/// Fold sum onto band index `k` (`0..=n`), truncated so the neglected tail
/// is below `tol`.
pub fn folded_coeffs(
    signal: &AnalyticSignal,
    grid: &UniformGrid,
    k: usize,
    tol: f64,
) -> Result<FoldReport> {
    check_tol(tol)?;
    check_band(k, grid)?;
    let excess = fold_excess(signal, grid, k, tol)?;
    let (a, b) = signal.true_coeff(k as u64);
    Ok(FoldReport {
        k,
        folded_value_a: a + excess.da,
        folded_value_b: b + excess.db,
        m_used: excess.m_used,
        tail_bound: excess.tail_bound,
    })
}

/// Sum of `(mN + k)^{-s} + (mN - k)^{-s}` over `m >= 1`, plus the
/// Euler-Maclaurin remainder bounds so the result never underestimates.
fn fold_power_sum(s: f64, grid: &UniformGrid, k: usize, tol: f64) -> Result<f64> {
    let len = grid.len() as f64;
    let scale = len.powf(-s);
    let zeta_tol = 0.5 * tol / scale;
    let (plus, minus) = if k == 0 {
        let z = hurwitz_zeta_within(s, 1.0, zeta_tol, FOLD_TERM_CAP)?;
        (z, z)
    } else {
        let a = k as f64 / len;
        (
            hurwitz_zeta_within(s, 1.0 + a, zeta_tol, FOLD_TERM_CAP)?,
            hurwitz_zeta_within(s, 1.0 - a, zeta_tol, FOLD_TERM_CAP)?,
        )
    };
    Ok(scale * (plus.value + plus.remainder + minus.value + minus.remainder))
}

/// Upper bound on `|a_k - a*_k|` and `|b_k - b*_k|` for any signal of the
/// class: `(Var/π) sum_{m>=1} [(mN+k)^{-(r+1)} + (mN-k)^{-(r+1)}]`.
/// Infinite for `r = 0`, where the series diverges.
pub fn aliasing_error_bound(
    k: usize,
    grid: &UniformGrid,
    smoothness: &SmoothnessInfo,
    tol: f64,
) -> Result<f64> {
    check_tol(tol)?;
    if k == 0 || k > grid.n() {
        return Err(SpectralError::domain(format!(
            "aliasing bound needs 1 <= k <= {}, got {k}",
            grid.n()
        )));
    }
    if smoothness.variation == 0.0 {
        return Ok(0.0);
    }
    if smoothness.r == 0 {
        return Ok(f64::INFINITY);
    }
    let sum = fold_power_sum(smoothness.r as f64 + 1.0, grid, k, tol)?;
    Ok(smoothness.variation / PI * sum)
}

/// DC analogue of [`aliasing_error_bound`]: `|a*_0 - a_0| <= 2 (Var/π) sum (mN)^{-(r+1)}`.
pub fn dc_aliasing_error_bound(
    grid: &UniformGrid,
    smoothness: &SmoothnessInfo,
    tol: f64,
) -> Result<f64> {
    check_tol(tol)?;
    if smoothness.variation == 0.0 {
        return Ok(0.0);
    }
    if smoothness.r == 0 {
        return Ok(f64::INFINITY);
    }
    let sum = fold_power_sum(smoothness.r as f64 + 1.0, grid, 0, tol)?;
    Ok(smoothness.variation / PI * sum)
}

/// `f_n(t)`: the part of the signal carried by `a_0, a_k, b_k`, `k <= n`.
pub fn band_component(signal: &AnalyticSignal, n: usize, t: f64) -> Result<f64> {
    if n < 1 {
        return Err(SpectralError::domain("band_component needs n >= 1"));
    }
    Ok(signal.partial_sum(n as u64, t))
}

/// `f_n*(t)`: the out-of-band harmonics `mN ± k` (`k = 1..n`, `m >= 1`) at
/// their own frequencies. The constant-at-the-nodes harmonics `mN` are
/// excluded. At every grid node `f*(t_j) = f_n(t_j) + f_n*(t_j) + sum_m a_{mN}`.
pub fn residual_component(
    signal: &AnalyticSignal,
    grid: &UniformGrid,
    t: f64,
    tol: f64,
) -> Result<f64> {
    check_tol(tol)?;
    let len = grid.len();
    let n = grid.n();
    match signal.kind() {
        SignalKind::HarmonicSum => Ok(signal
            .terms()
            .iter()
            .filter(|h| h.k as usize > n && !(h.k as usize).is_multiple_of(len))
            .map(|h| {
                let (s, c) = (h.k as f64 * t).sin_cos();
                h.a * c + h.b * s
            })
            .sum()),
        kind => {
            let p = signal.decay_exponent().expect("power-decay signal");
            // sum_m (mN)^{-p} e^{i mN t} = N^{-p} Li_p(e^{iNt})
            let li =
                LerchSeries::new(p, 1.0)?.eval((len as f64 * t).rem_euclid(std::f64::consts::TAU));
            let dc_family = (len as f64).powf(-p)
                * if kind == SignalKind::PowerDecaySine {
                    li.im
                } else {
                    li.re
                };
            Ok(signal.value(t) - signal.partial_sum(n as u64, t) - dc_family)
        }
    }
}

/// The fold excess placed at band frequencies:
/// `(a*_0 - a_0)/2 + sum_k [(a*_k - a_k) cos kt + (b*_k - b_k) sin kt]`.
/// With it `f*(t) = f_n(t) + aliased_residual(t)` holds for every `t`.
pub fn aliased_residual(
    signal: &AnalyticSignal,
    grid: &UniformGrid,
    t: f64,
    tol: f64,
) -> Result<f64> {
    check_tol(tol)?;
    let per_term_tol = tol / (grid.len() as f64);
    let mut sum = 0.5 * fold_excess(signal, grid, 0, per_term_tol)?.da;
    for k in 1..=grid.n() {
        let e = fold_excess(signal, grid, k, per_term_tol)?;
        let (s, c) = (k as f64 * t).sin_cos();
        sum += e.da * c + e.db * s;
    }
    Ok(sum)
}

/// `2 Var / n^r`, a bound on `sup_t |f_n(t) - f*(t)|`; needs `r >= 1`.
pub fn time_domain_bound(n: usize, smoothness: &SmoothnessInfo) -> Result<f64> {
    if n < 1 {
        return Err(SpectralError::domain("time-domain bound needs n >= 1"));
    }
    if smoothness.r == 0 {
        return Err(SpectralError::domain("time-domain bound needs r >= 1"));
    }
    Ok(2.0 * smoothness.variation / (n as f64).powi(smoothness.r as i32))
}

/// One row of the fold-versus-DFT comparison.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FoldRow {
    pub fold: FoldReport,
    pub dft_a: f64,
    pub dft_b: f64,
    /// Aliasing bound on `|a_k - a*_k|` (DC analogue for `k = 0`).
    pub bound: f64,
}

impl FoldRow {
    pub fn abs_diff_a(&self) -> f64 {
        (self.fold.folded_value_a - self.dft_a).abs()
    }

    pub fn abs_diff_b(&self) -> f64 {
        (self.fold.folded_value_b - self.dft_b).abs()
    }
}

/// Fold sums against the discrete coefficients of the sampled signal for
/// every band index `0..=n`.
pub fn fold_table(signal: &AnalyticSignal, grid: &UniformGrid, tol: f64) -> Result<Vec<FoldRow>> {
    check_tol(tol)?;
    let spectrum = discrete_coeffs(&sample(signal, *grid)?);
    let smoothness = signal.smoothness();
    (0..=grid.n())
        .map(|k| {
            let fold = folded_coeffs(signal, grid, k, tol)?;
            let (dft_a, dft_b) = spectrum.coeff(k);
            let bound = if k == 0 {
                dc_aliasing_error_bound(grid, &smoothness, tol)?
            } else {
                aliasing_error_bound(k, grid, &smoothness, tol)?
            };
            Ok(FoldRow {
                fold,
                dft_a,
                dft_b,
                bound,
            })
        })
        .collect()
}

pub fn fold_table_csv(rows: &[FoldRow]) -> String {
    let mut table = CsvTable::new(&[
        "k",
        "a_star_fold",
        "b_star_fold",
        "a_star_dft",
        "b_star_dft",
        "abs_diff_a",
        "abs_diff_b",
        "bound8",
    ]);
    for row in rows {
        table.row(&[
            row.fold.k.into(),
            row.fold.folded_value_a.into(),
            row.fold.folded_value_b.into(),
            row.dft_a.into(),
            row.dft_b.into(),
            row.abs_diff_a().into(),
            row.abs_diff_b().into(),
            row.bound.into(),
        ]);
    }
    table.into_string()
}
