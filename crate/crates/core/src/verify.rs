//! Bound verification: each bound is turned into rows of
//! `k, measured, bound, holds`.

use std::fmt;
use std::str::FromStr;

use crate::alias::{aliasing_error_bound, time_domain_bound};
use crate::error::{Result, SpectralError};
use crate::filon::{filon_table, sup_distance, QuadratureConfig};
use crate::kernel::KernelConfig;
use crate::output::CsvTable;
use crate::sampling::{discrete_coeffs, sample};
use crate::signal::{coefficient_bound, AnalyticSignal};
use crate::spline::build_spline;

/// Multiplier on bounds whose evaluation depends on a dense-grid estimate.
pub const DENSE_GRID_SLACK: f64 = 1.1;
/// Absolute allowance for round-off in measured quantities.
pub const ROUNDOFF_ALLOWANCE: f64 = 1e-12;
/// Grid for the sup-norm estimates.
pub const SUP_POINTS: usize = 1 << 14;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoundKind {
    /// `max(|a_k|, |b_k|) <= Var / (π k^{r+1})`
    Coefficient,
    /// `|a_k - a*_k| <= (Var/π) sum_m [(mN+k)^{-(r+1)} + (mN-k)^{-(r+1)}]`
    Alias,
    /// `sup |f_n - f*| <= 2 Var / n^r`
    Time,
    /// `|a_k - â_k| <= (4/π) sup |f - St|`
    Cnorm,
    /// `|a_k - â_k| <= Var[(f - St)^{(q)}] / (π k^{q+1})`
    Refined,
}

impl BoundKind {
    pub const ALL: [BoundKind; 5] = [
        BoundKind::Coefficient,
        BoundKind::Alias,
        BoundKind::Time,
        BoundKind::Cnorm,
        BoundKind::Refined,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            BoundKind::Coefficient => "coeff",
            BoundKind::Alias => "alias",
            BoundKind::Time => "time",
            BoundKind::Cnorm => "cnorm",
            BoundKind::Refined => "refined",
        }
    }

    fn slack(self) -> f64 {
        match self {
            BoundKind::Cnorm | BoundKind::Refined => DENSE_GRID_SLACK,
            _ => 1.0,
        }
    }
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for BoundKind {
    type Err = SpectralError;

    fn from_str(s: &str) -> Result<Self> {
        BoundKind::ALL
            .into_iter()
            .find(|k| k.tag() == s)
            .ok_or_else(|| {
                SpectralError::domain(format!(
                    "unknown bound kind '{s}' (expected coeff, alias, time, cnorm or refined)"
                ))
            })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundRow {
    pub k: u64,
    pub measured: f64,
    pub bound: f64,
    pub holds: bool,
}

fn row(kind: BoundKind, k: u64, measured: f64, bound: f64) -> BoundRow {
    BoundRow {
        k,
        measured,
        bound,
        holds: measured <= bound * kind.slack() + ROUNDOFF_ALLOWANCE,
    }
}

/// Check one bound for `signal` sampled on `config.grid`. Spline-based
/// kinds build the spline described by `config`. Every bound is multiplied
/// by `bound_scale` before the comparison.
pub fn check_bound(
    kind: BoundKind,
    signal: &AnalyticSignal,
    config: &KernelConfig,
    bound_scale: f64,
) -> Result<Vec<BoundRow>> {
    if !(bound_scale > 0.0 && bound_scale.is_finite()) {
        return Err(SpectralError::domain(format!(
            "bound scale must be positive, got {bound_scale}"
        )));
    }
    config.validate()?;
    let grid = config.grid;
    let n = grid.n();
    let len = grid.len() as u64;
    let smoothness = signal.smoothness();
    let samples = sample(signal, grid)?;

    match kind {
        BoundKind::Coefficient => (1..=4 * len)
            .map(|k| {
                let (a, b) = signal.true_coeff(k);
                let bound = coefficient_bound(&smoothness, k)? * bound_scale;
                Ok(row(kind, k, a.abs().max(b.abs()), bound))
            })
            .collect(),
        BoundKind::Alias => {
            let spectrum = discrete_coeffs(&samples);
            (1..=n)
                .map(|k| {
                    let (a, b) = signal.true_coeff(k as u64);
                    let (da, db) = spectrum.coeff(k);
                    let measured = (a - da).abs().max((b - db).abs());
                    let bound =
                        aliasing_error_bound(k, &grid, &smoothness, config.tail_tol)? * bound_scale;
                    Ok(row(kind, k as u64, measured, bound))
                })
                .collect()
        }
        BoundKind::Time => {
            let bound = time_domain_bound(n, &smoothness)? * bound_scale;
            let spectrum = discrete_coeffs(&samples);
            let band = |t: f64| signal.partial_sum(n as u64, t);
            let measured = sup_distance(&band, &spectrum, SUP_POINTS)?;
            Ok(vec![row(kind, n as u64, measured, bound)])
        }
        BoundKind::Cnorm | BoundKind::Refined => {
            let spline = build_spline(&samples, config)?;
            let ks: Vec<u64> = (1..=4 * len).collect();
            let rows = filon_table(
                signal,
                &spline,
                &ks,
                &QuadratureConfig::default(),
                SUP_POINTS,
            )?;
            Ok(rows
                .iter()
                .map(|r| {
                    let bound = if kind == BoundKind::Cnorm {
                        r.cnorm_bound
                    } else {
                        r.refined_bound
                    };
                    row(kind, r.k, r.error(), bound * bound_scale)
                })
                .collect())
        }
    }
}

pub fn bound_rows_csv(rows: &[BoundRow]) -> String {
    let mut table = CsvTable::new(&["k", "measured", "bound", "holds"]);
    for r in rows {
        table.row(&[
            r.k.into(),
            r.measured.into(),
            r.bound.into(),
            r.holds.into(),
        ]);
    }
    table.into_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::SigmaVariant;
    use crate::sampling::make_grid;
    use crate::signal::suite_signal;

    fn cfg(n: usize) -> KernelConfig {
        KernelConfig::new(3, make_grid(n).unwrap(), SigmaVariant::SincPower).unwrap()
    }

    #[test]
    fn all_bounds_hold_on_cos_p4() {
        let f = suite_signal("cos-p4").unwrap();
        for kind in BoundKind::ALL {
            let rows = check_bound(kind, &f, &cfg(4), 1.0).unwrap();
            assert!(!rows.is_empty());
            assert!(rows.iter().all(|r| r.holds), "{kind}");
        }
    }

    #[test]
    fn scaled_bound_fails() {
        let f = suite_signal("cos-p4").unwrap();
        let rows = check_bound(BoundKind::Alias, &f, &cfg(4), 1e-6).unwrap();
        assert!(rows.iter().any(|r| !r.holds));
        assert!(check_bound(BoundKind::Alias, &f, &cfg(4), 0.0).is_err());
    }

    #[test]
    fn time_bound_needs_smoothness() {
        let f = suite_signal("cos-p2").unwrap();
        assert!(check_bound(BoundKind::Time, &f, &cfg(4), 1.0).is_err());
    }

    #[test]
    fn csv_shape() {
        let f = suite_signal("harmonic-inband").unwrap();
        let rows = check_bound(BoundKind::Alias, &f, &cfg(2), 1.0).unwrap();
        let csv = bound_rows_csv(&rows);
        assert!(csv.starts_with("k,measured,bound,holds\n"));
        assert_eq!(csv.lines().count(), 3);
    }

    #[test]
    fn parse_kinds() {
        for k in BoundKind::ALL {
            assert_eq!(k.tag().parse::<BoundKind>().unwrap(), k);
        }
        assert!("nope".parse::<BoundKind>().is_err());
    }
}
