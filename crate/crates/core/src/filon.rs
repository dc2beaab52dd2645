//! Fourier coefficients of an arbitrary evaluable approximant by dense
//! quadrature, and the two bounds on how far they sit from the true
//! coefficients.

use std::f64::consts::{PI, TAU};

use crate::error::{Result, SpectralError};
use crate::function::PeriodicFunction;
use crate::output::CsvTable;
use crate::signal::{total_variation, AnalyticSignal};
use crate::spline::TrigSpline;

/// Grid used when the variation of a derivative difference is measured.
pub const VARIATION_POINTS: usize = 1 << 16;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureConfig {
    /// Starting grid size; raised to a power of two of at least `32 max(k, 1)`.
    pub points: usize,
    pub max_doublings: u32,
    pub convergence_tol: f64,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        QuadratureConfig {
            points: 1024,
            max_doublings: 12,
            convergence_tol: 1e-11,
        }
    }
}

impl QuadratureConfig {
    pub fn validate(&self) -> Result<()> {
        if self.points < 256 {
            return Err(SpectralError::domain(format!(
                "quadrature needs at least 256 points, got {}",
                self.points
            )));
        }
        if !(self.convergence_tol > 0.0 && self.convergence_tol.is_finite()) {
            return Err(SpectralError::domain("convergence_tol must be positive"));
        }
        Ok(())
    }
}

/// `(1/π) ∫ f cos kt` and `(1/π) ∫ f sin kt` by the periodic trapezoid rule.
pub fn quad_fourier_coeff<F: PeriodicFunction + ?Sized>(
    f: &F,
    k: u64,
    qc: &QuadratureConfig,
) -> Result<(f64, f64)> {
    let out = filon_coeffs(f, &[k], qc)?;
    Ok((out[0].1, out[0].2))
}

fn angle_table(points: usize) -> Vec<(f64, f64)> {
    (0..points)
        .map(|i| (TAU * i as f64 / points as f64).sin_cos())
        .collect()
}

fn trapezoid(values: &[f64], k: u64, table: &[(f64, f64)]) -> (f64, f64) {
    let p = values.len() as u64;
    let step = k % p;
    let (mut a, mut b) = (0.0, 0.0);
    let mut idx = 0u64;
    for &v in values {
        // k t_i reduced exactly to 2π (k i mod P) / P
        let (s, c) = table[idx as usize];
        a += v * c;
        b += v * s;
        idx = (idx + step) % p;
    }
    let scale = 2.0 / p as f64;
    (scale * a, scale * b)
}

/// Coefficients `(k, â_k, b̂_k)` of `phi` for every `k` in `ks`, sharing
/// the samples across `k`. The grid doubles until every coefficient moves
/// by at most `convergence_tol`.
pub fn filon_coeffs<F: PeriodicFunction + ?Sized>(
    phi: &F,
    ks: &[u64],
    qc: &QuadratureConfig,
) -> Result<Vec<(u64, f64, f64)>> {
    qc.validate()?;
    if ks.is_empty() {
        return Ok(Vec::new());
    }
    let k_max = ks.iter().copied().max().unwrap_or(0).max(1) as usize;
    let mut points = qc.points.max(32 * k_max).next_power_of_two();
    let mut values: Vec<f64> = (0..points)
        .map(|i| phi.value(TAU * i as f64 / points as f64))
        .collect();
    let table = angle_table(points);
    let mut estimates: Vec<(f64, f64)> =
        ks.iter().map(|&k| trapezoid(&values, k, &table)).collect();

    let tol = qc.convergence_tol;
    let mut failure = None;
    for _ in 0..qc.max_doublings {
        let doubled = points * 2;
        let mut next = Vec::with_capacity(doubled);
        for (i, &v) in values.iter().enumerate() {
            next.push(v);
            next.push(phi.value(TAU * (2 * i + 1) as f64 / doubled as f64));
        }
        points = doubled;
        values = next;
        let table = angle_table(points);
        let refined: Vec<(f64, f64)> = ks.iter().map(|&k| trapezoid(&values, k, &table)).collect();
        let moving = refined
            .iter()
            .zip(&estimates)
            .position(|(new, old)| (new.0 - old.0).abs() > tol || (new.1 - old.1).abs() > tol);
        match moving {
            None => {
                return Ok(ks
                    .iter()
                    .zip(refined)
                    .map(|(&k, (a, b))| (k, a, b))
                    .collect())
            }
            Some(i) => failure = Some((i, refined[i], estimates[i])),
        }
        estimates = refined;
    }
    // with no doublings allowed there is nothing to compare against
    let (i, last, previous) = failure.unwrap_or((0, estimates[0], estimates[0]));
    Err(SpectralError::QuadratureFailure {
        k: ks[i] as usize,
        last,
        previous,
    })
}

/// `(4/π) sup_error`, a bound on `|a_k - â_k|` and `|b_k - b̂_k|` for every `k`.
pub fn cnorm_error_bound(sup_error: f64) -> Result<f64> {
    if !(sup_error >= 0.0) {
        return Err(SpectralError::domain(format!(
            "sup error must be non-negative, got {sup_error}"
        )));
    }
    Ok(4.0 / PI * sup_error)
}

/// `Var[(f - φ)^{(q)}] / (π k^{q+1})`.
pub fn refined_error_bound(k: u64, q: u32, diff_variation: f64) -> Result<f64> {
    if k == 0 {
        return Err(SpectralError::domain("refined bound needs k >= 1"));
    }
    if !(diff_variation >= 0.0) {
        return Err(SpectralError::domain(format!(
            "variation must be non-negative, got {diff_variation}"
        )));
    }
    Ok(diff_variation / (PI * (k as f64).powi(q as i32 + 1)))
}

/// `max |f - g|` over a uniform grid of `points` nodes. A lower estimate of
/// the true sup norm.
pub fn sup_distance<F, G>(f: &F, g: &G, points: usize) -> Result<f64>
where
    F: PeriodicFunction + ?Sized,
    G: PeriodicFunction + ?Sized,
{
    if points < 1024 {
        return Err(SpectralError::domain(format!(
            "sup_distance needs at least 1024 points, got {points}"
        )));
    }
    let h = TAU / points as f64;
    Ok((0..points)
        .map(|i| {
            let t = i as f64 * h;
            (f.value(t) - g.value(t)).abs()
        })
        .fold(0.0, f64::max))
}

/// Measured `Var[(f - St)^{(q)}]` on `points` offset nodes, with both
/// derivatives in closed form.
pub fn difference_variation(
    f: &AnalyticSignal,
    spline: &TrigSpline,
    q: u32,
    points: usize,
) -> Result<f64> {
    let df = f.derivative_evaluator(q)?;
    let ds = spline.derivative_evaluator(q)?;
    let diff = |t: f64| df.value(t) - ds.value(t);
    Ok(total_variation(&diff, points))
}

/// `q = min(r_f, m)`: the derivative order used in the refined bound.
pub fn refined_order(f: &AnalyticSignal, spline: &TrigSpline) -> u32 {
    f.smoothness().r.min(spline.smoothness_order())
}

/// One row of the Filon comparison table.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FilonRow {
    pub k: u64,
    pub a_hat: f64,
    pub b_hat: f64,
    pub a_true: f64,
    pub b_true: f64,
    pub cnorm_bound: f64,
    pub refined_bound: f64,
}

impl FilonRow {
    /// `max(|a_k - â_k|, |b_k - b̂_k|)`.
    pub fn error(&self) -> f64 {
        (self.a_true - self.a_hat)
            .abs()
            .max((self.b_true - self.b_hat).abs())
    }
}

/// Quadrature coefficients of the spline against the true coefficients of
/// `f`, with both bounds, for `k` in `ks` (each `k >= 1`).
pub fn filon_table(
    f: &AnalyticSignal,
    spline: &TrigSpline,
    ks: &[u64],
    qc: &QuadratureConfig,
    sup_points: usize,
) -> Result<Vec<FilonRow>> {
    if ks.contains(&0) {
        return Err(SpectralError::domain("Filon table rows need k >= 1"));
    }
    let coeffs = filon_coeffs(spline, ks, qc)?;
    let sup = sup_distance(f, spline, sup_points)?;
    let cnorm = cnorm_error_bound(sup)?;
    let q = refined_order(f, spline);
    let var = difference_variation(f, spline, q, VARIATION_POINTS)?;
    coeffs
        .into_iter()
        .map(|(k, a_hat, b_hat)| {
            let (a_true, b_true) = f.true_coeff(k);
            Ok(FilonRow {
                k,
                a_hat,
                b_hat,
                a_true,
                b_true,
                cnorm_bound: cnorm,
                refined_bound: refined_error_bound(k, q, var)?,
            })
        })
        .collect()
}

pub fn filon_table_csv(rows: &[FilonRow]) -> String {
    let mut table = CsvTable::new(&[
        "k",
        "a_hat",
        "b_hat",
        "a_true",
        "b_true",
        "cnorm_bound",
        "refined_bound",
    ]);
    for row in rows {
        table.row(&[
            row.k.into(),
            row.a_hat.into(),
            row.b_hat.into(),
            row.a_true.into(),
            row.b_true.into(),
            row.cnorm_bound.into(),
            row.refined_bound.into(),
        ]);
    }
    table.into_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{KernelConfig, SigmaVariant};
    use crate::sampling::{make_grid, sample};
    use crate::signal::suite_signal;
    use crate::spline::build_spline;
    use approx::assert_relative_eq;

    #[test]
    fn orthogonality() {
        let qc = QuadratureConfig::default();
        let f = |t: f64| (3.0 * t).cos();
        let (a, b) = quad_fourier_coeff(&f, 3, &qc).unwrap();
        assert!((a - 1.0).abs() < 1e-12 && b.abs() < 1e-12);
        let (a, b) = quad_fourier_coeff(&f, 2, &qc).unwrap();
        assert!(a.abs() < 1e-12 && b.abs() < 1e-12);
    }

    #[test]
    fn filon_examples() {
        let qc = QuadratureConfig::default();
        let out = filon_coeffs(&|t: f64| t.cos(), &[1, 2, 3], &qc).unwrap();
        assert!((out[0].1 - 1.0).abs() < 1e-12);
        for row in &out[1..] {
            assert!(row.1.abs() < 1e-12 && row.2.abs() < 1e-12);
        }
        let out = filon_coeffs(&|_t: f64| 1.0, &[1, 2, 5], &qc).unwrap();
        assert!(out.iter().all(|r| r.1.abs() < 1e-12 && r.2.abs() < 1e-12));
    }

    #[test]
    fn spline_coefficients_by_quadrature() {
        let f = suite_signal("cos-p6").unwrap();
        let grid = make_grid(8).unwrap();
        let cfg = KernelConfig::new(3, grid, SigmaVariant::SincPower).unwrap();
        let st = build_spline(&sample(&f, grid).unwrap(), &cfg).unwrap();
        let ks: Vec<u64> = (1..=34).collect();
        let out = filon_coeffs(&st, &ks, &QuadratureConfig::default()).unwrap();
        for (k, a, b) in out {
            let (ea, eb) = st.fourier_coeff(k);
            assert!((a - ea).abs() < 1e-8 && (b - eb).abs() < 1e-8, "k={k}");
        }
    }

    #[test]
    fn non_convergence_reports_failure() {
        // a jump makes the coefficient estimates drift at O(1/P)
        let step = |t: f64| if t < 1.0 { 1.0 } else { 0.0 };
        let qc = QuadratureConfig {
            points: 256,
            max_doublings: 2,
            convergence_tol: 1e-14,
        };
        let err = quad_fourier_coeff(&step, 1, &qc).unwrap_err();
        assert!(matches!(err, SpectralError::QuadratureFailure { k: 1, .. }));
    }

    #[test]
    fn bound_arithmetic() {
        assert_eq!(cnorm_error_bound(0.0).unwrap(), 0.0);
        assert_relative_eq!(cnorm_error_bound(PI / 4.0).unwrap(), 1.0);
        assert!(cnorm_error_bound(-1.0).is_err());
        assert_eq!(refined_error_bound(3, 2, 0.0).unwrap(), 0.0);
        assert_relative_eq!(refined_error_bound(2, 2, PI).unwrap(), 0.125);
        assert!(refined_error_bound(0, 2, 1.0).is_err());
    }

    #[test]
    fn sup_distance_examples() {
        let f = |t: f64| t.cos();
        assert_eq!(sup_distance(&f, &f, 1024).unwrap(), 0.0);
        let zero = |_t: f64| 0.0;
        assert!((sup_distance(&f, &zero, 4096).unwrap() - 1.0).abs() < 1e-6);
        assert!(sup_distance(&f, &zero, 512).is_err());
    }

    #[test]
    fn config_validation() {
        let mut qc = QuadratureConfig::default();
        qc.points = 128;
        assert!(qc.validate().is_err());
        qc.points = 256;
        qc.convergence_tol = 0.0;
        assert!(qc.validate().is_err());
    }
}
