//! Periodic test signals with analytically known Fourier coefficients.
//!
//! Two families are provided. A [`SignalKind::HarmonicSum`] is a finite
//! trigonometric polynomial given by its terms. The power-decay kinds have
//! `a_k = k^{-p}` (cosine) or `b_k = k^{-p}` (sine) for every `k >= 1`; they
//! are evaluated in closed form through the polylogarithm
//! `Li_p(e^{it}) = sum_k k^{-p} e^{ikt}`, so no slowly converging partial sum
//! is ever needed.
//!
//! Every signal carries a [`SmoothnessInfo`]: the order `r` such that
//! `f^{(r)}` has bounded variation, and that variation. The coefficient bound
//! `|a_k|, |b_k| <= Var f^{(r)} / (pi k^{r+1})` and all aliasing bounds are
//! derived from it.

use std::f64::consts::{PI, TAU};

use serde::{Deserialize, Serialize};

use crate::error::{Result, SpectralError};
use crate::function::{rotate_quarter_turns, PeriodicFunction, TermwiseDerivative};
use crate::special::LerchSeries;

/// `Cl_2(pi/3)`, the maximum of the Clausen function.
pub const CLAUSEN_MAX: f64 = 1.014_941_606_409_653_6;

/// Smoothness class of a signal: `f^{(r)}` has total variation `variation`
/// over one period.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SmoothnessInfo {
    pub r: u32,
    pub variation: f64,
}

impl SmoothnessInfo {
    pub fn new(r: u32, variation: f64) -> Result<Self> {
        if !(variation.is_finite() && variation >= 0.0) {
            return Err(SpectralError::InvalidSignal(format!(
                "variation must be finite and nonnegative, got {variation}"
            )));
        }
        Ok(SmoothnessInfo { r, variation })
    }
}

/// `(1/pi) Var f^{(r)} / k^{r+1}`, an upper bound on `|a_k|` and `|b_k|`.
pub fn coefficient_bound(smoothness: &SmoothnessInfo, k: u64) -> Result<f64> {
    if k == 0 {
        return Err(SpectralError::domain(
            "coefficient bound is defined for k >= 1",
        ));
    }
    Ok(smoothness.variation / (PI * (k as f64).powi(smoothness.r as i32 + 1)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SignalKind {
    HarmonicSum,
    PowerDecayCosine,
    PowerDecaySine,
}

/// One term `a cos kt + b sin kt`; for `k = 0` the term contributes `a/2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Harmonic {
    pub k: u32,
    pub a: f64,
    pub b: f64,
}

impl Harmonic {
    pub fn new(k: u32, a: f64, b: f64) -> Self {
        Harmonic { k, a, b }
    }
}

#[derive(Debug, Clone)]
enum Series {
    Harmonics(Vec<Harmonic>),
    PowerDecay {
        p: f64,
        sine: bool,
        kernel: LerchSeries,
    },
}

/// An immutable 2π-periodic signal with closed-form Fourier coefficients.
#[derive(Debug, Clone)]
pub struct AnalyticSignal {
    series: Series,
    smoothness: SmoothnessInfo,
}

impl AnalyticSignal {
    /// Finite harmonic sum; the variation of `f^{(r)}` is computed from the
    /// terms.
    pub fn harmonic_sum(terms: impl IntoIterator<Item = Harmonic>, r: u32) -> Result<Self> {
        let mut terms: Vec<Harmonic> = terms.into_iter().collect();
        terms.sort_by_key(|h| h.k);
        for pair in terms.windows(2) {
            if pair[0].k == pair[1].k {
                return Err(SpectralError::InvalidSignal(format!(
                    "duplicate harmonic k = {}",
                    pair[0].k
                )));
            }
        }
        for h in &terms {
            if !(h.a.is_finite() && h.b.is_finite()) {
                return Err(SpectralError::InvalidSignal(format!(
                    "non-finite coefficient at k = {}",
                    h.k
                )));
            }
            if h.k == 0 && h.b != 0.0 {
                return Err(SpectralError::InvalidSignal(
                    "the k = 0 term has no sine part".into(),
                ));
            }
        }
        let variation = harmonic_variation(&terms, r);
        Ok(AnalyticSignal {
            series: Series::Harmonics(terms),
            smoothness: SmoothnessInfo::new(r, variation)?,
        })
    }

    /// `a_k = k^{-p}`, `b_k = 0`.
    pub fn power_decay_cosine(p: f64, smoothness: SmoothnessInfo) -> Result<Self> {
        Self::power_decay(p, false, smoothness)
    }

    /// `a_k = 0`, `b_k = k^{-p}`.
    pub fn power_decay_sine(p: f64, smoothness: SmoothnessInfo) -> Result<Self> {
        Self::power_decay(p, true, smoothness)
    }

    fn power_decay(p: f64, sine: bool, smoothness: SmoothnessInfo) -> Result<Self> {
        if !(p.is_finite() && p > 1.0) {
            return Err(SpectralError::InvalidSignal(format!(
                "decay exponent must exceed 1, got {p}"
            )));
        }
        let kernel = LerchSeries::new(p, 1.0)?;
        Ok(AnalyticSignal {
            series: Series::PowerDecay { p, sine, kernel },
            smoothness,
        })
    }

    pub fn kind(&self) -> SignalKind {
        match &self.series {
            Series::Harmonics(_) => SignalKind::HarmonicSum,
            Series::PowerDecay { sine: false, .. } => SignalKind::PowerDecayCosine,
            Series::PowerDecay { sine: true, .. } => SignalKind::PowerDecaySine,
        }
    }

    pub fn smoothness(&self) -> SmoothnessInfo {
        self.smoothness
    }

    /// Decay exponent of the power-decay kinds.
    pub fn decay_exponent(&self) -> Option<f64> {
        match &self.series {
            Series::PowerDecay { p, .. } => Some(*p),
            Series::Harmonics(_) => None,
        }
    }

    pub fn terms(&self) -> &[Harmonic] {
        match &self.series {
            Series::Harmonics(terms) => terms,
            Series::PowerDecay { .. } => &[],
        }
    }

    /// Highest harmonic present, or `None` for an infinite series.
    pub fn max_harmonic(&self) -> Option<u32> {
        match &self.series {
            Series::Harmonics(terms) => Some(terms.last().map_or(0, |h| h.k)),
            Series::PowerDecay { .. } => None,
        }
    }

    pub fn eval(&self, t: f64) -> Result<f64> {
        if !t.is_finite() {
            return Err(SpectralError::domain(format!("cannot evaluate at t = {t}")));
        }
        Ok(self.value(t))
    }

    /// Exact coefficients `(a_k, b_k)`; `k = 0` gives `(a_0, 0)`.
    pub fn true_coeff(&self, k: u64) -> (f64, f64) {
        match &self.series {
            Series::Harmonics(terms) => terms
                .binary_search_by_key(&k, |h| h.k as u64)
                .map(|i| (terms[i].a, terms[i].b))
                .unwrap_or((0.0, 0.0)),
            Series::PowerDecay { p, sine, .. } => {
                if k == 0 {
                    (0.0, 0.0)
                } else {
                    let c = (k as f64).powf(-p);
                    if *sine {
                        (0.0, c)
                    } else {
                        (c, 0.0)
                    }
                }
            }
        }
    }

    /// `a_0/2 + sum_{k=1}^{n} (a_k cos kt + b_k sin kt)`.
    pub fn partial_sum(&self, n: u64, t: f64) -> f64 {
        match &self.series {
            Series::Harmonics(terms) => terms
                .iter()
                .filter(|h| h.k as u64 <= n)
                .map(|h| harmonic_value(h, t, 0))
                .sum(),
            Series::PowerDecay { .. } => {
                let mut sum = 0.0;
                for k in (1..=n).rev() {
                    let (a, b) = self.true_coeff(k);
                    let (s, c) = (k as f64 * t).sin_cos();
                    sum += a * c + b * s;
                }
                sum
            }
        }
    }

    /// `f^{(q)}(t)` in closed form.
    pub fn derivative(&self, t: f64, q: u32) -> Result<f64> {
        Ok(self.derivative_evaluator(q)?.value(t))
    }

    /// Evaluator for `f^{(q)}`; builds the lower-order polylogarithm once.
    pub fn derivative_evaluator(&self, q: u32) -> Result<SignalDerivative<'_>> {
        let kernel = match &self.series {
            Series::Harmonics(_) => None,
            Series::PowerDecay { p, kernel, .. } => {
                if q == 0 {
                    Some(kernel.clone())
                } else if p - q as f64 > 0.0 {
                    Some(LerchSeries::new(p - q as f64, 1.0)?)
                } else {
                    return Err(SpectralError::domain(format!(
                        "derivative of order {q} of a k^-{p} series does not converge"
                    )));
                }
            }
        };
        Ok(SignalDerivative {
            signal: self,
            order: q,
            kernel,
        })
    }

    /// Upper bound on `max(|a_j|, |b_j|)` valid for every `j >= 1`.
    pub fn coefficient_envelope(&self, j: u64) -> f64 {
        match &self.series {
            Series::Harmonics(_) => {
                let (a, b) = self.true_coeff(j);
                a.abs().max(b.abs())
            }
            Series::PowerDecay { p, .. } => (j as f64).powf(-p),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_doc()).expect("signal document serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: SignalDoc = serde_json::from_str(text)?;
        Self::from_doc(doc)
    }

    fn to_doc(&self) -> SignalDoc {
        let (terms, p) = match &self.series {
            Series::Harmonics(terms) => {
                (Some(terms.iter().map(|h| (h.k, h.a, h.b)).collect()), None)
            }
            Series::PowerDecay { p, .. } => (None, Some(*p)),
        };
        SignalDoc {
            kind: self.kind(),
            terms,
            p,
            r: Some(self.smoothness.r),
            variation: Some(self.smoothness.variation),
        }
    }

    fn from_doc(doc: SignalDoc) -> Result<Self> {
        match doc.kind {
            SignalKind::HarmonicSum => {
                let terms = doc.terms.ok_or_else(|| {
                    SpectralError::InvalidSignal("HarmonicSum requires \"terms\"".into())
                })?;
                Self::harmonic_sum(
                    terms.into_iter().map(|(k, a, b)| Harmonic::new(k, a, b)),
                    doc.r.unwrap_or(0),
                )
            }
            kind => {
                let missing = |field: &str| {
                    SpectralError::InvalidSignal(format!("{kind:?} requires \"{field}\""))
                };
                let p = doc.p.ok_or_else(|| missing("p"))?;
                let r = doc.r.ok_or_else(|| missing("r"))?;
                let variation = doc.variation.ok_or_else(|| missing("variation"))?;
                let smoothness = SmoothnessInfo::new(r, variation)?;
                Self::power_decay(p, kind == SignalKind::PowerDecaySine, smoothness)
            }
        }
    }
}

impl PeriodicFunction for AnalyticSignal {
    fn value(&self, t: f64) -> f64 {
        match &self.series {
            Series::Harmonics(terms) => terms.iter().map(|h| harmonic_value(h, t, 0)).sum(),
            Series::PowerDecay { sine, kernel, .. } => {
                let li = kernel.eval(t);
                if *sine {
                    li.im
                } else {
                    li.re
                }
            }
        }
    }
}

impl TermwiseDerivative for AnalyticSignal {
    fn termwise_derivative(&self, t: f64, order: u32) -> f64 {
        self.derivative(t, order).unwrap_or(f64::NAN)
    }
}

/// `f^{(q)}` of an [`AnalyticSignal`].
#[derive(Debug, Clone)]
pub struct SignalDerivative<'a> {
    signal: &'a AnalyticSignal,
    order: u32,
    kernel: Option<LerchSeries>,
}

impl PeriodicFunction for SignalDerivative<'_> {
    fn value(&self, t: f64) -> f64 {
        match (&self.signal.series, &self.kernel) {
            (Series::Harmonics(terms), _) => {
                terms.iter().map(|h| harmonic_value(h, t, self.order)).sum()
            }
            (Series::PowerDecay { sine, .. }, Some(kernel)) => {
                // d^q/dt^q Li_p(e^{it}) = i^q Li_{p-q}(e^{it})
                let li = kernel.eval(t);
                let (re, im) = rotate_quarter_turns(li.re, li.im, self.order);
                if *sine {
                    im
                } else {
                    re
                }
            }
            (Series::PowerDecay { .. }, None) => unreachable!("kernel built with the evaluator"),
        }
    }
}

fn harmonic_value(h: &Harmonic, t: f64, q: u32) -> f64 {
    if h.k == 0 {
        return if q == 0 { 0.5 * h.a } else { 0.0 };
    }
    let (s, c) = (h.k as f64 * t).sin_cos();
    let (c, s) = rotate_quarter_turns(c, s, q);
    (h.k as f64).powi(q as i32) * (h.a * c + h.b * s)
}

/// Total variation over one period estimated on the uniform grid
/// `t_i = (i + 1/2) 2π / points` (offset so grid nodes `2πl/N`, N odd, are
/// never hit). A lower estimate of the true variation.
pub fn total_variation<F: PeriodicFunction + ?Sized>(f: &F, points: usize) -> f64 {
    let h = TAU / points as f64;
    let first = f.value(0.5 * h);
    let mut prev = first;
    let mut tv = 0.0;
    for i in 1..points {
        let v = f.value((i as f64 + 0.5) * h);
        tv += (v - prev).abs();
        prev = v;
    }
    tv + (first - prev).abs()
}

/// Variation of `f^{(r)}` for a power-decay signal, measured on a `points`
/// grid from the closed-form derivative.
pub fn measure_power_decay_variation(p: f64, sine: bool, r: u32, points: usize) -> Result<f64> {
    let probe = AnalyticSignal::power_decay(p, sine, SmoothnessInfo::new(r, 0.0)?)?;
    let derivative = probe.derivative_evaluator(r)?;
    Ok(total_variation(&derivative, points))
}

/// Exact total variation of `f^{(r)}` for a trigonometric polynomial: the
/// extrema are the zeros of `f^{(r+1)}`, bracketed on a fine grid and refined
/// by bisection.
fn harmonic_variation(terms: &[Harmonic], r: u32) -> f64 {
    let k_max = terms.iter().map(|h| h.k).max().unwrap_or(0);
    if terms.iter().all(|h| h.k == 0 || (h.a == 0.0 && h.b == 0.0)) {
        return 0.0;
    }
    let g = |t: f64| -> f64 { terms.iter().map(|h| harmonic_value(h, t, r)).sum() };
    let dg = |t: f64| -> f64 { terms.iter().map(|h| harmonic_value(h, t, r + 1)).sum() };

    let points = (64 * k_max as usize).max(1024);
    let h = TAU / points as f64;
    let mut extrema = Vec::new();
    let mut prev_t = 0.0;
    let mut prev_v = dg(0.0);
    for i in 1..=points {
        let t = i as f64 * h;
        let v = dg(t);
        if prev_v == 0.0 {
            extrema.push(prev_t);
        } else if prev_v * v < 0.0 {
            let (mut lo, mut hi, mut lo_v) = (prev_t, t, prev_v);
            for _ in 0..80 {
                let mid = 0.5 * (lo + hi);
                let mv = dg(mid);
                if mv == 0.0 {
                    lo = mid;
                    hi = mid;
                    break;
                }
                if (mv < 0.0) == (lo_v < 0.0) {
                    lo = mid;
                    lo_v = mv;
                } else {
                    hi = mid;
                }
            }
            extrema.push(0.5 * (lo + hi));
        }
        prev_t = t;
        prev_v = v;
    }
    if extrema.len() < 2 {
        return 0.0;
    }
    let values: Vec<f64> = extrema.iter().map(|&t| g(t)).collect();
    let mut tv: f64 = values.windows(2).map(|w| (w[1] - w[0]).abs()).sum();
    tv += (values[0] - values[values.len() - 1]).abs();
    tv
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SignalDoc {
    kind: SignalKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    terms: Option<Vec<(u32, f64, f64)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    p: Option<f64>,
    #[serde(default)]
    r: Option<u32>,
    #[serde(default)]
    variation: Option<f64>,
}

/// A named member of the reference signal suite.
#[derive(Debug, Clone)]
pub struct SuiteSignal {
    pub name: &'static str,
    pub signal: AnalyticSignal,
}

/// The six reference signals used by the acceptance checks.
///
/// Power-decay classes use `r = p - 2`, so `f^{(r)}` is `± sum cos kt / k^2`
/// (a periodic quadratic, variation `pi^2 / 2`) or `± sum sin kt / k^2`
/// (the Clausen function, variation `4 Cl_2(pi/3)`).
pub fn suite() -> Vec<SuiteSignal> {
    let quadratic_variation = PI * PI / 2.0;
    let cos_class = |p: f64| {
        AnalyticSignal::power_decay_cosine(
            p,
            SmoothnessInfo::new(p as u32 - 2, quadratic_variation).expect("valid"),
        )
        .expect("valid suite signal")
    };
    vec![
        SuiteSignal {
            name: "harmonic-inband",
            signal: AnalyticSignal::harmonic_sum(
                [
                    Harmonic::new(0, 1.0, 0.0),
                    Harmonic::new(1, 1.0, 0.0),
                    Harmonic::new(2, 0.0, -0.5),
                ],
                3,
            )
            .expect("valid suite signal"),
        },
        SuiteSignal {
            name: "harmonic-mixed",
            signal: AnalyticSignal::harmonic_sum(
                [
                    Harmonic::new(1, 1.0, 0.0),
                    Harmonic::new(3, 0.5, 0.25),
                    Harmonic::new(7, -0.2, 0.1),
                    Harmonic::new(12, 0.05, -0.03),
                ],
                3,
            )
            .expect("valid suite signal"),
        },
        SuiteSignal {
            name: "cos-p2",
            signal: cos_class(2.0),
        },
        SuiteSignal {
            name: "cos-p4",
            signal: cos_class(4.0),
        },
        SuiteSignal {
            name: "cos-p6",
            signal: cos_class(6.0),
        },
        SuiteSignal {
            name: "sin-p4",
            signal: AnalyticSignal::power_decay_sine(
                4.0,
                SmoothnessInfo::new(2, 4.0 * CLAUSEN_MAX).expect("valid"),
            )
            .expect("valid suite signal"),
        },
    ]
}

/// Looks up a suite member by name.
pub fn suite_signal(name: &str) -> Option<AnalyticSignal> {
    suite()
        .into_iter()
        .find(|s| s.name == name)
        .map(|s| s.signal)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn single(k: u32, a: f64, b: f64) -> AnalyticSignal {
        AnalyticSignal::harmonic_sum([Harmonic::new(k, a, b)], 1).unwrap()
    }

    #[test]
    fn eval_examples() {
        assert_relative_eq!(single(1, 1.0, 0.0).eval(0.0).unwrap(), 1.0);
        assert_relative_eq!(
            single(2, 0.0, 1.0).eval(PI / 4.0).unwrap(),
            1.0,
            epsilon = 1e-15
        );
        assert!(single(1, 1.0, 0.0).eval(f64::NAN).is_err());
        assert!(single(1, 1.0, 0.0).eval(f64::INFINITY).is_err());
    }

    #[test]
    fn power_decay_at_zero_is_zeta() {
        // brute-force partial sum with the integral tail K^{1-p}/(p-1)
        let k_max = 100_000u32;
        let partial: f64 = (1..=k_max).rev().map(|k| (k as f64).powi(-4)).sum();
        let brute = partial + (k_max as f64 + 0.5).powi(-3) / 3.0;
        let f = suite_signal("cos-p4").unwrap();
        assert_relative_eq!(f.eval(0.0).unwrap(), brute, max_relative = 1e-14);
        assert_relative_eq!(
            f.eval(0.0).unwrap(),
            1.082_323_233_711_138_2,
            max_relative = 1e-14
        );
    }

    #[test]
    fn true_coeff_examples() {
        let f = single(3, 2.0, -1.0);
        assert_eq!(f.true_coeff(3), (2.0, -1.0));
        assert_eq!(f.true_coeff(5), (0.0, 0.0));
        let g =
            AnalyticSignal::power_decay_cosine(2.0, SmoothnessInfo::new(0, 1.0).unwrap()).unwrap();
        assert_eq!(g.true_coeff(4), (0.0625, 0.0));
        assert_eq!(g.true_coeff(0), (0.0, 0.0));
    }

    #[test]
    fn coefficient_bound_examples() {
        let s = SmoothnessInfo::new(1, PI).unwrap();
        assert_relative_eq!(coefficient_bound(&s, 2).unwrap(), 0.25, epsilon = 1e-16);
        let s = SmoothnessInfo::new(0, 1.0).unwrap();
        assert_relative_eq!(
            coefficient_bound(&s, 1).unwrap(),
            std::f64::consts::FRAC_1_PI,
            epsilon = 1e-10
        );
        assert!(coefficient_bound(&s, 0).is_err());
    }

    #[test]
    fn coefficient_bound_holds_on_suite() {
        for member in suite() {
            let s = member.signal.smoothness();
            for k in 1..=64u64 {
                let (a, b) = member.signal.true_coeff(k);
                let bound = coefficient_bound(&s, k).unwrap();
                assert!(
                    a.abs() <= bound && b.abs() <= bound,
                    "{} k={k}",
                    member.name
                );
            }
        }
    }

    #[test]
    fn suite_variations_match_measurement() {
        for (p, sine, r) in [
            (2.0, false, 0),
            (4.0, false, 2),
            (6.0, false, 4),
            (4.0, true, 2),
        ] {
            let measured = measure_power_decay_variation(p, sine, r, 1 << 16).unwrap();
            let name = match (p as u32, sine) {
                (2, false) => "cos-p2",
                (4, false) => "cos-p4",
                (6, false) => "cos-p6",
                _ => "sin-p4",
            };
            let declared = suite_signal(name).unwrap().smoothness().variation;
            // grid variation is a lower estimate; kinks at t = 0 cost O(h)
            assert!(measured <= declared * (1.0 + 1e-12));
            assert_relative_eq!(measured, declared, max_relative = 1e-4);
        }
    }

    #[test]
    fn harmonic_variation_exact() {
        // Var of cos t is 4; of 0.5 sin 2t with r = 1 (cos 2t, two swings) 8
        assert_relative_eq!(
            single(1, 1.0, 0.0).smoothness().variation,
            4.0,
            epsilon = 1e-12
        );
        let f = AnalyticSignal::harmonic_sum([Harmonic::new(2, 0.0, 0.5)], 1).unwrap();
        assert_relative_eq!(f.smoothness().variation, 8.0, epsilon = 1e-12);
        let c = AnalyticSignal::harmonic_sum([Harmonic::new(0, 2.0, 0.0)], 0).unwrap();
        assert_eq!(c.smoothness().variation, 0.0);
        // compare against a brute-force grid measurement for a mixed sum
        let m = suite_signal("harmonic-mixed").unwrap();
        let d = m.derivative_evaluator(3).unwrap();
        let grid = total_variation(&d, 1 << 18);
        assert_relative_eq!(m.smoothness().variation, grid, max_relative = 1e-7);
    }

    #[test]
    fn derivative_of_power_decay_matches_termwise_sum() {
        let f = suite_signal("cos-p6").unwrap();
        for &t in &[0.3, 1.9, 4.4] {
            let brute: f64 = (1..20_000)
                .rev()
                .map(|k| {
                    let k = k as f64;
                    // d^2/dt^2 cos kt = -k^2 cos kt
                    -k.powi(-4) * (k * t).cos()
                })
                .sum();
            assert_relative_eq!(f.derivative(t, 2).unwrap(), brute, epsilon = 1e-13);
        }
        assert!(f.derivative(0.1, 6).is_err());
    }

    #[test]
    fn json_round_trip_and_errors() {
        let f = suite_signal("sin-p4").unwrap();
        let back = AnalyticSignal::from_json(&f.to_json()).unwrap();
        assert_eq!(back.kind(), SignalKind::PowerDecaySine);
        assert_eq!(back.smoothness(), f.smoothness());
        let h = AnalyticSignal::from_json(r#"{"kind":"HarmonicSum","terms":[[0,2,0]]}"#).unwrap();
        assert_eq!(h.eval(1.0).unwrap(), 1.0);
        assert!(AnalyticSignal::from_json(r#"{"kind":"PowerDecayCosine","p":4}"#).is_err());
        assert!(
            AnalyticSignal::from_json(r#"{"kind":"HarmonicSum","terms":[[1,1,0],[1,2,0]]}"#)
                .is_err()
        );
        assert!(AnalyticSignal::from_json(r#"{"kind":"Nope"}"#).is_err());
        assert!(
            AnalyticSignal::from_json(r#"{"kind":"HarmonicSum","terms":[],"extra":1}"#).is_err()
        );
    }
}
