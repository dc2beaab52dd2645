//! Special functions behind the closed-form series.
//!
//! Everything here serves one purpose: evaluating sums of the form
//! `sum_{m>=0} (m + a)^{-s} e^{i (m + a) phi}` and their `phi = 0` values
//! (Hurwitz zeta) to full double precision without summing millions of
//! slowly decaying terms. The Lerch-type series is expanded about `phi = 0`:
//!
//! ```text
//! L(s, a, phi) = sum_{k >= 0, k != s-1} zeta(s - k, a) (i phi)^k / k!
//!              + (i phi)^{s-1} / (s-1)! * [H_{s-1} - gamma - psi(a) - ln(-i phi)]
//! ```
//!
//! which converges for `|phi| < 2 pi`; callers reduce `phi` to `[-pi, pi]`.
//! For non-integer `s` (only `a = 1`, i.e. the polylogarithm on the unit
//! circle) the log term is replaced by `Gamma(1 - s) (-i phi)^{s-1}`.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;

use crate::error::{Result, SpectralError};

pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// `B_{2p}` for `p = 0..=15`.
const BERNOULLI_EVEN: [f64; 16] = [
    1.0,
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0,
];

/// Bernoulli number `B_n` (with `B_1 = -1/2`) for `n <= 30`.
fn bernoulli_number(n: usize) -> f64 {
    match n {
        0 => 1.0,
        1 => -0.5,
        _ if n % 2 == 1 => 0.0,
        _ => BERNOULLI_EVEN[n / 2],
    }
}

fn binomial(n: usize, k: usize) -> f64 {
    let k = k.min(n - k);
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// Above this degree Bernoulli polynomials are evaluated from their Fourier
/// series; the monomial form cancels badly for large degree.
const EXPLICIT_BERNOULLI_MAX: usize = 12;

/// `sum_{j>=1} cos(2 pi j x - m pi / 2) / j^m`, used for `m > EXPLICIT_BERNOULLI_MAX`.
fn bernoulli_fourier_sum(m: usize, x: f64) -> f64 {
    let shift = (m % 4) as f64 * PI / 2.0;
    let mut sum = 0.0;
    for j in 1.. {
        let w = (j as f64).powi(-(m as i32));
        if w < 1e-19 {
            break;
        }
        sum += w * (TAU * j as f64 * x - shift).cos();
    }
    sum
}

/// Bernoulli polynomial `B_m(x)` for `0 <= x <= 1`.
pub fn bernoulli_poly(m: usize, x: f64) -> f64 {
    if m <= EXPLICIT_BERNOULLI_MAX {
        (0..=m)
            .map(|j| binomial(m, j) * bernoulli_number(j) * x.powi((m - j) as i32))
            .sum()
    } else {
        // B_m(x) = -2 m! / (2 pi)^m * sum_j cos(2 pi j x - m pi / 2) / j^m
        let scale = (1..=m).fold(1.0, |acc, i| acc * i as f64 / TAU);
        -2.0 * scale * bernoulli_fourier_sum(m, x)
    }
}

/// Euler-Maclaurin evaluation of a Hurwitz zeta value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EmSum {
    pub value: f64,
    /// Magnitude of the first omitted correction; bounds the remainder for
    /// real `s` because the derivatives of `(x + a)^{-s}` keep one sign.
    pub remainder: f64,
    /// Number of directly summed terms.
    pub terms: usize,
}

/// `zeta(s, a) = sum_{j>=0} (j + a)^{-s}` with `terms` direct terms followed
/// by the Euler-Maclaurin tail. Valid for `s != 1`, `a > 0`, `s > -25`.
pub fn hurwitz_zeta_em(s: f64, a: f64, terms: usize) -> EmSum {
    debug_assert!(a > 0.0 && s != 1.0);
    let head: f64 = (0..terms).map(|j| (j as f64 + a).powf(-s)).sum();
    let x = terms as f64 + a;
    let mut value = head + x.powf(1.0 - s) / (s - 1.0) + 0.5 * x.powf(-s);

    // t_p = B_{2p} / (2p)! * s (s+1) ... (s+2p-2) * x^{-s-2p+1}
    let inv_x2 = 1.0 / (x * x);
    let mut factor = s * x.powf(-s - 1.0) / 2.0; // (s)_1 / 2! * x^{-s-1}
    let mut prev = f64::INFINITY;
    let mut remainder = 0.0;
    for p in 1..BERNOULLI_EVEN.len() {
        let term = BERNOULLI_EVEN[p] * factor;
        if term.abs() >= prev || term.abs() <= f64::EPSILON * 1e-3 * value.abs() {
            remainder = term.abs().min(prev);
            break;
        }
        value += term;
        prev = term.abs();
        remainder = prev;
        let q = 2.0 * p as f64;
        factor *= (s + q - 1.0) * (s + q) / ((q + 1.0) * (q + 2.0)) * inv_x2;
    }
    EmSum {
        value,
        remainder,
        terms,
    }
}

fn default_terms(s: f64) -> usize {
    12 + (2.0 * s.abs()).ceil() as usize
}

/// Hurwitz zeta `zeta(s, a)` for `a > 0`, `s != 1`.
pub fn hurwitz_zeta(s: f64, a: f64) -> f64 {
    if s <= 0.0 && s.fract() == 0.0 {
        let n = (-s) as usize;
        return -bernoulli_poly(n + 1, a) / (n + 1) as f64;
    }
    hurwitz_zeta_em(s, a, default_terms(s)).value
}

/// Hurwitz zeta with an absolute remainder target. The direct term count is
/// doubled until the Euler-Maclaurin remainder drops to `tol`; exceeding
/// `cap` direct terms is an error.
pub fn hurwitz_zeta_within(s: f64, a: f64, tol: f64, cap: usize) -> Result<EmSum> {
    let mut terms = default_terms(s).min(cap.max(1));
    loop {
        let em = hurwitz_zeta_em(s, a, terms);
        if em.remainder <= tol {
            return Ok(em);
        }
        if terms >= cap {
            return Err(SpectralError::TruncationCap { cap, tol });
        }
        terms = (terms * 2).min(cap);
    }
}

/// Riemann zeta for real `s != 1`.
pub fn zeta(s: f64) -> f64 {
    if s == 1.0 {
        return f64::INFINITY;
    }
    if s == 0.0 {
        return -0.5;
    }
    if s < 0.0 {
        if s.fract() == 0.0 {
            let n = (-s) as usize;
            return if n.is_multiple_of(2) {
                0.0
            } else {
                -bernoulli_poly(n + 1, 1.0) / (n + 1) as f64
            };
        }
        // zeta(s) = 2^s pi^{s-1} sin(pi s / 2) Gamma(1 - s) zeta(1 - s)
        return 2f64.powf(s)
            * PI.powf(s - 1.0)
            * (PI * s / 2.0).sin()
            * libm::tgamma(1.0 - s)
            * zeta(1.0 - s);
    }
    hurwitz_zeta_em(s, 1.0, default_terms(s)).value
}

/// Digamma function for `x > 0`.
pub fn digamma(mut x: f64) -> f64 {
    debug_assert!(x > 0.0);
    let mut acc = 0.0;
    while x < 16.0 {
        acc -= 1.0 / x;
        x += 1.0;
    }
    let inv2 = 1.0 / (x * x);
    let series = inv2
        * (1.0 / 12.0
            - inv2
                * (1.0 / 120.0
                    - inv2 * (1.0 / 252.0 - inv2 * (1.0 / 240.0 - inv2 * (1.0 / 132.0)))));
    acc + x.ln() - 0.5 / x - series
}

fn harmonic_number(n: usize) -> f64 {
    (1..=n).map(|j| 1.0 / j as f64).sum()
}

fn factorial(n: usize) -> f64 {
    (1..=n).fold(1.0, |acc, i| acc * i as f64)
}

/// `zeta(-n, a) / k!` without forming `k!` or `n!` separately.
fn hurwitz_neg_int_over_factorial(n: usize, a: f64, k: usize) -> f64 {
    let m = n + 1;
    if m <= EXPLICIT_BERNOULLI_MAX {
        -bernoulli_poly(m, a) / (m as f64 * factorial(k))
    } else {
        // zeta(-n, a) = 2 n! / (2 pi)^{n+1} * S_{n+1}(a)
        let mut scale = 2.0 / TAU.powi(m as i32);
        for i in (n + 1)..=k {
            scale /= i as f64;
        }
        scale * bernoulli_fourier_sum(m, a)
    }
}

/// Power-series evaluator for `sum_{m>=0} (m + a)^{-s} e^{i (m + a) phi}`.
///
/// Integer orders `s >= 1` accept any shift `a` in `(0, 1]`; non-integer
/// orders `s > 0` are supported for `a = 1` only, which is the
/// polylogarithm `Li_s(e^{i phi})`.
#[derive(Debug, Clone)]
pub struct LerchSeries {
    order: f64,
    shift: f64,
    integer_order: Option<usize>,
    /// `Re` part coefficients: `c_{2j} (-1)^j`, polynomial in `phi^2`.
    even: Vec<f64>,
    /// `Im` part coefficients: `c_{2j+1} (-1)^j`, times `phi`.
    odd: Vec<f64>,
    log_scale: f64,
    log_const: f64,
    gamma_coeff: f64,
}

const MAX_SERIES_TERMS: usize = 400;

impl LerchSeries {
    pub fn new(order: f64, shift: f64) -> Result<Self> {
        if !(shift > 0.0 && shift <= 1.0) {
            return Err(SpectralError::domain(format!(
                "Lerch shift must lie in (0, 1], got {shift}"
            )));
        }
        if !(order.is_finite() && order > 0.0) {
            return Err(SpectralError::domain(format!(
                "Lerch order must be positive, got {order}"
            )));
        }
        let integer_order = (order.fract() == 0.0).then_some(order as usize);
        if integer_order.is_none() && shift != 1.0 {
            return Err(SpectralError::domain(
                "non-integer orders are supported only for shift 1 (polylogarithm)",
            ));
        }

        let coeff = |k: usize| -> f64 {
            match integer_order {
                Some(s) => {
                    let z = s as i64 - k as i64;
                    if z == 1 {
                        0.0
                    } else if z >= 2 {
                        hurwitz_zeta(z as f64, shift) / factorial(k)
                    } else if z == 0 {
                        (0.5 - shift) / factorial(k)
                    } else {
                        hurwitz_neg_int_over_factorial((-z) as usize, shift, k)
                    }
                }
                None => {
                    let z = order - k as f64;
                    if z > 0.0 {
                        zeta(z) / factorial(k)
                    } else {
                        // reflection, with Gamma(1 - z) / k! taken in log space
                        let ratio = (libm::lgamma(1.0 - z) - libm::lgamma(k as f64 + 1.0)).exp();
                        2f64.powf(z)
                            * PI.powf(z - 1.0)
                            * (PI * z / 2.0).sin()
                            * ratio
                            * zeta(1.0 - z)
                    }
                }
            }
        };

        let mut coeffs = Vec::new();
        let lead = coeff(0).abs().max(1.0);
        for k in 0..MAX_SERIES_TERMS {
            let c = coeff(k);
            coeffs.push(c);
            if k as f64 > order + 4.0 {
                let tail =
                    c.abs() * PI.powi(k as i32) + coeffs[k - 1].abs() * PI.powi(k as i32 - 1);
                if tail < 1e-18 * lead {
                    break;
                }
            }
        }

        let mut even = Vec::with_capacity(coeffs.len() / 2 + 1);
        let mut odd = Vec::with_capacity(coeffs.len() / 2 + 1);
        for (k, c) in coeffs.iter().enumerate() {
            let sign = if (k / 2) % 2 == 0 { 1.0 } else { -1.0 };
            if k % 2 == 0 {
                even.push(sign * c);
            } else {
                odd.push(sign * c);
            }
        }

        let (log_scale, log_const, gamma_coeff) = match integer_order {
            Some(s) => (
                1.0 / factorial(s - 1),
                harmonic_number(s - 1) - EULER_GAMMA - digamma(shift),
                0.0,
            ),
            None => (0.0, 0.0, libm::tgamma(1.0 - order)),
        };

        Ok(LerchSeries {
            order,
            shift,
            integer_order,
            even,
            odd,
            log_scale,
            log_const,
            gamma_coeff,
        })
    }

    pub fn order(&self) -> f64 {
        self.order
    }

    pub fn shift(&self) -> f64 {
        self.shift
    }

    /// Value at `phi`; `phi` is reduced to `[-pi, pi]` and the period shift
    /// `e^{2 pi i a l}` applied.
    pub fn eval(&self, phi: f64) -> Complex64 {
        let turns = (phi / TAU).round();
        let x = phi - turns * TAU;
        let base = self.eval_reduced(x);
        if turns == 0.0 || self.shift == 1.0 {
            base
        } else {
            let frac = (self.shift * turns).rem_euclid(1.0);
            base * Complex64::from_polar(1.0, TAU * frac)
        }
    }

    /// Value for `phi` already in `[-pi, pi]`.
    pub fn eval_reduced(&self, x: f64) -> Complex64 {
        let x2 = x * x;
        let horner = |c: &[f64]| c.iter().rev().fold(0.0, |acc, &v| acc * x2 + v);
        let mut value = Complex64::new(horner(&self.even), x * horner(&self.odd));

        match self.integer_order {
            Some(s) => {
                if x != 0.0 || s == 1 {
                    // (i x)^{s-1} / (s-1)! * [C - ln|x| + i (pi/2) sgn(x)]
                    let bracket =
                        Complex64::new(self.log_const - x.abs().ln(), 0.5 * PI * x.signum());
                    let power = i_pow(s - 1) * x.powi(s as i32 - 1);
                    value += power * bracket * self.log_scale;
                }
            }
            None => {
                if x != 0.0 || self.order < 1.0 {
                    let arg = -0.5 * PI * x.signum() * (self.order - 1.0);
                    value += Complex64::from_polar(
                        self.gamma_coeff * x.abs().powf(self.order - 1.0),
                        arg,
                    );
                }
            }
        }
        value
    }
}

fn i_pow(n: usize) -> Complex64 {
    match n % 4 {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, 1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, -1.0),
    }
}
