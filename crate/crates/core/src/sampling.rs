//! Uniform odd-length grids, sampling and the discrete Fourier coefficients.

use std::f64::consts::TAU;

use serde::Serialize;

use crate::error::{Result, SpectralError};
use crate::function::{rotate_quarter_turns, PeriodicFunction, TermwiseDerivative};
use crate::output::CsvTable;

/// Grid `t_j = 2π(j-1)/N`, `j = 1..N`, with `N = 2n + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct UniformGrid {
    n: usize,
}

impl UniformGrid {
    pub fn new(n: usize) -> Result<Self> {
        if n < 1 {
            return Err(SpectralError::domain("grid half-size n must be >= 1"));
        }
        Ok(UniformGrid { n })
    }

    /// Grid with `len` nodes; `len` must be odd and at least 3.
    pub fn with_len(len: usize) -> Result<Self> {
        if len < 3 || len.is_multiple_of(2) {
            return Err(SpectralError::domain(format!(
                "grid length must be odd and >= 3, got {len}"
            )));
        }
        Self::new((len - 1) / 2)
    }

    /// Half-size `n`; the Nyquist band is `0..=n`.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of nodes `N = 2n + 1`.
    pub fn len(&self) -> usize {
        2 * self.n + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn spacing(&self) -> f64 {
        TAU / self.len() as f64
    }

    /// Node `t_{i+1}` for zero-based `i`.
    pub fn node(&self, i: usize) -> f64 {
        TAU * i as f64 / self.len() as f64
    }

    pub fn nodes(&self) -> Vec<f64> {
        (0..self.len()).map(|i| self.node(i)).collect()
    }
}

pub fn make_grid(n: usize) -> Result<UniformGrid> {
    UniformGrid::new(n)
}

/// Signal values at the grid nodes.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleVector {
    grid: UniformGrid,
    values: Vec<f64>,
}

impl SampleVector {
    pub fn new(grid: UniformGrid, values: Vec<f64>) -> Result<Self> {
        if values.len() != grid.len() {
            return Err(SpectralError::GridMismatch {
                expected: grid.len(),
                found: values.len(),
            });
        }
        if let Some(i) = values.iter().position(|v| !v.is_finite()) {
            return Err(SpectralError::domain(format!(
                "sample {} is not finite",
                i + 1
            )));
        }
        Ok(SampleVector { grid, values })
    }

    pub fn grid(&self) -> UniformGrid {
        self.grid
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Columns `j,t,f` with `j = 1..N`.
    pub fn to_csv(&self) -> String {
        let mut table = CsvTable::new(&["j", "t", "f"]);
        for (i, &v) in self.values.iter().enumerate() {
            table.row(&[(i + 1).into(), self.grid.node(i).into(), v.into()]);
        }
        table.into_string()
    }
}

/// Samples `f` at every node of `grid`.
pub fn sample<F: PeriodicFunction + ?Sized>(f: &F, grid: UniformGrid) -> Result<SampleVector> {
    let values = (0..grid.len()).map(|i| f.value(grid.node(i))).collect();
    SampleVector::new(grid, values)
}

/// Band representative of harmonic `j` on an `N`-point grid.
///
/// Node values of `cos jt` equal those of `cos kt`; node values of `sin jt`
/// equal `sin_sign * sin kt`. `k = 0` is the DC class `j = mN`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AliasClass {
    pub k: usize,
    pub cos_sign: i8,
    pub sin_sign: i8,
}

pub fn alias_class(j: u64, grid_len: usize) -> AliasClass {
    let len = grid_len as u64;
    let n = (len - 1) / 2;
    let rem = j % len;
    if rem > n {
        AliasClass {
            k: (len - rem) as usize,
            cos_sign: 1,
            sin_sign: -1,
        }
    } else {
        AliasClass {
            k: rem as usize,
            cos_sign: 1,
            sin_sign: 1,
        }
    }
}

/// The `N` independent discrete coefficients `a*_0, a*_k, b*_k (k = 1..n)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DiscreteSpectrum {
    #[serde(skip)]
    grid: UniformGrid,
    a0: f64,
    a: Vec<f64>,
    b: Vec<f64>,
}

impl DiscreteSpectrum {
    pub fn new(grid: UniformGrid, a0: f64, a: Vec<f64>, b: Vec<f64>) -> Result<Self> {
        if a.len() != grid.n() || b.len() != grid.n() {
            return Err(SpectralError::domain(format!(
                "spectrum needs {} cosine and sine coefficients, got {} and {}",
                grid.n(),
                a.len(),
                b.len()
            )));
        }
        Ok(DiscreteSpectrum { grid, a0, a, b })
    }

    pub fn grid(&self) -> UniformGrid {
        self.grid
    }

    pub fn a0(&self) -> f64 {
        self.a0
    }

    /// `a*_k` for `k = 1..n`, stored at index `k - 1`.
    pub fn cos_coeffs(&self) -> &[f64] {
        &self.a
    }

    pub fn sin_coeffs(&self) -> &[f64] {
        &self.b
    }

    /// `(a*_k, b*_k)` for `k` in `0..=n`; `k = 0` gives `(a*_0, 0)`.
    pub fn coeff(&self, k: usize) -> (f64, f64) {
        assert!(
            k <= self.grid.n(),
            "band index {k} exceeds n = {}",
            self.grid.n()
        );
        if k == 0 {
            (self.a0, 0.0)
        } else {
            (self.a[k - 1], self.b[k - 1])
        }
    }

    /// Periodic/even/odd extension: `(a*_k, s b*_k)` for the alias class
    /// `(k, s)` of `j`, and `(a*_0, 0)` on the DC class.
    pub fn extended_coeff(&self, j: u64) -> (f64, f64) {
        let class = alias_class(j, self.grid.len());
        if class.k == 0 {
            (self.a0, 0.0)
        } else {
            let (a, b) = self.coeff(class.k);
            (a, f64::from(class.sin_sign) * b)
        }
    }

    /// Columns `k,a,b`, `k = 0..n`; the `k = 0` row holds `a*_0` and `0`.
    pub fn to_csv(&self) -> String {
        let mut table = CsvTable::new(&["k", "a", "b"]);
        for k in 0..=self.grid.n() {
            let (a, b) = self.coeff(k);
            table.row(&[k.into(), a.into(), b.into()]);
        }
        table.into_string()
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Doc<'a> {
            #[serde(rename = "N")]
            len: usize,
            n: usize,
            #[serde(flatten)]
            spectrum: &'a DiscreteSpectrum,
        }
        serde_json::to_string_pretty(&Doc {
            len: self.grid.len(),
            n: self.grid.n(),
            spectrum: self,
        })
        .expect("spectrum serializes")
    }
}

impl PeriodicFunction for DiscreteSpectrum {
    /// The interpolating trigonometric polynomial
    /// `a*_0/2 + sum_k (a*_k cos kt + b*_k sin kt)`.
    fn value(&self, t: f64) -> f64 {
        self.termwise_derivative(t, 0)
    }
}

impl TermwiseDerivative for DiscreteSpectrum {
    fn termwise_derivative(&self, t: f64, order: u32) -> f64 {
        let mut sum = if order == 0 { 0.5 * self.a0 } else { 0.0 };
        for k in 1..=self.grid.n() {
            let (s, c) = (k as f64 * t).sin_cos();
            let (c, s) = rotate_quarter_turns(c, s, order);
            sum += (k as f64).powi(order as i32) * (self.a[k - 1] * c + self.b[k - 1] * s);
        }
        sum
    }
}

/// `a*_k = (2/N) sum_j f(t_j) cos k t_j`, `b*_k = (2/N) sum_j f(t_j) sin k t_j`.
///
/// Direct `O(N^2)` summation; the angle `k t_j` is reduced exactly to
/// `2π (k j mod N) / N` before the table lookup.
pub fn discrete_coeffs(samples: &SampleVector) -> DiscreteSpectrum {
    let grid = samples.grid();
    let len = grid.len();
    let (sin_table, cos_table): (Vec<f64>, Vec<f64>) =
        (0..len).map(|i| grid.node(i).sin_cos()).unzip();
    let scale = 2.0 / len as f64;
    let f = samples.values();

    let a0 = scale * f.iter().sum::<f64>();
    let mut a = Vec::with_capacity(grid.n());
    let mut b = Vec::with_capacity(grid.n());
    for k in 1..=grid.n() {
        let (mut ca, mut cb) = (0.0, 0.0);
        for (j, &v) in f.iter().enumerate() {
            let idx = (k * j) % len;
            ca += v * cos_table[idx];
            cb += v * sin_table[idx];
        }
        a.push(scale * ca);
        b.push(scale * cb);
    }
    DiscreteSpectrum { grid, a0, a, b }
}
