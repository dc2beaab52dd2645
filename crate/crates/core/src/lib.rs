//! Spectral analysis of uniformly sampled periodic signals with
//! trigonometric splines: discrete coefficients, alias folding and its
//! bounds, closed-form spline interpolation, unfolded spectra and
//! quadrature-based coefficient estimates.

pub mod alias;
pub mod error;
pub mod filon;
pub mod function;
pub mod kernel;
pub mod output;
pub mod sampling;
pub mod signal;
pub mod special;
pub mod spline;
pub mod verify;

pub use error::{Result, SpectralError};
pub use function::{PeriodicFunction, TermwiseDerivative};
pub use kernel::{KernelConfig, SigmaVariant};
pub use sampling::{
    discrete_coeffs, make_grid, sample, DiscreteSpectrum, SampleVector, UniformGrid,
};
pub use signal::{AnalyticSignal, Harmonic, SmoothnessInfo};
pub use spline::{build_spline, TrigSpline};
