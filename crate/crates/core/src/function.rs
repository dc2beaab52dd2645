/// A 2π-periodic real function that can be evaluated pointwise.
pub trait PeriodicFunction {
    fn value(&self, t: f64) -> f64;
}

impl<F: Fn(f64) -> f64> PeriodicFunction for F {
    fn value(&self, t: f64) -> f64 {
        self(t)
    }
}

/// Functions backed by a Fourier series whose derivatives are taken term by
/// term (each harmonic `j` scaled by `j^order` and phase-rotated).
pub trait TermwiseDerivative {
    fn termwise_derivative(&self, t: f64, order: u32) -> f64;
}

/// `(cos(x + q pi/2), sin(x + q pi/2))` without rounding `pi/2`.
pub(crate) fn rotate_quarter_turns(cos_x: f64, sin_x: f64, q: u32) -> (f64, f64) {
    match q % 4 {
        0 => (cos_x, sin_x),
        1 => (-sin_x, cos_x),
        2 => (-cos_x, -sin_x),
        _ => (sin_x, -cos_x),
    }
}
