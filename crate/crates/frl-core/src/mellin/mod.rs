//! Numerical Mellin–Barnes machinery: complex Gamma, contour evaluation of
//! Gamma-ratio integrands, the chirp integrals I₁/I₂ and the chirp Fourier
//! transform, cross-validated by a direct oscillatory-integral oracle.

pub mod cgamma;
pub mod chirp;
pub mod hfun;
pub mod oscillatory;

pub use cgamma::{complex_gamma, log_gamma_complex};
pub use chirp::{
    build_chirp_spec, chirp_ft, chirp_integral, chirp_series_coefficient, ChirpIntegralSpec,
    EvalMethod,
};
pub use hfun::{h_asymptotic_exponent, mb_integrate, HFunctionSpec, MbEval, MbParams};
pub use oscillatory::{direct_oscillatory_i, DirectEval, OscillatoryBudget};

use std::fmt;

#[derive(Debug, Clone, PartialEq)]
pub enum MellinError {
    /// Complex Gamma pole (non-positive integer on the real axis).
    Pole { re: f64 },
    Domain { what: String },
    /// The contour abscissa does not separate the two pole families.
    PoleSeparation { sigma: f64, left: f64, right: f64 },
    /// The contour integrand fails to decay towards ±i T_max.
    NonDecayingIntegrand { endpoint_magnitude: f64, reference: f64 },
    /// A hypothesis of the asymptotic-exponent formula fails.
    HypothesisViolation { what: String },
    /// The alternating-series acceleration did not stabilize within budget.
    AccelerationFailure { lobes: usize, last_magnitude: f64 },
}

impl fmt::Display for MellinError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MellinError::Pole { re } => write!(f, "gamma pole at {re}"),
            MellinError::Domain { what } => write!(f, "{what}"),
            MellinError::PoleSeparation { sigma, left, right } => write!(
                f,
                "contour abscissa {sigma} does not separate pole families (left {left}, right {right})"
            ),
            MellinError::NonDecayingIntegrand {
                endpoint_magnitude,
                reference,
            } => write!(
                f,
                "integrand not decaying along the contour: |f(T)| = {endpoint_magnitude:.3e} vs interior {reference:.3e}"
            ),
            MellinError::HypothesisViolation { what } => write!(f, "{what}"),
            MellinError::AccelerationFailure { lobes, last_magnitude } => write!(
                f,
                "lobe acceleration did not converge after {lobes} lobes (last magnitude {last_magnitude:.3e})"
            ),
        }
    }
}

impl std::error::Error for MellinError {}
