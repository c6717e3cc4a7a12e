//! Numerical toolkit for the relationship between function regularity and
//! Fourier decay.
//!
//! The crate measures and predicts how uniform Hölder continuity, absolute
//! continuity, bounded variation and the oscillation behaviour of the
//! difference function Δ_h f drive the decay rate of Fourier coefficients
//! and Fourier transforms. It ships:
//!
//! - [`specfun`] — real-argument Gamma/log-Gamma, Stirling approximant and
//!   factorial polynomials (difference-calculus primitives),
//! - [`catalog`] — analytic test functions (chirps, |x|^μ, Weierstrass,
//!   Cantor-Lebesgue, e^{-a|t|}, Gaussian-weighted cusps) with ground-truth
//!   regularity metadata,
//! - [`spectral`] — sampling, an FFT-based normalized DFT (radix-2 plus a
//!   Bluestein fallback for arbitrary N), tail sums and a windowed
//!   Fourier-transform quadrature,
//! - [`estimators`] — empirical decay slopes, Hölder exponents, oscillation
//!   counting and total variation,
//! - [`theory`] — closed-form decay/regularity predictions, including the
//!   chirp case analysis and its pole-coincidence conditions,
//! - [`mellin`] — complex Gamma, Mellin-Barnes contour quadrature, the chirp
//!   integrals I₁/I₂ and the chirp Fourier transform, cross-validated by a
//!   direct oscillatory-integral oracle,
//! - [`verify`] — the claim suites behind `frl verify`.

pub mod catalog;
mod dd;
pub mod estimators;
pub mod mellin;
pub mod quad;
pub mod specfun;
pub mod spectral;
pub mod theory;
pub mod verify;

pub use catalog::FunctionDescriptor;
pub use spectral::{SampledSignal, Spectrum};
