//! Sampling, normalized DFT, tail-sum functionals and a windowed
//! Fourier-transform quadrature.
//!
//! The DFT convention is F_k = (1/N) Σ_n f_n e^{−i2πkn/N}, so coefficients
//! are directly comparable to Fourier coefficients c_k of the 2L-periodized
//! signal; negative frequencies live in the upper half of the bin range
//! (N/2 < k ≤ N−1). Sampling starts at −T/2 inclusive and excludes +T/2.

pub mod fft;

use crate::catalog::{CatalogError, FunctionDescriptor, Kind};
use crate::quad;
use num_complex::Complex64;
use std::fmt;

#[derive(Debug, Clone, PartialEq)]
pub enum SpectralError {
    TooFewSamples { n: usize },
    NonFiniteSample { index: usize },
    /// |k| reaches the aliased half of the spectrum.
    IndexOutOfRange { k: i64, n: usize },
    ZeroCoefficient { k: i64 },
    Catalog(CatalogError),
    Quadrature(quad::QuadBudgetExceeded),
    /// The integrand is not negligible at the window edge.
    WindowTooSmall { edge_value: f64 },
}

impl fmt::Display for SpectralError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpectralError::TooFewSamples { n } => write!(f, "need at least 2 samples, got {n}"),
            SpectralError::NonFiniteSample { index } => write!(f, "non-finite sample at index {index}"),
            SpectralError::IndexOutOfRange { k, n } => {
                write!(f, "|k| = {} reaches the aliased region for N = {n}", k.abs())
            }
            SpectralError::ZeroCoefficient { k } => write!(f, "coefficient at k = {k} is zero"),
            SpectralError::Catalog(e) => write!(f, "{e}"),
            SpectralError::Quadrature(e) => write!(f, "{e}"),
            SpectralError::WindowTooSmall { edge_value } => {
                write!(f, "window too small: |f| = {edge_value:.3e} at the edge")
            }
        }
    }
}

impl std::error::Error for SpectralError {}

impl From<CatalogError> for SpectralError {
    fn from(e: CatalogError) -> Self {
        SpectralError::Catalog(e)
    }
}

/// Uniform samples of a function over one period.
#[derive(Debug, Clone)]
pub struct SampledSignal {
    pub samples: Vec<f64>,
    /// Period T; samples sit at t_n = −T/2 + nT/N.
    pub period: f64,
    pub descriptor: Option<FunctionDescriptor>,
}

impl SampledSignal {
    pub fn from_samples(samples: Vec<f64>, period: f64) -> Result<Self, SpectralError> {
        if samples.len() < 2 {
            return Err(SpectralError::TooFewSamples { n: samples.len() });
        }
        if let Some(i) = samples.iter().position(|v| !v.is_finite()) {
            return Err(SpectralError::NonFiniteSample { index: i });
        }
        Ok(SampledSignal {
            samples,
            period,
            descriptor: None,
        })
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    /// Sample abscissa t_n.
    pub fn time(&self, n: usize) -> f64 {
        -0.5 * self.period + n as f64 * self.period / self.len() as f64
    }
}

/// Complex spectrum in DFT bin order with the 1/N forward normalization.
#[derive(Debug, Clone)]
pub struct Spectrum {
    pub coeffs: Vec<Complex64>,
    pub period: f64,
}

impl Spectrum {
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Approximate Fourier coefficient c_k for signed k, |k| < N/2.
    pub fn coefficient(&self, k: i64) -> Result<Complex64, SpectralError> {
        let n = self.len();
        if 2 * k.unsigned_abs() as usize >= n {
            return Err(SpectralError::IndexOutOfRange { k, n });
        }
        let bin = if k >= 0 { k as usize } else { n - k.unsigned_abs() as usize };
        Ok(self.coeffs[bin])
    }

    /// |c_k| for k = 0..N−1 in bin order.
    pub fn magnitudes(&self) -> Vec<f64> {
        self.coeffs.iter().map(|c| c.norm()).collect()
    }
}

/// Sample a catalog function: samples\[n\] = f(−L + n·2L/N), period 2L.
pub fn sample(d: &FunctionDescriptor, n: usize) -> Result<SampledSignal, SpectralError> {
    if n < 2 {
        return Err(SpectralError::TooFewSamples { n });
    }
    let l = d.domain_halfwidth;
    let step = 2.0 * l / n as f64;
    let samples: Vec<f64> = (0..n).map(|i| d.eval_raw(-l + i as f64 * step)).collect();
    if let Some(i) = samples.iter().position(|v| !v.is_finite()) {
        return Err(SpectralError::NonFiniteSample { index: i });
    }
    Ok(SampledSignal {
        samples,
        period: 2.0 * l,
        descriptor: Some(d.clone()),
    })
}

/// Normalized DFT of a sampled signal.
pub fn dft(s: &SampledSignal) -> Spectrum {
    let n = s.len();
    let mut buf: Vec<Complex64> = s.samples.iter().map(|&v| Complex64::new(v, 0.0)).collect();
    fft::fft(&mut buf);
    let scale = 1.0 / n as f64;
    for v in buf.iter_mut() {
        *v *= scale;
    }
    Spectrum {
        coeffs: buf,
        period: s.period,
    }
}

/// Inverse of [`dft`]: recovers the N time samples (complex-valued).
pub fn idft(spec: &Spectrum) -> Vec<Complex64> {
    let mut buf = spec.coeffs.clone();
    fft::ifft(&mut buf);
    buf
}

/// Σ over Nc < |k| < N/2 of |k|^m |c_k|^power, square-rooted when power = 2.
pub fn tail_sum(spec: &Spectrum, nc: usize, m: u32, power: u32) -> Result<f64, SpectralError> {
    assert!(power == 1 || power == 2, "power must be 1 or 2");
    let n = spec.len();
    if 2 * nc >= n {
        return Err(SpectralError::IndexOutOfRange { k: nc as i64, n });
    }
    let top = (n - 1) / 2; // largest unaliased |k|
    let mut acc = 0.0;
    for k in (nc + 1)..=top {
        let km = (k as f64).powi(m as i32);
        let pos = spec.coeffs[k].norm();
        let neg = spec.coeffs[n - k].norm();
        if power == 1 {
            acc += km * (pos + neg);
        } else {
            acc += km * (pos * pos + neg * neg);
        }
    }
    Ok(if power == 2 { acc.sqrt() } else { acc })
}

/// Absolute convergence target of the windowed Fourier-transform quadrature.
pub const FT_QUAD_TOL: f64 = 1e-10;
/// Panel budget of the windowed Fourier-transform quadrature.
pub const FT_QUAD_MAX_PANELS: usize = 1_000_000;

/// Windowed Fourier transform ∫_{−W}^{W} f(t) e^{−i2πνt} dt of a catalog
/// function by adaptive Gauss–Kronrod quadrature.
///
/// For the integrable kinds (ExpAbs, GaussPower) the window must already
/// contain all the mass: |f(±W)| < 1e−10 is enforced. Other kinds are
/// integrated over the window as given; the caller owns the truncation error.
pub fn ft_numeric(
    d: &FunctionDescriptor,
    nu: f64,
    window_halfwidth: f64,
) -> Result<Complex64, SpectralError> {
    let w = window_halfwidth;
    if matches!(d.kind, Kind::ExpAbs { .. } | Kind::GaussPower { .. }) {
        let edge = d.eval_raw(w).abs().max(d.eval_raw(-w).abs());
        if edge >= 1e-10 {
            return Err(SpectralError::WindowTooSmall { edge_value: edge });
        }
    }
    fourier_integral(&|t| d.eval_raw(t), nu, -w, w)
}

/// ∫_a^b f(t) e^{−i2πνt} dt for an arbitrary real integrand.
pub fn fourier_integral<F: Fn(f64) -> f64>(
    f: &F,
    nu: f64,
    a: f64,
    b: f64,
) -> Result<Complex64, SpectralError> {
    // Scale the absolute target by a coarse estimate of the L1 mass, so wide
    // windows with O(100) mass are not asked for an unreachable 1e-10.
    let mut mass = 0.0;
    for i in 0..64 {
        let (v, _) = quad::gk15(
            &|t| f(t).abs(),
            a + (b - a) * i as f64 / 64.0,
            a + (b - a) * (i + 1) as f64 / 64.0,
        );
        mass += v;
    }
    let tol = FT_QUAD_TOL * mass.max(1.0);
    let g = |t: f64| Complex64::from_polar(1.0, -2.0 * std::f64::consts::PI * nu * t) * f(t);
    quad::adaptive_gk15_complex(&g, a, b, tol, FT_QUAD_MAX_PANELS).map_err(SpectralError::Quadrature)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn sample_powerabs_small_grid() {
        let d = FunctionDescriptor::power_abs(0.7, 1.0).unwrap();
        let s = sample(&d, 4).unwrap();
        let want = [1.0, 0.5f64.powf(0.7), 0.0, 0.5f64.powf(0.7)];
        for (a, b) in s.samples.iter().zip(want.iter()) {
            assert!((a - b).abs() < 1e-15);
        }
        assert_eq!(s.period, 2.0);
        let s2 = sample(&d, 2).unwrap();
        assert_eq!(s2.samples, vec![1.0, 0.0]);
        assert!(sample(&d, 1).is_err());
    }

    #[test]
    fn dft_constant_and_single_bin() {
        let s = SampledSignal::from_samples(vec![3.25; 16], 2.0).unwrap();
        let spec = dft(&s);
        assert!((spec.coeffs[0].re - 3.25).abs() < 1e-12);
        for k in 1..16 {
            assert!(spec.coeffs[k].norm() < 1e-12);
        }

        let n = 8;
        let cosine: Vec<f64> = (0..n).map(|i| (2.0 * PI * i as f64 / n as f64).cos()).collect();
        let spec = dft(&SampledSignal::from_samples(cosine, 1.0).unwrap());
        assert!((spec.coeffs[1].re - 0.5).abs() < 1e-12);
        assert!((spec.coeffs[7].re - 0.5).abs() < 1e-12);
        for k in [0usize, 2, 3, 4, 5, 6] {
            assert!(spec.coeffs[k].norm() < 1e-12, "k={k}");
        }
    }

    #[test]
    fn coefficient_signed_indexing() {
        let d = FunctionDescriptor::power_abs(0.5, 1.0).unwrap();
        let spec = dft(&sample(&d, 64).unwrap());
        let mean: f64 = sample(&d, 64).unwrap().samples.iter().sum::<f64>() / 64.0;
        assert!((spec.coefficient(0).unwrap().re - mean).abs() < 1e-12);
        let plus = spec.coefficient(5).unwrap();
        let minus = spec.coefficient(-5).unwrap();
        assert!((plus - minus.conj()).norm() < 1e-12);
        assert!(spec.coefficient(32).is_err());
        assert!(spec.coefficient(-32).is_err());
        assert!(spec.coefficient(31).is_ok());
    }

    #[test]
    fn hermitian_symmetry_for_real_signals() {
        let d = FunctionDescriptor::chirp(0.7, 0.5, 1.0).unwrap();
        let spec = dft(&sample(&d, 1000).unwrap());
        for k in 1..500 {
            let a = spec.coeffs[k];
            let b = spec.coeffs[1000 - k].conj();
            assert!(
                (a - b).norm() <= 1e-10 * a.norm().max(1e-30),
                "k={k}"
            );
        }
    }

    #[test]
    fn parseval_and_round_trip() {
        for &n in &[16usize, 1024, 3000] {
            let d = FunctionDescriptor::chirp(0.7, 0.5, 1.0).unwrap();
            let s = sample(&d, n).unwrap();
            let spec = dft(&s);
            let time_energy: f64 = s.samples.iter().map(|v| v * v).sum::<f64>() / n as f64;
            let freq_energy: f64 = spec.coeffs.iter().map(|c| c.norm_sqr()).sum();
            assert!((time_energy - freq_energy).abs() / time_energy < 1e-10, "n={n}");

            let back = idft(&spec);
            for i in 0..n {
                assert!((back[i].re - s.samples[i]).abs() < 1e-10);
                assert!(back[i].im.abs() < 1e-10);
            }
        }
    }

    #[test]
    fn tail_sum_trivial_cases() {
        let s = SampledSignal::from_samples(vec![2.0; 32], 1.0).unwrap();
        assert_eq!(tail_sum(&dft(&s), 1, 0, 2).unwrap(), 0.0);

        let n = 16;
        let cosine: Vec<f64> = (0..n).map(|i| (2.0 * PI * i as f64 / n as f64).cos()).collect();
        let spec = dft(&SampledSignal::from_samples(cosine, 1.0).unwrap());
        assert!(tail_sum(&spec, 1, 0, 2).unwrap() < 1e-12);
        assert!(tail_sum(&spec, 8, 0, 2).is_err());
    }

    #[test]
    fn tail_sum_weighted_absolute_variant() {
        // synthetic |c_k| = k^-3: sum_{|k|>Nc} |k| |c_k| = 2 sum k^-2 ~ 2/Nc
        let n = 4096;
        let mut coeffs = vec![Complex64::new(0.0, 0.0); n];
        for k in 1..n / 2 {
            let v = (k as f64).powi(-3);
            coeffs[k] = Complex64::new(v, 0.0);
            coeffs[n - k] = Complex64::new(v, 0.0);
        }
        let spec = Spectrum { coeffs, period: 2.0 };
        let t10 = tail_sum(&spec, 10, 1, 1).unwrap();
        let t40 = tail_sum(&spec, 40, 1, 1).unwrap();
        assert!((t10 / (2.0 / 10.0) - 1.0).abs() < 0.06, "t10={t10}");
        assert!((t40 / (2.0 / 40.0) - 1.0).abs() < 0.06, "t40={t40}");
    }

    #[test]
    fn ft_numeric_expabs_matches_closed_form() {
        let d = FunctionDescriptor::exp_abs(1.0, 30.0).unwrap();
        for &nu in &[0.0, 0.5] {
            let got = ft_numeric(&d, nu, 30.0).unwrap();
            let want = d.closed_form_ft(nu).unwrap();
            assert!((got.re - want).abs() < 1e-8, "nu={nu}: {} vs {want}", got.re);
            assert!(got.im.abs() < 1e-8);
        }
        // window check trips when mass is left outside
        assert!(matches!(
            ft_numeric(&d, 0.0, 5.0),
            Err(SpectralError::WindowTooSmall { .. })
        ));
    }

    #[test]
    fn gaussian_normalization_through_the_quadrature() {
        let v = fourier_integral(&|t: f64| (-PI * t * t).exp(), 0.0, -8.0, 8.0).unwrap();
        assert!((v.re - 1.0).abs() < 1e-10);
    }
}
