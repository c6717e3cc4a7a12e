//! Complex log-Gamma, Gamma and digamma.
//!
//! Same Lanczos table as the real-argument module, applied to complex
//! arguments with Re(s) >= 1/2 and continued left by reflection through a
//! stable log-sin (the naive sin(pi s) overflows once |Im s| exceeds ~220;
//! the value is only ever used inside exp(sum of logs), so branch jumps of
//! individual terms are harmless).

use super::MellinError;
use crate::specfun::{LANCZOS_COEFFS, LANCZOS_G, POLE_TOLERANCE};
use num_complex::Complex64;
use std::f64::consts::PI;

fn is_real_pole(s: Complex64) -> bool {
    s.im == 0.0 && s.re <= 0.5 && {
        let r = s.re.round();
        r <= 0.0 && (s.re - r).abs() < POLE_TOLERANCE
    }
}

/// log sin(w) computed through e^{±iw} so that |Im w| ~ hundreds stays finite.
pub(crate) fn log_sin_complex(w: Complex64) -> Complex64 {
    if w.im > 1.0 {
        // sin w = (i/2) e^{-iw} (1 - e^{2iw}), |e^{2iw}| = e^{-2 Im w} small
        let i = Complex64::new(0.0, 1.0);
        (i / 2.0).ln() - i * w + (Complex64::new(1.0, 0.0) - (2.0 * i * w).exp()).ln()
    } else if w.im < -1.0 {
        log_sin_complex(w.conj()).conj()
    } else {
        w.sin().ln()
    }
}

/// ln Γ(s) for complex s off the non-positive real integers.
pub fn log_gamma_complex(s: Complex64) -> Complex64 {
    if s.re >= 0.5 {
        let z = s - 1.0;
        let mut acc = Complex64::new(LANCZOS_COEFFS[0], 0.0);
        for (i, &c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
            acc += c / (z + i as f64);
        }
        let t = z + LANCZOS_G + 0.5;
        0.5 * (2.0 * PI).ln() + (z + 0.5) * t.ln() - t + acc.ln()
    } else {
        // reflection: ln Γ(s) = ln π − ln sin(πs) − ln Γ(1−s)
        Complex64::new(PI.ln(), 0.0)
            - log_sin_complex(PI * s)
            - log_gamma_complex(Complex64::new(1.0, 0.0) - s)
    }
}

/// Γ(s) for complex s; errors on the real-axis poles.
pub fn complex_gamma(s: Complex64) -> Result<Complex64, MellinError> {
    if is_real_pole(s) {
        return Err(MellinError::Pole { re: s.re });
    }
    Ok(log_gamma_complex(s).exp())
}

/// Bernoulli-number coefficients B_{2n}/(2n) of the digamma asymptotic series.
const DIGAMMA_ASYMPTOTIC: [f64; 7] = [
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
    1.0 / 12.0,
];

/// ψ(s) = d/ds ln Γ(s) via upward recurrence into the asymptotic region.
pub(crate) fn digamma_complex(s: Complex64) -> Complex64 {
    let mut z = s;
    let mut acc = Complex64::new(0.0, 0.0);
    while z.re < 8.0 || z.norm_sqr() < 144.0 {
        acc -= 1.0 / z;
        z += 1.0;
    }
    let inv2 = 1.0 / (z * z);
    let mut series = Complex64::new(0.0, 0.0);
    let mut pw = inv2;
    for &c in &DIGAMMA_ASYMPTOTIC {
        series += c * pw;
        pw *= inv2;
    }
    acc + z.ln() - 0.5 / z - series
}
