//! Real-argument special functions and difference-calculus primitives.
//!
//! Gamma is computed with the Lanczos approximation (g = 7, 9 coefficients,
//! the Godfrey/GSL table) plus the reflection formula for arguments left of
//! 1/2; measured relative error is below 1e-13 over the range exercised here.
//! Factorial polynomials t^{(γ)_h} = h^γ Γ(t/h+1)/Γ(t/h−γ+1) are routed
//! through signed log-Gamma so that the large-t asymptotic checks do not
//! overflow.

use std::fmt;

/// Errors from special-function evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SpecFunError {
    /// Argument at (or within 1e-12 of) a non-positive integer pole of Gamma.
    Pole { s: f64 },
    /// Argument outside the function's domain.
    Domain { what: &'static str, value: f64 },
}

impl fmt::Display for SpecFunError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpecFunError::Pole { s } => write!(f, "gamma pole at s = {s}"),
            SpecFunError::Domain { what, value } => write!(f, "domain error: {what} (got {value})"),
        }
    }
}

impl std::error::Error for SpecFunError {}

/// Lanczos g parameter.
pub(crate) const LANCZOS_G: f64 = 7.0;

/// Lanczos coefficients for g = 7, n = 9.
#[allow(clippy::excessive_precision)]
pub(crate) const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// Absolute tolerance for pole detection at non-positive integers.
pub const POLE_TOLERANCE: f64 = 1e-12;

fn check_finite(s: f64, what: &'static str) -> Result<(), SpecFunError> {
    if s.is_finite() {
        Ok(())
    } else {
        Err(SpecFunError::Domain { what, value: s })
    }
}

fn near_nonpositive_integer(s: f64) -> bool {
    if s > 0.5 {
        return false;
    }
    let r = s.round();
    r <= 0.0 && (s - r).abs() < POLE_TOLERANCE
}

/// Lanczos series A_g(z) at z = s - 1.
#[inline]
fn lanczos_sum(z: f64) -> f64 {
    let mut acc = LANCZOS_COEFFS[0];
    for (i, &c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        acc += c / (z + i as f64);
    }
    acc
}

/// ln Γ(s) for s >= 0.5 via the Lanczos formula.
fn log_gamma_lanczos(s: f64) -> f64 {
    let z = s - 1.0;
    let t = z + LANCZOS_G + 0.5;
    0.5 * (2.0 * std::f64::consts::PI).ln() + (z + 0.5) * t.ln() - t + lanczos_sum(z).ln()
}

/// sin(pi * s) with the argument reduced modulo 2 before multiplication,
/// so the sign and magnitude stay accurate for large |s|.
pub(crate) fn sin_pi(s: f64) -> f64 {
    let r = s - 2.0 * (s * 0.5).round();
    (std::f64::consts::PI * r).sin()
}

/// Γ(s) for real s away from the poles at 0, −1, −2, …
///
/// Relative accuracy ~1e-13; overflows to ±∞ beyond s ≈ 171.6.
pub fn gamma(s: f64) -> Result<f64, SpecFunError> {
    check_finite(s, "gamma argument must be finite")?;
    if near_nonpositive_integer(s) {
        return Err(SpecFunError::Pole { s });
    }
    if s < 0.5 {
        // reflection: Γ(s) Γ(1−s) = π / sin(π s)
        Ok(std::f64::consts::PI / (sin_pi(s) * gamma(1.0 - s)?))
    } else {
        Ok(log_gamma_lanczos(s).exp())
    }
}

/// ln Γ(s) for s > 0.
pub fn log_gamma(s: f64) -> Result<f64, SpecFunError> {
    check_finite(s, "log_gamma argument must be finite")?;
    if s <= 0.0 {
        return Err(SpecFunError::Domain {
            what: "log_gamma requires s > 0",
            value: s,
        });
    }
    if s < 0.5 {
        // Γ(s) > 0 on (0, 1/2), so the logarithm of the reflection formula is direct.
        Ok(std::f64::consts::PI.ln() - sin_pi(s).ln() - log_gamma_lanczos(1.0 - s))
    } else {
        Ok(log_gamma_lanczos(s))
    }
}

/// (ln |Γ(s)|, sign of Γ(s)) for real s away from the poles.
pub(crate) fn log_gamma_signed(s: f64) -> Result<(f64, f64), SpecFunError> {
    check_finite(s, "gamma argument must be finite")?;
    if near_nonpositive_integer(s) {
        return Err(SpecFunError::Pole { s });
    }
    if s > 0.0 {
        Ok((log_gamma(s)?, 1.0))
    } else {
        // |Γ(s)| = π / (|sin πs| Γ(1−s)); the sign is the sign of sin(πs).
        let sp = sin_pi(s);
        let l = std::f64::consts::PI.ln() - sp.abs().ln() - log_gamma_lanczos(1.0 - s);
        Ok((l, sp.signum()))
    }
}

/// Stirling approximant √(2πt) (t/e)^t of Γ(t+1), t > 0.
pub fn stirling(t: f64) -> Result<f64, SpecFunError> {
    Ok(log_stirling(t)?.exp())
}

/// ln of the Stirling approximant; stays finite where `stirling` overflows.
pub fn log_stirling(t: f64) -> Result<f64, SpecFunError> {
    check_finite(t, "stirling argument must be finite")?;
    if t <= 0.0 {
        return Err(SpecFunError::Domain {
            what: "stirling requires t > 0",
            value: t,
        });
    }
    Ok(0.5 * (2.0 * std::f64::consts::PI * t).ln() + t * (t.ln() - 1.0))
}

/// Parameters of a factorial polynomial t^{(γ)_h}.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FactorialPolyParams {
    /// Real exponent γ.
    pub gamma: f64,
    /// Difference interval h > 0.
    pub h: f64,
}

impl FactorialPolyParams {
    pub fn new(gamma: f64, h: f64) -> Result<Self, SpecFunError> {
        if !h.is_finite() || h <= 0.0 || !gamma.is_finite() {
            return Err(SpecFunError::Domain {
                what: "factorial polynomial requires finite gamma and h > 0",
                value: h,
            });
        }
        Ok(FactorialPolyParams { gamma, h })
    }
}

/// Factorial polynomial t^{(γ)_h} = h^γ Γ(t/h + 1) / Γ(t/h − γ + 1).
///
/// Evaluated as exp of a log-Gamma difference with sign tracking, so the
/// t = 1e5 asymptotic comparisons don't overflow intermediate values.
pub fn falling_factorial(t: f64, p: FactorialPolyParams) -> Result<f64, SpecFunError> {
    check_finite(t, "falling_factorial argument must be finite")?;
    let x1 = t / p.h + 1.0;
    let x2 = t / p.h - p.gamma + 1.0;
    let (l1, s1) = log_gamma_signed(x1)?;
    let (l2, s2) = log_gamma_signed(x2)?;
    Ok(s1 * s2 * (p.gamma * p.h.ln() + l1 - l2).exp())
}

/// Forward difference Δ_h f(t) = f(t + h) − f(t).
pub fn forward_difference<F: Fn(f64) -> f64>(f: F, t: f64, h: f64) -> f64 {
    f(t + h) - f(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    const SQRT_PI: f64 = 1.772_453_850_905_516;

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs()
    }

    #[test]
    fn gamma_integer_and_half_integer_values() {
        assert!(rel(gamma(5.0).unwrap(), 24.0) < 1e-12);
        assert!(rel(gamma(0.5).unwrap(), SQRT_PI) < 1e-12);
        // Γ(−1/2) = −2√π by the recurrence
        assert!(rel(gamma(-0.5).unwrap(), -2.0 * SQRT_PI) < 1e-12);
        assert!((gamma(-0.5).unwrap() - -3.544_907_701_811_032).abs() < 1e-12);
    }

    #[test]
    fn gamma_recurrence() {
        for &s in &[0.3, 1.7, 4.2, 9.9] {
            let lhs = gamma(s + 1.0).unwrap();
            let rhs = s * gamma(s).unwrap();
            assert!(rel(lhs, rhs) < 1e-12, "s={s}");
        }
    }

    #[test]
    fn gamma_reflection() {
        for &s in &[0.25, 0.5, 0.8] {
            let lhs = gamma(s).unwrap() * gamma(1.0 - s).unwrap();
            let rhs = std::f64::consts::PI / (std::f64::consts::PI * s).sin();
            assert!(rel(lhs, rhs) < 1e-12, "s={s}");
        }
    }

    #[test]
    fn gamma_poles_rejected() {
        for &s in &[0.0, -1.0, -3.0, -7.0 + 4e-13] {
            assert!(matches!(gamma(s), Err(SpecFunError::Pole { .. })), "s={s}");
        }
        assert!(gamma(f64::NAN).is_err());
    }

    #[test]
    fn log_gamma_values() {
        assert!(log_gamma(1.0).unwrap().abs() < 1e-14);
        assert!(rel(log_gamma(5.0).unwrap(), 24.0_f64.ln()) < 1e-14);
        // frozen against an arbitrary-precision evaluation
        assert!(rel(log_gamma(171.5).unwrap(), 709.143_163_030_928_2) < 1e-12);
        assert!(log_gamma(0.0).is_err());
        assert!(log_gamma(-2.5).is_err());
    }

    #[test]
    fn log_gamma_consistent_with_gamma() {
        let mut s = 0.1;
        while s <= 100.0 {
            assert!(
                rel(log_gamma(s).unwrap().exp(), gamma(s).unwrap()) < 1e-10,
                "s={s}"
            );
            s += 0.73;
        }
    }

    #[test]
    fn stirling_value_and_ratio() {
        assert!(rel(stirling(1.0).unwrap(), 0.922_137_008_895_789_1) < 1e-12);
        let r100 = gamma(101.0).unwrap() / stirling(100.0).unwrap();
        assert!((r100 - 1.0).abs() < 1e-3);
        // at t = 1e4 both sides overflow; compare in log space
        let lr = log_gamma(10_001.0).unwrap() - log_stirling(10_000.0).unwrap();
        assert!((lr.exp() - 1.0).abs() < 1e-5);
    }

    #[test]
    fn falling_factorial_integer_cases() {
        let p = FactorialPolyParams::new(2.0, 1.0).unwrap();
        assert!(rel(falling_factorial(5.0, p).unwrap(), 20.0) < 1e-12);
        let p = FactorialPolyParams::new(3.0, 2.0).unwrap();
        assert!(rel(falling_factorial(6.0, p).unwrap(), 48.0) < 1e-12);
    }

    #[test]
    fn falling_factorial_difference_rule() {
        // Δ_h t^{(γ)_h} = γ h t^{(γ−1)_h}
        for &g in &[0.5, 1.0, 2.3] {
            for &h in &[0.1, 1.0] {
                for &t in &[2.0, 10.0, 50.0] {
                    let p = FactorialPolyParams::new(g, h).unwrap();
                    let pm1 = FactorialPolyParams::new(g - 1.0, h).unwrap();
                    let lhs = falling_factorial(t + h, p).unwrap() - falling_factorial(t, p).unwrap();
                    let rhs = g * h * falling_factorial(t, pm1).unwrap();
                    assert!(rel(lhs, rhs) < 1e-9, "g={g} h={h} t={t}");
                }
            }
        }
    }

    #[test]
    fn falling_factorial_asymptotics() {
        // t^{(γ)_h} / t^γ -> 1, improving monotonically through the decades
        let p = FactorialPolyParams::new(0.7, 1.0).unwrap();
        let dev = |t: f64| {
            (falling_factorial(t, p).unwrap() / t.powf(0.7) - 1.0).abs()
        };
        let (d3, d4, d5) = (dev(1e3), dev(1e4), dev(1e5));
        assert!(d3 < 1e-2, "d3={d3}");
        assert!(d5 < 1e-3, "d5={d5}");
        assert!(d3 > d4 && d4 > d5, "not improving: {d3} {d4} {d5}");
    }

    #[test]
    fn power_asymptotic_identity() {
        // (t−x)^{t−x} / (e^{−x} t^{t−x}) -> 1, checked in log space
        let (t, x) = (1e4_f64, 2.0_f64);
        let lhs = (t - x) * (t - x).ln();
        let rhs = -x + (t - x) * t.ln();
        assert!(((lhs - rhs).exp() - 1.0).abs() < 1e-3);
    }

    #[test]
    fn forward_difference_basics() {
        assert_eq!(forward_difference(|t| t, 3.0, 0.5), 0.5);
        assert_eq!(forward_difference(|_| 7.0, 1.2, 0.9), 0.0);
        assert_eq!(forward_difference(|t| t * t, 1.0, 1.0), 3.0);
    }
}
