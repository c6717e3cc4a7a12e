//! Closed-form predictions tying regularity to Fourier decay.
//!
//! The forward direction: an absolutely continuous, uniformly μ-Hölder
//! function whose difference function Δ_h f has a uniformly bounded number of
//! oscillations decays like |c_k| ∈ O(1/k^{1+m+μ}). The reverse direction
//! recovers (m, μ) from a decay exponent, with absolute continuity implied
//! only for μ > 1/2. Chirps |x|^α sin(1/|x|^β) violate the bounded-oscillation
//! hypothesis and get their own case analysis driven by Mellin–Barnes
//! asymptotics and the pole-coincidence conditions
//! α + c ≠ β + βd (I₁) and α + c ≠ 2β + βd (I₂).

use crate::catalog::{FunctionDescriptor, Kind};
use serde::Serialize;
use std::fmt;

/// Default c,d search bound for the floating-point pole-coincidence scan.
pub const DEFAULT_POLE_SEARCH_BOUND: u32 = 10_000;

#[derive(Debug, Clone, PartialEq)]
pub enum TheoryError {
    Domain { what: String },
    /// Chirp parameters hit a pole coincidence; the decay rate is undetermined here.
    PoleCoincidence { alpha: f64, beta: f64 },
}

impl fmt::Display for TheoryError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TheoryError::Domain { what } => write!(f, "{what}"),
            TheoryError::PoleCoincidence { alpha, beta } => write!(
                f,
                "pole coincidence for (alpha, beta) = ({alpha}, {beta}): asymptotic rate undetermined"
            ),
        }
    }
}

impl std::error::Error for TheoryError {}

/// Which closed-form result produced a prediction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Source {
    Theorem1,
    ChirpSeries,
    ChirpFt,
    KnownExample,
}

/// Named hypothesis checklist attached to a prediction.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Conditions {
    pub absolutely_continuous: bool,
    pub holder: bool,
    pub finite_oscillations: bool,
    /// None when pole conditions are not applicable (non-chirp predictions).
    pub pole_conditions: Option<bool>,
}

/// A decay/regularity prediction.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TheoryPrediction {
    /// ρ with |c_k| ∈ O(1/|k|^ρ) (or |f̂(ν)| ∈ O(1/|ν|^ρ)).
    pub decay_exponent: f64,
    /// Uniform Hölder exponent the prediction is based on (or implies).
    pub holder_exponent: f64,
    /// Smoothness order m (number of absolutely continuous derivatives used).
    pub smoothness_order: u32,
    pub conditions: Conditions,
    pub source: Source,
}

/// Decay 1 + m + μ under absolute continuity, μ-Hölder continuity and
/// uniformly bounded oscillations of Δ_h f^{(m)}.
pub fn predict_theorem1(m: u32, mu: f64) -> Result<TheoryPrediction, TheoryError> {
    if !(mu > 0.0 && mu <= 1.0) {
        return Err(TheoryError::Domain {
            what: format!("mu must lie in (0, 1], got {mu}"),
        });
    }
    Ok(TheoryPrediction {
        decay_exponent: 1.0 + m as f64 + mu,
        holder_exponent: mu,
        smoothness_order: m,
        conditions: Conditions {
            absolutely_continuous: true,
            holder: true,
            finite_oscillations: true,
            pole_conditions: None,
        },
        source: Source::Theorem1,
    })
}

/// What a decay exponent implies about absolute continuity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum AcImplication {
    /// μ > 1/2: the function (or its m-th derivative) is absolutely continuous.
    Implied,
    /// μ = 1/2 exactly: whether this implies absolute continuity is an open question.
    OpenQuestionAtHalf,
    /// μ < 1/2: non-absolutely-continuous functions with this decay exist.
    Undecidable,
}

/// Regularity recovered from a coefficient decay exponent ρ > 1.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct InferredRegularity {
    pub smoothness_order: u32,
    pub mu: f64,
    pub ac: AcImplication,
}

impl InferredRegularity {
    pub fn implies_ac(&self) -> bool {
        self.ac == AcImplication::Implied
    }
}

/// Invert ρ = 1 + m + μ: requires ρ > 1 with fractional part strictly inside (0, 1).
pub fn infer_holder_from_decay(rho: f64) -> Result<InferredRegularity, TheoryError> {
    if !rho.is_finite() || rho <= 1.0 {
        return Err(TheoryError::Domain {
            what: format!("decay exponent must exceed 1, got {rho}"),
        });
    }
    let m = (rho - 1.0).floor();
    let mu = rho - 1.0 - m;
    if !(1e-12..=1.0 - 1e-12).contains(&mu) {
        return Err(TheoryError::Domain {
            what: format!("rho - 1 must not be an integer (mu in (0,1) strictly), got rho = {rho}"),
        });
    }
    let ac = if (mu - 0.5).abs() <= 1e-12 {
        AcImplication::OpenQuestionAtHalf
    } else if mu > 0.5 {
        AcImplication::Implied
    } else {
        AcImplication::Undecidable
    };
    Ok(InferredRegularity {
        smoothness_order: m as u32,
        mu,
        ac,
    })
}

/// Uniform Hölder exponent α/(1+β) of the chirp |x|^α sin(1/|x|^β).
pub fn chirp_holder(alpha: f64, beta: f64) -> Result<f64, TheoryError> {
    if alpha.is_nan() || beta.is_nan() || alpha <= 0.0 || beta <= 0.0 {
        return Err(TheoryError::Domain {
            what: format!("chirp requires alpha, beta > 0, got ({alpha}, {beta})"),
        });
    }
    let h = alpha / (1.0 + beta);
    if h > 1.0 {
        return Err(TheoryError::Domain {
            what: format!("alpha/(1+beta) = {h} exceeds 1; exponent only valid up to the Lipschitz case"),
        });
    }
    Ok(h)
}

/// Which chirp Mellin integral a pole condition refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ChirpIntegralKind {
    I1,
    I2,
}

/// True iff a pole coincidence exists: some c, d ∈ ℕ₀ with
/// α + c = βs + βd, where s = 1 for I₁ and s = 2 for I₂.
///
/// When both α and β are recognizably rational the condition is decided
/// exactly by integer arithmetic over unbounded c, d; otherwise a bounded
/// floating-point scan with tolerance 1e-12 is used.
pub fn pole_coincidence(alpha: f64, beta: f64, which: ChirpIntegralKind, search_bound: u32) -> bool {
    let shift = match which {
        ChirpIntegralKind::I1 => 1,
        ChirpIntegralKind::I2 => 2,
    };
    if let (Some((pa, qa)), Some((pb, qb))) = (to_rational(alpha), to_rational(beta)) {
        return rational_coincidence(pa, qa, pb, qb, shift);
    }
    // float fallback: alpha + c = beta*(shift + d)
    for c in 0..=search_bound {
        let lhs = alpha + c as f64;
        let d = (lhs / beta - shift as f64).round();
        if d >= 0.0 && (lhs - beta * (shift as f64 + d)).abs() < 1e-12 {
            return true;
        }
    }
    false
}

/// Continued-fraction rational recognition with denominator up to 1e6.
fn to_rational(x: f64) -> Option<(i128, i128)> {
    if !x.is_finite() || x <= 0.0 {
        return None;
    }
    let (mut p0, mut q0, mut p1, mut q1) = (0i128, 1i128, 1i128, 0i128);
    let mut v = x;
    for _ in 0..40 {
        let a = v.floor();
        if a > 1e15 {
            break;
        }
        let ai = a as i128;
        let (p2, q2) = (ai * p1 + p0, ai * q1 + q0);
        if q2 > 1_000_000 {
            break;
        }
        (p0, q0, p1, q1) = (p1, q1, p2, q2);
        let frac = v - a;
        if frac.abs() < 1e-12 {
            break;
        }
        v = 1.0 / frac;
    }
    if q1 == 0 {
        return None;
    }
    let approx = p1 as f64 / q1 as f64;
    if (x - approx).abs() <= 1e-9 / (q1 as f64 * q1 as f64) {
        Some((p1, q1))
    } else {
        None
    }
}

/// Exact decision of ∃ c,d ≥ 0: pa/qa + c = (pb/qb)(s + d) via the linear
/// congruence c·(qa·qb) ≡ −pa·qb (mod pb·qa); solvability is sufficient since
/// the quotient grows without bound in c.
fn rational_coincidence(pa: i128, qa: i128, pb: i128, qb: i128, shift: i128) -> bool {
    let a = qa * qb;
    let b = pb * qa;
    let c0 = pa * qb;
    let g = gcd(a, b);
    // c*a = -c0 (mod b) solvable iff gcd(a,b) | c0; shift only moves the
    // required quotient floor, which large c always clears
    let _ = shift;
    c0 % g == 0
}

fn gcd(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Whether a chirp prediction concerns the periodized Fourier series or the
/// Fourier transform on the line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ChirpDecayMode {
    /// Fourier coefficients of the 2L-periodized even chirp; the periodization
    /// boundary contributes an extra O(1/k²) term that caps the rate at 2.
    Series,
    /// Fourier transform on the line; no boundary term.
    Transform,
}

/// Predicted decay exponent for an absolutely continuous chirp (0 < β < α).
///
/// The raw rate is 1 + α − β − β(β−α) for α < 2β and 1 + α − β + β² for
/// α ≥ 2β (the two agree at α = 2β). Series mode takes the minimum with the
/// O(1/k²) boundary term and with the I₁-driven term 1 + α + β²; Transform
/// mode omits the boundary term.
pub fn predict_chirp_decay(
    alpha: f64,
    beta: f64,
    mode: ChirpDecayMode,
) -> Result<TheoryPrediction, TheoryError> {
    if !(beta > 0.0 && beta < alpha) {
        return Err(TheoryError::Domain {
            what: format!(
                "chirp decay prediction requires 0 < beta < alpha (absolute continuity), got ({alpha}, {beta})"
            ),
        });
    }
    let ok1 = !pole_coincidence(alpha, beta, ChirpIntegralKind::I1, DEFAULT_POLE_SEARCH_BOUND);
    let ok2 = !pole_coincidence(alpha, beta, ChirpIntegralKind::I2, DEFAULT_POLE_SEARCH_BOUND);
    if !ok1 || !ok2 {
        return Err(TheoryError::PoleCoincidence { alpha, beta });
    }
    let raw = if alpha < 2.0 * beta {
        1.0 + alpha - beta - beta * (beta - alpha)
    } else {
        1.0 + alpha - beta + beta * beta
    };
    let i1_term = 1.0 + alpha + beta * beta;
    let decay = match mode {
        ChirpDecayMode::Series => raw.min(i1_term).min(2.0),
        ChirpDecayMode::Transform => raw.min(i1_term),
    };
    Ok(TheoryPrediction {
        decay_exponent: decay,
        holder_exponent: chirp_holder(alpha, beta)?,
        smoothness_order: 0,
        conditions: Conditions {
            absolutely_continuous: true,
            holder: true,
            finite_oscillations: false,
            pole_conditions: Some(true),
        },
        source: match mode {
            ChirpDecayMode::Series => Source::ChirpSeries,
            ChirpDecayMode::Transform => Source::ChirpFt,
        },
    })
}

/// Route a catalog descriptor to its decay prediction.
pub fn predict_catalog(d: &FunctionDescriptor) -> Result<TheoryPrediction, TheoryError> {
    match d.kind {
        Kind::PowerAbs { mu } | Kind::GaussPower { mu } => predict_theorem1(0, mu),
        Kind::ExpAbs { .. } => predict_theorem1(0, 1.0),
        Kind::Chirp { alpha, beta } => predict_chirp_decay(alpha, beta, ChirpDecayMode::Series),
        Kind::Weierstrass { mu, .. } => Ok(TheoryPrediction {
            // along the lacunary frequencies k = b^j
            decay_exponent: mu,
            holder_exponent: mu,
            smoothness_order: 0,
            conditions: Conditions {
                absolutely_continuous: false,
                holder: true,
                finite_oscillations: false,
                pole_conditions: None,
            },
            source: Source::KnownExample,
        }),
        Kind::CantorLebesgue { .. } => Ok(TheoryPrediction {
            decay_exponent: 1.0,
            holder_exponent: 2.0_f64.ln() / 3.0_f64.ln(),
            smoothness_order: 0,
            conditions: Conditions {
                absolutely_continuous: false,
                holder: true,
                finite_oscillations: false,
                pole_conditions: None,
            },
            source: Source::KnownExample,
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::FunctionDescriptor;

    #[test]
    fn theorem1_values() {
        assert!((predict_theorem1(0, 0.7).unwrap().decay_exponent - 1.7).abs() < 1e-12);
        assert!((predict_theorem1(0, 1.0).unwrap().decay_exponent - 2.0).abs() < 1e-12);
        assert!((predict_theorem1(2, 0.5).unwrap().decay_exponent - 3.5).abs() < 1e-12);
        assert!(predict_theorem1(0, 0.0).is_err());
        assert!(predict_theorem1(0, 1.5).is_err());
    }

    #[test]
    fn infer_holder_cases() {
        let r = infer_holder_from_decay(1.66).unwrap();
        assert_eq!(r.smoothness_order, 0);
        assert!((r.mu - 0.66).abs() < 1e-12);
        assert!(r.implies_ac());

        let r = infer_holder_from_decay(1.3).unwrap();
        assert!((r.mu - 0.3).abs() < 1e-12);
        assert_eq!(r.ac, AcImplication::Undecidable);

        let r = infer_holder_from_decay(2.5).unwrap();
        assert_eq!(r.smoothness_order, 1);
        assert!((r.mu - 0.5).abs() < 1e-12);
        assert_eq!(r.ac, AcImplication::OpenQuestionAtHalf);

        assert!(infer_holder_from_decay(1.0).is_err());
        assert!(infer_holder_from_decay(2.0).is_err());
    }

    #[test]
    fn chirp_holder_values() {
        assert!((chirp_holder(0.7, 0.5).unwrap() - 7.0 / 15.0).abs() < 1e-15);
        assert!((chirp_holder(0.9, 0.4).unwrap() - 9.0 / 14.0).abs() < 1e-15);
        assert!((chirp_holder(1.0, 1.0).unwrap() - 0.5).abs() < 1e-15);
        assert!(chirp_holder(2.5, 0.2).is_err());
    }

    #[test]
    fn pole_coincidence_cases() {
        // 7 + 10c != 5 + 5d: left side always ends in 7
        assert!(!pole_coincidence(0.7, 0.5, ChirpIntegralKind::I1, 10_000));
        assert!(!pole_coincidence(0.7, 0.5, ChirpIntegralKind::I2, 10_000));
        // 9 + 10c != 4 + 4d: left odd, right even
        assert!(!pole_coincidence(0.9, 0.4, ChirpIntegralKind::I1, 10_000));
        assert!(!pole_coincidence(0.9, 0.4, ChirpIntegralKind::I2, 10_000));
        // alpha = beta: c = d = 0 works
        assert!(pole_coincidence(0.5, 0.5, ChirpIntegralKind::I1, 10_000));
        // alpha = 3 beta: c = 0, d = 1 for I2
        assert!(pole_coincidence(0.9, 0.3, ChirpIntegralKind::I2, 10_000));
        // irrational-ish beta: falls to bounded scan
        assert!(!pole_coincidence(0.7, std::f64::consts::FRAC_1_SQRT_2, ChirpIntegralKind::I1, 1000));
    }

    #[test]
    fn chirp_decay_paper_pairs() {
        let p = predict_chirp_decay(0.7, 0.5, ChirpDecayMode::Series).unwrap();
        assert!((p.decay_exponent - 1.3).abs() < 1e-12);
        let p = predict_chirp_decay(0.9, 0.4, ChirpDecayMode::Series).unwrap();
        assert!((p.decay_exponent - 1.66).abs() < 1e-12);
        let p = predict_chirp_decay(0.9, 0.4, ChirpDecayMode::Transform).unwrap();
        assert!((p.decay_exponent - 1.66).abs() < 1e-12);
        assert!(predict_chirp_decay(0.5, 0.5, ChirpDecayMode::Series).is_err());
        assert!(matches!(
            predict_chirp_decay(0.6, 0.3, ChirpDecayMode::Series),
            Err(TheoryError::PoleCoincidence { .. })
        ));
    }

    #[test]
    fn series_cap_and_branch_continuity() {
        // Series-mode rate never exceeds 2 and matches Transform whenever
        // the Transform rate is at most 2.
        let mut beta = 0.1_f64;
        while beta < 0.95 {
            let alpha = (beta + 0.17).min(1.0);
            if let (Ok(s), Ok(t)) = (
                predict_chirp_decay(alpha, beta, ChirpDecayMode::Series),
                predict_chirp_decay(alpha, beta, ChirpDecayMode::Transform),
            ) {
                assert!(s.decay_exponent <= 2.0 + 1e-15);
                if t.decay_exponent <= 2.0 {
                    assert!((s.decay_exponent - t.decay_exponent).abs() < 1e-12);
                }
            }
            beta += 0.1;
        }
        // the two branch formulas agree at alpha = 2 beta
        for i in 1..10 {
            let b = i as f64 / 10.0;
            let low = 1.0 + 2.0 * b - b - b * (b - 2.0 * b);
            let high = 1.0 + 2.0 * b - b + b * b;
            assert!((low - high).abs() < 1e-12, "beta={b}");
        }
    }

    #[test]
    fn theorem1_roundtrip_through_inference() {
        for &(m, mu) in &[(0u32, 0.3), (0, 0.66), (1, 0.25), (3, 0.9)] {
            let p = predict_theorem1(m, mu).unwrap();
            let r = infer_holder_from_decay(p.decay_exponent).unwrap();
            assert_eq!(r.smoothness_order, m);
            assert!((r.mu - mu).abs() < 1e-12);
        }
    }

    #[test]
    fn chirp_gap_and_smoothness_bonus() {
        // (0.7, 0.5): predicted series decay 1.3 < 1 + alpha/(1+beta) = 1.4666...,
        // the strict gap showing unbounded oscillation slows the decay.
        let p = predict_chirp_decay(0.7, 0.5, ChirpDecayMode::Series).unwrap();
        assert!(p.decay_exponent < 1.0 + chirp_holder(0.7, 0.5).unwrap() - 1e-9);
        // (0.9, 0.4): decay 1.66 implies mu = 0.66 > 9/14, i.e. smoother than
        // the direct chirp bound.
        let r = infer_holder_from_decay(1.66).unwrap();
        assert!(r.mu > chirp_holder(0.9, 0.4).unwrap() + 1e-9);
    }

    #[test]
    fn catalog_dispatch() {
        let p = predict_catalog(&FunctionDescriptor::power_abs(0.7, 1.0).unwrap()).unwrap();
        assert!((p.decay_exponent - 1.7).abs() < 1e-12);
        let c = predict_catalog(&FunctionDescriptor::cantor_lebesgue(40, 1.0).unwrap()).unwrap();
        assert!((c.decay_exponent - 1.0).abs() < 1e-15);
        let w = predict_catalog(&FunctionDescriptor::weierstrass(3, 0.5, 1.0).unwrap()).unwrap();
        assert!((w.decay_exponent - 0.5).abs() < 1e-15);
        let e = predict_catalog(&FunctionDescriptor::exp_abs(1.0, 20.0).unwrap()).unwrap();
        assert!((e.decay_exponent - 2.0).abs() < 1e-15);
    }
}
