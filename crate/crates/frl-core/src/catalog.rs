//! Test-function catalog with exact evaluators and ground-truth regularity
//! metadata.
//!
//! Every descriptor lives on [−L, L] and is extended 2L-periodically by the
//! sampling code. The cusp-type functions (chirp, |x|^μ, e^{−a|x|},
//! Gaussian-weighted cusp) are even; the Cantor–Lebesgue function is the
//! classic middle-thirds cumulative distribution mapped onto [−L, L].

use crate::theory;
use serde::{Deserialize, Serialize};
use std::fmt;

/// Errors from descriptor construction and evaluation.
#[derive(Debug, Clone, PartialEq)]
pub enum CatalogError {
    /// A parameter violates the descriptor's invariants.
    InvalidParameter { what: String },
    /// Evaluation outside [−L, L].
    OutOfDomain { x: f64, halfwidth: f64 },
}

impl fmt::Display for CatalogError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogError::InvalidParameter { what } => write!(f, "invalid parameter: {what}"),
            CatalogError::OutOfDomain { x, halfwidth } => {
                write!(f, "x = {x} outside [-{halfwidth}, {halfwidth}]")
            }
        }
    }
}

impl std::error::Error for CatalogError {}

/// The function family and its parameters.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "params", rename_all = "lowercase")]
pub enum Kind {
    /// |x|^α sin(1/|x|^β), 0 at the origin.
    Chirp { alpha: f64, beta: f64 },
    /// |x|^μ.
    PowerAbs { mu: f64 },
    /// Σ_{k≥1} b^{−kμ} cos(b^k π x).
    Weierstrass { base: u32, mu: f64 },
    /// Middle-thirds Cantor function of (x+L)/(2L), computed to `depth` ternary digits.
    CantorLebesgue { depth: u32 },
    /// e^{−a|x|}.
    ExpAbs { a: f64 },
    /// e^{−πx²} |x|^μ.
    GaussPower { mu: f64 },
}

/// A named analytic test function with parameters and domain half-width.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FunctionDescriptor {
    #[serde(flatten)]
    pub kind: Kind,
    #[serde(rename = "L")]
    pub domain_halfwidth: f64,
}

/// Ground-truth regularity attached to a catalog function.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RegularityMetadata {
    /// Known uniform Hölder exponent bound, in (0, 1].
    pub holder_exponent_bound: f64,
    /// Predicted Fourier-coefficient decay exponent ρ (|c_k| ∈ O(1/k^ρ)),
    /// when a prediction exists.
    pub decay_exponent_predicted: Option<f64>,
    pub is_ac: bool,
    pub is_bv: bool,
    pub finite_oscillations: bool,
}

/// Below which |x| the chirp evaluator switches to double-double phase
/// reduction; above it a plain f64 power keeps the phase accurate enough.
const CHIRP_DD_THRESHOLD: f64 = 1e-4;

/// Weierstrass partial sums stop once the term amplitude drops below this.
const WEIERSTRASS_TERM_TOL: f64 = 1e-15;

/// Default ternary depth of the Cantor–Lebesgue evaluator: 3^{−40} is far
/// below the grid spacing of any experiment run here.
pub const CANTOR_DEFAULT_DEPTH: u32 = 40;

impl FunctionDescriptor {
    pub fn new(kind: Kind, domain_halfwidth: f64) -> Result<Self, CatalogError> {
        let d = FunctionDescriptor { kind, domain_halfwidth };
        d.validate()?;
        Ok(d)
    }

    pub fn chirp(alpha: f64, beta: f64, l: f64) -> Result<Self, CatalogError> {
        Self::new(Kind::Chirp { alpha, beta }, l)
    }

    pub fn power_abs(mu: f64, l: f64) -> Result<Self, CatalogError> {
        Self::new(Kind::PowerAbs { mu }, l)
    }

    pub fn weierstrass(base: u32, mu: f64, l: f64) -> Result<Self, CatalogError> {
        Self::new(Kind::Weierstrass { base, mu }, l)
    }

    pub fn cantor_lebesgue(depth: u32, l: f64) -> Result<Self, CatalogError> {
        Self::new(Kind::CantorLebesgue { depth }, l)
    }

    pub fn exp_abs(a: f64, l: f64) -> Result<Self, CatalogError> {
        Self::new(Kind::ExpAbs { a }, l)
    }

    pub fn gauss_power(mu: f64, l: f64) -> Result<Self, CatalogError> {
        Self::new(Kind::GaussPower { mu }, l)
    }

    /// Check all parameter invariants (also used after deserializing).
    pub fn validate(&self) -> Result<(), CatalogError> {
        let bad = |what: String| Err(CatalogError::InvalidParameter { what });
        if !self.domain_halfwidth.is_finite() || self.domain_halfwidth <= 0.0 {
            return bad(format!("domain halfwidth must be positive, got {}", self.domain_halfwidth));
        }
        match self.kind {
            Kind::Chirp { alpha, beta } => {
                if !(alpha > 0.0 && beta > 0.0) {
                    return bad(format!("chirp requires alpha > 0 and beta > 0, got ({alpha}, {beta})"));
                }
            }
            Kind::PowerAbs { mu } | Kind::GaussPower { mu } => {
                if !(mu > 0.0 && mu < 1.0) {
                    return bad(format!("mu must lie in (0, 1), got {mu}"));
                }
            }
            Kind::Weierstrass { base, mu } => {
                if base < 2 {
                    return bad(format!("weierstrass base must be >= 2, got {base}"));
                }
                if !(mu > 0.0 && mu < 1.0) {
                    return bad(format!("mu must lie in (0, 1), got {mu}"));
                }
            }
            Kind::CantorLebesgue { depth } => {
                if depth < 1 {
                    return bad("cantor depth must be >= 1".to_string());
                }
            }
            Kind::ExpAbs { a } => {
                if a.is_nan() || a <= 0.0 {
                    return bad(format!("exp_abs requires a > 0, got {a}"));
                }
            }
        }
        Ok(())
    }

    /// Exact function value at x ∈ [−L, L].
    pub fn evaluate(&self, x: f64) -> Result<f64, CatalogError> {
        if x.abs() > self.domain_halfwidth {
            return Err(CatalogError::OutOfDomain {
                x,
                halfwidth: self.domain_halfwidth,
            });
        }
        Ok(self.eval_raw(x))
    }

    /// Unchecked evaluation; used by the samplers/estimators which keep x in
    /// range themselves.
    pub(crate) fn eval_raw(&self, x: f64) -> f64 {
        let ax = x.abs();
        match self.kind {
            Kind::Chirp { alpha, beta } => {
                if ax == 0.0 {
                    0.0
                } else if ax < CHIRP_DD_THRESHOLD {
                    ax.powf(alpha) * crate::dd::sin_recip_pow(ax, beta)
                } else {
                    ax.powf(alpha) * (ax.powf(-beta)).sin()
                }
            }
            Kind::PowerAbs { mu } => {
                if ax == 0.0 {
                    0.0
                } else {
                    ax.powf(mu)
                }
            }
            Kind::Weierstrass { base, mu } => {
                let b = base as f64;
                let mut sum = 0.0;
                let mut amp = b.powf(-mu);
                let mut bk = b;
                while amp >= WEIERSTRASS_TERM_TOL {
                    sum += amp * (bk * std::f64::consts::PI * x).cos();
                    amp *= b.powf(-mu);
                    bk *= b;
                }
                sum
            }
            Kind::CantorLebesgue { depth } => {
                let u = ((x + self.domain_halfwidth) / (2.0 * self.domain_halfwidth)).clamp(0.0, 1.0);
                cantor_function(u, depth)
            }
            Kind::ExpAbs { a } => (-a * ax).exp(),
            Kind::GaussPower { mu } => {
                if ax == 0.0 {
                    0.0
                } else {
                    (-std::f64::consts::PI * x * x).exp() * ax.powf(mu)
                }
            }
        }
    }

    /// Borrow an unchecked evaluator closure for grid sweeps.
    pub fn evaluator(&self) -> impl Fn(f64) -> f64 + '_ {
        move |x| self.eval_raw(x)
    }

    /// Known singular abscissae (cusp locations) inside the domain.
    pub(crate) fn singular_points(&self) -> &'static [f64] {
        match self.kind {
            Kind::Chirp { .. } | Kind::PowerAbs { .. } | Kind::ExpAbs { .. } | Kind::GaussPower { .. } => &[0.0],
            Kind::Weierstrass { .. } | Kind::CantorLebesgue { .. } => &[],
        }
    }

    /// Ground-truth regularity metadata.
    pub fn metadata(&self) -> RegularityMetadata {
        match self.kind {
            Kind::Chirp { alpha, beta } => {
                let ac = alpha > beta;
                let decay = theory::predict_chirp_decay(alpha, beta, theory::ChirpDecayMode::Series)
                    .ok()
                    .map(|p| p.decay_exponent);
                RegularityMetadata {
                    holder_exponent_bound: (alpha / (1.0 + beta)).min(1.0),
                    decay_exponent_predicted: decay,
                    is_ac: ac,
                    is_bv: ac,
                    finite_oscillations: false,
                }
            }
            Kind::PowerAbs { mu } => RegularityMetadata {
                holder_exponent_bound: mu,
                decay_exponent_predicted: Some(1.0 + mu),
                is_ac: true,
                is_bv: true,
                finite_oscillations: true,
            },
            Kind::Weierstrass { mu, .. } => RegularityMetadata {
                // decay exponent μ holds along the lacunary frequencies b^j
                holder_exponent_bound: mu,
                decay_exponent_predicted: Some(mu),
                is_ac: false,
                is_bv: false,
                finite_oscillations: false,
            },
            Kind::CantorLebesgue { .. } => RegularityMetadata {
                holder_exponent_bound: 2.0_f64.ln() / 3.0_f64.ln(),
                decay_exponent_predicted: Some(1.0),
                is_ac: false,
                is_bv: true,
                finite_oscillations: false,
            },
            Kind::ExpAbs { .. } => RegularityMetadata {
                holder_exponent_bound: 1.0,
                decay_exponent_predicted: Some(2.0),
                is_ac: true,
                is_bv: true,
                finite_oscillations: true,
            },
            Kind::GaussPower { mu } => RegularityMetadata {
                holder_exponent_bound: mu,
                decay_exponent_predicted: Some(1.0 + mu),
                is_ac: true,
                is_bv: true,
                finite_oscillations: true,
            },
        }
    }

    /// Closed-form Fourier transform, where one exists.
    ///
    /// Only e^{−a|t|} has one here: 2a / (a² + (2πν)²).
    pub fn closed_form_ft(&self, nu: f64) -> Option<f64> {
        match self.kind {
            Kind::ExpAbs { a } => {
                let w = 2.0 * std::f64::consts::PI * nu;
                Some(2.0 * a / (a * a + w * w))
            }
            _ => None,
        }
    }
}

/// Middle-thirds Cantor function on [0, 1] via the ternary-digit walk.
fn cantor_function(u: f64, depth: u32) -> f64 {
    debug_assert!((0.0..=1.0).contains(&u));
    if u >= 1.0 {
        return 1.0;
    }
    let mut x = u;
    let mut value = 0.0;
    let mut scale = 0.5;
    for _ in 0..depth {
        x *= 3.0;
        let mut digit = x as u32;
        if digit > 2 {
            digit = 2;
        }
        x -= digit as f64;
        if digit == 1 {
            // landed in a removed middle third: the function is flat here
            return value + scale;
        }
        if digit == 2 {
            value += scale;
        }
        scale *= 0.5;
    }
    value
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chirp_zero_at_sine_nodes() {
        let d = FunctionDescriptor::chirp(0.7, 0.5, 1.0).unwrap();
        // 1/x^0.5 = 2 pi n  =>  x = (2 pi n)^{-2}
        for n in 1..5 {
            let x = (2.0 * std::f64::consts::PI * n as f64).powi(-2);
            assert!(d.evaluate(x).unwrap().abs() < 1e-12, "n={n}");
        }
        assert_eq!(d.evaluate(0.0).unwrap(), 0.0);
    }

    #[test]
    fn power_abs_values() {
        let d = FunctionDescriptor::power_abs(0.7, 1.0).unwrap();
        assert_eq!(d.evaluate(-1.0).unwrap(), 1.0);
        assert_eq!(d.evaluate(0.0).unwrap(), 0.0);
        assert!(d.evaluate(1.5).is_err());
    }

    #[test]
    fn cantor_classic_values() {
        let d = FunctionDescriptor::cantor_lebesgue(CANTOR_DEFAULT_DEPTH, 1.0).unwrap();
        // x = 1/3 on [0,1] maps to x = -1/3 on [-1,1]
        let v = d.evaluate(-1.0 / 3.0).unwrap();
        assert!((v - 0.5).abs() < 1e-12);
        assert_eq!(d.evaluate(-1.0).unwrap(), 0.0);
        assert_eq!(d.evaluate(1.0).unwrap(), 1.0);
    }

    #[test]
    fn cantor_monotone_on_grid() {
        let d = FunctionDescriptor::cantor_lebesgue(CANTOR_DEFAULT_DEPTH, 1.0).unwrap();
        let n = 10_000;
        let mut prev = -1.0;
        for i in 0..=n {
            let x = -1.0 + 2.0 * i as f64 / n as f64;
            let v = d.evaluate(x).unwrap();
            assert!(v >= prev - 1e-9, "not monotone at x={x}");
            prev = v;
        }
    }

    #[test]
    fn evenness() {
        let descriptors = [
            FunctionDescriptor::chirp(0.7, 0.5, 1.0).unwrap(),
            FunctionDescriptor::power_abs(0.7, 1.0).unwrap(),
            FunctionDescriptor::exp_abs(1.0, 1.0).unwrap(),
            FunctionDescriptor::gauss_power(0.5, 1.0).unwrap(),
            FunctionDescriptor::weierstrass(3, 0.5, 1.0).unwrap(),
        ];
        for d in &descriptors {
            for i in 1..40 {
                let x = i as f64 / 40.0;
                assert_eq!(d.evaluate(x).unwrap(), d.evaluate(-x).unwrap());
            }
        }
    }

    #[test]
    fn chirp_sign_constant_between_sine_zeros() {
        let d = FunctionDescriptor::chirp(0.7, 0.5, 1.0).unwrap();
        let beta = 0.5;
        // lobes between phase n*pi and (n+1)*pi, sampled densely
        for n in 1..11 {
            let x_hi = (n as f64 * std::f64::consts::PI).powf(-1.0 / beta);
            let x_lo = ((n + 1) as f64 * std::f64::consts::PI).powf(-1.0 / beta);
            let mut sign = 0.0;
            for i in 1..200 {
                let x = x_lo + (x_hi - x_lo) * i as f64 / 200.0;
                let v = d.evaluate(x).unwrap();
                if v.abs() < 1e-14 {
                    continue;
                }
                if sign == 0.0 {
                    sign = v.signum();
                } else {
                    assert_eq!(v.signum(), sign, "sign flip inside lobe {n}");
                }
            }
        }
    }

    #[test]
    fn weierstrass_truncation_tail_bound() {
        // |K-term sum - (K+10)-term sum| <= b^{-K mu} / (1 - b^{-mu})
        let (b, mu) = (3.0_f64, 0.5_f64);
        let partial = |x: f64, terms: u32| -> f64 {
            (1..=terms).map(|k| b.powf(-(k as f64) * mu) * (b.powi(k as i32) * std::f64::consts::PI * x).cos()).sum()
        };
        let k = 12;
        let bound = b.powf(-(k as f64) * mu) / (1.0 - b.powf(-mu));
        for i in 0..50 {
            let x = -1.0 + 2.0 * i as f64 / 50.0;
            let diff = (partial(x, k) - partial(x, k + 10)).abs();
            assert!(diff <= bound * (1.0 + 1e-12), "x={x} diff={diff} bound={bound}");
        }
    }

    #[test]
    fn closed_form_ft_expabs_only() {
        let e = FunctionDescriptor::exp_abs(1.0, 20.0).unwrap();
        assert_eq!(e.closed_form_ft(0.0), Some(2.0));
        let v10 = e.closed_form_ft(10.0).unwrap();
        assert!((v10 - 2.0 / (1.0 + 400.0 * std::f64::consts::PI.powi(2))).abs() < 1e-18);
        let e2 = FunctionDescriptor::exp_abs(2.0, 20.0).unwrap();
        assert_eq!(e2.closed_form_ft(0.0), Some(1.0));
        assert_eq!(FunctionDescriptor::power_abs(0.5, 1.0).unwrap().closed_form_ft(1.0), None);
    }

    #[test]
    fn metadata_ground_truth() {
        let c75 = FunctionDescriptor::chirp(0.7, 0.5, 1.0).unwrap().metadata();
        assert!((c75.holder_exponent_bound - 7.0 / 15.0).abs() < 1e-15);
        assert!((c75.decay_exponent_predicted.unwrap() - 1.3).abs() < 1e-12);
        assert!(c75.is_ac && c75.is_bv && !c75.finite_oscillations);

        let c94 = FunctionDescriptor::chirp(0.9, 0.4, 1.0).unwrap().metadata();
        assert!((c94.holder_exponent_bound - 9.0 / 14.0).abs() < 1e-15);

        let p = FunctionDescriptor::power_abs(0.7, 1.0).unwrap().metadata();
        assert_eq!(p.decay_exponent_predicted, Some(1.7));

        // alpha <= beta: no AC, no decay prediction
        let slow = FunctionDescriptor::chirp(0.4, 0.5, 1.0).unwrap().metadata();
        assert!(!slow.is_ac && !slow.is_bv);
        assert_eq!(slow.decay_exponent_predicted, None);
    }

    #[test]
    fn descriptor_json_round_trip() {
        let d = FunctionDescriptor::chirp(0.7, 0.5, 1.0).unwrap();
        let s = serde_json::to_string(&d).unwrap();
        assert!(s.contains("\"kind\":\"chirp\""));
        assert!(s.contains("\"params\""));
        assert!(s.contains("\"L\""));
        let back: FunctionDescriptor = serde_json::from_str(&s).unwrap();
        assert_eq!(back, d);
    }

    #[test]
    fn invalid_parameters_rejected() {
        assert!(FunctionDescriptor::chirp(-0.1, 0.5, 1.0).is_err());
        assert!(FunctionDescriptor::power_abs(1.0, 1.0).is_err());
        assert!(FunctionDescriptor::weierstrass(1, 0.5, 1.0).is_err());
        assert!(FunctionDescriptor::cantor_lebesgue(0, 1.0).is_err());
        assert!(FunctionDescriptor::exp_abs(0.0, 1.0).is_err());
        assert!(FunctionDescriptor::chirp(0.7, 0.5, 0.0).is_err());
    }
}
