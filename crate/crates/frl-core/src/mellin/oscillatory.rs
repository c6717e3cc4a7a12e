//! Direct evaluation of the chirp integrals
//!
//!   I₁(k) = ∫₀^∞ y^{α−1}   sin((k/y)^β) sin(y) dy,
//!   I₂(k) = ∫₀^∞ y^{α−β−1} cos((k/y)^β) sin(y) dy,
//!
//! used as the independent oracle for the Mellin–Barnes route. The infinite
//! oscillation at y → 0 is tamed by the substitution w = (k/y)^β, which turns
//! the head into another eventually-alternating lobe series; the middle is
//! panelled at every sine zero and every sign change of the chirp factor; the
//! tail is the alternating series of sine lobes, accelerated with the
//! iterated-averaging (Euler) transform.

use super::chirp::ChirpIntegralSpec;
use super::MellinError;
use crate::quad::gk15;
use crate::theory::ChirpIntegralKind;
use std::f64::consts::PI;

/// Budget of the direct evaluator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OscillatoryBudget {
    /// Stop collecting lobes once |lobe| falls below this.
    pub lobe_tol: f64,
    /// Hard cap on collected lobes per series.
    pub max_lobes: usize,
}

impl Default for OscillatoryBudget {
    fn default() -> Self {
        OscillatoryBudget {
            lobe_tol: 1e-13,
            max_lobes: 400,
        }
    }
}

/// Direct value plus the tail-lobe magnitudes (for Leibniz-style monotonicity
/// checks).
#[derive(Debug, Clone, PartialEq)]
pub struct DirectEval {
    pub value: f64,
    pub tail_lobe_magnitudes: Vec<f64>,
}

/// Maximum depth of the iterated-averaging acceleration.
const EULER_DEPTH: usize = 30;

/// Accelerated sum of an eventually-alternating series.
///
/// Iterated averaging of the partial sums; the estimate tracked is the
/// deepest average anchored at the *latest* sums, so an irregular head
/// (growing or sign-glitching early lobes) cannot poison it.
pub(crate) fn euler_sum(terms: &[f64]) -> (f64, bool) {
    if terms.is_empty() {
        return (0.0, true);
    }
    let mut row: Vec<f64> = Vec::with_capacity(terms.len());
    let mut acc = 0.0;
    for &t in terms {
        acc += t;
        row.push(acc);
    }
    let scale = terms.iter().fold(0.0f64, |m, t| m.max(t.abs())).max(1e-300);
    let mut best = *row.last().unwrap();
    let mut converged = row.len() == 1;
    for _ in 0..EULER_DEPTH.min(row.len().saturating_sub(1)) {
        for i in 0..row.len() - 1 {
            row[i] = 0.5 * (row[i] + row[i + 1]);
        }
        row.pop();
        let v = *row.last().unwrap();
        if (v - best).abs() <= 1e-12 * scale.max(v.abs()) {
            converged = true;
        }
        best = v;
    }
    (best, converged)
}

/// Collect lobe integrals ∫_{z(i)}^{z(i+1)} f until they drop below tolerance,
/// then Euler-sum them.
fn lobe_series<F: Fn(f64) -> f64, Z: Fn(usize) -> f64>(
    f: &F,
    zero: &Z,
    budget: &OscillatoryBudget,
) -> Result<(f64, Vec<f64>), MellinError> {
    let mut terms = Vec::new();
    let mut i = 0usize;
    loop {
        let (v, _) = gk15(f, zero(i), zero(i + 1));
        terms.push(v);
        i += 1;
        if v.abs() < budget.lobe_tol && i > 8 {
            break;
        }
        if i >= budget.max_lobes {
            // Slowly decaying alternating series: the averaging transform
            // converges long before the raw terms do. Accept if it stabilized.
            let (value, ok) = euler_sum(&terms);
            if ok {
                return Ok((value, terms.iter().map(|t| t.abs()).collect()));
            }
            return Err(MellinError::AccelerationFailure {
                lobes: i,
                last_magnitude: v.abs(),
            });
        }
    }
    let (value, ok) = euler_sum(&terms);
    if !ok && terms.len() > 12 {
        return Err(MellinError::AccelerationFailure {
            lobes: terms.len(),
            last_magnitude: terms.last().copied().unwrap_or(0.0).abs(),
        });
    }
    Ok((value, terms.iter().map(|t| t.abs()).collect()))
}

/// Shared backbone: envelope exponent `p` (on y^p), chirp factor `chirp_trig`
/// applied to the phase (k/y)^β, against sin(y).
fn direct_impl<T: Fn(f64) -> f64>(
    p: f64,
    beta: f64,
    k: f64,
    chirp_trig: &T,
    is_sin: bool,
    budget: &OscillatoryBudget,
) -> Result<DirectEval, MellinError> {
    let y_split = PI / 2.0;

    // --- head [0, y_split] through w = (k/y)^β ---
    // y = k w^{-1/β}; the integrand becomes (k^{p+1}/β) w^{-(p+1)/β - 1}
    // chirp_trig(w) sin(k w^{-1/β}), with sin(y) > 0 throughout since
    // y < π/2: the lobes are those of the chirp factor itself.
    let w_start = (k / y_split).powf(beta);
    let pw = -(p + 1.0) / beta - 1.0;
    let fw = |w: f64| w.powf(pw) * chirp_trig(w) * (k * w.powf(-1.0 / beta)).sin();
    let (head_first, head_zero): (f64, Box<dyn Fn(usize) -> f64>) = if is_sin {
        let j0 = (w_start / PI).floor() as usize + 1;
        (j0 as f64 * PI, Box::new(move |i| (j0 + i) as f64 * PI))
    } else {
        let j0 = (w_start / PI + 0.5).floor() as usize + 1;
        (
            (j0 as f64 - 0.5) * PI,
            Box::new(move |i| ((j0 + i) as f64 - 0.5) * PI),
        )
    };
    let (head_partial, _) = gk15(&fw, w_start, head_first);
    let (head_tail, _head_lobes) = lobe_series(&fw, &head_zero, budget)?;
    let head = (head_partial + head_tail) * k.powf(p + 1.0) / beta;

    // --- middle [y_split, Y] with panel boundaries at every sine zero and
    // every sign change of the chirp factor ---
    let f = |y: f64| y.powf(p) * chirp_trig((k / y).powf(beta)) * y.sin();
    let mut flips: Vec<f64> = Vec::new();
    let mut m = 1usize;
    loop {
        let threshold = if is_sin {
            m as f64 * PI
        } else {
            (m as f64 - 0.5) * PI
        };
        let y_flip = k / threshold.powf(1.0 / beta);
        if y_flip <= y_split {
            break;
        }
        flips.push(y_flip);
        m += 1;
    }
    let y_smooth = k.powf(beta / (1.0 + beta)).max(1.0);
    let y_reg = flips.iter().fold(y_smooth, |a, &b| a.max(b));
    let n_reg = (y_reg / PI).floor() as usize + 1;
    let y_end = n_reg as f64 * PI;
    let mut points: Vec<f64> = vec![y_split, y_end];
    points.extend(flips.iter().copied().filter(|&y| y_split < y && y < y_end));
    points.extend(
        (1..=n_reg)
            .map(|j| j as f64 * PI)
            .filter(|&y| y_split < y && y < y_end),
    );
    points.sort_by(f64::total_cmp);
    points.dedup_by(|a, b| (*a - *b).abs() < 1e-14);
    let mut middle = 0.0;
    for w in points.windows(2) {
        let (v, _) = gk15(&f, w[0], w[1]);
        middle += v;
    }

    // --- tail: strictly alternating sine lobes from y_end on ---
    let tail_zero = |i: usize| (n_reg + i) as f64 * PI;
    let (tail, tail_lobe_magnitudes) = lobe_series(&f, &tail_zero, budget)?;

    Ok(DirectEval {
        value: head + middle + tail,
        tail_lobe_magnitudes,
    })
}

/// Direct-quadrature value of I₁(k) or I₂(k).
pub fn direct_oscillatory_i(
    c: &ChirpIntegralSpec,
    k: f64,
    budget: &OscillatoryBudget,
) -> Result<DirectEval, MellinError> {
    if !k.is_finite() || k <= 0.0 {
        return Err(MellinError::Domain {
            what: format!("direct oscillatory integral requires k > 0, got {k}"),
        });
    }
    let (alpha, beta) = (c.alpha, c.beta);
    match c.which {
        ChirpIntegralKind::I1 => {
            direct_impl(alpha - 1.0, beta, k, &|phase: f64| phase.sin(), true, budget)
        }
        ChirpIntegralKind::I2 => direct_impl(
            alpha - beta - 1.0,
            beta,
            k,
            &|phase: f64| phase.cos(),
            false,
            budget,
        ),
    }
}
