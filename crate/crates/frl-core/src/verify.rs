//! The claim suites behind `frl verify`: each numbered criterion measures a
//! set of quantities and checks them against pinned windows.
//!
//! `Paper` reproduces the reference numbers at N = 2·10⁵; `Quick` runs the
//! same claims at N = 2¹⁴ with slope windows relaxed to ±0.15; `Full` adds
//! cross-cutting invariants (quadrature convergence, coefficient assembly,
//! tail-sum scaling).
//!
//! Two claims are intentionally left failing — they document where the
//! classical chirp decay analysis disagrees with measurement:
//!
//! * criterion 3's measured envelope for the (0.9, 0.4) chirp sits near
//!   −1.5, not −1.66: with α − β = 1/2 the transform carries an
//!   oscillatory k^{−(1+α−β)} component (visible by stationary phase on
//!   I₂'s defining integral) that the purely algebraic pole expansion
//!   misses. For (0.7, 0.5) the two routes coincide because
//!   (α−β)(2+β) = 1/2 exactly.
//! * criterion 9 pins Σ B_j − Σ A_l = −5 for the I₂ parameter list, but any
//!   correct I₂ integrand in the same Mellin variable carries −1/β − 1/β²
//!   = −6, the same combination as I₁ (the value is invariant under the
//!   Gamma identities that reshuffle a list). The −5 variant corresponds to
//!   a mis-scaled final Gamma factor whose integrand does not decay along
//!   the contour at all.

use crate::catalog::FunctionDescriptor;
use crate::estimators::{
    decay_slope_envelope, decay_slope_two_point, default_h_grid, default_tv_grid_sizes,
    fit_loglog, holder_estimate, holder_estimate_fn, oscillation_profile, total_variation,
};
use crate::mellin::{
    build_chirp_spec, chirp_ft, chirp_integral, chirp_series_coefficient, h_asymptotic_exponent,
    mb_integrate, ChirpIntegralSpec, EvalMethod, MbParams,
};
use crate::specfun::{falling_factorial, forward_difference, gamma, FactorialPolyParams};
use crate::spectral::{dft, ft_numeric, idft, sample, tail_sum, SampledSignal};
use crate::theory::{
    infer_holder_from_decay, predict_chirp_decay, ChirpDecayMode, ChirpIntegralKind,
};
use num_complex::Complex64;
use serde::Serialize;
use std::time::Instant;

/// Which claim set to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Quick,
    Paper,
    Full,
}

impl Suite {
    pub fn parse(s: &str) -> Option<Suite> {
        match s {
            "quick" => Some(Suite::Quick),
            "paper" => Some(Suite::Paper),
            "full" => Some(Suite::Full),
            _ => None,
        }
    }

    fn n_samples(&self) -> usize {
        match self {
            Suite::Quick => 1 << 14,
            _ => 200_000,
        }
    }

    fn slope_tol(&self, stated: f64) -> f64 {
        match self {
            Suite::Quick => 0.15,
            _ => stated,
        }
    }
}

/// One verified claim.
#[derive(Debug, Clone, Serialize)]
pub struct Claim {
    pub criterion: u32,
    pub label: String,
    pub predicted: String,
    pub measured: String,
    pub tolerance: String,
    pub pass: bool,
    pub seconds: f64,
}

fn claim(
    criterion: u32,
    label: impl Into<String>,
    predicted: impl Into<String>,
    measured: impl Into<String>,
    tolerance: impl Into<String>,
    pass: bool,
) -> Claim {
    Claim {
        criterion,
        label: label.into(),
        predicted: predicted.into(),
        measured: measured.into(),
        tolerance: tolerance.into(),
        pass,
        seconds: 0.0,
    }
}

fn window(x: f64, center: f64, tol: f64) -> bool {
    (x - center).abs() <= tol
}

fn chirp(alpha: f64, beta: f64) -> FunctionDescriptor {
    FunctionDescriptor::chirp(alpha, beta, 1.0).expect("valid chirp")
}

/// Run a whole suite; claims come back in criterion order.
pub fn run_suite(suite: Suite) -> Vec<Claim> {
    let mut all = Vec::new();
    let criteria: &[u32] = match suite {
        Suite::Full => &[1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12],
        _ => &[1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11],
    };
    for &c in criteria {
        all.extend(run_criterion(c, suite));
    }
    all
}

/// Run one numbered criterion (12 = the Full-suite extras).
pub fn run_criterion(criterion: u32, suite: Suite) -> Vec<Claim> {
    let start = Instant::now();
    let mut claims = match criterion {
        1 => c1(suite),
        2 => c2(suite),
        3 => c3(suite),
        4 => c4(suite),
        5 => c5(suite),
        6 => c6(suite),
        7 => c7(suite),
        8 => c8(suite),
        9 => c9(suite),
        10 => c10(suite),
        11 => c11(suite),
        12 => c12(suite),
        _ => panic!("criterion out of range: {criterion}"),
    };
    let dt = start.elapsed().as_secs_f64();
    let share = dt / claims.len().max(1) as f64;
    for c in &mut claims {
        c.seconds = share;
    }
    // stated runtime budgets
    match criterion {
        1 => claims.push(claim(
            1,
            "runtime",
            "< 5 s",
            format!("{dt:.2} s"),
            "hard budget",
            dt < 5.0,
        )),
        2 => claims.push(claim(
            2,
            "runtime",
            "< 10 s",
            format!("{dt:.2} s"),
            "hard budget",
            dt < 10.0,
        )),
        _ => {}
    }
    claims
}

fn c1(suite: Suite) -> Vec<Claim> {
    let n = suite.n_samples();
    let d = FunctionDescriptor::power_abs(0.7, 1.0).unwrap();
    let spec = dft(&sample(&d, n).unwrap());
    let c9 = spec.coefficient(9).unwrap().norm();
    let k2 = if n > 20_000 { 9_999 } else { 4_999 };
    let tp = decay_slope_two_point(&spec, 9, k2).unwrap();
    let tol = suite.slope_tol(0.05);
    vec![
        claim(
            1,
            format!("|x|^0.7: |DFT(9)| at N = {n}"),
            "0.003635",
            format!("{c9:.6}"),
            "±5%",
            (c9 / 0.003635 - 1.0).abs() <= 0.05,
        ),
        claim(
            1,
            format!("|x|^0.7: two-point slope (9, {k2})"),
            "-1.72",
            format!("{:.4}", tp.slope),
            format!("±{tol:.2}"),
            window(tp.slope, -1.72, tol),
        ),
    ]
}

fn c2(suite: Suite) -> Vec<Claim> {
    let n = suite.n_samples();
    let spec = dft(&sample(&chirp(0.7, 0.5), n).unwrap());
    let k2 = if n > 20_000 { 8_780 } else { 4_999 };
    let tp = decay_slope_two_point(&spec, 541, k2).unwrap();
    let env = decay_slope_envelope(&spec, 16, n / 4, 8).unwrap();
    let pred = predict_chirp_decay(0.7, 0.5, ChirpDecayMode::Series).unwrap();
    let tol_tp = suite.slope_tol(0.05);
    let tol_env = suite.slope_tol(0.05);
    vec![
        claim(
            2,
            format!("chirp(0.7,0.5): two-point slope (541, {k2})"),
            "-1.29",
            format!("{:.4}", tp.slope),
            format!("±{tol_tp:.2}"),
            window(tp.slope, -1.29, tol_tp),
        ),
        claim(
            2,
            "chirp(0.7,0.5): envelope slope",
            "-1.30",
            format!("{:.4}", env.slope),
            format!("±{tol_env:.2}"),
            window(env.slope, -1.3, tol_env),
        ),
        claim(
            2,
            "chirp(0.7,0.5): predicted series decay",
            "1.3 exactly",
            format!("{:.12}", pred.decay_exponent),
            "1e-12",
            (pred.decay_exponent - 1.3).abs() < 1e-12,
        ),
    ]
}

fn c3(suite: Suite) -> Vec<Claim> {
    let n = suite.n_samples();
    let pred = predict_chirp_decay(0.9, 0.4, ChirpDecayMode::Series).unwrap();
    let spec = dft(&sample(&chirp(0.9, 0.4), n).unwrap());
    let env = decay_slope_envelope(&spec, 16, n / 4, 8).unwrap();
    let tol = suite.slope_tol(0.10);
    let inf = infer_holder_from_decay(1.66).unwrap();
    vec![
        claim(
            3,
            "chirp(0.9,0.4): predicted series decay",
            "1.66 exactly",
            format!("{:.12}", pred.decay_exponent),
            "1e-12",
            (pred.decay_exponent - 1.66).abs() < 1e-12,
        ),
        claim(
            3,
            "chirp(0.9,0.4): measured envelope slope",
            "-1.66",
            format!("{:.4}", env.slope),
            format!("±{tol:.2} (fails: oscillatory k^-1.5 term dominates; alpha-beta = 1/2)"),
            window(env.slope, -1.66, tol),
        ),
        claim(
            3,
            "infer regularity from decay 1.66",
            "(m, mu) = (0, 0.66), AC implied",
            format!(
                "({}, {:.12}), AC {}",
                inf.smoothness_order,
                inf.mu,
                if inf.implies_ac() { "implied" } else { "not implied" }
            ),
            "exact",
            inf.smoothness_order == 0 && (inf.mu - 0.66).abs() < 1e-12 && inf.implies_ac(),
        ),
    ]
}

fn c4(suite: Suite) -> Vec<Claim> {
    let t_samples = match suite {
        Suite::Quick => 20_000,
        _ => 100_000,
    };
    let grid = default_h_grid();
    let hp = holder_estimate(&FunctionDescriptor::power_abs(0.7, 1.0).unwrap(), &grid, t_samples);
    let hc = holder_estimate(&chirp(0.7, 0.5), &grid, t_samples);
    let hl = holder_estimate_fn(&|t: f64| 3.0 * t, 1.0, &[], &grid, t_samples);
    let target_chirp = 7.0 / 15.0;
    vec![
        claim(
            4,
            "Hölder exponent of |x|^0.7",
            "0.70",
            format!("{:.4}", hp.mu_hat),
            "±0.03",
            window(hp.mu_hat, 0.70, 0.03),
        ),
        claim(
            4,
            "Hölder exponent of chirp(0.7,0.5)",
            "0.4667 (= 7/15)",
            format!("{:.4}", hc.mu_hat),
            "±0.05",
            window(hc.mu_hat, target_chirp, 0.05),
        ),
        claim(
            4,
            "Hölder exponent of 3t",
            "1.00",
            format!("{:.4}", hl.mu_hat),
            "±0.01",
            window(hl.mu_hat, 1.0, 0.01),
        ),
    ]
}

fn c5(_suite: Suite) -> Vec<Claim> {
    let grid = default_h_grid();
    let mut claims = Vec::new();
    let tame: [(&str, FunctionDescriptor); 3] = [
        ("|x|^0.7", FunctionDescriptor::power_abs(0.7, 1.0).unwrap()),
        ("exp(-|t|)", FunctionDescriptor::exp_abs(1.0, 1.0).unwrap()),
        ("gauss-cusp mu=0.5", FunctionDescriptor::gauss_power(0.5, 1.0).unwrap()),
    ];
    for (name, d) in &tame {
        let p = oscillation_profile(d, &grid);
        claims.push(claim(
            5,
            format!("oscillation verdict: {name}"),
            "uniformly bounded",
            format!("{:?} -> {}", &p.extrema_counts[p.extrema_counts.len() - 3..], p.uniformly_bounded_verdict),
            "last three counts equal",
            p.uniformly_bounded_verdict,
        ));
    }
    for (a, b) in [(0.7, 0.5), (0.9, 0.4)] {
        let p = oscillation_profile(&chirp(a, b), &grid);
        claims.push(claim(
            5,
            format!("oscillation verdict: chirp({a},{b})"),
            "not uniformly bounded",
            format!("{:?} -> {}", &p.extrema_counts[p.extrema_counts.len() - 3..], p.uniformly_bounded_verdict),
            "counts keep growing",
            !p.uniformly_bounded_verdict,
        ));
    }
    let sizes = default_tv_grid_sizes();
    let conv = total_variation(&chirp(0.7, 0.5), &sizes).unwrap();
    let div = total_variation(&chirp(0.4, 0.5), &sizes).unwrap();
    claims.push(claim(
        5,
        "TV verdict: chirp(0.7,0.5)",
        "converging",
        format!("TV = {:.4}, diverging = {}", conv.tv_values.last().unwrap(), conv.diverging_verdict),
        "16x-span growth <= 1.3",
        !conv.diverging_verdict,
    ));
    claims.push(claim(
        5,
        "TV verdict: chirp(0.4,0.5)",
        "diverging",
        format!("TV = {:.4}, diverging = {}", div.tv_values.last().unwrap(), div.diverging_verdict),
        "16x-span growth > 1.3",
        div.diverging_verdict,
    ));
    claims
}

fn c6(_suite: Suite) -> Vec<Claim> {
    let n = 59_049; // 3^10
    let d = FunctionDescriptor::cantor_lebesgue(40, 1.0).unwrap();
    let spec = dft(&sample(&d, n).unwrap());
    let env = decay_slope_envelope(&spec, 16, n / 4, 8).unwrap();
    vec![
        claim(
            6,
            "Cantor-Lebesgue: envelope slope at N = 3^10",
            "-1.0",
            format!("{:.4}", env.slope),
            "±0.1",
            window(env.slope, -1.0, 0.1),
        ),
        claim(
            6,
            "Cantor-Lebesgue decays slower than 1 + ln2/ln3",
            "slope > -1.63",
            format!("{:.4}", env.slope),
            "strict",
            env.slope > -(1.0 + 2.0_f64.ln() / 3.0_f64.ln()) + 0.1,
        ),
    ]
}

fn c7(suite: Suite) -> Vec<Claim> {
    let n = suite.n_samples();
    let d = FunctionDescriptor::weierstrass(3, 0.5, 1.0).unwrap();
    let spec = dft(&sample(&d, n).unwrap());
    let points: Vec<(f64, f64)> = (1..=8)
        .map(|j| {
            let k = 3usize.pow(j);
            (k as f64, spec.coefficient(k as i64).unwrap().norm())
        })
        .collect();
    let (slope, _, _) = fit_loglog(&points);
    vec![claim(
        7,
        "Weierstrass(b=3, mu=0.5): lacunary slope over k = 3^1..3^8",
        "-0.5",
        format!("{slope:.4}"),
        "±0.05",
        window(slope, -0.5, 0.05),
    )]
}

fn c8(_suite: Suite) -> Vec<Claim> {
    let mut worst_rec = 0.0f64;
    for &s in &[0.3, 1.7, 4.2, 9.9] {
        let lhs = gamma(s + 1.0).unwrap();
        worst_rec = worst_rec.max(((lhs - s * gamma(s).unwrap()) / lhs).abs());
    }
    let mut worst_ref = 0.0f64;
    for &s in &[0.25, 0.5, 0.8] {
        let lhs = gamma(s).unwrap() * gamma(1.0 - s).unwrap();
        let rhs = std::f64::consts::PI / (std::f64::consts::PI * s).sin();
        worst_ref = worst_ref.max(((lhs - rhs) / rhs).abs());
    }
    let mut worst_diff = 0.0f64;
    for &g in &[0.5, 1.0, 2.3] {
        for &h in &[0.1, 1.0] {
            for &t in &[2.0, 10.0, 50.0] {
                let p = FactorialPolyParams::new(g, h).unwrap();
                let pm = FactorialPolyParams::new(g - 1.0, h).unwrap();
                let lhs = forward_difference(|x| falling_factorial(x, p).unwrap(), t, h);
                let rhs = g * h * falling_factorial(t, pm).unwrap();
                worst_diff = worst_diff.max(((lhs - rhs) / rhs).abs());
            }
        }
    }
    let p = FactorialPolyParams::new(0.7, 1.0).unwrap();
    let asym = (falling_factorial(1e3, p).unwrap() / 1e3_f64.powf(0.7) - 1.0).abs();
    vec![
        claim(8, "Gamma recurrence", "0", format!("{worst_rec:.2e}"), "< 1e-12", worst_rec < 1e-12),
        claim(8, "Gamma reflection", "0", format!("{worst_ref:.2e}"), "< 1e-12", worst_ref < 1e-12),
        claim(
            8,
            "factorial-polynomial difference rule",
            "0",
            format!("{worst_diff:.2e}"),
            "< 1e-9",
            worst_diff < 1e-9,
        ),
        claim(
            8,
            "factorial polynomial ~ t^gamma at t = 1e3",
            "ratio 1",
            format!("deviation {asym:.2e}"),
            "< 0.01",
            asym < 0.01,
        ),
    ]
}

fn c9(_suite: Suite) -> Vec<Claim> {
    let mut claims = Vec::new();
    for which in [ChirpIntegralKind::I1, ChirpIntegralKind::I2] {
        let s = ChirpIntegralSpec::new(0.7, 0.5, which).unwrap();
        for &k in &[100.0, 1000.0] {
            let mb = chirp_integral(&s, k, EvalMethod::MellinBarnes).unwrap();
            let direct = chirp_integral(&s, k, EvalMethod::Direct).unwrap();
            let rel = (mb - direct).abs() / direct.abs();
            claims.push(claim(
                9,
                format!("{which:?}(0.7,0.5) at k = {k}: contour vs direct"),
                format!("{direct:.9}"),
                format!("{mb:.9}"),
                "rel < 1e-3",
                rel < 1e-3,
            ));
        }
    }
    let s1 = build_chirp_spec(&ChirpIntegralSpec::new(0.7, 0.5, ChirpIntegralKind::I1).unwrap());
    let s2 = build_chirp_spec(&ChirpIntegralSpec::new(0.7, 0.5, ChirpIntegralKind::I2).unwrap());
    claims.push(claim(
        9,
        "I1 parameter checksum sum(B) - sum(A)",
        "-6 exactly",
        format!("{:.12}", s1.sum_b_minus_sum_a()),
        "1e-12",
        (s1.sum_b_minus_sum_a() + 6.0).abs() < 1e-12,
    ));
    claims.push(claim(
        9,
        "I2 parameter checksum sum(B) - sum(A)",
        "-5 exactly",
        format!(
            "{:.12} (fails: a correct I2 list carries -1/b - 1/b^2 = -6, invariant under Gamma reshuffles)",
            s2.sum_b_minus_sum_a()
        ),
        "1e-12",
        (s2.sum_b_minus_sum_a() + 5.0).abs() < 1e-12,
    ));
    claims.push(claim(
        9,
        "I1 asymptotic exponent",
        "-0.25 exactly",
        format!("{:.12}", h_asymptotic_exponent(&s1).unwrap()),
        "1e-12",
        (h_asymptotic_exponent(&s1).unwrap() + 0.25).abs() < 1e-12,
    ));
    claims.push(claim(
        9,
        "I2 asymptotic exponent",
        "-0.1 exactly",
        format!("{:.12}", h_asymptotic_exponent(&s2).unwrap()),
        "1e-12",
        (h_asymptotic_exponent(&s2).unwrap() + 0.1).abs() < 1e-12,
    ));
    claims
}

fn c10(_suite: Suite) -> Vec<Claim> {
    let mut claims = Vec::new();
    let wide = FunctionDescriptor::chirp(0.7, 0.5, 50.0).unwrap();
    for &nu in &[5.0, 10.0, 20.0] {
        let mb = chirp_ft(0.7, 0.5, nu, EvalMethod::MellinBarnes).unwrap();
        let direct = chirp_ft(0.7, 0.5, nu, EvalMethod::Direct).unwrap();
        let quadrature = ft_numeric(&wide, nu, 50.0).unwrap().re;
        let vals = [mb, direct, quadrature];
        let mut worst = 0.0f64;
        for i in 0..3 {
            for j in (i + 1)..3 {
                worst = worst.max((vals[i] - vals[j]).abs() / vals[j].abs().max(1e-300));
            }
        }
        claims.push(claim(
            10,
            format!("chirp FT(0.7,0.5) at nu = {nu}: contour/direct/quadrature"),
            format!("{direct:.6e}"),
            format!("mb {mb:.6e}, quad {quadrature:.6e}"),
            "pairwise rel <= 1e-2",
            worst <= 1e-2,
        ));
    }
    // log-log envelope of |FT| over nu in [1e2, 1e4] (direct route)
    let m = 81;
    let points: Vec<(f64, f64)> = (0..m)
        .map(|i| {
            let nu = 100.0 * 100.0f64.powf(i as f64 / (m - 1) as f64);
            (nu, chirp_ft(0.7, 0.5, nu, EvalMethod::Direct).unwrap().abs())
        })
        .collect();
    let env = log_bin_envelope(&points, 8);
    let (slope, _, _) = fit_loglog(&env);
    claims.push(claim(
        10,
        "chirp FT(0.7,0.5): envelope slope over nu in [1e2, 1e4]",
        "-1.3",
        format!("{slope:.4}"),
        "±0.1",
        window(slope, -1.3, 0.1),
    ));
    claims
}

fn c11(suite: Suite) -> Vec<Claim> {
    let mut claims = Vec::new();
    // FFT vs naive DFT at N <= 64
    let mut worst_fft = 0.0f64;
    for n in [13usize, 32, 64] {
        let mut state = 0x9e3779b97f4a7c15u64;
        let x: Vec<Complex64> = (0..n)
            .map(|_| {
                let mut next = || {
                    state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    ((state >> 11) as f64 / (1u64 << 53) as f64) - 0.5
                };
                Complex64::new(next(), next())
            })
            .collect();
        let sig = SampledSignal::from_samples(x.iter().map(|c| c.re).collect(), 1.0).unwrap();
        let spec = dft(&sig);
        for k in 0..n {
            let mut acc = Complex64::new(0.0, 0.0);
            for (j, &v) in sig.samples.iter().enumerate() {
                let ang = -2.0 * std::f64::consts::PI * (k * j % n) as f64 / n as f64;
                acc += v * Complex64::from_polar(1.0, ang);
            }
            worst_fft = worst_fft.max((spec.coeffs[k] - acc / n as f64).norm());
        }
    }
    claims.push(claim(
        11,
        "FFT vs naive DFT, N <= 64",
        "0",
        format!("{worst_fft:.2e}"),
        "< 1e-11",
        worst_fft < 1e-11,
    ));

    let n = suite.n_samples();
    let s = sample(&chirp(0.7, 0.5), n).unwrap();
    let spec = dft(&s);
    let te: f64 = s.samples.iter().map(|v| v * v).sum::<f64>() / n as f64;
    let fe: f64 = spec.coeffs.iter().map(|c| c.norm_sqr()).sum();
    claims.push(claim(
        11,
        format!("Parseval at N = {n}"),
        "0",
        format!("{:.2e}", ((te - fe) / te).abs()),
        "rel < 1e-10",
        ((te - fe) / te).abs() < 1e-10,
    ));
    let back = idft(&spec);
    let worst_rt = s
        .samples
        .iter()
        .zip(back.iter())
        .map(|(a, b)| (b - a).norm())
        .fold(0.0f64, f64::max);
    claims.push(claim(
        11,
        "DFT round trip",
        "0",
        format!("{worst_rt:.2e}"),
        "< 1e-10",
        worst_rt < 1e-10,
    ));

    // exp(-|t|) spectrum vs the closed-form transform at low k
    let l = 20.0;
    let e = FunctionDescriptor::exp_abs(1.0, l).unwrap();
    let espec = dft(&sample(&e, 1 << 14).unwrap());
    let mut worst_cf = 0.0f64;
    for k in 1..=10i64 {
        let nu = k as f64 / (2.0 * l);
        let measured = espec.coefficient(k).unwrap().norm() * 2.0 * l;
        let closed = e.closed_form_ft(nu).unwrap();
        worst_cf = worst_cf.max((measured / closed - 1.0).abs());
    }
    claims.push(claim(
        11,
        "exp(-|t|) spectrum vs closed-form transform, k = 1..10",
        "0",
        format!("{worst_cf:.2e}"),
        "rel < 1%",
        worst_cf < 0.01,
    ));
    claims
}

/// Full-suite extras: cross-cutting invariants.
fn c12(_suite: Suite) -> Vec<Claim> {
    let mut claims = Vec::new();

    // contour quadrature stability under step halving + truncation doubling
    let s1 = ChirpIntegralSpec::new(0.7, 0.5, ChirpIntegralKind::I1).unwrap();
    let h = build_chirp_spec(&s1);
    let base = mb_integrate(&h, s1.hfun_argument(100.0), MbParams::default()).unwrap();
    let fine = mb_integrate(
        &h,
        s1.hfun_argument(100.0),
        MbParams {
            t_max: 2.0 * MbParams::default().t_max,
            step: 0.5 * MbParams::default().step,
        },
    )
    .unwrap();
    let rel = (base.value - fine.value).norm() / fine.value.norm();
    claims.push(claim(
        12,
        "contour quadrature: halve step, double truncation",
        "0",
        format!("{rel:.2e}"),
        "rel < 1e-6",
        rel < 1e-6,
    ));

    // assembled coefficients vs the DFT of the [-pi, pi] periodized chirp
    let d = FunctionDescriptor::chirp(0.7, 0.5, std::f64::consts::PI).unwrap();
    let spec = dft(&sample(&d, 200_000).unwrap());
    for &k in &[100usize, 1000] {
        let formula = chirp_series_coefficient(0.7, 0.5, k, EvalMethod::Direct).unwrap();
        let measured = spec.coefficient(k as i64).unwrap().re;
        let budgeted = (formula - measured).abs() * (k * k) as f64;
        claims.push(claim(
            12,
            format!("assembled c_k vs DFT at k = {k} (periodization budget)"),
            format!("{formula:.4e}"),
            format!("{measured:.4e}, diff*k^2 = {budgeted:.3}"),
            "diff*k^2 < 1",
            budgeted < 1.0,
        ));
    }

    // square tail sum of |x|^0.7 scales like N^{-1.2}
    let p = FunctionDescriptor::power_abs(0.7, 1.0).unwrap();
    let spec = dft(&sample(&p, 50_000).unwrap());
    let cuts: Vec<usize> = (0..12).map(|i| (10.0f64 * 1.52f64.powi(i)) as usize).collect();
    let points: Vec<(f64, f64)> = cuts
        .iter()
        .map(|&nc| (nc as f64, tail_sum(&spec, nc, 0, 2).unwrap()))
        .collect();
    let (slope, _, _) = fit_loglog(&points);
    claims.push(claim(
        12,
        "|x|^0.7 square tail-sum slope",
        "-1.2",
        format!("{slope:.4}"),
        "±0.1",
        window(slope, -1.2, 0.1),
    ));
    claims
}

/// Per-bin maxima over log-spaced bins for arbitrary (x, y) samples.
fn log_bin_envelope(points: &[(f64, f64)], bins_per_decade: usize) -> Vec<(f64, f64)> {
    let lo = points.iter().map(|p| p.0).fold(f64::INFINITY, f64::min).log10();
    let hi = points.iter().map(|p| p.0).fold(0.0f64, f64::max).log10();
    let step = 1.0 / bins_per_decade as f64;
    let mut out = Vec::new();
    let mut edge = lo;
    while edge < hi - 1e-9 {
        let (a, b) = (10f64.powf(edge), 10f64.powf(edge + step));
        let mut best: Option<(f64, f64)> = None;
        for &(x, y) in points {
            if x >= a && x < b && best.is_none_or(|(_, by)| y > by) {
                best = Some((x, y));
            }
        }
        if let Some(p) = best {
            if p.1 > 0.0 {
                out.push(p);
            }
        }
        edge += step;
    }
    out
}

/// Render claims as an aligned text table (used by the CLI and the acceptance
/// log output).
pub fn format_table(claims: &[Claim]) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "{:>3}  {:<55} {:<28} {:<42} {:<24} {}\n",
        "#", "claim", "predicted", "measured", "tolerance", "verdict"
    ));
    for c in claims {
        out.push_str(&format!(
            "{:>3}  {:<55} {:<28} {:<42} {:<24} {}\n",
            c.criterion,
            c.label,
            c.predicted,
            c.measured,
            c.tolerance,
            if c.pass { "PASS" } else { "FAIL" }
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn specfun_criterion_is_clean() {
        assert!(run_criterion(8, Suite::Paper).iter().all(|c| c.pass));
    }

    #[test]
    fn suite_parsing() {
        assert_eq!(Suite::parse("quick"), Some(Suite::Quick));
        assert_eq!(Suite::parse("paper"), Some(Suite::Paper));
        assert_eq!(Suite::parse("full"), Some(Suite::Full));
        assert_eq!(Suite::parse("bogus"), None);
    }
}
