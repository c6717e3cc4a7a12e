//! Gauss–Kronrod 15-point panels and a budgeted adaptive driver.

use num_complex::Complex64;
use std::collections::BinaryHeap;
use std::fmt;

/// Kronrod abscissae (positive half, descending) for the (G7, K15) pair.
#[allow(clippy::excessive_precision)]
const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
/// Kronrod weights matching `XGK`.
#[allow(clippy::excessive_precision)]
const WGK: [f64; 8] = [
    0.022_935_322_010_529_225,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_18,
    0.140_653_259_715_525_92,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_83,
];
/// Gauss-7 weights at the odd Kronrod abscissae (XGK[1], XGK[3], XGK[5], XGK[7]).
#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_67,
    0.381_830_050_505_118_94,
    0.417_959_183_673_469_4,
];

/// 15-point Gauss–Kronrod panel for a real integrand: (integral, error estimate).
pub fn gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let c = 0.5 * (a + b);
    let hl = 0.5 * (b - a);
    let fc = f(c);
    let mut kron = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    for i in 0..7 {
        let x = hl * XGK[i];
        let s = f(c - x) + f(c + x);
        kron += WGK[i] * s;
        if i % 2 == 1 {
            gauss += WG[i / 2] * s;
        }
    }
    (kron * hl, ((kron - gauss) * hl).abs())
}

/// 15-point Gauss–Kronrod panel for a complex integrand.
pub fn gk15_complex<F: Fn(f64) -> Complex64>(f: &F, a: f64, b: f64) -> (Complex64, f64) {
    let c = 0.5 * (a + b);
    let hl = 0.5 * (b - a);
    let fc = f(c);
    let mut kron = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    for i in 0..7 {
        let x = hl * XGK[i];
        let s = f(c - x) + f(c + x);
        kron += WGK[i] * s;
        if i % 2 == 1 {
            gauss += WG[i / 2] * s;
        }
    }
    (kron * hl, ((kron - gauss) * hl).norm())
}

/// Failure of the adaptive driver to meet its tolerance within budget.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadBudgetExceeded {
    pub panels: usize,
    pub error_estimate: f64,
}

impl fmt::Display for QuadBudgetExceeded {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "adaptive quadrature exceeded {} panels with error estimate {:.3e}",
            self.panels, self.error_estimate
        )
    }
}

impl std::error::Error for QuadBudgetExceeded {}

struct Segment {
    err: f64,
    a: f64,
    b: f64,
    val: Complex64,
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.err == other.err
    }
}
impl Eq for Segment {}
impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Segment {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.err.total_cmp(&other.err)
    }
}

/// Adaptive Gauss–Kronrod integration of a complex integrand on [a, b].
///
/// Splits the worst panel until the summed error estimate drops below
/// `abs_tol` (or a floor proportional to the accumulated magnitude) or the
/// panel budget is exhausted.
pub fn adaptive_gk15_complex<F: Fn(f64) -> Complex64>(
    f: &F,
    a: f64,
    b: f64,
    abs_tol: f64,
    max_panels: usize,
) -> Result<Complex64, QuadBudgetExceeded> {
    let mut heap = BinaryHeap::new();
    let (v, e) = gk15_complex(f, a, b);
    heap.push(Segment { err: e, a, b, val: v });
    let mut total_err = e;
    let mut panels = 1usize;
    while total_err > abs_tol && panels < max_panels {
        let worst = heap.pop().expect("non-empty heap");
        // A panel narrower than ~1 ulp of its endpoints cannot be split further.
        let mid = 0.5 * (worst.a + worst.b);
        if mid <= worst.a || mid >= worst.b {
            total_err -= worst.err;
            heap.push(Segment { err: 0.0, ..worst });
            continue;
        }
        total_err -= worst.err;
        let (v1, e1) = gk15_complex(f, worst.a, mid);
        let (v2, e2) = gk15_complex(f, mid, worst.b);
        total_err += e1 + e2;
        heap.push(Segment { err: e1, a: worst.a, b: mid, val: v1 });
        heap.push(Segment { err: e2, a: mid, b: worst.b, val: v2 });
        panels += 1;
    }
    if total_err > abs_tol {
        return Err(QuadBudgetExceeded {
            panels,
            error_estimate: total_err,
        });
    }
    // Pairwise-ish summation in deterministic (sorted) order.
    let mut segs: Vec<Segment> = heap.into_vec();
    segs.sort_by(|x, y| x.a.total_cmp(&y.a));
    Ok(segs.iter().map(|s| s.val).sum())
}
