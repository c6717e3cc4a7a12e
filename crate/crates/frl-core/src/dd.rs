//! Minimal double-double arithmetic.
//!
//! A value is carried as an unevaluated sum `hi + lo` with |lo| <= ulp(hi)/2,
//! i.e. roughly 31 significant decimal digits. Only the handful of operations
//! needed for accurate chirp argument reduction are implemented: the chirp
//! phase |x|^{-beta} reaches 1e8 and beyond, where a plain f64 power has lost
//! the phase information modulo 2*pi long before `sin` sees it.

#[derive(Debug, Clone, Copy)]
pub(crate) struct Dd {
    pub hi: f64,
    pub lo: f64,
}

const LN2: Dd = Dd {
    hi: std::f64::consts::LN_2,
    lo: 2.319_046_813_846_299_6e-17,
};
const TWO_PI: Dd = Dd {
    hi: std::f64::consts::TAU,
    lo: 2.449_293_598_294_706_4e-16,
};
const FRAC_1_2PI: f64 = 1.0 / std::f64::consts::TAU;

#[inline]
fn two_sum(a: f64, b: f64) -> Dd {
    let s = a + b;
    let bb = s - a;
    Dd {
        hi: s,
        lo: (a - (s - bb)) + (b - bb),
    }
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> Dd {
    let s = a + b;
    Dd { hi: s, lo: b - (s - a) }
}

#[inline]
fn two_prod(a: f64, b: f64) -> Dd {
    let p = a * b;
    Dd {
        hi: p,
        lo: f64::mul_add(a, b, -p),
    }
}

impl Dd {
    #[inline]
    pub fn from_f64(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    #[inline]
    pub fn add(self, o: Dd) -> Dd {
        let s = two_sum(self.hi, o.hi);
        let t = two_sum(self.lo, o.lo);
        let r = quick_two_sum(s.hi, s.lo + t.hi);
        quick_two_sum(r.hi, r.lo + t.lo)
    }

    #[inline]
    pub fn neg(self) -> Dd {
        Dd { hi: -self.hi, lo: -self.lo }
    }

    #[inline]
    pub fn sub(self, o: Dd) -> Dd {
        self.add(o.neg())
    }

    #[inline]
    pub fn mul(self, o: Dd) -> Dd {
        let p = two_prod(self.hi, o.hi);
        quick_two_sum(p.hi, p.lo + self.hi * o.lo + self.lo * o.hi)
    }

    #[inline]
    pub fn mul_f64(self, c: f64) -> Dd {
        let p = two_prod(self.hi, c);
        quick_two_sum(p.hi, p.lo + self.lo * c)
    }

    #[inline]
    pub fn scale_pow2(self, e: i32) -> Dd {
        let f = pow2(e);
        Dd { hi: self.hi * f, lo: self.lo * f }
    }
}

fn pow2(e: i32) -> f64 {
    f64::from_bits((((1023 + e) as u64) & 0x7ff) << 52)
}

/// exp(y) for |y.hi| <= ~700, with double-double accuracy.
fn exp_dd(y: Dd) -> Dd {
    let n = (y.hi / LN2.hi).round();
    let r = y.sub(LN2.mul_f64(n));
    // Taylor on |r| <= ~0.35
    let mut term = Dd::from_f64(1.0);
    let mut sum = Dd::from_f64(1.0);
    for i in 1..26 {
        term = term.mul(r).mul_f64(1.0 / i as f64);
        sum = sum.add(term);
        if term.hi.abs() < 1e-33 {
            break;
        }
    }
    sum.scale_pow2(n as i32)
}

/// ln(x) for finite normal x > 0, with double-double accuracy.
fn ln_dd(x: f64) -> Dd {
    debug_assert!(x > 0.0 && x.is_finite());
    let bits = x.to_bits();
    let e = ((bits >> 52) & 0x7ff) as i32 - 1022;
    let m = f64::from_bits((bits & 0x000f_ffff_ffff_ffff) | (1022u64 << 52)); // in [0.5, 1)
    // One Newton refinement of the f64 logarithm: ln m = y0 + (m e^{-y0} - 1) - (..)^2/2.
    let y0 = m.ln();
    let t = exp_dd(Dd::from_f64(-y0)).mul_f64(m);
    let d = t.sub(Dd::from_f64(1.0));
    let corr = d.sub(d.mul(d).mul_f64(0.5));
    Dd::from_f64(y0).add(corr).add(LN2.mul_f64(e as f64))
}

/// sin(x^{-beta}) for 0 < x, with the power and the reduction modulo 2*pi both
/// carried in double-double. Falls back to plain f64 once the phase exceeds
/// 2^53 (where the input's own quantization makes the value meaningless).
pub(crate) fn sin_recip_pow(x: f64, beta: f64) -> f64 {
    let theta = exp_dd(ln_dd(x).mul_f64(-beta));
    if !theta.hi.is_finite() || theta.hi >= 9.0e15 {
        return theta.hi.sin();
    }
    let n = (theta.hi * FRAC_1_2PI).round();
    let r = theta.sub(two_prod(n, TWO_PI.hi)).sub(Dd::from_f64(n * TWO_PI.lo));
    (r.hi + r.lo).sin()
}
