//! In-place FFT: iterative radix-2 for power-of-two lengths, Bluestein's
//! chirp-z algorithm for everything else (the experiments here use N = 2e5
//! and N = 3^10, neither a power of two).

use num_complex::Complex64;
use std::f64::consts::PI;

/// Forward unnormalized transform X_k = Σ_n x_n e^{−i2πkn/N}, any N ≥ 1.
pub fn fft(buf: &mut [Complex64]) {
    let n = buf.len();
    if n <= 1 {
        return;
    }
    if n.is_power_of_two() {
        fft_radix2(buf, false);
    } else {
        bluestein(buf);
    }
}

/// Inverse unnormalized transform x_n = Σ_k X_k e^{+i2πkn/N} (no 1/N).
pub fn ifft(buf: &mut [Complex64]) {
    for v in buf.iter_mut() {
        *v = v.conj();
    }
    fft(buf);
    for v in buf.iter_mut() {
        *v = v.conj();
    }
}

fn fft_radix2(buf: &mut [Complex64], inverse: bool) {
    let n = buf.len();
    debug_assert!(n.is_power_of_two());
    // bit-reversal permutation
    let mut j = 0usize;
    for i in 1..n {
        let mut bit = n >> 1;
        while j & bit != 0 {
            j ^= bit;
            bit >>= 1;
        }
        j |= bit;
        if i < j {
            buf.swap(i, j);
        }
    }
    let sign = if inverse { 1.0 } else { -1.0 };
    let mut len = 2;
    while len <= n {
        let ang = sign * 2.0 * PI / len as f64;
        let half = len / 2;
        // per-stage twiddles from exact angles
        let tw: Vec<Complex64> = (0..half)
            .map(|k| Complex64::from_polar(1.0, ang * k as f64))
            .collect();
        for start in (0..n).step_by(len) {
            for k in 0..half {
                let u = buf[start + k];
                let v = buf[start + k + half] * tw[k];
                buf[start + k] = u + v;
                buf[start + k + half] = u - v;
            }
        }
        len <<= 1;
    }
}

/// Bluestein: X_k = c_k Σ_n (x_n c_n) ĉ_{k−n}, with c_n = e^{−iπ n²/N},
/// evaluated as a circular convolution of length 2^p ≥ 2N−1. The quadratic
/// phase is reduced with exact integer arithmetic (n² mod 2N) so the twiddles
/// stay accurate at large N.
fn bluestein(buf: &mut [Complex64]) {
    let n = buf.len();
    let m = (2 * n - 1).next_power_of_two();
    let chirp: Vec<Complex64> = (0..n)
        .map(|i| {
            let sq = (i as u64 * i as u64) % (2 * n as u64);
            Complex64::from_polar(1.0, -PI * sq as f64 / n as f64)
        })
        .collect();
    let mut a = vec![Complex64::new(0.0, 0.0); m];
    for i in 0..n {
        a[i] = buf[i] * chirp[i];
    }
    let mut b = vec![Complex64::new(0.0, 0.0); m];
    b[0] = chirp[0].conj();
    for i in 1..n {
        let c = chirp[i].conj();
        b[i] = c;
        b[m - i] = c;
    }
    fft_radix2(&mut a, false);
    fft_radix2(&mut b, false);
    for i in 0..m {
        a[i] *= b[i];
    }
    fft_radix2(&mut a, true);
    let scale = 1.0 / m as f64;
    for i in 0..n {
        buf[i] = chirp[i] * a[i] * scale;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn naive_dft(x: &[Complex64]) -> Vec<Complex64> {
        let n = x.len();
        (0..n)
            .map(|k| {
                (0..n)
                    .map(|j| x[j] * Complex64::from_polar(1.0, -2.0 * PI * (k * j % n) as f64 / n as f64))
                    .sum()
            })
            .collect()
    }

    fn pseudo_random(n: usize) -> Vec<Complex64> {
        // small deterministic LCG; no RNG dependency needed for this
        let mut state = 0x2545_f491_4f6c_dd1du64;
        (0..n)
            .map(|_| {
                let mut next = || {
                    state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    ((state >> 11) as f64 / (1u64 << 53) as f64) - 0.5
                };
                Complex64::new(next(), next())
            })
            .collect()
    }

    #[test]
    fn matches_naive_dft_all_small_sizes() {
        for n in 2..=64 {
            let x = pseudo_random(n);
            let mut got = x.clone();
            fft(&mut got);
            let want = naive_dft(&x);
            for k in 0..n {
                assert!(
                    (got[k] - want[k]).norm() < 1e-11,
                    "n={n} k={k} diff={}",
                    (got[k] - want[k]).norm()
                );
            }
        }
    }

    #[test]
    fn inverse_round_trip_non_power_of_two() {
        for &n in &[12usize, 200, 729, 1000] {
            let x = pseudo_random(n);
            let mut y = x.clone();
            fft(&mut y);
            ifft(&mut y);
            for i in 0..n {
                assert!((y[i] / n as f64 - x[i]).norm() < 1e-11, "n={n} i={i}");
            }
        }
    }
}
