//! Periodic FFT utilities on uniform grids.
//!
//! All routines work with samples `f_j = f(j * period / n)`, `j = 0..n`, of a
//! smooth periodic function and use trigonometric interpolation, so
//! differentiation and antidifferentiation are spectrally accurate.

use num_complex::Complex64;
use rustfft::FftPlanner;

/// Normalized Fourier coefficients of real periodic samples.
///
/// Returns `c_p = (1/n) sum_j f_j e^{-2 pi i p j / n}` for `p = 0..n`.
/// Negative frequencies live at the aliased positions `c_{-k} = c[n-k]`.
pub fn fourier_coefficients(samples: &[f64]) -> Vec<Complex64> {
    let n = samples.len();
    assert!(n > 0, "empty sample set");
    let mut buf: Vec<Complex64> = samples.iter().map(|&x| Complex64::new(x, 0.0)).collect();
    FftPlanner::new().plan_fft_forward(n).process(&mut buf);
    let scale = 1.0 / n as f64;
    for c in &mut buf {
        *c *= scale;
    }
    buf
}

/// Inverse of [`fourier_coefficients`]: evaluates the trigonometric polynomial
/// with normalized coefficients `coeffs` back on the uniform grid.
pub fn synthesize(coeffs: &[Complex64]) -> Vec<f64> {
    let n = coeffs.len();
    let mut buf = coeffs.to_vec();
    FftPlanner::new().plan_fft_inverse(n).process(&mut buf);
    buf.iter().map(|c| c.re).collect()
}

/// Signed frequency of DFT bin `p` for transform length `n`
/// (`0, 1, .., n/2, -(n/2-1), .., -1` for even `n`).
pub fn bin_frequency(p: usize, n: usize) -> i64 {
    if p <= n / 2 {
        p as i64
    } else {
        p as i64 - n as i64
    }
}

/// Derivative of a smooth periodic function from its uniform samples.
///
/// The Nyquist bin of an even-length transform is zeroed: it carries no sign
/// information and would otherwise produce a spurious imaginary part.
pub fn spectral_derivative(samples: &[f64], period: f64) -> Vec<f64> {
    let n = samples.len();
    let mut coeffs = fourier_coefficients(samples);
    let omega = 2.0 * std::f64::consts::PI / period;
    for (p, c) in coeffs.iter_mut().enumerate() {
        let k = bin_frequency(p, n);
        if n % 2 == 0 && p == n / 2 {
            *c = Complex64::ZERO;
        } else {
            *c *= Complex64::new(0.0, k as f64 * omega);
        }
    }
    synthesize(&coeffs)
}

/// Evaluates the trigonometric polynomial `sum_k coeffs[k] e^{i (offset + k) t}`
/// on the uniform grid `t_j = 2 pi j / n` by zero-padded inverse FFT. On-grid
/// evaluation is exact for any `n` (frequencies alias onto the same values).
pub fn evaluate_trig_poly(coeffs: &[Complex64], offset: i64, n: usize) -> Vec<Complex64> {
    let mut bins = vec![Complex64::ZERO; n];
    for (k, &c) in coeffs.iter().enumerate() {
        let freq = offset + k as i64;
        bins[freq.rem_euclid(n as i64) as usize] += c;
    }
    FftPlanner::new().plan_fft_inverse(n).process(&mut bins);
    bins
}

/// Antiderivative `F(t) = int_0^t f` of periodic samples, at the grid nodes
/// `t_j = j * period / n` for `j = 0..=n` (both endpoints included, so the
/// result has `n + 1` entries and `F(period) = mean(f) * period`).
///
/// The mean contributes the linear ramp `c_0 t`; every oscillatory mode is
/// integrated exactly as `c_p (e^{i k omega t} - 1) / (i k omega)`.
pub fn cumulative_periodic_integral(samples: &[f64], period: f64) -> Vec<f64> {
    let n = samples.len();
    let coeffs = fourier_coefficients(samples);
    let mean = coeffs[0].re;
    let omega = 2.0 * std::f64::consts::PI / period;

    // Antiderivative coefficients of the zero-mean part.
    let mut anti = vec![Complex64::ZERO; n];
    for p in 1..n {
        if n % 2 == 0 && p == n / 2 {
            continue;
        }
        let k = bin_frequency(p, n) as f64;
        anti[p] = coeffs[p] / Complex64::new(0.0, k * omega);
    }
    let osc = {
        let mut buf = anti.clone();
        FftPlanner::new().plan_fft_inverse(n).process(&mut buf);
        buf
    };
    let osc0: Complex64 = anti.iter().sum();

    let mut out = Vec::with_capacity(n + 1);
    for j in 0..n {
        let t = period * j as f64 / n as f64;
        out.push(mean * t + (osc[j] - osc0).re);
    }
    out.push(mean * period);
    out
}
