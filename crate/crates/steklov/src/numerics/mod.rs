//! Shared numerical kernels: periodic FFT utilities, dense symmetric and
//! symmetric-definite generalized eigensolvers, root bracketing, and the
//! uniform-grid trapezoid rule (spectrally accurate for smooth periodic
//! integrands).

pub mod eig;
pub mod fft;
pub mod root;

pub use eig::{generalized_symmetric_eig, symmetric_eig, SymmetricEigenResult};
pub use fft::{
    cumulative_periodic_integral, fourier_coefficients, spectral_derivative, synthesize,
};
pub use root::bracketed_root;

/// Integral over one period of a smooth periodic function sampled on the
/// uniform grid `t_j = j * period / n`. For such integrands the trapezoid
/// rule degenerates to `mean * period` and converges spectrally.
pub fn periodic_trapezoid(samples: &[f64], period: f64) -> f64 {
    let n = samples.len();
    assert!(n > 0, "empty sample set");
    samples.iter().sum::<f64>() * period / n as f64
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn trapezoid_is_exact_for_trig_polynomials() {
        let n = 32;
        let samples: Vec<f64> = (0..n)
            .map(|j| {
                let t = 2.0 * PI * j as f64 / n as f64;
                1.5 + (3.0 * t).cos() - 2.0 * (5.0 * t).sin()
            })
            .collect();
        let integral = periodic_trapezoid(&samples, 2.0 * PI);
        assert!((integral - 3.0 * PI).abs() < 1e-13);
    }

    #[test]
    fn trapezoid_converges_spectrally_for_analytic_integrand() {
        // integral of exp(cos t) over [0, 2pi] = 2 pi I_0(1)
        let exact = 2.0 * PI * 1.266_065_877_752_008_3;
        let value = |n: usize| {
            let samples: Vec<f64> = (0..n)
                .map(|j| (2.0 * PI * j as f64 / n as f64).cos().exp())
                .collect();
            periodic_trapezoid(&samples, 2.0 * PI)
        };
        assert!((value(8) - exact).abs() < 1e-5);
        assert!((value(16) - exact).abs() < 1e-14);
    }
}
