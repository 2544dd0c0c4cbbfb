//! Fourier–Galerkin solver for simply connected domains `Phi(D)`.
//!
//! Conformal invariance of the Dirichlet energy turns the Steklov problem on
//! `Phi(D)` into a weighted problem on the unit circle,
//! `Lambda f = sigma |Phi'| f`, where `Lambda` is the Dirichlet-to-Neumann
//! map of the disk. In the orthonormal real Fourier basis
//! `{1/sqrt(2pi), cos(n theta)/sqrt(pi), sin(n theta)/sqrt(pi)}` the operator
//! `Lambda` is exactly `diag(|n|)`, so the discretization reduces to one Gram
//! matrix of the weight, assembled from its FFT.

use nalgebra::DMatrix;
use num_complex::Complex64;
use std::f64::consts::{PI, TAU};

use crate::conformal::{BoundaryWeight, ConformalMap};
use crate::error::{Error, Result};
use crate::geometry::{SolverKind, Spectrum};
use crate::numerics::eig::generalized_symmetric_eig;
use crate::numerics::fft::{evaluate_trig_poly, fourier_coefficients};

/// Modes above `N / TRUSTED_FRACTION` are treated as polluted by truncation.
const TRUSTED_FRACTION: usize = 4;
/// Quadrature oversampling: the weight grid must hold at least this many
/// samples per retained mode.
const OVERSAMPLING: usize = 8;

/// Stiffness/mass pair of the weighted circle problem at cutoff `N`.
///
/// Basis ordering: index 0 is the constant, index `2n-1` is `cos(n theta)`,
/// index `2n` is `sin(n theta)`, all normalized to unit `L^2` norm on the
/// circle. `a` is then `diag(0, 1, 1, 2, 2, ..., N, N)`, the disk
/// Dirichlet-to-Neumann symbol; `b` is the Gram matrix of the weight.
#[derive(Debug, Clone)]
pub struct GalerkinPair {
    pub a: DMatrix<f64>,
    pub b: DMatrix<f64>,
    /// Mode cutoff `N`; matrix dimension is `2N + 1`.
    pub modes: usize,
    /// Quadrature grid size `M >= 8N` behind `b`.
    pub grid: usize,
}

/// Spectrum together with eigenfunction boundary traces, for callers that
/// need the discrete eigenbasis (test-function orthogonality constraints).
#[derive(Debug, Clone)]
pub struct FourierSolution {
    pub spectrum: Spectrum,
    /// `traces[k]` samples the `k`-th eigenfunction on the uniform circle
    /// grid carrying `weight`; the family is orthonormal for the measure
    /// `weight * (2 pi / M)`.
    pub traces: Vec<Vec<f64>>,
    /// `|Phi'|` on the same grid.
    pub weight: Vec<f64>,
}

/// Self-convergence of the trusted eigenvalues between cutoffs `N` and `2N`.
#[derive(Debug, Clone)]
pub struct ConvergenceReport {
    pub modes: usize,
    /// Relative change of `sigma_k` between the two cutoffs, `k` trusted at
    /// the coarser one; denominators saturate at 1 near the zero eigenvalue.
    pub per_eigenvalue: Vec<f64>,
    pub max_drift: f64,
}

/// Assembles the Galerkin pair for a sampled weight at mode cutoff `modes`.
///
/// `b` entries are exact trapezoid sums `(2pi/M) sum_m w_m e_j e_k`; products
/// of basis functions are again harmonics, so every entry is a twiddle of at
/// most two weight Fourier coefficients (Toeplitz-plus-Hankel structure).
pub fn dtn_matrix(weight: &BoundaryWeight, modes: usize) -> Result<GalerkinPair> {
    assert!(modes >= 1, "need at least one nonconstant mode");
    let m = weight.grid_size();
    if m < OVERSAMPLING * modes {
        return Err(Error::InsufficientQuadrature {
            m,
            min: OVERSAMPLING * modes,
        });
    }

    let dim = 2 * modes + 1;
    let mut a = DMatrix::zeros(dim, dim);
    for n in 1..=modes {
        a[(2 * n - 1, 2 * n - 1)] = n as f64;
        a[(2 * n, 2 * n)] = n as f64;
    }

    // W_p = (2pi/M) sum_m w_m e^{-ip theta_m}; the assembly needs p up to 2N,
    // alias-free because M >= 8N.
    let coeffs = fourier_coefficients(weight.samples());
    let w_hat = |p: i64| -> Complex64 {
        let c = coeffs[p.unsigned_abs() as usize] * TAU;
        if p >= 0 { c } else { c.conj() }
    };

    let norm_const = 1.0 / TAU;
    let norm_mixed = 1.0 / (PI * std::f64::consts::SQRT_2);
    let norm_pair = 1.0 / PI;

    let mut b = DMatrix::zeros(dim, dim);
    b[(0, 0)] = w_hat(0).re * norm_const;
    for k in 1..=modes {
        let wk = w_hat(k as i64);
        b[(0, 2 * k - 1)] = wk.re * norm_mixed;
        b[(2 * k - 1, 0)] = wk.re * norm_mixed;
        b[(0, 2 * k)] = -wk.im * norm_mixed;
        b[(2 * k, 0)] = -wk.im * norm_mixed;
    }
    for j in 1..=modes {
        for k in 1..=modes {
            let diff = w_hat(j as i64 - k as i64);
            let sum = w_hat((j + k) as i64);
            let cross = 0.5 * (diff.im - sum.im) * norm_pair;
            b[(2 * j - 1, 2 * k - 1)] = 0.5 * (diff.re + sum.re) * norm_pair;
            b[(2 * j, 2 * k)] = 0.5 * (diff.re - sum.re) * norm_pair;
            b[(2 * j - 1, 2 * k)] = cross;
            b[(2 * k, 2 * j - 1)] = cross;
        }
    }

    Ok(GalerkinPair {
        a,
        b,
        modes,
        grid: m,
    })
}

/// Samples a coefficient vector in the ordered orthonormal basis on the
/// uniform grid of size `grid`.
pub fn real_basis_samples(coeffs: &[f64], grid: usize) -> Vec<f64> {
    assert!(coeffs.len() % 2 == 1, "basis dimension must be odd");
    let modes = coeffs.len() / 2;
    let inv_sqrt_2pi = 1.0 / TAU.sqrt();
    let half_inv_sqrt_pi = 0.5 / PI.sqrt();
    let mut laurent = vec![Complex64::ZERO; 2 * modes + 1];
    laurent[modes] = Complex64::new(coeffs[0] * inv_sqrt_2pi, 0.0);
    for n in 1..=modes {
        let c = Complex64::new(coeffs[2 * n - 1], -coeffs[2 * n]) * half_inv_sqrt_pi;
        laurent[modes + n] = c;
        laurent[modes - n] = c.conj();
    }
    evaluate_trig_poly(&laurent, -(modes as i64), grid)
        .iter()
        .map(|z| z.re)
        .collect()
}

fn weight_grid(modes: usize) -> usize {
    (OVERSAMPLING * modes).next_power_of_two().max(64)
}

/// First `k_max + 1` Steklov eigenvalues of `Phi(D)` with eigenfunction
/// boundary traces.
pub fn steklov_solution(
    map: &ConformalMap,
    modes: usize,
    k_max: usize,
) -> Result<FourierSolution> {
    if k_max > 2 * modes {
        return Err(Error::BadParameters {
            reason: format!("k_max {k_max} exceeds basis size at cutoff {modes}"),
        });
    }
    let weight = map.boundary_weight(weight_grid(modes))?;
    let pair = dtn_matrix(&weight, modes)?;
    let eig = generalized_symmetric_eig(&pair.a, &pair.b)?;

    let values: Vec<f64> = eig.eigenvalues[..=k_max]
        .iter()
        .map(|&v| v.max(0.0))
        .collect();
    let trusted = k_max.min(modes / TRUSTED_FRACTION);
    let spectrum = Spectrum::new(values, SolverKind::Fourier, modes, trusted)?;

    let traces = (0..=k_max)
        .map(|k| {
            let column: Vec<f64> = eig.eigenvectors.column(k).iter().copied().collect();
            real_basis_samples(&column, weight.grid_size())
        })
        .collect();
    Ok(FourierSolution {
        spectrum,
        traces,
        weight: weight.samples().to_vec(),
    })
}

/// First `k_max + 1` Steklov eigenvalues of `Phi(D)`.
pub fn steklov_spectrum_fourier(
    map: &ConformalMap,
    modes: usize,
    k_max: usize,
) -> Result<Spectrum> {
    Ok(steklov_solution(map, modes, k_max)?.spectrum)
}

/// Compares the trusted eigenvalues at cutoffs `modes` and `2 * modes`.
pub fn convergence_report(
    map: &ConformalMap,
    modes: usize,
    k_max: usize,
) -> Result<ConvergenceReport> {
    let coarse = steklov_spectrum_fourier(map, modes, k_max)?;
    let fine = steklov_spectrum_fourier(map, 2 * modes, k_max)?;
    let per_eigenvalue: Vec<f64> = (0..=coarse.trusted_count())
        .map(|k| (fine.sigma(k) - coarse.sigma(k)).abs() / fine.sigma(k).max(1.0))
        .collect();
    let max_drift = per_eigenvalue.iter().copied().fold(0.0, f64::max);
    Ok(ConvergenceReport {
        modes,
        per_eigenvalue,
        max_drift,
    })
}
