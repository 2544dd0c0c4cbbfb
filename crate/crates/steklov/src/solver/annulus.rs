//! Exact Steklov spectrum of the concentric annulus `A_eps = {eps < |z| < 1}`
//! by separation of variables — the reference solution for a two-component
//! boundary.
//!
//! Angular mode `n` reduces to a 2x2 problem in the radial coefficients of
//! `u = a r^n + b r^{-n}` (or `a + b log r` for `n = 0`), with
//! `partial_n u = sigma u` on both circles: `+partial_r` at `r = 1`,
//! `-partial_r` at `r = eps`. Eliminating the coefficients leaves one
//! quadratic per mode:
//!
//! ```text
//! n = 0:   sigma * (sigma log(1/eps) - (1 + 1/eps)) = 0
//! n >= 1:  sigma^2 - n S(eps, n) sigma + n^2 / eps = 0,
//!          S = (1 + eps)(1 + eps^{2n}) / (eps (1 - eps^{2n}))
//! ```
//!
//! Roots are evaluated with the cancellation-free quadratic formula; this
//! module is the exactness anchor for the boundary-element solver.

use crate::error::{Error, Result};
use crate::geometry::{SolverKind, Spectrum};

fn check_epsilon(epsilon: f64) -> Result<()> {
    if !(epsilon > 0.0 && epsilon < 1.0) {
        return Err(Error::EpsilonOutOfRange { epsilon });
    }
    Ok(())
}

/// Coefficients of the per-mode eigenvalue condition, exposed so tests can
/// root-find on the determinant independently of the closed form.
///
/// Returns `(sum, product)` of the two eigenvalues of mode `n >= 1`.
fn mode_quadratic(epsilon: f64, n: u32) -> (f64, f64) {
    let e2n = epsilon.powi(2 * n as i32);
    let sum = n as f64 * (1.0 + epsilon) * (1.0 + e2n) / (epsilon * (1.0 - e2n));
    let product = (n as f64) * (n as f64) / epsilon;
    (sum, product)
}

/// The two Steklov eigenvalues carried by angular mode `n`, sorted.
///
/// Mode 0 contributes `0` (constants) and `(1 + 1/eps) / log(1/eps)`; each
/// mode `n >= 1` contributes two positive roots, and each appears twice in
/// the merged spectrum (cos and sin branches).
pub fn mode_eigenvalues(epsilon: f64, n: u32) -> Result<(f64, f64)> {
    check_epsilon(epsilon)?;
    if n == 0 {
        let sigma_plus = (1.0 + 1.0 / epsilon) / (1.0 / epsilon).ln();
        return Ok((0.0, sigma_plus));
    }
    let (sum, product) = mode_quadratic(epsilon, n);
    // sum > 0 always; take the large root without cancellation, the small
    // one from the product.
    let disc = (sum * sum - 4.0 * product).max(0.0).sqrt();
    let big = 0.5 * (sum + disc);
    let small = product / big;
    Ok((small, big))
}

/// Determinant of the 2x2 mode system as a function of `sigma`, for
/// independent root bracketing. Zero exactly at the mode eigenvalues.
pub fn mode_determinant(epsilon: f64, n: u32, sigma: f64) -> f64 {
    if n == 0 {
        // u = a + b log r: [outer] b = sigma a; [inner] -b/eps = sigma (a + b log eps).
        // Determinant of the coefficient matrix:
        // | -sigma            1          |
        // | -sigma    -1/eps - sigma ln eps |
        sigma * (sigma * epsilon.ln() + 1.0 / epsilon + 1.0) - 0.0
    } else {
        let nf = n as f64;
        let en1 = epsilon.powi(n as i32 - 1);
        let en = epsilon.powi(n as i32);
        let emn = epsilon.powi(-(n as i32));
        let emn1 = epsilon.powi(-(n as i32) - 1);
        // rows: (n - sigma) a + (-n - sigma) b = 0
        //       (-n eps^{n-1} - sigma eps^n) a + (n eps^{-n-1} - sigma eps^{-n}) b = 0
        (nf - sigma) * (nf * emn1 - sigma * emn) - (-nf - sigma) * (-nf * en1 - sigma * en)
    }
}

/// Full Steklov spectrum of the annulus, merged over angular modes.
///
/// Modes are explored until the smallest eigenvalue of the next mode exceeds
/// the current `k_max`-th value, which is sufficient because per-mode
/// eigenvalues grow with `n`; the cutoff is re-checked after the merge.
pub fn steklov_spectrum(epsilon: f64, k_max: usize) -> Result<Spectrum> {
    check_epsilon(epsilon)?;
    assert!(k_max >= 1, "k_max must be at least 1");

    let (zero, sigma0) = mode_eigenvalues(epsilon, 0)?;
    let mut values = vec![zero, sigma0];
    let mut n = 0;
    loop {
        n += 1;
        let (small, big) = mode_eigenvalues(epsilon, n)?;
        // cos and sin branches: multiplicity 2 each.
        values.extend_from_slice(&[small, small, big, big]);
        values.sort_by(|a, b| a.partial_cmp(b).unwrap());
        if values.len() > k_max + 1 {
            let kth = values[k_max];
            let (next_small, _) = mode_eigenvalues(epsilon, n + 1)?;
            if next_small > kth {
                break;
            }
        }
    }
    // Post-hoc cutoff check: no discarded mode could have contributed.
    let (next_small, _) = mode_eigenvalues(epsilon, n + 1)?;
    assert!(
        next_small > values[k_max],
        "mode cutoff rule violated: mode {} reaches below sigma_{k_max}",
        n + 1
    );
    values.truncate(k_max + 1);
    Spectrum::new(values, SolverKind::Annulus, n as usize, k_max)
}

/// Boundary length of the annulus, `2 pi (1 + eps)`.
pub fn boundary_length(epsilon: f64) -> f64 {
    2.0 * std::f64::consts::PI * (1.0 + epsilon)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::bracketed_root;
    use std::f64::consts::PI;

    #[test]
    fn mode_zero_has_constant_eigenfunction() {
        for epsilon in [0.1, 0.5, 0.9] {
            let (lo, _) = mode_eigenvalues(epsilon, 0).unwrap();
            assert_eq!(lo, 0.0);
        }
    }

    #[test]
    fn mode_zero_closed_form_matches_root_oracle() {
        let epsilon = 0.5;
        let (_, sigma) = mode_eigenvalues(epsilon, 0).unwrap();
        // Root of the determinant away from sigma = 0.
        let oracle = bracketed_root(
            |s| mode_determinant(epsilon, 0, s) / s,
            1.0,
            10.0,
            1e-14,
        )
        .unwrap();
        assert!(
            (sigma - oracle).abs() < 1e-12,
            "closed form {sigma} vs oracle {oracle}"
        );
    }

    #[test]
    fn higher_mode_closed_form_matches_root_oracle() {
        for (epsilon, n) in [(0.2, 1), (0.5, 1), (0.5, 3), (0.8, 5)] {
            let (small, big) = mode_eigenvalues(epsilon, n).unwrap();
            let small_oracle = bracketed_root(
                |s| mode_determinant(epsilon, n, s),
                1e-6,
                0.5 * (small + big),
                1e-14,
            )
            .unwrap();
            let big_oracle = bracketed_root(
                |s| mode_determinant(epsilon, n, s),
                0.5 * (small + big),
                10.0 * big,
                1e-14,
            )
            .unwrap();
            assert!((small - small_oracle).abs() < 1e-12 * small.max(1.0));
            assert!((big - big_oracle).abs() < 1e-12 * big.max(1.0));
        }
    }

    #[test]
    fn rejects_bad_epsilon() {
        assert!(matches!(
            mode_eigenvalues(0.0, 1),
            Err(Error::EpsilonOutOfRange { .. })
        ));
        assert!(matches!(
            steklov_spectrum(1.0, 4),
            Err(Error::EpsilonOutOfRange { .. })
        ));
    }

    #[test]
    fn spectrum_starts_at_zero_and_doubles_positive_modes() {
        let spectrum = steklov_spectrum(0.5, 8).unwrap();
        let v = spectrum.values();
        assert_eq!(v.len(), 9);
        assert_eq!(v[0], 0.0);
        // sigma_1 = sigma_2 (cos/sin pair of the n = 1 small root).
        assert!((v[1] - v[2]).abs() < 1e-14);
        let (small, _) = mode_eigenvalues(0.5, 1).unwrap();
        assert!((v[1] - small).abs() < 1e-14);
    }

    #[test]
    fn mode_minima_grow_with_n() {
        for epsilon in [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9] {
            let mut prev = -1.0;
            for n in 1..40 {
                let (small, _) = mode_eigenvalues(epsilon, n).unwrap();
                assert!(
                    small > prev,
                    "mode minimum not increasing at eps={epsilon}, n={n}"
                );
                prev = small;
            }
        }
    }

    #[test]
    fn thin_annulus_satisfies_k1_bound_with_slack() {
        // gamma = 0, l = 2: sigma_1 L <= 4 pi.
        let epsilon = 0.01;
        let spectrum = steklov_spectrum(epsilon, 2).unwrap();
        let product = spectrum.sigma(1) * boundary_length(epsilon);
        assert!(product < 4.0 * PI, "sigma_1 L = {product}");
    }

    #[test]
    fn all_trusted_values_satisfy_linear_bound() {
        let epsilon = 0.5;
        let spectrum = steklov_spectrum(epsilon, 8).unwrap();
        let length = boundary_length(epsilon);
        for k in 1..=8 {
            assert!(spectrum.sigma(k) * length <= 4.0 * PI * k as f64 + 1e-10);
        }
    }
}
