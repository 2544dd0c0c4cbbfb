//! Simply connected domains given as images `Phi(D)` of an explicit analytic
//! map of the unit disk.
//!
//! A univalent `Phi` turns the Steklov problem on `Phi(D)` into a weighted
//! problem on the circle: the boundary weight `|Phi'|` is the density of
//! boundary arclength with respect to the angle. Domains are *specified* by
//! their map; recovering a map from a curve (Theodorsen-style solvers) is out
//! of scope.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::geometry::{BoundaryCurve, Orientation};
use crate::numerics::fft::evaluate_trig_poly;

/// Angular resolution of the univalence screening grid.
const SCREEN_ANGULAR: usize = 512;
/// Radial resolution of the univalence screening grid.
const SCREEN_RADIAL: usize = 32;
/// `Phi'` must stay above this fraction of its boundary maximum on the grid.
const DERIVATIVE_RATIO: f64 = 1e-9;

/// Analytic map `Phi(z) = sum_{n>=1} a_n z^n` with `a_0 = 0`.
///
/// Construction normalizes `a_1` to be real and positive by a parameter
/// rotation (which leaves the image domain unchanged), quotienting out the
/// trivial Moebius freedom.
#[derive(Debug, Clone)]
pub struct ConformalMap {
    /// `taylor[k]` is the coefficient of `z^{k+1}`.
    taylor: Vec<Complex64>,
    validated_univalent: bool,
}

/// Samples of `|Phi'|` on the uniform circle grid `theta_j = 2 pi j / M`.
#[derive(Debug, Clone)]
pub struct BoundaryWeight {
    samples: Vec<f64>,
}

impl ConformalMap {
    /// Builds the map without univalence screening; `taylor[k]` is the
    /// coefficient of `z^{k+1}` and must start with a nonzero `a_1`.
    pub fn new(taylor: Vec<Complex64>) -> Result<Self> {
        let a1 = taylor.first().copied().unwrap_or(Complex64::ZERO);
        if a1.norm() == 0.0 {
            return Err(Error::NotUnivalent {
                reason: "leading coefficient a_1 vanishes".into(),
            });
        }
        // Rotate the parameter so a_1 > 0: a_n <- a_n e^{-in arg a_1}.
        let phase = a1.arg();
        let taylor = taylor
            .iter()
            .enumerate()
            .map(|(k, a)| a * Complex64::from_polar(1.0, -((k + 1) as f64) * phase))
            .collect();
        Ok(ConformalMap {
            taylor,
            validated_univalent: false,
        })
    }

    /// Builds the map and requires the univalence screen to pass.
    pub fn univalent(taylor: Vec<Complex64>) -> Result<Self> {
        let mut map = Self::new(taylor)?;
        if !map.validate_univalence() {
            return Err(Error::NotUnivalent {
                reason: "derivative vanishes or boundary image is not simple".into(),
            });
        }
        Ok(map)
    }

    pub fn taylor(&self) -> &[Complex64] {
        &self.taylor
    }

    pub fn is_validated(&self) -> bool {
        self.validated_univalent
    }

    pub fn evaluate(&self, z: Complex64) -> Complex64 {
        // Horner in z, highest degree first.
        self.taylor
            .iter()
            .rev()
            .fold(Complex64::ZERO, |acc, &a| (acc + a) * z)
    }

    pub fn derivative(&self, z: Complex64) -> Complex64 {
        self.taylor
            .iter()
            .enumerate()
            .rev()
            .fold(Complex64::ZERO, |acc, (k, &a)| {
                acc * z + a * (k + 1) as f64
            })
    }

    /// Image of the unit circle as a validated boundary curve.
    pub fn boundary_curve(&self) -> Result<BoundaryCurve> {
        BoundaryCurve::from_fourier(1, self.taylor.clone(), Orientation::Positive)
    }

    /// Necessary-condition univalence screen: `Phi'` nonvanishing on a
    /// radial-angular grid of the closed disk and the boundary image simple
    /// at the validation resolution. Returns the verdict (never errors) and
    /// records it on the map.
    pub fn validate_univalence(&mut self) -> bool {
        let boundary_max = (0..SCREEN_ANGULAR)
            .map(|j| {
                let theta = 2.0 * std::f64::consts::PI * j as f64 / SCREEN_ANGULAR as f64;
                self.derivative(Complex64::from_polar(1.0, theta)).norm()
            })
            .fold(0.0, f64::max);
        let threshold = DERIVATIVE_RATIO * boundary_max;
        for i in 0..=SCREEN_RADIAL {
            let r = i as f64 / SCREEN_RADIAL as f64;
            for j in 0..SCREEN_ANGULAR {
                let theta = 2.0 * std::f64::consts::PI * j as f64 / SCREEN_ANGULAR as f64;
                if self.derivative(Complex64::from_polar(r, theta)).norm() <= threshold {
                    self.validated_univalent = false;
                    return false;
                }
            }
        }
        self.validated_univalent = self.boundary_curve().is_ok();
        self.validated_univalent
    }

    /// Samples `|Phi'|` on the uniform circle grid.
    ///
    /// `m` must be a power of two `>= 64`; the map must have passed the
    /// univalence screen.
    pub fn boundary_weight(&self, m: usize) -> Result<BoundaryWeight> {
        assert!(
            m.is_power_of_two() && m >= 64,
            "weight grid must be a power of two >= 64, got {m}"
        );
        if !self.validated_univalent {
            return Err(Error::NotUnivalent {
                reason: "map has not passed the univalence screen".into(),
            });
        }
        // Phi'(e^{i theta}) = sum_n n a_n e^{i (n-1) theta}.
        let deriv_coeffs: Vec<Complex64> = self
            .taylor
            .iter()
            .enumerate()
            .map(|(k, a)| a * (k + 1) as f64)
            .collect();
        let samples = evaluate_trig_poly(&deriv_coeffs, 0, m)
            .iter()
            .map(|v| v.norm())
            .collect::<Vec<f64>>();
        debug_assert!(samples.iter().all(|&w| w > 0.0));
        Ok(BoundaryWeight { samples })
    }

    /// Map with all coefficients scaled by `c > 0` (image dilated by `c`).
    pub fn scaled(&self, c: f64) -> Self {
        assert!(c > 0.0);
        ConformalMap {
            taylor: self.taylor.iter().map(|a| a * c).collect(),
            validated_univalent: self.validated_univalent,
        }
    }
}

impl BoundaryWeight {
    pub fn samples(&self) -> &[f64] {
        &self.samples
    }

    pub fn grid_size(&self) -> usize {
        self.samples.len()
    }

    /// Total mass `sum w_j * 2 pi / M`; equals the image boundary length.
    pub fn mass(&self) -> f64 {
        crate::numerics::periodic_trapezoid(&self.samples, 2.0 * std::f64::consts::PI)
    }
}

/// Convenience constructor used throughout tests and the CLI: a map from
/// plain `(re, im)` Taylor coefficient pairs.
pub fn map_from_pairs(pairs: &[[f64; 2]]) -> Result<ConformalMap> {
    ConformalMap::univalent(pairs.iter().map(|p| Complex64::new(p[0], p[1])).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn re(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn identity_map_weight() {
        let map = ConformalMap::univalent(vec![re(1.0)]).unwrap();
        let w = map.boundary_weight(256).unwrap();
        assert!(w.samples().iter().all(|&s| (s - 1.0).abs() < 1e-14));
        assert!((w.mass() - 2.0 * PI).abs() < 1e-12);
    }

    #[test]
    fn dilation_weight() {
        let map = ConformalMap::univalent(vec![re(2.0)]).unwrap();
        let w = map.boundary_weight(64).unwrap();
        assert!(w.samples().iter().all(|&s| (s - 2.0).abs() < 1e-14));
        assert!((w.mass() - 4.0 * PI).abs() < 1e-12);
    }

    #[test]
    fn quadratic_map_weight_matches_arclength_oracle() {
        let map = ConformalMap::univalent(vec![re(1.0), re(0.3)]).unwrap();
        let w = map.boundary_weight(512).unwrap();
        for (j, &s) in w.samples().iter().enumerate() {
            let theta = 2.0 * PI * j as f64 / 512.0;
            let expected = (Complex64::new(1.0, 0.0)
                + Complex64::from_polar(0.6, theta))
            .norm();
            assert!((s - expected).abs() < 1e-13);
        }
        let arclength = map.boundary_curve().unwrap().arclength();
        assert!((w.mass() - arclength).abs() < 1e-10 * arclength);
    }

    #[test]
    fn univalence_screen_accepts_and_rejects() {
        assert!(ConformalMap::new(vec![re(1.0)]).unwrap().validate_univalence());
        // z^2 has Phi'(0) = 0.
        assert!(!ConformalMap::new(vec![re(0.0), re(1.0)])
            .unwrap_err()
            .to_string()
            .is_empty());
        let mut squared = ConformalMap {
            taylor: vec![re(0.0), re(1.0)],
            validated_univalent: false,
        };
        assert!(!squared.validate_univalence());
        // 2 |a_2| = 0.98 < 1: the coefficient criterion guarantees univalence.
        assert!(2.0 * 0.49 < 1.0);
        assert!(ConformalMap::new(vec![re(1.0), re(0.49)])
            .unwrap()
            .validate_univalence());
    }

    #[test]
    fn weight_requires_validation() {
        let map = ConformalMap::new(vec![re(1.0), re(0.3)]).unwrap();
        assert!(matches!(
            map.boundary_weight(64),
            Err(Error::NotUnivalent { .. })
        ));
    }

    #[test]
    fn parameter_rotation_is_quotiented_by_normalization() {
        // a_n e^{in phi} describes the same image domain; normalization must
        // produce identical weights.
        let phi = 0.731;
        let base = ConformalMap::univalent(vec![re(1.0), re(0.3)]).unwrap();
        let rotated = ConformalMap::univalent(vec![
            Complex64::from_polar(1.0, phi),
            Complex64::from_polar(0.3, 2.0 * phi),
        ])
        .unwrap();
        let wb = base.boundary_weight(128).unwrap();
        let wr = rotated.boundary_weight(128).unwrap();
        for (a, b) in wb.samples().iter().zip(wr.samples()) {
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn weight_mass_matches_geometry_arclength_for_univalent_maps() {
        for taylor in [
            vec![re(1.0)],
            vec![re(1.0), re(0.3)],
            vec![re(1.0), re(0.2), re(0.1)],
            vec![re(1.0), re(0.0), re(0.25)],
        ] {
            let map = ConformalMap::univalent(taylor).unwrap();
            let mass = map.boundary_weight(1024).unwrap().mass();
            let arclength = map.boundary_curve().unwrap().arclength();
            assert!(
                (mass - arclength).abs() < 1e-8 * arclength,
                "mass {mass} vs arclength {arclength}"
            );
        }
    }
}
