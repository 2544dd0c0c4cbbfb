//! Smooth closed boundary curves, arclength quantities, and multi-component
//! planar domains.
//!
//! Curves are trigonometric polynomials `z(t) = sum c_n e^{int}`, which gives
//! exact differentiation and spectrally accurate quadrature. Validation
//! (regularity, simplicity, orientation) is grid-based at a fixed resolution
//! and documented as resolution-limited.

use std::collections::HashMap;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerics::fft::evaluate_trig_poly;
use crate::numerics::periodic_trapezoid;

/// Grid size for the default arclength quadrature.
pub const DEFAULT_QUADRATURE_GRID: usize = 1024;
/// Polyline resolution for the simplicity / containment checks.
pub const VALIDATION_RESOLUTION: usize = 16384;
/// A curve is rejected as degenerate when min |z'| falls below this fraction
/// of max |z'| on the validation grid.
const REGULARITY_RATIO: f64 = 1e-3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Orientation {
    /// Counterclockwise; positive signed area. Outer boundaries.
    Positive,
    /// Clockwise; negative signed area. Hole boundaries.
    Negative,
}

/// A smooth closed curve `z(t) = sum_{n} c_n e^{int}`, `t in [0, 2pi)`.
#[derive(Debug, Clone)]
pub struct BoundaryCurve {
    /// `coeffs[k]` multiplies `e^{i (offset + k) t}`.
    coeffs: Vec<Complex64>,
    offset: i64,
    orientation: Orientation,
}

/// Curve, velocity and acceleration sampled on the uniform parameter grid.
#[derive(Debug, Clone)]
pub struct CurveSamples {
    pub z: Vec<Complex64>,
    pub dz: Vec<Complex64>,
    pub ddz: Vec<Complex64>,
}

impl BoundaryCurve {
    /// Builds and validates a curve from its Fourier coefficients.
    ///
    /// `coeffs[k]` is the coefficient of `e^{i (offset + k) t}`. The curve
    /// must be regular (`z' != 0`), simple at the validation resolution, and
    /// its signed area must match the declared orientation.
    pub fn from_fourier(
        offset: i64,
        coeffs: Vec<Complex64>,
        orientation: Orientation,
    ) -> Result<Self> {
        let nonzero_degree = coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| c.norm() > 0.0)
            .map(|(k, _)| (offset + k as i64).abs())
            .max();
        match nonzero_degree {
            Some(deg) if deg >= 1 => {}
            _ => {
                return Err(Error::DegenerateCurve {
                    t: 0.0,
                    min_speed: 0.0,
                })
            }
        }
        let curve = BoundaryCurve {
            coeffs,
            offset,
            orientation,
        };
        curve.validate()?;
        Ok(curve)
    }

    /// Circle of given center and radius; `Negative` parametrizes it
    /// clockwise for use as a hole boundary.
    pub fn circle(center: Complex64, radius: f64, orientation: Orientation) -> Self {
        assert!(radius > 0.0, "radius must be positive");
        let (offset, coeffs) = match orientation {
            Orientation::Positive => (0, vec![center, Complex64::new(radius, 0.0)]),
            Orientation::Negative => (-1, vec![Complex64::new(radius, 0.0), center]),
        };
        // A circle needs no validation scan.
        BoundaryCurve {
            coeffs,
            offset,
            orientation,
        }
    }

    /// Trigonometric interpolation of uniformly spaced boundary points.
    ///
    /// Returns the fitted curve together with the aliasing residual (relative
    /// tail energy at the Nyquist mode); a nonzero residual marks the
    /// conversion as lossy.
    pub fn fit_points(
        points: &[Complex64],
        orientation: Orientation,
    ) -> Result<(Self, f64)> {
        let n = points.len();
        assert!(n >= 4, "need at least 4 points");
        let mut bins = points.to_vec();
        rustfft::FftPlanner::new()
            .plan_fft_forward(n)
            .process(&mut bins);
        for b in &mut bins {
            *b /= n as f64;
        }
        let half = n / 2;
        let total_energy: f64 = bins.iter().skip(1).map(|c| c.norm_sqr()).sum();
        let nyquist_energy = if n % 2 == 0 { bins[half].norm_sqr() } else { 0.0 };
        let residual = if total_energy > 0.0 {
            (nyquist_energy / total_energy).sqrt()
        } else {
            0.0
        };
        // Unalias into centered coefficients c_{-K}..c_{K}, K = ceil(n/2)-1.
        let k_max = (n - 1) / 2;
        let offset = -(k_max as i64);
        let mut coeffs = vec![Complex64::ZERO; 2 * k_max + 1];
        for (idx, c) in coeffs.iter_mut().enumerate() {
            let freq = offset + idx as i64;
            let bin = freq.rem_euclid(n as i64) as usize;
            if !(n % 2 == 0 && bin == half) {
                *c = bins[bin];
            }
        }
        let curve = Self::from_fourier(offset, coeffs, orientation)?;
        Ok((curve, residual))
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    /// Largest frequency magnitude present in the parametrization.
    pub fn degree(&self) -> i64 {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| c.norm() > 0.0)
            .map(|(k, _)| (self.offset + k as i64).abs())
            .max()
            .unwrap_or(0)
    }

    pub fn point(&self, t: f64) -> Complex64 {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| c * (Complex64::i() * (self.offset + k as i64) as f64 * t).exp())
            .sum()
    }

    pub fn velocity(&self, t: f64) -> Complex64 {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| {
                let n = (self.offset + k as i64) as f64;
                c * Complex64::new(0.0, n) * (Complex64::i() * n * t).exp()
            })
            .sum()
    }

    /// Curve, velocity and acceleration on the uniform grid `t_j = 2 pi j / n`,
    /// evaluated by zero-padded inverse FFT (exact for `n > 2 * degree`).
    pub fn sample(&self, n: usize) -> CurveSamples {
        let dz_coeffs: Vec<Complex64> = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| c * Complex64::new(0.0, (self.offset + k as i64) as f64))
            .collect();
        let ddz_coeffs: Vec<Complex64> = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| {
                let f = (self.offset + k as i64) as f64;
                c * Complex64::new(-f * f, 0.0)
            })
            .collect();
        CurveSamples {
            z: evaluate_trig_poly(&self.coeffs, self.offset, n),
            dz: evaluate_trig_poly(&dz_coeffs, self.offset, n),
            ddz: evaluate_trig_poly(&ddz_coeffs, self.offset, n),
        }
    }

    /// Signed enclosed area, `pi * sum n |c_n|^2` (exact).
    pub fn signed_area(&self) -> f64 {
        std::f64::consts::PI
            * self
                .coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| (self.offset + k as i64) as f64 * c.norm_sqr())
                .sum::<f64>()
    }

    /// Arclength by the uniform trapezoid rule on the default grid.
    pub fn arclength(&self) -> f64 {
        self.arclength_on_grid(DEFAULT_QUADRATURE_GRID)
    }

    pub fn arclength_on_grid(&self, n: usize) -> f64 {
        let samples = self.sample(n);
        let speeds: Vec<f64> = samples.dz.iter().map(|v| v.norm()).collect();
        periodic_trapezoid(&speeds, 2.0 * std::f64::consts::PI)
    }

    /// Same curve scaled about the origin by `c > 0`.
    pub fn scaled(&self, c: f64) -> Self {
        assert!(c > 0.0, "scale factor must be positive");
        BoundaryCurve {
            coeffs: self.coeffs.iter().map(|z| z * c).collect(),
            offset: self.offset,
            orientation: self.orientation,
        }
    }

    /// Coefficients as `(frequency, value)` pairs.
    pub fn coefficients(&self) -> impl Iterator<Item = (i64, Complex64)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, &c)| (self.offset + k as i64, c))
    }

    fn validate(&self) -> Result<()> {
        let n = VALIDATION_RESOLUTION;
        let samples = self.sample(n);
        let speeds: Vec<f64> = samples.dz.iter().map(|v| v.norm()).collect();
        let max_speed = speeds.iter().cloned().fold(0.0, f64::max);
        let (j_min, min_speed) = speeds
            .iter()
            .enumerate()
            .fold((0, f64::INFINITY), |(jm, m), (j, &s)| {
                if s < m {
                    (j, s)
                } else {
                    (jm, m)
                }
            });
        if min_speed <= REGULARITY_RATIO * max_speed {
            return Err(Error::DegenerateCurve {
                t: 2.0 * std::f64::consts::PI * j_min as f64 / n as f64,
                min_speed,
            });
        }
        if let Some((i, j)) = polyline_self_intersection(&samples.z) {
            return Err(Error::SelfIntersection {
                t1: 2.0 * std::f64::consts::PI * i as f64 / n as f64,
                t2: 2.0 * std::f64::consts::PI * j as f64 / n as f64,
                resolution: n,
            });
        }
        let area = self.signed_area();
        let found = if area > 0.0 {
            Orientation::Positive
        } else {
            Orientation::Negative
        };
        if found != self.orientation {
            return Err(Error::OrientationMismatch {
                expected: self.orientation,
                found,
                signed_area: area,
            });
        }
        Ok(())
    }
}

/// A planar domain: one positively oriented outer curve, negatively oriented
/// pairwise disjoint holes strictly inside it, and topological data.
#[derive(Debug, Clone)]
pub struct DomainSpec {
    outer: BoundaryCurve,
    holes: Vec<BoundaryCurve>,
    genus: usize,
    total_length: f64,
}

impl DomainSpec {
    /// Assembles and validates a domain. Holes must be strictly inside the
    /// outer curve and pairwise disjoint (checked on the validation polyline
    /// by segment intersection plus winding numbers).
    pub fn assemble(
        outer: BoundaryCurve,
        holes: Vec<BoundaryCurve>,
        genus: usize,
    ) -> Result<Self> {
        if outer.orientation() != Orientation::Positive {
            return Err(Error::OrientationMismatch {
                expected: Orientation::Positive,
                found: outer.orientation(),
                signed_area: outer.signed_area(),
            });
        }
        let n = VALIDATION_RESOLUTION;
        let outer_poly = outer.sample(n).z;
        let hole_polys: Vec<Vec<Complex64>> = holes.iter().map(|h| h.sample(n).z).collect();

        for (idx, hole) in holes.iter().enumerate() {
            if hole.orientation() != Orientation::Negative {
                return Err(Error::OrientationMismatch {
                    expected: Orientation::Negative,
                    found: hole.orientation(),
                    signed_area: hole.signed_area(),
                });
            }
            if polylines_intersect(&outer_poly, &hole_polys[idx]) {
                return Err(Error::HoleOutsideOuter { index: idx });
            }
            // Strictly inside: winding of the outer curve is +1 at hole samples.
            for probe in hole_polys[idx].iter().step_by(n / 64) {
                if winding_number(&outer_poly, *probe) != 1 {
                    return Err(Error::HoleOutsideOuter { index: idx });
                }
            }
        }
        for i in 0..holes.len() {
            for j in (i + 1)..holes.len() {
                if polylines_intersect(&hole_polys[i], &hole_polys[j]) {
                    return Err(Error::HolesOverlap {
                        first: i,
                        second: j,
                    });
                }
                // Disjoint interiors: neither contains a point of the other.
                let pi = hole_polys[j][0];
                let pj = hole_polys[i][0];
                if winding_number(&hole_polys[i], pi) != 0
                    || winding_number(&hole_polys[j], pj) != 0
                {
                    return Err(Error::HolesOverlap {
                        first: i,
                        second: j,
                    });
                }
            }
        }

        let total_length =
            outer.arclength() + holes.iter().map(|h| h.arclength()).sum::<f64>();
        Ok(DomainSpec {
            outer,
            holes,
            genus,
            total_length,
        })
    }

    pub fn outer(&self) -> &BoundaryCurve {
        &self.outer
    }

    pub fn holes(&self) -> &[BoundaryCurve] {
        &self.holes
    }

    /// Outer curve followed by the holes.
    pub fn curves(&self) -> impl Iterator<Item = &BoundaryCurve> {
        std::iter::once(&self.outer).chain(self.holes.iter())
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    /// Number of boundary components, `1 + number of holes`.
    pub fn component_count(&self) -> usize {
        1 + self.holes.len()
    }

    /// Total boundary arclength.
    pub fn total_length(&self) -> f64 {
        self.total_length
    }

    pub fn scaled(&self, c: f64) -> Self {
        DomainSpec {
            outer: self.outer.scaled(c),
            holes: self.holes.iter().map(|h| h.scaled(c)).collect(),
            genus: self.genus,
            total_length: self.total_length * c,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SolverKind {
    Fourier,
    Annulus,
    Bem,
}

impl std::fmt::Display for SolverKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SolverKind::Fourier => write!(f, "fourier"),
            SolverKind::Annulus => write!(f, "annulus"),
            SolverKind::Bem => write!(f, "bem"),
        }
    }
}

/// Sorted Steklov eigenvalues with solver provenance.
#[derive(Debug, Clone)]
pub struct Spectrum {
    values: Vec<f64>,
    solver: SolverKind,
    /// Discretization size (Fourier cutoff N, nodes per component M, or mode
    /// count for the annulus solver).
    resolution: usize,
    /// Largest eigenvalue index `k` whose value is resolution-trusted; only
    /// `sigma_1 .. sigma_trusted` feed bound reports.
    trusted_count: usize,
}

impl Spectrum {
    pub fn new(
        values: Vec<f64>,
        solver: SolverKind,
        resolution: usize,
        trusted_count: usize,
    ) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidSpectrum {
                reason: "empty eigenvalue list".into(),
            });
        }
        if values.iter().any(|&v| v < -1e-10) {
            return Err(Error::InvalidSpectrum {
                reason: format!("negative eigenvalue {:.3e}", values[0]),
            });
        }
        if values.windows(2).any(|w| w[1] < w[0]) {
            return Err(Error::InvalidSpectrum {
                reason: "eigenvalues not sorted".into(),
            });
        }
        let sigma1 = values.get(1).copied().unwrap_or(1.0);
        if values[0].abs() > 1e-8 * sigma1.max(1.0) {
            return Err(Error::InvalidSpectrum {
                reason: format!("sigma_0 = {:.3e} not zero", values[0]),
            });
        }
        if trusted_count >= values.len() {
            return Err(Error::InvalidSpectrum {
                reason: format!(
                    "trusted index {} out of range for {} eigenvalues",
                    trusted_count,
                    values.len()
                ),
            });
        }
        Ok(Spectrum {
            values,
            solver,
            resolution,
            trusted_count,
        })
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// `sigma_k`; panics if `k` is out of range.
    pub fn sigma(&self, k: usize) -> f64 {
        self.values[k]
    }

    pub fn solver(&self) -> SolverKind {
        self.solver
    }

    pub fn resolution(&self) -> usize {
        self.resolution
    }

    pub fn trusted_count(&self) -> usize {
        self.trusted_count
    }

    pub fn is_trusted(&self, k: usize) -> bool {
        k <= self.trusted_count
    }
}

// ---------------------------------------------------------------------------
// polyline predicates

fn cross(o: Complex64, a: Complex64, b: Complex64) -> f64 {
    (a.re - o.re) * (b.im - o.im) - (a.im - o.im) * (b.re - o.re)
}

fn segments_cross(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> bool {
    let d1 = cross(c, d, a);
    let d2 = cross(c, d, b);
    let d3 = cross(a, b, c);
    let d4 = cross(a, b, d);
    d1 * d2 < 0.0 && d3 * d4 < 0.0
}

struct SegmentGrid {
    cell: f64,
    buckets: HashMap<(i64, i64), Vec<usize>>,
}

impl SegmentGrid {
    fn build(points: &[Complex64]) -> Self {
        let n = points.len();
        let max_len = (0..n)
            .map(|i| (points[(i + 1) % n] - points[i]).norm())
            .fold(0.0, f64::max)
            .max(f64::MIN_POSITIVE);
        let cell = 2.0 * max_len;
        let mut buckets: HashMap<(i64, i64), Vec<usize>> = HashMap::new();
        for i in 0..n {
            let (a, b) = (points[i], points[(i + 1) % n]);
            for key in Self::keys(a, b, cell) {
                buckets.entry(key).or_default().push(i);
            }
        }
        SegmentGrid { cell, buckets }
    }

    fn keys(a: Complex64, b: Complex64, cell: f64) -> Vec<(i64, i64)> {
        let x0 = (a.re.min(b.re) / cell).floor() as i64;
        let x1 = (a.re.max(b.re) / cell).floor() as i64;
        let y0 = (a.im.min(b.im) / cell).floor() as i64;
        let y1 = (a.im.max(b.im) / cell).floor() as i64;
        let mut keys = Vec::with_capacity(4);
        for x in x0..=x1 {
            for y in y0..=y1 {
                keys.push((x, y));
            }
        }
        keys
    }

    fn candidates(&self, a: Complex64, b: Complex64) -> impl Iterator<Item = usize> + '_ {
        Self::keys(a, b, self.cell)
            .into_iter()
            .flat_map(|k| self.buckets.get(&k).into_iter().flatten().copied())
    }
}

/// First pair of non-adjacent segments of the closed polyline that cross, if
/// any. Uses a uniform spatial hash so validation stays near-linear.
fn polyline_self_intersection(points: &[Complex64]) -> Option<(usize, usize)> {
    let n = points.len();
    let grid = SegmentGrid::build(points);
    for i in 0..n {
        let (a, b) = (points[i], points[(i + 1) % n]);
        for j in grid.candidates(a, b) {
            if j <= i {
                continue;
            }
            // Skip adjacent segments (shared endpoint), including the wrap pair.
            if j == i + 1 || (i == 0 && j == n - 1) {
                continue;
            }
            let (c, d) = (points[j], points[(j + 1) % n]);
            if segments_cross(a, b, c, d) {
                return Some((i, j));
            }
        }
    }
    None
}

fn polylines_intersect(p: &[Complex64], q: &[Complex64]) -> bool {
    let grid = SegmentGrid::build(p);
    let np = p.len();
    let nq = q.len();
    for j in 0..nq {
        let (c, d) = (q[j], q[(j + 1) % nq]);
        for i in grid.candidates(c, d) {
            let (a, b) = (p[i], p[(i + 1) % np]);
            if segments_cross(a, b, c, d) {
                return true;
            }
        }
    }
    false
}

/// Winding number of a closed polyline around `p` (crossing count method).
fn winding_number(points: &[Complex64], p: Complex64) -> i64 {
    let n = points.len();
    let mut winding = 0i64;
    for i in 0..n {
        let a = points[i];
        let b = points[(i + 1) % n];
        if a.im <= p.im {
            if b.im > p.im && cross(a, b, p) > 0.0 {
                winding += 1;
            }
        } else if b.im <= p.im && cross(a, b, p) < 0.0 {
            winding -= 1;
        }
    }
    winding
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn unit_circle() -> BoundaryCurve {
        BoundaryCurve::from_fourier(1, vec![c(1.0, 0.0)], Orientation::Positive).unwrap()
    }

    #[test]
    fn unit_circle_basics() {
        let circle = unit_circle();
        assert!((circle.signed_area() - PI).abs() < 1e-14);
        assert!((circle.arclength() - 2.0 * PI).abs() < 1e-12);
    }

    #[test]
    fn radius_three_circle_arclength() {
        let circle = BoundaryCurve::circle(c(0.0, 0.0), 3.0, Orientation::Positive);
        assert!((circle.arclength() - 6.0 * PI).abs() < 1e-12);
    }

    #[test]
    fn joukowski_ellipse_is_valid_and_longer_than_circle() {
        // z = 2 e^{it} + e^{-it} = 3 cos t + i sin t: ellipse with semi-axes 3, 1.
        let curve = BoundaryCurve::from_fourier(
            -1,
            vec![c(1.0, 0.0), c(0.0, 0.0), c(2.0, 0.0)],
            Orientation::Positive,
        )
        .unwrap();
        assert!(curve.arclength() > 2.0 * PI);
    }

    /// Adaptive Simpson quadrature, independent of the uniform-grid path.
    fn adaptive_simpson<F: Fn(f64) -> f64 + Copy>(f: F, a: f64, b: f64, tol: f64) -> f64 {
        fn simpson<F: Fn(f64) -> f64>(f: &F, a: f64, m: f64, b: f64) -> f64 {
            (b - a) / 6.0 * (f(a) + 4.0 * f(m) + f(b))
        }
        fn recurse<F: Fn(f64) -> f64>(
            f: &F,
            a: f64,
            b: f64,
            whole: f64,
            tol: f64,
            depth: u32,
        ) -> f64 {
            let m = 0.5 * (a + b);
            let left = simpson(f, a, 0.5 * (a + m), m);
            let right = simpson(f, m, 0.5 * (m + b), b);
            if depth > 40 || (left + right - whole).abs() < 15.0 * tol {
                left + right + (left + right - whole) / 15.0
            } else {
                recurse(f, a, m, left, tol / 2.0, depth + 1)
                    + recurse(f, m, b, right, tol / 2.0, depth + 1)
            }
        }
        let m = 0.5 * (a + b);
        recurse(&f, a, b, simpson(&f, a, m, b), tol, 0)
    }

    #[test]
    fn ellipse_arclength_matches_adaptive_quadrature_oracle() {
        // Semi-axes (2, 1): z = 1.5 e^{it} + 0.5 e^{-it}.
        let curve = BoundaryCurve::from_fourier(
            -1,
            vec![c(0.5, 0.0), c(0.0, 0.0), c(1.5, 0.0)],
            Orientation::Positive,
        )
        .unwrap();
        let speed = |t: f64| curve.velocity(t).norm();
        let oracle = adaptive_simpson(speed, 0.0, 2.0 * PI, 1e-13);
        assert!(
            (curve.arclength() - oracle).abs() < 1e-10,
            "arclength {} vs oracle {}",
            curve.arclength(),
            oracle
        );
    }

    #[test]
    fn self_intersecting_curve_is_rejected() {
        // z = e^{it} + 0.8 e^{2it}: the image of the circle under z + 0.8 z^2,
        // which folds over itself (z1 + z2 = -1.25 has unit-circle solutions).
        let err = BoundaryCurve::from_fourier(
            1,
            vec![c(1.0, 0.0), c(0.8, 0.0)],
            Orientation::Positive,
        )
        .unwrap_err();
        assert!(
            matches!(
                err,
                Error::SelfIntersection { .. } | Error::DegenerateCurve { .. }
            ),
            "unexpected error {err:?}"
        );
    }

    #[test]
    fn vanishing_velocity_is_rejected() {
        // z = e^{it} + e^{2it}/2: z' = i e^{it} (1 + e^{it}) vanishes at t = pi.
        let err = BoundaryCurve::from_fourier(
            1,
            vec![c(1.0, 0.0), c(0.5, 0.0)],
            Orientation::Positive,
        )
        .unwrap_err();
        assert!(matches!(err, Error::DegenerateCurve { .. }));
    }

    #[test]
    fn orientation_mismatch_detected() {
        let err =
            BoundaryCurve::from_fourier(1, vec![c(1.0, 0.0)], Orientation::Negative).unwrap_err();
        assert!(matches!(err, Error::OrientationMismatch { .. }));
    }

    #[test]
    fn fit_points_round_trips_a_trig_polynomial() {
        let reference = BoundaryCurve::from_fourier(
            -1,
            vec![c(0.3, 0.0), c(0.0, 0.1), c(1.2, 0.0), c(0.2, 0.05)],
            Orientation::Positive,
        )
        .unwrap();
        let points = reference.sample(64).z;
        let (fit, residual) = BoundaryCurve::fit_points(&points, Orientation::Positive).unwrap();
        assert!(residual < 1e-12, "fit should be lossless, residual {residual}");
        for t in [0.1, 1.7, 4.2] {
            assert!((fit.point(t) - reference.point(t)).norm() < 1e-10);
        }
    }

    #[test]
    fn disk_domain_assembles() {
        let domain = DomainSpec::assemble(unit_circle(), vec![], 0).unwrap();
        assert_eq!(domain.component_count(), 1);
        assert!((domain.total_length() - 2.0 * PI).abs() < 1e-12);
    }

    #[test]
    fn annular_domain_assembles() {
        let hole = BoundaryCurve::circle(c(0.0, 0.0), 0.5, Orientation::Negative);
        let domain = DomainSpec::assemble(unit_circle(), vec![hole], 0).unwrap();
        assert_eq!(domain.component_count(), 2);
        assert!((domain.total_length() - 3.0 * PI).abs() < 1e-12);
    }

    #[test]
    fn oversized_hole_is_rejected() {
        let hole = BoundaryCurve::circle(c(0.0, 0.0), 2.0, Orientation::Negative);
        let err = DomainSpec::assemble(unit_circle(), vec![hole], 0).unwrap_err();
        assert!(matches!(err, Error::HoleOutsideOuter { index: 0 }));
    }

    #[test]
    fn overlapping_holes_are_rejected() {
        let h1 = BoundaryCurve::circle(c(-0.2, 0.0), 0.3, Orientation::Negative);
        let h2 = BoundaryCurve::circle(c(0.2, 0.0), 0.3, Orientation::Negative);
        let err = DomainSpec::assemble(unit_circle(), vec![h1, h2], 0).unwrap_err();
        assert!(matches!(err, Error::HolesOverlap { .. }));
    }

    #[test]
    fn nested_holes_are_rejected() {
        let h1 = BoundaryCurve::circle(c(0.0, 0.0), 0.5, Orientation::Negative);
        let h2 = BoundaryCurve::circle(c(0.0, 0.0), 0.2, Orientation::Negative);
        let err = DomainSpec::assemble(unit_circle(), vec![h1, h2], 0).unwrap_err();
        assert!(matches!(err, Error::HolesOverlap { .. }));
    }

    #[test]
    fn total_length_recomputes_to_tolerance() {
        let hole = BoundaryCurve::circle(c(0.3, 0.1), 0.2, Orientation::Negative);
        let domain = DomainSpec::assemble(unit_circle(), vec![hole], 0).unwrap();
        let recomputed: f64 = domain.curves().map(|cv| cv.arclength_on_grid(4096)).sum();
        assert!((domain.total_length() - recomputed).abs() / recomputed < 1e-10);
    }

    #[test]
    fn spectrum_invariants() {
        let spectrum = Spectrum::new(
            vec![1e-12, 1.0, 1.0, 2.0],
            SolverKind::Fourier,
            64,
            2,
        )
        .unwrap();
        assert!(spectrum.is_trusted(2));
        assert!(!spectrum.is_trusted(3));

        assert!(Spectrum::new(vec![0.5, 1.0], SolverKind::Fourier, 64, 1).is_err());
        assert!(Spectrum::new(vec![0.0, 2.0, 1.0], SolverKind::Fourier, 64, 1).is_err());
        assert!(Spectrum::new(vec![0.0, 1.0], SolverKind::Fourier, 64, 5).is_err());
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn arclength_scales_linearly(scale in 0.1f64..10.0) {
                let curve = BoundaryCurve::from_fourier(
                    -1,
                    vec![c(0.3, 0.0), c(0.0, 0.0), c(1.0, 0.0)],
                    Orientation::Positive,
                ).unwrap();
                let base = curve.arclength();
                let scaled = curve.scaled(scale).arclength();
                prop_assert!((scaled - scale * base).abs() <= 1e-12 * scale.max(1.0) * base);
            }

            #[test]
            fn arclength_invariant_under_coefficient_rotation(phase in 0.0f64..(2.0 * PI)) {
                let rot = Complex64::new(0.0, phase).exp();
                let base = BoundaryCurve::from_fourier(
                    1,
                    vec![c(1.0, 0.0), c(0.2, 0.1)],
                    Orientation::Positive,
                ).unwrap();
                let rotated = BoundaryCurve::from_fourier(
                    1,
                    vec![rot * c(1.0, 0.0), rot * c(0.2, 0.1)],
                    Orientation::Positive,
                ).unwrap();
                prop_assert!((base.arclength() - rotated.arclength()).abs() < 1e-11);
            }
        }
    }
}
