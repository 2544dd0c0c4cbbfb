//! Test-function machinery behind the isoperimetric eigenvalue bounds.
//!
//! The bounds σ_k L ≤ 2π(γ+l)k and σ_pσ_q L² ≤ π²(γ+l)²(p+q)² (even case;
//! (p+q−1)² odd) come from transplanting eigenfunctions of a uniform circular
//! string of length L onto the surface through a degree-d conformal cover
//! ψ: Σ → 𝔻 of the disk. This module implements every ingredient of that
//! argument on the constructive cover family ψ(z) = z^d with the geometry of
//! Σ carried by a univalent map Φ:
//!
//! * the mass parameter m(θ) = ∫₀^θ dμ, where μ is the push-forward of
//!   boundary arclength of Σ through ψ, and L = m(2π);
//! * the string modes h_0 = 1, h_{2n−1}(m) = cos(2nπm/L),
//!   h_{2n}(m) = sin(2nπm/L) with R_L(h_k) = (2πn/L)²;
//! * harmonic extension u of f = h∘m into the disk and its conjugate v,
//!   normalized so ∫_{S¹} v dμ = 0;
//! * the Rayleigh quotients of the transplanted pair α = u∘ψ, β = v∘ψ and a
//!   residual report for each identity in the chain
//!
//!   ```text
//!   R(α)R(β) = d² (∫_{S¹} v ∂_r v dθ)² ≤ d² R_L(h) / normalizations,
//!   ```
//!
//!   namely conformal energy invariance ∫_Σ|∇α|² = d∫_𝔻|∇u|², the conjugate
//!   energy and flux identities, the pointwise relation ∂_r v = −h'(m)m',
//!   and the Cauchy–Schwarz step with respect to μ;
//! * the closed-form bound values, and a pair construction that combines
//!   N = p+q−1 string modes into a test function orthogonal to computed
//!   eigenfunctions, whose Rayleigh product must dominate σ_pσ_q.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::conformal::ConformalMap;
use crate::error::{Error, Result};
use crate::numerics::fft::{
    bin_frequency, cumulative_periodic_integral, fourier_coefficients, spectral_derivative,
    synthesize,
};
use crate::numerics::{eig, periodic_trapezoid};
use crate::solver::fourier;

use std::f64::consts::{PI, TAU};

/// Minimum circle grid for mass-parameter sampling.
const MIN_MASS_GRID: usize = 256;
/// Relative density floor below which a boundary branch point is declared.
const BRANCH_FLOOR: f64 = 1e-12;
/// Grid used by the identity-chain verifier.
const CHAIN_GRID: usize = 1024;
/// Grid used for string-mode Rayleigh quotients of combined modes.
const STRING_GRID: usize = 2048;

/// Degree-`d` conformal cover ψ(z) = z^d of the disk, with the geometry of
/// the covered surface Σ = Φ(𝔻) carried by a univalent `inner` map.
///
/// The boundary correspondence t ↦ d·t is monotone of total winding 2πd; the
/// only branch point of ψ sits at the origin, so the cover is unbranched on
/// the boundary for every admissible `inner`.
#[derive(Debug, Clone)]
pub struct CoverMap {
    inner: ConformalMap,
    degree: usize,
}

impl CoverMap {
    /// Cover of degree `degree` over the surface Φ(𝔻).
    ///
    /// Requires `degree >= 1` and a validated univalent `inner` map.
    pub fn new(inner: ConformalMap, degree: usize) -> Result<Self> {
        if degree == 0 {
            return Err(Error::BadParameters {
                reason: "cover degree must be at least 1".into(),
            });
        }
        assert!(
            inner.is_validated(),
            "cover geometry requires a validated univalent map"
        );
        Ok(CoverMap { inner, degree })
    }

    /// Identity cover (degree 1) over Φ(𝔻).
    pub fn identity(inner: ConformalMap) -> Result<Self> {
        CoverMap::new(inner, 1)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn inner(&self) -> &ConformalMap {
        &self.inner
    }

    /// Whether the degree is admissible for a surface of genus `gamma` with
    /// `l` boundary components, i.e. `d <= gamma + l`.
    pub fn is_admissible(&self, gamma: usize, l: usize) -> bool {
        self.degree <= gamma + l
    }

    /// Boundary correspondence t_j ↦ d·t_j on `samples + 1` nodes of [0, 2π],
    /// unwrapped so the total winding 2πd is visible.
    pub fn boundary_correspondence(&self, samples: usize) -> Vec<f64> {
        assert!(samples > 0, "need at least one sample");
        (0..=samples)
            .map(|j| self.degree as f64 * TAU * j as f64 / samples as f64)
            .collect()
    }
}

/// Cumulative push-forward m(θ) of boundary arclength through the cover,
/// sampled on a uniform circle grid.
#[derive(Debug, Clone)]
pub struct MassParameter {
    /// `m(θ_j)` for `j = 0..=M`; `samples[0] = 0`, `samples[M] = L`.
    samples: Vec<f64>,
    /// Density `m'(θ_j)` for `j = 0..M`.
    density: Vec<f64>,
}

impl MassParameter {
    /// Grid size `M`.
    pub fn grid_size(&self) -> usize {
        self.density.len()
    }

    /// Total mass `L = m(2π)`, the boundary length of Σ.
    pub fn total(&self) -> f64 {
        *self.samples.last().unwrap()
    }

    /// `m(θ_j)` for `j = 0..=M`.
    pub fn samples(&self) -> &[f64] {
        &self.samples
    }

    /// `m'(θ_j)` for `j = 0..M`.
    pub fn density(&self) -> &[f64] {
        &self.density
    }

    /// `∫_{S¹} g dμ` by periodic trapezoid of `g · m'`.
    pub fn integrate(&self, values: &[f64]) -> f64 {
        assert_eq!(values.len(), self.density.len(), "grid mismatch");
        let weighted: Vec<f64> = values
            .iter()
            .zip(&self.density)
            .map(|(g, w)| g * w)
            .collect();
        periodic_trapezoid(&weighted, TAU)
    }
}

/// Mass parameter of a cover on a uniform grid of `m >= 256` angles.
///
/// The density at angle φ sums the `d` preimage branches,
/// `m'(φ) = (1/d) Σ_r |Φ'(e^{i(φ+2πr)/d})|`, so the total mass is the
/// boundary length of Σ independently of the degree.
pub fn mass_parameter(cover: &CoverMap, m: usize) -> Result<MassParameter> {
    assert!(m >= MIN_MASS_GRID, "mass grid must have at least 256 nodes");
    let d = cover.degree();
    let fine = d * m;
    let speeds: Vec<f64> = (0..fine)
        .map(|i| {
            let t = TAU * i as f64 / fine as f64;
            cover.inner().derivative(Complex64::from_polar(1.0, t)).norm()
        })
        .collect();

    let max_speed = speeds.iter().cloned().fold(0.0_f64, f64::max);
    let min_speed = speeds.iter().cloned().fold(f64::INFINITY, f64::min);
    if min_speed <= BRANCH_FLOOR * max_speed {
        return Err(Error::BranchOnBoundary { min_speed });
    }

    // Preimages of φ_j = 2πj/M are the fine-grid nodes j + rM, r = 0..d.
    let density: Vec<f64> = (0..m)
        .map(|j| (0..d).map(|r| speeds[j + r * m]).sum::<f64>() / d as f64)
        .collect();
    let samples = cumulative_periodic_integral(&density, TAU);
    Ok(MassParameter { samples, density })
}

/// Eigenfunction of a uniform circular string of length `L`:
/// `h_0 = 1`, `h_{2n-1}(m) = cos(2nπm/L)`, `h_{2n}(m) = sin(2nπm/L)`.
#[derive(Debug, Clone, Copy)]
pub struct StringMode {
    index: usize,
    length: f64,
}

/// The `k`-th string mode on a string of length `length > 0`.
pub fn string_mode(k: usize, length: f64) -> StringMode {
    assert!(length > 0.0, "string length must be positive");
    StringMode { index: k, length }
}

impl StringMode {
    pub fn index(&self) -> usize {
        self.index
    }

    pub fn length(&self) -> f64 {
        self.length
    }

    /// Angular frequency 2πn/L, with `n = ceil(k/2)`.
    pub fn frequency(&self) -> f64 {
        let n = self.index.div_ceil(2);
        TAU * n as f64 / self.length
    }

    pub fn evaluate(&self, m: f64) -> f64 {
        if self.index == 0 {
            1.0
        } else if self.index % 2 == 1 {
            (self.frequency() * m).cos()
        } else {
            (self.frequency() * m).sin()
        }
    }

    pub fn derivative(&self, m: f64) -> f64 {
        let w = self.frequency();
        if self.index == 0 {
            0.0
        } else if self.index % 2 == 1 {
            -w * (w * m).sin()
        } else {
            w * (w * m).cos()
        }
    }

    /// Closed-form Rayleigh quotient (2πn/L)².
    pub fn rayleigh(&self) -> f64 {
        let w = self.frequency();
        w * w
    }
}

/// Rayleigh quotient `∫ h'² dm / ∫ h² dm` of periodic samples on `[0, L)`.
pub fn string_rayleigh(samples: &[f64], length: f64) -> Result<f64> {
    assert!(length > 0.0, "string length must be positive");
    assert!(!samples.is_empty(), "empty sample set");
    let squares: Vec<f64> = samples.iter().map(|h| h * h).collect();
    let denominator = periodic_trapezoid(&squares, length);
    if !(denominator > 1e-300) {
        return Err(Error::ZeroDenominator);
    }
    let deriv = spectral_derivative(samples, length);
    let deriv_squares: Vec<f64> = deriv.iter().map(|h| h * h).collect();
    Ok(periodic_trapezoid(&deriv_squares, length) / denominator)
}

/// Harmonic extension of circle data into the disk, with its conjugate.
///
/// Coefficients are normalized DFT bins: the boundary trace is
/// `Σ_p c_p e^{i·freq(p)·θ}` and the extension multiplies bin `p` by
/// `r^{|freq(p)|}`. Conjugate bins carry the multiplier `−i·sign(freq)`.
#[derive(Debug, Clone)]
pub struct HarmonicPair {
    u_coeffs: Vec<Complex64>,
    v_coeffs: Option<Vec<Complex64>>,
    normalization_applied: bool,
}

impl HarmonicPair {
    pub fn grid_size(&self) -> usize {
        self.u_coeffs.len()
    }

    pub fn u_coefficients(&self) -> &[Complex64] {
        &self.u_coeffs
    }

    pub fn v_coefficients(&self) -> Option<&[Complex64]> {
        self.v_coeffs.as_deref()
    }

    pub fn is_normalized(&self) -> bool {
        self.normalization_applied
    }

    /// Boundary trace of `u` on the uniform grid.
    pub fn boundary_u(&self) -> Vec<f64> {
        synthesize(&self.u_coeffs)
    }

    /// Boundary trace of `v`; requires the conjugate.
    pub fn boundary_v(&self) -> Option<Vec<f64>> {
        self.v_coeffs.as_ref().map(|c| synthesize(c))
    }

    /// Radial derivative `∂_r v` on the boundary grid.
    pub fn radial_derivative_v(&self) -> Option<Vec<f64>> {
        self.v_coeffs.as_ref().map(|c| synthesize(&radial_bins(c)))
    }

    /// Dirichlet energy `∫_𝔻 |∇u|² = 2π Σ |n| |c_n|²`.
    pub fn energy_u(&self) -> f64 {
        disk_energy(&self.u_coeffs)
    }

    pub fn energy_v(&self) -> Option<f64> {
        self.v_coeffs.as_ref().map(|c| disk_energy(c))
    }
}

/// `2π Σ_p |freq(p)| |c_p|²`; the Nyquist bin is dropped, matching the
/// derivative convention.
fn disk_energy(coeffs: &[Complex64]) -> f64 {
    let n = coeffs.len();
    let mut sum = 0.0;
    for (p, c) in coeffs.iter().enumerate() {
        if n % 2 == 0 && p == n / 2 {
            continue;
        }
        sum += bin_frequency(p, n).unsigned_abs() as f64 * c.norm_sqr();
    }
    TAU * sum
}

/// Bins of `∂_r` at the boundary: multiply bin `p` by `|freq(p)|`.
fn radial_bins(coeffs: &[Complex64]) -> Vec<Complex64> {
    let n = coeffs.len();
    coeffs
        .iter()
        .enumerate()
        .map(|(p, &c)| {
            if n % 2 == 0 && p == n / 2 {
                Complex64::ZERO
            } else {
                c * bin_frequency(p, n).unsigned_abs() as f64
            }
        })
        .collect()
}

/// Conjugate multiplier `−i·sign(freq)`; the mean and Nyquist bins vanish.
fn conjugate_bins(coeffs: &[Complex64]) -> Vec<Complex64> {
    let n = coeffs.len();
    coeffs
        .iter()
        .enumerate()
        .map(|(p, &c)| {
            let k = bin_frequency(p, n);
            if k == 0 || (n % 2 == 0 && p == n / 2) {
                Complex64::ZERO
            } else {
                c * Complex64::new(0.0, -(k.signum() as f64))
            }
        })
        .collect()
}

/// Harmonic extension of smooth circle samples (the `u` half of a pair).
pub fn harmonic_extension(f: &[f64]) -> HarmonicPair {
    HarmonicPair {
        u_coeffs: fourier_coefficients(f),
        v_coeffs: None,
        normalization_applied: false,
    }
}

/// Fills in the conjugate `v`, with the additive constant fixed so
/// `∫_{S¹} v dμ = 0`.
pub fn harmonic_conjugate(pair: HarmonicPair, mu: &MassParameter) -> HarmonicPair {
    assert_eq!(pair.grid_size(), mu.grid_size(), "grid mismatch");
    let mut v = conjugate_bins(&pair.u_coeffs);
    let raw = synthesize(&v);
    let shift = -mu.integrate(&raw) / mu.total();
    v[0] += Complex64::new(shift, 0.0);
    HarmonicPair {
        u_coeffs: pair.u_coeffs,
        v_coeffs: Some(v),
        normalization_applied: true,
    }
}

/// Rayleigh quotients of the transplanted pair α = u∘ψ, β = v∘ψ on Σ.
///
/// Conformal invariance gives `∫_Σ |∇α|² = d ∫_𝔻 |∇u|²`, and boundary norms
/// are `∫ f² dμ` and `∫ v² dμ`; requires the normalized conjugate.
pub fn rayleigh_on_cover(
    cover: &CoverMap,
    pair: &HarmonicPair,
    mu: &MassParameter,
) -> Result<(f64, f64)> {
    assert!(pair.is_normalized(), "conjugate must be normalized");
    assert_eq!(pair.grid_size(), mu.grid_size(), "grid mismatch");
    let d = cover.degree() as f64;

    let f = pair.boundary_u();
    let v = pair.boundary_v().unwrap();
    let f_squares: Vec<f64> = f.iter().map(|x| x * x).collect();
    let v_squares: Vec<f64> = v.iter().map(|x| x * x).collect();
    let den_alpha = mu.integrate(&f_squares);
    let den_beta = mu.integrate(&v_squares);
    if !(den_alpha > 1e-300) || !(den_beta > 1e-300) {
        return Err(Error::ZeroDenominator);
    }
    Ok((
        d * pair.energy_u() / den_alpha,
        d * pair.energy_v().unwrap() / den_beta,
    ))
}

/// Residuals of the identity chain for one cover and string mode; all entries
/// except the signed Cauchy–Schwarz slack are relative magnitudes.
#[derive(Debug, Clone, Copy)]
pub struct IdentityReport {
    /// `|∫|∇u|² − ∫|∇v|²|`, relative.
    pub energy_equality: f64,
    /// `|∫|∇u|² − ∫_{S¹} v ∂_r v dθ|`, relative.
    pub flux_identity: f64,
    /// max over the grid of `|∂_r v + h'(m(θ)) m'(θ)|`, relative.
    pub conjugate_pointwise: f64,
    /// `∫v²dμ · ∫h'(m)²dμ − (∫ v ∂_r v dθ)²`, signed; nonnegative up to
    /// roundoff by Cauchy–Schwarz with respect to μ.
    pub cauchy_schwarz_slack: f64,
    /// `|∫_Σ|∇α|² − d∫_𝔻|∇u|²|` and the β analogue, worst case, relative;
    /// the cover-side energy comes from the lifted boundary trace.
    pub cover_energy: f64,
    /// `|∫_Σ|∇α|²·∫_Σ|∇β|² − d²(∫ v ∂_r v dθ)²|`, relative.
    pub product_identity: f64,
}

impl IdentityReport {
    /// Worst relative residual (the slack is excluded; it is a signed check).
    pub fn max_residual(&self) -> f64 {
        self.energy_equality
            .max(self.flux_identity)
            .max(self.conjugate_pointwise)
            .max(self.cover_energy)
            .max(self.product_identity)
    }
}

/// Samples of the function `t ↦ g(d·t mod 2π)` on the same grid; on-grid
/// lifting permutes sample indices, so no interpolation enters.
fn lift_through_cover(values: &[f64], degree: usize) -> Vec<f64> {
    let m = values.len();
    (0..m).map(|i| values[(degree * i) % m]).collect()
}

/// Verifies every identity in the transplantation chain for one cover and
/// string mode, returning the residual magnitudes.
pub fn verify_identity_chain(cover: &CoverMap, mode: &StringMode) -> Result<IdentityReport> {
    let mu = mass_parameter(cover, CHAIN_GRID)?;
    assert!(
        (mode.length() - mu.total()).abs() <= 1e-8 * mu.total().max(1.0),
        "mode length must match the cover's total mass"
    );
    let d = cover.degree() as f64;

    let f: Vec<f64> = (0..CHAIN_GRID)
        .map(|j| mode.evaluate(mu.samples()[j]))
        .collect();
    let pair = harmonic_conjugate(harmonic_extension(&f), &mu);

    let e_u = pair.energy_u();
    let e_v = pair.energy_v().unwrap();
    let scale = e_u.max(1e-30);

    let v = pair.boundary_v().unwrap();
    let drv = pair.radial_derivative_v().unwrap();
    let flux_samples: Vec<f64> = v.iter().zip(&drv).map(|(a, b)| a * b).collect();
    let flux = periodic_trapezoid(&flux_samples, TAU);

    // Pointwise ∂_r v = −h'(m(θ)) m'(θ): spectral left side against the
    // closed-form chain rule through the mass parameter.
    let mut pointwise: f64 = 0.0;
    let mut pointwise_scale: f64 = 1e-30;
    for j in 0..CHAIN_GRID {
        let target = -mode.derivative(mu.samples()[j]) * mu.density()[j];
        pointwise = pointwise.max((drv[j] - target).abs());
        pointwise_scale = pointwise_scale.max(target.abs());
    }

    let v_squares: Vec<f64> = v.iter().map(|x| x * x).collect();
    let h_deriv_squares: Vec<f64> = (0..CHAIN_GRID)
        .map(|j| {
            let h = mode.derivative(mu.samples()[j]);
            h * h
        })
        .collect();
    let slack = mu.integrate(&v_squares) * mu.integrate(&h_deriv_squares) - flux * flux;

    // Cover-side energies from the lifted traces: α(e^{it}) = f(d·t), so its
    // disk energy is computable independently of the invariance identity.
    let e_alpha = disk_energy(&fourier_coefficients(&lift_through_cover(&f, cover.degree())));
    let e_beta = disk_energy(&fourier_coefficients(&lift_through_cover(&v, cover.degree())));
    let cover_energy = ((e_alpha - d * e_u).abs() / (d * scale))
        .max((e_beta - d * e_v).abs() / (d * scale));

    let product_scale = (e_alpha * e_beta).max(1e-30);
    Ok(IdentityReport {
        energy_equality: (e_u - e_v).abs() / scale,
        flux_identity: (e_u - flux).abs() / scale,
        conjugate_pointwise: pointwise / pointwise_scale,
        cauchy_schwarz_slack: slack,
        cover_energy,
        product_identity: (e_alpha * e_beta - d * d * flux * flux).abs() / product_scale,
    })
}

/// Closed-form eigenvalue bound `σ_k L ≤ 2π(γ+l)k`, returned as the bound on
/// `σ_k` itself: `2π(γ+l)k / L`.
pub fn hps_bound_single(k: usize, gamma: usize, l: usize, length: f64) -> Result<f64> {
    if k < 1 || l < 1 || !(length > 0.0) {
        return Err(Error::BadParameters {
            reason: format!("need k >= 1, l >= 1, L > 0 (got k={k}, l={l}, L={length})"),
        });
    }
    Ok(TAU * (gamma + l) as f64 * k as f64 / length)
}

/// Closed-form product bound on `σ_p σ_q`: `π²(γ+l)²(p+q)²/L²` when `p+q` is
/// even, with `(p+q−1)²` in the odd case.
pub fn hps_bound_pair(p: usize, q: usize, gamma: usize, l: usize, length: f64) -> Result<f64> {
    if p < 1 || q < 1 || l < 1 || !(length > 0.0) {
        return Err(Error::BadParameters {
            reason: format!("need p, q >= 1, l >= 1, L > 0 (got p={p}, q={q}, l={l}, L={length})"),
        });
    }
    let s = p + q;
    let factor = if s % 2 == 0 { s * s } else { (s - 1) * (s - 1) };
    let gl = (gamma + l) as f64;
    Ok(PI * PI * gl * gl * factor as f64 / (length * length))
}

/// Outcome of the combined-mode pair construction for indices `(p, q)`.
#[derive(Debug, Clone, Copy)]
pub struct PairConstructionReport {
    pub p: usize,
    pub q: usize,
    /// Rayleigh quotients of the combined test pair on Σ.
    pub rayleigh_alpha: f64,
    pub rayleigh_beta: f64,
    /// `σ_p σ_q` from the solver; dominated by the Rayleigh product.
    pub sigma_product: f64,
    /// `d² R_L(h)` for the combined string mode; dominates the product.
    pub string_bound: f64,
    /// Worst orthogonality defect of the combined trace against the
    /// constrained eigenfunctions.
    pub constraint_residual: f64,
}

/// Builds the combined test function for the pair bound on Σ = Φ(𝔻) and
/// reports its Rayleigh quotients against the computed spectrum.
///
/// A combination `f = Σ c_k h_k(m)` of the first `N = p+q−1` nonconstant
/// string modes is chosen (by a null-space computation) so that the trace of
/// α is orthogonal to the eigenfunctions φ_1..φ_{p−1} and the trace of β to
/// φ_1..φ_{q−1}; both are automatically orthogonal to the constant φ_0. The
/// variational principle then forces `R(α) ≥ σ_p` and `R(β) ≥ σ_q`, while the
/// chain bounds the product by `d² R_L(h) ≤ d² R_L(h_N)`.
pub fn verify_pair_construction(
    map: &ConformalMap,
    p: usize,
    q: usize,
    modes: usize,
) -> Result<PairConstructionReport> {
    if p < 1 || q < 1 {
        return Err(Error::BadParameters {
            reason: format!("need p, q >= 1 (got p={p}, q={q})"),
        });
    }
    assert!(modes >= 32, "pair construction needs at least 32 modes");

    let solution = fourier::steklov_solution(map, modes, p.max(q))?;
    let grid = solution.weight.len();
    let cover = CoverMap::identity(map.clone())?;
    let mu = mass_parameter(&cover, grid)?;
    let quad = TAU / grid as f64;

    let n = p + q - 1;
    let string_modes: Vec<StringMode> = (1..=n).map(|k| string_mode(k, mu.total())).collect();
    let traces_f: Vec<Vec<f64>> = string_modes
        .iter()
        .map(|mode| (0..grid).map(|j| mode.evaluate(mu.samples()[j])).collect())
        .collect();
    let traces_v: Vec<Vec<f64>> = traces_f
        .iter()
        .map(|f| {
            harmonic_conjugate(harmonic_extension(f), &mu)
                .boundary_v()
                .unwrap()
        })
        .collect();

    // One row per orthogonality constraint: <f, φ_j> for j < p and <v, φ_j>
    // for j < q, integrated against dμ. The Gram matrix of the rows has an
    // (N−1)-dimensional row space, so its smallest eigenvector is a genuine
    // null direction.
    let inner = |g: &[f64], j: usize| -> f64 {
        let phi = &solution.traces[j];
        (0..grid)
            .map(|i| g[i] * phi[i] * mu.density()[i])
            .sum::<f64>()
            * quad
    };
    let mut rows: Vec<Vec<f64>> = Vec::new();
    for j in 1..p {
        rows.push((0..n).map(|k| inner(&traces_f[k], j)).collect());
    }
    for j in 1..q {
        rows.push((0..n).map(|k| inner(&traces_v[k], j)).collect());
    }

    let coefficients: Vec<f64> = if rows.is_empty() {
        let mut c = vec![0.0; n];
        c[0] = 1.0;
        c
    } else {
        let mut gram = DMatrix::zeros(n, n);
        for row in &rows {
            for a in 0..n {
                for b in 0..n {
                    gram[(a, b)] += row[a] * row[b];
                }
            }
        }
        let eigen = eig::symmetric_eig(&gram)?;
        (0..n).map(|k| eigen.eigenvectors[(k, 0)]).collect()
    };

    let combine = |traces: &[Vec<f64>]| -> Vec<f64> {
        (0..grid)
            .map(|i| {
                coefficients
                    .iter()
                    .zip(traces)
                    .map(|(c, t)| c * t[i])
                    .sum()
            })
            .collect()
    };
    let f = combine(&traces_f);
    let pair = harmonic_conjugate(harmonic_extension(&f), &mu);
    let (rayleigh_alpha, rayleigh_beta) = rayleigh_on_cover(&cover, &pair, &mu)?;

    let v = pair.boundary_v().unwrap();
    let mut constraint_residual: f64 = 0.0;
    for j in 0..p {
        constraint_residual = constraint_residual.max(inner(&f, j).abs());
    }
    for j in 0..q {
        constraint_residual = constraint_residual.max(inner(&v, j).abs());
    }

    let h: Vec<f64> = (0..STRING_GRID)
        .map(|i| {
            let m = mu.total() * i as f64 / STRING_GRID as f64;
            coefficients
                .iter()
                .zip(&string_modes)
                .map(|(c, mode)| c * mode.evaluate(m))
                .sum()
        })
        .collect();
    let string_bound = string_rayleigh(&h, mu.total())?;

    Ok(PairConstructionReport {
        p,
        q,
        rayleigh_alpha,
        rayleigh_beta,
        sigma_product: solution.spectrum.sigma(p) * solution.spectrum.sigma(q),
        string_bound,
        constraint_residual,
    })
}
