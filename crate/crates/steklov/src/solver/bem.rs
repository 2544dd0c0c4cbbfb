//! Nyström boundary-element solver for smooth multiply connected domains.
//!
//! The harmonic extension is represented as a single-layer potential with
//! kernel `G(x, y) = -(1/2pi) log|x - y|`, augmented by one constant-density
//! charge per boundary component and a free additive constant. Side
//! conditions (zero mean density per component, zero total charge) make the
//! augmented system nonsingular for every domain, including the
//! unit-logarithmic-capacity case where the bare single-layer operator is
//! singular on constants. The Dirichlet-to-Neumann matrix follows from the
//! interior jump relation `d_n S mu = mu/2 + K' mu` for the outward normal
//! `n = -i z'/|z'|` (outward from the domain on the outer curve and on every
//! clockwise hole alike).
//!
//! The logarithmic singularity on the diagonal blocks is handled by the
//! trigonometric product quadrature for `log(4 sin^2((t-s)/2))`, which is
//! spectrally accurate for analytic densities; off-component blocks have
//! smooth kernels and use the plain trapezoid rule.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use std::f64::consts::{PI, TAU};

use crate::error::{Error, Result};
use crate::geometry::{DomainSpec, SolverKind, Spectrum};
use crate::numerics::eig::generalized_symmetric_eig;

/// Minimum nodes per boundary component.
const MIN_NODES: usize = 64;
/// Eigenvalue indices above `M / TRUST_DIVISOR` are outside the trust band.
const TRUST_DIVISOR: usize = 8;
/// Hard ceiling on the relative asymmetry of `W D` before symmetrization.
const ASYMMETRY_LIMIT: f64 = 1e-6;
/// `||D 1||` must stay below this fraction of `||D||` (constants are
/// harmonic with vanishing normal derivative).
const CONSTANT_DEFECT_LIMIT: f64 = 1e-7;
/// Roundoff allowance when verifying that the assembled `S` is symmetric.
const S_SYMMETRY_TOL: f64 = 1e-10;

/// Discretized single-layer system on all boundary components.
///
/// Matrices act on the parameter density `psi = phi |z'|` (density times
/// parameter speed), which makes `S` symmetric entry by entry.
#[derive(Debug, Clone)]
pub struct LayerSystem {
    /// Node positions, component-major, `M` per component.
    nodes: Vec<Complex64>,
    /// Parameter speeds `|z'(t_j)|`.
    speeds: Vec<f64>,
    /// Outward unit normals `-i z'/|z'|`.
    normals: Vec<Complex64>,
    /// Single-layer values matrix: `(S psi)_i` is the potential at node `i`.
    s: DMatrix<f64>,
    /// Adjoint double-layer part of the normal derivative (excludes the
    /// `psi/(2|z'|)` jump term), with the curvature diagonal limit.
    kprime: DMatrix<f64>,
    /// Augmented square system: `S`, charge columns, constant column, mean
    /// and total-charge rows.
    augmented: DMatrix<f64>,
    nodes_per_component: usize,
    components: usize,
    /// 2-norm condition number of the augmented system.
    condition: f64,
}

/// Dense Dirichlet-to-Neumann matrix at the boundary nodes.
#[derive(Debug, Clone)]
pub struct DtnMatrix {
    /// Maps nodal boundary values to `d_n` of the harmonic extension.
    pub d: DMatrix<f64>,
    /// Quadrature weights `w_j = |z'(t_j)| 2pi/M`.
    pub weights: Vec<f64>,
    /// Relative asymmetry of `W D` before symmetrization.
    pub asymmetry: f64,
}

/// Quadrature weights for `int_0^{2pi} log(4 sin^2((t_i - s)/2)) f(s) ds`
/// on the uniform grid: `R[k]` couples nodes at index distance `k`.
fn kress_weights(m: usize) -> Vec<f64> {
    debug_assert!(m % 2 == 0);
    let n = m / 2;
    (0..m)
        .map(|k| {
            let angle = TAU * k as f64 / m as f64;
            let series: f64 = (1..n)
                .map(|p| (p as f64 * angle).cos() / p as f64)
                .sum();
            -TAU / n as f64 * series - PI / (n * n) as f64 * (n as f64 * angle).cos()
        })
        .collect()
}

fn signed_curvature(dz: Complex64, ddz: Complex64) -> f64 {
    (dz.conj() * ddz).im / dz.norm().powi(3)
}

/// Assembles the layer system with `m` nodes per boundary component.
pub fn build_layer_system(domain: &DomainSpec, m: usize) -> Result<LayerSystem> {
    if domain.genus() != 0 {
        return Err(Error::GenusUnsupported {
            genus: domain.genus(),
        });
    }
    if m < MIN_NODES || m % 2 != 0 {
        return Err(Error::TooFewNodes { m, min: MIN_NODES });
    }

    let components = domain.component_count();
    let n_total = components * m;
    let mut nodes = Vec::with_capacity(n_total);
    let mut speeds = Vec::with_capacity(n_total);
    let mut normals = Vec::with_capacity(n_total);
    let mut curvatures = Vec::with_capacity(n_total);
    for curve in domain.curves() {
        let samples = curve.sample(m);
        for j in 0..m {
            let dz = samples.dz[j];
            nodes.push(samples.z[j]);
            speeds.push(dz.norm());
            normals.push(-Complex64::i() * dz / dz.norm());
            curvatures.push(signed_curvature(dz, samples.ddz[j]));
        }
    }

    let kress = kress_weights(m);
    let step = TAU / m as f64;
    let mut s = DMatrix::zeros(n_total, n_total);
    let mut kprime = DMatrix::zeros(n_total, n_total);
    for i in 0..n_total {
        for j in 0..n_total {
            let same = i / m == j / m;
            if same && i == j {
                // log(rho) limit: |z(t)-z(s)|^2 / (4 sin^2((t-s)/2)) -> |z'|^2.
                s[(i, j)] = -0.25 / PI * (kress[0] + step * (speeds[i] * speeds[i]).ln());
                kprime[(i, j)] = -curvatures[i] / (2.0 * m as f64);
            } else {
                let diff = nodes[i] - nodes[j];
                let dist2 = diff.norm_sqr();
                if same {
                    let k = (i as i64 - j as i64).rem_euclid(m as i64) as usize;
                    let sin_half = (PI * (i % m) as f64 / m as f64
                        - PI * (j % m) as f64 / m as f64)
                        .sin();
                    let smooth = (dist2 / (4.0 * sin_half * sin_half)).ln();
                    s[(i, j)] = -0.25 / PI * (kress[k] + step * smooth);
                } else {
                    s[(i, j)] = -0.25 / PI * step * dist2.ln();
                }
                kprime[(i, j)] = -(normals[i].conj() * diff).re / (dist2 * m as f64);
            }
        }
    }

    let defect = (&s - s.transpose()).amax() / s.amax();
    debug_assert!(defect < S_SYMMETRY_TOL, "single-layer asymmetry {defect}");
    let s = 0.5 * (&s + s.transpose());

    // Augmentation: one constant-density charge per component (columns
    // S (1_c |z'|)), a free constant, zero-mean rows per component and the
    // total-charge row.
    let dim = n_total + components + 1;
    let mut augmented = DMatrix::zeros(dim, dim);
    augmented.view_mut((0, 0), (n_total, n_total)).copy_from(&s);
    for c in 0..components {
        let mut charge = DVector::zeros(n_total);
        for j in c * m..(c + 1) * m {
            charge[j] = speeds[j];
        }
        let column = &s * &charge;
        for i in 0..n_total {
            augmented[(i, n_total + c)] = column[i];
        }
        for j in c * m..(c + 1) * m {
            augmented[(n_total + c, j)] = step;
        }
        augmented[(n_total + components, n_total + c)] = 1.0;
    }
    for i in 0..n_total {
        augmented[(i, n_total + components)] = 1.0;
    }

    let singular = augmented.clone().svd(false, false).singular_values;
    let smallest = singular[singular.len() - 1];
    if smallest <= 0.0 {
        return Err(Error::SingularSystem);
    }
    let condition = singular[0] / smallest;

    Ok(LayerSystem {
        nodes,
        speeds,
        normals,
        s,
        kprime,
        augmented,
        nodes_per_component: m,
        components,
        condition,
    })
}

impl LayerSystem {
    pub fn nodes(&self) -> &[Complex64] {
        &self.nodes
    }

    pub fn normals(&self) -> &[Complex64] {
        &self.normals
    }

    /// Single-layer matrix on parameter densities `psi = phi |z'|`.
    pub fn single_layer(&self) -> &DMatrix<f64> {
        &self.s
    }

    pub fn adjoint_double_layer(&self) -> &DMatrix<f64> {
        &self.kprime
    }

    pub fn condition(&self) -> f64 {
        self.condition
    }

    pub fn size(&self) -> usize {
        self.nodes.len()
    }

    pub fn nodes_per_component(&self) -> usize {
        self.nodes_per_component
    }

    /// `w_j = |z'(t_j)| 2pi/M`; sums to the total boundary length.
    pub fn quadrature_weights(&self) -> Vec<f64> {
        let step = TAU / self.nodes_per_component as f64;
        self.speeds.iter().map(|s| s * step).collect()
    }
}

/// Dirichlet-to-Neumann matrix through the augmented single-layer solve.
pub fn dtn_bem(system: &LayerSystem) -> Result<DtnMatrix> {
    let n = system.size();
    let components = system.components;
    let dim = n + components + 1;
    let m = system.nodes_per_component;

    let mut rhs = DMatrix::zeros(dim, n);
    for i in 0..n {
        rhs[(i, i)] = 1.0;
    }
    let lu = system.augmented.clone().lu();
    let solution = lu.solve(&rhs).ok_or(Error::SingularSystem)?;

    // Total parameter density mu = psi + sum_c q_c (1_c |z'|) per column.
    let mut mu = solution.rows(0, n).clone_owned();
    for c in 0..components {
        let charges = solution.row(n + c).clone_owned();
        for j in c * m..(c + 1) * m {
            for f in 0..n {
                mu[(j, f)] += system.speeds[j] * charges[f];
            }
        }
    }

    // Interior jump relation: d_n u = phi/2 + K' phi with phi = mu / |z'|.
    let mut d = &system.kprime * &mu;
    for j in 0..n {
        for f in 0..n {
            d[(j, f)] += 0.5 * mu[(j, f)] / system.speeds[j];
        }
    }

    let constant_defect = (&d * DVector::from_element(n, 1.0)).amax() / d.amax();
    if constant_defect > CONSTANT_DEFECT_LIMIT {
        return Err(Error::InvalidSpectrum {
            reason: format!("constants not in the kernel: |D 1| = {constant_defect:.3e} |D|"),
        });
    }

    let weights = system.quadrature_weights();
    let mut wd = d.clone();
    for j in 0..n {
        for f in 0..n {
            wd[(j, f)] *= weights[j];
        }
    }
    let asymmetry = (&wd - wd.transpose()).amax() / wd.amax();
    if asymmetry > ASYMMETRY_LIMIT {
        return Err(Error::NotSymmetric { defect: asymmetry });
    }

    Ok(DtnMatrix {
        d,
        weights,
        asymmetry,
    })
}

/// First `k_max + 1` Steklov eigenvalues by the boundary-element route.
pub fn steklov_spectrum_bem(domain: &DomainSpec, m: usize, k_max: usize) -> Result<Spectrum> {
    if k_max > m / TRUST_DIVISOR {
        return Err(Error::BadParameters {
            reason: format!("k_max {k_max} outside the trust band M/8 = {}", m / TRUST_DIVISOR),
        });
    }
    let system = build_layer_system(domain, m)?;
    let dtn = dtn_bem(&system)?;

    let n = system.size();
    let mut wd = dtn.d.clone();
    for j in 0..n {
        for f in 0..n {
            wd[(j, f)] *= dtn.weights[j];
        }
    }
    let a = 0.5 * (&wd + wd.transpose());
    let b = DMatrix::from_diagonal(&DVector::from_vec(dtn.weights.clone()));
    let eig = generalized_symmetric_eig(&a, &b)?;

    let values: Vec<f64> = eig.eigenvalues[..=k_max]
        .iter()
        .map(|&v| if v >= -1e-8 { v.max(0.0) } else { v })
        .collect();
    Spectrum::new(values, SolverKind::Bem, m, k_max)
}
