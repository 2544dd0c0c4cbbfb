//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    // geometry
    #[error("degenerate curve: |z'(t)| = {min_speed:.3e} at t = {t:.6}")]
    DegenerateCurve { t: f64, min_speed: f64 },
    #[error("curve self-intersects near t = {t1:.6} and t = {t2:.6} (validation resolution {resolution})")]
    SelfIntersection { t1: f64, t2: f64, resolution: usize },
    #[error("curve orientation is {found:?}, expected {expected:?} (signed area {signed_area:.3e})")]
    OrientationMismatch {
        expected: crate::geometry::Orientation,
        found: crate::geometry::Orientation,
        signed_area: f64,
    },
    #[error("hole {index} is not strictly inside the outer curve")]
    HoleOutsideOuter { index: usize },
    #[error("holes {first} and {second} overlap")]
    HolesOverlap { first: usize, second: usize },
    #[error("solver path requires genus 0, domain has genus {genus}")]
    GenusUnsupported { genus: usize },
    #[error("invalid spectrum: {reason}")]
    InvalidSpectrum { reason: String },

    // conformal
    #[error("map is not univalent: {reason}")]
    NotUnivalent { reason: String },

    // numerics
    #[error("matrix is not symmetric: |A - A'| = {defect:.3e}")]
    NotSymmetric { defect: f64 },
    #[error("matrix is not positive definite (Cholesky failed)")]
    NotPositiveDefinite,
    #[error("no sign change on [{a}, {b}]: f(a) = {fa:.3e}, f(b) = {fb:.3e}")]
    NoSignChange { a: f64, b: f64, fa: f64, fb: f64 },

    // solvers
    #[error("quadrature grid too coarse: M = {m} < 8N = {min}")]
    InsufficientQuadrature { m: usize, min: usize },
    #[error("epsilon = {epsilon} outside (0, 1)")]
    EpsilonOutOfRange { epsilon: f64 },
    #[error("too few boundary nodes: M = {m}, need even M >= {min}")]
    TooFewNodes { m: usize, min: usize },
    #[error("augmented layer system is singular")]
    SingularSystem,

    // hps
    #[error("branch point on the boundary: cover density degenerates (min |Phi'| = {min_speed:.3e})")]
    BranchOnBoundary { min_speed: f64 },
    #[error("bad bound parameters: {reason}")]
    BadParameters { reason: String },
    #[error("zero denominator in Rayleigh quotient")]
    ZeroDenominator,

    // harness / io
    #[error("config parse error: {0}")]
    ConfigParse(String),
    #[error("no second solver available for domain {domain}")]
    NoSecondSolver { domain: String },
    #[error("unknown builtin domain {0:?}")]
    UnknownBuiltin(String),
    #[error("domain spec parse error: {0}")]
    DomainParse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
