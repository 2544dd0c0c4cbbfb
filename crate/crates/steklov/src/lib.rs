//! Steklov spectra of planar domains and isoperimetric eigenvalue bounds.
//!
//! The Steklov problem asks for harmonic functions whose normal derivative on
//! the boundary is proportional to the boundary trace: Δu = 0 in Ω,
//! ∂ₙu = σu on ∂Ω. The eigenvalues 0 = σ₀ < σ₁ ≤ σ₂ ≤ … are those of the
//! Dirichlet-to-Neumann map, and for a surface of genus γ with l boundary
//! components of total length L they satisfy
//!
//! ```text
//! σ_k L            ≤ 2π(γ+l) k
//! σ_p σ_q L²       ≤ π²(γ+l)² (p+q)²      (p+q even)
//! σ_p σ_q L²       ≤ π²(γ+l)² (p+q-1)²    (p+q odd)
//! ```
//!
//! This crate computes Steklov spectra of smooth planar domains by three
//! independent routes and checks the bounds together with every intermediate
//! identity of the Hersch–Payne–Schiffer test-function argument:
//!
//! * [`solver::fourier`] — Fourier–Galerkin solution of the weighted circle
//!   problem for simply connected domains given as conformal images Φ(𝔻);
//! * [`solver::annulus`] — closed-form separation of variables on concentric
//!   annuli, the exactness anchor;
//! * [`solver::bem`] — a Nyström-discretized single-layer construction of the
//!   Dirichlet-to-Neumann map for arbitrary smooth multiply connected domains;
//! * [`hps`] — mass parameters of conformal covers, circular-string modes,
//!   harmonic conjugates, Rayleigh quotients, and the closed-form bounds;
//! * [`harness`] — corpus runner emitting machine-readable bound reports.

pub mod conformal;
pub mod error;
pub mod geometry;
pub mod harness;
pub mod hps;
pub mod io;
pub mod numerics;
pub mod solver;

pub use error::{Error, Result};
pub use geometry::{BoundaryCurve, DomainSpec, Orientation, Spectrum};
