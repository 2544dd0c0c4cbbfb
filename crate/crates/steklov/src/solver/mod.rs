//! Steklov spectrum solvers.
//!
//! Three independent routes to the same spectra:
//! [`fourier`] for conformal images of the disk, [`annulus`] for concentric
//! annuli in closed form, and [`bem`] for arbitrary smooth multiply connected
//! domains. Cross-solver agreement on shared domains is part of the test
//! surface.

pub mod annulus;
pub mod bem;
pub mod fourier;
