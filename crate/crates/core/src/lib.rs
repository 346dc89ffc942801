//! Classical Casimir interaction of two screened-plasma half-spaces.
//!
//! Two half-spaces filled with a one-component ionic fluid (charge `q_c`,
//! density `rho`, inverse temperature `beta`, neutralizing background) face
//! each other across a vacuum gap `a`. Ionic charge fluctuations screened on
//! the Debye length `1/kappa` correlate across the gap and attract the
//! surfaces; because the screening keeps everything finite down to contact,
//! the work done by that force can be balanced, term by term, against the
//! surface internal energy extracted from the pair correlations themselves.
//!
//! The crate computes in reduced form (everything is a function of
//! `x = kappa a`):
//!
//! * the attraction per unit area, its free energy, internal energy and
//!   entropy ([`thermo`]);
//! * the statistical-mechanical surface-energy ledger whose gap-dependent
//!   part reproduces the Casimir internal energy exactly ([`surface`]);
//! * the coefficients and piecewise potential of the screened slab response
//!   that feed both routes ([`screened`]);
//! * independent ground-truth generators: contact series, a two-sided
//!   exponential-fitting boundary-value solver, and a direct q-space force
//!   integral ([`oracles`]);
//! * the surface-tension-to-cutoff calculator for a dilute dielectric ball
//!   ([`cutoff`]);
//! * the named verification checks behind the `verify` CLI command
//!   ([`verify`]).
//!
//! Gaussian (cgs/esu) units throughout.

pub mod cutoff;
pub mod error;
pub mod model;
pub mod oracles;
pub mod quadrature;
pub mod screened;
pub mod surface;
pub mod thermo;
pub mod verify;

pub use error::{Error, Result};
pub use model::{mode_point, ModePoint, PlasmaParameters, SlabGeometry};
pub use quadrature::{integrate_semi_infinite, sum_series, IntegralResult, QuadratureSpec};
pub use screened::{boundary_residuals, coefficients, phi_hat, SlabCoefficients};
pub use thermo::{reduced_kernels, ReducedKernels, BOLTZMANN};
