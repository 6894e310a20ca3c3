//! Periodic-box pseudo-spectral solver for the generalized MHD equations
//! with Fourier-multiplier hyper-viscosity 𝓛 = Λ^α/g(Λ) and zero magnetic
//! resistivity, together with the harmonic-analysis machinery used to verify
//! its diagnostic inequalities: dyadic Littlewood-Paley decomposition,
//! Bernstein and log-interpolation gradient bounds, Gagliardo-Nirenberg
//! ratios, the closed-form exponent algebra, and a dissipation-regime
//! classifier.
//!
//! Layout:
//! - [`grid`], [`transform`], [`field`]: lattice, FFTs, spectral fields.
//! - [`multiplier`], [`leray`], [`dealias`], [`norms`]: operators and norms.
//! - [`lp`]: dyadic partition, blocks, and inequality ratio checks.
//! - [`solver`]: integrating-factor RK4 time stepping of the GMHD system.
//! - [`diag`]: records, energy ledger, exponent algebra, regime classifier.
//! - [`verify`]: the deterministic suites behind `gmhd verify`.
//!
//! With the default `parallel` feature sample families and per-mode loops run
//! on rayon; disabling it yields a bit-identical sequential build.

pub mod dealias;
pub mod diag;
pub mod error;
pub mod exec;
pub mod field;
pub mod grid;
pub mod leray;
pub mod lp;
pub mod multiplier;
pub mod norms;
pub mod sampling;
pub mod snapshot;
pub mod solver;
pub mod transform;
pub mod verify;

pub use error::{Error, Result};
pub use field::{SpectralField, VectorField};
pub use grid::GridSpec;
pub use multiplier::{GFamily, MultiplierSpec};
