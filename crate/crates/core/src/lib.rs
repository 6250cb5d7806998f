//! Frustrated-tunneling excitation of hydrogen Rydberg states in ultrashort
//! laser pulses, within the strong-field approximation (SFA), together with a
//! spectral-basis TDSE reference for direct comparison.
//!
//! The model side solves the complex saddle-point equation for the ionization
//! time `t_s` of a cos²-envelope pulse, classifies and filters the solutions,
//! and assembles Rydberg excitation amplitudes `a_{nℓ0}` as coherent sums over
//! the surviving quasiclassical trajectories. The TDSE side propagates the
//! hydrogen wavefunction in the field-free eigenbasis of a radial
//! finite-difference grid, with optional removal or damping of the continuum.
//!
//! Atomic units throughout; exported times are converted to optical cycles.

pub mod amplitudes;
pub mod classifier;
pub mod grid;
pub mod prefactors;
pub mod pulse;
pub mod saddle;
pub mod tdse;
pub mod trajectory;
pub mod tridiag;

mod error;

pub use error::FtError;
pub use num_complex::Complex64;

/// Result alias used across the crate.
pub type Result<T> = std::result::Result<T, FtError>;
