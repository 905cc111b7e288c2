//! Thermal purity of two coupled harmonic oscillators.
//!
//! The crate evaluates the closed-form finite-temperature density matrix of
//! the Hamiltonian
//!
//! ```text
//! H = p1²/2m1 + p2²/2m2 + C1 x1²/2 + C2 x2²/2 + C3 x1 x2/2
//! ```
//!
//! together with the temperature-dependent wavefunction built from it, the
//! one-particle reduced density matrix and its purity. Every closed form is
//! cross-checked by machinery that shares none of its algebra: exact
//! Gaussian integration ([`quadform`]), trapezoid quadrature on a grid and
//! split-operator imaginary-time propagation ([`oracle`]).
//!
//! Module map:
//!
//! * [`model`]: physical inputs and the decoupled normal-mode parameters.
//! * [`quadform`]: multivariate Gaussian kernels (marginals, traces).
//! * [`thermal`]: propagator, probability density, wavefunction, reduced density.
//! * [`purity`]: closed-form purity and its limiting cases.
//! * [`oracle`]: independent grid-based checks.
//! * [`sweep`]: parameter sweeps, figure presets and CSV/JSON emission.
//! * [`verify`]: the self-check report behind `thermopurity verify`.

pub mod error;
mod hyper;
pub mod model;
pub mod oracle;
pub mod purity;
pub mod quadform;
pub mod sweep;
pub mod thermal;
pub mod verify;

pub use error::{Error, Result};
pub use model::{derive_decoupled, from_decoupled, DecoupledParams, OscillatorParams};
pub use purity::{
    linear_entropy, purity_closed, purity_from_coeffs, purity_high_t, purity_identical,
    purity_low_t, LowTemperaturePurity, PurityPoint,
};
pub use quadform::{trace_product, QuadKernel};
