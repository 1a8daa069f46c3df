//! Markov-correlated Pauli memory channels, small quantum codes and the two
//! code-performance quantifiers built on top of them: entanglement fidelity
//! and code entropy.
//!
//! The pipeline is
//!
//! ```text
//! channels::enumerate_kraus -> qec::select_correctable -> qec::build_recovery
//!     -> metrics::entanglement_fidelity_recovered / metrics::code_entropy
//! ```
//!
//! and [`closed_forms`] holds closed-form polynomials that serve as
//! independent oracles for it.

pub mod analysis;
pub mod channels;
pub mod closed_forms;
pub mod codes;
mod error;
pub mod grid;
pub mod metrics;
pub mod pauli;
pub mod qec;

pub use error::{Error, Result};

/// Numerical scalar used throughout.
pub type C64 = num_complex::Complex64;
