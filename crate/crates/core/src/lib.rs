//! Qubit thermometry with a quantum switch.
//!
//! A qubit probe with gap `ε` is thermalized twice by a generalized amplitude
//! damping channel, with the order of the two uses controlled by a qubit in
//! the state `√α|0⟩ + √(1−α)|1⟩`. The crate builds the channels and the
//! switched joint state, evaluates the quantum Fisher information (QFI) for
//! the inverse temperature both spectrally and in closed form, and solves the
//! scalar equations that locate the optimal gap and the crossover against a
//! harmonic-oscillator probe.
//!
//! Units are `k_B = ℏ = 1` throughout. The probe Hamiltonian is
//! `H = diag(0, ε)`, so the ground-state thermal population is
//! `p = 1/(1 + e^{−βε})`. Joint probe–control states use the `probe ⊗ control`
//! index order: joint index `= probe_index · control_dim + control_index`.
//!
//! Modules:
//!
//! - [`matcore`]: dense complex matrices, Hermitian eigensolver, tensor
//!   product and partial traces.
//! - [`channels`]: probe/bath/control descriptions, the thermalizing Kraus
//!   channel and the quantum-switch evolution.
//! - [`qfi`]: spectral QFI for arbitrary parameterized states, closed forms
//!   and the `β → T` reparameterization.
//! - [`analysis`]: optimal-gap and threshold equations, gain ratio and
//!   thermodynamic uncertainty bounds.

#![forbid(unsafe_code)]

pub mod analysis;
pub mod channels;
pub mod error;
pub mod matcore;
pub mod qfi;

pub use error::{Error, Result};
pub use matcore::{ComplexMatrix, EigenDecomposition};
