//! Entanglement and information dynamics of a three-qubit register.
//!
//! Qubits A and B interact through an XX dipole coupling; A also couples to a
//! control qubit C through a z-polarized Dzyaloshinskii–Moriya term. The
//! crate builds the Hamiltonian, propagates Werner-like initial states with
//! either the exact exponential or its four-factor product form, and tracks
//! concurrence, negativity, entanglement of formation and purity-based
//! information on every reduced state.

pub mod experiments;
pub mod linalg;
pub mod measures;
pub mod model;
