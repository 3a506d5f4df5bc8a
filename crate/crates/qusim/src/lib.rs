//! Quantum circuit simulation on state vectors and density matrices,
//! with the information-theoretic toolkit that makes the results
//! interpretable: entropies, channel capacities, noise channels, a
//! small error-correcting code, and the BB84 key-distribution
//! protocol.
//!
//! ```
//! use qusim::circuit::Circuit;
//! use qusim::infotheory::entanglement_entropy;
//! use qusim::qstate::StateVector;
//!
//! let bell = Circuit::parse("qubits 2\nh 0\ncnot 0 1\n")?
//!     .run(&StateVector::basis_state(2, 0)?)?;
//! assert!((entanglement_entropy(&bell, &[0])? - 2.0).abs() < 1e-12);
//! # Ok::<(), qusim::Error>(())
//! ```
//!
//! # Conventions
//!
//! Qubit 0 is the least-significant bit of every basis index, so
//! `|q1 q0> = |10>` is basis state 2. [`StateVector::tensor`] keeps
//! `self` in the low bits. Entropies are in bits (log base 2), angles
//! in radians.
//!
//! # Where to start
//!
//! Each major capability has a runnable walkthrough under `examples/`;
//! they print their reasoning and are meant to be read alongside the
//! output of `cargo run --example <name>`.
//!
//! States and circuits:
//!
//! - `superposition`: Hadamard fan-out, measurement statistics
//! - `entanglement`: Bell pairs, collapse, entanglement entropy
//! - `circuit_dsl`: the textual circuit language, inverses, parse errors
//! - `adder`: a reversible half adder run on superposed inputs
//!
//! Algorithms:
//!
//! - `fourier`: QFT gate counts and output phases
//! - `grover`: amplitude amplification and the optimal stopping point
//! - `teleportation`: moving a qubit with two classical bits
//! - `dense_coding`: moving two classical bits with one qubit
//!
//! Information and noise:
//!
//! - `entropy`: Shannon and von Neumann entropies, channel capacity
//! - `noise_channels`: Pauli channels acting on density matrices
//! - `error_correction`: the three-qubit code against bit flips
//! - `no_cloning`: why unknown states cannot be copied
//! - `bb84`: key distribution with and without an eavesdropper
//!
//! The same functionality is scriptable through the `qusim` binary; see
//! `qusim --help`.

pub mod algorithms;
pub mod bb84;
pub mod circuit;
pub mod error;
pub mod gates;
pub mod infotheory;
pub mod noise;
pub mod qec;
pub mod qstate;

pub use algorithms::{BellResource, GroverOracle, TeleportResult};
pub use bb84::{Bb84Config, Bb84Result, Bb84Session, Basis, Eavesdropper};
pub use circuit::{Circuit, CircuitOp, NamedGate, ParseError};
pub use error::{Error, Result};
pub use gates::{Gate, GateParams, Pauli};
pub use infotheory::{JointDist, ProbDist};
pub use noise::{ChannelKind, NoiseChannel};
pub use qec::QecTrialStats;
pub use qstate::{DensityMatrix, MeasurementRecord, StateVector};
