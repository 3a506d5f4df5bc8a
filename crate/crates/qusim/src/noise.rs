//! Single-qubit Pauli noise channels acting on density matrices, plus
//! i.i.d. Pauli error sampling for Monte-Carlo runs.
//!
//! Channels act on one qubit of an n-qubit density matrix:
//!
//! * bit flip: (1-p) rho + p X rho X
//! * phase flip: (1-p) rho + p Z rho Z
//! * depolarizing: (1-p) rho + (p/3)(X rho X + Y rho Y + Z rho Z)
//! * dephasing(gamma): entries whose row and column indices differ in the
//!   target qubit's bit are scaled by (1-gamma); populations untouched
//!
//! Dephasing takes a per-application gamma rather than a time constant;
//! [`decoherence_timescale`] converts temperature to the thermal time
//! scale separately.

use ndarray::Array2;
use num_complex::Complex64;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::error::{Error, Result};
use crate::gates::Pauli;
use crate::qstate::DensityMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChannelKind {
    BitFlip,
    PhaseFlip,
    Depolarizing,
    Dephasing,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NoiseChannel {
    kind: ChannelKind,
    strength: f64,
}

impl NoiseChannel {
    pub fn new(kind: ChannelKind, strength: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&strength) || !strength.is_finite() {
            return Err(Error::OutOfRange {
                what: "channel strength",
                value: strength,
                lo: 0.0,
                hi: 1.0,
            });
        }
        Ok(NoiseChannel { kind, strength })
    }

    pub fn bit_flip(p: f64) -> Result<Self> {
        NoiseChannel::new(ChannelKind::BitFlip, p)
    }

    pub fn phase_flip(p: f64) -> Result<Self> {
        NoiseChannel::new(ChannelKind::PhaseFlip, p)
    }

    pub fn depolarizing(p: f64) -> Result<Self> {
        NoiseChannel::new(ChannelKind::Depolarizing, p)
    }

    pub fn dephasing(gamma: f64) -> Result<Self> {
        NoiseChannel::new(ChannelKind::Dephasing, gamma)
    }

    pub fn kind(&self) -> ChannelKind {
        self.kind
    }

    pub fn strength(&self) -> f64 {
        self.strength
    }

    /// The Pauli this channel applies when its error fires.
    fn error_pauli(&self) -> Pauli {
        match self.kind {
            ChannelKind::BitFlip => Pauli::X,
            ChannelKind::PhaseFlip | ChannelKind::Dephasing => Pauli::Z,
            ChannelKind::Depolarizing => Pauli::X,
        }
    }
}

/// P rho P for a Pauli P on qubit `q`. X swaps the q-th bit of both
/// indices; Z contributes a sign when the indices disagree in that bit;
/// Y does both (the i factors cancel into the same sign).
fn pauli_conjugate(mat: &Array2<Complex64>, p: Pauli, q: usize) -> Array2<Complex64> {
    let dim = mat.nrows();
    let flip = 1usize << q;
    Array2::from_shape_fn((dim, dim), |(i, j)| {
        let sign = if ((i ^ j) >> q) & 1 == 1 { -1.0 } else { 1.0 };
        match p {
            Pauli::I => mat[[i, j]],
            Pauli::X => mat[[i ^ flip, j ^ flip]],
            Pauli::Y => sign * mat[[i ^ flip, j ^ flip]],
            Pauli::Z => sign * mat[[i, j]],
        }
    })
}

pub fn apply_channel(rho: &DensityMatrix, ch: &NoiseChannel, q: usize) -> Result<DensityMatrix> {
    let n = rho.num_qubits();
    if q >= n {
        return Err(Error::QubitOutOfRange { qubit: q, n });
    }
    let p = ch.strength;
    let mat = rho.matrix();
    let scaled = |m: &Array2<Complex64>, w: f64| m.mapv(|x| x * w);
    let out = match ch.kind {
        ChannelKind::BitFlip => {
            scaled(mat, 1.0 - p) + scaled(&pauli_conjugate(mat, Pauli::X, q), p)
        }
        ChannelKind::PhaseFlip => {
            scaled(mat, 1.0 - p) + scaled(&pauli_conjugate(mat, Pauli::Z, q), p)
        }
        ChannelKind::Depolarizing => {
            let sum = pauli_conjugate(mat, Pauli::X, q)
                + pauli_conjugate(mat, Pauli::Y, q)
                + pauli_conjugate(mat, Pauli::Z, q);
            scaled(mat, 1.0 - p) + scaled(&sum, p / 3.0)
        }
        ChannelKind::Dephasing => {
            let damp = Complex64::new(1.0 - p, 0.0);
            Array2::from_shape_fn(mat.raw_dim(), |(i, j)| {
                if ((i ^ j) >> q) & 1 == 1 {
                    damp * mat[[i, j]]
                } else {
                    mat[[i, j]]
                }
            })
        }
    };
    Ok(DensityMatrix::from_matrix_unchecked(n, out))
}

/// One i.i.d. Pauli label per qubit: identity with probability
/// 1 - strength, the channel's error Pauli otherwise. A depolarizing
/// channel splits its strength evenly over X, Y, Z.
pub fn sample_pauli_error(ch: &NoiseChannel, num_qubits: usize, seed: u64) -> Vec<Pauli> {
    sample_pauli_error_rng(ch, num_qubits, &mut StdRng::seed_from_u64(seed))
}

pub fn sample_pauli_error_rng(
    ch: &NoiseChannel,
    num_qubits: usize,
    rng: &mut impl Rng,
) -> Vec<Pauli> {
    let p = ch.strength;
    (0..num_qubits)
        .map(|_| {
            let r = rng.random::<f64>();
            if r >= p {
                Pauli::I
            } else if ch.kind == ChannelKind::Depolarizing {
                match (r / p * 3.0) as usize {
                    0 => Pauli::X,
                    1 => Pauli::Y,
                    _ => Pauli::Z,
                }
            } else {
                ch.error_pauli()
            }
        })
        .collect()
}

/// Thermal decoherence time scale hbar/kT, about 0.76e-11 s at 1 K.
pub fn decoherence_timescale(temperature_kelvin: f64) -> Result<f64> {
    if temperature_kelvin <= 0.0 || !temperature_kelvin.is_finite() {
        return Err(Error::OutOfRange {
            what: "temperature",
            value: temperature_kelvin,
            lo: 0.0,
            hi: f64::INFINITY,
        });
    }
    Ok(0.76e-11 / temperature_kelvin)
}
