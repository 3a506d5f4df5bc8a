//! Three-qubit bit-flip repetition code: encoding, ancilla-based
//! syndrome extraction, and Monte-Carlo logical error rates.
//!
//! The code protects against at most one X error. Syndrome extraction
//! entangles two ancilla qubits with the parities q0 xor q1 and
//! q1 xor q2, measures them, and flips the implicated qubit:
//!
//! | syndrome | error  |
//! |----------|--------|
//! | (0, 0)   | none   |
//! | (1, 0)   | X on 0 |
//! | (1, 1)   | X on 1 |
//! | (0, 1)   | X on 2 |
//!
//! The measurement outcome carries no information about the encoded
//! amplitudes, so correction never disturbs the logical state.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gates::{self, Pauli};
use crate::qstate::StateVector;

/// Result of a Monte-Carlo run of encode, noise, correct, compare.
#[derive(Clone, Debug, Serialize)]
pub struct QecTrialStats {
    pub trials: u64,
    pub physical_p: f64,
    pub logical_failures: u64,
    pub logical_rate: f64,
}

/// a|0> + b|1>  ->  a|000> + b|111> via two fan-out cnots.
pub fn encode_bitflip3(psi: &StateVector) -> Result<StateVector> {
    if psi.num_qubits() != 1 {
        return Err(Error::QubitCountMismatch {
            left: 1,
            right: psi.num_qubits(),
        });
    }
    let cx = gates::cnot();
    let mut state = psi.tensor(&StateVector::basis_state(2, 0)?)?;
    state = gates::apply(&state, &cx, &[0, 1])?;
    gates::apply(&state, &cx, &[0, 2])
}

/// Inverse of [`encode_bitflip3`]; fails if the copies disagree with the
/// data qubit (the input was not a clean codeword).
pub fn decode_bitflip3(encoded: &StateVector) -> Result<StateVector> {
    if encoded.num_qubits() != 3 {
        return Err(Error::QubitCountMismatch {
            left: 3,
            right: encoded.num_qubits(),
        });
    }
    let cx = gates::cnot();
    let mut state = gates::apply(encoded, &cx, &[0, 1])?;
    state = gates::apply(&state, &cx, &[0, 2])?;
    state.extract_remaining(&[(1, 0), (2, 0)])
}

/// Measures the two parity ancillas and applies the indicated X.
/// Returns the syndrome (q0 xor q1, q1 xor q2) and the corrected state.
/// For a codeword with at most one flip both parities are definite, so
/// the measurement has a single possible outcome and needs no seed.
pub fn syndrome_correct(state: &StateVector) -> Result<((u8, u8), StateVector)> {
    if state.num_qubits() != 3 {
        return Err(Error::QubitCountMismatch {
            left: 3,
            right: state.num_qubits(),
        });
    }
    let cx = gates::cnot();
    let mut full = state.tensor(&StateVector::basis_state(2, 0)?)?;
    full = gates::apply(&full, &cx, &[0, 3])?;
    full = gates::apply(&full, &cx, &[1, 3])?;
    full = gates::apply(&full, &cx, &[1, 4])?;
    full = gates::apply(&full, &cx, &[2, 4])?;

    let mut rng = StdRng::seed_from_u64(0);
    let (s1, full) = full.measure_qubit_rng(3, &mut rng)?;
    let (s2, full) = full.measure_qubit_rng(4, &mut rng)?;
    let mut corrected = full.extract_remaining(&[(3, s1), (4, s2)])?;

    let flip = match (s1, s2) {
        (0, 0) => None,
        (1, 0) => Some(0),
        (1, 1) => Some(1),
        (0, 1) => Some(2),
        _ => unreachable!("measurement outcomes are bits"),
    };
    if let Some(q) = flip {
        corrected = gates::apply(&corrected, &gates::pauli(Pauli::X), &[q])?;
    }
    Ok(((s1, s2), corrected))
}

/// Probability that at least two of three independent flips hit, which
/// is what defeats the code.
pub fn predicted_logical_rate(p: f64) -> f64 {
    3.0 * p * p - 2.0 * p * p * p
}

/// Encodes a fresh Haar-random logical qubit each trial, applies
/// independent X errors with probability `p` per qubit, corrects, and
/// counts fidelity losses against the clean codeword.
pub fn logical_error_rate(p: f64, trials: u64, seed: u64) -> Result<QecTrialStats> {
    if !(0.0..=1.0).contains(&p) || !p.is_finite() {
        return Err(Error::OutOfRange {
            what: "flip probability",
            value: p,
            lo: 0.0,
            hi: 1.0,
        });
    }
    if trials == 0 {
        return Err(Error::invalid("trial count must be positive"));
    }
    let x = gates::pauli(Pauli::X);
    let mut rng = StdRng::seed_from_u64(seed);
    let mut failures = 0u64;
    for _ in 0..trials {
        let logical = StateVector::random(1, &mut rng)?;
        let codeword = encode_bitflip3(&logical)?;
        let mut noisy = codeword.clone();
        for q in 0..3 {
            if rng.random::<f64>() < p {
                noisy = gates::apply(&noisy, &x, &[q])?;
            }
        }
        let (_, corrected) = syndrome_correct(&noisy)?;
        if corrected.fidelity(&codeword)? < 1.0 - 1e-9 {
            failures += 1;
        }
    }
    Ok(QecTrialStats {
        trials,
        physical_p: p,
        logical_failures: failures,
        logical_rate: failures as f64 / trials as f64,
    })
}
