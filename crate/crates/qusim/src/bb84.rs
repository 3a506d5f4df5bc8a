//! BB84 quantum key distribution simulated end to end: state
//! preparation, optional intercept-resend eavesdropping, measurement,
//! sifting, QBER estimation, and minimal privacy amplification.
//!
//! Every qubit travels as a real [`StateVector`]; collapse happens
//! through projective measurement, never by copying classical bits.
//! The two preparation bases are the computational pair {|0>, |1>} and
//! the Hadamard pair {|+>, |->}.
//!
//! Key material flows as: raw rounds -> sifted bits (bases matched) ->
//! disclosed sample (QBER estimate) -> final key. When the estimated
//! QBER is zero the final key is simply the undisclosed remainder; when
//! it is positive but at or below the detection threshold, undisclosed
//! bits are paired and each pair XORed, halving the key; above the
//! threshold the session aborts with an empty key.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gates;
use crate::qstate::StateVector;

pub const DEFAULT_QBER_SAMPLE_FRACTION: f64 = 0.25;
pub const DEFAULT_DETECTION_THRESHOLD: f64 = 0.12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Basis {
    Computational,
    Hadamard,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Eavesdropper {
    None,
    InterceptResend,
}

#[derive(Clone, Debug)]
pub struct Bb84Config {
    pub raw_length: usize,
    pub eavesdropper: Eavesdropper,
    pub qber_sample_fraction: f64,
    pub detection_threshold: f64,
    pub seed: u64,
}

impl Bb84Config {
    pub fn new(raw_length: usize, eavesdropper: Eavesdropper, seed: u64) -> Self {
        Bb84Config {
            raw_length,
            eavesdropper,
            qber_sample_fraction: DEFAULT_QBER_SAMPLE_FRACTION,
            detection_threshold: DEFAULT_DETECTION_THRESHOLD,
            seed,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.raw_length < 8 {
            return Err(Error::invalid("raw length must be at least 8"));
        }
        for (what, v) in [
            ("QBER sample fraction", self.qber_sample_fraction),
            ("detection threshold", self.detection_threshold),
        ] {
            if !(v > 0.0 && v < 1.0) {
                return Err(Error::OutOfRange {
                    what,
                    value: v,
                    lo: 0.0,
                    hi: 1.0,
                });
            }
        }
        Ok(())
    }
}

/// One transmitted qubit as seen by every party.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct RoundRecord {
    /// Sender's raw bit.
    pub bit: u8,
    /// Sender's preparation basis.
    pub basis_a: Basis,
    /// Eavesdropper's measurement basis, when present.
    pub basis_e: Option<Basis>,
    /// Receiver's measurement basis.
    pub basis_b: Basis,
    /// Receiver's measured bit.
    pub outcome: u8,
}

#[derive(Clone, Debug, Serialize)]
pub struct Bb84Result {
    pub sifted_length: usize,
    pub measured_qber: f64,
    pub eavesdropping_detected: bool,
    /// Sender-side final key bits; empty when detection aborts.
    pub final_key: Vec<u8>,
}

/// Full audit trail of one protocol run.
#[derive(Clone, Debug)]
pub struct Bb84Session {
    pub rounds: Vec<RoundRecord>,
    /// Round indices that survived sifting.
    pub sifted_indices: Vec<usize>,
    /// Positions within the sifted key disclosed for QBER estimation.
    pub disclosed_positions: Vec<usize>,
    /// Receiver-side final key; equals `result.final_key` when the
    /// channel added no errors.
    pub receiver_key: Vec<u8>,
    pub result: Bb84Result,
}

fn random_basis(rng: &mut impl Rng) -> Basis {
    if rng.random::<bool>() {
        Basis::Hadamard
    } else {
        Basis::Computational
    }
}

fn prepare(bit: u8, basis: Basis) -> StateVector {
    let state = StateVector::basis_state(1, bit as usize).expect("one qubit");
    match basis {
        Basis::Computational => state,
        Basis::Hadamard => gates::apply(&state, &gates::hadamard(), &[0]).expect("one qubit"),
    }
}

/// Projective measurement in the given basis; returns the observed bit
/// and the collapsed state as it continues down the channel.
fn measure_in(state: &StateVector, basis: Basis, rng: &mut impl Rng) -> (u8, StateVector) {
    let h = gates::hadamard();
    let rotated = match basis {
        Basis::Computational => state.clone(),
        Basis::Hadamard => gates::apply(state, &h, &[0]).expect("one qubit"),
    };
    let (bit, post) = rotated.measure_qubit_rng(0, rng).expect("qubit 0");
    let resent = match basis {
        Basis::Computational => post,
        Basis::Hadamard => gates::apply(&post, &h, &[0]).expect("one qubit"),
    };
    (bit, resent)
}

fn xor_pairs(bits: &[u8]) -> Vec<u8> {
    bits.chunks_exact(2).map(|p| p[0] ^ p[1]).collect()
}

pub fn run_bb84(cfg: &Bb84Config) -> Result<Bb84Result> {
    Ok(run_bb84_session(cfg)?.result)
}

pub fn run_bb84_session(cfg: &Bb84Config) -> Result<Bb84Session> {
    cfg.validate()?;
    let mut rng = StdRng::seed_from_u64(cfg.seed);

    let mut rounds = Vec::with_capacity(cfg.raw_length);
    for _ in 0..cfg.raw_length {
        let bit = rng.random::<bool>() as u8;
        let basis_a = random_basis(&mut rng);
        let mut flying = prepare(bit, basis_a);
        let basis_e = match cfg.eavesdropper {
            Eavesdropper::None => None,
            Eavesdropper::InterceptResend => {
                let basis = random_basis(&mut rng);
                let (_, resent) = measure_in(&flying, basis, &mut rng);
                flying = resent;
                Some(basis)
            }
        };
        let basis_b = random_basis(&mut rng);
        let (outcome, _) = measure_in(&flying, basis_b, &mut rng);
        rounds.push(RoundRecord {
            bit,
            basis_a,
            basis_e,
            basis_b,
            outcome,
        });
    }

    let sifted_indices: Vec<usize> = (0..rounds.len())
        .filter(|&i| rounds[i].basis_a == rounds[i].basis_b)
        .collect();
    let sender_bits: Vec<u8> = sifted_indices.iter().map(|&i| rounds[i].bit).collect();
    let receiver_bits: Vec<u8> = sifted_indices.iter().map(|&i| rounds[i].outcome).collect();

    // disclose a random sample for error estimation
    let sifted_length = sifted_indices.len();
    let sample_size = if sifted_length == 0 {
        0
    } else {
        ((cfg.qber_sample_fraction * sifted_length as f64).round() as usize)
            .clamp(1, sifted_length)
    };
    let mut positions: Vec<usize> = (0..sifted_length).collect();
    for k in 0..sample_size {
        let j = rng.random_range(k..sifted_length);
        positions.swap(k, j);
    }
    let mut disclosed: Vec<usize> = positions[..sample_size].to_vec();
    disclosed.sort_unstable();

    let mismatches = disclosed
        .iter()
        .filter(|&&p| sender_bits[p] != receiver_bits[p])
        .count();
    let measured_qber = if sample_size == 0 {
        0.0
    } else {
        mismatches as f64 / sample_size as f64
    };
    let eavesdropping_detected = measured_qber > cfg.detection_threshold;

    let (final_key, receiver_key) = if eavesdropping_detected {
        (Vec::new(), Vec::new())
    } else {
        let keep = |bits: &[u8]| -> Vec<u8> {
            let mut d = disclosed.iter().copied().peekable();
            bits.iter()
                .enumerate()
                .filter(|(p, _)| {
                    if d.peek() == Some(p) {
                        d.next();
                        false
                    } else {
                        true
                    }
                })
                .map(|(_, &b)| b)
                .collect()
        };
        let a = keep(&sender_bits);
        let b = keep(&receiver_bits);
        if measured_qber > 0.0 {
            (xor_pairs(&a), xor_pairs(&b))
        } else {
            (a, b)
        }
    };

    Ok(Bb84Session {
        rounds,
        sifted_indices,
        disclosed_positions: disclosed,
        receiver_key,
        result: Bb84Result {
            sifted_length,
            measured_qber,
            eavesdropping_detected,
            final_key,
        },
    })
}

/// What measuring in a fixed basis does to a passing state.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct DisturbanceReport {
    /// |<u|v>|.
    pub overlap_magnitude: f64,
    /// Expected fidelity of v after measurement in the {u, u_perp}
    /// basis: |<u|v>|^4 + |<u_perp|v>|^4. Equals 1 exactly when u and v
    /// are identical or orthogonal.
    pub expected_fidelity: f64,
    pub disturbed: bool,
}

/// Measures `v` in the eigenbasis of `u` and reports the expected
/// damage. Non-orthogonal, non-identical pairs are always disturbed,
/// which is what makes eavesdropping on BB84 visible.
pub fn eavesdrop_disturbance_demo(u: &StateVector, v: &StateVector) -> Result<DisturbanceReport> {
    if u.num_qubits() != 1 || v.num_qubits() != 1 {
        return Err(Error::QubitCountMismatch {
            left: 1,
            right: u.num_qubits().max(v.num_qubits()),
        });
    }
    let u_amps = u.amplitudes();
    let u_perp = StateVector::from_amplitudes_unchecked(
        1,
        vec![-u_amps[1].conj(), u_amps[0].conj()],
    );
    let p_u = u.inner_product(v)?.norm_sqr();
    let p_perp = u_perp.inner_product(v)?.norm_sqr();
    let expected_fidelity = p_u * p_u + p_perp * p_perp;
    Ok(DisturbanceReport {
        overlap_magnitude: p_u.sqrt(),
        expected_fidelity,
        disturbed: expected_fidelity < 1.0 - 1e-12,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;
    use std::f64::consts::FRAC_1_SQRT_2;

    fn plus() -> StateVector {
        let h = Complex64::new(FRAC_1_SQRT_2, 0.0);
        StateVector::from_amplitudes(1, vec![h, h]).unwrap()
    }

    #[test]
    fn quiet_channel_gives_zero_qber_and_matching_keys() {
        for seed in 0..10 {
            let cfg = Bb84Config::new(256, Eavesdropper::None, seed);
            let session = run_bb84_session(&cfg).unwrap();
            let r = &session.result;
            assert_eq!(r.measured_qber, 0.0);
            assert!(!r.eavesdropping_detected);
            assert_eq!(r.final_key, session.receiver_key);
            assert!(!r.final_key.is_empty());
            let sample = session.disclosed_positions.len();
            assert_eq!(r.final_key.len(), r.sifted_length - sample);
        }
    }

    #[test]
    fn matched_basis_rounds_always_agree_without_eve() {
        let cfg = Bb84Config::new(512, Eavesdropper::None, 77);
        let session = run_bb84_session(&cfg).unwrap();
        for &i in &session.sifted_indices {
            assert_eq!(session.rounds[i].bit, session.rounds[i].outcome);
        }
    }

    #[test]
    fn intercept_resend_is_detected() {
        let cfg = Bb84Config::new(4096, Eavesdropper::InterceptResend, 5);
        let session = run_bb84_session(&cfg).unwrap();
        let r = &session.result;
        let sample = session.disclosed_positions.len() as f64;
        let sigma = (0.25 * 0.75 / sample).sqrt();
        assert!(
            (r.measured_qber - 0.25).abs() < 4.0 * sigma,
            "qber {}",
            r.measured_qber
        );
        assert!(r.eavesdropping_detected);
        assert!(r.final_key.is_empty());
    }

    #[test]
    fn sift_ratio_is_about_half() {
        let cfg = Bb84Config::new(4096, Eavesdropper::None, 13);
        let r = run_bb84(&cfg).unwrap();
        let ratio = r.sifted_length as f64 / 4096.0;
        let sigma = (0.25f64 / 4096.0).sqrt();
        assert!((ratio - 0.5).abs() < 4.0 * sigma, "ratio {ratio}");
    }

    #[test]
    fn tolerated_noise_triggers_key_halving() {
        // a generous threshold lets the interceptor's 25% QBER through,
        // exercising the amplification path
        let mut cfg = Bb84Config::new(512, Eavesdropper::InterceptResend, 3);
        cfg.detection_threshold = 0.9;
        let session = run_bb84_session(&cfg).unwrap();
        let r = &session.result;
        assert!(!r.eavesdropping_detected);
        assert!(r.measured_qber > 0.0);
        let undisclosed = r.sifted_length - session.disclosed_positions.len();
        assert_eq!(r.final_key.len(), undisclosed / 2);
        assert_eq!(session.receiver_key.len(), r.final_key.len());
    }

    #[test]
    fn runs_are_reproducible() {
        let cfg = Bb84Config::new(128, Eavesdropper::InterceptResend, 99);
        let a = run_bb84_session(&cfg).unwrap();
        let b = run_bb84_session(&cfg).unwrap();
        assert_eq!(a.result.final_key, b.result.final_key);
        assert_eq!(a.result.measured_qber, b.result.measured_qber);
        assert_eq!(a.disclosed_positions, b.disclosed_positions);
    }

    #[test]
    fn config_validation() {
        let mut cfg = Bb84Config::new(4, Eavesdropper::None, 0);
        assert!(run_bb84(&cfg).is_err());
        cfg.raw_length = 64;
        cfg.qber_sample_fraction = 0.0;
        assert!(run_bb84(&cfg).is_err());
        cfg.qber_sample_fraction = 0.25;
        cfg.detection_threshold = 1.0;
        assert!(run_bb84(&cfg).is_err());
        cfg.detection_threshold = 0.12;
        assert!(run_bb84(&cfg).is_ok());
    }

    #[test]
    fn orthogonal_states_suffer_no_disturbance() {
        let zero = StateVector::basis_state(1, 0).unwrap();
        let one = StateVector::basis_state(1, 1).unwrap();
        let rep = eavesdrop_disturbance_demo(&zero, &one).unwrap();
        assert!(rep.overlap_magnitude < 1e-15);
        assert!((rep.expected_fidelity - 1.0).abs() < 1e-12);
        assert!(!rep.disturbed);
    }

    #[test]
    fn identical_states_suffer_no_disturbance() {
        let rep = eavesdrop_disturbance_demo(&plus(), &plus()).unwrap();
        assert!((rep.overlap_magnitude - 1.0).abs() < 1e-12);
        assert!(!rep.disturbed);
    }

    #[test]
    fn basis_overlap_halves_fidelity() {
        let zero = StateVector::basis_state(1, 0).unwrap();
        let rep = eavesdrop_disturbance_demo(&zero, &plus()).unwrap();
        assert!((rep.overlap_magnitude - FRAC_1_SQRT_2).abs() < 1e-12);
        assert!((rep.expected_fidelity - 0.5).abs() < 1e-12);
        assert!(rep.disturbed);
    }

    #[test]
    fn any_partial_overlap_disturbs() {
        let v = StateVector::from_amplitudes(
            1,
            vec![Complex64::new(0.8, 0.0), Complex64::new(0.0, 0.6)],
        )
        .unwrap();
        let zero = StateVector::basis_state(1, 0).unwrap();
        let rep = eavesdrop_disturbance_demo(&zero, &v).unwrap();
        assert!(rep.disturbed);
        // branch average: 0.64^2 + 0.36^2
        assert!((rep.expected_fidelity - (0.4096 + 0.1296)).abs() < 1e-12);
    }
}
