//! End-to-end quantum algorithms: Fourier transform circuits, Grover
//! search, teleportation, dense coding, and the reversible half adder.

use rand::rngs::StdRng;
use rand::SeedableRng;

use crate::circuit::{Circuit, NamedGate};
use crate::error::{Error, Result};
use crate::gates::{self, Pauli};
use crate::qstate::{StateVector, MAX_STATE_QUBITS};

/// Marked basis indices a Grover oracle flips the sign of.
#[derive(Clone, Debug)]
pub struct GroverOracle {
    n: usize,
    marked: Vec<usize>,
}

impl GroverOracle {
    pub fn new(n: usize, marked: &[usize]) -> Result<Self> {
        if n == 0 || n > MAX_STATE_QUBITS {
            return Err(Error::TooManyQubits {
                n,
                max: MAX_STATE_QUBITS,
                what: "a search register",
            });
        }
        let mut sorted = marked.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.is_empty() || sorted.len() != marked.len() {
            return Err(Error::invalid("marked set must be nonempty and free of duplicates"));
        }
        if let Some(&i) = sorted.iter().find(|&&i| i >= 1usize << n) {
            return Err(Error::IndexOutOfRange { index: i, n });
        }
        Ok(GroverOracle { n, marked: sorted })
    }

    /// Oracle with a single marked item.
    pub fn single(n: usize, index: usize) -> Result<Self> {
        GroverOracle::new(n, &[index])
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn marked(&self) -> &[usize] {
        &self.marked
    }

    /// Iteration count that maximizes the success probability; for M
    /// marked items out of N the rotation angle is arcsin(sqrt(M/N)).
    pub fn recommended_iterations(&self) -> usize {
        let big_n = (1usize << self.n) as f64;
        let theta = (self.marked.len() as f64 / big_n).sqrt().asin();
        iterations_from_angle(theta)
    }
}

fn iterations_from_angle(theta: f64) -> usize {
    let raw = (std::f64::consts::FRAC_PI_4 / theta - 0.5).round();
    if raw < 1.0 {
        1
    } else {
        raw as usize
    }
}

/// All 2^n amplitudes equal to 2^{-n/2}.
pub fn uniform_superposition(n: usize) -> Result<StateVector> {
    if n == 0 || n > MAX_STATE_QUBITS {
        return Err(Error::TooManyQubits {
            n,
            max: MAX_STATE_QUBITS,
            what: "a state vector",
        });
    }
    let dim = 1usize << n;
    let amp = num_complex::Complex64::new(1.0 / (dim as f64).sqrt(), 0.0);
    Ok(StateVector::from_amplitudes_unchecked(n, vec![amp; dim]))
}

/// Fourier transform |x> -> 2^{-n/2} sum_y e^{2 pi i x y / 2^n} |y> as a
/// circuit: one H per qubit, a ladder of controlled phase rotations
/// (pi / 2^k), and floor(n/2) closing swaps that reverse the qubit order.
/// Gate count is n(n+1)/2 + floor(n/2), i.e. O(n^2).
pub fn qft_circuit(n: usize) -> Result<Circuit> {
    if n == 0 || n > MAX_STATE_QUBITS {
        return Err(Error::TooManyQubits {
            n,
            max: MAX_STATE_QUBITS,
            what: "a state vector",
        });
    }
    let mut c = Circuit::new(n);
    for j in (0..n).rev() {
        c.add(NamedGate::H, &[j])?;
        for m in (0..j).rev() {
            let theta = std::f64::consts::PI / (1u64 << (j - m)) as f64;
            c.add_controlled(NamedGate::Phase { theta }, &[m], &[j])?;
        }
    }
    for i in 0..n / 2 {
        c.add(NamedGate::Swap, &[i, n - 1 - i])?;
    }
    Ok(c)
}

/// Iterations that bring the marked amplitude closest to 1 for a single
/// marked item in a space of size `big_n`: the smallest integer near
/// pi / (4 arcsin(1/sqrt N)) - 1/2, and at least 1.
pub fn grover_iterations(big_n: usize) -> Result<usize> {
    if !big_n.is_power_of_two() || big_n < 4 {
        return Err(Error::invalid(
            "search space size must be a power of two and at least 4",
        ));
    }
    let theta = (1.0 / (big_n as f64).sqrt()).asin();
    Ok(iterations_from_angle(theta))
}

/// State after `iterations` rounds of sign flip plus inversion about the
/// average, starting from the uniform superposition.
pub fn grover_state(oracle: &GroverOracle, iterations: usize) -> Result<StateVector> {
    let mut state = uniform_superposition(oracle.n)?;
    let dim = state.dim() as f64;
    for _ in 0..iterations {
        let amps = state.amplitudes_mut();
        for &m in &oracle.marked {
            amps[m] = -amps[m];
        }
        let mean = amps.iter().sum::<num_complex::Complex64>() / dim;
        for a in amps.iter_mut() {
            *a = 2.0 * mean - *a;
        }
    }
    Ok(state)
}

/// Runs the full search and measures; returns the observed basis index.
pub fn grover_search(oracle: &GroverOracle, seed: u64) -> Result<usize> {
    let state = grover_state(oracle, oracle.recommended_iterations())?;
    Ok(state.measure_all(seed).outcome)
}

/// Outcome of one teleportation run.
#[derive(Clone, Debug)]
pub struct TeleportResult {
    /// The two bits sent over the classical channel (phase bit, flip bit).
    pub classical_bits: (u8, u8),
    /// State of the receiving qubit after corrections.
    pub received: StateVector,
    /// |<psi|received>|^2.
    pub fidelity: f64,
}

/// Teleports a single-qubit state over a shared (|00> + |11>)/sqrt 2 pair.
/// The sender holds qubits 0 (the message) and 1; the receiver holds
/// qubit 2. Fidelity is 1 for every seed.
pub fn teleport(psi: &StateVector, seed: u64) -> Result<TeleportResult> {
    if psi.num_qubits() != 1 {
        return Err(Error::QubitCountMismatch {
            left: 1,
            right: psi.num_qubits(),
        });
    }
    let mut rng = StdRng::seed_from_u64(seed);
    let h = gates::hadamard();
    let cx = gates::cnot();

    // shared pair on qubits 1 and 2
    let mut state = psi.tensor(&StateVector::basis_state(2, 0)?)?;
    state = gates::apply(&state, &h, &[1])?;
    state = gates::apply(&state, &cx, &[1, 2])?;

    // Bell measurement of the message against the sender half
    state = gates::apply(&state, &cx, &[0, 1])?;
    state = gates::apply(&state, &h, &[0])?;
    let (phase_bit, state) = state.measure_qubit_rng(0, &mut rng)?;
    let (flip_bit, state) = state.measure_qubit_rng(1, &mut rng)?;

    // receiver applies the classically signalled corrections
    let mut received = state.extract_remaining(&[(0, phase_bit), (1, flip_bit)])?;
    if flip_bit == 1 {
        received = gates::apply(&received, &gates::pauli(Pauli::X), &[0])?;
    }
    if phase_bit == 1 {
        received = gates::apply(&received, &gates::pauli(Pauli::Z), &[0])?;
    }
    let fidelity = psi.fidelity(&received)?;
    Ok(TeleportResult {
        classical_bits: (phase_bit, flip_bit),
        received,
        fidelity,
    })
}

/// Which maximally entangled pair dense coding runs over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BellResource {
    /// (|00> + |11>)/sqrt 2.
    PhiPlus,
    /// (|01> - |10>)/sqrt 2; the decoder's raw bits come out complemented
    /// and are mapped back before returning.
    Singlet,
}

pub fn bell_pair(resource: BellResource) -> StateVector {
    let h = num_complex::Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
    let z = num_complex::Complex64::ZERO;
    let amps = match resource {
        BellResource::PhiPlus => vec![h, z, z, h],
        BellResource::Singlet => vec![z, -h, h, z],
    };
    StateVector::from_amplitudes_unchecked(2, amps)
}

/// Sends two classical bits by applying one of {I, X, Z, XZ} to the
/// sender's half (qubit 0) of a shared (|00> + |11>)/sqrt 2 pair.
pub fn dense_code(bits: (u8, u8), seed: u64) -> Result<(u8, u8)> {
    dense_code_with(bits, BellResource::PhiPlus, seed)
}

/// Dense coding over a chosen entangled resource.
pub fn dense_code_with(bits: (u8, u8), resource: BellResource, seed: u64) -> Result<(u8, u8)> {
    let (b1, b2) = bits;
    if b1 > 1 || b2 > 1 {
        return Err(Error::invalid("classical bits must be 0 or 1"));
    }
    let mut state = bell_pair(resource);
    if b1 == 1 {
        state = gates::apply(&state, &gates::pauli(Pauli::Z), &[0])?;
    }
    if b2 == 1 {
        state = gates::apply(&state, &gates::pauli(Pauli::X), &[0])?;
    }
    // decoder: map Bell basis to computational basis, then read out
    state = gates::apply(&state, &gates::cnot(), &[0, 1])?;
    state = gates::apply(&state, &gates::hadamard(), &[0])?;
    let record = state.measure_all(seed);
    let (m1, m2) = (record.bit(0), record.bit(1));
    Ok(match resource {
        BellResource::PhiPlus => (m1, m2),
        BellResource::Singlet => (m1 ^ 1, m2 ^ 1),
    })
}

/// Half adder on three qubits: a Toffoli writes the carry x AND y into
/// qubit 2, then a cnot writes the sum x XOR y into qubit 1.
pub fn adder_circuit() -> Circuit {
    let mut c = Circuit::new(3);
    c.add(NamedGate::Ccnot, &[0, 1, 2]).expect("static indices");
    c.add(NamedGate::Cnot, &[0, 1]).expect("static indices");
    c
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::infotheory::entanglement_entropy;
    use num_complex::Complex64;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};
    use std::collections::HashSet;
    use std::f64::consts::{FRAC_1_SQRT_2, PI};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn dft_matrix(n: usize) -> Vec<Vec<Complex64>> {
        let dim = 1usize << n;
        let scale = 1.0 / (dim as f64).sqrt();
        (0..dim)
            .map(|j| {
                (0..dim)
                    .map(|k| {
                        Complex64::from_polar(scale, 2.0 * PI * (j * k % dim) as f64 / dim as f64)
                    })
                    .collect()
            })
            .collect()
    }

    #[test]
    fn uniform_superposition_amplitudes() {
        let s = uniform_superposition(1).unwrap();
        assert!((s.amplitude(0).unwrap().re - FRAC_1_SQRT_2).abs() < 1e-15);
        assert!((s.amplitude(1).unwrap().re - FRAC_1_SQRT_2).abs() < 1e-15);
        let s = uniform_superposition(3).unwrap();
        let want = 1.0 / 8.0_f64.sqrt();
        for a in s.amplitudes() {
            assert!((a.re - want).abs() < 1e-15 && a.im == 0.0);
        }
    }

    #[test]
    fn one_qubit_fourier_transform_is_hadamard() {
        let c = qft_circuit(1).unwrap();
        assert_eq!(c.gate_count(), 1);
        let u = c.unitary_of().unwrap();
        let want = gates::hadamard();
        for i in 0..2 {
            for j in 0..2 {
                assert!((u.matrix()[[i, j]] - want.matrix()[[i, j]]).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn fourier_circuit_matches_the_transform_matrix() {
        for n in 2..=4 {
            let u = qft_circuit(n).unwrap().unitary_of().unwrap();
            let want = dft_matrix(n);
            for (j, row) in want.iter().enumerate() {
                for (k, w) in row.iter().enumerate() {
                    assert!(
                        (u.matrix()[[j, k]] - w).norm() < 1e-10,
                        "n={n} entry ({j},{k})"
                    );
                }
            }
        }
    }

    #[test]
    fn fourier_of_a_basis_state_is_a_product_state() {
        let n = 4;
        let circuit = qft_circuit(n).unwrap();
        let mut rng = StdRng::seed_from_u64(3);
        for _ in 0..5 {
            let x = rng.random_range(0..1usize << n);
            let out = circuit.run(&StateVector::basis_state(n, x).unwrap()).unwrap();
            for q in 0..n {
                let e = entanglement_entropy(&out, &[q]).unwrap();
                assert!(e < 1e-8, "qubit {q} of input {x}: E = {e}");
            }
        }
    }

    #[test]
    fn fourier_gate_count_is_quadratic() {
        for n in 1..=16 {
            let c = qft_circuit(n).unwrap();
            assert_eq!(c.gate_count(), n * (n + 1) / 2 + n / 2);
        }
    }

    #[test]
    fn iteration_count_formula() {
        assert_eq!(grover_iterations(4).unwrap(), 1);
        // brute-force scan of sin^2((2I+1) theta) over the rotation's
        // first approach to pi/2; later revolutions can also score high
        // but cost proportionally more oracle calls
        let theta = 0.25_f64.asin();
        let best = (1..=10)
            .filter(|&i| (2 * i + 1) as f64 * theta <= PI)
            .max_by(|&a, &b| {
                let pa = ((2 * a + 1) as f64 * theta).sin().powi(2);
                let pb = ((2 * b + 1) as f64 * theta).sin().powi(2);
                pa.partial_cmp(&pb).unwrap()
            })
            .unwrap();
        assert_eq!(grover_iterations(16).unwrap(), best);
        let expect = (PI * 1024.0_f64.sqrt() / 4.0 - 0.5).round() as usize;
        assert_eq!(grover_iterations(1024).unwrap(), expect);
        assert!(grover_iterations(12).is_err());
        assert!(grover_iterations(2).is_err());
    }

    #[test]
    fn iteration_count_lands_within_one_step_of_quarter_turn() {
        for n in 2..=20 {
            let big_n = 1usize << n;
            let theta = (1.0 / (big_n as f64).sqrt()).asin();
            let i = grover_iterations(big_n).unwrap();
            let angle = (2 * i + 1) as f64 * theta;
            assert!(
                (angle - PI / 2.0).abs() <= theta + 1e-12,
                "n={n}: (2I+1)theta = {angle}"
            );
        }
    }

    #[test]
    fn four_item_search_is_exact() {
        for marked in 0..4 {
            let oracle = GroverOracle::single(2, marked).unwrap();
            assert_eq!(oracle.recommended_iterations(), 1);
            let state = grover_state(&oracle, 1).unwrap();
            let p = state.probabilities()[marked];
            assert!((p - 1.0).abs() < 1e-10, "marked {marked}: p = {p}");
            for seed in 0..5 {
                assert_eq!(grover_search(&oracle, seed).unwrap(), marked);
            }
        }
    }

    #[test]
    fn marked_amplitude_follows_the_rotation() {
        let n = 4;
        let oracle = GroverOracle::single(n, 11).unwrap();
        let theta = (1.0 / 4.0_f64).asin();
        for k in 0..=3 * oracle.recommended_iterations() {
            let state = grover_state(&oracle, k).unwrap();
            let amp = state.amplitude(11).unwrap();
            let want = ((2 * k + 1) as f64 * theta).sin();
            assert!((amp.re - want).abs() < 1e-9, "k={k}");
            assert!(amp.im.abs() < 1e-12);
        }
    }

    #[test]
    fn search_succeeds_usually_at_sixteen_items() {
        let oracle = GroverOracle::single(4, 13).unwrap();
        let mut hits = 0;
        for seed in 0..100 {
            if grover_search(&oracle, seed).unwrap() == 13 {
                hits += 1;
            }
        }
        // success probability is sin^2(7 asin(1/4)) ~ 0.96
        assert!(hits > 85, "hits {hits}");
    }

    #[test]
    fn multi_marked_search_finds_a_marked_item() {
        let oracle = GroverOracle::new(5, &[3, 17, 24]).unwrap();
        let mut hits = 0;
        for seed in 0..100 {
            if oracle.marked().contains(&grover_search(&oracle, seed).unwrap()) {
                hits += 1;
            }
        }
        assert!(hits > 85, "hits {hits}");
    }

    #[test]
    fn oracle_validation() {
        assert!(GroverOracle::new(2, &[]).is_err());
        assert!(GroverOracle::new(2, &[4]).is_err());
        assert!(GroverOracle::new(2, &[1, 1]).is_err());
    }

    #[test]
    fn teleporting_basis_and_random_states_is_faithful() {
        let zero = StateVector::basis_state(1, 0).unwrap();
        for seed in 0..10 {
            let r = teleport(&zero, seed).unwrap();
            assert!((r.fidelity - 1.0).abs() < 1e-9);
            assert!(r.received.fidelity(&zero).unwrap() > 1.0 - 1e-9);
        }
        let mut rng = StdRng::seed_from_u64(23);
        for seed in 0..50 {
            let psi = StateVector::random(1, &mut rng).unwrap();
            let r = teleport(&psi, seed).unwrap();
            assert!((r.fidelity - 1.0).abs() < 1e-9, "seed {seed}");
        }
    }

    #[test]
    fn every_correction_branch_appears_and_is_faithful() {
        let plus = StateVector::from_amplitudes(1, vec![c(FRAC_1_SQRT_2, 0.0), c(FRAC_1_SQRT_2, 0.0)])
            .unwrap();
        let mut seen = HashSet::new();
        let mut seed = 0;
        while seen.len() < 4 && seed < 10_000 {
            let r = teleport(&plus, seed).unwrap();
            assert!((r.fidelity - 1.0).abs() < 1e-9);
            seen.insert(r.classical_bits);
            seed += 1;
        }
        assert_eq!(seen.len(), 4, "all four classical branches occur");
    }

    #[test]
    fn teleport_rejects_multiqubit_messages() {
        let s = StateVector::basis_state(2, 0).unwrap();
        assert!(teleport(&s, 0).is_err());
    }

    #[test]
    fn dense_coding_round_trips_every_bit_pair() {
        for b1 in 0..2u8 {
            for b2 in 0..2u8 {
                for seed in 0..10 {
                    assert_eq!(dense_code((b1, b2), seed).unwrap(), (b1, b2));
                    assert_eq!(
                        dense_code_with((b1, b2), BellResource::Singlet, seed).unwrap(),
                        (b1, b2)
                    );
                }
            }
        }
    }

    #[test]
    fn dense_coding_validates_bits() {
        assert!(dense_code((2, 0), 0).is_err());
    }

    #[test]
    fn adder_matches_the_half_adder_truth_table() {
        let c = adder_circuit();
        for x in 0..2usize {
            for y in 0..2usize {
                let input = StateVector::basis_state(3, x | (y << 1)).unwrap();
                let out = c.run(&input).unwrap();
                let expect = x | ((x ^ y) << 1) | ((x & y) << 2);
                let amp = out.amplitude(expect).unwrap();
                assert!((amp.re - 1.0).abs() < 1e-12, "x={x} y={y}");
            }
        }
    }

    #[test]
    fn bell_pairs_are_maximally_entangled() {
        for r in [BellResource::PhiPlus, BellResource::Singlet] {
            let e = entanglement_entropy(&bell_pair(r), &[0]).unwrap();
            assert!((e - 2.0).abs() < 1e-9);
        }
    }
}
