//! Pure states, density matrices, and measurement.
//!
//! Basis convention used across the whole crate: basis index `i` encodes
//! qubit `q` as bit `q` of `i`, so qubit 0 is the least significant bit.

use nalgebra::DMatrix;
use ndarray::Array2;
use num_complex::Complex64;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rand_distr::StandardNormal;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest state vector kept in memory: 2^24 amplitudes (256 MiB).
pub const MAX_STATE_QUBITS: usize = 24;
/// Largest density matrix kept in memory: 2^12 x 2^12 entries.
pub const MAX_DENSITY_QUBITS: usize = 12;

/// Tolerance for algebraic identities (norms, Hermiticity, traces).
pub const ALG_TOL: f64 = 1e-10;
/// Eigenvalues of a density matrix may dip this far below zero.
pub const PSD_TOL: f64 = 1e-9;
/// Branch probabilities below this are treated as impossible.
pub const BRANCH_TOL: f64 = 1e-12;

/// Normalized vector of 2^n complex amplitudes.
#[derive(Clone, Debug, PartialEq)]
pub struct StateVector {
    n: usize,
    amps: Vec<Complex64>,
}

impl StateVector {
    /// |index> on n qubits.
    pub fn basis_state(n: usize, index: usize) -> Result<Self> {
        check_qubit_count(n, MAX_STATE_QUBITS, "a state vector")?;
        let dim = 1usize << n;
        if index >= dim {
            return Err(Error::IndexOutOfRange { index, n });
        }
        let mut amps = vec![Complex64::ZERO; dim];
        amps[index] = Complex64::ONE;
        Ok(StateVector { n, amps })
    }

    /// Builds a state from raw amplitudes; the norm must already be 1.
    pub fn from_amplitudes(n: usize, amps: Vec<Complex64>) -> Result<Self> {
        check_qubit_count(n, MAX_STATE_QUBITS, "a state vector")?;
        let dim = 1usize << n;
        if amps.len() != dim {
            return Err(Error::BadAmplitudeCount {
                expected: dim,
                got: amps.len(),
            });
        }
        let state = StateVector { n, amps };
        let norm = state.norm();
        if (norm - 1.0).abs() > ALG_TOL {
            return Err(Error::NotNormalized { norm });
        }
        Ok(state)
    }

    pub(crate) fn from_amplitudes_unchecked(n: usize, amps: Vec<Complex64>) -> Self {
        debug_assert_eq!(amps.len(), 1 << n);
        StateVector { n, amps }
    }

    /// Haar-random pure state: normalized vector of complex Gaussians.
    pub fn random(n: usize, rng: &mut impl Rng) -> Result<Self> {
        check_qubit_count(n, MAX_STATE_QUBITS, "a state vector")?;
        let dim = 1usize << n;
        let mut amps = Vec::with_capacity(dim);
        for _ in 0..dim {
            let re: f64 = rng.sample(StandardNormal);
            let im: f64 = rng.sample(StandardNormal);
            amps.push(Complex64::new(re, im));
        }
        let norm = amps.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
        for a in &mut amps {
            *a /= norm;
        }
        Ok(StateVector { n, amps })
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub(crate) fn amplitudes_mut(&mut self) -> &mut [Complex64] {
        &mut self.amps
    }

    pub fn amplitude(&self, index: usize) -> Result<Complex64> {
        self.amps
            .get(index)
            .copied()
            .ok_or(Error::IndexOutOfRange { index, n: self.n })
    }

    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }

    /// |c_i|^2 for every basis index.
    pub fn probabilities(&self) -> Vec<f64> {
        self.amps.iter().map(|c| c.norm_sqr()).collect()
    }

    /// <self|other>. Conjugation is on self.
    pub fn inner_product(&self, other: &StateVector) -> Result<Complex64> {
        if self.n != other.n {
            return Err(Error::QubitCountMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(self
            .amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    /// |<self|other>|^2.
    pub fn fidelity(&self, other: &StateVector) -> Result<f64> {
        Ok(self.inner_product(other)?.norm_sqr())
    }

    /// Tensor product with self on the low bits: index i = i_self + 2^n_self * i_other.
    pub fn tensor(&self, other: &StateVector) -> Result<StateVector> {
        let n = self.n + other.n;
        check_qubit_count(n, MAX_STATE_QUBITS, "a state vector")?;
        let mut amps = Vec::with_capacity(1 << n);
        for b in &other.amps {
            for a in &self.amps {
                amps.push(a * b);
            }
        }
        Ok(StateVector { n, amps })
    }

    /// Projection operator |v><v| as a density matrix.
    pub fn to_density(&self) -> Result<DensityMatrix> {
        check_qubit_count(self.n, MAX_DENSITY_QUBITS, "a density matrix")?;
        let dim = self.amps.len();
        let mat = Array2::from_shape_fn((dim, dim), |(i, j)| self.amps[i] * self.amps[j].conj());
        Ok(DensityMatrix {
            n: self.n,
            mat,
        })
    }

    /// Measures every qubit in the computational basis.
    pub fn measure_all(&self, seed: u64) -> MeasurementRecord {
        self.measure_all_rng(&mut StdRng::seed_from_u64(seed))
    }

    /// As `measure_all`, drawing from a caller-supplied generator.
    pub fn measure_all_rng(&self, rng: &mut impl Rng) -> MeasurementRecord {
        let r: f64 = rng.random();
        let mut acc = 0.0;
        let mut outcome = 0;
        let mut probability = 0.0;
        let mut found = false;
        for (i, a) in self.amps.iter().enumerate() {
            let p = a.norm_sqr();
            if p == 0.0 {
                continue;
            }
            acc += p;
            outcome = i;
            probability = p;
            if r < acc {
                found = true;
                break;
            }
        }
        // r can exceed the accumulated sum by rounding; fall back to the
        // last basis state that had any weight.
        let _ = found;
        let post_state = StateVector::basis_state(self.n, outcome)
            .expect("outcome index is always in range");
        MeasurementRecord {
            outcome,
            probability,
            post_state,
        }
    }

    /// Measures a single qubit; returns the bit and the renormalized
    /// projection of the state onto that result.
    pub fn measure_qubit(&self, qubit: usize, seed: u64) -> Result<(u8, StateVector)> {
        self.measure_qubit_rng(qubit, &mut StdRng::seed_from_u64(seed))
    }

    /// As `measure_qubit`, drawing from a caller-supplied generator.
    pub fn measure_qubit_rng(&self, qubit: usize, rng: &mut impl Rng) -> Result<(u8, StateVector)> {
        let p1 = self.qubit_one_probability(qubit)?;
        let r: f64 = rng.random();
        let bit = u8::from(r < p1);
        let (_, post) = self.project_qubit(qubit, bit)?;
        Ok((bit, post))
    }

    /// Probability that `qubit` reads 1.
    pub fn qubit_one_probability(&self, qubit: usize) -> Result<f64> {
        if qubit >= self.n {
            return Err(Error::QubitOutOfRange {
                qubit,
                n: self.n,
            });
        }
        let mask = 1usize << qubit;
        Ok(self
            .amps
            .iter()
            .enumerate()
            .filter(|(i, _)| i & mask != 0)
            .map(|(_, a)| a.norm_sqr())
            .sum())
    }

    /// Projects `qubit` onto `bit` and renormalizes. Returns the branch
    /// probability together with the post-measurement state.
    pub(crate) fn project_qubit(&self, qubit: usize, bit: u8) -> Result<(f64, StateVector)> {
        let p1 = self.qubit_one_probability(qubit)?;
        let p = if bit == 1 { p1 } else { 1.0 - p1 };
        if p < BRANCH_TOL {
            return Err(Error::ImpossibleBranch { probability: p });
        }
        let mask = 1usize << qubit;
        let scale = 1.0 / p.sqrt();
        let want = if bit == 1 { mask } else { 0 };
        let amps = self
            .amps
            .iter()
            .enumerate()
            .map(|(i, a)| {
                if i & mask == want {
                    a * scale
                } else {
                    Complex64::ZERO
                }
            })
            .collect();
        Ok((p, StateVector { n: self.n, amps }))
    }

    /// Drops qubits that are known to sit in definite basis states,
    /// returning the state of the remaining qubits (original order kept).
    pub(crate) fn extract_remaining(&self, fixed: &[(usize, u8)]) -> Result<StateVector> {
        let mut fixed_mask = 0usize;
        let mut fixed_bits = 0usize;
        for &(q, b) in fixed {
            if q >= self.n {
                return Err(Error::QubitOutOfRange { qubit: q, n: self.n });
            }
            if fixed_mask & (1 << q) != 0 {
                return Err(Error::DuplicateQubit { qubit: q });
            }
            fixed_mask |= 1 << q;
            fixed_bits |= (b as usize) << q;
        }
        let kept: Vec<usize> = (0..self.n).filter(|q| fixed_mask & (1 << q) == 0).collect();
        if kept.is_empty() {
            return Err(Error::InvalidPartition);
        }
        let m = kept.len();
        let mut amps = Vec::with_capacity(1 << m);
        for j in 0..1usize << m {
            let mut idx = fixed_bits;
            for (pos, &q) in kept.iter().enumerate() {
                idx |= ((j >> pos) & 1) << q;
            }
            amps.push(self.amps[idx]);
        }
        let norm = amps.iter().map(|c| c.norm_sqr()).sum::<f64>();
        if norm < BRANCH_TOL {
            return Err(Error::ImpossibleBranch { probability: norm });
        }
        let scale = 1.0 / norm.sqrt();
        for a in &mut amps {
            *a *= scale;
        }
        Ok(StateVector { n: m, amps })
    }
}

// Wire format for CLI output: {"n": int, "re": [...], "im": [...]}.
impl Serialize for StateVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("StateVector", 3)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("re", &self.amps.iter().map(|c| c.re).collect::<Vec<_>>())?;
        st.serialize_field("im", &self.amps.iter().map(|c| c.im).collect::<Vec<_>>())?;
        st.end()
    }
}

/// Outcome of a computational-basis measurement.
#[derive(Clone, Debug)]
pub struct MeasurementRecord {
    /// Basis index that was observed (a single bit for one-qubit measurements).
    pub outcome: usize,
    /// Probability the pre-measurement state assigned to this outcome.
    pub probability: f64,
    /// State after the collapse.
    pub post_state: StateVector,
}

impl MeasurementRecord {
    /// Bit of the outcome belonging to `qubit`.
    pub fn bit(&self, qubit: usize) -> u8 {
        ((self.outcome >> qubit) & 1) as u8
    }

    /// All outcome bits, qubit 0 first.
    pub fn bits(&self) -> Vec<u8> {
        (0..self.post_state.num_qubits())
            .map(|q| self.bit(q))
            .collect()
    }
}

/// Hermitian, trace-1, positive semidefinite matrix describing a pure or
/// mixed state.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityMatrix {
    n: usize,
    mat: Array2<Complex64>,
}

impl DensityMatrix {
    /// Validates Hermiticity, unit trace, and positive semidefiniteness.
    pub fn from_matrix(n: usize, mat: Array2<Complex64>) -> Result<Self> {
        check_qubit_count(n, MAX_DENSITY_QUBITS, "a density matrix")?;
        let dim = 1usize << n;
        if mat.nrows() != dim || mat.ncols() != dim {
            return Err(Error::InvalidDensity {
                reason: "matrix dimensions do not match the qubit count",
            });
        }
        let rho = DensityMatrix { n, mat };
        rho.check_invariants()?;
        Ok(rho)
    }

    pub(crate) fn from_matrix_unchecked(n: usize, mat: Array2<Complex64>) -> Self {
        debug_assert_eq!(mat.nrows(), 1 << n);
        DensityMatrix { n, mat }
    }

    /// I / 2^n.
    pub fn maximally_mixed(n: usize) -> Result<Self> {
        check_qubit_count(n, MAX_DENSITY_QUBITS, "a density matrix")?;
        let dim = 1usize << n;
        let p = Complex64::new(1.0 / dim as f64, 0.0);
        Ok(DensityMatrix {
            n,
            mat: Array2::from_diag_elem(dim, p),
        })
    }

    /// Classical mixture diag(p_0 .. p_{2^n - 1}).
    pub fn from_diagonal(n: usize, probs: &[f64]) -> Result<Self> {
        check_qubit_count(n, MAX_DENSITY_QUBITS, "a density matrix")?;
        let dim = 1usize << n;
        if probs.len() != dim {
            return Err(Error::InvalidDensity {
                reason: "diagonal length does not match the qubit count",
            });
        }
        let mut mat = Array2::zeros((dim, dim));
        for (i, &p) in probs.iter().enumerate() {
            mat[[i, i]] = Complex64::new(p, 0.0);
        }
        let rho = DensityMatrix { n, mat };
        rho.check_invariants()?;
        Ok(rho)
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.mat.nrows()
    }

    pub fn matrix(&self) -> &Array2<Complex64> {
        &self.mat
    }

    pub fn entry(&self, i: usize, j: usize) -> Complex64 {
        self.mat[[i, j]]
    }

    pub fn trace(&self) -> Complex64 {
        self.mat.diag().sum()
    }

    /// Tr(rho^2). 1 for pure states, 2^-n for the maximally mixed state.
    pub fn purity(&self) -> f64 {
        // Tr(rho^2) = sum |rho_ij|^2 because rho is Hermitian.
        self.mat.iter().map(|c| c.norm_sqr()).sum()
    }

    /// Real eigenvalue spectrum, ascending order not guaranteed.
    pub fn eigenvalues(&self) -> Vec<f64> {
        hermitian_eigenvalues(&self.mat)
    }

    /// Traces out every qubit not in `keep`. Kept qubits are compressed to
    /// positions 0..keep.len() in ascending order of their old index.
    pub fn partial_trace(&self, keep: &[usize]) -> Result<DensityMatrix> {
        let mut keep_sorted = keep.to_vec();
        keep_sorted.sort_unstable();
        keep_sorted.dedup();
        if keep_sorted.len() != keep.len() {
            return Err(Error::InvalidPartition);
        }
        if keep_sorted.is_empty() || keep_sorted.len() >= self.n {
            return Err(Error::InvalidPartition);
        }
        if let Some(&q) = keep_sorted.iter().find(|&&q| q >= self.n) {
            return Err(Error::QubitOutOfRange { qubit: q, n: self.n });
        }
        let traced: Vec<usize> = (0..self.n).filter(|q| !keep_sorted.contains(q)).collect();
        let ka = keep_sorted.len();
        let scatter = |bits: usize, positions: &[usize]| -> usize {
            positions
                .iter()
                .enumerate()
                .fold(0, |acc, (j, &p)| acc | (((bits >> j) & 1) << p))
        };
        let dim = 1usize << ka;
        let mut out = Array2::zeros((dim, dim));
        for a in 0..dim {
            let abase = scatter(a, &keep_sorted);
            for b in 0..dim {
                let bbase = scatter(b, &keep_sorted);
                let mut sum = Complex64::ZERO;
                for e in 0..1usize << traced.len() {
                    let ebits = scatter(e, &traced);
                    sum += self.mat[[abase | ebits, bbase | ebits]];
                }
                out[[a, b]] = sum;
            }
        }
        Ok(DensityMatrix {
            n: ka,
            mat: out,
        })
    }

    /// Errors unless the matrix is Hermitian, trace-1, and PSD within
    /// the crate tolerances.
    pub fn check_invariants(&self) -> Result<()> {
        let dim = self.dim();
        for i in 0..dim {
            for j in i..dim {
                let d = self.mat[[i, j]] - self.mat[[j, i]].conj();
                if d.norm() > ALG_TOL {
                    return Err(Error::InvalidDensity {
                        reason: "not Hermitian",
                    });
                }
            }
        }
        let tr = self.trace();
        if (tr.re - 1.0).abs() > ALG_TOL || tr.im.abs() > ALG_TOL {
            return Err(Error::InvalidDensity {
                reason: "trace is not 1",
            });
        }
        if self.eigenvalues().iter().any(|&l| l < -PSD_TOL) {
            return Err(Error::InvalidDensity {
                reason: "negative eigenvalue",
            });
        }
        Ok(())
    }
}

/// Eigenvalues of a Hermitian matrix.
pub(crate) fn hermitian_eigenvalues(mat: &Array2<Complex64>) -> Vec<f64> {
    let dim = mat.nrows();
    let m = DMatrix::from_fn(dim, dim, |r, c| mat[[r, c]]);
    m.symmetric_eigenvalues().iter().copied().collect()
}

fn check_qubit_count(n: usize, max: usize, what: &'static str) -> Result<()> {
    if n == 0 {
        return Err(Error::invalid("qubit count must be at least 1"));
    }
    if n > max {
        return Err(Error::TooManyQubits { n, max, what });
    }
    Ok(())
}
