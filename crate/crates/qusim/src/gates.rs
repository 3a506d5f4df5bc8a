//! Gate matrices and the kernel that applies a k-qubit gate to an n-qubit
//! state in O(2^n * 2^k) time without building the 2^n x 2^n operator.

use ndarray::Array2;
use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::qstate::{StateVector, ALG_TOL};

/// Unitary on `arity` qubits, stored dense.
#[derive(Clone, Debug)]
pub struct Gate {
    label: String,
    matrix: Array2<Complex64>,
}

/// Angles (radians) for the general single-qubit unitary.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GateParams {
    pub theta: f64,
    pub phi: f64,
    pub lam: f64,
}

impl GateParams {
    pub fn new(theta: f64, phi: f64, lam: f64) -> Self {
        GateParams { theta, phi, lam }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

impl Pauli {
    pub fn matrix(self) -> Array2<Complex64> {
        let z = Complex64::ZERO;
        let one = Complex64::ONE;
        let i = Complex64::I;
        match self {
            Pauli::I => Array2::from_shape_vec((2, 2), vec![one, z, z, one]),
            Pauli::X => Array2::from_shape_vec((2, 2), vec![z, one, one, z]),
            Pauli::Y => Array2::from_shape_vec((2, 2), vec![z, -i, i, z]),
            Pauli::Z => Array2::from_shape_vec((2, 2), vec![one, z, z, -one]),
        }
        .expect("2x2 shape")
    }

    pub fn label(self) -> &'static str {
        match self {
            Pauli::I => "i",
            Pauli::X => "x",
            Pauli::Y => "y",
            Pauli::Z => "z",
        }
    }
}

impl Gate {
    /// Wraps a matrix after checking it is square over qubits and unitary.
    pub fn new(label: impl Into<String>, matrix: Array2<Complex64>) -> Result<Self> {
        let label = label.into();
        let dim = matrix.nrows();
        if dim == 0 || matrix.ncols() != dim || !dim.is_power_of_two() {
            return Err(Error::NotUnitary { label });
        }
        let gate = Gate { label, matrix };
        if !gate.is_unitary(ALG_TOL) {
            return Err(Error::NotUnitary { label: gate.label });
        }
        Ok(gate)
    }

    pub(crate) fn from_matrix_unchecked(label: impl Into<String>, matrix: Array2<Complex64>) -> Self {
        Gate {
            label: label.into(),
            matrix,
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn matrix(&self) -> &Array2<Complex64> {
        &self.matrix
    }

    /// Number of qubits the gate acts on.
    pub fn arity(&self) -> usize {
        self.matrix.nrows().trailing_zeros() as usize
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    /// U dagger U = I within `tol` elementwise.
    pub fn is_unitary(&self, tol: f64) -> bool {
        let dim = self.dim();
        for i in 0..dim {
            for j in 0..dim {
                let mut acc = Complex64::ZERO;
                for r in 0..dim {
                    acc += self.matrix[[r, i]].conj() * self.matrix[[r, j]];
                }
                let expect = if i == j { Complex64::ONE } else { Complex64::ZERO };
                if (acc - expect).norm() > tol {
                    return false;
                }
            }
        }
        true
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> Gate {
        let dim = self.dim();
        let mat = Array2::from_shape_fn((dim, dim), |(i, j)| self.matrix[[j, i]].conj());
        Gate {
            label: format!("{}\u{2020}", self.label),
            matrix: mat,
        }
    }

    /// True iff the matrix is a 0/1 permutation matrix within 1e-10, i.e.
    /// the gate is a classical reversible operation on basis states.
    pub fn is_classical_reversible(&self) -> bool {
        let dim = self.dim();
        let mut row_ones = vec![0usize; dim];
        let mut col_ones = vec![0usize; dim];
        for ((i, j), &v) in self.matrix.indexed_iter() {
            if (v - Complex64::ONE).norm() <= ALG_TOL {
                row_ones[i] += 1;
                col_ones[j] += 1;
            } else if v.norm() > ALG_TOL {
                return false;
            }
        }
        row_ones.iter().all(|&c| c == 1) && col_ones.iter().all(|&c| c == 1)
    }
}

/// H = (1/sqrt 2) [[1,1],[1,-1]].
pub fn hadamard() -> Gate {
    let h = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
    let mat = Array2::from_shape_vec((2, 2), vec![h, h, h, -h]).expect("2x2 shape");
    Gate::from_matrix_unchecked("h", mat)
}

/// Single-qubit identity.
pub fn identity() -> Gate {
    Gate::from_matrix_unchecked("id", Pauli::I.matrix())
}

pub fn pauli(which: Pauli) -> Gate {
    Gate::from_matrix_unchecked(which.label(), which.matrix())
}

/// diag(1, e^{i theta}).
pub fn phase(theta: f64) -> Gate {
    let mut mat = Array2::zeros((2, 2));
    mat[[0, 0]] = Complex64::ONE;
    mat[[1, 1]] = Complex64::from_polar(1.0, theta);
    Gate::from_matrix_unchecked("phase", mat)
}

/// General single-qubit unitary
/// [[cos(t/2), -e^{i lam} sin(t/2)], [e^{i phi} sin(t/2), e^{i(phi+lam)} cos(t/2)]];
/// covers U(2) up to an unobservable global phase.
pub fn single_qubit_u(p: GateParams) -> Gate {
    let (ct, st) = ((p.theta / 2.0).cos(), (p.theta / 2.0).sin());
    let mut mat = Array2::zeros((2, 2));
    mat[[0, 0]] = Complex64::new(ct, 0.0);
    mat[[0, 1]] = -Complex64::from_polar(st, p.lam);
    mat[[1, 0]] = Complex64::from_polar(st, p.phi);
    mat[[1, 1]] = Complex64::from_polar(ct, p.phi + p.lam);
    Gate::from_matrix_unchecked("u", mat)
}

/// Control on local qubit 0, target on local qubit 1.
pub fn cnot() -> Gate {
    let mut g = controlled(&pauli(Pauli::X), 1);
    g.label = "cnot".into();
    g
}

/// Controls on local qubits 0 and 1, target on local qubit 2.
pub fn toffoli() -> Gate {
    let mut g = controlled(&pauli(Pauli::X), 2);
    g.label = "ccnot".into();
    g
}

/// Exchange of two qubits, composed from three cnots.
pub fn swap() -> Gate {
    let a = cnot().matrix;
    // control on local qubit 1 instead
    let mut b = Array2::zeros((4, 4));
    b[[0, 0]] = Complex64::ONE;
    b[[1, 1]] = Complex64::ONE;
    b[[2, 3]] = Complex64::ONE;
    b[[3, 2]] = Complex64::ONE;
    let mat = a.dot(&b).dot(&a);
    Gate::from_matrix_unchecked("swap", mat)
}

/// Adds `num_controls` control qubits to `g`. Controls occupy the low
/// local indices 0..num_controls, the original gate the remaining ones;
/// the result acts as identity unless every control bit is 1.
pub fn controlled(g: &Gate, num_controls: usize) -> Gate {
    assert!(num_controls >= 1, "at least one control");
    let gdim = g.dim();
    let dim = gdim << num_controls;
    let mask = (1usize << num_controls) - 1;
    let mut mat = Array2::zeros((dim, dim));
    for col in 0..dim {
        if col & mask == mask {
            let gcol = col >> num_controls;
            for grow in 0..gdim {
                mat[[(grow << num_controls) | mask, col]] = g.matrix[[grow, gcol]];
            }
        } else {
            mat[[col, col]] = Complex64::ONE;
        }
    }
    Gate {
        label: format!("{}{}", "c".repeat(num_controls), g.label),
        matrix: mat,
    }
}

/// Applies `g` to the listed qubits: local qubit j of the gate binds to
/// `targets[j]`. The state is never expanded to a dense operator.
pub fn apply(state: &StateVector, g: &Gate, targets: &[usize]) -> Result<StateVector> {
    let n = state.num_qubits();
    check_targets(n, g.arity(), targets)?;
    let mut out = state.clone();
    apply_mut(out.amplitudes_mut(), &g.matrix, targets);
    Ok(out)
}

pub(crate) fn check_targets(n: usize, arity: usize, targets: &[usize]) -> Result<()> {
    if targets.len() != arity {
        return Err(Error::ArityMismatch {
            expected: arity,
            got: targets.len(),
        });
    }
    let mut seen = 0usize;
    for &t in targets {
        if t >= n {
            return Err(Error::QubitOutOfRange { qubit: t, n });
        }
        if seen & (1 << t) != 0 {
            return Err(Error::DuplicateQubit { qubit: t });
        }
        seen |= 1 << t;
    }
    Ok(())
}

/// In-place kernel. One pass over all 2^n amplitudes; each group of 2^k
/// entries sharing the non-target bits is mixed through the gate matrix.
pub(crate) fn apply_mut(amps: &mut [Complex64], matrix: &Array2<Complex64>, targets: &[usize]) {
    let k = targets.len();
    debug_assert_eq!(matrix.nrows(), 1 << k);

    if k == 1 {
        let stride = 1usize << targets[0];
        let m00 = matrix[[0, 0]];
        let m01 = matrix[[0, 1]];
        let m10 = matrix[[1, 0]];
        let m11 = matrix[[1, 1]];
        let mut base = 0;
        while base < amps.len() {
            for i in base..base + stride {
                let a0 = amps[i];
                let a1 = amps[i + stride];
                amps[i] = m00 * a0 + m01 * a1;
                amps[i + stride] = m10 * a0 + m11 * a1;
            }
            base += stride << 1;
        }
        return;
    }

    let n = amps.len().trailing_zeros() as usize;
    let dim = 1usize << k;
    let mut sorted = targets.to_vec();
    sorted.sort_unstable();
    // offsets[h] places local basis state h onto the target qubits
    let offsets: Vec<usize> = (0..dim)
        .map(|h| {
            targets
                .iter()
                .enumerate()
                .fold(0, |acc, (j, &t)| acc | (((h >> j) & 1) << t))
        })
        .collect();
    let flat: Vec<Complex64> = matrix.iter().copied().collect();
    let mut scratch = vec![Complex64::ZERO; dim];
    for group in 0..1usize << (n - k) {
        // spread the group index over the non-target bit positions
        let mut base = group;
        for &t in &sorted {
            base = ((base >> t) << (t + 1)) | (base & ((1 << t) - 1));
        }
        for (h, s) in scratch.iter_mut().enumerate() {
            *s = amps[base | offsets[h]];
        }
        for (r, &off) in offsets.iter().enumerate() {
            let row = &flat[r * dim..(r + 1) * dim];
            let mut acc = Complex64::ZERO;
            for (h, &s) in scratch.iter().enumerate() {
                acc += row[h] * s;
            }
            amps[base | off] = acc;
        }
    }
}

/// What a hypothetical unitary copier would need from a pair of states.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct CloningReport {
    /// |<u|v>|.
    pub overlap_magnitude: f64,
    /// A single unitary can copy both states only when they are identical
    /// or orthogonal.
    pub clonable: bool,
    /// |<u|v> - <u|v>^2|, the gap in the copier consistency condition.
    pub consistency_residual: f64,
}

/// Checks whether one unitary could copy both `u` and `v`: the copier
/// forces <u|v> = <u|v>^2, which only 0 and 1 satisfy.
pub fn verify_no_cloning(u: &StateVector, v: &StateVector) -> Result<CloningReport> {
    if u.num_qubits() != 1 || v.num_qubits() != 1 {
        return Err(Error::invalid("cloning check is defined for single-qubit states"));
    }
    let ip = u.inner_product(v)?;
    let mag = ip.norm();
    let clonable = mag <= ALG_TOL || (mag - 1.0).abs() <= ALG_TOL;
    Ok(CloningReport {
        overlap_magnitude: mag,
        clonable,
        consistency_residual: (ip - ip * ip).norm(),
    })
}

/// True when a = e^{i alpha} b for some real alpha, within `tol`
/// elementwise. alpha is read off the largest entry of b.
pub fn equal_up_to_phase(a: &Gate, b: &Gate, tol: f64) -> bool {
    if a.dim() != b.dim() {
        return false;
    }
    let mut pivot = None;
    let mut best = 0.0;
    for (idx, v) in b.matrix.indexed_iter() {
        if v.norm() > best {
            best = v.norm();
            pivot = Some(idx);
        }
    }
    let Some(pivot) = pivot else { return false };
    if a.matrix[pivot].norm() <= tol && best <= tol {
        return true;
    }
    let ratio = a.matrix[pivot] / b.matrix[pivot];
    let phase = ratio / ratio.norm();
    a.matrix
        .iter()
        .zip(b.matrix.iter())
        .all(|(x, y)| (x - phase * y).norm() <= tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qstate::StateVector;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};
    use std::f64::consts::{FRAC_1_SQRT_2, PI};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn plus() -> StateVector {
        StateVector::from_amplitudes(1, vec![c(FRAC_1_SQRT_2, 0.0), c(FRAC_1_SQRT_2, 0.0)]).unwrap()
    }

    fn minus() -> StateVector {
        StateVector::from_amplitudes(1, vec![c(FRAC_1_SQRT_2, 0.0), c(-FRAC_1_SQRT_2, 0.0)]).unwrap()
    }

    fn assert_states_close(a: &StateVector, b: &StateVector, tol: f64) {
        assert_eq!(a.num_qubits(), b.num_qubits());
        for (x, y) in a.amplitudes().iter().zip(b.amplitudes()) {
            assert!((x - y).norm() < tol, "{x} vs {y}");
        }
    }

    #[test]
    fn hadamard_rotates_the_basis() {
        let h = hadamard();
        let zero = StateVector::basis_state(1, 0).unwrap();
        let one = StateVector::basis_state(1, 1).unwrap();
        assert_states_close(&apply(&zero, &h, &[0]).unwrap(), &plus(), 1e-15);
        assert_states_close(&apply(&one, &h, &[0]).unwrap(), &minus(), 1e-15);
        let twice = apply(&apply(&plus(), &h, &[0]).unwrap(), &h, &[0]).unwrap();
        assert_states_close(&twice, &plus(), 1e-15);
    }

    #[test]
    fn hadamard_is_the_average_of_x_and_z() {
        let h = hadamard();
        let x = pauli(Pauli::X);
        let z = pauli(Pauli::Z);
        for i in 0..2 {
            for j in 0..2 {
                let want = (x.matrix()[[i, j]] + z.matrix()[[i, j]]) * FRAC_1_SQRT_2;
                assert!((h.matrix()[[i, j]] - want).norm() < 1e-15);
            }
        }
    }

    #[test]
    fn general_unitary_hits_the_named_gates() {
        let id = single_qubit_u(GateParams::new(0.0, 0.0, 0.0));
        assert!(equal_up_to_phase(&id, &identity(), 1e-10));
        let x = single_qubit_u(GateParams::new(PI, 0.0, PI));
        assert!(equal_up_to_phase(&x, &pauli(Pauli::X), 1e-10));
    }

    #[test]
    fn general_unitary_is_unitary_for_random_angles() {
        let mut rng = StdRng::seed_from_u64(2024);
        for _ in 0..1000 {
            let p = GateParams::new(
                rng.random_range(-10.0..10.0),
                rng.random_range(-10.0..10.0),
                rng.random_range(-10.0..10.0),
            );
            assert!(single_qubit_u(p).is_unitary(1e-10));
        }
    }

    #[test]
    fn pauli_actions() {
        let zero = StateVector::basis_state(1, 0).unwrap();
        let one = StateVector::basis_state(1, 1).unwrap();
        let flipped = apply(&zero, &pauli(Pauli::X), &[0]).unwrap();
        assert_states_close(&flipped, &one, 1e-15);
        let z_plus = apply(&plus(), &pauli(Pauli::Z), &[0]).unwrap();
        assert_states_close(&z_plus, &minus(), 1e-15);
    }

    #[test]
    fn pauli_xy_anticommute() {
        let x = pauli(Pauli::X).matrix().clone();
        let y = pauli(Pauli::Y).matrix().clone();
        let prod = x.dot(&y).dot(&x).dot(&y);
        for i in 0..2 {
            for j in 0..2 {
                let want = if i == j { c(-1.0, 0.0) } else { c(0.0, 0.0) };
                assert!((prod[[i, j]] - want).norm() < 1e-15);
            }
        }
    }

    #[test]
    fn cnot_entangles_a_superposed_control() {
        let a = c(0.6, 0.0);
        let b = c(0.0, 0.8);
        let psi = StateVector::from_amplitudes(1, vec![a, b]).unwrap();
        let two = psi.tensor(&StateVector::basis_state(1, 0).unwrap()).unwrap();
        let out = apply(&two, &cnot(), &[0, 1]).unwrap();
        assert!((out.amplitude(0).unwrap() - a).norm() < 1e-15);
        assert!((out.amplitude(3).unwrap() - b).norm() < 1e-15);
        assert!(out.amplitude(1).unwrap().norm() < 1e-15);
        assert!(out.amplitude(2).unwrap().norm() < 1e-15);
    }

    #[test]
    fn cnot_kicks_phase_back_onto_the_control() {
        let one = StateVector::basis_state(1, 1).unwrap();
        let s = one.tensor(&minus()).unwrap();
        let out = apply(&s, &cnot(), &[0, 1]).unwrap();
        for (x, y) in out.amplitudes().iter().zip(s.amplitudes()) {
            assert!((x + y).norm() < 1e-12, "expected global sign flip");
        }
    }

    #[test]
    fn toffoli_truth_table() {
        let t = toffoli();
        for input in 0..8usize {
            let s = StateVector::basis_state(3, input).unwrap();
            let out = apply(&s, &t, &[0, 1, 2]).unwrap();
            let expect = if input & 3 == 3 { input ^ 4 } else { input };
            assert!((out.amplitude(expect).unwrap() - c(1.0, 0.0)).norm() < 1e-15);
        }
    }

    #[test]
    fn hadamard_then_cnot_builds_a_bell_pair() {
        let s = StateVector::basis_state(2, 0).unwrap();
        let s = apply(&s, &hadamard(), &[0]).unwrap();
        let s = apply(&s, &cnot(), &[0, 1]).unwrap();
        assert!((s.amplitude(0).unwrap() - c(FRAC_1_SQRT_2, 0.0)).norm() < 1e-12);
        assert!((s.amplitude(3).unwrap() - c(FRAC_1_SQRT_2, 0.0)).norm() < 1e-12);
        assert!(s.amplitude(1).unwrap().norm() < 1e-15);
        assert!(s.amplitude(2).unwrap().norm() < 1e-15);
    }

    #[test]
    fn identity_application_is_a_no_op() {
        let mut rng = StdRng::seed_from_u64(5);
        for n in 1..=4 {
            let v = StateVector::random(n, &mut rng).unwrap();
            for q in 0..n {
                let out = apply(&v, &identity(), &[q]).unwrap();
                assert_states_close(&out, &v, 1e-15);
            }
        }
    }

    #[test]
    fn apply_validates_targets() {
        let v = StateVector::basis_state(2, 0).unwrap();
        assert!(matches!(
            apply(&v, &cnot(), &[0]),
            Err(Error::ArityMismatch { expected: 2, got: 1 })
        ));
        assert!(matches!(
            apply(&v, &cnot(), &[0, 2]),
            Err(Error::QubitOutOfRange { qubit: 2, n: 2 })
        ));
        assert!(matches!(
            apply(&v, &cnot(), &[1, 1]),
            Err(Error::DuplicateQubit { qubit: 1 })
        ));
    }

    #[test]
    fn apply_accepts_any_target_order() {
        // cnot with control on qubit 1, target on qubit 0
        let s = StateVector::basis_state(2, 2).unwrap();
        let out = apply(&s, &cnot(), &[1, 0]).unwrap();
        assert!((out.amplitude(3).unwrap() - c(1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn controlled_builds_the_named_multiqubit_gates() {
        let cx = controlled(&pauli(Pauli::X), 1);
        assert_eq!(cx.matrix(), cnot().matrix());
        let ccx = controlled(&pauli(Pauli::X), 2);
        assert_eq!(ccx.matrix(), toffoli().matrix());

        let theta = 0.7;
        let cp = controlled(&phase(theta), 1);
        let s = StateVector::basis_state(2, 3).unwrap();
        let out = apply(&s, &cp, &[0, 1]).unwrap();
        assert!((out.amplitude(3).unwrap() - Complex64::from_polar(1.0, theta)).norm() < 1e-12);
    }

    #[test]
    fn swap_exchanges_qubits() {
        let s = StateVector::basis_state(2, 1).unwrap();
        let out = apply(&s, &swap(), &[0, 1]).unwrap();
        assert!((out.amplitude(2).unwrap() - c(1.0, 0.0)).norm() < 1e-15);
        assert!(swap().is_classical_reversible());
    }

    #[test]
    fn classical_reversibility_distinguishes_permutations() {
        assert!(cnot().is_classical_reversible());
        assert!(toffoli().is_classical_reversible());
        assert!(pauli(Pauli::X).is_classical_reversible());
        assert!(!hadamard().is_classical_reversible());
        assert!(!phase(0.3).is_classical_reversible());
    }

    #[test]
    fn dagger_rules() {
        assert!(equal_up_to_phase(&hadamard().dagger(), &hadamard(), 1e-12));
        let theta = 1.234;
        let pd = phase(theta).dagger();
        for i in 0..2 {
            for j in 0..2 {
                assert!((pd.matrix()[[i, j]] - phase(-theta).matrix()[[i, j]]).norm() < 1e-15);
            }
        }
        let mut rng = StdRng::seed_from_u64(77);
        for _ in 0..50 {
            let g = single_qubit_u(GateParams::new(
                rng.random_range(-6.0..6.0),
                rng.random_range(-6.0..6.0),
                rng.random_range(-6.0..6.0),
            ));
            let gd = g.dagger();
            let prod = gd.matrix().dot(g.matrix());
            for i in 0..2 {
                for j in 0..2 {
                    let want = if i == j { Complex64::ONE } else { Complex64::ZERO };
                    assert!((prod[[i, j]] - want).norm() < 1e-10);
                }
            }
            let back = gd.dagger();
            for (x, y) in back.matrix().iter().zip(g.matrix().iter()) {
                assert!((x - y).norm() < 1e-15);
            }
        }
    }

    #[test]
    fn named_gates_are_self_inverse() {
        for g in [
            hadamard(),
            pauli(Pauli::X),
            pauli(Pauli::Y),
            pauli(Pauli::Z),
            cnot(),
            toffoli(),
        ] {
            let sq = g.matrix().dot(g.matrix());
            for i in 0..g.dim() {
                for j in 0..g.dim() {
                    let want = if i == j { Complex64::ONE } else { Complex64::ZERO };
                    assert!((sq[[i, j]] - want).norm() < 1e-10, "{} squared", g.label());
                }
            }
        }
    }

    #[test]
    fn every_builtin_is_unitary() {
        for g in [
            hadamard(),
            identity(),
            pauli(Pauli::X),
            pauli(Pauli::Y),
            pauli(Pauli::Z),
            phase(0.4),
            single_qubit_u(GateParams::new(1.0, 2.0, 3.0)),
            cnot(),
            toffoli(),
            swap(),
        ] {
            assert!(g.is_unitary(1e-10), "{}", g.label());
        }
    }

    #[test]
    fn gate_constructor_rejects_non_unitary_input() {
        let mut m = Array2::zeros((2, 2));
        m[[0, 0]] = c(1.0, 0.0);
        m[[1, 1]] = c(2.0, 0.0);
        assert!(matches!(Gate::new("bad", m), Err(Error::NotUnitary { .. })));
    }

    #[test]
    fn cloning_verdicts() {
        let zero = StateVector::basis_state(1, 0).unwrap();
        let one = StateVector::basis_state(1, 1).unwrap();
        let r = verify_no_cloning(&zero, &one).unwrap();
        assert!(r.clonable && r.overlap_magnitude < 1e-12);
        let r = verify_no_cloning(&zero, &zero).unwrap();
        assert!(r.clonable && (r.overlap_magnitude - 1.0).abs() < 1e-12);
        let r = verify_no_cloning(&zero, &plus()).unwrap();
        assert!(!r.clonable);
        assert!((r.overlap_magnitude - FRAC_1_SQRT_2).abs() < 1e-12);
        assert!(r.consistency_residual > 0.2);
    }

    #[test]
    fn norm_is_preserved_by_application() {
        let mut rng = StdRng::seed_from_u64(12);
        let v = StateVector::random(4, &mut rng).unwrap();
        let mut s = v;
        for q in 0..4 {
            s = apply(&s, &hadamard(), &[q]).unwrap();
            s = apply(&s, &phase(0.31 * (q + 1) as f64), &[q]).unwrap();
        }
        s = apply(&s, &toffoli(), &[3, 1, 0]).unwrap();
        assert!((s.norm() - 1.0).abs() < 1e-10);
    }
}
