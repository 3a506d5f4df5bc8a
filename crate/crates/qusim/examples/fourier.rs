//! The quantum Fourier transform as a circuit: n Hadamards, a ladder of
//! controlled phase rotations, and a qubit-order reversal. Gate count
//! grows quadratically while the transformed space doubles per qubit.
//!
//! Fed a computational basis state, the output is completely
//! unentangled: each qubit carries one binary digit of the input phase.

use qusim::algorithms::qft_circuit;
use qusim::infotheory::entanglement_entropy;
use qusim::qstate::StateVector;
use qusim::Result;

fn main() -> Result<()> {
    println!("gate counts: ");
    for n in 1..=12 {
        print!("n={n}:{} ", qft_circuit(n)?.gate_count());
    }
    println!("\n");

    let n = 4;
    let circuit = qft_circuit(n)?;
    let x = 11;
    let out = circuit.run(&StateVector::basis_state(n, x)?)?;

    println!("QFT of |{x}> on {n} qubits; amplitudes have equal weight");
    println!("and phase 2 pi {x} y / 16 at index y:");
    for (y, a) in out.amplitudes().iter().enumerate().take(6) {
        println!("  y={y}: {:+.4}{:+.4}i  (phase {:+.4} rad)", a.re, a.im, a.arg());
    }
    println!("  ...");

    println!("\nsingle-qubit entanglement entropies of the output:");
    for q in 0..n {
        println!("  qubit {q}: {:.2e} bits", entanglement_entropy(&out, &[q])?);
    }
    println!("all zero: the output factorizes into a product state.");
    Ok(())
}
