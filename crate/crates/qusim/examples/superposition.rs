//! A Hadamard on every qubit turns |000> into the uniform
//! superposition; sampling it is a fair 8-sided die.

use qusim::algorithms::uniform_superposition;
use qusim::qstate::StateVector;
use qusim::{gates, Result};

fn main() -> Result<()> {
    let mut state = StateVector::basis_state(3, 0)?;
    let h = gates::hadamard();
    for q in 0..3 {
        state = gates::apply(&state, &h, &[q])?;
    }

    println!("amplitudes after H on each qubit:");
    for (i, a) in state.amplitudes().iter().enumerate() {
        println!("  index {i}: {:.6} (p = {:.4})", a.re, a.norm_sqr());
    }

    let direct = uniform_superposition(3)?;
    println!("fidelity with the direct construction: {}", state.fidelity(&direct)?);

    let mut counts = [0u32; 8];
    for seed in 0..4000 {
        counts[state.measure_all(seed).outcome] += 1;
    }
    println!("4000 measurements:");
    for (i, c) in counts.iter().enumerate() {
        println!("  {i}: {c}");
    }
    Ok(())
}
