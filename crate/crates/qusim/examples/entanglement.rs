//! H then cnot entangles two qubits. Each half alone looks maximally
//! random (one full bit of entropy) while the pair is pure, and
//! measuring one half fixes the other.

use qusim::infotheory::{entanglement_entropy, von_neumann_entropy};
use qusim::qstate::StateVector;
use qusim::{gates, Result};

fn main() -> Result<()> {
    let mut pair = StateVector::basis_state(2, 0)?;
    pair = gates::apply(&pair, &gates::hadamard(), &[0])?;
    pair = gates::apply(&pair, &gates::cnot(), &[0, 1])?;

    println!("state: (|00> + |11>)/sqrt 2");
    let rho = pair.to_density()?;
    let half = rho.partial_trace(&[0])?;
    println!("joint entropy   S(AB) = {:.6} bits", von_neumann_entropy(&rho));
    println!("half entropy    S(A)  = {:.6} bits", von_neumann_entropy(&half));
    println!("entanglement  E(A:B)  = {:.6} bits", entanglement_entropy(&pair, &[0])?);

    println!("\nmeasuring qubit 0 collapses qubit 1 to match:");
    for seed in 0..6 {
        let (bit, rest) = pair.measure_qubit(0, seed)?;
        let partner = rest.qubit_one_probability(1)?;
        println!("  got {bit}; partner P(1) = {partner}");
    }
    Ok(())
}
