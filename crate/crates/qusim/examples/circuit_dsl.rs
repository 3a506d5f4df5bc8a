//! The textual circuit language: parse a program, run it, invert it,
//! and see what a syntax error looks like. Circuits survive a
//! render/parse round trip byte for byte, so files written by one tool
//! are readable by another.

use qusim::circuit::Circuit;
use qusim::qstate::StateVector;
use qusim::Result;

const SOURCE: &str = "\
# half of a Bell pair, then a phase kick on the far qubit
qubits 2
h 0
cnot 0 1
c phase 0 1 theta=0.7853981633974483
";

fn main() -> Result<()> {
    let circuit = Circuit::parse(SOURCE)?;
    println!(
        "parsed {} ops on {} qubits",
        circuit.gate_count(),
        circuit.num_qubits()
    );

    let out = circuit.run(&StateVector::basis_state(2, 0)?)?;
    println!("\nstate after the program:");
    for (i, a) in out.amplitudes().iter().enumerate() {
        if a.norm_sqr() > 1e-12 {
            println!("  |{i:02b}>  {:+.6}{:+.6}i", a.re, a.im);
        }
    }

    // render emits the same language the parser reads
    println!("\nrender():\n{}", circuit.render());
    let reparsed = Circuit::parse(&circuit.render())?;
    assert_eq!(reparsed.render(), circuit.render());

    // the inverse reverses op order and daggers each gate in place
    let inv = circuit.inverse();
    println!("inverse():\n{}", inv.render());
    let back = inv.run(&out)?;
    println!(
        "inverse undoes the circuit: returned to |00> with fidelity {:.12}",
        back.fidelity(&StateVector::basis_state(2, 0)?)?
    );

    // errors carry position information
    let broken = "qubits 2\nh 0\ncnot 0 5\n";
    match Circuit::parse(broken) {
        Err(e) => println!("\nbad program rejected: {e}"),
        Ok(_) => unreachable!("target out of range must not parse"),
    }
    Ok(())
}
