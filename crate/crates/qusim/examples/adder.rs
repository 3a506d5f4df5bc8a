//! Classical logic inside a quantum register: Toffoli computes the
//! carry, cnot the sum, and the whole adder is its own kind of
//! reversible. Run on a superposed input it adds both cases at once.

use qusim::algorithms::{adder_circuit, uniform_superposition};
use qusim::qstate::StateVector;
use qusim::Result;

fn main() -> Result<()> {
    let adder = adder_circuit();
    println!("circuit source:\n{}", adder.render());

    println!("x y | sum carry");
    for x in 0..2usize {
        for y in 0..2usize {
            let out = adder.run(&StateVector::basis_state(3, x | (y << 1))?)?;
            let m = out.measure_all(0);
            println!("{x} {y} |  {}   {}", m.bit(1), m.bit(2));
        }
    }

    // all four (x, y) in superposition, carry qubit clear
    let xy = uniform_superposition(2)?;
    let input = xy.tensor(&StateVector::basis_state(1, 0)?)?;
    let out = adder.run(&input)?;
    println!("\nsuperposed input, all four sums in one pass:");
    for (i, a) in out.amplitudes().iter().enumerate() {
        if a.norm_sqr() > 1e-12 {
            let (x, s, c) = (i & 1, (i >> 1) & 1, (i >> 2) & 1);
            println!("  x={x} sum={s} carry={c}  amplitude {:+.4}", a.re);
        }
    }
    Ok(())
}
