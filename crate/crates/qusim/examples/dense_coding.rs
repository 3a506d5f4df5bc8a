//! Two classical bits ride on one transmitted qubit: the sender applies
//! one of {I, X, Z, XZ} to their half of an entangled pair, and the
//! receiver's Bell-basis readout recovers both bits. Works over the
//! (|00> + |11>)/sqrt 2 pair and over the spin singlet.

use qusim::algorithms::{dense_code, dense_code_with, BellResource};
use qusim::Result;

fn main() -> Result<()> {
    println!("resource: (|00> + |11>)/sqrt 2");
    for b1 in 0..2 {
        for b2 in 0..2 {
            let got = dense_code((b1, b2), 7)?;
            println!("  sent ({b1},{b2}) -> received ({},{})", got.0, got.1);
        }
    }

    println!("resource: singlet (|01> - |10>)/sqrt 2");
    for b1 in 0..2 {
        for b2 in 0..2 {
            let got = dense_code_with((b1, b2), BellResource::Singlet, 7)?;
            println!("  sent ({b1},{b2}) -> received ({},{})", got.0, got.1);
        }
    }

    println!("teleportation spends 2 bits + a pair to move 1 qubit;");
    println!("dense coding spends 1 qubit + a pair to move 2 bits.");
    Ok(())
}
