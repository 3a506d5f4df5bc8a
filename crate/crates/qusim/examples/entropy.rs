//! Classical and quantum information measures side by side: Shannon
//! entropy and what it says about compression, mutual information
//! through a noisy bit channel, and the von Neumann entropy that tells
//! pure, mixed, and entangled states apart.

use ndarray::array;
use qusim::algorithms::{bell_pair, BellResource};
use qusim::infotheory::{
    bsc_capacity, compression_limit, entanglement_entropy, mutual_information, shannon_entropy,
    von_neumann_entropy, JointDist, ProbDist,
};
use qusim::qstate::{DensityMatrix, StateVector};
use qusim::Result;

fn main() -> Result<()> {
    println!("Shannon entropy in bits:");
    for (label, probs) in [
        ("fair coin        ", vec![0.5, 0.5]),
        ("loaded coin 9:1  ", vec![0.9, 0.1]),
        ("fair 8-sided die ", vec![0.125; 8]),
        ("certain outcome  ", vec![1.0]),
    ] {
        let d = ProbDist::new(probs)?;
        println!("  {label} H = {:.4}", shannon_entropy(&d));
    }

    let skewed = ProbDist::new(vec![0.7, 0.15, 0.1, 0.05])?;
    let h = shannon_entropy(&skewed);
    println!(
        "\na four-symbol source at H = {h:.4} bits/symbol compresses\n\
         1000 draws into about {:.0} bits, not the raw 2000",
        compression_limit(&skewed, 1000)
    );

    // push a fair bit through a binary symmetric channel, p = 0.11
    let p = 0.11;
    let joint = JointDist::new(array![
        [0.5 * (1.0 - p), 0.5 * p],
        [0.5 * p, 0.5 * (1.0 - p)],
    ])?;
    println!(
        "\nBSC at crossover {p}: I(X;Y) = {:.6} bits, channel capacity {:.6}",
        mutual_information(&joint),
        bsc_capacity(p)?
    );
    println!("they agree because the uniform input is the capacity achiever.");

    // independent variables share nothing
    let x = ProbDist::new(vec![0.3, 0.7])?;
    let y = ProbDist::uniform(4)?;
    println!(
        "independent X, Y: I(X;Y) = {:.1e}",
        mutual_information(&JointDist::product(&x, &y)).abs()
    );

    println!("\nvon Neumann entropy:");
    let pure = StateVector::basis_state(1, 0)?.to_density()?;
    println!("  pure state        S = {:.4}", von_neumann_entropy(&pure));
    let mixed = DensityMatrix::from_diagonal(1, &[0.5, 0.5])?;
    println!("  maximally mixed   S = {:.4}", von_neumann_entropy(&mixed));
    let tilted = DensityMatrix::from_diagonal(2, &[0.7, 0.1, 0.1, 0.1])?;
    println!("  2-qubit, skewed   S = {:.4}", von_neumann_entropy(&tilted));

    // entanglement across a cut: E = S(A) + S(B) - S(AB)
    let bell = bell_pair(BellResource::PhiPlus);
    let rho = bell.to_density()?;
    println!(
        "\nBell pair: S(AB) = {:.4}, S(A) = {:.4}, E(A:B) = {:.4}",
        von_neumann_entropy(&rho),
        von_neumann_entropy(&rho.partial_trace(&[0])?),
        entanglement_entropy(&bell, &[0])?
    );
    println!("the whole is certain while each half is a coin toss; classically");
    println!("S(A) can never exceed S(AB). The same cut of a product state:");
    let product = StateVector::basis_state(2, 2)?;
    println!(
        "  |10>: E(A:B) = {:.4}",
        entanglement_entropy(&product, &[0])?
    );
    Ok(())
}
