//! Amplitude amplification: flip the sign of the marked amplitude,
//! invert everything about the average, repeat. The marked amplitude
//! climbs as sin((2k+1) theta) and peaks near a quarter turn.

use qusim::algorithms::{grover_iterations, grover_search, grover_state, GroverOracle};
use qusim::Result;

fn main() -> Result<()> {
    let n = 8;
    let marked = 200;
    let oracle = GroverOracle::single(n, marked)?;
    let best = oracle.recommended_iterations();
    println!(
        "searching {} items for index {marked}; recommended iterations: {best}",
        1 << n
    );

    println!("marked-state probability as iterations accumulate:");
    for k in 0..=2 * best {
        let p = grover_state(&oracle, k)?.probabilities()[marked];
        let bar = "#".repeat((60.0 * p) as usize);
        let tag = if k == best { " <- stop here" } else { "" };
        println!("  k={k:2}  p={p:.4}  {bar}{tag}");
    }
    println!("overshooting rotates past the target and the probability falls.");

    let mut hits = 0;
    for seed in 0..200 {
        if grover_search(&oracle, seed)? == marked {
            hits += 1;
        }
    }
    println!("\n200 seeded searches: {hits} hits");
    println!(
        "formula count for N = 2^20: {} iterations",
        grover_iterations(1 << 20)?
    );
    Ok(())
}
