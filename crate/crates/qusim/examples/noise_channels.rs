//! Open-system evolution on density matrices: the four Pauli channels,
//! what they do to coherences and populations, and the ballpark
//! decoherence clock they race against.

use num_complex::Complex64;
use qusim::noise::{apply_channel, decoherence_timescale, NoiseChannel};
use qusim::qstate::{DensityMatrix, StateVector};
use qusim::Result;
use std::f64::consts::FRAC_1_SQRT_2;

fn plus_density() -> Result<DensityMatrix> {
    let h = Complex64::new(FRAC_1_SQRT_2, 0.0);
    StateVector::from_amplitudes(1, vec![h, h])?.to_density()
}

fn main() -> Result<()> {
    // dephasing eats the off-diagonal terms and nothing else
    println!("dephasing of |+><+|, off-diagonal magnitude vs gamma:");
    for k in 0..=10 {
        let gamma = k as f64 / 10.0;
        let rho = apply_channel(&plus_density()?, &NoiseChannel::dephasing(gamma)?, 0)?;
        let coherence = rho.entry(0, 1).norm();
        let bar = "#".repeat((coherence * 40.0).round() as usize);
        println!("  gamma={gamma:.1}  |rho01|={coherence:.3}  {bar}");
    }
    println!("populations never move; the state just forgets its phase.\n");

    // bit flip exchanges populations instead
    let zero = StateVector::basis_state(1, 0)?.to_density()?;
    let flipped = apply_channel(&zero, &NoiseChannel::bit_flip(0.3)?, 0)?;
    println!(
        "bit flip p=0.3 on |0><0|: populations ({:.2}, {:.2})",
        flipped.entry(0, 0).re,
        flipped.entry(1, 1).re
    );

    // depolarizing at p = 3/4 erases everything
    let mush = apply_channel(&plus_density()?, &NoiseChannel::depolarizing(0.75)?, 0)?;
    println!(
        "depolarizing p=0.75 on |+><+|: diag ({:.3}, {:.3}), purity {:.3}",
        mush.entry(0, 0).re,
        mush.entry(1, 1).re,
        mush.purity()
    );
    println!("purity 0.5 is the single-qubit floor: the maximally mixed state.\n");

    // phase flip scales coherences by 1-2p, dephasing by 1-gamma,
    // so the two channels coincide at gamma = 2p
    let pf = apply_channel(&plus_density()?, &NoiseChannel::phase_flip(0.2)?, 0)?;
    let dp = apply_channel(&plus_density()?, &NoiseChannel::dephasing(0.4)?, 0)?;
    println!(
        "phase flip p=0.2 vs dephasing gamma=0.4: |rho01| = {:.3} vs {:.3}",
        pf.entry(0, 1).norm(),
        dp.entry(0, 1).norm()
    );

    println!("\nhow long before the environment does this to you:");
    for temp in [0.001, 1.0, 300.0] {
        println!(
            "  T = {temp:>7} K  ->  decoherence timescale {:.3e} s",
            decoherence_timescale(temp)?
        );
    }
    println!("room temperature buys you tens of femtoseconds. Gates had");
    println!("better be fast, or cold.");
    Ok(())
}
