//! Command-line front end. One subcommand per library capability;
//! every randomized subcommand takes --seed and reproduces its output
//! byte for byte.
//!
//! Bitstrings (state labels, --input, measurement results) list qubit 0
//! first; qubit k is bit k of the basis index.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use rand::rngs::StdRng;
use rand::SeedableRng;
use serde_json::json;

use qusim::algorithms::{self, GroverOracle};
use qusim::bb84::{Bb84Config, Eavesdropper};
use qusim::circuit::Circuit;
use qusim::gates::{self, Pauli};
use qusim::infotheory;
use qusim::noise::{self, NoiseChannel};
use qusim::qec;
use qusim::qstate::{DensityMatrix, StateVector};

const DEFAULT_SEED: u64 = 42;

#[derive(Parser)]
#[command(
    name = "qusim",
    version,
    about = "Quantum circuit simulator and protocol demos",
    after_help = "Bitstrings list qubit 0 first: --input 110 sets qubits 0 and 1.\n\
                  All output is deterministic for a fixed --seed."
)]
struct Cli {
    /// RNG seed; identical seeds reproduce output exactly
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,

    /// Emit one JSON document instead of text
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a circuit file and measure the result
    Run {
        /// Circuit source file
        file: PathBuf,
        /// Initial basis state as a bitstring (default all zeros)
        #[arg(long)]
        input: Option<String>,
    },
    /// Fourier-transform a basis state
    Qft {
        /// Register width in qubits
        #[arg(long)]
        n: usize,
        /// Input basis state as a bitstring (default all zeros)
        #[arg(long)]
        input: Option<String>,
    },
    /// Search for a marked item by amplitude amplification
    Grover {
        /// Register width in qubits
        #[arg(long)]
        n: usize,
        /// Marked basis index
        #[arg(long)]
        marked: usize,
    },
    /// Teleport a random qubit over a shared entangled pair
    Teleport,
    /// Send two classical bits through one qubit of a shared pair
    Densecode {
        /// Bit pair to send, e.g. 10 (default: all four pairs)
        #[arg(long)]
        input: Option<String>,
    },
    /// Half adder built from Toffoli and cnot
    Adder {
        /// Inputs x,y as a bitstring like 11 (default: full truth table)
        #[arg(long)]
        input: Option<String>,
    },
    /// Shannon entropy of a probability distribution
    Entropy {
        /// Probabilities, must sum to 1
        #[arg(required = true, num_args = 1..)]
        probs: Vec<f64>,
    },
    /// Von Neumann entropy of the diagonal mixed state diag(probs)
    VnEntropy {
        /// Diagonal entries, a power-of-two count summing to 1
        #[arg(required = true, num_args = 1..)]
        probs: Vec<f64>,
    },
    /// Entanglement across a cut of a circuit's output state
    EntangleEntropy {
        /// Circuit source file
        file: PathBuf,
        /// Qubits on one side of the cut, comma separated
        #[arg(long, value_delimiter = ',', required = true)]
        keep: Vec<usize>,
        /// Initial basis state as a bitstring (default all zeros)
        #[arg(long)]
        input: Option<String>,
    },
    /// Binary symmetric channel capacity 1 - H2(p)
    Capacity {
        /// Crossover probability
        #[arg(long)]
        p: f64,
    },
    /// CSV of logical error rates for the 3-qubit bit-flip code
    NoiseSweep {
        /// Physical flip probabilities (repeatable or comma separated)
        #[arg(long, value_delimiter = ',')]
        p: Vec<f64>,
        /// Monte-Carlo trials per point
        #[arg(long, default_value_t = 10_000)]
        trials: u64,
    },
    /// Encode, corrupt, and correct one random logical qubit
    QecDemo {
        /// Per-qubit flip probability
        #[arg(long, default_value_t = 0.1)]
        p: f64,
    },
    /// Quantum key distribution session report (always JSON)
    #[command(name = "bb84")]
    Bb84 {
        /// Number of transmitted qubits
        #[arg(long)]
        length: usize,
        /// Insert an intercept-resend eavesdropper
        #[arg(long)]
        eve: bool,
        /// QBER above which the session aborts
        #[arg(long)]
        threshold: Option<f64>,
        /// Include per-round records in the report
        #[arg(long)]
        transcript: bool,
    },
    /// Overlap grid showing which state pairs admit a cloner
    NocloningDemo,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

type CmdResult = Result<(), Box<dyn std::error::Error>>;

fn dispatch(cli: &Cli) -> CmdResult {
    match &cli.command {
        Command::Run { file, input } => cmd_run(cli, file, input.as_deref()),
        Command::Qft { n, input } => cmd_qft(cli, *n, input.as_deref()),
        Command::Grover { n, marked } => cmd_grover(cli, *n, *marked),
        Command::Teleport => cmd_teleport(cli),
        Command::Densecode { input } => cmd_densecode(cli, input.as_deref()),
        Command::Adder { input } => cmd_adder(cli, input.as_deref()),
        Command::Entropy { probs } => cmd_entropy(cli, probs),
        Command::VnEntropy { probs } => cmd_vn_entropy(cli, probs),
        Command::EntangleEntropy { file, keep, input } => {
            cmd_entangle_entropy(cli, file, keep, input.as_deref())
        }
        Command::Capacity { p } => cmd_capacity(cli, *p),
        Command::NoiseSweep { p, trials } => cmd_noise_sweep(cli, p, *trials),
        Command::QecDemo { p } => cmd_qec_demo(cli, *p),
        Command::Bb84 {
            length,
            eve,
            threshold,
            transcript,
        } => cmd_bb84(cli, *length, *eve, *threshold, *transcript),
        Command::NocloningDemo => cmd_nocloning(cli),
    }
}

/// Bitstring -> basis index, qubit 0 taken from the leftmost character.
fn parse_bitstring(s: &str, n: usize) -> Result<usize, String> {
    if s.len() != n {
        return Err(format!("input needs exactly {n} bits, got {}", s.len()));
    }
    let mut index = 0usize;
    for (q, c) in s.chars().enumerate() {
        match c {
            '0' => {}
            '1' => index |= 1 << q,
            _ => return Err(format!("input may contain only 0 and 1, got '{c}'")),
        }
    }
    Ok(index)
}

fn bits_label(index: usize, n: usize) -> String {
    (0..n)
        .map(|q| if (index >> q) & 1 == 1 { '1' } else { '0' })
        .collect()
}

fn state_lines(s: &StateVector) -> String {
    let mut out = String::new();
    for (i, a) in s.amplitudes().iter().enumerate() {
        if a.norm_sqr() > 1e-12 {
            out.push_str(&format!(
                "  |{}>  {:+.8}{:+.8}i  p={:.8}\n",
                bits_label(i, s.num_qubits()),
                a.re,
                a.im,
                a.norm_sqr()
            ));
        }
    }
    out
}

fn initial_state(n: usize, input: Option<&str>) -> Result<StateVector, Box<dyn std::error::Error>> {
    let index = match input {
        Some(s) => parse_bitstring(s, n)?,
        None => 0,
    };
    Ok(StateVector::basis_state(n, index)?)
}

fn read_circuit(file: &PathBuf) -> Result<Circuit, Box<dyn std::error::Error>> {
    let src = fs::read_to_string(file).map_err(|e| format!("{}: {e}", file.display()))?;
    Ok(Circuit::parse(&src)?)
}

fn cmd_run(cli: &Cli, file: &PathBuf, input: Option<&str>) -> CmdResult {
    let circuit = read_circuit(file)?;
    let n = circuit.num_qubits();
    let final_state = circuit.run(&initial_state(n, input)?)?;
    let record = final_state.measure_all(cli.seed);
    let bits: String = record.bits().iter().map(|b| char::from(b'0' + b)).collect();
    if cli.json {
        println!(
            "{}",
            json!({
                "qubits": n,
                "gates": circuit.gate_count(),
                "state": final_state,
                "measured": {
                    "bits": bits,
                    "index": record.outcome,
                    "probability": record.probability,
                },
            })
        );
    } else {
        println!("qubits: {n}");
        println!("gates: {}", circuit.gate_count());
        println!("final state:");
        print!("{}", state_lines(&final_state));
        println!(
            "measured: {bits}  (index {}, p={:.8})",
            record.outcome, record.probability
        );
    }
    Ok(())
}

fn cmd_qft(cli: &Cli, n: usize, input: Option<&str>) -> CmdResult {
    let circuit = algorithms::qft_circuit(n)?;
    let out = circuit.run(&initial_state(n, input)?)?;
    if cli.json {
        println!(
            "{}",
            json!({
                "qubits": n,
                "gates": circuit.gate_count(),
                "state": out,
            })
        );
    } else {
        println!("qubits: {n}");
        println!("gates: {}", circuit.gate_count());
        println!("final state:");
        print!("{}", state_lines(&out));
    }
    Ok(())
}

fn cmd_grover(cli: &Cli, n: usize, marked: usize) -> CmdResult {
    let oracle = GroverOracle::single(n, marked)?;
    let iterations = oracle.recommended_iterations();
    let found = algorithms::grover_search(&oracle, cli.seed)?;
    if cli.json {
        println!(
            "{}",
            json!({
                "n": n,
                "marked": marked,
                "iterations": iterations,
                "found": found,
                "success": found == marked,
            })
        );
    } else {
        println!("iterations: {iterations}");
        println!("found: {found}");
        println!("marked: {marked}");
        println!("success: {}", found == marked);
    }
    Ok(())
}

fn cmd_teleport(cli: &Cli) -> CmdResult {
    let mut rng = StdRng::seed_from_u64(cli.seed);
    let psi = StateVector::random(1, &mut rng)?;
    let r = algorithms::teleport(&psi, cli.seed)?;
    if cli.json {
        println!(
            "{}",
            json!({
                "input": psi,
                "classical_bits": [r.classical_bits.0, r.classical_bits.1],
                "received": r.received,
                "fidelity": r.fidelity,
            })
        );
    } else {
        println!("input state:");
        print!("{}", state_lines(&psi));
        println!(
            "classical bits: {}{}",
            r.classical_bits.0, r.classical_bits.1
        );
        println!("received state:");
        print!("{}", state_lines(&r.received));
        println!("fidelity: {}", r.fidelity);
    }
    Ok(())
}

fn cmd_densecode(cli: &Cli, input: Option<&str>) -> CmdResult {
    let pairs: Vec<(u8, u8)> = match input {
        Some(s) => {
            let idx = parse_bitstring(s, 2)?;
            vec![((idx & 1) as u8, ((idx >> 1) & 1) as u8)]
        }
        None => vec![(0, 0), (0, 1), (1, 0), (1, 1)],
    };
    let mut rows = Vec::new();
    for &(b1, b2) in &pairs {
        let (r1, r2) = algorithms::dense_code((b1, b2), cli.seed)?;
        rows.push(((b1, b2), (r1, r2)));
    }
    if cli.json {
        let rounds: Vec<_> = rows
            .iter()
            .map(|&((b1, b2), (r1, r2))| {
                json!({
                    "sent": format!("{b1}{b2}"),
                    "received": format!("{r1}{r2}"),
                    "ok": (b1, b2) == (r1, r2),
                })
            })
            .collect();
        println!("{}", json!({ "rounds": rounds }));
    } else {
        for ((b1, b2), (r1, r2)) in rows {
            let ok = if (b1, b2) == (r1, r2) { "ok" } else { "MISMATCH" };
            println!("sent {b1}{b2} -> received {r1}{r2}  {ok}");
        }
    }
    Ok(())
}

fn cmd_adder(cli: &Cli, input: Option<&str>) -> CmdResult {
    let circuit = algorithms::adder_circuit();
    let inputs: Vec<(usize, usize)> = match input {
        Some(s) => {
            if s.len() == 3 && !s.ends_with('0') {
                return Err("the adder's third qubit is the carry output and must start at 0"
                    .to_string()
                    .into());
            }
            let idx = parse_bitstring(s.get(..2).unwrap_or(s), 2)?;
            vec![(idx & 1, (idx >> 1) & 1)]
        }
        None => vec![(0, 0), (0, 1), (1, 0), (1, 1)],
    };
    let mut rows = Vec::new();
    for &(x, y) in &inputs {
        let out = circuit.run(&StateVector::basis_state(3, x | (y << 1))?)?;
        let record = out.measure_all(cli.seed);
        rows.push((x, y, record.bit(1), record.bit(2)));
    }
    if cli.json {
        let rows: Vec<_> = rows
            .iter()
            .map(|&(x, y, sum, carry)| json!({ "x": x, "y": y, "sum": sum, "carry": carry }))
            .collect();
        println!("{}", json!({ "rows": rows }));
    } else {
        println!("x y | sum carry");
        for (x, y, sum, carry) in rows {
            println!("{x} {y} |  {sum}   {carry}");
        }
    }
    Ok(())
}

fn cmd_entropy(cli: &Cli, probs: &[f64]) -> CmdResult {
    let dist = qusim::ProbDist::new(probs.to_vec())?;
    let h = infotheory::shannon_entropy(&dist);
    if cli.json {
        println!("{}", json!({ "entropy_bits": h }));
    } else {
        println!("entropy: {h} bits");
    }
    Ok(())
}

fn cmd_vn_entropy(cli: &Cli, probs: &[f64]) -> CmdResult {
    if !probs.len().is_power_of_two() {
        return Err("diagonal length must be a power of two".to_string().into());
    }
    let n = probs.len().trailing_zeros() as usize;
    let rho = DensityMatrix::from_diagonal(n, probs)?;
    let s = infotheory::von_neumann_entropy(&rho);
    if cli.json {
        println!("{}", json!({ "qubits": n, "entropy_bits": s }));
    } else {
        println!("von Neumann entropy: {s} bits");
    }
    Ok(())
}

fn cmd_entangle_entropy(cli: &Cli, file: &PathBuf, keep: &[usize], input: Option<&str>) -> CmdResult {
    let circuit = read_circuit(file)?;
    let out = circuit.run(&initial_state(circuit.num_qubits(), input)?)?;
    let e = infotheory::entanglement_entropy(&out, keep)?;
    if cli.json {
        println!("{}", json!({ "keep": keep, "entropy_bits": e }));
    } else {
        println!("entanglement entropy: {e} bits");
    }
    Ok(())
}

fn cmd_capacity(cli: &Cli, p: f64) -> CmdResult {
    let c = infotheory::bsc_capacity(p)?;
    if cli.json {
        println!("{}", json!({ "p": p, "capacity_bits": c }));
    } else {
        println!("capacity: {c} bits per use");
    }
    Ok(())
}

fn cmd_noise_sweep(cli: &Cli, p: &[f64], trials: u64) -> CmdResult {
    let default = [0.01, 0.02, 0.05, 0.1, 0.15, 0.2, 0.3, 0.4, 0.5];
    let ps: &[f64] = if p.is_empty() { &default } else { p };
    let mut stats = Vec::new();
    for (i, &p) in ps.iter().enumerate() {
        stats.push(qec::logical_error_rate(p, trials, cli.seed.wrapping_add(i as u64))?);
    }
    if cli.json {
        let rows: Vec<_> = stats
            .iter()
            .map(|s| {
                json!({
                    "p": s.physical_p,
                    "trials": s.trials,
                    "logical_rate": s.logical_rate,
                    "predicted_rate": qec::predicted_logical_rate(s.physical_p),
                })
            })
            .collect();
        println!("{}", json!(rows));
    } else {
        println!("p,trials,logical_rate,predicted_rate");
        for s in &stats {
            println!(
                "{},{},{},{}",
                s.physical_p,
                s.trials,
                s.logical_rate,
                qec::predicted_logical_rate(s.physical_p)
            );
        }
    }
    Ok(())
}

fn cmd_qec_demo(cli: &Cli, p: f64) -> CmdResult {
    let mut rng = StdRng::seed_from_u64(cli.seed);
    let logical = StateVector::random(1, &mut rng)?;
    let codeword = qec::encode_bitflip3(&logical)?;
    let channel = NoiseChannel::bit_flip(p)?;
    let pattern = noise::sample_pauli_error_rng(&channel, 3, &mut rng);
    let mut noisy = codeword.clone();
    for (q, &label) in pattern.iter().enumerate() {
        if label == Pauli::X {
            noisy = gates::apply(&noisy, &gates::pauli(Pauli::X), &[q])?;
        }
    }
    let (syndrome, corrected) = qec::syndrome_correct(&noisy)?;
    let fidelity = corrected.fidelity(&codeword)?;
    let labels: Vec<String> = pattern.iter().map(|pl| pl.label().to_uppercase()).collect();
    if cli.json {
        println!(
            "{}",
            json!({
                "p": p,
                "error_pattern": labels,
                "syndrome": [syndrome.0, syndrome.1],
                "fidelity": fidelity,
                "recovered": fidelity > 1.0 - 1e-9,
            })
        );
    } else {
        println!("logical state:");
        print!("{}", state_lines(&logical));
        println!("error pattern: {}", labels.join(" "));
        println!("syndrome: {}{}", syndrome.0, syndrome.1);
        println!("corrected fidelity: {fidelity}");
    }
    Ok(())
}

fn key_hex(bits: &[u8]) -> String {
    bits.chunks(8)
        .map(|chunk| {
            let mut byte = 0u8;
            for (i, &b) in chunk.iter().enumerate() {
                byte |= b << (7 - i);
            }
            format!("{byte:02x}")
        })
        .collect()
}

fn cmd_bb84(
    cli: &Cli,
    length: usize,
    eve: bool,
    threshold: Option<f64>,
    transcript: bool,
) -> CmdResult {
    let mut cfg = Bb84Config::new(
        length,
        if eve {
            Eavesdropper::InterceptResend
        } else {
            Eavesdropper::None
        },
        cli.seed,
    );
    if let Some(t) = threshold {
        cfg.detection_threshold = t;
    }
    let session = qusim::bb84::run_bb84_session(&cfg)?;
    let r = &session.result;
    let mut report = json!({
        "sifted_length": r.sifted_length,
        "qber": r.measured_qber,
        "detected": r.eavesdropping_detected,
        "key_hex": key_hex(&r.final_key),
    });
    if transcript {
        report["rounds"] = serde_json::to_value(&session.rounds)?;
    }
    println!("{report}");
    Ok(())
}

fn cmd_nocloning(cli: &Cli) -> CmdResult {
    let steps = 10;
    let angle = |k: usize| k as f64 * std::f64::consts::FRAC_PI_2 / (steps - 1) as f64;
    let state = |k: usize| {
        let t = angle(k);
        StateVector::from_amplitudes(
            1,
            vec![
                num_complex::Complex64::new(t.cos(), 0.0),
                num_complex::Complex64::new(t.sin(), 0.0),
            ],
        )
        .expect("normalized by construction")
    };
    let mut clonable_pairs = 0;
    let mut grid = Vec::new();
    let mut pairs = Vec::new();
    for i in 0..steps {
        let u = state(i);
        let mut row = String::new();
        for j in 0..steps {
            let rep = gates::verify_no_cloning(&u, &state(j))?;
            row.push(if rep.clonable { 'C' } else { '.' });
            if rep.clonable {
                clonable_pairs += 1;
            }
            if cli.json {
                pairs.push(json!({
                    "theta_u": angle(i),
                    "theta_v": angle(j),
                    "overlap": rep.overlap_magnitude,
                    "clonable": rep.clonable,
                }));
            }
        }
        grid.push(row);
    }
    if cli.json {
        println!(
            "{}",
            json!({
                "grid_size": steps,
                "clonable_pairs": clonable_pairs,
                "pairs": pairs,
            })
        );
    } else {
        println!("states cos(t)|0> + sin(t)|1>, t from 0 to pi/2; C = clonable pair");
        for row in &grid {
            println!("{row}");
        }
        println!(
            "clonable: {clonable_pairs}/{} (identical or orthogonal pairs only)",
            steps * steps
        );
    }
    Ok(())
}
