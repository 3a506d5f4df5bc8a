//! Oracles and generators shared by the integration suites. The dense
//! matrix embedding here is an independent implementation of gate
//! application: it materializes the full 2^n x 2^n operator and does a
//! plain matrix-vector product, which the in-place kernel never does.

// each test binary uses a different subset of these helpers
#![allow(dead_code)]

use ndarray::Array2;
use num_complex::Complex64;
use qusim::circuit::{Circuit, NamedGate};
use qusim::gates::Gate;
use qusim::qstate::StateVector;
use rand::rngs::StdRng;
use rand::Rng;
use std::f64::consts::PI;

pub fn dft_matrix(n: usize) -> Array2<Complex64> {
    let dim = 1usize << n;
    let scale = 1.0 / (dim as f64).sqrt();
    Array2::from_shape_fn((dim, dim), |(j, k)| {
        Complex64::from_polar(scale, 2.0 * PI * ((j * k) % dim) as f64 / dim as f64)
    })
}

/// Embeds `g` acting on `targets` into the full space: bit k of the
/// gate's local index corresponds to qubit targets[k].
pub fn embed_gate(g: &Gate, targets: &[usize], n: usize) -> Array2<Complex64> {
    let dim = 1usize << n;
    let gm = g.matrix();
    let local = |full: usize| -> usize {
        targets
            .iter()
            .enumerate()
            .map(|(k, &t)| ((full >> t) & 1) << k)
            .sum()
    };
    let rest = |full: usize| -> usize {
        let mut r = full;
        for &t in targets {
            r &= !(1usize << t);
        }
        r
    };
    Array2::from_shape_fn((dim, dim), |(r, c)| {
        if rest(r) == rest(c) {
            gm[[local(r), local(c)]]
        } else {
            Complex64::ZERO
        }
    })
}

/// Applies `g` by dense matrix-vector multiplication.
pub fn dense_apply(state: &StateVector, g: &Gate, targets: &[usize]) -> Vec<Complex64> {
    let n = state.num_qubits();
    let u = embed_gate(g, targets, n);
    let x = state.amplitudes();
    (0..x.len())
        .map(|r| (0..x.len()).map(|c| u[[r, c]] * x[c]).sum())
        .collect()
}

pub fn max_amp_diff(a: &[Complex64], b: &[Complex64]) -> f64 {
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

/// |observed - expected| within 4 binomial standard deviations.
pub fn within_4_sigma(observed: f64, expected: f64, trials: u64) -> bool {
    let sigma = (expected * (1.0 - expected) / trials as f64).sqrt();
    (observed - expected).abs() <= 4.0 * sigma
}

fn distinct_indices(rng: &mut StdRng, n: usize, k: usize) -> Vec<usize> {
    let mut pool: Vec<usize> = (0..n).collect();
    for i in 0..k {
        let j = rng.random_range(i..n);
        pool.swap(i, j);
    }
    pool.truncate(k);
    pool
}

fn random_named_gate(rng: &mut StdRng) -> NamedGate {
    match rng.random_range(0..9) {
        0 => NamedGate::H,
        1 => NamedGate::X,
        2 => NamedGate::Y,
        3 => NamedGate::Z,
        4 => NamedGate::Phase {
            theta: rng.random_range(-PI..PI),
        },
        5 => NamedGate::U {
            theta: rng.random_range(-PI..PI),
            phi: rng.random_range(-PI..PI),
            lam: rng.random_range(-PI..PI),
        },
        6 => NamedGate::Cnot,
        7 => NamedGate::Swap,
        _ => NamedGate::Ccnot,
    }
}

/// Random circuit over the DSL gate set, sometimes with extra controls.
pub fn random_circuit(rng: &mut StdRng, n: usize, gates: usize) -> Circuit {
    let mut c = Circuit::new(n);
    while c.gate_count() < gates {
        let g = random_named_gate(rng);
        if g.arity() > n {
            continue;
        }
        let extra = if g.arity() < n && rng.random_range(0..4) == 0 {
            1
        } else {
            0
        };
        let picked = distinct_indices(rng, n, g.arity() + extra);
        let (controls, targets) = picked.split_at(extra);
        c.add_controlled(g, controls, targets)
            .expect("indices are distinct and in range");
    }
    c
}

/// Random (gate, targets) pair for kernel cross-checks, mixing named
/// gates with arbitrary-angle rotations.
pub fn random_gate_and_targets(rng: &mut StdRng, n: usize) -> (Gate, Vec<usize>) {
    loop {
        let g = random_named_gate(rng).build();
        let arity = g.arity();
        if arity <= n {
            let targets = distinct_indices(rng, n, arity);
            return (g, targets);
        }
    }
}
