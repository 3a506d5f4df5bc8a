//! Classical and quantum entropy measures. Everything is in bits
//! (logarithms base 2).

use ndarray::Array2;

use crate::error::{Error, Result};
use crate::qstate::{DensityMatrix, StateVector, ALG_TOL};

/// Eigenvalues and probabilities below this count as exact zeros in
/// entropy sums.
const ZERO_EIG: f64 = 1e-12;

/// Probabilities p(x) over a finite alphabet.
#[derive(Clone, Debug, PartialEq)]
pub struct ProbDist {
    probs: Vec<f64>,
}

impl ProbDist {
    pub fn new(probs: Vec<f64>) -> Result<Self> {
        if probs.is_empty() {
            return Err(Error::InvalidDistribution {
                reason: "no outcomes",
            });
        }
        if probs.iter().any(|&p| p < 0.0 || !p.is_finite()) {
            return Err(Error::InvalidDistribution {
                reason: "negative or non-finite probability",
            });
        }
        let total: f64 = probs.iter().sum();
        if (total - 1.0).abs() > ALG_TOL {
            return Err(Error::InvalidDistribution {
                reason: "probabilities do not sum to 1",
            });
        }
        Ok(ProbDist { probs })
    }

    pub fn uniform(k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidDistribution { reason: "no outcomes" });
        }
        Ok(ProbDist {
            probs: vec![1.0 / k as f64; k],
        })
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    pub fn len(&self) -> usize {
        self.probs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.probs.is_empty()
    }
}

/// Joint probabilities p(x, y); rows index x, columns index y.
#[derive(Clone, Debug, PartialEq)]
pub struct JointDist {
    table: Array2<f64>,
}

impl JointDist {
    pub fn new(table: Array2<f64>) -> Result<Self> {
        if table.is_empty() {
            return Err(Error::InvalidDistribution { reason: "empty table" });
        }
        if table.iter().any(|&p| p < 0.0 || !p.is_finite()) {
            return Err(Error::InvalidDistribution {
                reason: "negative or non-finite probability",
            });
        }
        let total: f64 = table.iter().sum();
        if (total - 1.0).abs() > ALG_TOL {
            return Err(Error::InvalidDistribution {
                reason: "probabilities do not sum to 1",
            });
        }
        Ok(JointDist { table })
    }

    /// Independent product of two marginals.
    pub fn product(x: &ProbDist, y: &ProbDist) -> Self {
        let table = Array2::from_shape_fn((x.len(), y.len()), |(i, j)| x.probs[i] * y.probs[j]);
        JointDist { table }
    }

    pub fn table(&self) -> &Array2<f64> {
        &self.table
    }

    pub fn marginal_x(&self) -> Vec<f64> {
        self.table
            .rows()
            .into_iter()
            .map(|row| row.sum())
            .collect()
    }

    pub fn marginal_y(&self) -> Vec<f64> {
        self.table
            .columns()
            .into_iter()
            .map(|col| col.sum())
            .collect()
    }
}

fn entropy_of(probs: impl IntoIterator<Item = f64>) -> f64 {
    let s: f64 = probs
        .into_iter()
        .filter(|&p| p > ZERO_EIG)
        .map(|p| p * p.log2())
        .sum();
    // eigenvalue jitter just above 1 must not leak a negative entropy,
    // and a pure spectrum must give +0 rather than -0
    (-s).max(0.0)
}

/// S(X) = -sum p log2 p, with 0 log 0 = 0.
pub fn shannon_entropy(d: &ProbDist) -> f64 {
    entropy_of(d.probs.iter().copied())
}

/// I(X:Y) = sum p(x,y) log2 [ p(x,y) / (p(x) p(y)) ].
pub fn mutual_information(j: &JointDist) -> f64 {
    let px = j.marginal_x();
    let py = j.marginal_y();
    let mut total = 0.0;
    for ((x, y), &p) in j.table.indexed_iter() {
        if p > ZERO_EIG {
            total += p * (p / (px[x] * py[y])).log2();
        }
    }
    total
}

/// Capacity of a binary symmetric channel with flip probability `p`:
/// 1 - S({p, 1-p}) bits per transmitted bit.
pub fn bsc_capacity(p: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::OutOfRange {
            what: "flip probability",
            value: p,
            lo: 0.0,
            hi: 1.0,
        });
    }
    Ok(1.0 - entropy_of([p, 1.0 - p]))
}

/// Bits needed to faithfully transmit `n` messages drawn from `d`.
pub fn compression_limit(d: &ProbDist, n: u64) -> f64 {
    n as f64 * shannon_entropy(d)
}

/// S(rho) = -Tr(rho log2 rho), evaluated on the eigenvalue spectrum.
pub fn von_neumann_entropy(rho: &DensityMatrix) -> f64 {
    entropy_of(rho.eigenvalues())
}

/// Entanglement across a bipartition of a pure state:
/// E = S(rho_A) + S(rho_B) - S(rho_AB). For a pure state S(rho_AB) = 0
/// and the two reduced entropies agree, so E = 2 S(rho_A).
pub fn entanglement_entropy(v: &StateVector, partition: &[usize]) -> Result<f64> {
    let n = v.num_qubits();
    let mut part = partition.to_vec();
    part.sort_unstable();
    part.dedup();
    if part.len() != partition.len() || part.is_empty() || part.len() >= n {
        return Err(Error::InvalidPartition);
    }
    if let Some(&q) = part.iter().find(|&&q| q >= n) {
        return Err(Error::QubitOutOfRange { qubit: q, n });
    }
    let complement: Vec<usize> = (0..n).filter(|q| !part.contains(q)).collect();
    let rho = v.to_density()?;
    let s_ab = von_neumann_entropy(&rho);
    let s_a = von_neumann_entropy(&rho.partial_trace(&part)?);
    let s_b = von_neumann_entropy(&rho.partial_trace(&complement)?);
    Ok(s_a + s_b - s_ab)
}
