//! Circuits and the textual circuit language.
//!
//! The grammar is line oriented. The first significant line is
//! `qubits <n>`; each following line is one operation:
//!
//! ```text
//! <name> <target...> [key=value...]
//! c <name> <control> <targets...>
//! ```
//!
//! Gate names are `h x y z phase u cnot ccnot swap`; `phase` takes
//! `theta=<radians>`, `u` takes `theta= phi= lam=`. A `c` prefix adds one
//! control qubit (prefixes stack). `#` starts a comment; blank lines are
//! skipped; LF and CRLF both parse.

use std::fmt;

use num_complex::Complex64;
use ndarray::Array2;

use crate::error::{Error, Result};
use crate::gates::{self, Gate, GateParams};
use crate::qstate::StateVector;

/// Dense unitaries above this size are refused.
pub const MAX_UNITARY_QUBITS: usize = 10;

/// Position-carrying syntax or validation error from `Circuit::parse`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// 1-based line in the source text.
    pub line: usize,
    /// 1-based column of the offending token.
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

impl ParseError {
    fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            column,
            message: message.into(),
        }
    }
}

/// Gate vocabulary of the circuit language.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum NamedGate {
    H,
    X,
    Y,
    Z,
    Phase { theta: f64 },
    U { theta: f64, phi: f64, lam: f64 },
    Cnot,
    Ccnot,
    Swap,
}

impl NamedGate {
    pub fn name(&self) -> &'static str {
        match self {
            NamedGate::H => "h",
            NamedGate::X => "x",
            NamedGate::Y => "y",
            NamedGate::Z => "z",
            NamedGate::Phase { .. } => "phase",
            NamedGate::U { .. } => "u",
            NamedGate::Cnot => "cnot",
            NamedGate::Ccnot => "ccnot",
            NamedGate::Swap => "swap",
        }
    }

    pub fn arity(&self) -> usize {
        match self {
            NamedGate::Cnot | NamedGate::Swap => 2,
            NamedGate::Ccnot => 3,
            _ => 1,
        }
    }

    /// Materializes the gate matrix.
    pub fn build(&self) -> Gate {
        match *self {
            NamedGate::H => gates::hadamard(),
            NamedGate::X => gates::pauli(gates::Pauli::X),
            NamedGate::Y => gates::pauli(gates::Pauli::Y),
            NamedGate::Z => gates::pauli(gates::Pauli::Z),
            NamedGate::Phase { theta } => gates::phase(theta),
            NamedGate::U { theta, phi, lam } => {
                gates::single_qubit_u(GateParams::new(theta, phi, lam))
            }
            NamedGate::Cnot => gates::cnot(),
            NamedGate::Ccnot => gates::toffoli(),
            NamedGate::Swap => gates::swap(),
        }
    }

    /// The name-level inverse; every vocabulary gate stays in vocabulary.
    pub fn dagger(&self) -> NamedGate {
        match *self {
            NamedGate::Phase { theta } => NamedGate::Phase { theta: -theta },
            NamedGate::U { theta, phi, lam } => NamedGate::U {
                theta: -theta,
                phi: -lam,
                lam: -phi,
            },
            g => g,
        }
    }

    fn params_suffix(&self) -> String {
        match self {
            NamedGate::Phase { theta } => format!(" theta={theta}"),
            NamedGate::U { theta, phi, lam } => format!(" theta={theta} phi={phi} lam={lam}"),
            _ => String::new(),
        }
    }
}

/// One gate application inside a circuit. Controls are extra, beyond
/// whatever controls the named gate already carries.
#[derive(Clone, Debug, PartialEq)]
pub struct CircuitOp {
    pub gate: NamedGate,
    pub controls: Vec<usize>,
    pub targets: Vec<usize>,
}

impl CircuitOp {
    pub fn new(gate: NamedGate, targets: impl Into<Vec<usize>>) -> Self {
        CircuitOp {
            gate,
            controls: Vec::new(),
            targets: targets.into(),
        }
    }

    pub fn with_controls(
        gate: NamedGate,
        controls: impl Into<Vec<usize>>,
        targets: impl Into<Vec<usize>>,
    ) -> Self {
        CircuitOp {
            gate,
            controls: controls.into(),
            targets: targets.into(),
        }
    }

    /// Gate matrix and full qubit list (controls first) this op applies.
    pub fn effective(&self) -> (Gate, Vec<usize>) {
        let base = self.gate.build();
        if self.controls.is_empty() {
            (base, self.targets.clone())
        } else {
            let gate = gates::controlled(&base, self.controls.len());
            let mut qubits = self.controls.clone();
            qubits.extend_from_slice(&self.targets);
            (gate, qubits)
        }
    }

    fn render_line(&self) -> String {
        let mut line = String::new();
        for _ in &self.controls {
            line.push_str("c ");
        }
        line.push_str(self.gate.name());
        for q in self.controls.iter().chain(&self.targets) {
            line.push(' ');
            line.push_str(&q.to_string());
        }
        line.push_str(&self.gate.params_suffix());
        line
    }
}

/// Ordered list of gate applications on a fixed number of qubits.
#[derive(Clone, Debug, PartialEq)]
pub struct Circuit {
    num_qubits: usize,
    ops: Vec<CircuitOp>,
}

impl Circuit {
    pub fn new(num_qubits: usize) -> Self {
        Circuit {
            num_qubits,
            ops: Vec::new(),
        }
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn ops(&self) -> &[CircuitOp] {
        &self.ops
    }

    pub fn gate_count(&self) -> usize {
        self.ops.len()
    }

    /// Appends an op after validating its qubit indices.
    pub fn push(&mut self, op: CircuitOp) -> Result<()> {
        if op.targets.len() != op.gate.arity() {
            return Err(Error::ArityMismatch {
                expected: op.gate.arity(),
                got: op.targets.len(),
            });
        }
        let mut seen = 0u64;
        for &q in op.controls.iter().chain(&op.targets) {
            if q >= self.num_qubits {
                return Err(Error::QubitOutOfRange {
                    qubit: q,
                    n: self.num_qubits,
                });
            }
            if seen & (1 << q) != 0 {
                return Err(Error::DuplicateQubit { qubit: q });
            }
            seen |= 1 << q;
        }
        self.ops.push(op);
        Ok(())
    }

    pub fn add(&mut self, gate: NamedGate, targets: &[usize]) -> Result<()> {
        self.push(CircuitOp::new(gate, targets))
    }

    pub fn add_controlled(
        &mut self,
        gate: NamedGate,
        controls: &[usize],
        targets: &[usize],
    ) -> Result<()> {
        self.push(CircuitOp::with_controls(gate, controls, targets))
    }

    /// Parses circuit source; the first violation is reported with its
    /// position. `parse(render(c))` reproduces `c` exactly.
    pub fn parse(text: &str) -> std::result::Result<Circuit, ParseError> {
        let mut circuit: Option<Circuit> = None;
        let mut last_line = 0;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            last_line = line_no;
            let line = raw.strip_suffix('\r').unwrap_or(raw);
            let line = match line.find('#') {
                Some(p) => &line[..p],
                None => line,
            };
            let tokens = tokenize(line);
            if tokens.is_empty() {
                continue;
            }
            match circuit.as_mut() {
                None => {
                    circuit = Some(parse_header(line_no, &tokens)?);
                }
                Some(c) => parse_op_line(c, line_no, &tokens)?,
            }
        }
        circuit.ok_or_else(|| ParseError::new(last_line.max(1), 1, "missing 'qubits <n>' header"))
    }

    /// Canonical source text; one op per line.
    pub fn render(&self) -> String {
        let mut out = format!("qubits {}\n", self.num_qubits);
        for op in &self.ops {
            out.push_str(&op.render_line());
            out.push('\n');
        }
        out
    }

    /// Runs every op in order on a copy of `initial`.
    pub fn run(&self, initial: &StateVector) -> Result<StateVector> {
        if initial.num_qubits() != self.num_qubits {
            return Err(Error::QubitCountMismatch {
                left: self.num_qubits,
                right: initial.num_qubits(),
            });
        }
        let mut state = initial.clone();
        for op in &self.ops {
            let (gate, qubits) = op.effective();
            gates::apply_mut(state.amplitudes_mut(), gate.matrix(), &qubits);
        }
        Ok(state)
    }

    /// Reversed op order with every gate daggered; undoes `run` exactly.
    pub fn inverse(&self) -> Circuit {
        let ops = self
            .ops
            .iter()
            .rev()
            .map(|op| CircuitOp {
                gate: op.gate.dagger(),
                controls: op.controls.clone(),
                targets: op.targets.clone(),
            })
            .collect();
        Circuit {
            num_qubits: self.num_qubits,
            ops,
        }
    }

    /// Dense matrix of the whole circuit, built column by column from
    /// basis-state runs. Capped at 10 qubits.
    pub fn unitary_of(&self) -> Result<Gate> {
        let n = self.num_qubits;
        if n > MAX_UNITARY_QUBITS {
            return Err(Error::TooManyQubits {
                n,
                max: MAX_UNITARY_QUBITS,
                what: "a dense circuit unitary",
            });
        }
        let dim = 1usize << n;
        let mut mat = Array2::<Complex64>::zeros((dim, dim));
        for col in 0..dim {
            let out = self.run(&StateVector::basis_state(n, col)?)?;
            for (row, amp) in out.amplitudes().iter().enumerate() {
                mat[[row, col]] = *amp;
            }
        }
        let gate = Gate::from_matrix_unchecked("circuit", mat);
        if !gate.is_unitary(1e-9) {
            return Err(Error::NotUnitary {
                label: "circuit".into(),
            });
        }
        Ok(gate)
    }
}

/// Tokens with their 1-based starting columns.
fn tokenize(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s + 1, &line[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

fn parse_header(line_no: usize, tokens: &[(usize, &str)]) -> std::result::Result<Circuit, ParseError> {
    if tokens[0].1 != "qubits" {
        return Err(ParseError::new(
            line_no,
            tokens[0].0,
            format!("expected 'qubits <n>' header, found '{}'", tokens[0].1),
        ));
    }
    if tokens.len() != 2 {
        return Err(ParseError::new(
            line_no,
            tokens[0].0,
            "'qubits' takes exactly one count",
        ));
    }
    let n: usize = tokens[1].1.parse().map_err(|_| {
        ParseError::new(
            line_no,
            tokens[1].0,
            format!("invalid qubit count '{}'", tokens[1].1),
        )
    })?;
    if n == 0 {
        return Err(ParseError::new(line_no, tokens[1].0, "qubit count must be at least 1"));
    }
    Ok(Circuit::new(n))
}

fn parse_op_line(
    circuit: &mut Circuit,
    line_no: usize,
    tokens: &[(usize, &str)],
) -> std::result::Result<(), ParseError> {
    let mut pos = 0;
    let mut num_controls = 0;
    while pos < tokens.len() && tokens[pos].1 == "c" {
        num_controls += 1;
        pos += 1;
    }
    let Some(&(name_col, name)) = tokens.get(pos) else {
        let col = tokens.last().map_or(1, |t| t.0);
        return Err(ParseError::new(line_no, col, "missing gate name after 'c'"));
    };
    pos += 1;

    if name == "qubits" {
        return Err(ParseError::new(line_no, name_col, "duplicate 'qubits' header"));
    }

    let arity = match name {
        "h" | "x" | "y" | "z" | "phase" | "u" => 1,
        "cnot" | "swap" => 2,
        "ccnot" => 3,
        _ => {
            return Err(ParseError::new(
                line_no,
                name_col,
                format!("unknown gate '{name}'"),
            ))
        }
    };

    // qubit indices run until the first key=value token
    let mut indices = Vec::new();
    while pos < tokens.len() && !tokens[pos].1.contains('=') {
        let (col, tok) = tokens[pos];
        let q: usize = tok.parse().map_err(|_| {
            ParseError::new(line_no, col, format!("invalid qubit index '{tok}'"))
        })?;
        indices.push((col, q));
        pos += 1;
    }
    let needed = num_controls + arity;
    if indices.len() != needed {
        return Err(ParseError::new(
            line_no,
            name_col,
            format!("'{name}' with {num_controls} control(s) needs {needed} qubit index(es), got {}", indices.len()),
        ));
    }
    for &(col, q) in &indices {
        if q >= circuit.num_qubits() {
            return Err(ParseError::new(
                line_no,
                col,
                format!("qubit {q} out of range for {} qubit(s)", circuit.num_qubits()),
            ));
        }
    }
    let mut seen = 0u64;
    for &(col, q) in &indices {
        if seen & (1 << q) != 0 {
            return Err(ParseError::new(line_no, col, format!("duplicate qubit {q}")));
        }
        seen |= 1 << q;
    }

    // trailing key=value parameters
    let mut theta = None;
    let mut phi = None;
    let mut lam = None;
    for &(col, tok) in &tokens[pos..] {
        let Some((key, value)) = tok.split_once('=') else {
            return Err(ParseError::new(line_no, col, format!("expected key=value, found '{tok}'")));
        };
        let slot = match key {
            "theta" => &mut theta,
            "phi" => &mut phi,
            "lam" => &mut lam,
            _ => {
                return Err(ParseError::new(line_no, col, format!("unknown parameter '{key}'")));
            }
        };
        if slot.is_some() {
            return Err(ParseError::new(line_no, col, format!("parameter '{key}' given twice")));
        }
        let v: f64 = value.parse().map_err(|_| {
            ParseError::new(line_no, col, format!("invalid number '{value}' for '{key}'"))
        })?;
        *slot = Some(v);
    }

    let gate = match name {
        "h" => NamedGate::H,
        "x" => NamedGate::X,
        "y" => NamedGate::Y,
        "z" => NamedGate::Z,
        "cnot" => NamedGate::Cnot,
        "ccnot" => NamedGate::Ccnot,
        "swap" => NamedGate::Swap,
        "phase" => NamedGate::Phase {
            theta: theta.take().ok_or_else(|| {
                ParseError::new(line_no, name_col, "'phase' needs theta=<radians>")
            })?,
        },
        "u" => {
            let missing = |k| {
                ParseError::new(line_no, name_col, format!("'u' needs {k}=<radians>"))
            };
            NamedGate::U {
                theta: theta.take().ok_or_else(|| missing("theta"))?,
                phi: phi.take().ok_or_else(|| missing("phi"))?,
                lam: lam.take().ok_or_else(|| missing("lam"))?,
            }
        }
        _ => unreachable!("names are filtered above"),
    };
    if theta.is_some() || phi.is_some() || lam.is_some() {
        return Err(ParseError::new(
            line_no,
            name_col,
            format!("'{name}' takes no such parameter"),
        ));
    }

    let qubits: Vec<usize> = indices.iter().map(|&(_, q)| q).collect();
    let (controls, targets) = qubits.split_at(num_controls);
    circuit
        .push(CircuitOp::with_controls(gate, controls, targets))
        .map_err(|e| ParseError::new(line_no, name_col, e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};
    use std::f64::consts::FRAC_1_SQRT_2;

    #[test]
    fn parses_a_two_line_circuit() {
        let c = Circuit::parse("qubits 2\nh 0\ncnot 0 1\n").unwrap();
        assert_eq!(c.num_qubits(), 2);
        assert_eq!(
            c.ops(),
            &[
                CircuitOp::new(NamedGate::H, vec![0]),
                CircuitOp::new(NamedGate::Cnot, vec![0, 1]),
            ]
        );
    }

    #[test]
    fn reports_out_of_range_indices_with_position() {
        let err = Circuit::parse("qubits 1\nh 5\n").unwrap_err();
        assert_eq!(err.line, 2);
        assert_eq!(err.column, 3);
        assert!(err.message.contains("out of range"));
    }

    #[test]
    fn accepts_comments_blanks_and_crlf() {
        let src = "# adder\r\nqubits 3\r\n\r\nccnot 0 1 2 # carry\r\ncnot 0 1\r\n";
        let c = Circuit::parse(src).unwrap();
        assert_eq!(c.gate_count(), 2);
        assert_eq!(c.ops()[0].gate, NamedGate::Ccnot);
    }

    #[test]
    fn control_prefixes_stack() {
        let c = Circuit::parse("qubits 3\nc h 0 1\nc c x 0 1 2\n").unwrap();
        assert_eq!(
            c.ops()[0],
            CircuitOp::with_controls(NamedGate::H, vec![0], vec![1])
        );
        assert_eq!(
            c.ops()[1],
            CircuitOp::with_controls(NamedGate::X, vec![0, 1], vec![2])
        );
    }

    #[test]
    fn parse_rejects_malformed_sources() {
        let cases: &[(&str, usize, &str)] = &[
            ("h 0\n", 1, "qubits"),
            ("qubits\n", 1, "exactly one count"),
            ("qubits zero\n", 1, "invalid qubit count"),
            ("qubits 0\n", 1, "at least 1"),
            ("qubits 2\nqubits 2\n", 2, "duplicate 'qubits' header"),
            ("qubits 2\nfoo 0\n", 2, "unknown gate"),
            ("qubits 2\nh 0 1\n", 2, "index(es)"),
            ("qubits 2\ncnot 0\n", 2, "index(es)"),
            ("qubits 2\ncnot 0 0\n", 2, "duplicate qubit"),
            ("qubits 2\nh q0\n", 2, "invalid qubit index"),
            ("qubits 2\nphase 0\n", 2, "needs theta"),
            ("qubits 2\nphase 0 theta=abc\n", 2, "invalid number"),
            ("qubits 2\nphase 0 theta=1 theta=2\n", 2, "given twice"),
            ("qubits 2\nphase 0 omega=1\n", 2, "unknown parameter"),
            ("qubits 2\nh 0 theta=1\n", 2, "no such parameter"),
            ("qubits 2\nu 0 theta=1 phi=2\n", 2, "'u' needs lam"),
            ("qubits 2\nc 0 1\n", 2, "unknown gate"),
            ("", 1, "missing 'qubits <n>' header"),
        ];
        for (src, line, needle) in cases {
            let err = Circuit::parse(src).unwrap_err();
            assert_eq!(err.line, *line, "source {src:?}");
            assert!(
                err.message.contains(needle),
                "source {src:?}: message {:?} missing {needle:?}",
                err.message
            );
        }
    }

    #[test]
    fn render_then_parse_is_identity() {
        let mut c = Circuit::new(4);
        c.add(NamedGate::H, &[0]).unwrap();
        c.add(NamedGate::Phase { theta: -2.25 }, &[1]).unwrap();
        c.add(
            NamedGate::U {
                theta: 0.5,
                phi: std::f64::consts::PI,
                lam: -0.125,
            },
            &[3],
        )
        .unwrap();
        c.add(NamedGate::Cnot, &[2, 0]).unwrap();
        c.add_controlled(NamedGate::Swap, &[1], &[0, 3]).unwrap();
        c.add_controlled(NamedGate::Phase { theta: 1e-7 }, &[3, 2], &[0]).unwrap();
        let back = Circuit::parse(&c.render()).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn round_trip_survives_awkward_angles() {
        let mut rng = StdRng::seed_from_u64(31);
        for _ in 0..200 {
            let mut c = Circuit::new(2);
            c.add(
                NamedGate::U {
                    theta: rng.random_range(-1e3..1e3),
                    phi: f64::from(rng.random::<f32>()) * 1e-9,
                    lam: rng.random_range(-10.0..10.0),
                },
                &[0],
            )
            .unwrap();
            let back = Circuit::parse(&c.render()).unwrap();
            assert_eq!(back, c);
        }
    }

    #[test]
    fn adder_circuit_matches_the_truth_table() {
        let c = Circuit::parse("qubits 3\nccnot 0 1 2\ncnot 0 1\n").unwrap();
        for x in 0..2usize {
            for y in 0..2usize {
                let input = StateVector::basis_state(3, x | (y << 1)).unwrap();
                let out = c.run(&input).unwrap();
                let sum = x ^ y;
                let carry = x & y;
                let expect = x | (sum << 1) | (carry << 2);
                assert!((out.amplitude(expect).unwrap().re - 1.0).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn empty_circuit_is_identity() {
        let c = Circuit::new(2);
        let mut rng = StdRng::seed_from_u64(8);
        let v = StateVector::random(2, &mut rng).unwrap();
        assert_eq!(c.run(&v).unwrap(), v);
    }

    #[test]
    fn run_checks_the_qubit_count() {
        let c = Circuit::new(2);
        let v = StateVector::basis_state(3, 0).unwrap();
        assert!(matches!(
            c.run(&v),
            Err(Error::QubitCountMismatch { left: 2, right: 3 })
        ));
    }

    #[test]
    fn inverse_of_self_inverse_ops_is_itself() {
        let mut c = Circuit::new(1);
        c.add(NamedGate::H, &[0]).unwrap();
        let inv = c.inverse();
        assert_eq!(inv.ops(), c.ops());
    }

    #[test]
    fn inverse_negates_phase_angles() {
        let mut c = Circuit::new(1);
        c.add(NamedGate::Phase { theta: 0.75 }, &[0]).unwrap();
        assert_eq!(
            c.inverse().ops()[0].gate,
            NamedGate::Phase { theta: -0.75 }
        );
    }

    #[test]
    fn inverse_undoes_a_mixed_circuit() {
        let mut c = Circuit::new(3);
        c.add(NamedGate::H, &[0]).unwrap();
        c.add(NamedGate::U { theta: 1.1, phi: 0.4, lam: -0.9 }, &[1]).unwrap();
        c.add(NamedGate::Cnot, &[0, 2]).unwrap();
        c.add_controlled(NamedGate::Phase { theta: 0.33 }, &[2], &[1]).unwrap();
        c.add(NamedGate::Swap, &[1, 2]).unwrap();
        let mut rng = StdRng::seed_from_u64(17);
        for _ in 0..20 {
            let v = StateVector::random(3, &mut rng).unwrap();
            let round = c.inverse().run(&c.run(&v).unwrap()).unwrap();
            for (a, b) in round.amplitudes().iter().zip(v.amplitudes()) {
                assert!((a - b).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn unitary_of_small_circuits() {
        let mut c = Circuit::new(1);
        c.add(NamedGate::H, &[0]).unwrap();
        let u = c.unitary_of().unwrap();
        let h = Complex64::new(FRAC_1_SQRT_2, 0.0);
        assert!((u.matrix()[[0, 0]] - h).norm() < 1e-12);
        assert!((u.matrix()[[1, 1]] + h).norm() < 1e-12);

        let mut c = Circuit::new(2);
        c.add(NamedGate::Cnot, &[0, 1]).unwrap();
        let u = c.unitary_of().unwrap();
        assert!(u.is_classical_reversible());
        assert!((u.matrix()[[3, 1]].re - 1.0).abs() < 1e-12);
    }

    #[test]
    fn unitary_of_refuses_large_circuits() {
        let c = Circuit::new(11);
        assert!(matches!(
            c.unitary_of(),
            Err(Error::TooManyQubits { n: 11, max: 10, .. })
        ));
    }

    #[test]
    fn push_validates_ops() {
        let mut c = Circuit::new(2);
        assert!(matches!(
            c.add(NamedGate::Cnot, &[0]),
            Err(Error::ArityMismatch { expected: 2, got: 1 })
        ));
        assert!(matches!(
            c.add(NamedGate::H, &[2]),
            Err(Error::QubitOutOfRange { qubit: 2, n: 2 })
        ));
        assert!(matches!(
            c.add_controlled(NamedGate::H, &[1], &[1]),
            Err(Error::DuplicateQubit { qubit: 1 })
        ));
    }
}
