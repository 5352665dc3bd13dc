//! Multi-controlled Toffoli circuits and the two synthesizers.
//!
//! Line `i < n` carries bit `i` of the basis label. When a circuit has an
//! ancilla it is line `n`. Gates apply in list order, left to right.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::perm::check_qubits;
use crate::{Error, Letter, Result, TranspositionProduct};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Polarity {
    /// Fires when the line is 1.
    Positive,
    /// Fires when the line is 0.
    Negative,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ControlSpec {
    pub line: u32,
    pub polarity: Polarity,
}

impl ControlSpec {
    pub fn positive(line: u32) -> Self {
        ControlSpec { line, polarity: Polarity::Positive }
    }

    pub fn negative(line: u32) -> Self {
        ControlSpec { line, polarity: Polarity::Negative }
    }
}

/// An X on `target` conditioned on every control. Zero controls is a bare X,
/// one control a CNOT (possibly negated).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Gate {
    target: u32,
    controls: Vec<ControlSpec>,
}

impl Gate {
    pub fn new(target: u32, mut controls: Vec<ControlSpec>) -> Result<Self> {
        controls.sort_unstable();
        for w in controls.windows(2) {
            if w[0].line == w[1].line {
                return Err(Error::InvalidGate(format!("two controls on line {}", w[0].line)));
            }
        }
        if controls.iter().any(|c| c.line == target) {
            return Err(Error::InvalidGate(format!("line {target} is both target and control")));
        }
        Ok(Gate { target, controls })
    }

    /// X on `target` controlled by the bit pattern of `letter` on lines
    /// `0..n`, skipping the target line.
    pub fn pattern(target: u32, letter: Letter, n: u32) -> Self {
        let controls = (0..n)
            .filter(|&line| line != target)
            .map(|line| ControlSpec {
                line,
                polarity: if letter.0 >> line & 1 == 1 {
                    Polarity::Positive
                } else {
                    Polarity::Negative
                },
            })
            .collect();
        Gate { target, controls }
    }

    pub fn cnot(control: u32, target: u32) -> Result<Self> {
        Gate::new(target, alloc::vec![ControlSpec::positive(control)])
    }

    pub fn target(&self) -> u32 {
        self.target
    }

    /// Controls sorted by line.
    pub fn controls(&self) -> &[ControlSpec] {
        &self.controls
    }

    /// Highest line the gate touches.
    pub fn max_line(&self) -> u32 {
        self.controls.iter().map(|c| c.line).fold(self.target, u32::max)
    }

    /// `(mask, value)` such that the gate fires on state `s` iff
    /// `s & mask == value`.
    pub fn control_masks(&self) -> (u64, u64) {
        self.controls.iter().fold((0, 0), |(mask, value), c| {
            let bit = 1u64 << c.line;
            match c.polarity {
                Polarity::Positive => (mask | bit, value | bit),
                Polarity::Negative => (mask | bit, value),
            }
        })
    }

    fn controls_line(&self, line: u32) -> bool {
        self.controls.iter().any(|c| c.line == line)
    }

    /// Sufficient condition for `self` and `other` to commute: neither
    /// target is a control of the other, or their controls can never be
    /// satisfied together.
    pub fn commutes_with(&self, other: &Gate) -> bool {
        let (m1, v1) = self.control_masks();
        let (m2, v2) = other.control_masks();
        if (v1 ^ v2) & m1 & m2 != 0 {
            return true;
        }
        !self.controls_line(other.target) && !other.controls_line(self.target)
    }
}

impl fmt::Display for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "X[{}]", self.target)?;
        for c in &self.controls {
            let sign = match c.polarity {
                Polarity::Positive => '+',
                Polarity::Negative => '-',
            };
            write!(f, " {}{}", c.line, sign)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Circuit {
    n: u32,
    has_ancilla: bool,
    gates: Vec<Gate>,
}

impl Circuit {
    pub fn new(n: u32, has_ancilla: bool, gates: Vec<Gate>) -> Result<Self> {
        check_qubits(n)?;
        let width = n + has_ancilla as u32;
        if let Some(g) = gates.iter().find(|g| g.max_line() >= width) {
            return Err(Error::InvalidGate(format!(
                "gate touches line {} but the circuit has {width} lines",
                g.max_line()
            )));
        }
        Ok(Circuit { n, has_ancilla, gates })
    }

    pub fn empty(n: u32, has_ancilla: bool) -> Result<Self> {
        Circuit::new(n, has_ancilla, Vec::new())
    }

    /// Register qubit count.
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn has_ancilla(&self) -> bool {
        self.has_ancilla
    }

    pub fn ancilla_line(&self) -> Option<u32> {
        self.has_ancilla.then_some(self.n)
    }

    /// Total number of lines.
    pub fn width(&self) -> u32 {
        self.n + self.has_ancilla as u32
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    /// The same gates in the opposite order. Every gate is self-inverse, so
    /// this is the inverse circuit.
    pub fn reversed(&self) -> Circuit {
        let mut gates = self.gates.clone();
        gates.reverse();
        Circuit { gates, ..*self }
    }

    /// Appends `other` after `self`.
    pub fn then(&self, other: &Circuit) -> Result<Circuit> {
        if self.n != other.n || self.has_ancilla != other.has_ancilla {
            return Err(Error::QubitCountMismatch(self.width(), other.width()));
        }
        let mut gates = self.gates.clone();
        gates.extend_from_slice(&other.gates);
        Ok(Circuit { gates, ..*self })
    }
}

/// One-ancilla construction. For each factor `(I,J)`, rightmost factor first:
///
/// 1. flip the ancilla on register pattern `I`, then on pattern `J`;
/// 2. for each set bit `i` of `I ^ J` in increasing order, CNOT from the
///    ancilla onto line `i`;
/// 3. repeat step 1, returning the ancilla to 0.
pub fn synth_one_ancilla(factors: &TranspositionProduct) -> Result<Circuit> {
    let n = factors.n();
    let anc = n;
    let mut gates = Vec::new();
    for t in factors.factors().iter().rev() {
        let (i, j) = t.normalized();
        let stage1 = [Gate::pattern(anc, i, n), Gate::pattern(anc, j, n)];
        gates.extend_from_slice(&stage1);
        let diff = i.0 ^ j.0;
        for line in (0..n).filter(|b| diff >> b & 1 == 1) {
            gates.push(Gate::cnot(anc, line)?);
        }
        gates.extend_from_slice(&stage1);
    }
    Circuit::new(n, true, gates)
}

/// Ancilla-free construction: one gate per bit-wise adjacent factor,
/// rightmost factor first. A factor `(I,J)` with `I ^ J = 2^i` becomes an X
/// on line `i` controlled by the shared bits of `I` and `J`.
pub fn synth_no_ancilla(factors: &TranspositionProduct) -> Result<Circuit> {
    let n = factors.n();
    let mut gates = Vec::with_capacity(factors.len());
    for t in factors.factors().iter().rev() {
        let (a, b) = t.letters();
        if !t.is_bit_adjacent() {
            return Err(Error::NotBitAdjacent(a.0, b.0));
        }
        let target = (a.0 ^ b.0).trailing_zeros();
        gates.push(Gate::pattern(target, a, n));
    }
    Circuit::new(n, false, gates)
}

/// Cancels pairs of identical gates that are adjacent once commuting gates
/// in between are moved aside, until no more pairs remain. Gate count never
/// increases and the realized permutation is unchanged.
pub fn peephole_cancel(c: &Circuit) -> Circuit {
    let mut gates = c.gates.clone();
    loop {
        let mut changed = false;
        let mut out: Vec<Gate> = Vec::with_capacity(gates.len());
        for g in gates {
            let mut partner = None;
            for (idx, prev) in out.iter().enumerate().rev() {
                if *prev == g {
                    partner = Some(idx);
                    break;
                }
                if !prev.commutes_with(&g) {
                    break;
                }
            }
            match partner {
                Some(idx) => {
                    out.remove(idx);
                    changed = true;
                }
                None => out.push(g),
            }
        }
        gates = out;
        if !changed {
            break;
        }
    }
    Circuit { gates, ..*c }
}

/// Gate tally by number of controls.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct GateCount {
    /// Two or more controls.
    pub mct: usize,
    pub cnot: usize,
    pub x: usize,
    pub total: usize,
}

pub fn gate_count(c: &Circuit) -> GateCount {
    let mut count = GateCount::default();
    for g in &c.gates {
        match g.controls.len() {
            0 => count.x += 1,
            1 => count.cnot += 1,
            _ => count.mct += 1,
        }
    }
    count.total = c.gates.len();
    count
}
