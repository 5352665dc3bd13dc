//! Circuit file formats.
//!
//! Native text, one gate per line after a header:
//!
//! ```text
//! QUBITS 3 ANCILLA 1
//! MCX t=3 c=0+,1-,2+
//! CX t=0 c=3+
//! ```
//!
//! `CX` is used for a single positive control, `X` for no controls and `MCX`
//! for everything else. Blank lines and lines starting with `#` are ignored
//! when reading.

use std::fmt::Write as _;

use permsynth_core::{Circuit, ControlSpec, Gate, Polarity};
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Circuit(#[from] permsynth_core::Error),
}

fn parse_err(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Parse { line, message: message.into() }
}

fn sign(p: Polarity) -> char {
    match p {
        Polarity::Positive => '+',
        Polarity::Negative => '-',
    }
}

pub fn gate_line(g: &Gate) -> String {
    let controls = g.controls();
    match controls {
        [] => format!("X t={}", g.target()),
        [c] if c.polarity == Polarity::Positive => format!("CX t={} c={}+", g.target(), c.line),
        _ => {
            let list: Vec<String> = controls.iter().map(|c| format!("{}{}", c.line, sign(c.polarity))).collect();
            format!("MCX t={} c={}", g.target(), list.join(","))
        }
    }
}

pub fn to_native(c: &Circuit) -> String {
    let mut out = format!("QUBITS {} ANCILLA {}\n", c.n(), c.has_ancilla() as u8);
    for g in c.gates() {
        out.push_str(&gate_line(g));
        out.push('\n');
    }
    out
}

fn parse_line_number(s: &str, line: usize, what: &str) -> Result<u32, FormatError> {
    s.parse().map_err(|_| parse_err(line, format!("invalid {what} '{s}'")))
}

fn parse_controls(list: &str, line: usize) -> Result<Vec<ControlSpec>, FormatError> {
    list.split(',')
        .map(|item| {
            let (num, polarity) = if let Some(num) = item.strip_suffix('+') {
                (num, Polarity::Positive)
            } else if let Some(num) = item.strip_suffix('-') {
                (num, Polarity::Negative)
            } else {
                return Err(parse_err(line, format!("control '{item}' lacks a '+' or '-' polarity")));
            };
            Ok(ControlSpec { line: parse_line_number(num, line, "control line")?, polarity })
        })
        .collect()
}

fn parse_gate(text: &str, line: usize) -> Result<Gate, FormatError> {
    let mut words = text.split_whitespace();
    let kind = words.next().unwrap_or_default();
    let target = words
        .next()
        .and_then(|w| w.strip_prefix("t="))
        .ok_or_else(|| parse_err(line, "expected 't=<target>'"))?;
    let target = parse_line_number(target, line, "target")?;
    let controls = match words.next() {
        None => Vec::new(),
        Some(w) => {
            let list = w.strip_prefix("c=").ok_or_else(|| parse_err(line, "expected 'c=<controls>'"))?;
            parse_controls(list, line)?
        }
    };
    if words.next().is_some() {
        return Err(parse_err(line, "trailing input"));
    }
    let ok = match kind {
        "X" => controls.is_empty(),
        "CX" => matches!(controls.as_slice(), [c] if c.polarity == Polarity::Positive),
        "MCX" => !controls.is_empty(),
        other => return Err(parse_err(line, format!("unknown gate kind '{other}'"))),
    };
    if !ok {
        return Err(parse_err(line, format!("wrong controls for {kind}")));
    }
    Gate::new(target, controls).map_err(|e| parse_err(line, e.to_string()))
}

pub fn parse_native(text: &str) -> Result<Circuit, FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "missing QUBITS header"))?;
    let words: Vec<&str> = header.split_whitespace().collect();
    let (n, ancilla) = match words.as_slice() {
        ["QUBITS", n, "ANCILLA", a] => {
            let n = parse_line_number(n, hline, "qubit count")?;
            let ancilla = match *a {
                "0" => false,
                "1" => true,
                other => return Err(parse_err(hline, format!("ANCILLA must be 0 or 1, got '{other}'"))),
            };
            (n, ancilla)
        }
        _ => return Err(parse_err(hline, "expected 'QUBITS <n> ANCILLA <0|1>'")),
    };
    let gates = lines.map(|(i, l)| parse_gate(l, i)).collect::<Result<Vec<_>, _>>()?;
    Ok(Circuit::new(n, ancilla, gates)?)
}

/// OpenQASM 2 text. The ancilla, if any, is `q[n]`. Negative controls are
/// conjugated with `x`; gates with two or more controls are a single `mcx`
/// with the target last.
pub fn to_qasm(c: &Circuit) -> String {
    let mut out = String::from("OPENQASM 2.0;\ninclude \"qelib1.inc\";\n");
    if let Some(anc) = c.ancilla_line() {
        let _ = writeln!(out, "// q[{anc}] is an ancilla initialized to |0>");
    }
    let _ = writeln!(out, "qreg q[{}];", c.width());
    for g in c.gates() {
        let negated: Vec<u32> = g
            .controls()
            .iter()
            .filter(|c| c.polarity == Polarity::Negative)
            .map(|c| c.line)
            .collect();
        for l in &negated {
            let _ = writeln!(out, "x q[{l}];");
        }
        let operands: Vec<String> = g
            .controls()
            .iter()
            .map(|c| c.line)
            .chain(std::iter::once(g.target()))
            .map(|l| format!("q[{l}]"))
            .collect();
        let name = match g.controls().len() {
            0 => "x",
            1 => "cx",
            _ => "mcx",
        };
        let _ = writeln!(out, "{name} {};", operands.join(","));
        for l in &negated {
            let _ = writeln!(out, "x q[{l}];");
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonControl {
    pub line: u32,
    /// `"+"` or `"-"`.
    pub polarity: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonGate {
    pub target: u32,
    pub controls: Vec<JsonControl>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonCircuit {
    pub qubits: u32,
    pub ancilla: bool,
    pub gates: Vec<JsonGate>,
}

impl From<&Circuit> for JsonCircuit {
    fn from(c: &Circuit) -> Self {
        let gates = c
            .gates()
            .iter()
            .map(|g| JsonGate {
                target: g.target(),
                controls: g
                    .controls()
                    .iter()
                    .map(|c| JsonControl { line: c.line, polarity: sign(c.polarity).to_string() })
                    .collect(),
            })
            .collect();
        JsonCircuit { qubits: c.n(), ancilla: c.has_ancilla(), gates }
    }
}

impl TryFrom<JsonCircuit> for Circuit {
    type Error = FormatError;

    fn try_from(j: JsonCircuit) -> Result<Self, FormatError> {
        let mut gates = Vec::with_capacity(j.gates.len());
        for (i, g) in j.gates.into_iter().enumerate() {
            let controls = g
                .controls
                .into_iter()
                .map(|c| {
                    let polarity = match c.polarity.as_str() {
                        "+" => Polarity::Positive,
                        "-" => Polarity::Negative,
                        other => return Err(parse_err(i + 1, format!("polarity '{other}'"))),
                    };
                    Ok(ControlSpec { line: c.line, polarity })
                })
                .collect::<Result<Vec<_>, _>>()?;
            gates.push(Gate::new(g.target, controls)?);
        }
        Ok(Circuit::new(j.qubits, j.ancilla, gates)?)
    }
}

pub fn to_json(c: &Circuit) -> String {
    serde_json::to_string_pretty(&JsonCircuit::from(c)).expect("circuit serializes")
}

pub fn parse_json(text: &str) -> Result<Circuit, FormatError> {
    let j: JsonCircuit = serde_json::from_str(text)?;
    Circuit::try_from(j)
}

/// Reads either format: JSON when the first non-blank character is `{`, the
/// native text format otherwise. A JSON document produced by `synth` (with
/// the circuit under a `"circuit"` key) is accepted too.
pub fn parse_any(text: &str) -> Result<Circuit, FormatError> {
    if !text.trim_start().starts_with('{') {
        return parse_native(text);
    }
    let value: serde_json::Value = serde_json::from_str(text)?;
    let inner = value.get("circuit").cloned().unwrap_or(value);
    Circuit::try_from(serde_json::from_value::<JsonCircuit>(inner)?)
}
