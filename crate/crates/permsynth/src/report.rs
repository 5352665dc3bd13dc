//! Text and JSON renderings of decompositions, oracle results, gate counts
//! and matrices.

use std::fmt::Write as _;

use permsynth_core::perm::PermutationMatrix;
use permsynth_core::{DecompReport, GateCount, OracleResult, TranspositionProduct};
use serde::Serialize;

/// One factor per line in product order, a comment line per cycle, then the
/// `# strategy=<s> length=<k>` trailer.
pub fn decomp_text(r: &DecompReport) -> String {
    let mut out = String::new();
    for t in r.factors.factors() {
        let _ = writeln!(out, "{t}");
    }
    for c in &r.per_cycle {
        let _ = write!(out, "# cycle={} method={}", c.cycle, c.method);
        if let Some(a) = c.anchor {
            let _ = write!(out, " anchor={a}");
        }
        let _ = writeln!(out, " length={}", c.length);
    }
    let _ = writeln!(out, "# strategy={} length={}", r.strategy, r.total_length());
    out
}

#[derive(Debug, Serialize)]
pub struct JsonCycle {
    pub cycle: Vec<u32>,
    pub method: &'static str,
    pub anchor: Option<u32>,
    pub length: usize,
}

#[derive(Debug, Serialize)]
pub struct JsonDecomp {
    pub strategy: &'static str,
    pub length: usize,
    pub factors: Vec<[u32; 2]>,
    pub cycles: Vec<JsonCycle>,
}

pub fn factor_pairs(p: &TranspositionProduct) -> Vec<[u32; 2]> {
    p.factors()
        .iter()
        .map(|t| {
            let (a, b) = t.letters();
            [a.0, b.0]
        })
        .collect()
}

impl From<&DecompReport> for JsonDecomp {
    fn from(r: &DecompReport) -> Self {
        JsonDecomp {
            strategy: r.strategy.name(),
            length: r.total_length(),
            factors: factor_pairs(&r.factors),
            cycles: r
                .per_cycle
                .iter()
                .map(|c| JsonCycle {
                    cycle: c.cycle.letters().iter().map(|l| l.0).collect(),
                    method: c.method.name(),
                    anchor: c.anchor.map(|a| a.0),
                    length: c.length,
                })
                .collect(),
        }
    }
}

/// `length=<k> witness=(a,b)(c,d)... exhausted=<bool>`
pub fn oracle_text(r: &OracleResult) -> String {
    format!("length={} witness={} exhausted={}", r.length, r.witness, r.exhausted)
}

#[derive(Debug, Serialize)]
pub struct JsonOracle {
    pub length: u32,
    pub witness: Vec<[u32; 2]>,
    pub exhausted: bool,
}

impl From<&OracleResult> for JsonOracle {
    fn from(r: &OracleResult) -> Self {
        JsonOracle { length: r.length, witness: factor_pairs(&r.witness), exhausted: r.exhausted }
    }
}

pub fn count_text(c: &GateCount) -> String {
    format!("mct={} cnot={} x={} total={}", c.mct, c.cnot, c.x, c.total)
}

#[derive(Debug, Serialize)]
pub struct JsonCount {
    pub mct: usize,
    pub cnot: usize,
    pub x: usize,
    pub total: usize,
}

impl From<&GateCount> for JsonCount {
    fn from(c: &GateCount) -> Self {
        JsonCount { mct: c.mct, cnot: c.cnot, x: c.x, total: c.total }
    }
}

#[derive(Debug, Serialize)]
pub struct JsonMatrix {
    pub size: usize,
    pub rows: Vec<Vec<u8>>,
}

impl From<&PermutationMatrix> for JsonMatrix {
    fn from(m: &PermutationMatrix) -> Self {
        JsonMatrix { size: m.size(), rows: m.rows().map(<[u8]>::to_vec).collect() }
    }
}
