//! Exact minimal bit-wise adjacent decomposition length.
//!
//! The length of the shortest product of adjacent transpositions equal to
//! `π` is the distance from the identity to `π` in the Cayley graph of the
//! symmetric group on `[[2^n]]` generated by those transpositions. Both ends
//! are searched breadth-first until the frontiers meet.
//!
//! States are image tables packed four bits per letter into a `u64`, which
//! caps the search at `n = 4`.

use alloc::vec;
use alloc::vec::Vec;
use hashbrown::{HashMap, HashSet};

use crate::perm::check_qubits;
use crate::{hamming, Error, Letter, Permutation, Result, Transposition, TranspositionProduct};

pub const ORACLE_MAX_QUBITS: u32 = 4;
pub const DEFAULT_MAX_DEPTH: u32 = 9;

/// All transpositions `(I, I ^ 2^i)` with `I < I ^ 2^i`, sorted.
pub fn generators(n: u32) -> Result<Vec<Transposition>> {
    check_qubits(n)?;
    let mut gens = Vec::with_capacity((n as usize) << (n - 1));
    for a in 0..1u32 << n {
        for bit in 0..n {
            let b = a ^ (1 << bit);
            if a < b {
                gens.push(Transposition::new(a, b)?);
            }
        }
    }
    gens.sort();
    Ok(gens)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    /// Minimal length when `exhausted`, otherwise a lower bound
    /// (`max_depth + 1`).
    pub length: u32,
    /// Lexicographically smallest minimal product; empty when not found.
    pub witness: TranspositionProduct,
    /// Whether the search reached `π` within the depth budget.
    pub exhausted: bool,
}

fn pack(p: &Permutation) -> u64 {
    p.image()
        .iter()
        .enumerate()
        .fold(0u64, |acc, (i, &v)| acc | (v as u64) << (4 * i))
}

/// Right-multiplies the packed permutation by the transposition `(a,b)`,
/// i.e. swaps table entries `a` and `b`.
#[inline]
fn swap_entries(s: u64, a: u32, b: u32) -> u64 {
    let (sa, sb) = (4 * a, 4 * b);
    let x = ((s >> sa) ^ (s >> sb)) & 0xF;
    s ^ (x << sa) ^ (x << sb)
}

struct Side {
    dist: HashMap<u64, u32>,
    layers: Vec<Vec<u64>>,
}

impl Side {
    fn new(root: u64) -> Self {
        let mut dist = HashMap::new();
        dist.insert(root, 0);
        Side { dist, layers: vec![vec![root]] }
    }

    fn depth(&self) -> u32 {
        self.layers.len() as u32 - 1
    }

    fn frontier(&self) -> &[u64] {
        self.layers.last().expect("root layer")
    }

    fn expand(&mut self, gens: &[(u32, u32)]) {
        let next_depth = self.depth() + 1;
        let mut next = Vec::new();
        let frontier = self.layers.last().expect("root layer");
        for &s in frontier {
            for &(a, b) in gens {
                let t = swap_entries(s, a, b);
                if let hashbrown::hash_map::Entry::Vacant(e) = self.dist.entry(t) {
                    e.insert(next_depth);
                    next.push(t);
                }
            }
        }
        self.layers.push(next);
    }
}

/// Shortest product of bit-wise adjacent transpositions equal to `p`,
/// searching words of length up to `max_depth`.
pub fn minimal_length(p: &Permutation, max_depth: u32) -> Result<OracleResult> {
    let n = p.n();
    if n > ORACLE_MAX_QUBITS {
        return Err(Error::OracleTooLarge(n));
    }
    let gens: Vec<(u32, u32)> = generators(n)?
        .iter()
        .map(|t| {
            let (a, b) = t.normalized();
            (a.0, b.0)
        })
        .collect();
    let start = pack(&Permutation::identity(n)?);
    let goal = pack(p);
    if start == goal {
        return Ok(OracleResult { length: 0, witness: TranspositionProduct::new(n)?, exhausted: true });
    }

    let mut fwd = Side::new(start);
    let mut bwd = Side::new(goal);
    while fwd.depth() + bwd.depth() < max_depth {
        let forward = fwd.frontier().len() <= bwd.frontier().len();
        let (grown, other) = if forward { (&mut fwd, &bwd) } else { (&mut bwd, &fwd) };
        grown.expand(&gens);
        // Every earlier pair of layers was already disjoint, so any meeting
        // state lies on the other side's current frontier.
        let meet: HashSet<u64> = grown
            .frontier()
            .iter()
            .copied()
            .filter(|s| other.dist.contains_key(s))
            .collect();
        if meet.is_empty() {
            continue;
        }
        debug_assert!(meet.iter().all(|s| other.dist[s] == other.depth()));
        let word = reconstruct(&fwd, &bwd, meet, &gens);
        let length = word.len() as u32;
        let factors = word
            .into_iter()
            .map(|(a, b)| Transposition::new(a, b))
            .collect::<Result<Vec<_>>>()?;
        let witness = TranspositionProduct::from_factors(n, factors)?;
        return Ok(OracleResult { length, witness, exhausted: true });
    }
    Ok(OracleResult {
        length: max_depth + 1,
        witness: TranspositionProduct::new(n)?,
        exhausted: false,
    })
}

/// Lexicographically smallest generator word from the identity through the
/// meeting set to the goal.
fn reconstruct(fwd: &Side, bwd: &Side, meet: HashSet<u64>, gens: &[(u32, u32)]) -> Vec<(u32, u32)> {
    let df = fwd.depth() as usize;
    // on_path[k]: states at forward depth k that lie on some shortest path.
    let mut on_path: Vec<HashSet<u64>> = vec![HashSet::new(); df + 1];
    on_path[df] = meet;
    for k in (0..df).rev() {
        let (lower, upper) = on_path.split_at_mut(k + 1);
        let next = &upper[0];
        lower[k] = fwd.layers[k]
            .iter()
            .copied()
            .filter(|&s| gens.iter().any(|&(a, b)| next.contains(&swap_entries(s, a, b))))
            .collect();
    }

    let mut word = Vec::new();
    let mut s = fwd.layers[0][0];
    for next in &on_path[1..] {
        let &(a, b) = gens
            .iter()
            .find(|&&(a, b)| next.contains(&swap_entries(s, a, b)))
            .expect("shortest path continues");
        s = swap_entries(s, a, b);
        word.push((a, b));
    }
    for d in (1..=bwd.depth()).rev() {
        let &(a, b) = gens
            .iter()
            .find(|&&(a, b)| bwd.dist.get(&swap_entries(s, a, b)) == Some(&(d - 1)))
            .expect("backward distances decrease to the goal");
        s = swap_entries(s, a, b);
        word.push((a, b));
    }
    word
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LengthViolation {
    pub transposition: Transposition,
    pub predicted: u32,
    pub found: OracleResult,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TranspositionLengthReport {
    pub n: u32,
    pub checked: usize,
    pub max_length: u32,
    pub violations: Vec<LengthViolation>,
}

impl TranspositionLengthReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks that every transposition `(I,J)` of `[[2^n]]` has minimal adjacent
/// length exactly `2·hamming(I,J) − 1`.
pub fn certify_transposition_lengths(n: u32) -> Result<TranspositionLengthReport> {
    if n > ORACLE_MAX_QUBITS {
        return Err(Error::OracleTooLarge(n));
    }
    check_qubits(n)?;
    let mut report = TranspositionLengthReport { n, checked: 0, max_length: 0, violations: Vec::new() };
    let size = 1u32 << n;
    for i in 0..size {
        for j in i + 1..size {
            let t = Transposition::new(i, j)?;
            let predicted = 2 * hamming(Letter(i), Letter(j)) - 1;
            let found = minimal_length(&Permutation::from_transposition(n, &t)?, 2 * n - 1)?;
            report.checked += 1;
            if found.exhausted {
                report.max_length = report.max_length.max(found.length);
            }
            if !found.exhausted || found.length != predicted {
                report.violations.push(LengthViolation { transposition: t, predicted, found });
            }
        }
    }
    Ok(report)
}
