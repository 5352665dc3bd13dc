//! Classical simulation of MCT circuits on basis states.
//!
//! Permutation circuits map basis states to basis states, so a state is just
//! its integer label and a gate is a conditional bit flip.

use alloc::vec;
use alloc::vec::Vec;

use crate::{Circuit, Error, Gate, Letter, Permutation, Result};

/// Basis label over all lines of a circuit; bit `i` is line `i`, the ancilla
/// (if any) is bit `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct BasisState(pub u64);

/// Flips the target bit when every control is satisfied.
#[inline]
pub fn apply_gate(s: BasisState, g: &Gate) -> BasisState {
    let (mask, value) = g.control_masks();
    if s.0 & mask == value {
        BasisState(s.0 ^ (1 << g.target()))
    } else {
        s
    }
}

/// Gate compiled to `(mask, value, flip)`.
type Compiled = (u64, u64, u64);

fn compile(c: &Circuit) -> Vec<Compiled> {
    c.gates()
        .iter()
        .map(|g| {
            let (mask, value) = g.control_masks();
            (mask, value, 1u64 << g.target())
        })
        .collect()
}

#[inline]
fn run_compiled(gates: &[Compiled], mut s: u64) -> u64 {
    for &(mask, value, flip) in gates {
        if s & mask == value {
            s ^= flip;
        }
    }
    s
}

/// Applies the gates of `c` to `s` in order.
pub fn run(c: &Circuit, s: BasisState) -> BasisState {
    BasisState(run_compiled(&compile(c), s.0))
}

/// The permutation the circuit realizes on the register, with the ancilla
/// (if any) starting at 0. Fails with [`Error::DirtyAncilla`] for the
/// smallest input that leaves the ancilla at 1.
pub fn circuit_to_permutation(c: &Circuit) -> Result<Permutation> {
    let gates = compile(c);
    let size = 1u64 << c.n();
    let register = size - 1;
    let mut image = Vec::with_capacity(size as usize);
    let mut seen = vec![false; size as usize];
    for k in 0..size {
        let out = run_compiled(&gates, k);
        if out & !register != 0 {
            return Err(Error::DirtyAncilla(k));
        }
        if core::mem::replace(&mut seen[out as usize], true) {
            return Err(Error::NonBijective);
        }
        image.push(out as u32);
    }
    Permutation::from_image(c.n(), image)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Equal,
    /// Smallest register input where the circuit and the permutation differ.
    Mismatch { witness: Letter, expected: Letter, actual: Letter },
}

impl Verdict {
    pub fn is_equal(&self) -> bool {
        matches!(self, Verdict::Equal)
    }
}

pub fn verify(c: &Circuit, p: &Permutation) -> Result<Verdict> {
    if c.n() != p.n() {
        return Err(Error::QubitCountMismatch(c.n(), p.n()));
    }
    let realized = circuit_to_permutation(c)?;
    let mismatch = realized
        .image()
        .iter()
        .zip(p.image())
        .position(|(a, b)| a != b);
    Ok(match mismatch {
        None => Verdict::Equal,
        Some(k) => Verdict::Mismatch {
            witness: Letter(k as u32),
            expected: Letter(p.image()[k]),
            actual: Letter(realized.image()[k]),
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::{synth_no_ancilla, synth_one_ancilla};
    use crate::{decomp, Strategy, Transposition, TranspositionProduct};

    fn product(n: u32, pairs: &[(u32, u32)]) -> TranspositionProduct {
        let factors = pairs.iter().map(|&(a, b)| Transposition::new(a, b).unwrap()).collect();
        TranspositionProduct::from_factors(n, factors).unwrap()
    }

    fn perm(text: &str, n: u32) -> Permutation {
        Permutation::parse(text, n).unwrap()
    }

    #[test]
    fn four_six_gate_semantics() {
        let g = Gate::pattern(1, Letter(4), 3);
        assert_eq!(apply_gate(BasisState(4), &g), BasisState(6));
        assert_eq!(apply_gate(BasisState(5), &g), BasisState(5));
        assert_eq!(apply_gate(BasisState(6), &g), BasisState(4));
        for s in 0..8 {
            let s = BasisState(s);
            assert_eq!(apply_gate(apply_gate(s, &g), &g), s);
        }
    }

    #[test]
    fn run_one_ancilla_five_six() {
        let c = synth_one_ancilla(&product(3, &[(5, 6)])).unwrap();
        assert_eq!(run(&c, BasisState(5)), BasisState(6));
        assert_eq!(run(&c, BasisState(6)), BasisState(5));
        assert_eq!(run(&c, BasisState(3)), BasisState(3));
        let empty = Circuit::empty(3, true).unwrap();
        assert_eq!(run(&empty, BasisState(13)), BasisState(13));
    }

    #[test]
    fn extensional_semantics() {
        let c = synth_no_ancilla(&product(3, &[(4, 6)])).unwrap();
        assert_eq!(circuit_to_permutation(&c).unwrap(), perm("(4,6)", 3));
        let c = synth_one_ancilla(&product(3, &[(3, 6), (6, 5)])).unwrap();
        let contracted = crate::circuit::peephole_cancel(&c);
        assert_eq!(circuit_to_permutation(&contracted).unwrap(), perm("(3,6,5)", 3));
        assert_eq!(
            circuit_to_permutation(&Circuit::empty(2, false).unwrap()).unwrap(),
            Permutation::identity(2).unwrap()
        );
    }

    #[test]
    fn verify_verdicts() {
        let pi = perm("(0,7,12)(4,5)", 4);
        let r = decomp::reduce(&pi, Strategy::Greedy);
        let c = synth_no_ancilla(&r.factors).unwrap();
        assert_eq!(verify(&c, &pi), Ok(Verdict::Equal));

        assert_eq!(
            verify(&Circuit::empty(2, false).unwrap(), &perm("(0,1)", 2)),
            Ok(Verdict::Mismatch { witness: Letter(0), expected: Letter(1), actual: Letter(0) })
        );

        let f = decomp::transposition_to_adjacent(4, Letter(7), Letter(12)).unwrap();
        let c = synth_one_ancilla(&f).unwrap();
        assert_eq!(verify(&c, &perm("(7,12)", 4)), Ok(Verdict::Equal));

        assert_eq!(
            verify(&c, &perm("(0,1)", 3)),
            Err(Error::QubitCountMismatch(4, 3))
        );
    }

    #[test]
    fn missing_stage_three_leaves_ancilla_dirty() {
        let c = synth_one_ancilla(&product(3, &[(5, 6)])).unwrap();
        let truncated = Circuit::new(3, true, c.gates()[..4].to_vec()).unwrap();
        assert_eq!(circuit_to_permutation(&truncated), Err(Error::DirtyAncilla(5)));
        assert_eq!(verify(&truncated, &perm("(5,6)", 3)), Err(Error::DirtyAncilla(5)));
    }
}
