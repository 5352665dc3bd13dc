//! Synthesis of quantum circuits built only from multi-controlled Toffoli
//! gates that realize an arbitrary permutation of the n-qubit computational
//! basis.
//!
//! Two constructions are provided:
//!
//! * [`circuit::synth_one_ancilla`] turns any product of transpositions into a
//!   circuit on `n` register lines plus one clean ancilla.
//! * [`circuit::synth_no_ancilla`] turns a product of *bit-wise adjacent*
//!   transpositions (letters at Hamming distance one) into a circuit with one
//!   gate per factor and no ancilla. [`decomp::reduce`] produces such products
//!   for any permutation.
//!
//! [`sim`] checks circuits against permutations by classical simulation of
//! basis states, and [`oracle`] computes the exact minimal bit-wise adjacent
//! decomposition length by bidirectional breadth-first search.
//!
//! The crate is `no_std` and only needs `alloc`.
//!
//! ```
//! use permsynth_core::{circuit, decomp, sim, Permutation, Strategy};
//!
//! let p = Permutation::parse("(0,7,12)(4,5)", 4).unwrap();
//! let report = decomp::reduce(&p, Strategy::Greedy);
//! assert_eq!(report.total_length(), 7);
//!
//! let c = circuit::synth_no_ancilla(&report.factors).unwrap();
//! assert_eq!(c.gates().len(), 7);
//! assert!(sim::verify(&c, &p).unwrap().is_equal());
//! ```

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod circuit;
pub mod decomp;
mod error;
pub mod oracle;
pub mod perm;
pub mod sim;

pub use circuit::{Circuit, ControlSpec, Gate, GateCount, Polarity};
pub use decomp::{CycleDecomp, CycleMethod, DecompReport, Strategy};
pub use error::{Error, Result};
pub use oracle::OracleResult;
pub use perm::{hamming, Cycle, Letter, Parity, Permutation, Transposition, TranspositionProduct};
pub use sim::{BasisState, Verdict};

/// Largest supported register width. Image tables hold `2^n` entries.
pub const MAX_QUBITS: u32 = 24;
