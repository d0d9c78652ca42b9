//! Stabilizer-code workbench.
//!
//! This crate analyzes a family of stabilizer quantum error-correcting codes
//! read off higher-genus surface layouts — a 6-qubit genus-2 unit cell, its
//! vertical chains and grid-parameter formulas, 13- and 24-qubit genus-5
//! layouts, and a 5-qubit planar comparison code — together with the generic
//! machinery needed to interrogate them:
//!
//! * [`pauli`] — exact Pauli-operator algebra over a packed binary symplectic
//!   representation (bit-vectors for X/Z supports, a power-of-`i` phase).
//! * [`bits`] — bit-packed GF(2) vectors and row echelon forms with
//!   combination and kernel tracking.
//! * [`code`] — stabilizer-code construction and validation, logical-pair
//!   checking, group membership and enumeration, and report-style diagnosis
//!   of *invalid* generator sets.
//! * [`catalog`] — the built-in code layouts as transcribed constants.
//! * [`state`] — dense state-vector preparation of logical states and
//!   expectation values.
//! * [`distance`] — code distance by brute-force Knill–Laflamme verification
//!   and by symplectic normalizer search, cross-validated, with deterministic
//!   witnesses.
//! * [`dephasing`] — exact Gaussian-dephasing evolution (global and local),
//!   logical Bloch coordinates, and adjudication of a recorded closed form
//!   against the oracle.
//!
//! # Validation honesty
//!
//! Two of the shipped layouts — [`catalog::genus5_unit`] and
//! [`catalog::genus5_stacked`] — carry generator lists that are **not
//! abelian** as transcribed, so they fail stabilizer validation by
//! construction. The crate does not repair them: the constructors return the
//! offending pair, [`code::validate_definition`] reports every anticommuting
//! index pair, and the analysis layers operate on whatever *is* buildable.
//! Similarly, the recorded chain-of-two-units distance (3) and the recorded
//! closed-form dephasing coordinates are checked against computation and the
//! discrepancies are reported, not patched over.

#![forbid(unsafe_code)]
#![warn(missing_docs)]

pub mod bits;
pub mod catalog;
pub mod code;
pub mod dephasing;
pub mod distance;
pub mod pauli;
pub mod state;

/// Formatting helpers shared by library consumers (CLI, tests).
pub mod util {
    /// Format a float with 17 significant digits in scientific notation,
    /// normalizing negative zero — enough digits to round-trip any `f64`
    /// exactly, and byte-stable across runs.
    pub fn format_sig17(x: f64) -> String {
        let x = if x == 0.0 { 0.0 } else { x };
        format!("{x:.16e}")
    }

}

pub use code::{
    CodeDefinition, CodeError, CodeParameters, DefinitionReport, LogicalPair, LogicalPairReport,
    StabilizerCode,
};
pub use pauli::{PauliError, PauliLetter, PauliOperator};
