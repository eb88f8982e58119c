//! Circuit identities over Pauli algebra.
//!
//! The crate evaluates mixed bra/ket/operator circuit diagrams to dense
//! matrices, carries a catalog of circuit identities that can be checked
//! numerically, and applies those identities as rewrite rules that preserve
//! the evaluated map.
//!
//! Conventions used throughout:
//!
//! * Circuits store elements in chronological order (element 0 acts first).
//! * The first declared wire is the most significant bit of a basis index.
//! * `RZ(θ)` is `exp(iθσ_Z)` and `ROT(θ⃗)` is `exp(iθ⃗·σ⃗)`.
//! * `S` is `i^n = diag(1, i)`.
//! * A controlled gate `U^π` evaluates to `π⊗U + (1-π)⊗I`.

pub mod catalog;
pub mod circuit;
pub mod gates;
pub mod qft;
pub mod random;
pub mod rewrite;
pub mod tensor;

pub use circuit::{evaluate, parse, to_text, Circuit, CircuitBuilder, CircuitError, Control, Element, EvalResult, Gate};
pub use tensor::{Complex, ComplexMatrix, WireList};
