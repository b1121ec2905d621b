#![no_std]
//! Small finite groups: permutations, stabilizer chains, element tables,
//! finitely presented groups, GF(p) matrix groups, and automorphism search.
//!
//! Products are read left to right: `compose(a, b)` applies `a` first.
//! Conjugation is `a^b = b^-1 a b` and the commutator is `(a, b) = a^-1 b^-1 a b`.

extern crate alloc;

pub mod aut;
pub mod build;
pub mod catalog;
pub mod chain;
pub mod coset;
pub mod error;
pub mod matrix;
pub mod modular;
pub mod perm;
pub mod spec;
pub mod subgroups;
pub mod table;
pub mod words;

pub use error::{Error, Result};
pub use perm::Permutation;
pub use table::{ElementTable, Fingerprint};

/// Default element cap for explicit element tables.
pub const DEFAULT_MAX_ELEMENTS: usize = 5000;
/// Default coset cap for Todd-Coxeter.
pub const DEFAULT_MAX_COSETS: usize = 200_000;
