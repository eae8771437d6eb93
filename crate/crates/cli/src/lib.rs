//! Command-line front end for `markov-core`.
//!
//! Kernels and Gaussian morphisms are read from JSON files (see [`format`]),
//! commands run constructions, decision procedures and law checks, and each
//! invocation yields one JSON report plus an exit code (see [`error`]).

pub mod commands;
pub mod error;
pub mod format;
mod witness;

pub use commands::{run, Outcome};
