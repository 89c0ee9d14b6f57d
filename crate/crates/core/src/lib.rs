//! Fusion rings, modular data and rule-based classification of odd-rank
//! multiplicity-free, non-self-dual (MNSD) modular categories.
//!
//! - [`ring`]: fusion rings, validation, Frobenius-Perron dimensions, JSON I/O.
//! - [`lattice`]: pointed and adjoint subrings, universal grading, stabilizers.
//! - [`cyclotomic`]: exact arithmetic in `Q(ζ_n)`.
//! - [`modular`]: S and T data, balancing, modularity and Galois-style checks.
//! - [`filters`]: hypotheses, the arithmetic rule catalog and saturation.
//! - [`classifier`]: per-rank case trees built from the rules.
//! - [`cli`]: the `mtclab` command-line front end.
//!
//! Each capability has a runnable example under `examples/`.

pub mod catalog;
pub mod classifier;
pub mod cli;
pub mod cyclotomic;
pub mod filters;
pub mod group;
pub mod lattice;
pub mod modular;
pub mod ring;
