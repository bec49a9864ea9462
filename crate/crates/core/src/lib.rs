//! Exact-arithmetic toolkit for toric ideals defined by integer vector
//! configurations.
//!
//! The crate computes the combinatorial objects attached to a configuration
//! `A` (rational and integer kernels, circuits, Graver bases, minimal
//! binomial generating sets), the support graph with its `{0,1}`-matching
//! invariant, bounds on the binomial arithmetical rank, and splitting /
//! radical-splitting numbers together with explicit witness configurations.
//!
//! All arithmetic is arbitrary precision; there is no floating point
//! anywhere in the crate.

pub mod budget;
pub mod error;
pub mod exactla;
pub mod families;
pub mod graphs;
pub mod splitting;
pub mod supports;
pub mod toric;
pub mod verify;

pub use budget::Budget;
pub use error::Error;
pub use exactla::{IntMatrix, OrthogonalComplement, RatVector};
pub use splitting::{SplitCertificate, SplitReport, SplitValue};
pub use supports::{Circuit, Matching01, SupportGraph, SupportSet};
pub use toric::{ADegree, Configuration, GeneratorMode, GeneratorSet, LatticeVector};

/// Arbitrary-precision integer used throughout.
pub type Int = num_bigint::BigInt;
/// Arbitrary-precision rational used throughout.
pub type Rat = num_rational::BigRational;
