//! Spectral problems for sums and products of matrices, decided by
//! Littlewood-Richardson and quantum Schubert combinatorics and checked
//! against a seeded random-matrix oracle.

pub mod cli;
pub mod combinatorics;
pub mod error;
pub mod horn;
pub mod lr;
pub mod oracle;
pub mod quantum;
pub mod spectrum;

pub use combinatorics::{Partition, SchubertIndex};
pub use error::{Error, Result};
pub use spectrum::Spectrum;

/// Version tag carried by every serialized report.
pub const SCHEMA_VERSION: &str = "1";
