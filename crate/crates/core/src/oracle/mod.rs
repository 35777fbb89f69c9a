//! Seeded random matrices with prescribed spectra, a small eigensolver, and
//! Monte-Carlo harnesses that feed sampled spectra back into the exact
//! checkers.

pub mod eigen;
pub mod haar;
pub mod matrix;
pub mod rng;
pub mod sampling;
pub mod synth;

pub use eigen::{eig_hermitian, eig_unitary, singular_spectrum};
pub use haar::haar_unitary;
pub use matrix::ComplexMatrix;
pub use rng::{trial_rng, TrialRng};
pub use sampling::{monte_carlo_product, monte_carlo_singular, monte_carlo_sum, SampleFailure, SampleReport};
pub use synth::{hermitian_with_spectrum, matrix_with_singular_values, unitary_with_spectrum};
