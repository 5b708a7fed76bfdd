//! One-point algebraic-geometry codes on the maximal curves
//! `y^q + y = x^s` over GF(q^2), with Hermitian self-orthogonality analysis,
//! quantum stabilizer parameters and channel experiments.

pub mod agcode;
pub mod channel;
pub mod curve;
pub mod error;
pub mod galois;
pub mod linalg;
pub mod quantum;
pub mod semigroup;

pub use error::{Error, Result};
