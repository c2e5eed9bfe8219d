//! Hermitian eigensolvers over dual quaternions.

pub mod builtin;
pub mod eigen;
pub mod error;
pub mod graphs;
pub mod linalg;
pub mod oracle;
pub mod random;
pub mod repr;
pub mod scalar;
pub mod solver;

pub use error::{Error, Result};
pub use linalg::{DQMatrix, DQVector, DualMatrix};
pub use scalar::{DualNumber, DualQuaternion, Quaternion};
