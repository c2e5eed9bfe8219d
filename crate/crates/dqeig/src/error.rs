//! Error type shared by every module of the crate.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong in the scalar algebra, the linear algebra
/// layer, the solvers, and the graph generators.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An operand had a zero standard part where an appreciable (invertible)
    /// quantity is required.
    #[error("operand is not appreciable: its standard part vanishes")]
    NotAppreciable,

    /// A real-analytic operation was evaluated outside its domain
    /// (e.g. the square root of a dual number with non-positive standard part).
    #[error("domain error: {0}")]
    Domain(&'static str),

    /// Division by an exactly zero scalar.
    #[error("division by zero")]
    ZeroDivision,

    /// Operand shapes do not line up.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// A matrix expected to be Hermitian failed the deviation check.
    #[error("matrix is not Hermitian within tolerance")]
    NotHermitian,

    /// A quadratic form v*Av that must be a dual number (real quaternion
    /// parts) carried a quaternion-imaginary residue above tolerance.
    #[error("quadratic form is not Hermitian-like: imaginary residue {residue:.3e} exceeds bound {bound:.3e}")]
    NotHermitianLike { residue: f64, bound: f64 },

    /// The standard part of a matrix is singular where an inverse is needed.
    #[error("standard part is singular")]
    SingularStandardPart,

    /// A null-space solve was requested on a numerically nonsingular matrix.
    #[error("matrix is not singular within tolerance: smallest/largest singular value ratio {ratio:.3e}")]
    NotSingular { ratio: f64 },

    /// An inner eigeniteration hit its iteration cap without converging.
    #[error("eigeniteration for pair {index} stalled: residual {residual:.3e} after {iterations} iterations")]
    Stalled {
        index: usize,
        iterations: usize,
        residual: f64,
    },

    /// The standard-part spectrum is too clustered for first-order
    /// perturbation to be well defined.
    #[error("spectrum is degenerate: smallest eigenvalue gap {gap:.3e} below bound {bound:.3e}")]
    DegenerateSpectrum { gap: f64, bound: f64 },

    /// A generator was asked for a structure below its minimum size.
    #[error("size {got} is too small: need at least {min}")]
    TooSmall { min: usize, got: usize },

    /// A diagonal shift of exactly zero was requested.
    #[error("shift must be nonzero")]
    ZeroShift,
}

impl Error {
    /// Convenience constructor for shape mismatches.
    pub fn dim(msg: impl Into<String>) -> Self {
        Error::DimensionMismatch(msg.into())
    }
}
