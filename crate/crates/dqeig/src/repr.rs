//! Real block representation of dual quaternion matrices.
//!
//! A quaternion matrix `A = A₁ + A₂ i + A₃ j + A₄ k` maps to the real matrix
//!
//! ```text
//!         ⎡  A₁   A₃   A₂   A₄ ⎤
//!  σ(A) = ⎢ −A₃   A₁   A₄  −A₂ ⎥      (4m × 4n)
//!         ⎢ −A₂  −A₄   A₁   A₃ ⎥
//!         ⎣ −A₄   A₂  −A₃   A₁ ⎦
//! ```
//!
//! applied separately to the standard and dual parts, so a dual quaternion
//! matrix becomes a [`DualMatrix`]. The map is a homomorphism:
//! `σ(A C) = σ(A) σ(C)`, `σ(A + B) = σ(A) + σ(B)`, and `σ(a A) = a σ(A)` for
//! dual numbers `a`. The *column map* keeps only the first block column,
//! `σ_c(A) = [A₁; −A₃; −A₂; −A₄]` (4m × n), which represents matrices and
//! vectors without the four-fold redundancy and satisfies
//! `σ_c(A C) = σ(A) σ_c(C)`. Both maps copy and negate components, so a
//! round trip through `σ_c` is exact bit for bit.

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};
use crate::linalg::{DQMatrix, DQVector, DualMatrix, QuatMatrix};
use crate::scalar::{DualQuaternion, Quaternion};

/// Full real image `σ(A)`, a `4m × 4n` dual matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct SigmaImage {
    pub value: DualMatrix,
}

/// Column map `σ_c(A)`, a `4m × n` dual matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct SigmaColumn {
    pub value: DualMatrix,
}

fn write_block(t: &mut DMatrix<f64>, i: usize, j: usize, m: usize, n: usize, q: &Quaternion) {
    let (a1, a2, a3, a4) = (q.w, q.x, q.y, q.z);
    t[(i, j)] = a1;
    t[(i, n + j)] = a3;
    t[(i, 2 * n + j)] = a2;
    t[(i, 3 * n + j)] = a4;
    t[(m + i, j)] = -a3;
    t[(m + i, n + j)] = a1;
    t[(m + i, 2 * n + j)] = a4;
    t[(m + i, 3 * n + j)] = -a2;
    t[(2 * m + i, j)] = -a2;
    t[(2 * m + i, n + j)] = -a4;
    t[(2 * m + i, 2 * n + j)] = a1;
    t[(2 * m + i, 3 * n + j)] = a3;
    t[(3 * m + i, j)] = -a4;
    t[(3 * m + i, n + j)] = a2;
    t[(3 * m + i, 2 * n + j)] = -a3;
    t[(3 * m + i, 3 * n + j)] = a1;
}

/// Full real image of a dual quaternion matrix.
pub fn sigma(a: &DQMatrix) -> SigmaImage {
    let (m, n) = (a.rows(), a.cols());
    let mut st = DMatrix::zeros(4 * m, 4 * n);
    let mut du = DMatrix::zeros(4 * m, 4 * n);
    for i in 0..m {
        for j in 0..n {
            let q = a[(i, j)];
            write_block(&mut st, i, j, m, n, &q.st);
            write_block(&mut du, i, j, m, n, &q.du);
        }
    }
    SigmaImage {
        value: DualMatrix { st, du },
    }
}

fn write_column(t: &mut DMatrix<f64>, i: usize, j: usize, m: usize, q: &Quaternion) {
    t[(i, j)] = q.w;
    t[(m + i, j)] = -q.y;
    t[(2 * m + i, j)] = -q.x;
    t[(3 * m + i, j)] = -q.z;
}

/// Column map of a dual quaternion matrix.
pub fn sigma_col(a: &DQMatrix) -> SigmaColumn {
    let (m, n) = (a.rows(), a.cols());
    let mut st = DMatrix::zeros(4 * m, n);
    let mut du = DMatrix::zeros(4 * m, n);
    for i in 0..m {
        for j in 0..n {
            let q = a[(i, j)];
            write_column(&mut st, i, j, m, &q.st);
            write_column(&mut du, i, j, m, &q.du);
        }
    }
    SigmaColumn {
        value: DualMatrix { st, du },
    }
}

fn quat_from_column(t: &DMatrix<f64>, i: usize, j: usize, m: usize) -> Quaternion {
    Quaternion::new(
        t[(i, j)],
        -t[(2 * m + i, j)],
        -t[(m + i, j)],
        -t[(3 * m + i, j)],
    )
}

/// Inverse of the column map: reads an `m × n` dual quaternion matrix back
/// out of a `4m × n` dual matrix. Exact bit for bit.
pub fn reconstruct(s: &SigmaColumn, m: usize, n: usize) -> Result<DQMatrix> {
    let (r, c) = s.value.shape();
    if r != 4 * m || c != n {
        return Err(Error::dim(format!(
            "column image of shape {r}x{c} cannot hold a {m}x{n} matrix (need {}x{})",
            4 * m,
            n
        )));
    }
    Ok(DQMatrix::from_fn(m, n, |i, j| {
        DualQuaternion::new(
            quat_from_column(&s.value.st, i, j, m),
            quat_from_column(&s.value.du, i, j, m),
        )
    }))
}

/// Reads a quaternion matrix out of the real column image of its standard
/// part (used where only the standard part is in play, e.g. real inverses).
pub fn quat_matrix_from_real_columns(t: &DMatrix<f64>, m: usize, n: usize) -> Result<QuatMatrix> {
    if t.nrows() != 4 * m || t.ncols() != n {
        return Err(Error::dim(format!(
            "real column image of shape {}x{} cannot hold a {m}x{n} matrix",
            t.nrows(),
            t.ncols()
        )));
    }
    let mut q = QuatMatrix::zeros(m, n);
    for i in 0..m {
        for j in 0..n {
            q[(i, j)] = quat_from_column(t, i, j, m);
        }
    }
    Ok(q)
}

/// Column map of a vector as a pair of real vectors (standard, dual).
pub fn vector_to_real_columns(x: &DQVector) -> (DVector<f64>, DVector<f64>) {
    let n = x.len();
    let mut st = DVector::zeros(4 * n);
    let mut du = DVector::zeros(4 * n);
    for i in 0..n {
        let q = x[i];
        st[i] = q.st.w;
        st[n + i] = -q.st.y;
        st[2 * n + i] = -q.st.x;
        st[3 * n + i] = -q.st.z;
        du[i] = q.du.w;
        du[n + i] = -q.du.y;
        du[2 * n + i] = -q.du.x;
        du[3 * n + i] = -q.du.z;
    }
    (st, du)
}

/// Inverse of [`vector_to_real_columns`]. Exact bit for bit.
pub fn vector_from_real_columns(st: &DVector<f64>, du: &DVector<f64>) -> Result<DQVector> {
    if st.len() != du.len() || !st.len().is_multiple_of(4) {
        return Err(Error::dim(format!(
            "column images of lengths {} and {} cannot hold a vector",
            st.len(),
            du.len()
        )));
    }
    let n = st.len() / 4;
    Ok(DQVector::from_fn(n, |i| {
        DualQuaternion::new(
            Quaternion::new(st[i], -st[2 * n + i], -st[n + i], -st[3 * n + i]),
            Quaternion::new(du[i], -du[2 * n + i], -du[n + i], -du[3 * n + i]),
        )
    }))
}
