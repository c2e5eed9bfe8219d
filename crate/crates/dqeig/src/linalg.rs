//! Dense vectors and matrices over dual quaternions.
//!
//! Inner products follow the right-module convention `⟨x, y⟩ = y* x = Σᵢ ȳᵢ xᵢ`,
//! scalars multiply vectors from the right, and Hermitian means `A* = A` under
//! the componentwise quaternion conjugate transpose.
//!
//! The dense kernels (matvec, matmul, outer products) are data-parallel over
//! output rows when the `parallel` feature is enabled. Each output element is
//! produced by exactly one sequential reduction, so results are bitwise
//! identical to the sequential fallback for every thread count.

use std::ops::{Index, IndexMut};

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::scalar::{DualNumber, DualQuaternion, Quaternion};

/// Relative tolerance factor for the Hermitian deviation check:
/// `max |A − A*| ≤ HERMITIAN_TOL_FACTOR · normFR(A)`.
pub const HERMITIAN_TOL_FACTOR: f64 = 1e-10;

/// Relative tolerance factor for the quaternion-imaginary residue of `v*Av`.
pub const RESIDUE_TOL_FACTOR: f64 = 1e-10;

/// Absolute tolerance under which a vector norm counts as exactly one,
/// letting the Rayleigh quotient skip its denominator.
pub const UNIT_NORM_TOL: f64 = 1e-12;

/// Minimum number of fused multiply-accumulate operations before the
/// parallel path is worth its scheduling overhead.
#[cfg(feature = "parallel")]
const PAR_MIN_WORK: usize = 16 * 1024;

/// Fills `out` chunk by chunk with `f(chunk_index, chunk)`, in parallel when
/// the feature is on and the work is large enough. One invocation per chunk
/// keeps the result bitwise independent of the thread count.
fn fill_chunks<F>(out: &mut [DualQuaternion], chunk: usize, work: usize, f: F)
where
    F: Fn(usize, &mut [DualQuaternion]) + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        if work >= PAR_MIN_WORK {
            use rayon::prelude::*;
            out.par_chunks_mut(chunk)
                .enumerate()
                .for_each(|(i, c)| f(i, c));
            return;
        }
    }
    let _ = work;
    for (i, c) in out.chunks_mut(chunk).enumerate() {
        f(i, c);
    }
}

/// Squared magnitude of one entry as a dual number:
/// `|q̂|² = |q_st|² + 2⟨q_st, q_du⟩ ε` (exactly real by construction).
fn mag_sqr_dual(q: &DualQuaternion) -> DualNumber {
    let dot = q.st.w * q.du.w + q.st.x * q.du.x + q.st.y * q.du.y + q.st.z * q.du.z;
    DualNumber::new(q.st.norm_sqr(), 2.0 * dot)
}

// ---------------------------------------------------------------------------
// Vectors
// ---------------------------------------------------------------------------

/// A column vector of dual quaternions.
#[derive(Debug, Clone, PartialEq)]
pub struct DQVector {
    entries: Vec<DualQuaternion>,
}

impl DQVector {
    pub fn from_vec(entries: Vec<DualQuaternion>) -> Self {
        DQVector { entries }
    }

    pub fn zeros(n: usize) -> Self {
        DQVector {
            entries: vec![DualQuaternion::ZERO; n],
        }
    }

    /// Standard basis vector `eᵢ`.
    pub fn basis(n: usize, i: usize) -> Self {
        let mut v = DQVector::zeros(n);
        v.entries[i] = DualQuaternion::ONE;
        v
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize) -> DualQuaternion) -> Self {
        DQVector {
            entries: (0..n).map(&mut f).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, DualQuaternion> {
        self.entries.iter()
    }

    pub fn as_slice(&self) -> &[DualQuaternion] {
        &self.entries
    }

    /// True when the standard-part vector is nonzero.
    pub fn appreciable(&self) -> bool {
        self.entries.iter().any(|q| !q.st.is_zero())
    }

    /// Inner product `⟨x, y⟩ = y* x = Σᵢ ȳᵢ xᵢ` where `x = self`.
    pub fn inner(&self, y: &DQVector) -> Result<DualQuaternion> {
        if self.len() != y.len() {
            return Err(Error::dim(format!(
                "inner product of lengths {} and {}",
                self.len(),
                y.len()
            )));
        }
        let mut acc = DualQuaternion::ZERO;
        for (xi, yi) in self.entries.iter().zip(y.entries.iter()) {
            acc = acc + yi.conj() * *xi;
        }
        Ok(acc)
    }

    /// `⟨x, x⟩` as a dual number, computed so the result is exactly real.
    pub fn inner_self(&self) -> DualNumber {
        self.entries
            .iter()
            .fold(DualNumber::ZERO, |acc, q| acc + mag_sqr_dual(q))
    }

    /// 2-norm as a dual number.
    ///
    /// Appreciable vectors use `√(Σ |x̂ᵢ|²)` with the sum taken over dual
    /// numbers (infinitesimal entries contribute only their standard-part
    /// zero there, since `ε² = 0`); purely infinitesimal vectors fall back
    /// to `‖x_du‖ ε`.
    pub fn norm2(&self) -> DualNumber {
        if self.appreciable() {
            self.inner_self()
                .sqrt()
                .expect("appreciable vector has positive squared norm")
        } else {
            let s: f64 = self.entries.iter().map(|q| q.du.norm_sqr()).sum();
            DualNumber::new(0.0, s.sqrt())
        }
    }

    /// Real-valued norm `√(‖x_st‖² + ‖x_du‖²)` over all components.
    pub fn norm2r(&self) -> f64 {
        let s: f64 = self
            .entries
            .iter()
            .map(|q| q.st.norm_sqr() + q.du.norm_sqr())
            .sum();
        s.sqrt()
    }

    /// Entrywise sum with a matching-length vector.
    pub fn add(&self, y: &DQVector) -> Result<DQVector> {
        if self.len() != y.len() {
            return Err(Error::dim(format!(
                "sum of lengths {} and {}",
                self.len(),
                y.len()
            )));
        }
        Ok(DQVector::from_fn(self.len(), |i| {
            self.entries[i] + y.entries[i]
        }))
    }

    /// Entrywise difference with a matching-length vector.
    pub fn sub(&self, y: &DQVector) -> Result<DQVector> {
        if self.len() != y.len() {
            return Err(Error::dim(format!(
                "difference of lengths {} and {}",
                self.len(),
                y.len()
            )));
        }
        Ok(DQVector::from_fn(self.len(), |i| {
            self.entries[i] - y.entries[i]
        }))
    }

    /// Right scaling `x · k̂` by a dual quaternion.
    pub fn scale(&self, k: &DualQuaternion) -> DQVector {
        DQVector::from_fn(self.len(), |i| self.entries[i] * *k)
    }

    /// Right scaling by a dual number (central scalar).
    pub fn scale_dual(&self, a: &DualNumber) -> DQVector {
        DQVector::from_fn(self.len(), |i| self.entries[i].scale_dual(a))
    }

    /// `self + x · â` with right scaling.
    pub fn axpy(&self, a: &DualQuaternion, x: &DQVector) -> Result<DQVector> {
        if self.len() != x.len() {
            return Err(Error::dim(format!(
                "axpy of lengths {} and {}",
                self.len(),
                x.len()
            )));
        }
        Ok(DQVector::from_fn(self.len(), |i| {
            self.entries[i] + x.entries[i] * *a
        }))
    }

    /// Division by the 2-norm, yielding a vector of norm `1 + 0ε`.
    pub fn normalize(&self) -> Result<DQVector> {
        if !self.appreciable() {
            return Err(Error::NotAppreciable);
        }
        let n = self.norm2();
        let mut out = Vec::with_capacity(self.len());
        for q in &self.entries {
            out.push(q.div_dual(&n)?);
        }
        Ok(DQVector::from_vec(out))
    }
}

impl Index<usize> for DQVector {
    type Output = DualQuaternion;
    fn index(&self, i: usize) -> &DualQuaternion {
        &self.entries[i]
    }
}

impl IndexMut<usize> for DQVector {
    fn index_mut(&mut self, i: usize) -> &mut DualQuaternion {
        &mut self.entries[i]
    }
}

// ---------------------------------------------------------------------------
// Matrices
// ---------------------------------------------------------------------------

/// A dense row-major matrix of dual quaternions.
#[derive(Debug, Clone, PartialEq)]
pub struct DQMatrix {
    rows: usize,
    cols: usize,
    data: Vec<DualQuaternion>,
}

impl DQMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        DQMatrix {
            rows,
            cols,
            data: vec![DualQuaternion::ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = DQMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = DualQuaternion::ONE;
        }
        m
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> DualQuaternion,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        DQMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Row `i` as a slice.
    pub fn row(&self, i: usize) -> &[DualQuaternion] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// Column `j` as a vector.
    pub fn column(&self, j: usize) -> DQVector {
        DQVector::from_fn(self.rows, |i| self[(i, j)])
    }

    /// Matrix–vector product `A x`.
    pub fn matvec(&self, x: &DQVector) -> Result<DQVector> {
        if self.cols != x.len() {
            return Err(Error::dim(format!(
                "matvec of {}x{} with length {}",
                self.rows,
                self.cols,
                x.len()
            )));
        }
        let mut out = vec![DualQuaternion::ZERO; self.rows];
        let xs = x.as_slice();
        fill_chunks(&mut out, 1, self.rows * self.cols, |i, c| {
            let row = self.row(i);
            let mut acc = DualQuaternion::ZERO;
            for (aij, xj) in row.iter().zip(xs.iter()) {
                acc = acc + *aij * *xj;
            }
            c[0] = acc;
        });
        Ok(DQVector::from_vec(out))
    }

    /// Matrix product `A B`.
    pub fn matmul(&self, b: &DQMatrix) -> Result<DQMatrix> {
        if self.cols != b.rows {
            return Err(Error::dim(format!(
                "matmul of {}x{} with {}x{}",
                self.rows, self.cols, b.rows, b.cols
            )));
        }
        let (m, k, n) = (self.rows, self.cols, b.cols);
        let mut out = vec![DualQuaternion::ZERO; m * n];
        fill_chunks(&mut out, n, m * k * n, |i, row_out| {
            let arow = self.row(i);
            for (j, out_ij) in row_out.iter_mut().enumerate() {
                let mut acc = DualQuaternion::ZERO;
                for (l, ail) in arow.iter().enumerate() {
                    acc = acc + *ail * b.data[l * n + j];
                }
                *out_ij = acc;
            }
        });
        Ok(DQMatrix {
            rows: m,
            cols: n,
            data: out,
        })
    }

    /// Conjugate transpose `A*`.
    pub fn adjoint(&self) -> DQMatrix {
        DQMatrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    /// Entrywise sum.
    pub fn add(&self, b: &DQMatrix) -> Result<DQMatrix> {
        self.zip_check(b, "sum")?;
        Ok(DQMatrix::from_fn(self.rows, self.cols, |i, j| {
            self[(i, j)] + b[(i, j)]
        }))
    }

    /// Entrywise difference.
    pub fn sub(&self, b: &DQMatrix) -> Result<DQMatrix> {
        self.zip_check(b, "difference")?;
        Ok(DQMatrix::from_fn(self.rows, self.cols, |i, j| {
            self[(i, j)] - b[(i, j)]
        }))
    }

    fn zip_check(&self, b: &DQMatrix, what: &str) -> Result<()> {
        if self.rows != b.rows || self.cols != b.cols {
            return Err(Error::dim(format!(
                "{what} of {}x{} with {}x{}",
                self.rows, self.cols, b.rows, b.cols
            )));
        }
        Ok(())
    }

    /// Scaling by a dual number (central scalar).
    pub fn scale_dual(&self, a: &DualNumber) -> DQMatrix {
        DQMatrix::from_fn(self.rows, self.cols, |i, j| self[(i, j)].scale_dual(a))
    }

    /// `A − θ̂ I` for square matrices.
    pub fn shift_diag(&self, theta: &DualNumber) -> Result<DQMatrix> {
        if !self.is_square() {
            return Err(Error::dim(format!(
                "diagonal shift of non-square {}x{}",
                self.rows, self.cols
            )));
        }
        let t = DualQuaternion::from_dual(*theta);
        Ok(DQMatrix::from_fn(self.rows, self.cols, |i, j| {
            if i == j {
                self[(i, j)] - t
            } else {
                self[(i, j)]
            }
        }))
    }

    /// Real Frobenius-style norm `√(‖A_st‖_F² + ‖A_du‖_F²)`.
    pub fn norm_fr(&self) -> f64 {
        let s: f64 = self
            .data
            .iter()
            .map(|q| q.st.norm_sqr() + q.du.norm_sqr())
            .sum();
        s.sqrt()
    }

    /// Frobenius norm of the standard part alone (the deflation stop metric).
    pub fn norm_f_standard(&self) -> f64 {
        let s: f64 = self.data.iter().map(|q| q.st.norm_sqr()).sum();
        s.sqrt()
    }

    /// Largest componentwise deviation `max |A − A*|`.
    pub fn hermitian_deviation(&self) -> f64 {
        if !self.is_square() {
            return f64::INFINITY;
        }
        let mut dev = 0.0_f64;
        for i in 0..self.rows {
            for j in i..self.cols {
                let d = self[(i, j)] - self[(j, i)].conj();
                dev = dev.max(d.max_abs());
            }
        }
        dev
    }

    /// True when `max |A − A*| ≤ tol`.
    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermitian_deviation() <= tol
    }

    /// Checks Hermitian-ness at the default relative tolerance
    /// `HERMITIAN_TOL_FACTOR · normFR(A)`.
    pub fn require_hermitian(&self) -> Result<()> {
        if self.is_hermitian(HERMITIAN_TOL_FACTOR * self.norm_fr()) {
            Ok(())
        } else {
            Err(Error::NotHermitian)
        }
    }
}

impl Index<(usize, usize)> for DQMatrix {
    type Output = DualQuaternion;
    fn index(&self, (i, j): (usize, usize)) -> &DualQuaternion {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for DQMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut DualQuaternion {
        &mut self.data[i * self.cols + j]
    }
}

/// Hermitian rank-one matrix `λ̂ u u*`, assembled so that it is Hermitian
/// bit for bit: the lower triangle mirrors the conjugated upper triangle and
/// diagonal entries keep only their (mathematically exact) real components.
pub fn herm_rank1(u: &DQVector, lambda: &DualNumber) -> DQMatrix {
    let n = u.len();
    let mut m = DQMatrix::zeros(n, n);
    for i in 0..n {
        let ui = u[i];
        // diagonal: λ |uᵢ|² is a dual number
        let d = mag_sqr_dual(&ui);
        m[(i, i)] = DualQuaternion::from_dual(*lambda * d);
        for j in (i + 1)..n {
            let t = (ui * u[j].conj()).scale_dual(lambda);
            m[(i, j)] = t;
            m[(j, i)] = t.conj();
        }
    }
    m
}

/// Right-coefficient modified Gram–Schmidt orthonormalization.
///
/// Builds `n` pairwise-orthonormal unit vectors, trying the candidates in
/// order and skipping any that become numerically dependent on the vectors
/// already kept; the standard basis is appended as a fallback pool so a
/// full basis always exists. Coefficients multiply from the right, matching
/// the right-linear structure of eigenspaces over the quaternions.
pub fn orthonormal_basis(n: usize, candidates: &[DQVector]) -> Result<Vec<DQVector>> {
    const DEPENDENT_TOL: f64 = 1e-8;
    let mut basis: Vec<DQVector> = Vec::with_capacity(n);
    let pool = candidates
        .iter()
        .cloned()
        .chain((0..n).map(|i| DQVector::basis(n, i)));
    for cand in pool {
        if basis.len() == n {
            break;
        }
        if cand.len() != n {
            return Err(Error::dim(format!(
                "orthonormal basis of length {} from candidate of length {}",
                n,
                cand.len()
            )));
        }
        let mut w = cand;
        // two projection sweeps: one plain pass plus one re-orthogonalization
        for _ in 0..2 {
            for b in &basis {
                let coef = w.inner(b)?;
                w = w.axpy(&-coef, b)?;
            }
        }
        if w.norm2().st <= DEPENDENT_TOL {
            continue;
        }
        basis.push(w.normalize()?);
    }
    if basis.len() < n {
        return Err(Error::Domain("could not complete an orthonormal basis"));
    }
    Ok(basis)
}

/// Residual `‖A v − v λ̂‖` in the real 2-norm, the convergence metric shared
/// by all solvers.
pub fn residual_2r(a: &DQMatrix, v: &DQVector, lambda: &DualNumber) -> Result<f64> {
    Ok(residual_norms(a, v, lambda)?.1)
}

/// Both residual norms of `A v − v λ̂` at once: the standard part of the
/// dual 2-norm (`‖(A v − v λ̂)_st‖₂`, the quantity the monotone-descent
/// theorem speaks about) and the real 2-norm.
pub fn residual_norms(a: &DQMatrix, v: &DQVector, lambda: &DualNumber) -> Result<(f64, f64)> {
    let av = a.matvec(v)?;
    let diff = av.sub(&v.scale_dual(lambda))?;
    let mut st2 = 0.0;
    let mut du2 = 0.0;
    for i in 0..diff.len() {
        st2 += diff[i].st.norm_sqr();
        du2 += diff[i].du.norm_sqr();
    }
    Ok((st2.sqrt(), (st2 + du2).sqrt()))
}

/// Rayleigh quotient `θ = (v*Av) / (v*v)` as a dual number.
///
/// For Hermitian `A` the quadratic form `v*Av` is a dual number up to
/// roundoff; its quaternion-imaginary residue is checked against
/// `RESIDUE_TOL_FACTOR · normFR(A)` and then discarded. Unit vectors skip
/// the denominator entirely.
pub fn rayleigh_quotient(a: &DQMatrix, v: &DQVector) -> Result<DualNumber> {
    if !v.appreciable() {
        return Err(Error::NotAppreciable);
    }
    let av = a.matvec(v)?;
    let form = av.inner(v)?;
    let residue = form.st.imag_residue().max(form.du.imag_residue());
    let bound = RESIDUE_TOL_FACTOR * a.norm_fr();
    if residue > bound {
        return Err(Error::NotHermitianLike { residue, bound });
    }
    let num = DualNumber::new(form.st.w, form.du.w);
    let den = v.inner_self();
    if (den.st - 1.0).abs() <= UNIT_NORM_TOL && den.du.abs() <= UNIT_NORM_TOL {
        Ok(num)
    } else {
        num.checked_div(&den)
    }
}

/// True when the Rayleigh quotient of `v` lies between the smallest and
/// largest of `eigs` under the total order on dual numbers.
pub fn rq_bounds_check(a: &DQMatrix, v: &DQVector, eigs: &[DualNumber]) -> Result<bool> {
    let theta = rayleigh_quotient(a, v)?;
    let mut lo = eigs[0];
    let mut hi = eigs[0];
    for e in &eigs[1..] {
        if e.cmp_total(&lo).is_lt() {
            lo = *e;
        }
        if e.cmp_total(&hi).is_gt() {
            hi = *e;
        }
    }
    Ok(!theta.cmp_total(&lo).is_lt() && !theta.cmp_total(&hi).is_gt())
}

/// Inverse of a Hermitian matrix with invertible standard part:
/// `Â⁻¹ = B − B A_du B ε` with `B = A_st⁻¹`, where `B` is obtained through
/// the real block representation of the standard part.
pub fn hermitian_inverse(a: &DQMatrix) -> Result<DQMatrix> {
    a.require_hermitian()?;
    let n = a.rows();
    let sig_st = crate::repr::sigma(a).value.st;
    let inv = sig_st.try_inverse().ok_or(Error::SingularStandardPart)?;
    // the first n columns of the real image of B are exactly its column map
    let b_st = crate::repr::quat_matrix_from_real_columns(&inv.columns(0, n).into_owned(), n, n)?;
    let b = DQMatrix::from_fn(n, n, |i, j| DualQuaternion::from_quat(b_st[(i, j)]));
    let a_du = DQMatrix::from_fn(n, n, |i, j| DualQuaternion::from_quat(a[(i, j)].du));
    let bab = b.matmul(&a_du)?.matmul(&b)?;
    Ok(DQMatrix::from_fn(n, n, |i, j| {
        DualQuaternion::new(b[(i, j)].st, -bab[(i, j)].st)
    }))
}

// ---------------------------------------------------------------------------
// Paired real matrices (standard + dual part)
// ---------------------------------------------------------------------------

/// A dual matrix with real entries: `st + du ε` where both parts are real
/// matrices of the same shape. This is the value type of the real block
/// representation.
#[derive(Debug, Clone, PartialEq)]
pub struct DualMatrix {
    pub st: DMatrix<f64>,
    pub du: DMatrix<f64>,
}

impl DualMatrix {
    /// Pairs two equally shaped real matrices.
    pub fn new(st: DMatrix<f64>, du: DMatrix<f64>) -> Result<Self> {
        if st.shape() != du.shape() {
            return Err(Error::dim(format!(
                "dual matrix parts {}x{} vs {}x{}",
                st.nrows(),
                st.ncols(),
                du.nrows(),
                du.ncols()
            )));
        }
        Ok(DualMatrix { st, du })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        DualMatrix {
            st: DMatrix::zeros(rows, cols),
            du: DMatrix::zeros(rows, cols),
        }
    }

    pub fn shape(&self) -> (usize, usize) {
        self.st.shape()
    }

    pub fn add(&self, b: &DualMatrix) -> Result<DualMatrix> {
        if self.shape() != b.shape() {
            return Err(Error::dim("dual matrix sum shapes differ".to_string()));
        }
        Ok(DualMatrix {
            st: &self.st + &b.st,
            du: &self.du + &b.du,
        })
    }

    /// Product with the `ε² = 0` rule: `(A + Bε)(C + Dε) = AC + (AD + BC)ε`.
    pub fn mul(&self, b: &DualMatrix) -> Result<DualMatrix> {
        if self.st.ncols() != b.st.nrows() {
            return Err(Error::dim(format!(
                "dual matrix product {}x{} with {}x{}",
                self.st.nrows(),
                self.st.ncols(),
                b.st.nrows(),
                b.st.ncols()
            )));
        }
        Ok(DualMatrix {
            st: &self.st * &b.st,
            du: &self.st * &b.du + &self.du * &b.st,
        })
    }

    /// Scaling by a dual number.
    pub fn scale_dual(&self, a: &DualNumber) -> DualMatrix {
        DualMatrix {
            st: &self.st * a.st,
            du: &self.st * a.du + &self.du * a.st,
        }
    }

    /// Largest componentwise deviation from another dual matrix.
    pub fn max_abs_diff(&self, b: &DualMatrix) -> f64 {
        let d1 = (&self.st - &b.st).abs().max();
        let d2 = (&self.du - &b.du).abs().max();
        d1.max(d2)
    }

    /// Largest absolute component over both parts.
    pub fn max_abs(&self) -> f64 {
        let a = self.st.abs().max();
        let b = self.du.abs().max();
        a.max(b)
    }
}

/// Quaternion matrix (standard parts only), used internally by the real
/// block representation.
#[derive(Debug, Clone, PartialEq)]
pub struct QuatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Quaternion>,
}

impl QuatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QuatMatrix {
            rows,
            cols,
            data: vec![Quaternion::ZERO; rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }
}

impl Index<(usize, usize)> for QuatMatrix {
    type Output = Quaternion;
    fn index(&self, (i, j): (usize, usize)) -> &Quaternion {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for QuatMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Quaternion {
        &mut self.data[i * self.cols + j]
    }
}
