//! Independent reference spectrum through the complex adjoint.
//!
//! A Hermitian matrix over the dual quaternions splits as `Â = A + A_I ε`.
//! Writing each quaternion entry as `b + c j` with complex `b, c` maps the
//! standard part to a `2n × 2n` complex Hermitian matrix
//!
//! ```text
//!   χ(A) = [  B   C ]
//!          [ −C̄   B̄ ]
//! ```
//!
//! whose spectrum is the quaternion right spectrum of `A`, each eigenvalue
//! doubled. The dual parts of the eigenvalues then follow from first-order
//! perturbation theory: `λ_I = (u* A_I u)ₛ` for the unit eigenvector `u` of
//! the standard part, and the eigenvector correction
//! `u_I = Σ_{j≠i} u_j (u_j* A_I u_i) / (λ_i − λ_j)` completes the pair so
//! that `Â û = û λ̂` holds exactly under `ε² = 0`.
//!
//! None of this shares code with the iterative solvers, so it serves as an
//! independent oracle for them. It requires the standard-part spectrum to be
//! simple (pairwise gaps above a tolerance); the iterative solvers have no
//! such restriction.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{DQMatrix, DQVector};
use crate::scalar::{DualNumber, DualQuaternion, Quaternion};

/// Minimum relative gap between standard-part eigenvalues: below
/// `ORACLE_GAP_FACTOR · ‖Â‖_F` the perturbation formulas are unreliable and
/// the oracle refuses with [`Error::DegenerateSpectrum`].
pub const ORACLE_GAP_FACTOR: f64 = 1e-6;

/// An eigenpair produced by the oracle. The vector is a unit right
/// eigenvector; its dual part is the first-order correction, so the pair
/// satisfies the eigenvalue equation in exact dual arithmetic.
#[derive(Debug, Clone)]
pub struct OraclePair {
    pub lambda: DualNumber,
    pub vector: DQVector,
}

/// Complex adjoint `χ(A_st)` of the standard part, `2n × 2n`.
///
/// Block layout: `[[B, C], [−C̄, B̄]]` with `B = w + x i` and `C = y + z i`
/// per entry. For a Hermitian input the result is Hermitian bit for bit.
pub fn complex_adjoint(a: &DQMatrix) -> DMatrix<Complex64> {
    let n = a.rows();
    let m = a.cols();
    DMatrix::from_fn(2 * n, 2 * m, |r, c| {
        let q = a[(r % n, c % m)].st;
        let b = Complex64::new(q.w, q.x);
        let cc = Complex64::new(q.y, q.z);
        match (r < n, c < m) {
            (true, true) => b,
            (true, false) => cc,
            (false, true) => -cc.conj(),
            (false, false) => b.conj(),
        }
    })
}

/// Full reference spectrum of a Hermitian matrix with a simple
/// standard-part spectrum, sorted descending.
pub fn reference_spectrum(a: &DQMatrix) -> Result<Vec<OraclePair>> {
    a.require_hermitian()?;
    let n = a.rows();
    if n == 0 {
        return Ok(Vec::new());
    }
    let scale = a.norm_fr();

    let chi = complex_adjoint(a);
    let eig = chi.symmetric_eigen();

    // the complex adjoint doubles every eigenvalue; sort and collapse pairs
    let mut idx: Vec<usize> = (0..2 * n).collect();
    idx.sort_by(|&p, &q| {
        eig.eigenvalues[q]
            .partial_cmp(&eig.eigenvalues[p])
            .expect("eigenvalues of a Hermitian matrix are finite")
    });
    let mut st_vals = Vec::with_capacity(n);
    for i in 0..n {
        let hi = eig.eigenvalues[idx[2 * i]];
        let lo = eig.eigenvalues[idx[2 * i + 1]];
        if (hi - lo).abs() > 1e-7 * (1.0 + scale) {
            return Err(Error::Domain(
                "complex adjoint spectrum did not split into identical pairs",
            ));
        }
        st_vals.push(0.5 * (hi + lo));
    }
    let bound = ORACLE_GAP_FACTOR * scale;
    for i in 0..n.saturating_sub(1) {
        let gap = st_vals[i] - st_vals[i + 1];
        if gap <= bound {
            return Err(Error::DegenerateSpectrum { gap, bound });
        }
    }

    // map one complex eigenvector per pair back to a unit quaternion vector:
    // the adjoint eigenvector is [y; −z̄] for the quaternion vector y + z j
    let mut u_st: Vec<Vec<Quaternion>> = Vec::with_capacity(n);
    for i in 0..n {
        let col = eig.eigenvectors.column(idx[2 * i]);
        let mut u = Vec::with_capacity(n);
        let mut nrm2 = 0.0;
        for r in 0..n {
            let y = col[r];
            let z = (-col[n + r]).conj();
            let q = Quaternion::new(y.re, y.im, z.re, z.im);
            nrm2 += q.norm_sqr();
            u.push(q);
        }
        let inv = 1.0 / nrm2.sqrt();
        for q in &mut u {
            *q = Quaternion::new(q.w * inv, q.x * inv, q.y * inv, q.z * inv);
        }
        u_st.push(u);
    }

    // first-order data: M = U* A_I U in quaternion arithmetic
    let mut m_du = vec![vec![Quaternion::ZERO; n]; n];
    for i in 0..n {
        // t = A_I · uᵢ
        let mut t = vec![Quaternion::ZERO; n];
        for (r, tr) in t.iter_mut().enumerate() {
            let mut acc = Quaternion::ZERO;
            for s in 0..n {
                acc = acc + a[(r, s)].du * u_st[i][s];
            }
            *tr = acc;
        }
        for j in 0..n {
            let mut acc = Quaternion::ZERO;
            for r in 0..n {
                acc = acc + u_st[j][r].conj() * t[r];
            }
            m_du[j][i] = acc;
        }
    }

    let mut pairs = Vec::with_capacity(n);
    for i in 0..n {
        // diagonal element of the Hermitian form is real: its scalar part
        // is the dual part of the eigenvalue
        let lam = DualNumber::new(st_vals[i], m_du[i][i].w);
        let mut entries = Vec::with_capacity(n);
        for (r, &st_entry) in u_st[i].iter().enumerate() {
            let mut du = Quaternion::ZERO;
            for j in 0..n {
                if j != i {
                    let coef = m_du[j][i];
                    let inv_gap = 1.0 / (st_vals[i] - st_vals[j]);
                    du = du
                        + u_st[j][r]
                            * Quaternion::new(
                                coef.w * inv_gap,
                                coef.x * inv_gap,
                                coef.y * inv_gap,
                                coef.z * inv_gap,
                            );
                }
            }
            entries.push(DualQuaternion::new(st_entry, du));
        }
        pairs.push(OraclePair {
            lambda: lam,
            vector: DQVector::from_vec(entries),
        });
    }
    Ok(pairs)
}
