//! Shifted linear solves through the real block representation.
//!
//! The eigeniterations repeatedly need `(Â − θ̂ I) ŵ = û` with a dual-number
//! shift `θ̂`. Writing `S = σ(Â − θ̂ I)` and stacking the column maps of `ŵ`
//! and `û`, the `ε² = 0` rule splits the system into two real solves that
//! share the same coefficient matrix:
//!
//! ```text
//!   S_st w_st = u_st
//!   S_st w_du = u_du − S_du w_st
//! ```
//!
//! For Hermitian `Â` the real image `S_st` is symmetric, so one symmetric
//! eigendecomposition of `S_st` (4n × 4n) serves both right-hand sides, the
//! singularity probe, and the null-space mode. Solves are truncated
//! minimum-norm least squares: eigenvalues with `|λ| ≤ trunc_tol · |λ|_max`
//! are treated as zero.
//!
//! The single orthogonal eigenbasis is essential, not a convenience: the
//! kept and discarded directions are exact orthogonal complements, so a
//! truncated solve discards only genuinely near-null content. A general
//! SVD computes its left and right bases independently, and for singular
//! values near the roundoff floor the two disagree by far more than the
//! working precision; a truncated SVD solve then silently drops solvable
//! right-hand-side components, which poisons the dual part of the
//! null-space extraction precisely in the converged (most singular) state.

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};
use crate::linalg::{DQMatrix, DQVector};
use crate::repr::{sigma, vector_from_real_columns, vector_to_real_columns};
use crate::scalar::DualNumber;

/// Default relative truncation threshold for least-squares solves.
pub const TRUNC_TOL_DEFAULT: f64 = 1e-10;

/// Default relative singularity threshold: the shifted matrix counts as
/// singular when `σ_min ≤ SINGULAR_RATIO_DEFAULT · σ_max`.
pub const SINGULAR_RATIO_DEFAULT: f64 = 1e-12;

/// The real block system for one shifted solve.
#[derive(Debug, Clone)]
pub struct ShiftedSystem {
    /// Standard part of `σ(Â − θ̂ I)`, `4n × 4n`.
    pub ast: DMatrix<f64>,
    /// Dual part of `σ(Â − θ̂ I)`, `4n × 4n`.
    pub adu: DMatrix<f64>,
    /// Standard part of the right-hand side column map, length `4n`.
    pub ust: DVector<f64>,
    /// Dual part of the right-hand side column map, length `4n`.
    pub udu: DVector<f64>,
}

/// Builds the real block system for `(Â − θ̂ I) ŵ = û`.
pub fn assemble(a: &DQMatrix, theta: &DualNumber, u: &DQVector) -> Result<ShiftedSystem> {
    if !a.is_square() {
        return Err(Error::dim(format!(
            "shifted system needs a square matrix, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    if a.rows() != u.len() {
        return Err(Error::dim(format!(
            "shifted system of size {} with right-hand side of length {}",
            a.rows(),
            u.len()
        )));
    }
    let s = sigma(&a.shift_diag(theta)?);
    let (ust, udu) = vector_to_real_columns(u);
    Ok(ShiftedSystem {
        ast: s.value.st,
        adu: s.value.du,
        ust,
        udu,
    })
}

/// Result of one shifted solve.
#[derive(Debug, Clone)]
pub struct SolveOutcome {
    /// The computed update direction `ŵ`.
    pub w: DQVector,
    /// `‖(Â − θ̂ I) ŵ − û‖` in the real 2-norm, recomputed in dual
    /// quaternion arithmetic.
    pub residual_2r: f64,
    /// Number of singular values kept by the truncation.
    pub rank_est: usize,
    /// True when truncation discarded at least one singular value, i.e. the
    /// solve fell back to least squares on a rank-deficient system.
    pub used_least_squares: bool,
}

/// A factorized shifted matrix: one symmetric eigendecomposition of the
/// real image, shared by the regular solve, the singularity probe, and the
/// null-space extraction. Requires Hermitian input (up to the default
/// relative tolerance), since only then is the real image symmetric.
pub struct ShiftedFactorization {
    shifted: DQMatrix,
    adu: DMatrix<f64>,
    /// Orthogonal eigenbasis `Q` of `S_st`.
    basis: DMatrix<f64>,
    /// Eigenvalues of `S_st`, same order as the basis columns.
    eigs: DVector<f64>,
    /// Largest `|λ|`.
    sigma_max: f64,
    /// Smallest `|λ|`.
    sigma_min: f64,
    n: usize,
}

impl ShiftedFactorization {
    /// Assembles and factorizes `σ(Â − θ̂ I)_st`.
    pub fn new(a: &DQMatrix, theta: DualNumber) -> Result<Self> {
        if !a.is_square() {
            return Err(Error::dim(format!(
                "shifted solve needs a square matrix, got {}x{}",
                a.rows(),
                a.cols()
            )));
        }
        a.require_hermitian()?;
        let n = a.rows();
        let shifted = a.shift_diag(&theta)?;
        let s = sigma(&shifted);
        let adu = s.value.du;
        let se = s.value.st.symmetric_eigen();
        let mut sigma_max = 0.0_f64;
        let mut sigma_min = f64::INFINITY;
        for &lam in se.eigenvalues.iter() {
            sigma_max = sigma_max.max(lam.abs());
            sigma_min = sigma_min.min(lam.abs());
        }
        Ok(ShiftedFactorization {
            shifted,
            adu,
            basis: se.eigenvectors,
            eigs: se.eigenvalues,
            sigma_max,
            sigma_min,
            n,
        })
    }

    /// Applies the truncated pseudo-inverse `Q f(Λ) Qᵀ` to a stacked column
    /// map, with `f(λ) = 1/λ` when `|λ| > cut` and `0` otherwise. The result
    /// has no component along the discarded directions (minimum norm).
    fn apply_pinv(&self, b: &DVector<f64>, cut: f64) -> DVector<f64> {
        let mut coeffs = self.basis.tr_mul(b);
        for (c, &lam) in coeffs.iter_mut().zip(self.eigs.iter()) {
            if lam.abs() > cut {
                *c /= lam;
            } else {
                *c = 0.0;
            }
        }
        &self.basis * coeffs
    }

    /// Ratio `σ_min / σ_max`, zero for the all-zero matrix.
    pub fn singular_ratio(&self) -> f64 {
        if self.sigma_max == 0.0 {
            0.0
        } else {
            self.sigma_min / self.sigma_max
        }
    }

    /// True when the shifted standard part is numerically singular.
    pub fn is_singular(&self, ratio_tol: f64) -> bool {
        self.sigma_min <= ratio_tol * self.sigma_max
    }

    /// Solves `(Â − θ̂ I) ŵ = û` by truncated minimum-norm least squares.
    pub fn solve(&self, u: &DQVector, trunc_tol: f64) -> Result<SolveOutcome> {
        if u.len() != self.n {
            return Err(Error::dim(format!(
                "shifted solve of size {} with right-hand side of length {}",
                self.n,
                u.len()
            )));
        }
        let (ust, udu) = vector_to_real_columns(u);
        let cut = trunc_tol * self.sigma_max;
        let wst = self.apply_pinv(&ust, cut);
        let rhs = &udu - &self.adu * &wst;
        let wdu = self.apply_pinv(&rhs, cut);
        let w = vector_from_real_columns(&wst, &wdu)?;
        let rank_est = self.eigs.iter().filter(|l| l.abs() > cut).count();
        let residual_2r = self.shifted.matvec(&w)?.sub(u)?.norm2r();
        Ok(SolveOutcome {
            w,
            residual_2r,
            rank_est,
            used_least_squares: rank_est < 4 * self.n,
        })
    }

    /// Extracts a unit null-space vector of the (numerically singular)
    /// shifted matrix: the standard part is the eigenvector of the
    /// smallest-magnitude eigenvalue of `S_st`, the dual part the
    /// minimum-norm truncated solution of `S_st v_du = −S_du v_st`.
    pub fn nullspace(&self, trunc_tol: f64, ratio_tol: f64) -> Result<DQVector> {
        if !self.is_singular(ratio_tol) {
            return Err(Error::NotSingular {
                ratio: self.singular_ratio(),
            });
        }
        let mut min_idx = 0;
        for (i, &lam) in self.eigs.iter().enumerate() {
            if lam.abs() < self.eigs[min_idx].abs() {
                min_idx = i;
            }
        }
        let vst: DVector<f64> = self.basis.column(min_idx).into_owned();
        let rhs = -(&self.adu * &vst);
        let cut = trunc_tol * self.sigma_max;
        let vdu = self.apply_pinv(&rhs, cut);
        vector_from_real_columns(&vst, &vdu)?.normalize()
    }
}

/// One-shot shifted solve (factorize and solve).
pub fn solve_shifted(
    a: &DQMatrix,
    theta: &DualNumber,
    u: &DQVector,
    trunc_tol: f64,
) -> Result<SolveOutcome> {
    ShiftedFactorization::new(a, *theta)?.solve(u, trunc_tol)
}

/// One-shot null-space extraction at a shift where the matrix is singular.
pub fn nullspace_solve(a: &DQMatrix, theta: &DualNumber, trunc_tol: f64) -> Result<DQVector> {
    ShiftedFactorization::new(a, *theta)?.nullspace(trunc_tol, SINGULAR_RATIO_DEFAULT)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::residual_2r;
    use crate::scalar::{DualQuaternion, Quaternion};

    struct Lcg(u64);
    impl Lcg {
        fn next(&mut self) -> f64 {
            self.0 = self
                .0
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            ((self.0 >> 11) as f64 / (1u64 << 53) as f64) * 2.0 - 1.0
        }
        fn dq(&mut self) -> DualQuaternion {
            DualQuaternion::new(
                Quaternion::new(self.next(), self.next(), self.next(), self.next()),
                Quaternion::new(self.next(), self.next(), self.next(), self.next()),
            )
        }
    }

    fn random_hermitian(n: usize, seed: u64) -> DQMatrix {
        let mut r = Lcg(seed);
        let mut m = DQMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = DualQuaternion::from_dual(DualNumber::new(r.next(), r.next()));
            for j in (i + 1)..n {
                let q = r.dq();
                m[(i, j)] = q;
                m[(j, i)] = q.conj();
            }
        }
        m
    }

    fn diag_dual(lams: &[DualNumber]) -> DQMatrix {
        DQMatrix::from_fn(lams.len(), lams.len(), |i, j| {
            if i == j {
                DualQuaternion::from_dual(lams[i])
            } else {
                DualQuaternion::ZERO
            }
        })
    }

    #[test]
    fn assemble_identity_at_zero_shift() {
        let a = DQMatrix::identity(2);
        let u = DQVector::basis(2, 0);
        let sys = assemble(&a, &DualNumber::ZERO, &u).unwrap();
        assert_eq!(sys.ast, DMatrix::identity(8, 8));
        assert_eq!(sys.adu, DMatrix::zeros(8, 8));
        assert_eq!(sys.ust[0], 1.0);
        assert_eq!(sys.ust.norm(), 1.0);
        assert_eq!(sys.udu.norm(), 0.0);
    }

    #[test]
    fn assemble_at_eigenvalue_is_singular() {
        let a = diag_dual(&[DualNumber::new(2.0, 1.0), DualNumber::new(3.0, 0.0)]);
        let f = ShiftedFactorization::new(&a, DualNumber::new(2.0, 1.0)).unwrap();
        assert!(f.is_singular(SINGULAR_RATIO_DEFAULT));
        let g = ShiftedFactorization::new(&a, DualNumber::new(2.5, 0.0)).unwrap();
        assert!(!g.is_singular(SINGULAR_RATIO_DEFAULT));
    }

    #[test]
    fn assemble_checks_dimensions() {
        let a = DQMatrix::zeros(2, 3);
        let u = DQVector::zeros(2);
        assert!(matches!(
            assemble(&a, &DualNumber::ZERO, &u),
            Err(Error::DimensionMismatch(_))
        ));
        let b = DQMatrix::identity(3);
        assert!(matches!(
            assemble(&b, &DualNumber::ZERO, &u),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn solve_identity_is_exact() {
        let a = DQMatrix::identity(3);
        let u = DQVector::basis(3, 0);
        let out = solve_shifted(&a, &DualNumber::ZERO, &u, TRUNC_TOL_DEFAULT).unwrap();
        assert!(out.residual_2r <= 1e-14);
        assert_eq!(out.rank_est, 12);
        assert!(!out.used_least_squares);
        assert!((out.w[0] - DualQuaternion::ONE).max_abs() <= 1e-14);
    }

    #[test]
    fn solve_diagonal_matches_scalar_inverse() {
        // (diag(λ̂) − θ̂ I)⁻¹ acts entrywise through dual-number inverses
        let lams = [DualNumber::new(4.0, 1.0), DualNumber::new(-1.0, 2.0)];
        let a = diag_dual(&lams);
        let theta = DualNumber::new(1.5, -0.5);
        for (i, lam) in lams.iter().enumerate() {
            let u = DQVector::basis(2, i);
            let out = solve_shifted(&a, &theta, &u, TRUNC_TOL_DEFAULT).unwrap();
            let expect = (*lam - theta).inv().unwrap();
            let got = out.w[i];
            assert!((got.st.w - expect.st).abs() <= 1e-12);
            assert!((got.du.w - expect.du).abs() <= 1e-12);
            assert!(got.st.imag_residue() <= 1e-12);
            assert!(got.du.imag_residue() <= 1e-12);
            assert!(out.residual_2r <= 1e-12);
        }
    }

    #[test]
    fn solve_random_system_has_tiny_residual_and_unique_solution() {
        let a = random_hermitian(5, 42);
        let theta = DualNumber::new(0.37, -0.11);
        let mut r = Lcg(43);
        let w_known = DQVector::from_fn(5, |_| r.dq());
        let u = a.shift_diag(&theta).unwrap().matvec(&w_known).unwrap();
        let out = solve_shifted(&a, &theta, &u, TRUNC_TOL_DEFAULT).unwrap();
        assert!(out.residual_2r <= 1e-10, "residual {:.3e}", out.residual_2r);
        assert!(!out.used_least_squares);
        for i in 0..5 {
            assert!(
                (out.w[i] - w_known[i]).max_abs() <= 1e-8,
                "solution mismatch at {i}"
            );
        }
    }

    #[test]
    fn least_squares_flag_on_consistent_singular_system() {
        // shift sits exactly on one diagonal eigenvalue; the right-hand side
        // lives in the range, so a consistent least-squares solution exists
        let lams = [DualNumber::new(2.0, 0.0), DualNumber::new(3.0, 0.0)];
        let a = diag_dual(&lams);
        let theta = DualNumber::new(2.0, 0.0);
        let u = DQVector::basis(2, 1);
        let out = solve_shifted(&a, &theta, &u, TRUNC_TOL_DEFAULT).unwrap();
        assert!(out.used_least_squares);
        assert!(out.rank_est < 8);
        assert!(out.residual_2r <= 1e-12);
        // w = e₂ / (3 − 2)
        assert!((out.w[1] - DualQuaternion::ONE).max_abs() <= 1e-12);
    }

    #[test]
    fn nullspace_of_diagonal_shift_is_the_matching_basis_direction() {
        let lams = [DualNumber::new(2.0, 0.5), DualNumber::new(3.0, -1.0)];
        let a = diag_dual(&lams);
        let v = nullspace_solve(&a, &lams[0], TRUNC_TOL_DEFAULT).unwrap();
        // v must be e₁ up to a right unit factor: all weight on entry 0
        assert!((v[0].magnitude().st - 1.0).abs() <= 1e-10);
        assert!(v[1].max_abs() <= 1e-10);
        let r = residual_2r(&a, &v, &lams[0]).unwrap();
        assert!(r <= 1e-10, "eigen residual {r:.3e}");
    }

    #[test]
    fn nullspace_of_identity_at_one_is_any_unit_vector() {
        let a = DQMatrix::identity(3);
        let v = nullspace_solve(&a, &DualNumber::ONE, TRUNC_TOL_DEFAULT).unwrap();
        let n = v.norm2();
        assert!((n.st - 1.0).abs() <= 1e-12);
        assert!(n.du.abs() <= 1e-12);
        let r = residual_2r(&a, &v, &DualNumber::ONE).unwrap();
        assert!(r <= 1e-12);
    }

    #[test]
    fn nullspace_rejects_nonsingular_shift() {
        let a = diag_dual(&[DualNumber::new(2.0, 0.0), DualNumber::new(3.0, 0.0)]);
        let err = nullspace_solve(&a, &DualNumber::new(5.0, 0.0), TRUNC_TOL_DEFAULT);
        assert!(matches!(err, Err(Error::NotSingular { .. })));
    }

    #[test]
    fn factorization_is_shared_between_probe_and_solves() {
        let a = random_hermitian(4, 7);
        let theta = DualNumber::new(0.2, 0.1);
        let f = ShiftedFactorization::new(&a, theta).unwrap();
        assert!(!f.is_singular(SINGULAR_RATIO_DEFAULT));
        let u = DQVector::basis(4, 2);
        let out = f.solve(&u, TRUNC_TOL_DEFAULT).unwrap();
        assert!(out.residual_2r <= 1e-9);
        // the same factorization refuses null-space mode
        assert!(matches!(
            f.nullspace(TRUNC_TOL_DEFAULT, SINGULAR_RATIO_DEFAULT),
            Err(Error::NotSingular { .. })
        ));
    }

    #[test]
    fn handles_fully_zero_shifted_matrix() {
        // A = I and θ = 1 + 0ε zeroes the standard part entirely
        let a = DQMatrix::identity(2);
        let f = ShiftedFactorization::new(&a, DualNumber::ONE).unwrap();
        assert!(f.is_singular(SINGULAR_RATIO_DEFAULT));
        assert_eq!(f.singular_ratio(), 0.0);
        let v = f
            .nullspace(TRUNC_TOL_DEFAULT, SINGULAR_RATIO_DEFAULT)
            .unwrap();
        let r = residual_2r(&a, &v, &DualNumber::ONE).unwrap();
        assert!(r <= 1e-12);
    }
}
