//! Iterative eigensolvers: Rayleigh quotient iteration, the power method,
//! and full-spectrum extraction by deflation.
//!
//! All solvers share the same convergence metric, the real 2-norm residual
//! `‖Â û − û θ̂‖` (see [`crate::linalg::residual_2r`]), and return unit
//! eigenvectors whose largest component has been rotated dual-positive-real
//! so results are reproducible up to floating-point rounding.

use std::time::Instant;

use crate::error::{Error, Result};
use crate::linalg::{
    herm_rank1, rayleigh_quotient, residual_2r, residual_norms, DQMatrix, DQVector,
};
use crate::random::{random_unit_vector, rng_from_seed};
use crate::scalar::DualNumber;
use crate::solver::{ShiftedFactorization, SINGULAR_RATIO_DEFAULT, TRUNC_TOL_DEFAULT};

/// Controls for one inner iteration (a single eigenpair).
#[derive(Debug, Clone, Copy)]
pub struct IterationSettings {
    /// Convergence threshold on the real 2-norm residual.
    pub eps: f64,
    /// Iteration cap.
    pub max_iter: usize,
    /// Relative truncation threshold for the shifted least-squares solves.
    pub trunc_tol: f64,
    /// Relative singularity threshold switching to the null-space solve.
    pub singular_ratio: f64,
}

impl Default for IterationSettings {
    fn default() -> Self {
        IterationSettings {
            eps: 1e-5,
            max_iter: 15000,
            trunc_tol: TRUNC_TOL_DEFAULT,
            singular_ratio: SINGULAR_RATIO_DEFAULT,
        }
    }
}

/// One converged (or capped-out) eigenpair.
#[derive(Debug, Clone)]
pub struct EigenPair {
    pub lambda: DualNumber,
    /// Unit right eigenvector, phase-fixed.
    pub vector: DQVector,
    /// Final residual `‖Â û − û λ̂‖` in the real 2-norm.
    pub residual_2r: f64,
    /// Number of iteration steps performed (solves for RQI, matrix
    /// applications for the power method).
    pub iterations: usize,
    /// False when the iteration cap was reached first.
    pub converged: bool,
}

/// One row of an iteration trace.
#[derive(Debug, Clone, Copy)]
pub struct TraceStep {
    /// Step index; step 0 describes the initial vector.
    pub k: usize,
    /// Rayleigh quotient at this step.
    pub theta: DualNumber,
    /// Residual in the real 2-norm at this step.
    pub residual_2r: f64,
    /// Standard part of the dual 2-norm of the residual. For RQI on
    /// Hermitian input this sequence is monotonically non-increasing (the
    /// dual-norm descent theorem); the real 2-norm above is not, because
    /// the dual component of the residual may transiently grow while the
    /// standard part shrinks.
    pub residual_st: f64,
    /// Wall-clock seconds since the iteration started.
    pub seconds: f64,
}

/// Per-step history of one solver run.
#[derive(Debug, Clone, Default)]
pub struct IterationTrace {
    pub steps: Vec<TraceStep>,
}

/// Rotates a vector by a right unit factor so its largest-magnitude
/// component becomes dual-positive-real. Right eigenvectors stay right
/// eigenvectors under right scalar factors, so this only fixes the phase.
pub fn phase_fix(v: &DQVector) -> Result<DQVector> {
    let mut best = 0;
    let mut best_norm = f64::NEG_INFINITY;
    for i in 0..v.len() {
        let nrm = v[i].st.norm();
        if nrm > best_norm {
            best_norm = nrm;
            best = i;
        }
    }
    if best_norm <= 0.0 {
        return Err(Error::NotAppreciable);
    }
    let q = v[best];
    let factor = q.conj().div_dual(&q.magnitude())?;
    Ok(v.scale(&factor))
}

/// Rayleigh quotient iteration for one eigenpair of a Hermitian matrix.
///
/// Each step solves `(Â − θ̂_k I) ŵ = û_k` through the real block
/// representation and normalizes. When the shifted standard part turns
/// numerically singular the step switches to a null-space solve and stops:
/// the shift is the eigenvalue to working precision. Otherwise the run
/// stops once `‖Â û_{k+1} − û_{k+1} θ̂_k‖ ≤ eps`.
///
/// Returns the pair and the per-step trace; `converged` is false when the
/// iteration cap was reached first (the best pair so far is still
/// returned).
pub fn rqi(
    a: &DQMatrix,
    v0: &DQVector,
    settings: &IterationSettings,
) -> Result<(EigenPair, IterationTrace)> {
    a.require_hermitian()?;
    if a.rows() != v0.len() {
        return Err(Error::dim(format!(
            "matrix of size {} with initial vector of length {}",
            a.rows(),
            v0.len()
        )));
    }
    let start = Instant::now();
    let mut u = v0.normalize()?;
    let mut trace = IterationTrace::default();
    let mut k = 0usize;
    loop {
        let theta = rayleigh_quotient(a, &u)?;
        let (r_st, r_2r) = residual_norms(a, &u, &theta)?;
        trace.steps.push(TraceStep {
            k,
            theta,
            residual_2r: r_2r,
            residual_st: r_st,
            seconds: start.elapsed().as_secs_f64(),
        });
        if k >= settings.max_iter {
            let vector = phase_fix(&u)?;
            let residual = residual_2r(a, &vector, &theta)?;
            return Ok((
                EigenPair {
                    lambda: theta,
                    vector,
                    residual_2r: residual,
                    iterations: k,
                    converged: false,
                },
                trace,
            ));
        }

        let fact = ShiftedFactorization::new(a, theta)?;
        if fact.is_singular(settings.singular_ratio) {
            // the standard part of the shift is an eigenvalue to working
            // precision: extract the eigenvector from the null space and
            // stop. The eigenvalue is re-read off the extracted vector as
            // its Rayleigh quotient — identical to θ when the whole dual
            // shift has converged, and the minimal-residual choice when
            // only the standard part has (e.g. an exact standard-part hit
            // from a symmetric start, where θ's dual part still lags).
            let v = fact.nullspace(settings.trunc_tol, settings.singular_ratio)?;
            k += 1;
            let vector = phase_fix(&v)?;
            let lambda = rayleigh_quotient(a, &vector)?;
            let (f_st, f_2r) = residual_norms(a, &vector, &lambda)?;
            trace.steps.push(TraceStep {
                k,
                theta: lambda,
                residual_2r: f_2r,
                residual_st: f_st,
                seconds: start.elapsed().as_secs_f64(),
            });
            return Ok((
                EigenPair {
                    lambda,
                    vector,
                    residual_2r: f_2r,
                    iterations: k,
                    converged: true,
                },
                trace,
            ));
        }

        // truncate the regular-branch solve at the same threshold that
        // decides singularity: a looser cut would amputate directions the
        // branch test just declared significant, wrecking the step
        let out = fact.solve(&u, settings.singular_ratio)?;
        u = out.w.normalize()?;
        k += 1;
        let r_next = residual_2r(a, &u, &theta)?;
        if r_next <= settings.eps {
            let vector = phase_fix(&u)?;
            let (f_st, f_2r) = residual_norms(a, &vector, &theta)?;
            trace.steps.push(TraceStep {
                k,
                theta,
                residual_2r: f_2r,
                residual_st: f_st,
                seconds: start.elapsed().as_secs_f64(),
            });
            return Ok((
                EigenPair {
                    lambda: theta,
                    vector,
                    residual_2r: f_2r,
                    iterations: k,
                    converged: true,
                },
                trace,
            ));
        }
    }
}

/// Power iteration for the dominant eigenpair of a Hermitian matrix, with
/// the Rayleigh quotient as the eigenvalue estimate and the same residual
/// stop as [`rqi`].
pub fn power_method(
    a: &DQMatrix,
    v0: &DQVector,
    settings: &IterationSettings,
) -> Result<(EigenPair, IterationTrace)> {
    a.require_hermitian()?;
    if a.rows() != v0.len() {
        return Err(Error::dim(format!(
            "matrix of size {} with initial vector of length {}",
            a.rows(),
            v0.len()
        )));
    }
    let start = Instant::now();
    let mut u = v0.normalize()?;
    let mut trace = IterationTrace::default();
    let mut k = 0usize;
    loop {
        let theta = rayleigh_quotient(a, &u)?;
        let (r_st, r) = residual_norms(a, &u, &theta)?;
        trace.steps.push(TraceStep {
            k,
            theta,
            residual_2r: r,
            residual_st: r_st,
            seconds: start.elapsed().as_secs_f64(),
        });
        let done = r <= settings.eps;
        if done || k >= settings.max_iter {
            let vector = phase_fix(&u)?;
            let residual = residual_2r(a, &vector, &theta)?;
            return Ok((
                EigenPair {
                    lambda: theta,
                    vector,
                    residual_2r: residual,
                    iterations: k,
                    converged: done,
                },
                trace,
            ));
        }
        u = a.matvec(&u)?.normalize()?;
        k += 1;
    }
}

/// Default deflation-stop factor: extraction ends once the standard-part
/// Frobenius norm of the deflated remainder drops to
/// `GAMMA_FACTOR · n · ‖Â‖_F`.
pub const GAMMA_FACTOR: f64 = 1e-8;

/// Number of power-method warm-up steps before each inner RQI run.
pub const WARMUP_STEPS_DEFAULT: usize = 5;

/// Controls for full-spectrum extraction.
#[derive(Debug, Clone, Copy)]
pub struct SpectrumSettings {
    /// Settings for each inner RQI run.
    pub inner: IterationSettings,
    /// Deflation stop on `‖remainder_st‖_F`; `None` selects
    /// `GAMMA_FACTOR · n · ‖Â‖_F`.
    pub gamma: Option<f64>,
    /// Seed for the warm-start vectors.
    pub seed: u64,
    /// Power-method steps applied to each random start before RQI, biasing
    /// it toward the dominant remaining eigenvalue.
    pub warmup_steps: usize,
}

impl Default for SpectrumSettings {
    fn default() -> Self {
        SpectrumSettings {
            inner: IterationSettings::default(),
            gamma: None,
            seed: 0,
            warmup_steps: WARMUP_STEPS_DEFAULT,
        }
    }
}

/// Result of full-spectrum extraction.
#[derive(Debug, Clone)]
pub struct SpectrumResult {
    /// Extracted pairs in extraction order; residuals are measured against
    /// the original matrix, not the deflated remainders.
    pub pairs: Vec<EigenPair>,
    /// `‖remainder_st‖_F` after the last deflation.
    pub deflation_residual_f: f64,
}

/// Extracts all appreciable eigenpairs of a Hermitian matrix by repeated
/// RQI and Hermitian rank-one deflation `Â ← Â − λ̂ û û*`.
///
/// Each round starts from a seeded random vector warmed up by a few power
/// steps, so rounds tend to deliver eigenvalues in descending order.
/// Extraction stops when the deflated remainder's standard part is
/// negligible; a round whose inner iteration fails to converge aborts with
/// [`Error::Stalled`].
pub fn all_eigenpairs(a: &DQMatrix, settings: &SpectrumSettings) -> Result<SpectrumResult> {
    a.require_hermitian()?;
    let n = a.rows();
    let gamma = settings
        .gamma
        .unwrap_or_else(|| GAMMA_FACTOR * n as f64 * a.norm_fr());
    let mut rng = rng_from_seed(settings.seed);
    let mut work = a.clone();
    let mut pairs = Vec::new();
    for index in 0..n {
        if work.norm_f_standard() <= gamma {
            break;
        }
        let mut v = random_unit_vector(n, &mut rng);
        for _ in 0..settings.warmup_steps {
            match work.matvec(&v)?.normalize() {
                Ok(next) => v = next,
                Err(_) => break,
            }
        }
        let (pair, _) = rqi(&work, &v, &settings.inner)?;
        if !pair.converged {
            return Err(Error::Stalled {
                index,
                iterations: pair.iterations,
                residual: pair.residual_2r,
            });
        }
        work = work.sub(&herm_rank1(&pair.vector, &pair.lambda))?;
        let residual = residual_2r(a, &pair.vector, &pair.lambda)?;
        pairs.push(EigenPair {
            residual_2r: residual,
            ..pair
        });
    }
    Ok(SpectrumResult {
        pairs,
        deflation_residual_f: work.norm_f_standard(),
    })
}
