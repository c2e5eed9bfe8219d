//! Dual quaternion graph Laplacians.
//!
//! A mutual-visibility graph pairs each vertex `i` with a unit dual
//! quaternion configuration `q̂ᵢ`; the adjacency weight of an edge `(i, j)`
//! is the relative configuration `â_ij = q̂ᵢ* q̂ⱼ`, and the Laplacian is
//! `L = D − Â` with `D` the (real) degree diagonal. `L` is Hermitian by
//! construction. Its standard-part spectrum clusters around the vertex
//! degrees when the configuration norms spread evenly (off-diagonal
//! magnitudes ~1/n for a unit-norm configuration vector), which is what
//! makes the power method slow on these instances while shifted Rayleigh
//! iteration stays fast.
//!
//! Laplacian eigenvalues near zero are not appreciable; a diagonal shift
//! `Ľ = L + αI` moves every eigenvalue by `α` and restores appreciability.

use rand::Rng;

use crate::error::{Error, Result};
use crate::linalg::{DQMatrix, DQVector};
use crate::oracle::reference_spectrum;
use crate::random::{random_vector, rng_from_seed};
use crate::scalar::{DualNumber, DualQuaternion, Quaternion};

/// A simple undirected graph: vertex count plus edge list.
#[derive(Debug, Clone)]
pub struct VisibilityGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl VisibilityGraph {
    /// Builds a graph, normalizing each edge to `(min, max)` order and
    /// rejecting self-loops, out-of-range endpoints, and duplicates.
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        let mut normd: Vec<(usize, usize)> = Vec::with_capacity(edges.len());
        for (a, b) in edges {
            if a == b {
                return Err(Error::Domain("visibility graph with a self-loop"));
            }
            if a >= n || b >= n {
                return Err(Error::dim(format!(
                    "edge ({a}, {b}) out of range for {n} vertices"
                )));
            }
            normd.push((a.min(b), a.max(b)));
        }
        normd.sort_unstable();
        if normd.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Domain("visibility graph with a duplicate edge"));
        }
        Ok(VisibilityGraph { n, edges: normd })
    }

    /// The cycle graph on `n ≥ 3` vertices.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::TooSmall { min: 3, got: n });
        }
        let edges = (0..n).map(|i| (i, (i + 1) % n)).collect();
        VisibilityGraph::new(n, edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }
}

/// Vertex configurations: a unit-norm dual quaternion vector.
#[derive(Debug, Clone)]
pub struct ConfigurationSet {
    q: DQVector,
}

impl ConfigurationSet {
    /// Wraps a vector, checking `‖q̂‖₂ = 1 + 0ε` within `1e-10`.
    pub fn new(q: DQVector) -> Result<Self> {
        let n = q.norm2();
        if (n.st - 1.0).abs() > 1e-10 || n.du.abs() > 1e-10 {
            return Err(Error::Domain("configuration set must have unit 2-norm"));
        }
        Ok(ConfigurationSet { q })
    }

    /// Draws standard-normal components and normalizes.
    pub fn random(n: usize, rng: &mut rand_chacha::ChaCha8Rng) -> Result<Self> {
        ConfigurationSet::new(random_vector(n, rng).normalize()?)
    }

    pub fn len(&self) -> usize {
        self.q.len()
    }

    pub fn is_empty(&self) -> bool {
        self.q.len() == 0
    }

    pub fn vector(&self) -> &DQVector {
        &self.q
    }
}

/// The Laplacian `L = D − Â` with relative-configuration adjacency
/// `â_ij = q̂ᵢ* q̂ⱼ` on edges. Hermitian bit for bit: each edge weight is
/// computed once and mirrored conjugated; the diagonal holds the (real)
/// vertex degrees.
pub fn laplacian(g: &VisibilityGraph, q: &ConfigurationSet) -> Result<DQMatrix> {
    if g.n() != q.len() {
        return Err(Error::dim(format!(
            "graph on {} vertices with {} configurations",
            g.n(),
            q.len()
        )));
    }
    let n = g.n();
    let mut degree = vec![0usize; n];
    let mut l = DQMatrix::zeros(n, n);
    for &(i, j) in g.edges() {
        degree[i] += 1;
        degree[j] += 1;
        // L = D − Â, so off-diagonal entries carry −â_ij
        let w = -q.vector()[i].conj() * q.vector()[j];
        l[(i, j)] = w;
        l[(j, i)] = w.conj();
    }
    for (i, &d) in degree.iter().enumerate() {
        l[(i, i)] = DualQuaternion::from_quat(Quaternion::real(d as f64));
    }
    Ok(l)
}

/// Appreciability shift `Ľ = L + αI`; `λ` is an eigenvalue of `L` exactly
/// when `λ + α` is one of `Ľ`.
pub fn shift(l: &DQMatrix, alpha: f64) -> Result<DQMatrix> {
    if alpha == 0.0 {
        return Err(Error::ZeroShift);
    }
    l.shift_diag(&DualNumber::new(-alpha, 0.0))
}

/// Deterministic cycle-graph instance: the cycle on `n` vertices plus a
/// seeded random unit configuration.
pub fn gen_circle(n: usize, seed: u64) -> Result<(VisibilityGraph, ConfigurationSet)> {
    let g = VisibilityGraph::cycle(n)?;
    let mut rng = rng_from_seed(seed);
    let q = ConfigurationSet::random(n, &mut rng)?;
    Ok((g, q))
}

/// Deterministic random instance: each vertex pair becomes an edge with
/// probability `p`, plus a seeded random unit configuration.
pub fn gen_random(n: usize, p: f64, seed: u64) -> Result<(VisibilityGraph, ConfigurationSet)> {
    if n < 1 {
        return Err(Error::TooSmall { min: 1, got: n });
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::Domain("edge probability must lie in [0, 1]"));
    }
    let mut rng = rng_from_seed(seed);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    let g = VisibilityGraph::new(n, edges)?;
    let q = ConfigurationSet::random(n, &mut rng)?;
    Ok((g, q))
}

/// Maximum seed redraws in [`shifted_circle`] before giving up.
const MAX_REDRAWS: u64 = 32;

/// Shifted cycle Laplacian `Ľ = L + αI` ready for eigensolvers: all its
/// standard-part eigenvalues are verified nonzero (via the reference
/// spectrum, when that spectrum is simple), redrawing with the next seed
/// otherwise. Returns the matrix and the seed actually used.
pub fn shifted_circle(n: usize, alpha: f64, seed: u64) -> Result<(DQMatrix, u64)> {
    for attempt in 0..MAX_REDRAWS {
        let used = seed.wrapping_add(attempt);
        let (g, q) = gen_circle(n, used)?;
        let shifted = shift(&laplacian(&g, &q)?, alpha)?;
        match reference_spectrum(&shifted) {
            Ok(pairs) => {
                let floor = 1e-8 * shifted.norm_fr();
                if pairs.iter().all(|p| p.lambda.st.abs() > floor) {
                    return Ok((shifted, used));
                }
            }
            // a degenerate standard-part spectrum cannot be checked this
            // way; accept the instance as drawn
            Err(Error::DegenerateSpectrum { .. }) => return Ok((shifted, used)),
            Err(e) => return Err(e),
        }
    }
    Err(Error::Domain(
        "could not draw a shifted Laplacian with nonzero eigenvalues",
    ))
}
