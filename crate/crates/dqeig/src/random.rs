//! Seeded random vectors and Hermitian matrices.
//!
//! Everything here is deterministic given the seed: the generator is
//! ChaCha8, and components are drawn in a fixed order so the same seed
//! reproduces the same data on every platform.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::linalg::{DQMatrix, DQVector};
use crate::scalar::{DualNumber, DualQuaternion, Quaternion};

/// Identifier of the generator algorithm, for run metadata.
pub const RNG_ALGORITHM: &str = "chacha8";

/// A seeded generator.
pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn normal(rng: &mut ChaCha8Rng) -> f64 {
    rng.sample(StandardNormal)
}

/// A quaternion with independent standard-normal components.
pub fn random_quaternion(rng: &mut ChaCha8Rng) -> Quaternion {
    Quaternion::new(normal(rng), normal(rng), normal(rng), normal(rng))
}

/// A dual quaternion with independent standard-normal components.
pub fn random_dual_quaternion(rng: &mut ChaCha8Rng) -> DualQuaternion {
    DualQuaternion::new(random_quaternion(rng), random_quaternion(rng))
}

/// A vector of independent standard-normal dual quaternions.
pub fn random_vector(n: usize, rng: &mut ChaCha8Rng) -> DQVector {
    DQVector::from_fn(n, |_| random_dual_quaternion(rng))
}

/// A random appreciable vector normalized to unit norm. Redraws in the
/// (probability-zero) event that the standard part vanishes.
pub fn random_unit_vector(n: usize, rng: &mut ChaCha8Rng) -> DQVector {
    loop {
        let v = random_vector(n, rng);
        if let Ok(u) = v.normalize() {
            return u;
        }
    }
}

/// A random Hermitian matrix: strict upper triangle standard-normal, lower
/// triangle the bitwise conjugate mirror, diagonal entries dual numbers
/// (real dual quaternions) with standard-normal parts.
pub fn random_hermitian(n: usize, rng: &mut ChaCha8Rng) -> DQMatrix {
    let mut m = DQMatrix::zeros(n, n);
    for i in 0..n {
        m[(i, i)] = DualQuaternion::from_dual(DualNumber::new(normal(rng), normal(rng)));
        for j in (i + 1)..n {
            let q = random_dual_quaternion(rng);
            m[(i, j)] = q;
            m[(j, i)] = q.conj();
        }
    }
    m
}
