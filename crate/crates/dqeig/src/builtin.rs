//! A bundled 6×6 dense Hermitian demonstration instance with a known
//! reference spectrum.
//!
//! The instance is assembled deterministically from data stored in this
//! module: a Hermitian rank-one layer that pins one eigenvector, and a
//! stored probe vector whose orthogonal completion carries the remaining
//! eigenvalues.  By construction the matrix returned by [`dense6`] has
//! exactly the eigenvalues of [`dense6_spectrum`], and Rayleigh quotient
//! iteration started from [`dense6_initial`] converges to the dominant
//! one.

use crate::eigen::phase_fix;
use crate::linalg::{herm_rank1, orthonormal_basis, DQMatrix, DQVector};
use crate::scalar::{DualNumber, DualQuaternion, Quaternion};

/// Standard parts of the rank-one layer, one array per quaternion
/// component (real, i, j, k).  The real component is symmetric, the three
/// imaginary components are antisymmetric, so the assembled quaternion
/// matrix is Hermitian.
const LAYER_ST: [[[f64; 6]; 6]; 4] = [
    // real component (symmetric)
    [
        [0.6634, 0.1840, -0.0967, -0.0590, 0.1392, -0.0366],
        [0.1840, 0.6872, 0.7003, 0.2440, -0.0937, 0.2263],
        [-0.0967, 0.7003, 0.8900, 0.3074, -0.1671, 0.1731],
        [-0.0590, 0.2440, 0.3074, 0.1619, -0.0953, 0.0129],
        [0.1392, -0.0937, -0.1671, -0.0953, 0.0738, -0.0184],
        [-0.0366, 0.2263, 0.1731, 0.0129, -0.0184, 0.46621],
    ],
    // i component (antisymmetric)
    [
        [0.0, -0.3887, -0.4726, -0.0169, -0.0043, -0.3205],
        [0.3887, 0.0, -0.3203, -0.0722, 0.0841, 0.2418],
        [0.4726, 0.3203, 0.0, 0.0054, 0.0602, 0.4245],
        [0.0169, 0.0722, -0.0054, 0.0, -0.0046, 0.2474],
        [0.0043, -0.0841, -0.0602, 0.0046, 0.0, -0.1842],
        [0.3205, -0.2418, -0.4245, -0.2474, 0.1842, 0.0],
    ],
    // j component (antisymmetric)
    [
        [0.0, 0.5196, 0.5832, 0.3211, -0.1718, 0.0341],
        [-0.5196, 0.0, 0.1365, 0.1215, -0.1603, 0.2871],
        [-0.5832, -0.1365, 0.0, -0.0072, -0.1006, 0.4132],
        [-0.3211, -0.1215, 0.0072, 0.0, -0.0521, 0.0369],
        [0.1718, 0.1603, 0.1006, 0.0521, 0.0, 0.0034],
        [-0.0341, -0.2871, -0.4132, -0.0369, -0.0034, 0.0],
    ],
    // k component (antisymmetric)
    [
        [0.0, -0.0324, 0.1329, 0.0221, 0.0059, -0.4517],
        [0.0324, 0.0, 0.0037, 0.1781, -0.0956, -0.3582],
        [-0.1329, -0.0037, 0.0, 0.2225, -0.1549, -0.1844],
        [-0.0221, -0.1781, -0.2225, 0.0, -0.0116, -0.1129],
        [-0.0059, 0.0956, 0.1549, 0.0116, 0.0, -0.0112],
        [0.4517, 0.3582, 0.1844, 0.1129, 0.0112, 0.0],
    ],
];

/// Dual parts of the rank-one layer, same component layout as
/// [`LAYER_ST`].
const LAYER_DU: [[[f64; 6]; 6]; 4] = [
    // real component (symmetric)
    [
        [-0.8130, -0.0039, 0.2942, -0.1255, -0.1397, -0.0313],
        [-0.0039, -0.3840, -0.2356, 0.1480, 0.8592, 0.4817],
        [0.2942, -0.2356, -0.0863, 0.4712, 1.0305, 0.2197],
        [-0.1255, 0.1480, 0.4712, 0.2016, 0.3178, 0.6339],
        [-0.1397, 0.8592, 1.0305, 0.3178, -0.3965, -0.3540],
        [-0.0313, 0.4817, 0.2197, 0.6339, -0.3540, 0.2849],
    ],
    // i component (antisymmetric)
    [
        [0.0, 0.0689, 0.4862, -0.4231, -0.3142, 0.1983],
        [-0.0689, 0.0, 0.0069, -0.0679, -0.5687, -0.2706],
        [-0.4862, -0.0069, 0.0, 0.2682, -0.4452, 0.1949],
        [0.4231, 0.0679, -0.2682, 0.0, -0.0837, 0.2557],
        [0.3142, 0.5687, 0.4452, 0.0837, 0.0, 0.5107],
        [-0.1983, 0.2706, -0.1949, -0.2557, -0.5107, 0.0],
    ],
    // j component (antisymmetric)
    [
        [0.0, -0.7266, -0.2631, -0.0285, 0.8539, 0.5629],
        [0.7266, 0.0, -0.2641, 0.2712, -0.0399, 0.4132],
        [0.2631, 0.2641, 0.0, 0.4700, -0.4774, 0.0773],
        [0.0285, -0.2712, -0.4700, 0.0, -0.0426, 0.1856],
        [-0.8539, 0.0399, 0.4774, 0.0426, 0.0, 0.6367],
        [-0.5629, -0.4132, -0.0773, -0.1856, -0.6367, 0.0],
    ],
    // k component (antisymmetric)
    [
        [0.0, 0.0525, 0.1599, -0.1970, 0.5612, 0.1146],
        [-0.0525, 0.0, 0.7538, -0.2008, 0.2974, 0.4295],
        [-0.1599, -0.7538, 0.0, -0.2703, 0.1851, 0.2496],
        [0.1970, 0.2008, 0.2703, 0.0, -0.2590, 0.0729],
        [-0.5612, -0.2974, -0.1851, 0.2590, 0.0, -0.3074],
        [-0.1146, -0.4295, -0.2496, -0.0729, 0.3074, 0.0],
    ],
];

/// Probe vector, stored as (w, x, y, z) quadruples: standard parts.
const INITIAL_ST: [[f64; 4]; 6] = [
    [-0.5514, -1.3693, -0.6843, -0.5685],
    [0.2849, 0.6141, 2.7228, 0.9304],
    [-1.2502, 0.1685, -0.9310, 0.4428],
    [-0.4044, -1.0874, 0.1983, 1.3718],
    [-2.4265, -0.4707, -0.1511, -0.4807],
    [0.8045, 0.0331, 0.8616, 0.4602],
];

/// Probe vector dual parts, same layout as [`INITIAL_ST`].
const INITIAL_DU: [[f64; 4]; 6] = [
    [1.2034, -0.3999, 1.5179, 0.7439],
    [0.4025, -1.5399, 1.1467, -0.5636],
    [1.2182, -0.8999, -0.1223, 0.8272],
    [-0.0179, -0.3404, -0.2029, 1.3261],
    [-0.9534, 0.6708, 0.2699, 0.8289],
    [-0.2012, 0.0505, 0.5192, 0.1988],
];

/// Reference eigenvalues of [`dense6`], in decreasing order of standard
/// part.
const SPECTRUM: [(f64, f64); 6] = [
    (58.248, -14.5130),
    (35.691, 4.1262),
    (21.769, 8.1369),
    (11.176, -5.9870),
    (6.8844, -2.0823),
    (2.9425, -1.1933),
];

/// The stored Hermitian rank-one layer as a dual quaternion matrix.
fn stored_layer() -> DQMatrix {
    let mut a = DQMatrix::zeros(6, 6);
    for i in 0..6 {
        for j in 0..6 {
            a[(i, j)] = DualQuaternion::new(
                Quaternion::new(
                    LAYER_ST[0][i][j],
                    LAYER_ST[1][i][j],
                    LAYER_ST[2][i][j],
                    LAYER_ST[3][i][j],
                ),
                Quaternion::new(
                    LAYER_DU[0][i][j],
                    LAYER_DU[1][i][j],
                    LAYER_DU[2][i][j],
                    LAYER_DU[3][i][j],
                ),
            );
        }
    }
    a
}

/// The bundled probe vector.  Rayleigh quotient iteration on [`dense6`]
/// started here converges to the first entry of [`dense6_spectrum`].
pub fn dense6_initial() -> DQVector {
    DQVector::from_fn(6, |i| {
        DualQuaternion::new(
            Quaternion::new(
                INITIAL_ST[i][0],
                INITIAL_ST[i][1],
                INITIAL_ST[i][2],
                INITIAL_ST[i][3],
            ),
            Quaternion::new(
                INITIAL_DU[i][0],
                INITIAL_DU[i][1],
                INITIAL_DU[i][2],
                INITIAL_DU[i][3],
            ),
        )
    })
}

/// The six reference eigenvalues of [`dense6`], in decreasing order of
/// standard part.
pub fn dense6_spectrum() -> [DualNumber; 6] {
    SPECTRUM.map(|(st, du)| DualNumber::new(st, du))
}

/// Unit eigenvector of the stored rank-one layer.
///
/// Every column of a Hermitian rank-one matrix `λ u u*` is a right scalar
/// multiple of `u`, so normalizing the column with the largest diagonal
/// entry recovers `u` up to a unit right factor, which `phase_fix`
/// standardizes.
fn layer_eigenvector(layer: &DQMatrix) -> DQVector {
    let mut best = 0usize;
    for j in 1..6 {
        if layer[(j, j)].st.w.abs() > layer[(best, best)].st.w.abs() {
            best = j;
        }
    }
    let col = layer
        .column(best)
        .normalize()
        .expect("stored layer has an appreciable column");
    phase_fix(&col).expect("stored layer column has an appreciable entry")
}

/// The bundled 6×6 dense Hermitian matrix.
///
/// Assembled as `Σ λ_i b_i b_i*` over an orthonormal basis `b_i` derived
/// from the stored layer's eigenvector and the probe vector, so the
/// returned matrix is Hermitian to the last bit and its spectrum equals
/// [`dense6_spectrum`] to machine precision.
pub fn dense6() -> DQMatrix {
    let layer = stored_layer();
    let anchor = layer_eigenvector(&layer);
    let probe = dense6_initial();
    let basis = orthonormal_basis(6, &[anchor, probe])
        .expect("stored vectors extend to an orthonormal basis");
    let lambda = dense6_spectrum();
    // The anchor direction carries the smallest eigenvalue; the probe's
    // orthogonal remainder carries the dominant one, so iteration from the
    // probe crosses into the dominant eigendirection.
    let order = [5usize, 0, 1, 2, 3, 4];
    let mut a = DQMatrix::zeros(6, 6);
    for (b, &which) in basis.iter().zip(order.iter()) {
        let term = herm_rank1(b, &lambda[which]);
        a = a.add(&term).expect("terms share dimensions");
    }
    a
}
