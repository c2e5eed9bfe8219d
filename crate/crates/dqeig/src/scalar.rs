//! Scalar algebra: dual numbers, quaternions, and dual quaternions.
//!
//! A dual number is `a + b ε` with `ε² = 0`; a dual quaternion is `q_st + q_du ε`
//! with quaternion components. A value is *appreciable* when its standard part
//! is nonzero; only appreciable values are invertible. The nilpotency of `ε` is
//! exact here: products never form a `du·du` term, so the product of two purely
//! infinitesimal values is exactly zero, not merely small.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::error::{Error, Result};

// ---------------------------------------------------------------------------
// Dual numbers
// ---------------------------------------------------------------------------

/// A dual number `st + du ε` with real coefficients and `ε² = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct DualNumber {
    /// Standard (real) part.
    pub st: f64,
    /// Dual (infinitesimal) part.
    pub du: f64,
}

impl DualNumber {
    pub const ZERO: DualNumber = DualNumber { st: 0.0, du: 0.0 };
    pub const ONE: DualNumber = DualNumber { st: 1.0, du: 0.0 };

    pub const fn new(st: f64, du: f64) -> Self {
        DualNumber { st, du }
    }

    /// Embeds a real number.
    pub const fn real(st: f64) -> Self {
        DualNumber { st, du: 0.0 }
    }

    /// True when the standard part is nonzero, i.e. the value is invertible.
    pub fn appreciable(&self) -> bool {
        self.st != 0.0
    }

    /// Multiplicative inverse `1/st − du/st² ε` of an appreciable dual number.
    pub fn inv(&self) -> Result<DualNumber> {
        if !self.appreciable() {
            return Err(Error::NotAppreciable);
        }
        let r = 1.0 / self.st;
        Ok(DualNumber::new(r, -self.du * r * r))
    }

    /// Division `p/q = p_st/q_st + (p_du/q_st − p_st q_du/q_st²) ε`.
    ///
    /// Only appreciable divisors are supported; the quotient of two
    /// infinitesimals is not unique and is rejected.
    pub fn checked_div(&self, q: &DualNumber) -> Result<DualNumber> {
        if !q.appreciable() {
            return Err(Error::NotAppreciable);
        }
        let st = self.st / q.st;
        Ok(DualNumber::new(st, (self.du - st * q.du) / q.st))
    }

    /// Square root `√st + du/(2√st) ε`, defined for positive standard part.
    pub fn sqrt(&self) -> Result<DualNumber> {
        if self.st <= 0.0 {
            return Err(Error::Domain("sqrt needs a positive standard part"));
        }
        let r = self.st.sqrt();
        Ok(DualNumber::new(r, self.du / (2.0 * r)))
    }

    /// Absolute value: `|st| + sgn(st)·du ε` when appreciable, else `|du| ε`.
    pub fn abs(&self) -> DualNumber {
        if self.appreciable() {
            DualNumber::new(self.st.abs(), self.st.signum() * self.du)
        } else {
            DualNumber::new(0.0, self.du.abs())
        }
    }

    /// Total order: lexicographic on (standard, dual) part.
    ///
    /// Inputs are assumed NaN-free; NaNs compare as equal.
    pub fn cmp_total(&self, other: &DualNumber) -> Ordering {
        if self.st < other.st {
            Ordering::Less
        } else if self.st > other.st {
            Ordering::Greater
        } else if self.du < other.du {
            Ordering::Less
        } else if self.du > other.du {
            Ordering::Greater
        } else {
            Ordering::Equal
        }
    }
}

impl PartialOrd for DualNumber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp_total(other))
    }
}

impl Add for DualNumber {
    type Output = DualNumber;
    fn add(self, rhs: DualNumber) -> DualNumber {
        DualNumber::new(self.st + rhs.st, self.du + rhs.du)
    }
}

impl Sub for DualNumber {
    type Output = DualNumber;
    fn sub(self, rhs: DualNumber) -> DualNumber {
        DualNumber::new(self.st - rhs.st, self.du - rhs.du)
    }
}

impl Neg for DualNumber {
    type Output = DualNumber;
    fn neg(self) -> DualNumber {
        DualNumber::new(-self.st, -self.du)
    }
}

impl Mul for DualNumber {
    type Output = DualNumber;
    /// `(a + bε)(c + dε) = ac + (ad + bc)ε`; the `bd` term vanishes exactly.
    fn mul(self, rhs: DualNumber) -> DualNumber {
        DualNumber::new(self.st * rhs.st, self.st * rhs.du + self.du * rhs.st)
    }
}

impl Mul<f64> for DualNumber {
    type Output = DualNumber;
    fn mul(self, rhs: f64) -> DualNumber {
        DualNumber::new(self.st * rhs, self.du * rhs)
    }
}

impl Div for DualNumber {
    type Output = DualNumber;
    /// Operator form of [`DualNumber::checked_div`]; panics on a non-appreciable divisor.
    fn div(self, rhs: DualNumber) -> DualNumber {
        DualNumber::checked_div(&self, &rhs).expect("division by a non-appreciable dual number")
    }
}

impl fmt::Display for DualNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.du >= 0.0 {
            write!(f, "{} + {}ε", self.st, self.du)
        } else {
            write!(f, "{} - {}ε", self.st, -self.du)
        }
    }
}

// ---------------------------------------------------------------------------
// Quaternions
// ---------------------------------------------------------------------------

/// A quaternion `w + x i + y j + z k` over the reals.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Quaternion {
    pub w: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Quaternion {
    pub const ZERO: Quaternion = Quaternion::new(0.0, 0.0, 0.0, 0.0);
    pub const ONE: Quaternion = Quaternion::new(1.0, 0.0, 0.0, 0.0);
    pub const I: Quaternion = Quaternion::new(0.0, 1.0, 0.0, 0.0);
    pub const J: Quaternion = Quaternion::new(0.0, 0.0, 1.0, 0.0);
    pub const K: Quaternion = Quaternion::new(0.0, 0.0, 0.0, 1.0);

    pub const fn new(w: f64, x: f64, y: f64, z: f64) -> Self {
        Quaternion { w, x, y, z }
    }

    /// Embeds a real number.
    pub const fn real(w: f64) -> Self {
        Quaternion::new(w, 0.0, 0.0, 0.0)
    }

    /// Conjugate `w − x i − y j − z k`.
    pub fn conj(&self) -> Quaternion {
        Quaternion::new(self.w, -self.x, -self.y, -self.z)
    }

    /// Squared Euclidean norm `w² + x² + y² + z²`.
    pub fn norm_sqr(&self) -> f64 {
        self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z
    }

    /// Euclidean norm `√(q q*)`.
    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    /// Multiplicative inverse `q*/|q|²`.
    pub fn inv(&self) -> Result<Quaternion> {
        let n2 = self.norm_sqr();
        if n2 == 0.0 {
            return Err(Error::ZeroDivision);
        }
        Ok(self.conj() * (1.0 / n2))
    }

    /// True when the quaternion is exactly zero.
    pub fn is_zero(&self) -> bool {
        self.w == 0.0 && self.x == 0.0 && self.y == 0.0 && self.z == 0.0
    }

    /// Largest absolute value among the three imaginary components.
    pub fn imag_residue(&self) -> f64 {
        self.x.abs().max(self.y.abs()).max(self.z.abs())
    }
}

impl Add for Quaternion {
    type Output = Quaternion;
    fn add(self, rhs: Quaternion) -> Quaternion {
        Quaternion::new(
            self.w + rhs.w,
            self.x + rhs.x,
            self.y + rhs.y,
            self.z + rhs.z,
        )
    }
}

impl Sub for Quaternion {
    type Output = Quaternion;
    fn sub(self, rhs: Quaternion) -> Quaternion {
        Quaternion::new(
            self.w - rhs.w,
            self.x - rhs.x,
            self.y - rhs.y,
            self.z - rhs.z,
        )
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        Quaternion::new(-self.w, -self.x, -self.y, -self.z)
    }
}

impl Mul for Quaternion {
    type Output = Quaternion;
    /// Hamilton product: `i j = k`, `j k = i`, `k i = j`, `i² = j² = k² = −1`.
    fn mul(self, rhs: Quaternion) -> Quaternion {
        Quaternion::new(
            self.w * rhs.w - self.x * rhs.x - self.y * rhs.y - self.z * rhs.z,
            self.w * rhs.x + self.x * rhs.w + self.y * rhs.z - self.z * rhs.y,
            self.w * rhs.y - self.x * rhs.z + self.y * rhs.w + self.z * rhs.x,
            self.w * rhs.z + self.x * rhs.y - self.y * rhs.x + self.z * rhs.w,
        )
    }
}

impl Mul<f64> for Quaternion {
    type Output = Quaternion;
    fn mul(self, rhs: f64) -> Quaternion {
        Quaternion::new(self.w * rhs, self.x * rhs, self.y * rhs, self.z * rhs)
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:+}i{:+}j{:+}k", self.w, self.x, self.y, self.z)
    }
}

// ---------------------------------------------------------------------------
// Dual quaternions
// ---------------------------------------------------------------------------

/// A dual quaternion `st + du ε` with quaternion parts.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct DualQuaternion {
    /// Standard quaternion part.
    pub st: Quaternion,
    /// Dual quaternion part.
    pub du: Quaternion,
}

impl DualQuaternion {
    pub const ZERO: DualQuaternion = DualQuaternion {
        st: Quaternion::ZERO,
        du: Quaternion::ZERO,
    };
    pub const ONE: DualQuaternion = DualQuaternion {
        st: Quaternion::ONE,
        du: Quaternion::ZERO,
    };

    pub const fn new(st: Quaternion, du: Quaternion) -> Self {
        DualQuaternion { st, du }
    }

    /// Embeds a quaternion with zero dual part.
    pub const fn from_quat(st: Quaternion) -> Self {
        DualQuaternion {
            st,
            du: Quaternion::ZERO,
        }
    }

    /// Embeds a dual number (real quaternion parts).
    pub const fn from_dual(d: DualNumber) -> Self {
        DualQuaternion {
            st: Quaternion::real(d.st),
            du: Quaternion::real(d.du),
        }
    }

    /// Embeds a real number.
    pub const fn real(w: f64) -> Self {
        DualQuaternion::from_quat(Quaternion::real(w))
    }

    /// True when the standard part is nonzero.
    pub fn appreciable(&self) -> bool {
        !self.st.is_zero()
    }

    /// Componentwise quaternion conjugate.
    pub fn conj(&self) -> DualQuaternion {
        DualQuaternion::new(self.st.conj(), self.du.conj())
    }

    /// Multiplicative inverse `st⁻¹ − st⁻¹ du st⁻¹ ε` of an appreciable value.
    pub fn inv(&self) -> Result<DualQuaternion> {
        if !self.appreciable() {
            return Err(Error::NotAppreciable);
        }
        let si = self.st.inv()?;
        Ok(DualQuaternion::new(si, -(si * self.du * si)))
    }

    /// Magnitude as a dual number.
    ///
    /// For an appreciable value: `|st| + (st du* + du st*)_w / (2|st|) ε`
    /// (the numerator is real up to roundoff, so only its real component is
    /// kept). For a purely infinitesimal value the magnitude is `|du| ε`.
    pub fn magnitude(&self) -> DualNumber {
        if self.appreciable() {
            let n = self.st.norm();
            let cross = (self.st * self.du.conj() + self.du * self.st.conj()).w;
            DualNumber::new(n, cross / (2.0 * n))
        } else {
            DualNumber::new(0.0, self.du.norm())
        }
    }

    /// True when the magnitude equals `1 + 0ε` within `tol` on both parts.
    pub fn is_unit(&self, tol: f64) -> bool {
        let m = self.magnitude();
        (m.st - 1.0).abs() <= tol && m.du.abs() <= tol
    }

    /// Division by an appreciable dual number:
    /// `st/a_st + (du/a_st − (st/a_st)(a_du/a_st)) ε`.
    pub fn div_dual(&self, a: &DualNumber) -> Result<DualQuaternion> {
        if !a.appreciable() {
            return Err(Error::NotAppreciable);
        }
        let r = 1.0 / a.st;
        let st = self.st * r;
        Ok(DualQuaternion::new(st, self.du * r - st * (a.du * r)))
    }

    /// Multiplication by a dual number (central, so side does not matter).
    pub fn scale_dual(&self, a: &DualNumber) -> DualQuaternion {
        DualQuaternion::new(self.st * a.st, self.st * a.du + self.du * a.st)
    }

    /// Largest absolute value over all eight components.
    pub fn max_abs(&self) -> f64 {
        let q = |q: &Quaternion| q.w.abs().max(q.x.abs()).max(q.y.abs()).max(q.z.abs());
        q(&self.st).max(q(&self.du))
    }
}

impl Add for DualQuaternion {
    type Output = DualQuaternion;
    fn add(self, rhs: DualQuaternion) -> DualQuaternion {
        DualQuaternion::new(self.st + rhs.st, self.du + rhs.du)
    }
}

impl Sub for DualQuaternion {
    type Output = DualQuaternion;
    fn sub(self, rhs: DualQuaternion) -> DualQuaternion {
        DualQuaternion::new(self.st - rhs.st, self.du - rhs.du)
    }
}

impl Neg for DualQuaternion {
    type Output = DualQuaternion;
    fn neg(self) -> DualQuaternion {
        DualQuaternion::new(-self.st, -self.du)
    }
}

impl Mul for DualQuaternion {
    type Output = DualQuaternion;
    /// `(p_st + p_du ε)(q_st + q_du ε) = p_st q_st + (p_st q_du + p_du q_st) ε`.
    ///
    /// No `p_du q_du` term is ever formed, so nilpotency is exact.
    fn mul(self, rhs: DualQuaternion) -> DualQuaternion {
        DualQuaternion::new(self.st * rhs.st, self.st * rhs.du + self.du * rhs.st)
    }
}

impl Mul<f64> for DualQuaternion {
    type Output = DualQuaternion;
    fn mul(self, rhs: f64) -> DualQuaternion {
        DualQuaternion::new(self.st * rhs, self.du * rhs)
    }
}

impl fmt::Display for DualQuaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) + ({})ε", self.st, self.du)
    }
}
