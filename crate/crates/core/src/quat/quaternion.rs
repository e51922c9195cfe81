//! Quaternions and points of S² and S²×S².

use crate::tol::ALGEBRAIC_TOL;
use serde::{Deserialize, Serialize};
use std::ops::{Add, Mul, Neg, Sub};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum QuatError {
    #[error("quaternion norm {0} is not 1 within tolerance")]
    NonUnitQuaternion(f64),
    #[error("closed form and quaternion arithmetic disagree by {0:e}")]
    ClosedFormMismatch(f64),
    #[error("map failed its order check: max error {0:e}")]
    OrderFailed(f64),
    #[error("fixed point found at {witness:?} with displacement {displacement:e}")]
    FixedPointFound {
        witness: [f64; 6],
        displacement: f64,
    },
    #[error("covering identity violated: {context} (error {error:e})")]
    IdentityViolated { context: &'static str, error: f64 },
}

/// A quaternion `w + xi + yj + zk` in double precision.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Quaternion {
    pub w: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Quaternion {
    pub const ONE: Self = Self::new(1.0, 0.0, 0.0, 0.0);
    pub const I: Self = Self::new(0.0, 1.0, 0.0, 0.0);
    pub const J: Self = Self::new(0.0, 0.0, 1.0, 0.0);
    pub const K: Self = Self::new(0.0, 0.0, 0.0, 1.0);

    pub const fn new(w: f64, x: f64, y: f64, z: f64) -> Self {
        Self { w, x, y, z }
    }

    pub fn conj(self) -> Self {
        Self::new(self.w, -self.x, -self.y, -self.z)
    }

    pub fn norm_sq(self) -> f64 {
        self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z
    }

    pub fn norm(self) -> f64 {
        self.norm_sq().sqrt()
    }

    pub fn scale(self, c: f64) -> Self {
        Self::new(c * self.w, c * self.x, c * self.y, c * self.z)
    }

    pub fn normalize(self) -> Self {
        self.scale(1.0 / self.norm())
    }

    pub fn inverse(self) -> Self {
        self.conj().scale(1.0 / self.norm_sq())
    }

    /// Euclidean inner product of the coefficient vectors.
    pub fn dot(self, other: Self) -> f64 {
        self.w * other.w + self.x * other.x + self.y * other.y + self.z * other.z
    }

    pub fn dist(self, other: Self) -> f64 {
        (self - other).norm()
    }

    pub fn is_unit(self, tol: f64) -> bool {
        (self.norm() - 1.0).abs() <= tol
    }

    /// `e^{πit}` in the (1, i)-plane: the square root of `e^{2πit}` used by
    /// the boundary twist.
    pub fn half_circle(t: f64) -> Self {
        let a = std::f64::consts::PI * t;
        Self::new(a.cos(), a.sin(), 0.0, 0.0)
    }

    /// `e^{2πit}` in the (1, i)-plane.
    pub fn circle(t: f64) -> Self {
        let a = 2.0 * std::f64::consts::PI * t;
        Self::new(a.cos(), a.sin(), 0.0, 0.0)
    }
}

impl Add for Quaternion {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.w + o.w, self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl Sub for Quaternion {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.w - o.w, self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Neg for Quaternion {
    type Output = Self;
    fn neg(self) -> Self {
        self.scale(-1.0)
    }
}

impl Mul for Quaternion {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Self::new(
            self.w * o.w - self.x * o.x - self.y * o.y - self.z * o.z,
            self.w * o.x + self.x * o.w + self.y * o.z - self.z * o.y,
            self.w * o.y - self.x * o.z + self.y * o.w + self.z * o.x,
            self.w * o.z + self.x * o.y - self.y * o.x + self.z * o.w,
        )
    }
}

/// A point of S², stored as a purely imaginary unit quaternion. The real
/// part is exactly zero after construction.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct S2Point {
    q: Quaternion,
}

impl S2Point {
    pub fn new(x: f64, y: f64, z: f64) -> Self {
        let n = (x * x + y * y + z * z).sqrt();
        assert!(n > 1e-14, "cannot normalise the zero vector");
        Self {
            q: Quaternion::new(0.0, x / n, y / n, z / n),
        }
    }

    /// Reinterprets a quaternion as a sphere point; the real part must
    /// already be negligible and is dropped exactly.
    pub fn from_quaternion(q: Quaternion) -> Self {
        debug_assert!(q.w.abs() < 1e-9, "not purely imaginary: w = {}", q.w);
        Self::new(q.x, q.y, q.z)
    }

    pub fn quaternion(self) -> Quaternion {
        self.q
    }

    pub fn coords(self) -> [f64; 3] {
        [self.q.x, self.q.y, self.q.z]
    }

    pub fn dot(self, other: Self) -> f64 {
        self.q.x * other.q.x + self.q.y * other.q.y + self.q.z * other.q.z
    }

    pub fn dist(self, other: Self) -> f64 {
        self.q.dist(other.q)
    }

    pub fn antipode(self) -> Self {
        Self { q: -self.q }
    }

    pub const I: Self = Self { q: Quaternion::I };
    pub const J: Self = Self { q: Quaternion::J };
    pub const K: Self = Self { q: Quaternion::K };
}

impl Neg for S2Point {
    type Output = Self;
    fn neg(self) -> Self {
        self.antipode()
    }
}

/// A point of S²×S².
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ProductPoint {
    pub first: S2Point,
    pub second: S2Point,
}

impl ProductPoint {
    pub fn new(first: S2Point, second: S2Point) -> Self {
        Self { first, second }
    }

    pub fn dist(self, other: Self) -> f64 {
        let a = self.first.dist(other.first);
        let b = self.second.dist(other.second);
        (a * a + b * b).sqrt()
    }

    pub fn flat(self) -> [f64; 6] {
        let [a, b, c] = self.first.coords();
        let [d, e, f] = self.second.coords();
        [a, b, c, d, e, f]
    }
}

/// Rotation of S² by conjugation with a unit quaternion.
pub fn rotate_by_conjugation(q: Quaternion, v: S2Point) -> Result<S2Point, QuatError> {
    if !q.is_unit(1e-9) {
        return Err(QuatError::NonUnitQuaternion(q.norm()));
    }
    let rotated = q * v.quaternion() * q.inverse();
    debug_assert!(rotated.w.abs() < ALGEBRAIC_TOL * 10.0);
    Ok(S2Point::from_quaternion(rotated))
}

/// Rotation through π about the k-axis (conjugation by k).
pub fn rotate_half_turn(v: S2Point) -> S2Point {
    let [x, y, z] = v.coords();
    S2Point::new(-x, -y, z)
}

/// Polar coordinates `r·e^{2πit}` on the closed unit disc, identified with
/// a hemisphere of the second factor.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct DiscCoord {
    pub r: f64,
    pub t: f64,
}

impl DiscCoord {
    pub fn new(r: f64, t: f64) -> Self {
        assert!((0.0..=1.0).contains(&r), "disc radius out of range: {r}");
        Self {
            r,
            t: t.rem_euclid(1.0),
        }
    }

    /// The half-turn `d ↦ -d` of the disc.
    pub fn half_turn(self) -> Self {
        Self::new(self.r, self.t + 0.5)
    }
}

/// Hemisphere tag for the second factor; the gluing involution has a
/// different formula on each side and points near the seam must carry
/// their branch explicitly.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Hemisphere {
    Lower,
    Upper,
}

/// A point of S²×S² whose second coordinate is given in hemisphere-tagged
/// disc coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct HemiPoint {
    pub s: S2Point,
    pub d: DiscCoord,
    pub hemisphere: Hemisphere,
}

impl HemiPoint {
    /// Embeds into S²×S². The radial profile `sin(πr/2)` sends r = 0 to
    /// the pole and r = 1 to the equator of the tagged hemisphere.
    pub fn to_product(self) -> ProductPoint {
        let radial = (std::f64::consts::FRAC_PI_2 * self.d.r).sin();
        let angle = 2.0 * std::f64::consts::PI * self.d.t;
        let (x, y) = (radial * angle.cos(), radial * angle.sin());
        let z_abs = (1.0 - radial * radial).max(0.0).sqrt();
        let z = match self.hemisphere {
            Hemisphere::Upper => z_abs,
            Hemisphere::Lower => -z_abs,
        };
        ProductPoint::new(self.s, S2Point::new(x, y, z))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quaternion_norm_multiplicative() {
        let a = Quaternion::new(1.0, -2.0, 0.5, 3.0);
        let b = Quaternion::new(-0.3, 0.7, 2.0, -1.1);
        let lhs = (a * b).norm();
        let rhs = a.norm() * b.norm();
        assert!((lhs - rhs).abs() <= ALGEBRAIC_TOL * rhs);
    }

    #[test]
    fn multiplication_table() {
        let (i, j, k) = (Quaternion::I, Quaternion::J, Quaternion::K);
        assert_eq!(i * j, k);
        assert_eq!(j * k, i);
        assert_eq!(k * i, j);
        assert_eq!(i * i, -Quaternion::ONE);
    }

    /// Conjugation by i sends j to -j.
    #[test]
    fn conjugation_by_i_negates_j() {
        let out = rotate_by_conjugation(Quaternion::I, S2Point::J).unwrap();
        assert!(out.dist(-S2Point::J) <= ALGEBRAIC_TOL);
    }

    /// Conjugation by k is rotation through π about the k-axis; in
    /// particular it negates i.
    #[test]
    fn half_turn_is_conjugation_by_k() {
        let v = S2Point::new(0.3, -0.8, 0.52);
        let by_conj = rotate_by_conjugation(Quaternion::K, v).unwrap();
        assert!(by_conj.dist(rotate_half_turn(v)) <= ALGEBRAIC_TOL);
        let i_out = rotate_by_conjugation(Quaternion::K, S2Point::I).unwrap();
        assert!(i_out.dist(-S2Point::I) <= ALGEBRAIC_TOL);
    }

    #[test]
    fn axis_is_fixed() {
        let q = Quaternion::new(0.5, 0.1, -0.2, 0.84).normalize();
        let axis = S2Point::new(q.x, q.y, q.z);
        let out = rotate_by_conjugation(q, axis).unwrap();
        assert!(out.dist(axis) <= 1e-10);
    }

    #[test]
    fn non_unit_rejected() {
        let q = Quaternion::new(2.0, 0.0, 0.0, 0.0);
        assert!(matches!(
            rotate_by_conjugation(q, S2Point::I),
            Err(QuatError::NonUnitQuaternion(_))
        ));
    }

    #[test]
    fn hemisphere_embedding_is_unit() {
        for &(r, t) in &[(0.0, 0.0), (0.5, 0.3), (1.0, 0.9), (0.25, 0.125)] {
            let hp = HemiPoint {
                s: S2Point::I,
                d: DiscCoord::new(r, t),
                hemisphere: Hemisphere::Upper,
            };
            let p = hp.to_product();
            let [x, y, z] = p.second.coords();
            assert!((x * x + y * y + z * z - 1.0).abs() <= ALGEBRAIC_TOL);
        }
    }

    #[test]
    fn equator_is_hemisphere_independent() {
        let mk = |h| HemiPoint {
            s: S2Point::J,
            d: DiscCoord::new(1.0, 0.17),
            hemisphere: h,
        };
        let upper = mk(Hemisphere::Upper).to_product();
        let lower = mk(Hemisphere::Lower).to_product();
        assert!(upper.dist(lower) <= ALGEBRAIC_TOL);
    }

    #[test]
    fn disc_half_turn_wraps() {
        let d = DiscCoord::new(0.4, 0.75);
        let h = d.half_turn();
        assert!((h.t - 0.25).abs() <= 1e-15);
    }
}
