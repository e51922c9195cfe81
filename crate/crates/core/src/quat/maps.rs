//! The explicit maps on S²×S²: the free actions, the hemisphere gluing
//! involution, and the quaternionic covering of the orthogonality locus.

use super::quaternion::{
    rotate_half_turn, DiscCoord, HemiPoint, Hemisphere, ProductPoint, QuatError, Quaternion,
    S2Point,
};
use crate::tol::CLOSED_FORM_TOL;

/// `V(d) = sin(πr/2)·e^{2πit} + cos(πr/2)·j`, a unit quaternion
/// interpolating from j at the disc centre to the boundary circle.
pub fn v_map(d: DiscCoord) -> Quaternion {
    let half = std::f64::consts::FRAC_PI_2 * d.r;
    Quaternion::circle(d.t).scale(half.sin()) + Quaternion::J.scale(half.cos())
}

/// The closed form of `V(R_π d)⁻¹ V(d)`:
/// `cos(πr) − sin(πr)cos(2πt)·j + sin(πr)sin(2πt)·k`.
pub fn twist_factor_closed_form(d: DiscCoord) -> Quaternion {
    let pr = std::f64::consts::PI * d.r;
    let tt = 2.0 * std::f64::consts::PI * d.t;
    Quaternion::new(pr.cos(), 0.0, -pr.sin() * tt.cos(), pr.sin() * tt.sin())
}

/// `V(R_π d)⁻¹ V(d)` computed by quaternion arithmetic, checked against
/// the closed form. A mismatch signals a convention error.
pub fn twist_factor(d: DiscCoord) -> Result<Quaternion, QuatError> {
    let by_arithmetic = v_map(d.half_turn()).inverse() * v_map(d);
    let closed = twist_factor_closed_form(d);
    let err = by_arithmetic.dist(closed);
    if err > CLOSED_FORM_TOL {
        return Err(QuatError::ClosedFormMismatch(err));
    }
    Ok(by_arithmetic)
}

/// The order-4 action `(s, t) ↦ (t, -s)`.
pub fn order_four_action(p: ProductPoint) -> ProductPoint {
    ProductPoint::new(p.second, p.first.antipode())
}

/// Its square, the antipode on both factors.
pub fn double_antipode(p: ProductPoint) -> ProductPoint {
    ProductPoint::new(p.first.antipode(), p.second.antipode())
}

/// First generator of the Klein four-group action: antipode on the first
/// factor.
pub fn klein_first(p: ProductPoint) -> ProductPoint {
    ProductPoint::new(p.first.antipode(), p.second)
}

/// Second generator: half turn on the first factor, antipode on the
/// second.
pub fn klein_second(p: ProductPoint) -> ProductPoint {
    ProductPoint::new(rotate_half_turn(p.first), p.second.antipode())
}

/// The gluing involution presenting the twisted double quotient: on the
/// lower hemisphere `(s, d) ↦ (-s, R_π d)`; on the upper hemisphere the
/// antipode of s is conjugated by the boundary twist factor.
pub fn glue_involution(p: HemiPoint) -> Result<HemiPoint, QuatError> {
    let d_out = p.d.half_turn();
    let s_out = match p.hemisphere {
        Hemisphere::Lower => p.s.antipode(),
        Hemisphere::Upper => {
            let w = twist_factor(p.d)?;
            let conjugated = w * p.s.antipode().quaternion() * w.inverse();
            S2Point::from_quaternion(conjugated)
        }
    };
    Ok(HemiPoint {
        s: s_out,
        d: d_out,
        hemisphere: p.hemisphere,
    })
}

/// `f(q) = (q i q⁻¹, q j q⁻¹)`, a 2-fold covering of the locus of
/// orthogonal pairs by the unit quaternions.
pub fn covering_map(q: Quaternion) -> Result<ProductPoint, QuatError> {
    if !q.is_unit(1e-9) {
        return Err(QuatError::NonUnitQuaternion(q.norm()));
    }
    let qi = q.inverse();
    let first = S2Point::from_quaternion(q * Quaternion::I * qi);
    let second = S2Point::from_quaternion(q * Quaternion::J * qi);
    Ok(ProductPoint::new(first, second))
}

/// Right multiplication by `(1 + k)/√2`; lifts the order-4 action through
/// the covering and itself has order 8.
pub fn covering_lift(q: Quaternion) -> Quaternion {
    let c = std::f64::consts::FRAC_1_SQRT_2;
    q * Quaternion::new(c, 0.0, 0.0, c)
}

/// A boundary point of the twisted disc-bundle piece: side 1 or 2, a
/// sphere coordinate, and the circle parameter of `x = e^{2πit}`, modulo
/// the identification `(s, x) ~ (-s, -x)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EBoundaryPoint {
    pub side: u8,
    pub s: S2Point,
    pub t: f64,
}

impl EBoundaryPoint {
    pub fn new(side: u8, s: S2Point, t: f64) -> Self {
        assert!(side == 1 || side == 2);
        Self {
            side,
            s,
            t: t.rem_euclid(1.0),
        }
    }

    /// Distance in the quotient: the smaller of the distances to the two
    /// representatives.
    pub fn dist(self, other: Self) -> f64 {
        assert_eq!(self.side, other.side, "points on different pieces");
        let direct = point_dist(self.s, self.t, other.s, other.t);
        let flipped = point_dist(self.s.antipode(), self.t + 0.5, other.s, other.t);
        direct.min(flipped)
    }
}

fn point_dist(s1: S2Point, t1: f64, s2: S2Point, t2: f64) -> f64 {
    let circle = Quaternion::circle(t1).dist(Quaternion::circle(t2));
    let sphere = s1.dist(s2);
    (circle * circle + sphere * sphere).sqrt()
}

/// The boundary gluing `[s, x]₁ ↦ [e^{πit} s e^{-πit}, x]₂`.
pub fn boundary_twist(p: EBoundaryPoint) -> EBoundaryPoint {
    assert_eq!(p.side, 1, "the gluing is oriented from side 1 to side 2");
    let h = Quaternion::half_circle(p.t);
    let s_out = S2Point::from_quaternion(h * p.s.quaternion() * h.inverse());
    EBoundaryPoint::new(2, s_out, p.t)
}

/// The involution `[s, x] ↦ [-s, x]` on a boundary piece (the side swap of
/// the full involution is bookkeeping on top of this).
pub fn boundary_involution(p: EBoundaryPoint) -> EBoundaryPoint {
    EBoundaryPoint::new(p.side, p.s.antipode(), p.t)
}

/// Homological self-intersection of a class of bidegree `(a, b)` under the
/// intersection form of S²×S²: `Q(a,b) = 2ab`. The graph of a degree-k map
/// has bidegree `(1, k)`.
pub fn homological_self_intersection(a: i64, b: i64) -> i64 {
    2 * a * b
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tol::{ALGEBRAIC_TOL, COMPOSITE_TOL};

    #[test]
    fn v_map_boundary_values() {
        // r = 0 gives j regardless of angle.
        for &t in &[0.0, 0.3, 0.77] {
            assert!(v_map(DiscCoord::new(0.0, t)).dist(Quaternion::J) <= ALGEBRAIC_TOL);
        }
        // r = 1 gives the boundary circle point.
        for &t in &[0.0, 0.25, 0.6] {
            assert!(v_map(DiscCoord::new(1.0, t)).dist(Quaternion::circle(t)) <= ALGEBRAIC_TOL);
        }
    }

    /// Direct substitution oracle at (1/2, 0).
    #[test]
    fn v_map_midpoint() {
        let v = v_map(DiscCoord::new(0.5, 0.0));
        let expected = (Quaternion::ONE + Quaternion::J).scale(std::f64::consts::FRAC_1_SQRT_2);
        assert!(v.dist(expected) <= ALGEBRAIC_TOL);
    }

    #[test]
    fn twist_factor_extremes() {
        let at0 = twist_factor(DiscCoord::new(0.0, 0.3)).unwrap();
        assert!(at0.dist(Quaternion::ONE) <= ALGEBRAIC_TOL);
        let at1 = twist_factor(DiscCoord::new(1.0, 0.8)).unwrap();
        assert!(at1.dist(-Quaternion::ONE) <= ALGEBRAIC_TOL);
    }

    /// Closed-form substitution oracle at (1/2, 1/8): (√2/2)(k − j).
    #[test]
    fn twist_factor_at_eighth() {
        let w = twist_factor(DiscCoord::new(0.5, 0.125)).unwrap();
        let c = std::f64::consts::FRAC_1_SQRT_2;
        let expected = Quaternion::new(0.0, 0.0, -c, c);
        assert!(w.dist(expected) <= ALGEBRAIC_TOL);
    }

    #[test]
    fn order_four_action_squares_to_double_antipode() {
        let p = ProductPoint::new(S2Point::new(0.1, 0.7, -0.3), S2Point::new(-0.5, 0.2, 0.9));
        let twice = order_four_action(order_four_action(p));
        assert!(twice.dist(double_antipode(p)) <= ALGEBRAIC_TOL);
    }

    #[test]
    fn glue_involution_is_an_involution() {
        let p = HemiPoint {
            s: S2Point::new(0.48, -0.6, 0.64),
            d: DiscCoord::new(0.37, 0.21),
            hemisphere: Hemisphere::Upper,
        };
        let back = glue_involution(glue_involution(p).unwrap()).unwrap();
        assert!(back.to_product().dist(p.to_product()) <= COMPOSITE_TOL);
        assert_eq!(back.hemisphere, p.hemisphere);
    }

    /// On the equator the twist factor is -1, so the upper formula
    /// degenerates to the lower one and the branches glue continuously.
    #[test]
    fn glue_involution_seam_agreement() {
        for k in 0..40 {
            let t = k as f64 / 40.0;
            let s = S2Point::new(0.3, 0.85, -0.43);
            let mk = |hemisphere| HemiPoint {
                s,
                d: DiscCoord::new(1.0, t),
                hemisphere,
            };
            let upper = glue_involution(mk(Hemisphere::Upper)).unwrap().to_product();
            let lower = glue_involution(mk(Hemisphere::Lower)).unwrap().to_product();
            assert!(upper.dist(lower) <= COMPOSITE_TOL);
        }
    }

    #[test]
    fn covering_lands_on_orthogonal_pairs() {
        let q = Quaternion::new(0.3, -0.44, 0.82, 0.17).normalize();
        let p = covering_map(q).unwrap();
        assert!(p.first.dot(p.second).abs() <= 1e-10);
    }

    #[test]
    fn covering_at_one() {
        let p = covering_map(Quaternion::ONE).unwrap();
        assert!(p.first.dist(S2Point::I) <= ALGEBRAIC_TOL);
        assert!(p.second.dist(S2Point::J) <= ALGEBRAIC_TOL);
    }

    /// Power-table oracle: ((1+k)/√2)² = k, so the lift has order 8 and
    /// its fourth power is -1.
    #[test]
    fn covering_lift_order_eight() {
        let mut q = Quaternion::ONE;
        for _ in 0..2 {
            q = covering_lift(q);
        }
        assert!(q.dist(Quaternion::K) <= ALGEBRAIC_TOL);
        for _ in 0..2 {
            q = covering_lift(q);
        }
        assert!(q.dist(-Quaternion::ONE) <= ALGEBRAIC_TOL);
        for _ in 0..4 {
            q = covering_lift(q);
        }
        assert!(q.dist(Quaternion::ONE) <= ALGEBRAIC_TOL);
    }

    /// The gluing commutes with the sphere antipode on the boundary.
    #[test]
    fn boundary_twist_commutes_with_involution() {
        for k in 0..50 {
            let t = k as f64 / 50.0;
            let s = S2Point::new(-0.2, 0.9, 0.387);
            let p = EBoundaryPoint::new(1, s, t);
            let a = boundary_twist(boundary_involution(p));
            let b = boundary_involution(boundary_twist(p));
            assert!(a.dist(b) <= ALGEBRAIC_TOL);
        }
    }

    #[test]
    fn boundary_identification_distance() {
        let s = S2Point::new(0.6, 0.0, 0.8);
        let p = EBoundaryPoint::new(1, s, 0.2);
        let same = EBoundaryPoint::new(1, s.antipode(), 0.7);
        assert!(p.dist(same) <= ALGEBRAIC_TOL);
    }

    #[test]
    fn self_intersection_numbers() {
        assert_eq!(homological_self_intersection(1, 1), 2);
        assert_eq!(homological_self_intersection(1, 3), 6);
        assert_eq!(homological_self_intersection(1, 0), 0);
    }
}
