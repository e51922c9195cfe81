//! The cohomology rings that occur for the quotient manifolds.

use super::algebra::{parse_presentation, GradedF2Algebra};

fn build(text: &str) -> GradedF2Algebra {
    GradedF2Algebra::build(parse_presentation(text).expect("catalog presentation parses"))
        .expect("catalog presentation is consistent")
}

/// `F2[t,u]/(t³,u³)`, the ring of the product of two projective planes,
/// with fundamental class t²u².
pub fn projective_product_ring() -> GradedF2Algebra {
    build(
        "gen t 1\n\
         gen u 1\n\
         rel t^3\n\
         rel u^3\n\
         top 4\n\
         fundamental t^2*u^2\n",
    )
}

/// `F2[w,x]/(x³, w²(w+x))`, the ring of the twisted projective-plane
/// bundle; w is the orientation class and x is induced from the base.
pub fn twisted_projective_ring() -> GradedF2Algebra {
    build(
        "gen w 1\n\
         gen x 1\n\
         rel x^3\n\
         rel w^3 + w^2*x\n\
         top 4\n\
         fundamental w^2*x^2\n",
    )
}

/// `P(u) ⊗ E(x)` with |u| = 2, |x| = 1, Sq¹u = 0, truncated at degree 6:
/// the mod-2 cohomology ring of the cyclic group of order 4.
pub fn cyclic4_group_ring() -> GradedF2Algebra {
    build(
        "gen x 1\n\
         gen u 2\n\
         rel x^2\n\
         sq1 u 0\n\
         top 6\n",
    )
}

/// `F2[u,x]/(u², x³)`, the ring of the product of a sphere with a
/// projective plane, with fundamental class ux².
pub fn product_with_sphere_ring() -> GradedF2Algebra {
    build(
        "gen u 2\n\
         gen x 1\n\
         rel u^2\n\
         rel x^3\n\
         sq1 u 0\n\
         top 4\n\
         fundamental u*x^2\n",
    )
}

/// A single generator in top degree: the ring of the 4-sphere.
pub fn four_sphere_ring() -> GradedF2Algebra {
    build(
        "gen s 4\n\
         top 4\n\
         fundamental s\n",
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Monomial enumeration oracle: t^a u^b with a, b ≤ 2 and a + b = deg.
    #[test]
    fn projective_product_dims() {
        assert_eq!(projective_product_ring().dims(), vec![1, 2, 3, 2, 1]);
    }

    #[test]
    fn twisted_ring_top_is_one_dimensional() {
        let r = twisted_projective_ring();
        assert_eq!(r.dims(), vec![1, 2, 3, 2, 1]);
        assert_eq!(r.dim(4), 1);
    }

    #[test]
    fn cyclic4_ring_is_a_line() {
        assert_eq!(cyclic4_group_ring().dims(), vec![1, 1, 1, 1, 1, 1, 1]);
    }

    #[test]
    fn exterior_square_vanishes() {
        let r = cyclic4_group_ring();
        let x = r.class("x").unwrap();
        assert!(r.cup(&x, &x).unwrap().is_zero());
    }

    #[test]
    fn product_ring_top_monomial() {
        let r = projective_product_ring();
        let a = r.class("t^2").unwrap();
        let b = r.class("u^2").unwrap();
        let prod = r.cup(&a, &b).unwrap();
        assert_eq!(r.pair_with_fundamental(&prod).unwrap(), 1);
    }

    #[test]
    fn twisted_relation_holds() {
        let r = twisted_projective_ring();
        let w2 = r.class("w^2").unwrap();
        let wx = r.class("w + x").unwrap();
        assert!(r.cup(&w2, &wx).unwrap().is_zero());
    }

    #[test]
    fn sphere_product_dims() {
        assert_eq!(product_with_sphere_ring().dims(), vec![1, 1, 2, 1, 1]);
    }
}
