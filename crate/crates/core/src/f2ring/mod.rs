//! Graded-commutative 𝔽₂ algebras from presentations: monomial bases, cup
//! products, Steenrod squares via the Cartan formula, Poincaré pairing and
//! Wu classes, and brute-force isomorphism testing.

mod algebra;
pub mod catalog;
mod iso;
mod poly;
mod steenrod;
mod wu;

pub use algebra::{parse_presentation, F2Class, GradedF2Algebra, RingError, RingPresentation};
pub use iso::{ring_isomorphic, IsoWitness};
pub use poly::{parse_monomial, parse_poly, Monomial, Poly};

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_overflow_is_an_error() {
        let r = catalog::projective_product_ring();
        let a = r.class("t^2*u").unwrap();
        let b = r.class("t*u").unwrap();
        assert!(matches!(
            r.cup(&a, &b),
            Err(RingError::DegreeOverflow { degree: 5, top: 4 })
        ));
    }

    #[test]
    fn inconsistent_presentation_rejected() {
        let p = parse_presentation("gen t 1\nrel 1\ntop 2\n").unwrap();
        assert!(matches!(
            GradedF2Algebra::build(p),
            Err(RingError::InconsistentPresentation)
        ));
    }

    #[test]
    fn non_homogeneous_relation_rejected() {
        let p = parse_presentation("gen t 1\ngen u 1\nrel t + u^2\ntop 3\n").unwrap();
        assert!(matches!(
            GradedF2Algebra::build(p),
            Err(RingError::NonHomogeneousRelation(_))
        ));
    }

    #[test]
    fn singular_fundamental_rejected() {
        // t² is declared fundamental but the pairing in degree 1 fails:
        // t·t = t², u·t = 0 = u·u makes u pair to nothing.
        let p = parse_presentation("gen t 1\ngen u 1\nrel u^2\nrel t*u\ntop 2\nfundamental t^2\n")
            .unwrap();
        assert!(matches!(
            GradedF2Algebra::build(p),
            Err(RingError::SingularPairing { .. })
        ));
    }

    #[test]
    fn class_parsing_reduces_to_basis() {
        let r = catalog::twisted_projective_ring();
        // The relation identifies w³ and w²x; the canonical basis keeps w²x.
        let c = r.class("w^3").unwrap();
        assert_eq!(r.render_class(&c), "w^2*x");
        assert_eq!(c, r.class("w^2*x").unwrap());
        assert!(!c.is_zero());
    }

    #[test]
    fn parser_rejects_malformed_presentations() {
        for text in [
            "gen t
top 2
", // missing degree
            "gen t 1
top banana
", // bad top
            "gen t 1
", // missing top
            "gen t 1
foo bar
top 2
", // unknown keyword
            "gen t 1
rel t^x
top 2
", // bad exponent
            "gen t 0
top 2
", // degree-0 generator (caught at build)
        ] {
            let parsed = parse_presentation(text);
            let failed = match parsed {
                Err(_) => true,
                Ok(p) => GradedF2Algebra::build(p).is_err(),
            };
            assert!(failed, "expected a failure for {text:?}");
        }
    }

    #[test]
    fn mixed_degree_class_rejected() {
        let r = catalog::projective_product_ring();
        assert!(matches!(
            r.class("t + t*u"),
            Err(RingError::MixedDegrees(_))
        ));
    }
}
