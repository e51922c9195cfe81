//! Steenrod squares via the Cartan formula.
//!
//! On a generator g: Sq⁰g = g, Sq^{|g|}g = g², Sq¹g comes from the
//! presentation's table (forced to g² in degree 1), and every other square
//! below the degree is zero. Products are expanded by
//! `Sq^n(ab) = Σ Sq^i a · Sq^j b` and sums by additivity.

use super::algebra::{F2Class, GradedF2Algebra};
use super::poly::Monomial;

impl GradedF2Algebra {
    /// Sq^i of a single generator, as a class.
    fn sq_generator(&self, i: usize, gen: usize) -> F2Class {
        let gdeg = self.gen_degrees()[gen];
        let mut mono = Monomial::one(self.gen_names().len());
        if i == 0 {
            mono.exps[gen] = 1;
            return self.monomial_class(&mono);
        }
        if i == gdeg {
            mono.exps[gen] = 2;
            return self.monomial_class(&mono);
        }
        if i > gdeg {
            return self.zero_class(gdeg + i);
        }
        if i == 1 {
            if let Some((_, poly)) = self.presentation().sq1.iter().find(|(g, _)| *g == gen) {
                return self
                    .class_of_poly(poly)
                    .map(|mut c| {
                        // The zero polynomial parses to a degree-0 class;
                        // re-grade it.
                        if c.is_zero() {
                            c = self.zero_class(gdeg + 1);
                        }
                        c
                    })
                    .expect("sq1 table validated at build");
            }
        }
        self.zero_class(gdeg + i)
    }

    /// Sq^i of a monomial by peeling one generator factor and applying the
    /// Cartan formula to the two halves.
    fn sq_monomial(&self, i: usize, m: &Monomial) -> F2Class {
        let degree = m.degree(self.gen_degrees());
        if m.is_one() {
            return if i == 0 {
                self.monomial_class(m)
            } else {
                self.zero_class(degree + i)
            };
        }
        let gen = m.exps.iter().position(|&e| e > 0).unwrap();
        let mut rest = m.clone();
        rest.exps[gen] -= 1;
        let rest_deg = rest.degree(self.gen_degrees());
        let gdeg = self.gen_degrees()[gen];

        let mut acc = self.zero_class(degree + i);
        for a in 0..=i.min(2 * gdeg) {
            let left = self.sq_generator(a, gen);
            if left.is_zero() {
                continue;
            }
            let b = i - a;
            if b > 2 * rest_deg {
                continue;
            }
            let right = self.sq_monomial(b, &rest);
            if right.is_zero() {
                continue;
            }
            acc = self.add(&acc, &self.mul_truncating(&left, &right));
        }
        acc
    }

    /// The Steenrod square Sq^i on a class. Results above the truncation
    /// degree are zero, which is the correct answer for the closed-manifold
    /// rings and never consulted for the group-cohomology rings.
    pub fn sq(&self, i: usize, c: &F2Class) -> F2Class {
        let target = c.degree + i;
        if i == 0 {
            return c.clone();
        }
        if i > c.degree || target > self.top_degree() {
            // Sq^i vanishes above the degree of the class; beyond the
            // truncation everything is zero anyway.
            if i > c.degree {
                return self.zero_class(target);
            }
        }
        let mut acc = self.zero_class(target);
        for (pos, mon) in self.basis(c.degree).iter().enumerate() {
            if c.coords[pos] == 0 {
                continue;
            }
            acc = self.add(&acc, &self.sq_monomial(i, mon));
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::super::catalog;

    /// In the exterior-times-polynomial ring the degree-1 generator squares
    /// to zero, so its Sq¹ vanishes.
    #[test]
    fn sq1_of_degree_one_generator_is_its_square() {
        let r = catalog::cyclic4_group_ring();
        let x = r.class("x").unwrap();
        assert!(r.sq(1, &x).is_zero());
    }

    #[test]
    fn sq1_of_u_is_zero_by_table() {
        let r = catalog::cyclic4_group_ring();
        let u = r.class("u").unwrap();
        assert!(r.sq(1, &u).is_zero());
    }

    /// Cartan oracle: Sq²(u·u) = Sq²u·u + Sq¹u·Sq¹u + u·Sq²u = 2u³ = 0,
    /// and Sq¹(u²) = 2·u·Sq¹u = 0.
    #[test]
    fn squares_of_u_squared() {
        let r = catalog::cyclic4_group_ring();
        let u2 = r.class("u^2").unwrap();
        assert!(r.sq(2, &u2).is_zero());
        assert!(r.sq(1, &u2).is_zero());
    }

    #[test]
    fn top_square_is_squaring() {
        let r = catalog::projective_product_ring();
        let tu = r.class("t*u").unwrap();
        let sq2 = r.sq(2, &tu);
        assert_eq!(sq2, r.class("t^2*u^2").unwrap());
    }

    #[test]
    fn sq_vanishes_above_class_degree() {
        let r = catalog::projective_product_ring();
        let t = r.class("t").unwrap();
        assert!(r.sq(2, &t).is_zero());
        assert!(r.sq(3, &t).is_zero());
    }

    #[test]
    fn sq_zero_is_identity() {
        let r = catalog::projective_product_ring();
        let c = r.class("t*u + u^2").unwrap();
        assert_eq!(r.sq(0, &c), c);
    }

    /// Sq¹ is a derivation; check it against the Cartan expansion on every
    /// basis pair of the twisted-bundle ring.
    #[test]
    fn cartan_consistency_on_twisted_ring() {
        let r = catalog::twisted_projective_ring();
        for da in 0..=r.top_degree() {
            for db in 0..=(r.top_degree() - da) {
                for a in r.basis(da) {
                    for b in r.basis(db) {
                        let ca = r.monomial_class(&a);
                        let cb = r.monomial_class(&b);
                        let prod = r.mul_truncating(&ca, &cb);
                        for n in 0..=(da + db) {
                            let lhs = r.sq(n, &prod);
                            let mut rhs = r.zero_class(da + db + n);
                            for i in 0..=n {
                                let left = r.sq(i, &ca);
                                let right = r.sq(n - i, &cb);
                                rhs = r.add(&rhs, &r.mul_truncating(&left, &right));
                            }
                            assert_eq!(
                                lhs,
                                rhs,
                                "Sq^{n}({} * {})",
                                r.render_class(&ca),
                                r.render_class(&cb)
                            );
                        }
                    }
                }
            }
        }
    }
}
