//! Isomorphism testing for small graded 𝔽₂ algebras by exhaustive search
//! over degree-preserving generator assignments.

use super::algebra::{F2Class, GradedF2Algebra};
use super::poly::Monomial;
use crate::exact::F2Matrix;
use serde::{Deserialize, Serialize};

/// A witness isomorphism: the image of each source generator, rendered in
/// the target ring's basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsoWitness {
    pub images: Vec<(String, String)>,
}

/// Decides whether two rings are isomorphic as graded 𝔽₂-algebras.
///
/// Every assignment of target classes (of the matching degrees) to the
/// source generators is tried; an assignment is an isomorphism when all
/// source relations map to zero and the induced linear map is bijective in
/// every degree. The search space is tiny for the rings at hand, so a
/// negative answer is certified by exhaustion.
pub fn ring_isomorphic(r1: &GradedF2Algebra, r2: &GradedF2Algebra) -> (bool, Option<IsoWitness>) {
    if r1.top_degree() != r2.top_degree() || r1.dims() != r2.dims() {
        return (false, None);
    }
    let gens = r1.presentation().generators.clone();
    let mut assignment: Vec<F2Class> = Vec::with_capacity(gens.len());
    if search(r1, r2, &gens, &mut assignment) {
        let images = gens
            .iter()
            .zip(&assignment)
            .map(|((name, _), img)| (name.clone(), r2.render_class(img)))
            .collect();
        (true, Some(IsoWitness { images }))
    } else {
        (false, None)
    }
}

fn search(
    r1: &GradedF2Algebra,
    r2: &GradedF2Algebra,
    gens: &[(String, usize)],
    assignment: &mut Vec<F2Class>,
) -> bool {
    if assignment.len() == gens.len() {
        return is_isomorphism(r1, r2, assignment);
    }
    let degree = gens[assignment.len()].1;
    let dim = r2.dim(degree);
    assert!(dim < 16, "exhaustive search is for small rings");
    for mask in 0..(1u32 << dim) {
        let coords: Vec<u8> = (0..dim).map(|i| ((mask >> i) & 1) as u8).collect();
        assignment.push(F2Class { degree, coords });
        if search(r1, r2, gens, assignment) {
            return true;
        }
        assignment.pop();
    }
    false
}

/// Image of a source monomial under the generator assignment, computed in
/// the target ring.
fn image_of_monomial(r2: &GradedF2Algebra, assignment: &[F2Class], m: &Monomial) -> F2Class {
    let mut acc = r2.monomial_class(&Monomial::one(r2.gen_names().len()));
    for (gen, &e) in m.exps.iter().enumerate() {
        for _ in 0..e {
            acc = r2.mul_truncating(&acc, &assignment[gen]);
        }
    }
    acc
}

fn is_isomorphism(r1: &GradedF2Algebra, r2: &GradedF2Algebra, assignment: &[F2Class]) -> bool {
    // Relations of degree within the truncation must map to zero; higher
    // ones are killed by the truncation on both sides.
    for rel in &r1.presentation().relations {
        if rel.is_zero() {
            continue;
        }
        let deg = rel
            .homogeneous_degree(r1.gen_degrees())
            .expect("relations validated at build");
        if deg > r1.top_degree() {
            continue;
        }
        let mut acc = r2.zero_class(deg);
        for m in &rel.monomials {
            acc = r2.add(&acc, &image_of_monomial(r2, assignment, m));
        }
        if !acc.is_zero() {
            return false;
        }
    }
    // Bijective in every degree.
    for d in 1..=r1.top_degree() {
        let dim = r1.dim(d);
        if dim == 0 {
            continue;
        }
        let cols: Vec<Vec<u8>> = r1
            .basis(d)
            .iter()
            .map(|m| image_of_monomial(r2, assignment, m).coords)
            .collect();
        let mat = F2Matrix::from_columns(&cols, r2.dim(d));
        if mat.rank() != dim {
            return false;
        }
    }
    true
}
