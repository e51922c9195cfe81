//! Finitely generated ℤ[π]-modules with free underlying abelian group.

use super::group::FiniteAbelianGroup;
use super::ring::GroupRingElem;
use crate::exact::{inverse_unimodular, IntMatrix};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModuleError {
    #[error("expected {expected} action matrices, got {got}")]
    WrongGeneratorCount { expected: usize, got: usize },
    #[error("action matrix {0} is not {1}x{1}")]
    WrongShape(usize, usize),
    #[error("action matrix {0} is not invertible over Z")]
    NotInvertible(usize),
    #[error("action matrices {0} and {1} do not commute")]
    NonCommuting(usize, usize),
    #[error("action matrix {0} does not satisfy its generator order")]
    OrderViolated(usize),
    #[error("weight {0} is not a homomorphism to {{±1}}")]
    BadWeight(usize),
}

/// A `ℤ[π]`-module `Z^rank` given by one integer action matrix per group
/// generator, together with an orientation character `w : π → {±1}`.
///
/// The weight is applied whenever the module acts: the element `g` acts as
/// `w(g)·A_g`, so the twisted coefficient system `M ⊗ Z^w` is the same
/// carrier with the character folded in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupModule {
    rank: usize,
    actions: Vec<IntMatrix>,
    weight: Vec<i8>,
}

impl GroupModule {
    pub fn new(
        group: &FiniteAbelianGroup,
        rank: usize,
        actions: Vec<IntMatrix>,
        weight: Vec<i8>,
    ) -> Result<Self, ModuleError> {
        let gens = group.num_generators();
        if actions.len() != gens || weight.len() != gens {
            return Err(ModuleError::WrongGeneratorCount {
                expected: gens,
                got: actions.len().max(weight.len()),
            });
        }
        for (i, a) in actions.iter().enumerate() {
            if a.rows() != rank || a.cols() != rank {
                return Err(ModuleError::WrongShape(i, rank));
            }
            if inverse_unimodular(a).is_none() {
                return Err(ModuleError::NotInvertible(i));
            }
        }
        for i in 0..gens {
            for j in i + 1..gens {
                if actions[i].mul(&actions[j]) != actions[j].mul(&actions[i]) {
                    return Err(ModuleError::NonCommuting(i, j));
                }
            }
        }
        for (i, a) in actions.iter().enumerate() {
            let n = group.cyclic_orders()[i];
            let mut p = IntMatrix::identity(rank);
            for _ in 0..n {
                p = p.mul(a);
            }
            if p != IntMatrix::identity(rank) {
                return Err(ModuleError::OrderViolated(i));
            }
            let w = weight[i];
            if w != 1 && w != -1 {
                return Err(ModuleError::BadWeight(i));
            }
            if w == -1 && n % 2 == 1 {
                return Err(ModuleError::BadWeight(i));
            }
        }
        Ok(Self {
            rank,
            actions,
            weight,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn actions(&self) -> &[IntMatrix] {
        &self.actions
    }

    pub fn weight(&self) -> &[i8] {
        &self.weight
    }

    /// Same carrier and actions with a different orientation character.
    pub fn with_weight(&self, weight: Vec<i8>) -> Self {
        assert_eq!(weight.len(), self.weight.len());
        Self {
            weight,
            ..self.clone()
        }
    }

    /// The matrix by which the group element with the given index acts,
    /// weight included.
    pub fn act(&self, group: &FiniteAbelianGroup, element: usize) -> IntMatrix {
        let digits = group.digits(element);
        let mut m = IntMatrix::identity(self.rank);
        let mut sign = 1i8;
        for (i, &d) in digits.iter().enumerate() {
            for _ in 0..d {
                m = m.mul(&self.actions[i]);
            }
            if self.weight[i] == -1 && d % 2 == 1 {
                sign = -sign;
            }
        }
        if sign == -1 {
            m = m.neg();
        }
        m
    }

    /// Action of a group-ring element (weights folded in).
    pub fn act_ring(&self, group: &FiniteAbelianGroup, elem: &GroupRingElem) -> IntMatrix {
        let mut out = IntMatrix::zeros(self.rank, self.rank);
        for (g, c) in elem.terms() {
            out = out.add(&self.act(group, g).scale(c));
        }
        out
    }

    // ---- catalogue of the modules that arise for the quotients ----

    /// The trivial module ℤ.
    pub fn trivial_z(group: &FiniteAbelianGroup) -> Self {
        let gens = group.num_generators();
        Self::new(group, 1, vec![IntMatrix::identity(1); gens], vec![1; gens])
            .expect("trivial module is valid")
    }

    /// ℤ twisted by a character: the i-th generator acts by `signs[i]`.
    pub fn twisted_z(group: &FiniteAbelianGroup, signs: Vec<i8>) -> Self {
        let gens = group.num_generators();
        Self::new(group, 1, vec![IntMatrix::identity(1); gens], signs)
            .expect("character module is valid")
    }

    /// π₂ of the quotient of S²×S² by the free ℤ/4 action: the generator
    /// acts by a quarter turn of the rank-2 lattice.
    pub fn pi2_of_z4_quotient(group: &FiniteAbelianGroup) -> Self {
        assert_eq!(group.cyclic_orders(), &[4]);
        let a = IntMatrix::from_rows(&[vec![0, 1], vec![-1, 0]]);
        Self::new(group, 2, vec![a], vec![1]).expect("valid action")
    }

    /// π₃ of the same quotient: the generator swaps the two Hopf classes.
    pub fn pi3_of_z4_quotient(group: &FiniteAbelianGroup) -> Self {
        assert_eq!(group.cyclic_orders(), &[4]);
        let a = IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]]);
        Self::new(group, 2, vec![a], vec![1]).expect("valid action")
    }

    /// π₂ of the product of two projective planes: each generator negates
    /// one coordinate of the rank-2 lattice.
    pub fn pi2_of_projective_product(group: &FiniteAbelianGroup) -> Self {
        assert_eq!(group.cyclic_orders(), &[2, 2]);
        let t = IntMatrix::from_rows(&[vec![-1, 0], vec![0, 1]]);
        let u = IntMatrix::from_rows(&[vec![1, 0], vec![0, -1]]);
        Self::new(group, 2, vec![t, u], vec![1, 1]).expect("valid action")
    }

    /// π₂ of the ℤ/2 quotient S²×(S²/±): the generator negates the second
    /// coordinate.
    pub fn pi2_of_s2_by_projective(group: &FiniteAbelianGroup) -> Self {
        assert_eq!(group.cyclic_orders(), &[2]);
        let t = IntMatrix::from_rows(&[vec![1, 0], vec![0, -1]]);
        Self::new(group, 2, vec![t], vec![1]).expect("valid action")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quarter_turn_has_order_four() {
        let g = FiniteAbelianGroup::z4();
        let m = GroupModule::pi2_of_z4_quotient(&g);
        assert_eq!(m.act(&g, 0), IntMatrix::identity(2));
        let t4 = g.mul(g.mul(1, 1), g.mul(1, 1));
        assert_eq!(m.act(&g, t4), IntMatrix::identity(2));
    }

    #[test]
    fn rejects_wrong_order() {
        let g = FiniteAbelianGroup::z2();
        let a = IntMatrix::from_rows(&[vec![0, 1], vec![-1, 0]]);
        assert_eq!(
            GroupModule::new(&g, 2, vec![a], vec![1]),
            Err(ModuleError::OrderViolated(0))
        );
    }

    #[test]
    fn rejects_non_commuting() {
        let g = FiniteAbelianGroup::klein();
        let a = IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]]);
        let b = IntMatrix::from_rows(&[vec![-1, 0], vec![0, 1]]);
        assert_eq!(
            GroupModule::new(&g, 2, vec![a, b], vec![1, 1]),
            Err(ModuleError::NonCommuting(0, 1))
        );
    }

    #[test]
    fn rejects_odd_order_twist() {
        let g = FiniteAbelianGroup::cyclic(3);
        assert!(std::panic::catch_unwind(|| GroupModule::twisted_z(&g, vec![-1])).is_err());
    }

    #[test]
    fn weight_flips_sign_of_action() {
        let g = FiniteAbelianGroup::z4();
        let m = GroupModule::twisted_z(&g, vec![-1]);
        assert_eq!(m.act(&g, 1), IntMatrix::identity(1).neg());
        assert_eq!(m.act(&g, 2), IntMatrix::identity(1));
    }
}
