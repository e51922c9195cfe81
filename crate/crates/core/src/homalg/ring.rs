//! Integral group-ring elements and matrices over them.

use super::group::FiniteAbelianGroup;
use crate::exact::IntMatrix;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// An element of `ℤ[π]`, stored as a sparse coefficient map keyed by element
/// index.
#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct GroupRingElem {
    coeffs: BTreeMap<usize, BigInt>,
}

impl GroupRingElem {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::group_element(0)
    }

    pub fn group_element(index: usize) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(index, BigInt::one());
        Self { coeffs }
    }

    pub fn term(index: usize, coeff: i64) -> Self {
        let mut e = Self::zero();
        e.add_term(index, BigInt::from(coeff));
        e
    }

    pub fn add_term(&mut self, index: usize, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(index).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.coeffs.remove(&index);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &BigInt)> {
        self.coeffs.iter().map(|(&i, c)| (i, c))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (i, c) in other.terms() {
            out.add_term(i, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(&i, c)| (i, -c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self, group: &FiniteAbelianGroup) -> Self {
        let mut out = Self::zero();
        for (a, ca) in self.terms() {
            for (b, cb) in other.terms() {
                out.add_term(group.mul(a, b), ca * cb);
            }
        }
        out
    }

    /// `g - 1` for the i-th generator.
    pub fn generator_minus_one(group: &FiniteAbelianGroup, i: usize) -> Self {
        let mut e = Self::group_element(group.generator(i));
        e.add_term(0, BigInt::from(-1));
        e
    }

    /// The norm element `1 + g + g^2 + … + g^{n-1}` of the i-th factor.
    pub fn norm(group: &FiniteAbelianGroup, i: usize) -> Self {
        let n = group.cyclic_orders()[i];
        let g = group.generator(i);
        let mut e = Self::zero();
        let mut current = 0usize;
        for _ in 0..n {
            e.add_term(current, BigInt::one());
            current = group.mul(current, g);
        }
        e
    }

    /// Sum of coefficients (the augmentation `ℤ[π] → ℤ`).
    pub fn augmentation(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    /// Matrix of left multiplication in the regular representation.
    pub fn regular_matrix(&self, group: &FiniteAbelianGroup) -> IntMatrix {
        let m = group.order() as usize;
        let mut mat = IntMatrix::zeros(m, m);
        for (g, c) in self.terms() {
            for h in 0..m {
                mat[(group.mul(g, h), h)] += c.clone();
            }
        }
        mat
    }

    pub fn display(&self, group: &FiniteAbelianGroup) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (i, c) in self.terms() {
            let name = group.element_name(i);
            let part = if c.is_one() {
                name
            } else if (-c).is_one() {
                format!("-{name}")
            } else {
                format!("{c}*{name}")
            };
            parts.push(part);
        }
        parts.join(" + ")
    }
}

/// A matrix over the group ring, used for resolution boundaries.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LambdaMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<GroupRingElem>,
}

impl LambdaMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![GroupRingElem::zero(); rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &GroupRingElem {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, e: GroupRingElem) {
        self.entries[i * self.cols + j] = e;
    }

    /// Realisation as an integer matrix through the regular representation:
    /// each Λ-entry becomes an `|π| × |π|` block.
    pub fn to_int_matrix(&self, group: &FiniteAbelianGroup) -> IntMatrix {
        let m = group.order() as usize;
        let mut out = IntMatrix::zeros(self.rows * m, self.cols * m);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let block = self.get(i, j).regular_matrix(group);
                for bi in 0..m {
                    for bj in 0..m {
                        out[(i * m + bi, j * m + bj)] = block[(bi, bj)].clone();
                    }
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn norm_times_generator_minus_one_vanishes() {
        let g = FiniteAbelianGroup::z4();
        let n = GroupRingElem::norm(&g, 0);
        let t1 = GroupRingElem::generator_minus_one(&g, 0);
        assert!(n.mul(&t1, &g).is_zero());
    }

    #[test]
    fn regular_representation_is_multiplicative() {
        let g = FiniteAbelianGroup::klein();
        let a = GroupRingElem::generator_minus_one(&g, 0);
        let b = GroupRingElem::norm(&g, 1);
        let prod = a.mul(&b, &g);
        assert_eq!(
            prod.regular_matrix(&g),
            a.regular_matrix(&g).mul(&b.regular_matrix(&g))
        );
    }

    #[test]
    fn augmentation_of_norm_is_order() {
        let g = FiniteAbelianGroup::z4();
        assert_eq!(GroupRingElem::norm(&g, 0).augmentation(), BigInt::from(4));
        assert_eq!(
            GroupRingElem::generator_minus_one(&g, 0).augmentation(),
            BigInt::zero()
        );
    }

    #[test]
    fn display_names() {
        let g = FiniteAbelianGroup::z4();
        let t1 = GroupRingElem::generator_minus_one(&g, 0);
        assert_eq!(t1.display(&g), "-1 + t");
    }
}
