//! Finite abelian groups presented as products of cyclic factors.

use serde::{Deserialize, Serialize};

/// A finite abelian group `Z/n_1 × … × Z/n_k`, the trivial group when the
/// list is empty. Elements are indexed in mixed radix with the first factor
/// as the fastest digit.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FiniteAbelianGroup {
    cyclic_orders: Vec<u64>,
}

impl FiniteAbelianGroup {
    pub fn new(cyclic_orders: Vec<u64>) -> Self {
        assert!(
            cyclic_orders.iter().all(|&n| n >= 2),
            "cyclic factors need order >= 2"
        );
        Self { cyclic_orders }
    }

    pub fn trivial() -> Self {
        Self {
            cyclic_orders: Vec::new(),
        }
    }

    pub fn cyclic(n: u64) -> Self {
        Self::new(vec![n])
    }

    pub fn z4() -> Self {
        Self::cyclic(4)
    }

    pub fn z2() -> Self {
        Self::cyclic(2)
    }

    /// The Klein group Z/2 × Z/2.
    pub fn klein() -> Self {
        Self::new(vec![2, 2])
    }

    pub fn cyclic_orders(&self) -> &[u64] {
        &self.cyclic_orders
    }

    pub fn num_generators(&self) -> usize {
        self.cyclic_orders.len()
    }

    pub fn order(&self) -> u64 {
        self.cyclic_orders.iter().product()
    }

    pub fn is_trivial(&self) -> bool {
        self.cyclic_orders.is_empty()
    }

    /// Digits of the element with the given index.
    pub fn digits(&self, mut index: usize) -> Vec<u32> {
        let mut d = Vec::with_capacity(self.cyclic_orders.len());
        for &n in &self.cyclic_orders {
            d.push((index % n as usize) as u32);
            index /= n as usize;
        }
        debug_assert_eq!(index, 0, "element index out of range");
        d
    }

    /// Index of the element with the given digits.
    pub fn index_of(&self, digits: &[u32]) -> usize {
        assert_eq!(digits.len(), self.cyclic_orders.len());
        let mut idx = 0usize;
        for (i, (&d, &n)) in digits.iter().zip(&self.cyclic_orders).enumerate().rev() {
            debug_assert!((d as u64) < n, "digit {i} out of range");
            idx = idx * n as usize + d as usize;
        }
        idx
    }

    /// Index of the i-th generator.
    pub fn generator(&self, i: usize) -> usize {
        let mut digits = vec![0u32; self.cyclic_orders.len()];
        digits[i] = 1;
        self.index_of(&digits)
    }

    /// Product of the elements with the given indices.
    pub fn mul(&self, a: usize, b: usize) -> usize {
        let da = self.digits(a);
        let db = self.digits(b);
        let digits: Vec<u32> = da
            .iter()
            .zip(&db)
            .zip(&self.cyclic_orders)
            .map(|((&x, &y), &n)| ((x as u64 + y as u64) % n) as u32)
            .collect();
        self.index_of(&digits)
    }

    /// Conventional display name of the element with the given index, in
    /// terms of generators `t, u, v, …`.
    pub fn element_name(&self, index: usize) -> String {
        const NAMES: [&str; 4] = ["t", "u", "v", "w"];
        let digits = self.digits(index);
        let mut parts = Vec::new();
        for (i, &d) in digits.iter().enumerate() {
            if d == 0 {
                continue;
            }
            let g = NAMES.get(i).copied().unwrap_or("g");
            if d == 1 {
                parts.push(g.to_string());
            } else {
                parts.push(format!("{g}^{d}"));
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn indexing_roundtrip() {
        let g = FiniteAbelianGroup::new(vec![4, 2]);
        assert_eq!(g.order(), 8);
        for idx in 0..8 {
            assert_eq!(g.index_of(&g.digits(idx)), idx);
        }
    }

    #[test]
    fn multiplication_mixed_radix() {
        let g = FiniteAbelianGroup::klein();
        let t = g.generator(0);
        let u = g.generator(1);
        assert_eq!(g.mul(t, t), 0);
        assert_eq!(g.mul(t, u), g.mul(u, t));
        assert_ne!(g.mul(t, u), 0);
    }

    #[test]
    fn trivial_group() {
        let g = FiniteAbelianGroup::trivial();
        assert_eq!(g.order(), 1);
        assert_eq!(g.mul(0, 0), 0);
        assert_eq!(g.element_name(0), "1");
    }

    #[test]
    fn element_names() {
        let g = FiniteAbelianGroup::z4();
        assert_eq!(g.element_name(0), "1");
        assert_eq!(g.element_name(1), "t");
        assert_eq!(g.element_name(2), "t^2");
        let k = FiniteAbelianGroup::klein();
        assert_eq!(k.element_name(3), "t*u");
    }
}
