//! Free resolutions of ℤ over `ℤ[π]`.

use super::group::FiniteAbelianGroup;
use super::ring::{GroupRingElem, LambdaMatrix};
use crate::exact::{cokernel_invariants, subquotient_invariants, IntMatrix};
use num_traits::Zero;
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

/// An initial segment of a free `ℤ[π]`-resolution of the trivial module ℤ:
/// ranks `F_0, …, F_len` and boundaries `∂_k : F_k → F_{k-1}` for
/// `1 ≤ k ≤ len`, stored both over the group ring and as integer matrices
/// through the regular representation.
///
/// Exactness in positive degrees is verified on construction, as is
/// `∂∘∂ = 0` and that the cokernel of `∂_1` is the augmentation module ℤ.
#[derive(Clone, Debug)]
pub struct ResolutionSegment {
    group: FiniteAbelianGroup,
    ranks: Vec<usize>,
    boundaries: Vec<LambdaMatrix>,
    integral: Vec<IntMatrix>,
}

impl ResolutionSegment {
    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    /// Ranks of `F_0 … F_len`.
    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn length(&self) -> usize {
        self.ranks.len() - 1
    }

    /// The boundary `∂_k : F_k → F_{k-1}` over the group ring, `1 ≤ k ≤ len`.
    pub fn boundary(&self, k: usize) -> &LambdaMatrix {
        &self.boundaries[k - 1]
    }

    /// The boundary realised as an integer matrix of shape
    /// `(rank_{k-1}·|π|) × (rank_k·|π|)`.
    pub fn integral_boundary(&self, k: usize) -> &IntMatrix {
        &self.integral[k - 1]
    }

    fn verify(&self) {
        let len = self.length();
        // Augmentation kills the first boundary.
        for j in 0..self.boundaries.first().map_or(0, LambdaMatrix::cols) {
            let total: num_bigint::BigInt = (0..self.boundaries[0].rows())
                .map(|i| self.boundaries[0].get(i, j).augmentation())
                .sum();
            assert!(total.is_zero(), "augmentation does not kill ∂_1");
        }
        for k in 1..len {
            assert!(
                self.integral[k - 1].mul(&self.integral[k]).is_zero(),
                "∂_{k} ∘ ∂_{} is nonzero",
                k + 1
            );
        }
        // H_0 of the Λ-level complex is the augmentation module.
        if !self.integral.is_empty() {
            let h0 = cokernel_invariants(&self.integral[0]);
            assert_eq!(h0.free_rank, 1, "coker ∂_1 has wrong rank");
            assert!(h0.torsion.is_empty(), "coker ∂_1 has torsion");
        }
        // Exact at F_k for 0 < k < len.
        for k in 1..len {
            let h = subquotient_invariants(&self.integral[k], &self.integral[k - 1])
                .expect("∂² = 0 already checked");
            assert!(h.is_trivial(), "resolution not exact at position {k}: {h}");
        }
    }
}

/// Ranks-and-boundaries pair used while assembling tensor products.
struct Complex {
    ranks: Vec<usize>,
    boundaries: Vec<LambdaMatrix>,
}

/// The period-2 resolution of the i-th cyclic factor, written over the full
/// group ring: boundaries alternate `g_i - 1` (odd degrees) and the norm
/// element (even degrees).
fn cyclic_complex(group: &FiniteAbelianGroup, factor: usize, length: usize) -> Complex {
    let ranks = vec![1usize; length + 1];
    let mut boundaries = Vec::with_capacity(length);
    for k in 1..=length {
        let elem = if k % 2 == 1 {
            GroupRingElem::generator_minus_one(group, factor)
        } else {
            GroupRingElem::norm(group, factor)
        };
        let mut m = LambdaMatrix::zeros(1, 1);
        m.set(0, 0, elem);
        boundaries.push(m);
    }
    Complex { ranks, boundaries }
}

fn trivial_complex(length: usize) -> Complex {
    let mut ranks = vec![0usize; length + 1];
    ranks[0] = 1;
    let mut boundaries = Vec::with_capacity(length);
    for k in 1..=length {
        boundaries.push(LambdaMatrix::zeros(ranks[k - 1], ranks[k]));
    }
    Complex { ranks, boundaries }
}

/// Tensor product of two complexes over the same group ring, with the
/// Koszul sign `(-1)^a` on the second factor's boundary. Degree-k blocks
/// are ordered by ascending first-factor degree.
fn tensor(a: &Complex, b: &Complex, length: usize) -> Complex {
    let la = a.ranks.len() - 1;
    let lb = b.ranks.len() - 1;
    let block_range = |k: usize| -> Vec<(usize, usize)> {
        (k.saturating_sub(lb)..=k.min(la))
            .map(|i| (i, k - i))
            .collect()
    };
    let rank_of = |k: usize| -> usize {
        block_range(k)
            .iter()
            .map(|&(i, j)| a.ranks[i] * b.ranks[j])
            .sum()
    };
    let ranks: Vec<usize> = (0..=length).map(rank_of).collect();

    // Offset of block (i, k-i) inside degree k.
    let offset = |k: usize, bi: usize| -> usize {
        block_range(k)
            .iter()
            .take_while(|&&(i, _)| i < bi)
            .map(|&(i, j)| a.ranks[i] * b.ranks[j])
            .sum()
    };

    let mut boundaries = Vec::with_capacity(length);
    for k in 1..=length {
        let mut m = LambdaMatrix::zeros(ranks[k - 1], ranks[k]);
        for &(ai, bj) in &block_range(k) {
            let src_off = offset(k, ai);
            for x in 0..a.ranks[ai] {
                for y in 0..b.ranks[bj] {
                    let col = src_off + x * b.ranks[bj] + y;
                    // ∂_A ⊗ id
                    if ai >= 1 && a.ranks[ai - 1] > 0 {
                        let dst_off = offset(k - 1, ai - 1);
                        let da = &a.boundaries[ai - 1];
                        for xp in 0..a.ranks[ai - 1] {
                            let e = da.get(xp, x).clone();
                            if !e.is_zero() {
                                let row = dst_off + xp * b.ranks[bj] + y;
                                m.set(row, col, m.get(row, col).add(&e));
                            }
                        }
                    }
                    // (-1)^a id ⊗ ∂_B
                    if bj >= 1 && b.ranks[bj - 1] > 0 {
                        let dst_off = offset(k - 1, ai);
                        let db = &b.boundaries[bj - 1];
                        for yp in 0..b.ranks[bj - 1] {
                            let mut e = db.get(yp, y).clone();
                            if ai % 2 == 1 {
                                e = e.neg();
                            }
                            if !e.is_zero() {
                                let row = dst_off + x * b.ranks[bj - 1] + yp;
                                m.set(row, col, m.get(row, col).add(&e));
                            }
                        }
                    }
                }
            }
        }
        boundaries.push(m);
    }
    Complex { ranks, boundaries }
}

fn build(group: &FiniteAbelianGroup, length: usize) -> ResolutionSegment {
    let complex = if group.is_trivial() {
        trivial_complex(length)
    } else {
        let mut acc = cyclic_complex(group, 0, length);
        for factor in 1..group.num_generators() {
            let next = cyclic_complex(group, factor, length);
            acc = tensor(&acc, &next, length);
        }
        acc
    };
    let integral = complex
        .boundaries
        .iter()
        .map(|b| b.to_int_matrix(group))
        .collect();
    let seg = ResolutionSegment {
        group: group.clone(),
        ranks: complex.ranks,
        boundaries: complex.boundaries,
        integral,
    };
    seg.verify();
    seg
}

type Cache = Mutex<HashMap<(Vec<u64>, usize), Arc<ResolutionSegment>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// A free resolution of ℤ over `ℤ[π]` of the requested length, cached per
/// `(group, length)` behind an immutable handle.
pub fn resolution(group: &FiniteAbelianGroup, length: usize) -> Arc<ResolutionSegment> {
    assert!(length >= 1, "resolution length must be at least 1");
    let key = (group.cyclic_orders().to_vec(), length);
    let mut map = cache().lock().expect("resolution cache poisoned");
    map.entry(key)
        .or_insert_with(|| Arc::new(build(group, length)))
        .clone()
}
