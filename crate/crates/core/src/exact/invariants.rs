//! Abelian group invariants of cokernels and subquotients.

use super::int_matrix::IntMatrix;
use super::snf::smith_normal_form;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExactError {
    /// The two boundary maps of a purported chain position do not compose
    /// to zero, so the subquotient is undefined.
    #[error("boundary maps do not compose to zero: the complex is malformed")]
    CompositionNonzero,
}

/// A finitely generated abelian group in canonical form: a free rank plus a
/// torsion chain `d_1 | d_2 | ...` with every `d_i >= 2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbelianInvariants {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl AbelianInvariants {
    pub fn free(rank: usize) -> Self {
        Self {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    pub fn trivial() -> Self {
        Self::free(0)
    }

    /// Cyclic group ℤ/n (n >= 2).
    pub fn cyclic(n: u64) -> Self {
        assert!(n >= 2);
        Self {
            free_rank: 0,
            torsion: vec![BigInt::from(n)],
        }
    }

    /// Builds from machine integers, normalising into the canonical chain.
    pub fn from_parts(free_rank: usize, torsion: &[u64]) -> Self {
        let mut m = IntMatrix::zeros(torsion.len(), torsion.len());
        for (i, &t) in torsion.iter().enumerate() {
            m[(i, i)] = BigInt::from(t);
        }
        let mut inv = cokernel_invariants(&m);
        inv.free_rank += free_rank;
        inv
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Order of the group if finite.
    pub fn order(&self) -> Option<BigInt> {
        if self.free_rank > 0 {
            return None;
        }
        Some(self.torsion.iter().product())
    }

    /// Direct sum, renormalised to the canonical chain.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let n = self.torsion.len() + other.torsion.len();
        let mut m = IntMatrix::zeros(n, n);
        for (i, t) in self.torsion.iter().chain(&other.torsion).enumerate() {
            m[(i, i)] = t.clone();
        }
        let mut inv = cokernel_invariants(&m);
        inv.free_rank += self.free_rank + other.free_rank;
        inv
    }
}

impl fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for t in &self.torsion {
            parts.push(format!("Z/{t}"));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Invariants of `Z^rows / image(m)` for `m : Z^cols -> Z^rows`.
pub fn cokernel_invariants(m: &IntMatrix) -> AbelianInvariants {
    let snf = smith_normal_form(m);
    let torsion: Vec<BigInt> = snf
        .invariant_factors()
        .into_iter()
        .filter(|d| !d.is_one())
        .collect();
    AbelianInvariants {
        free_rank: m.rows() - snf.rank(),
        torsion,
    }
}

/// Inverse of a unimodular integer matrix, via its Smith normal form
/// (`u * m * v = 1` forces `m^{-1} = v * u`). Returns `None` if `m` is not
/// invertible over ℤ.
pub fn inverse_unimodular(m: &IntMatrix) -> Option<IntMatrix> {
    if m.rows() != m.cols() {
        return None;
    }
    let snf = smith_normal_form(m);
    let all_one = (0..m.rows()).all(|i| snf.d[(i, i)].is_one());
    if !all_one {
        return None;
    }
    Some(snf.v.mul(&snf.u))
}

/// Invariants of `ker(boundary_out) / im(boundary_in)` at a chain position
/// `C_out <- C <- C_in`, where `boundary_in : C_in -> C` and
/// `boundary_out : C -> C_out`.
///
/// The kernel lattice of `boundary_out` is read off from the column
/// transform of its Smith normal form; the images of `boundary_in` are then
/// expressed in that kernel basis and the quotient reduced by a second
/// Smith normal form.
pub fn subquotient_invariants(
    boundary_in: &IntMatrix,
    boundary_out: &IntMatrix,
) -> Result<AbelianInvariants, ExactError> {
    assert_eq!(
        boundary_in.rows(),
        boundary_out.cols(),
        "chain position dimension mismatch"
    );
    if !boundary_out.mul(boundary_in).is_zero() {
        return Err(ExactError::CompositionNonzero);
    }

    let n = boundary_out.cols();
    let snf = smith_normal_form(boundary_out);
    let rank = snf.rank();
    let nullity = n - rank;

    // v is unimodular, so v^{-1} c expresses c in the column basis of v;
    // membership of c in the kernel means the first `rank` coordinates
    // vanish, which the composition check guarantees.
    let v_inv = inverse_unimodular(&snf.v).expect("snf column transform is unimodular");
    let coords = v_inv.mul(boundary_in);
    let reduced = IntMatrix::from_fn(nullity, boundary_in.cols(), |i, j| {
        coords[(rank + i, j)].clone()
    });
    for i in 0..rank {
        for j in 0..boundary_in.cols() {
            debug_assert!(coords[(i, j)].is_zero(), "image not inside kernel");
        }
    }
    Ok(cokernel_invariants(&reduced))
}
