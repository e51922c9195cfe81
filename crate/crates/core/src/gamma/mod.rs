//! The Whitehead quadratic functor on free modules with group action,
//! twisted coinvariants, and orbit counting on the torsion subgroup.
//!
//! For a free module with basis e₁…eₙ the quadratic functor has basis
//! γ(e₁)…γ(eₙ) followed by the brackets `[eᵢ,eⱼ]` for i < j, and an
//! endomorphism acts through the quadratic expansion
//! `γ(Σ aᵢeᵢ) = Σ aᵢ²γ(eᵢ) + Σ_{i<j} aᵢaⱼ[eᵢ,eⱼ]` together with
//! bilinearity of the bracket and `[e,e] = 2γ(e)`.

use crate::exact::{
    cokernel_invariants, inverse_unimodular, smith_normal_form, AbelianInvariants, IntMatrix,
    SnfResult,
};
use crate::homalg::{FiniteAbelianGroup, GroupModule};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GammaError {
    #[error("symmetry is not invertible over Z")]
    SymmetryNotInvertible,
    /// The claimed symmetry does not normalize the group action, so it
    /// induces nothing on the coinvariants.
    #[error("symmetry does not normalize the group action on the coinvariants")]
    SymmetryNotInduced,
}

/// The quadratic functor applied to a [`GroupModule`]: the induced action
/// matrices on the rank `n(n+1)/2` module, with the orientation character
/// carried along for the twisted coinvariants.
#[derive(Clone, Debug)]
pub struct GammaModule {
    base_rank: usize,
    labels: Vec<String>,
    actions: Vec<IntMatrix>,
    weight: Vec<i8>,
}

/// Positions of the bracket basis elements: (i, j) with i < j in
/// lexicographic order, following the n squaring classes.
fn bracket_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            pairs.push((i, j));
        }
    }
    pairs
}

/// The matrix induced on the quadratic functor by an endomorphism of the
/// base module.
pub fn induced_on_gamma(a: &IntMatrix) -> IntMatrix {
    let n = a.rows();
    assert_eq!(a.cols(), n);
    let pairs = bracket_pairs(n);
    let dim = n + pairs.len();
    let bracket_pos = |i: usize, j: usize| -> usize {
        let (lo, hi) = if i < j { (i, j) } else { (j, i) };
        n + pairs.iter().position(|&p| p == (lo, hi)).unwrap()
    };

    let mut out = IntMatrix::zeros(dim, dim);
    // Columns for γ(e_c): expand γ(A e_c).
    for c in 0..n {
        let v = a.column(c);
        for k in 0..n {
            out[(k, c)] = &v[k] * &v[k];
        }
        for (k, l) in pairs.iter().copied() {
            out[(bracket_pos(k, l), c)] = &v[k] * &v[l];
        }
    }
    // Columns for [e_c, e_d]: expand [A e_c, A e_d].
    for (c, d) in pairs.iter().copied() {
        let v = a.column(c);
        let w = a.column(d);
        let col = bracket_pos(c, d);
        for k in 0..n {
            out[(k, col)] = BigInt::from(2) * &v[k] * &w[k];
        }
        for (k, l) in pairs.iter().copied() {
            out[(bracket_pos(k, l), col)] = &v[k] * &w[l] + &v[l] * &w[k];
        }
    }
    out
}

/// Applies the quadratic functor to a module: each generator's action is
/// pushed through [`induced_on_gamma`].
pub fn gamma_functor(m: &GroupModule) -> GammaModule {
    let n = m.rank();
    let mut labels: Vec<String> = (1..=n).map(|i| format!("gamma(e{i})")).collect();
    for (i, j) in bracket_pairs(n) {
        labels.push(format!("[e{},e{}]", i + 1, j + 1));
    }
    GammaModule {
        base_rank: n,
        labels,
        actions: m.actions().iter().map(induced_on_gamma).collect(),
        weight: m.weight().to_vec(),
    }
}

impl GammaModule {
    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn base_rank(&self) -> usize {
        self.base_rank
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn actions(&self) -> &[IntMatrix] {
        &self.actions
    }

    pub fn weight(&self) -> &[i8] {
        &self.weight
    }

    /// The relation matrix whose column space is `Σ_g (w(g)·Γ(A_g) − 1)Γ`,
    /// taken over the group generators.
    fn relation_matrix(&self) -> IntMatrix {
        let dim = self.rank();
        let mut rel = IntMatrix::zeros(dim, 0);
        for (g, a) in self.actions.iter().enumerate() {
            let mut twisted = a.clone();
            if self.weight[g] == -1 {
                twisted = twisted.neg();
            }
            let block = twisted.add(&IntMatrix::identity(dim).neg());
            rel = rel.hstack(&block);
        }
        rel
    }

    /// Invariants of `Z^w ⊗ Γ`, the cokernel of the stacked twisted
    /// relations.
    pub fn twisted_coinvariants(&self) -> AbelianInvariants {
        cokernel_invariants(&self.relation_matrix())
    }

    /// Orbit count of the torsion subgroup of the twisted coinvariants
    /// under the group generated by the given base-module automorphisms.
    pub fn torsion_orbit_count(
        &self,
        symmetries: &[IntMatrix],
    ) -> Result<PolarizationOrbitReport, GammaError> {
        let rel = self.relation_matrix();
        let snf = smith_normal_form(&rel);
        let torsion_coords: Vec<(usize, BigInt)> = diagonal_entries(&snf)
            .into_iter()
            .enumerate()
            .filter(|(_, d)| !d.is_zero() && !d.is_one())
            .collect();
        let torsion = AbelianInvariants {
            free_rank: 0,
            torsion: torsion_coords.iter().map(|(_, d)| d.clone()).collect(),
        };

        let u_inv = inverse_unimodular(&snf.u).expect("snf transform unimodular");
        let mut induced_maps = Vec::new();
        for s in symmetries {
            let s_inv = inverse_unimodular(s).ok_or(GammaError::SymmetryNotInvertible)?;
            for m in [s, &s_inv] {
                let gs = induced_on_gamma(m);
                if !normalizes(&snf, &rel, &gs) {
                    return Err(GammaError::SymmetryNotInduced);
                }
            }
            // Action on quotient coordinates y = U x.
            induced_maps.push(snf.u.mul(&induced_on_gamma(s)).mul(&u_inv));
        }

        let (orbit_count, representatives) =
            count_orbits(&torsion_coords, &induced_maps, &snf, &u_inv, &self.labels)?;
        Ok(PolarizationOrbitReport {
            torsion,
            symmetry_count: symmetries.len(),
            orbit_count,
            orbit_representatives: representatives,
        })
    }
}

/// Diagonal of the SNF, padded over the smaller dimension.
fn diagonal_entries(snf: &SnfResult) -> Vec<BigInt> {
    let rows = snf.d.rows();
    let cols = snf.d.cols();
    (0..rows)
        .map(|i| {
            if i < cols {
                snf.d[(i, i)].clone()
            } else {
                BigInt::zero()
            }
        })
        .collect()
}

/// Is `g · (column space of rel)` inside the column space again?
fn normalizes(snf: &SnfResult, rel: &IntMatrix, g: &IntMatrix) -> bool {
    let mapped = g.mul(rel);
    for j in 0..mapped.cols() {
        let v = snf.u.apply(&mapped.column(j));
        if !in_diagonal_image(snf, &v) {
            return false;
        }
    }
    true
}

/// Solvability of `D z = v` over ℤ for the SNF diagonal D.
fn in_diagonal_image(snf: &SnfResult, v: &[BigInt]) -> bool {
    let cols = snf.d.cols();
    for (i, entry) in v.iter().enumerate() {
        let d = if i < cols {
            snf.d[(i, i)].clone()
        } else {
            BigInt::zero()
        };
        if d.is_zero() {
            if !entry.is_zero() {
                return false;
            }
        } else if !(entry % &d).is_zero() {
            return false;
        }
    }
    true
}

type Torsion = Vec<(usize, BigInt)>;

/// BFS orbit count over the (small) torsion subgroup.
fn count_orbits(
    torsion_coords: &Torsion,
    induced_maps: &[IntMatrix],
    snf: &SnfResult,
    u_inv: &IntMatrix,
    labels: &[String],
) -> Result<(usize, Vec<String>), GammaError> {
    let dim = snf.d.rows();
    let sizes: Vec<u64> = torsion_coords
        .iter()
        .map(|(_, d)| u64::try_from(d).expect("torsion fits in u64"))
        .collect();
    let total: u64 = sizes.iter().product();

    // Enumerate torsion elements as coordinate tuples in the y-basis.
    let element = |tuple_index: u64| -> Vec<BigInt> {
        let mut y = vec![BigInt::zero(); dim];
        let mut rest = tuple_index;
        for ((coord, _), &size) in torsion_coords.iter().zip(&sizes) {
            y[*coord] = BigInt::from(rest % size);
            rest /= size;
        }
        y
    };
    let index_of = |y: &[BigInt]| -> Result<u64, GammaError> {
        let mut idx = 0u64;
        let mut stride = 1u64;
        for ((coord, d), &size) in torsion_coords.iter().zip(&sizes) {
            let c = ((&y[*coord] % d) + d) % d;
            idx += u64::try_from(&c).unwrap() * stride;
            stride *= size;
        }
        // A torsion element must map to a torsion element: every
        // coordinate outside the torsion block reduces to zero.
        for (i, entry) in y.iter().enumerate() {
            if torsion_coords.iter().any(|(c, _)| c == &i) {
                continue;
            }
            let di = if i < snf.d.cols() {
                snf.d[(i, i)].clone()
            } else {
                BigInt::zero()
            };
            let reduced_nonzero = if di.is_zero() {
                !entry.is_zero()
            } else if di.is_one() {
                false
            } else {
                !(entry % &di).is_zero()
            };
            if reduced_nonzero {
                return Err(GammaError::SymmetryNotInduced);
            }
        }
        Ok(idx)
    };

    let mut seen = vec![false; total as usize];
    let mut orbit_count = 0usize;
    let mut representatives = Vec::new();
    for start in 0..total {
        if seen[start as usize] {
            continue;
        }
        orbit_count += 1;
        let two_torsion = torsion_coords.iter().all(|(_, d)| *d == BigInt::from(2));
        representatives.push(render_element(&element(start), u_inv, labels, two_torsion));
        let mut stack = vec![start];
        seen[start as usize] = true;
        while let Some(cur) = stack.pop() {
            let y = element(cur);
            for map in induced_maps {
                let next = index_of(&map.apply(&y))?;
                if !seen[next as usize] {
                    seen[next as usize] = true;
                    stack.push(next);
                }
            }
        }
    }
    Ok((orbit_count, representatives))
}

/// Renders a torsion element as a combination of the Γ-basis labels, by
/// pulling the quotient coordinates back through U⁻¹.
fn render_element(y: &[BigInt], u_inv: &IntMatrix, labels: &[String], two_torsion: bool) -> String {
    if y.iter().all(Zero::is_zero) {
        return "0".to_string();
    }
    let mut x = u_inv.apply(y);
    // For a 2-torsion class the inverse is the class itself, so the lift's
    // overall sign is display noise.
    if two_torsion {
        if let Some(first) = x.iter().find(|c| !c.is_zero()) {
            if first < &BigInt::zero() {
                for c in &mut x {
                    *c = -&*c;
                }
            }
        }
    }
    let mut parts = Vec::new();
    for (i, c) in x.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if c.is_one() {
            parts.push(labels[i].clone());
        } else if (-c).is_one() {
            parts.push(format!("-{}", labels[i]));
        } else {
            parts.push(format!("{c}*{}", labels[i]));
        }
    }
    if parts.is_empty() {
        // The pullback landed in the relation lattice componentwise; fall
        // back to raw coordinates.
        format!("y={y:?}")
    } else {
        parts.join(" + ")
    }
}

/// Summary of a polarisation-orbit computation.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PolarizationOrbitReport {
    pub torsion: AbelianInvariants,
    pub symmetry_count: usize,
    pub orbit_count: usize,
    pub orbit_representatives: Vec<String>,
}

// ---- module catalogue with orientation characters ----

/// π₂ of the product of projective planes, weighted by its orientation
/// character (both generators reverse orientation).
pub fn oriented_pi2_projective_product(group: &FiniteAbelianGroup) -> GroupModule {
    GroupModule::pi2_of_projective_product(group).with_weight(vec![-1, -1])
}

/// π₂ of S² × (S²/±) with the orientation character of the quotient.
pub fn oriented_pi2_s2_by_projective(group: &FiniteAbelianGroup) -> GroupModule {
    GroupModule::pi2_of_s2_by_projective(group).with_weight(vec![-1])
}

/// π₂ of the ℤ/4 quotient with its orientation character.
pub fn oriented_pi2_z4(group: &FiniteAbelianGroup) -> GroupModule {
    GroupModule::pi2_of_z4_quotient(group).with_weight(vec![-1])
}

/// The factor-interchange symmetry of a rank-2 module.
pub fn swap_symmetry() -> IntMatrix {
    IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]])
}
