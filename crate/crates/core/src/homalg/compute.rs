//! (Co)homology of a group with coefficients in a module, assembled from a
//! resolution segment.

use super::group::FiniteAbelianGroup;
use super::modules::GroupModule;
use super::resolution::{resolution, ResolutionSegment};
use crate::exact::{subquotient_invariants, AbelianInvariants, F2Matrix, IntMatrix};
use num_traits::Zero;

/// Block matrix of the Hom-complex differential
/// `δ^k : M^{r_k} → M^{r_{k+1}}`, `(δf)(e_b) = Σ_a λ_{ab}·f(e_a)`.
fn cochain_differential(
    group: &FiniteAbelianGroup,
    res: &ResolutionSegment,
    module: &GroupModule,
    k: usize,
) -> IntMatrix {
    let d = module.rank();
    let boundary = res.boundary(k + 1);
    let (r_src, r_dst) = (boundary.rows(), boundary.cols());
    let mut out = IntMatrix::zeros(r_dst * d, r_src * d);
    for a in 0..r_src {
        for b in 0..r_dst {
            let block = module.act_ring(group, boundary.get(a, b));
            for i in 0..d {
                for j in 0..d {
                    out[(b * d + i, a * d + j)] = block[(i, j)].clone();
                }
            }
        }
    }
    out
}

/// Block matrix of the tensor-complex differential
/// `D_k : M^{r_k} → M^{r_{k-1}}`.
fn chain_differential(
    group: &FiniteAbelianGroup,
    res: &ResolutionSegment,
    module: &GroupModule,
    k: usize,
) -> IntMatrix {
    let d = module.rank();
    let boundary = res.boundary(k);
    let (r_dst, r_src) = (boundary.rows(), boundary.cols());
    let mut out = IntMatrix::zeros(r_dst * d, r_src * d);
    for a in 0..r_dst {
        for b in 0..r_src {
            let block = module.act_ring(group, boundary.get(a, b));
            for i in 0..d {
                for j in 0..d {
                    out[(a * d + i, b * d + j)] = block[(i, j)].clone();
                }
            }
        }
    }
    out
}

/// `H^n(π; M ⊗ Z^w)` — the orientation character stored on the module is
/// folded into the action.
pub fn group_cohomology(
    group: &FiniteAbelianGroup,
    module: &GroupModule,
    n: usize,
) -> AbelianInvariants {
    let res = resolution(group, n + 1);
    let d = module.rank();
    let incoming = if n == 0 {
        IntMatrix::zeros(res.ranks()[0] * d, 0)
    } else {
        cochain_differential(group, &res, module, n - 1)
    };
    let outgoing = cochain_differential(group, &res, module, n);
    subquotient_invariants(&incoming, &outgoing).expect("δ∘δ = 0 by ∂∘∂ = 0")
}

/// `H_n(π; M ⊗ Z^w)` via the tensor complex.
pub fn group_homology(
    group: &FiniteAbelianGroup,
    module: &GroupModule,
    n: usize,
) -> AbelianInvariants {
    let res = resolution(group, n + 1);
    let d = module.rank();
    let incoming = chain_differential(group, &res, module, n + 1);
    let outgoing = if n == 0 {
        IntMatrix::zeros(0, res.ranks()[0] * d)
    } else {
        chain_differential(group, &res, module, n)
    };
    subquotient_invariants(&incoming, &outgoing).expect("∂∘∂ = 0")
}

/// The tensor-complex boundary with trivial 𝔽₂ coefficients: every
/// group-ring entry collapses to its augmentation mod 2.
fn f2_boundary(res: &ResolutionSegment, k: usize) -> F2Matrix {
    let b = res.boundary(k);
    let mut m = F2Matrix::zeros(b.rows(), b.cols());
    for i in 0..b.rows() {
        for j in 0..b.cols() {
            let aug = b.get(i, j).augmentation();
            m.set(i, j, u8::from(!(&aug % 2u8).is_zero()));
        }
    }
    m
}

/// dim 𝔽₂ of `H_n(π; F₂)` with trivial coefficients. A character twist is
/// invisible mod 2.
pub fn f2_homology_dim(group: &FiniteAbelianGroup, n: usize) -> usize {
    let res = resolution(group, n + 1);
    let d_in = f2_boundary(&res, n + 1);
    if n == 0 {
        return res.ranks()[0] - d_in.rank();
    }
    let d_out = f2_boundary(&res, n);
    d_out.kernel_dim() - d_in.rank()
}

/// dim 𝔽₂ of `H^n(π; F₂)`, computed from the transposed complex.
pub fn f2_cohomology_dim(group: &FiniteAbelianGroup, n: usize) -> usize {
    let res = resolution(group, n + 1);
    let delta_out = f2_boundary(&res, n + 1).transpose();
    if n == 0 {
        return delta_out.kernel_dim();
    }
    let delta_in = f2_boundary(&res, n).transpose();
    delta_out.kernel_dim() - delta_in.rank()
}
