//! The Atiyah–Hirzebruch spectral sequence for the dimension-4 bordism
//! group of a normal 1-type `BTopSpin × K(π,1)`.
//!
//! The E² page is `H_p(π; Ω_q)` with the coefficient row
//! `Ω_q = Z, Z/2, Z/2, 0, Z` for `q = 0..4`, the ℤ entries twisted by the
//! orientation character w₁. The d₂ differential on the 𝔽₂ rows is dual to
//! `α ↦ Sq²α + (Sq¹α)·w₁ + α·w₂` in the group's mod-2 cohomology ring; on
//! the twisted-ℤ row it is the same dual map precomposed with reduction
//! mod 2, evaluated only where the reduction is forced (zero or onto) and
//! reported as not computed otherwise.

use crate::exact::AbelianInvariants;
use crate::f2ring::{catalog, F2Class, GradedF2Algebra, RingError};
use crate::homalg::{f2_homology_dim, group_homology, FiniteAbelianGroup, GroupModule};
use serde::{Deserialize, Serialize};

/// Coefficient group of one row of the spectral sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Coefficient {
    /// ℤ twisted by the orientation character w₁.
    ZTwisted,
    /// ℤ/2 with the (invisible mod 2) twist.
    F2,
    Zero,
}

/// Input data for the bordism computation: the group, its mod-2 cohomology
/// ring, the normal characteristic classes w₁ and w₂ inside it, and the
/// coefficient row `Ω_0..Ω_4`.
pub struct BordismInput {
    pub group: FiniteAbelianGroup,
    pub ring: GradedF2Algebra,
    pub w1: F2Class,
    pub w2: F2Class,
    /// The character on the group generators that w₁ classifies; this is
    /// what twists the ℤ rows.
    pub w1_signs: Vec<i8>,
    pub coefficient_row: [Coefficient; 5],
}

impl BordismInput {
    /// The fundamental-group ℤ/4 case: ring `P(u) ⊗ E(x)` with w₁ = x and
    /// w₂ = u.
    pub fn cyclic4() -> Self {
        let ring = catalog::cyclic4_group_ring();
        let w1 = ring.class("x").expect("x in catalog ring");
        let w2 = ring.class("u").expect("u in catalog ring");
        Self {
            group: FiniteAbelianGroup::z4(),
            ring,
            w1,
            w2,
            w1_signs: vec![-1],
            coefficient_row: [
                Coefficient::ZTwisted,
                Coefficient::F2,
                Coefficient::F2,
                Coefficient::Zero,
                Coefficient::ZTwisted,
            ],
        }
    }

    /// Trivial fundamental group; every twist is trivial.
    pub fn trivial() -> Self {
        let ring = GradedF2Algebra::build(crate::f2ring::RingPresentation {
            generators: vec![],
            relations: vec![],
            top: 6,
            sq1: vec![],
            fundamental: None,
        })
        .expect("empty presentation is consistent");
        let w1 = ring.zero_class(1);
        let w2 = ring.zero_class(2);
        Self {
            group: FiniteAbelianGroup::trivial(),
            ring,
            w1,
            w2,
            w1_signs: vec![],
            coefficient_row: [
                Coefficient::ZTwisted,
                Coefficient::F2,
                Coefficient::F2,
                Coefficient::Zero,
                Coefficient::ZTwisted,
            ],
        }
    }

    pub fn with_coefficient_row(mut self, row: [Coefficient; 5]) -> Self {
        self.coefficient_row = row;
        self
    }

    fn twisted_z_module(&self) -> GroupModule {
        GroupModule::twisted_z(&self.group, self.w1_signs.clone())
    }

    fn coefficient(&self, q: usize) -> Coefficient {
        if q < 5 {
            self.coefficient_row[q]
        } else {
            Coefficient::Zero
        }
    }
}

/// Value of one `(p, q)` slot.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value")]
pub enum EntryValue {
    /// Abelian invariants (used on the twisted-ℤ rows).
    Invariants(AbelianInvariants),
    /// 𝔽₂ dimension (used on the ℤ/2 rows).
    Dim(usize),
    /// The reduction step of the twisted-row differential was not forced,
    /// so the entry is reported rather than guessed.
    NotComputed,
}

impl EntryValue {
    pub fn is_zero(&self) -> bool {
        match self {
            EntryValue::Invariants(inv) => inv.is_trivial(),
            EntryValue::Dim(d) => *d == 0,
            EntryValue::NotComputed => false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PageEntry {
    pub p: usize,
    pub q: usize,
    pub value: EntryValue,
    pub basis: Vec<String>,
    #[serde(rename = "assumption_flags")]
    pub flags: Vec<String>,
}

/// A `(p, q)`-indexed table of entries for one page.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SpectralPage {
    pub page: u32,
    pub entries: Vec<PageEntry>,
}

impl SpectralPage {
    pub fn entry(&self, p: usize, q: usize) -> Option<&PageEntry> {
        self.entries.iter().find(|e| e.p == p && e.q == q)
    }
}

/// The E² page up to the requested total degree.
pub fn e2_page(input: &BordismInput, max_total_degree: usize) -> SpectralPage {
    assert!(
        max_total_degree <= 6,
        "coefficient data stops at total degree 6"
    );
    let mut entries = Vec::new();
    for total in 0..=max_total_degree {
        for q in 0..=total.min(4) {
            let p = total - q;
            entries.push(e2_entry(input, p, q));
        }
    }
    SpectralPage { page: 2, entries }
}

fn e2_entry(input: &BordismInput, p: usize, q: usize) -> PageEntry {
    match input.coefficient(q) {
        Coefficient::Zero => PageEntry {
            p,
            q,
            value: EntryValue::Dim(0),
            basis: vec![],
            flags: vec![],
        },
        Coefficient::F2 => {
            let dim = f2_homology_dim(&input.group, p);
            let basis = if dim == input.ring.dim(p) {
                input
                    .ring
                    .basis_names(p)
                    .iter()
                    .map(|m| format!("{m}*"))
                    .collect()
            } else {
                vec![]
            };
            PageEntry {
                p,
                q,
                value: EntryValue::Dim(dim),
                basis,
                flags: vec![],
            }
        }
        Coefficient::ZTwisted => {
            let inv = group_homology(&input.group, &input.twisted_z_module(), p);
            PageEntry {
                p,
                q,
                value: EntryValue::Invariants(inv),
                basis: vec![],
                flags: vec!["twisted-by-w1".to_string()],
            }
        }
    }
}

/// The map dual to the d₂ differential:
/// `α ↦ Sq²α + (Sq¹α)·w₁ + α·w₂`.
pub fn d2_dual(input: &BordismInput, alpha: &F2Class) -> Result<F2Class, RingError> {
    let ring = &input.ring;
    let target = alpha.degree + 2;
    if target > ring.top_degree() {
        return Err(RingError::DegreeOverflow {
            degree: target,
            top: ring.top_degree(),
        });
    }
    let sq2 = ring.sq(2, alpha);
    let sq1w1 = ring.cup(&ring.sq(1, alpha), &input.w1)?;
    let aw2 = ring.cup(alpha, &input.w2)?;
    Ok(ring.add(&ring.add(&sq2, &sq1w1), &aw2))
}

/// Matrix of the dual differential `H^p → H^{p+2}` over the ring bases.
fn dhat_matrix(input: &BordismInput, p: usize) -> crate::exact::F2Matrix {
    let cols: Vec<Vec<u8>> = input
        .ring
        .basis(p)
        .iter()
        .map(|m| {
            d2_dual(input, &input.ring.monomial_class(m))
                .expect("degree p+2 within the ring truncation")
                .coords
        })
        .collect();
    crate::exact::F2Matrix::from_columns(&cols, input.ring.dim(p + 2))
}

/// Knowledge about the mod-2 reduction `H_p(Z^w) → H_p(F2)`: it is
/// injective after tensoring with 𝔽₂, so its image is forced when that
/// dimension is zero or full.
enum ReductionImage {
    Zero,
    Onto,
    Indeterminate,
}

fn reduction_image(input: &BordismInput, p: usize) -> ReductionImage {
    let inv = group_homology(&input.group, &input.twisted_z_module(), p);
    let mod2_dim = inv.free_rank
        + inv
            .torsion
            .iter()
            .filter(|d| ((*d) % 2u8) == num_bigint::BigInt::from(0))
            .count();
    if mod2_dim == 0 {
        ReductionImage::Zero
    } else if mod2_dim == f2_homology_dim(&input.group, p) {
        ReductionImage::Onto
    } else {
        ReductionImage::Indeterminate
    }
}

/// Rank of the d₂ map `E²_{p,q} → E²_{p-2,q+1}`, if determined. Returns
/// `None` when the twisted-row reduction is not forced.
fn d2_rank(input: &BordismInput, p: usize, q: usize) -> Option<usize> {
    if p < 2 {
        return Some(0);
    }
    let (src, dst) = (input.coefficient(q), input.coefficient(q + 1));
    if src == Coefficient::Zero || dst == Coefficient::Zero || q + 1 == 5 {
        return Some(0);
    }
    match (src, dst) {
        (Coefficient::F2, Coefficient::F2) => Some(dhat_matrix(input, p - 2).rank()),
        (Coefficient::ZTwisted, Coefficient::F2) => match reduction_image(input, p) {
            ReductionImage::Zero => Some(0),
            ReductionImage::Onto => Some(dhat_matrix(input, p - 2).rank()),
            ReductionImage::Indeterminate => None,
        },
        // A differential into the twisted-ℤ row out of an 𝔽₂ row is zero
        // for coefficient reasons only when the target vanishes; the paper
        // never needs one, and no case below total degree 6 produces one
        // with the rows used here.
        (Coefficient::F2, Coefficient::ZTwisted) => {
            let target = group_homology(&input.group, &input.twisted_z_module(), p - 2);
            if target.is_trivial() {
                Some(0)
            } else {
                None
            }
        }
        _ => None,
    }
}

/// One E³ entry: kernel of the outgoing d₂ modulo image of the incoming
/// one.
fn e3_entry(input: &BordismInput, p: usize, q: usize) -> PageEntry {
    let mut flags = Vec::new();
    match input.coefficient(q) {
        Coefficient::Zero => PageEntry {
            p,
            q,
            value: EntryValue::Dim(0),
            basis: vec![],
            flags,
        },
        Coefficient::F2 => {
            let e2_dim = f2_homology_dim(&input.group, p);
            let out_rank = d2_rank(input, p, q);
            let in_rank = if p + 2 <= 6 && q >= 1 {
                d2_rank(input, p + 2, q - 1)
            } else {
                Some(0)
            };
            match (out_rank, in_rank) {
                (Some(o), Some(i)) => {
                    let dim = e2_dim - o - i;
                    PageEntry {
                        p,
                        q,
                        value: EntryValue::Dim(dim),
                        basis: vec![],
                        flags,
                    }
                }
                _ => {
                    flags.push("reduction-indeterminate".to_string());
                    PageEntry {
                        p,
                        q,
                        value: EntryValue::NotComputed,
                        basis: vec![],
                        flags,
                    }
                }
            }
        }
        Coefficient::ZTwisted => {
            let e2 = group_homology(&input.group, &input.twisted_z_module(), p);
            flags.push("twisted-by-w1".to_string());
            // Incoming differentials from q-1 = -1 do not exist; outgoing
            // go to the row above.
            match d2_rank(input, p, q) {
                Some(0) => PageEntry {
                    p,
                    q,
                    value: EntryValue::Invariants(e2),
                    basis: vec![],
                    flags,
                },
                Some(_) => {
                    // A nonzero map out of a Z/2 entry kills it; the only
                    // twisted entries in range are 0 or Z/2.
                    if e2 != AbelianInvariants::cyclic(2) && !e2.is_trivial() {
                        flags.push("reduction-indeterminate".to_string());
                        return PageEntry {
                            p,
                            q,
                            value: EntryValue::NotComputed,
                            basis: vec![],
                            flags,
                        };
                    }
                    PageEntry {
                        p,
                        q,
                        value: EntryValue::Invariants(AbelianInvariants::trivial()),
                        basis: vec![],
                        flags,
                    }
                }
                None => {
                    flags.push("reduction-indeterminate".to_string());
                    PageEntry {
                        p,
                        q,
                        value: EntryValue::NotComputed,
                        basis: vec![],
                        flags,
                    }
                }
            }
        }
    }
}

/// The E³ page on total degrees 4 and 5.
pub fn e3_page(input: &BordismInput) -> SpectralPage {
    let mut entries = Vec::new();
    for total in [4usize, 5] {
        for q in 0..=total.min(4) {
            let p = total - q;
            entries.push(e3_entry(input, p, q));
        }
    }
    SpectralPage { page: 3, entries }
}

/// One contribution to the assembled bordism group.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Summand {
    pub p: usize,
    pub q: usize,
    pub invariants: AbelianInvariants,
    /// Set when the summand's survival to E^∞ rests on the documented
    /// external assumption rather than on a computed differential.
    pub assumption: Option<String>,
}

/// Source and target of the one higher differential that could interact
/// with total degree 4, recorded so the survival claim is auditable.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct D3Audit {
    pub source: (usize, usize),
    pub source_dim: usize,
    pub target: (usize, usize),
    pub target_dim: usize,
    pub resolved_by_assumption: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BordismAnswer {
    pub total: AbelianInvariants,
    pub summands: Vec<Summand>,
    pub d3_audit: D3Audit,
    pub e8_survival_assumed: bool,
}

const E8_ASSUMPTION: &str =
    "survives to E-infinity: the generator maps to a nonzero class under the Spin^c factorization";

/// Assembles the degree-4 bordism answer from the E³ page, under the
/// documented survival assumption for the `(4,0)` term (enabled by
/// default).
pub fn bordism_answer(input: &BordismInput, e8_survival: bool) -> BordismAnswer {
    let page = e3_page(input);
    let mut summands = Vec::new();
    let mut total = AbelianInvariants::trivial();
    for p in 0..=4usize {
        let q = 4 - p;
        let Some(entry) = page.entry(p, q) else {
            continue;
        };
        let invariants = match &entry.value {
            EntryValue::Invariants(inv) => inv.clone(),
            EntryValue::Dim(d) => AbelianInvariants::from_parts(0, &vec![2; *d]),
            EntryValue::NotComputed => continue,
        };
        if invariants.is_trivial() {
            continue;
        }
        let assumption = if (p, q) == (4, 0) {
            Some(E8_ASSUMPTION.to_string())
        } else {
            None
        };
        if (p, q) != (4, 0) || e8_survival {
            total = total.direct_sum(&invariants);
            summands.push(Summand {
                p,
                q,
                invariants,
                assumption,
            });
        }
    }
    let src = page.entry(3, 2).map(|e| match &e.value {
        EntryValue::Dim(d) => *d,
        EntryValue::Invariants(inv) => usize::from(!inv.is_trivial()),
        EntryValue::NotComputed => 0,
    });
    let dst = page.entry(0, 4).map(|e| match &e.value {
        EntryValue::Dim(d) => *d,
        EntryValue::Invariants(inv) => usize::from(!inv.is_trivial()),
        EntryValue::NotComputed => 0,
    });
    BordismAnswer {
        total,
        summands,
        d3_audit: D3Audit {
            source: (3, 2),
            source_dim: src.unwrap_or(0),
            target: (0, 4),
            target_dim: dst.unwrap_or(0),
            resolved_by_assumption: e8_survival,
        },
        e8_survival_assumed: e8_survival,
    }
}
