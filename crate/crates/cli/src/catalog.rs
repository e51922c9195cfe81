//! Named groups, coefficient modules and rings accepted on the command
//! line.

use s2s2_core::f2ring::{catalog as rings, parse_presentation, GradedF2Algebra};
use s2s2_core::gamma;
use s2s2_core::homalg::{FiniteAbelianGroup, GroupModule};

pub fn group_by_name(name: &str) -> Option<FiniteAbelianGroup> {
    match name {
        "z4" | "Z4" => Some(FiniteAbelianGroup::z4()),
        "z2xz2" | "Z2xZ2" | "klein" => Some(FiniteAbelianGroup::klein()),
        "z2" | "Z2" => Some(FiniteAbelianGroup::z2()),
        "trivial" | "1" => Some(FiniteAbelianGroup::trivial()),
        _ => None,
    }
}

/// Coefficient modules by name, per group.
pub fn module_by_name(group: &FiniteAbelianGroup, name: &str) -> Option<GroupModule> {
    let gens = group.num_generators();
    match (group.cyclic_orders(), name) {
        (_, "z") => Some(GroupModule::trivial_z(group)),
        (_, "zw") if gens > 0 => Some(GroupModule::twisted_z(group, vec![-1; gens])),
        ([4], "pi2") => Some(GroupModule::pi2_of_z4_quotient(group)),
        ([4], "pi3") => Some(GroupModule::pi3_of_z4_quotient(group)),
        ([2, 2], "pi2") => Some(GroupModule::pi2_of_projective_product(group)),
        ([2], "pi2") => Some(GroupModule::pi2_of_s2_by_projective(group)),
        _ => None,
    }
}

/// The quadratic-functor cases: a module with its orientation character
/// and the geometrically justified symmetry list.
pub fn gamma_case(name: &str) -> Option<(FiniteAbelianGroup, GroupModule, Vec<&'static str>)> {
    match name {
        "rp2xrp2" => {
            let g = FiniteAbelianGroup::klein();
            let m = gamma::oriented_pi2_projective_product(&g);
            Some((g, m, vec!["swap"]))
        }
        "rp2xtrp2" => {
            let g = FiniteAbelianGroup::klein();
            let m = gamma::oriented_pi2_projective_product(&g);
            // The twisted bundle has the same coinvariants but no
            // factor-interchange symmetry.
            Some((g, m, vec![]))
        }
        "s2xrp2" => {
            let g = FiniteAbelianGroup::z2();
            let m = gamma::oriented_pi2_s2_by_projective(&g);
            Some((g, m, vec![]))
        }
        "z4" => {
            let g = FiniteAbelianGroup::z4();
            let m = gamma::oriented_pi2_z4(&g);
            Some((g, m, vec![]))
        }
        _ => None,
    }
}

/// Rings by catalogue name or presentation file path.
pub fn ring_by_name_or_path(spec: &str) -> Result<GradedF2Algebra, String> {
    let by_name = match spec {
        "rp2xrp2" => Some(rings::projective_product_ring()),
        "rp2xtrp2" => Some(rings::twisted_projective_ring()),
        "z4group" => Some(rings::cyclic4_group_ring()),
        "s2xrp2" => Some(rings::product_with_sphere_ring()),
        "s4" => Some(rings::four_sphere_ring()),
        _ => None,
    };
    if let Some(ring) = by_name {
        return Ok(ring);
    }
    let text = std::fs::read_to_string(spec)
        .map_err(|e| format!("cannot read ring file '{spec}': {e}"))?;
    let presentation = parse_presentation(&text).map_err(|e| e.to_string())?;
    GradedF2Algebra::build(presentation).map_err(|e| e.to_string())
}
