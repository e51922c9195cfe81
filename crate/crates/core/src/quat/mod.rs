//! Quaternionic geometry of S²×S²: the explicit free actions, the
//! hemisphere-glued involution, the 2-fold covering of the orthogonality
//! locus, and sampled verification of their defining identities.

mod maps;
mod quaternion;
mod verify;

pub use maps::{
    boundary_involution, boundary_twist, covering_lift, covering_map, double_antipode,
    glue_involution, homological_self_intersection, klein_first, klein_second, order_four_action,
    twist_factor, twist_factor_closed_form, v_map, EBoundaryPoint,
};
pub use quaternion::{
    rotate_by_conjugation, rotate_half_turn, DiscCoord, HemiPoint, Hemisphere, ProductPoint,
    QuatError, Quaternion, S2Point,
};
pub use verify::{
    boundary_commute_mismatch, covering_check, glue_seam_mismatch, random_s2_point,
    random_unit_quaternion, twist_factor_grid_deviation, verify_action, ActionKind, ActionReport,
    CoverReport,
};
