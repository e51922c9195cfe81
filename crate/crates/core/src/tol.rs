//! Numeric tolerances used by the geometry and double-point modules.
//!
//! Exact modules (`exact`, `homalg`, `f2ring`, `gamma`, `ahss`) never touch
//! floating point; the constants here govern only the quaternionic geometry
//! and the coincidence solvers.

/// Algebraic identities of quaternion arithmetic (single products,
/// norms, conjugations). f64 gives ~16 digits; one or two operations
/// stay well below 1e-12.
pub const ALGEBRAIC_TOL: f64 = 1e-12;

/// Composite map identities (an involution applied twice, a lift identity
/// through ~10 quaternion products). Error accumulates roughly linearly
/// in the operation count.
pub const COMPOSITE_TOL: f64 = 1e-9;

/// Agreement between the quaternionic evaluation of the gluing factor and
/// its trigonometric closed form.
pub const CLOSED_FORM_TOL: f64 = 1e-10;

/// Covering identities sampled over random unit quaternions.
pub const LIFT_TOL: f64 = 1e-10;

/// Residual of the coincidence equation at a refined double-point witness.
pub const WITNESS_RESIDUAL_TOL: f64 = 1e-8;

/// Minimum pairwise separation between distinct double-point witnesses.
pub const WITNESS_SEPARATION: f64 = 1e-3;

/// Smallest singular value of the 2×2 coincidence differential below which
/// a double point is reported as non-transverse.
pub const TRANSVERSALITY_TOL: f64 = 1e-4;

/// Displacement below which a sampled point counts as a fixed point of a
/// purported free action.
pub const FIXED_POINT_TOL: f64 = 1e-6;
