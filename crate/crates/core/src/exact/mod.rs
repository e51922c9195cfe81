//! Exact linear algebra over ℤ and 𝔽₂.
//!
//! Everything here is exact: integer matrices carry arbitrary-precision
//! entries (Smith normal form pivots can blow up even on small inputs, and
//! a silent fixed-width overflow would corrupt every homology group
//! downstream), and the 𝔽₂ matrices work mod 2 throughout.

mod f2;
mod int_matrix;
mod invariants;
mod snf;

pub use f2::F2Matrix;
pub use int_matrix::IntMatrix;
pub use invariants::{
    cokernel_invariants, inverse_unimodular, subquotient_invariants, AbelianInvariants, ExactError,
};
pub use snf::{smith_normal_form, SnfResult};
