//! Group (co)homology of finite abelian groups with finitely generated
//! coefficient modules, computed from explicit free resolutions.
//!
//! Group-ring elements are represented through the regular representation,
//! so every (co)homology group reduces to exact integer linear algebra.
//! For a cyclic group the standard period-2 resolution is used
//! (multiplication by `g - 1` alternating with the norm element); products
//! of cyclic groups get the tensor-product resolution with Koszul signs.

mod compute;
mod group;
mod modules;
mod resolution;
mod ring;

pub use compute::{f2_cohomology_dim, f2_homology_dim, group_cohomology, group_homology};
pub use group::FiniteAbelianGroup;
pub use modules::{GroupModule, ModuleError};
pub use resolution::{resolution, ResolutionSegment};
pub use ring::{GroupRingElem, LambdaMatrix};
