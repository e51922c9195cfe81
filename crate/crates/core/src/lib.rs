//! Exact computational topology for free quotients of S²×S².
//!
//! The crate is organised around a small exact-linear-algebra kernel and a
//! set of modules that reduce (co)homological questions about the quotient
//! manifolds to that kernel:
//!
//! * [`exact`] — integer matrices, Smith normal form, abelian-group
//!   invariants, and Gaussian elimination over 𝔽₂.
//! * [`homalg`] — group (co)homology of finite abelian groups with
//!   finitely generated coefficient modules, via explicit free resolutions.
//! * [`f2ring`] — finite-dimensional graded-commutative 𝔽₂ algebras from
//!   presentations, with cup products, Steenrod squares and Wu classes.
//! * [`gamma`] — the Whitehead quadratic functor, twisted coinvariants and
//!   orbit counting for polarisation classes.
//! * [`ahss`] — the Atiyah–Hirzebruch spectral sequence for the dimension-4
//!   bordism group of the normal 1-type with fundamental group ℤ/4.
//! * [`quat`] — numerical quaternionic geometry: the explicit free actions
//!   on S²×S², the gluing involution, and the covering of the bidegree
//!   (1,1) hypersurface by the unit quaternions.
//! * [`kkr`] — the ℤ/4-valued quadratic function on π₂ ⊗ ℤ/2 computed from
//!   normal Euler numbers and numerically certified double-point counts.

pub mod ahss;
pub mod exact;
pub mod f2ring;
pub mod gamma;
pub mod homalg;
pub mod kkr;
pub mod quat;
pub mod tol;
