//! The ℤ/4-valued quadratic function `e(ν(S)) + 2·|double points|` on
//! π₂ ⊗ ℤ/2 of the three ℤ/2 quotients, computed from catalogued
//! representative immersions with numerically certified double-point
//! counts.
//!
//! Normal Euler numbers are geometric inputs (trivial normal bundle for
//! the fibre representatives, ±2 for diagonal representatives); each
//! report carries their provenance. Double points are found by coarse grid
//! search plus Gauss–Newton refinement on the coincidence equations, with
//! transversality certified by the rank of the coincidence differential.

mod solver;

use crate::f2ring::catalog as ring_catalog;
use crate::quat::{glue_involution, rotate_half_turn, DiscCoord, HemiPoint, Hemisphere, S2Point};
use crate::tol::{WITNESS_RESIDUAL_TOL, WITNESS_SEPARATION};
use serde::{Deserialize, Serialize};
use solver::{is_transverse, solve_on_disc, solve_on_sphere, Solution};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum KkrError {
    #[error("double point at {params:?} is not transverse (min singular value {sv:e})")]
    NonTransverseDoublePoint { params: Vec<f64>, sv: f64 },
    #[error("coincidence solver failed: {0}")]
    SolverDiverged(String),
    #[error("no catalogued representative for this quotient and class")]
    NotInCatalog,
}

/// The three ℤ/2 quotients of S²×S².
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Quotient {
    /// S² × (S²/±), the product with the projective plane.
    ProductWithProjective,
    /// The twisted sphere bundle S²×S²/(s,t)∼(-s, R_π t).
    TwistedBundle,
    /// The connected sum of two projective 4-spaces along a circle,
    /// presented by the hemisphere-glued involution.
    ConnectedSum,
}

impl Quotient {
    pub fn cli_name(self) -> &'static str {
        match self {
            Quotient::ProductWithProjective => "s2xrp2",
            Quotient::TwistedBundle => "s2xtrp2",
            Quotient::ConnectedSum => "rp4srp4",
        }
    }

    pub fn from_cli_name(name: &str) -> Option<Self> {
        match name {
            "s2xrp2" => Some(Quotient::ProductWithProjective),
            "s2xtrp2" => Some(Quotient::TwistedBundle),
            "rp4srp4" | "rp4#rp4" => Some(Quotient::ConnectedSum),
            _ => None,
        }
    }
}

/// Classes of π₂ ⊗ ℤ/2: the two factor classes and their sum.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum PiClass {
    Zero,
    X,
    Y,
    XY,
}

impl PiClass {
    pub fn cli_name(self) -> &'static str {
        match self {
            PiClass::Zero => "0",
            PiClass::X => "x",
            PiClass::Y => "y",
            PiClass::XY => "x+y",
        }
    }

    pub fn from_cli_name(name: &str) -> Option<Self> {
        match name {
            "0" | "zero" => Some(PiClass::Zero),
            "x" => Some(PiClass::X),
            "y" => Some(PiClass::Y),
            "x+y" | "xy" => Some(PiClass::XY),
            _ => None,
        }
    }
}

/// The catalogued parametrisations.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub enum Parametrization {
    /// A general fibre S²×{d₀} of the (orbifold) bundle projection.
    FiberSphere,
    /// The second-factor sphere {j}×S² in the connected sum.
    SecondFactorSphere,
    /// The sphere {(fold(s), s)} with the fold of one hemisphere onto the
    /// other.
    FoldedSphere,
    /// The graph of the 2-fold covering S² → S²/±.
    CoveringGraph,
    /// The diagonal pushed off itself by `u ↦ (u + ε·i)/|u + ε·i|`.
    IsotopedDiagonal { eps: f64 },
}

impl Parametrization {
    fn name(self) -> String {
        match self {
            Parametrization::FiberSphere => "fiber-sphere".to_string(),
            Parametrization::SecondFactorSphere => "second-factor-sphere".to_string(),
            Parametrization::FoldedSphere => "folded-sphere".to_string(),
            Parametrization::CoveringGraph => "covering-graph".to_string(),
            Parametrization::IsotopedDiagonal { eps } => format!("isotoped-diagonal(eps={eps})"),
        }
    }
}

/// A representative immersed sphere with its (input) normal Euler number.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ImmersedSphere {
    pub quotient: Quotient,
    pub class: PiClass,
    pub parametrization: Parametrization,
    pub euler_number: i64,
    /// Where the Euler number comes from; it is a geometric input, not a
    /// computed quantity.
    pub euler_provenance: &'static str,
}

/// Default push-off parameter for the isotoped diagonal.
pub const DEFAULT_ISOTOPY_EPS: f64 = 0.1;

impl ImmersedSphere {
    /// The representative catalogue. Returns `None` for combinations the
    /// table does not cover (only x+y in the connected sum).
    pub fn catalog(quotient: Quotient, class: PiClass, eps: f64) -> Option<Self> {
        use Parametrization::*;
        use PiClass::*;
        use Quotient::*;
        let (parametrization, euler_number, euler_provenance) = match (quotient, class) {
            (_, Zero) => (FiberSphere, 0, "zero class, by convention"),
            (_, X) => (
                FiberSphere,
                0,
                "general fibre is embedded with trivial normal bundle",
            ),
            (ProductWithProjective, Y) => (
                FoldedSphere,
                0,
                "the fold is null homotopic, so the normal bundle is trivial",
            ),
            (ProductWithProjective, XY) => (
                CoveringGraph,
                2,
                "lifts to the diagonal, whose normal Euler number is 2",
            ),
            (TwistedBundle, Y) => (
                SecondFactorSphere,
                0,
                "fibre of the projection to the projective plane, embedded and trivial",
            ),
            (TwistedBundle, XY) => (
                IsotopedDiagonal { eps },
                2,
                "isotopic to the diagonal, whose normal Euler number is 2",
            ),
            (ConnectedSum, Y) => (
                SecondFactorSphere,
                0,
                "the second-factor sphere has trivial normal bundle upstairs",
            ),
            (ConnectedSum, XY) => return None,
        };
        assert!(
            euler_number % 2 == 0,
            "classes lift, so the Euler number is even"
        );
        Some(Self {
            quotient,
            class,
            parametrization,
            euler_number,
            euler_provenance,
        })
    }
}

/// One certified double point: the two preimage parameters, the residual
/// of the coincidence equation, and the transversality margin.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Witness {
    pub params: Vec<f64>,
    pub partner_params: Vec<f64>,
    pub residual: f64,
    pub jacobian_min_sv: f64,
    pub transverse: bool,
    /// Set when analytic conditions pin the witness (the connected-sum
    /// case: cos(πr) = cos(2πt) = 0).
    pub analytic_defect: Option<f64>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DoublePointReport {
    pub quotient: Quotient,
    pub class: PiClass,
    pub parametrization: String,
    pub count: usize,
    pub witnesses: Vec<Witness>,
    /// For embedded representatives: the grid floor of the coincidence
    /// residual, certifying the absence of double points.
    pub residual_floor: Option<f64>,
    pub grid: usize,
}

/// Pairs up deck-related solutions and certifies transversality. `partner`
/// maps a solution's parameters to its deck partner's.
fn pair_solutions(
    solutions: Vec<Solution>,
    partner: impl Fn(&[f64]) -> Vec<f64>,
    param_dist: impl Fn(&[f64], &[f64]) -> f64,
    analytic_defect: impl Fn(&[f64]) -> Option<f64>,
) -> Result<Vec<Witness>, KkrError> {
    for sol in &solutions {
        if !is_transverse(sol) {
            return Err(KkrError::NonTransverseDoublePoint {
                params: sol.params.clone(),
                sv: sol.jacobian_min_sv,
            });
        }
        if sol.residual > WITNESS_RESIDUAL_TOL {
            return Err(KkrError::SolverDiverged(format!(
                "residual {:e} above tolerance",
                sol.residual
            )));
        }
    }
    let mut used = vec![false; solutions.len()];
    let mut witnesses = Vec::new();
    for i in 0..solutions.len() {
        if used[i] {
            continue;
        }
        let expected = partner(&solutions[i].params);
        let j = (0..solutions.len())
            .filter(|&j| j != i && !used[j])
            .min_by(|&a, &b| {
                param_dist(&solutions[a].params, &expected)
                    .total_cmp(&param_dist(&solutions[b].params, &expected))
            });
        let Some(j) = j else {
            return Err(KkrError::SolverDiverged(
                "unpaired coincidence solution".to_string(),
            ));
        };
        if param_dist(&solutions[j].params, &expected) > WITNESS_SEPARATION {
            return Err(KkrError::SolverDiverged(
                "deck partner of a solution was not found".to_string(),
            ));
        }
        used[i] = true;
        used[j] = true;
        witnesses.push(Witness {
            params: solutions[i].params.clone(),
            partner_params: solutions[j].params.clone(),
            residual: solutions[i].residual.max(solutions[j].residual),
            jacobian_min_sv: solutions[i]
                .jacobian_min_sv
                .min(solutions[j].jacobian_min_sv),
            transverse: true,
            analytic_defect: analytic_defect(&solutions[i].params),
        });
    }
    Ok(witnesses)
}

fn disc_dist(a: &[f64], b: &[f64]) -> f64 {
    let dr = a[0] - b[0];
    let dt = (a[1] - b[1])
        .rem_euclid(1.0)
        .min((b[1] - a[1]).rem_euclid(1.0));
    (dr * dr + dt * dt).sqrt()
}

fn sphere_dist(a: &[f64], b: &[f64]) -> f64 {
    let dx = a[0] - b[0];
    let dy = a[1] - b[1];
    let dz = a[2] - b[2];
    (dx * dx + dy * dy + dz * dz).sqrt()
}

/// Solves the coincidence equations for a catalogued immersion.
pub fn double_points(sphere: &ImmersedSphere, grid: usize) -> Result<DoublePointReport, KkrError> {
    let (count, witnesses, floor) = match sphere.parametrization {
        Parametrization::FiberSphere => fiber_sphere_case(sphere.quotient),
        Parametrization::SecondFactorSphere => match sphere.quotient {
            Quotient::ConnectedSum => connected_sum_case(grid)?,
            Quotient::TwistedBundle => twisted_fiber_case(),
            Quotient::ProductWithProjective => {
                return Err(KkrError::NotInCatalog);
            }
        },
        Parametrization::FoldedSphere => folded_sphere_case(grid)?,
        Parametrization::CoveringGraph => covering_graph_case(grid),
        Parametrization::IsotopedDiagonal { eps } => isotoped_diagonal_case(grid, eps)?,
    };
    Ok(DoublePointReport {
        quotient: sphere.quotient,
        class: sphere.class,
        parametrization: sphere.parametrization.name(),
        count,
        witnesses,
        residual_floor: floor,
        grid,
    })
}

/// Generic fibre S²×{d₀}: the deck transformation moves the second
/// coordinate by a fixed positive amount, so there are no coincidences.
fn fiber_sphere_case(quotient: Quotient) -> (usize, Vec<Witness>, Option<f64>) {
    // d₀ away from the half-turn axis and the equator.
    let d0 = HemiPoint {
        s: S2Point::I,
        d: DiscCoord::new(0.6, 0.15),
        hemisphere: Hemisphere::Upper,
    }
    .to_product()
    .second;
    let displaced = match quotient {
        Quotient::ProductWithProjective => d0.antipode(),
        Quotient::TwistedBundle | Quotient::ConnectedSum => rotate_half_turn(d0),
    };
    let floor = displaced.dist(d0);
    (0, Vec::new(), Some(floor))
}

/// Fibre {s₀}×S² of the twisted bundle's projection to the projective
/// plane: the deck moves the first coordinate to its antipode.
fn twisted_fiber_case() -> (usize, Vec<Witness>, Option<f64>) {
    (0, Vec::new(), Some(2.0))
}

/// {j}×S² in the connected sum: coincidences on the upper hemisphere are
/// zeros of `W(d)·(-j)·W(d)⁻¹ - j`; the lower branch keeps the first
/// coordinate at distance 2.
fn connected_sum_case(grid: usize) -> Result<(usize, Vec<Witness>, Option<f64>), KkrError> {
    let g = |r: f64, t: f64| -> Vec<f64> {
        let p = HemiPoint {
            s: S2Point::J,
            d: DiscCoord::new(r, t),
            hemisphere: Hemisphere::Upper,
        };
        match glue_involution(p) {
            Ok(image) => {
                let diff = image.s.quaternion() - S2Point::J.quaternion();
                vec![diff.x, diff.y, diff.z]
            }
            Err(_) => vec![f64::INFINITY; 3],
        }
    };
    let (solutions, _) = solve_on_disc(g, grid);
    let witnesses = pair_solutions(
        solutions,
        |p| vec![p[0], (p[1] + 0.5).rem_euclid(1.0)],
        disc_dist,
        |p| {
            let c1 = (std::f64::consts::PI * p[0]).cos().abs();
            let c2 = (2.0 * std::f64::consts::PI * p[1]).cos().abs();
            Some(c1.max(c2))
        },
    )?;
    Ok((witnesses.len(), witnesses, None))
}

/// The folded sphere in the product quotient: coincidences are zeros of
/// `fold(-s) - fold(s)`, which forces the two poles.
fn folded_sphere_case(grid: usize) -> Result<(usize, Vec<Witness>, Option<f64>), KkrError> {
    let fold = |p: S2Point| -> [f64; 3] {
        let [x, y, z] = p.coords();
        [x, y, z.abs()]
    };
    let g = |p: S2Point| -> Vec<f64> {
        let a = fold(p.antipode());
        let b = fold(p);
        vec![a[0] - b[0], a[1] - b[1], a[2] - b[2]]
    };
    let (solutions, _) = solve_on_sphere(g, grid);
    let witnesses = pair_solutions(
        solutions,
        |p| vec![-p[0], -p[1], -p[2]],
        sphere_dist,
        |_| None,
    )?;
    Ok((witnesses.len(), witnesses, None))
}

/// The graph of the 2-fold covering: embedded. The coincidence distance
/// `‖s - s'‖² + ‖s + s'‖² = 4` is constant, so the floor is exactly 2.
fn covering_graph_case(grid: usize) -> (usize, Vec<Witness>, Option<f64>) {
    let mut floor = f64::INFINITY;
    for i in 0..grid.min(100) {
        let theta = std::f64::consts::PI * (i as f64 + 0.5) / grid.min(100) as f64;
        for j in 0..grid.min(100) {
            let phi = 2.0 * std::f64::consts::PI * j as f64 / grid.min(100) as f64;
            let s = S2Point::new(
                theta.sin() * phi.cos(),
                theta.sin() * phi.sin(),
                theta.cos(),
            );
            // min over s' of the distance from (s, -s) to (s', s') is
            // attained on the midpoint great circle; evaluate directly.
            let d = |sp: S2Point| {
                let a = s.dist(sp);
                let b = s.antipode().dist(sp);
                (a * a + b * b).sqrt()
            };
            // Two orthogonal candidates suffice since the functional is
            // constant; keep the grid evaluation as a sanity check.
            let [x, y, z] = s.coords();
            let candidates = [
                S2Point::new(-y, x, 0.0_f64.max(1e-12)),
                S2Point::new(z, 0.0_f64.max(1e-12), -x),
            ];
            for c in candidates {
                floor = floor.min(d(c));
            }
        }
    }
    (0, Vec::new(), Some(floor))
}

/// The pushed-off diagonal in the twisted bundle: coincidences are zeros
/// of `h(R_π s) + h(s)` with `h(u) = (u + ε·i)/|u + ε·i|`; the two
/// solutions ±i form one half-turn orbit.
fn isotoped_diagonal_case(
    grid: usize,
    eps: f64,
) -> Result<(usize, Vec<Witness>, Option<f64>), KkrError> {
    assert!(eps > 0.0 && eps < 1.0, "push-off parameter out of range");
    let h = |p: S2Point| -> S2Point {
        let [x, y, z] = p.coords();
        S2Point::new(x + eps, y, z)
    };
    let g = |p: S2Point| -> Vec<f64> {
        let a = h(rotate_half_turn(p)).coords();
        let b = h(p).coords();
        vec![a[0] + b[0], a[1] + b[1], a[2] + b[2]]
    };
    let (solutions, _) = solve_on_sphere(g, grid);
    let witnesses = pair_solutions(
        solutions,
        |p| vec![-p[0], -p[1], p[2]],
        sphere_dist,
        |_| None,
    )?;
    Ok((witnesses.len(), witnesses, None))
}

/// A computed quadratic-function value with its report.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct QkkrValue {
    pub value: u8,
    pub euler_number: i64,
    pub euler_provenance: &'static str,
    pub double_points: DoublePointReport,
}

/// `q = (e(ν) + 2·|double points|) mod 4` for a catalogued representative.
pub fn q_kkr(sphere: &ImmersedSphere, grid: usize) -> Result<QkkrValue, KkrError> {
    if sphere.class == PiClass::Zero {
        let report = DoublePointReport {
            quotient: sphere.quotient,
            class: sphere.class,
            parametrization: "zero-class".to_string(),
            count: 0,
            witnesses: vec![],
            residual_floor: None,
            grid,
        };
        return Ok(QkkrValue {
            value: 0,
            euler_number: 0,
            euler_provenance: "zero class, by convention",
            double_points: report,
        });
    }
    let report = double_points(sphere, grid)?;
    let value = (sphere.euler_number + 2 * report.count as i64).rem_euclid(4) as u8;
    Ok(QkkrValue {
        value,
        euler_number: sphere.euler_number,
        euler_provenance: sphere.euler_provenance,
        double_points: report,
    })
}

/// One row of the distinction table.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DistinctionRow {
    pub quotient: Quotient,
    pub v2_nonzero: bool,
    pub v2_provenance: String,
    /// q values on (x, y, x+y); entries outside the catalogue are None.
    pub q_values: [Option<u8>; 3],
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DistinctionTable {
    pub rows: Vec<DistinctionRow>,
    pub pairwise_distinct: bool,
}

/// The v₂/q table over the three quotients. The product quotient's v₂ is
/// computed from its cohomology ring; the other two are geometric inputs
/// (cores and exceptional fibres of self-intersection 1 mod 2).
pub fn distinguish_quotients(grid: usize) -> Result<DistinctionTable, KkrError> {
    let mut rows = Vec::new();
    for quotient in [
        Quotient::ProductWithProjective,
        Quotient::TwistedBundle,
        Quotient::ConnectedSum,
    ] {
        let (v2_nonzero, v2_provenance) = match quotient {
            Quotient::ProductWithProjective => {
                let ring = ring_catalog::product_with_sphere_ring();
                let (_, v2) = ring
                    .wu_classes()
                    .expect("catalog ring has a fundamental class");
                (!v2.is_zero(), "computed".to_string())
            }
            Quotient::TwistedBundle => (
                true,
                "paper-expected: the core projective plane has self-intersection 1 mod 2"
                    .to_string(),
            ),
            Quotient::ConnectedSum => (
                true,
                "paper-expected: the exceptional fibres have self-intersection 1".to_string(),
            ),
        };
        let mut q_values = [None; 3];
        for (slot, class) in [PiClass::X, PiClass::Y, PiClass::XY]
            .into_iter()
            .enumerate()
        {
            if let Some(sphere) = ImmersedSphere::catalog(quotient, class, DEFAULT_ISOTOPY_EPS) {
                q_values[slot] = Some(q_kkr(&sphere, grid)?.value);
            }
        }
        rows.push(DistinctionRow {
            quotient,
            v2_nonzero,
            v2_provenance,
            q_values,
        });
    }

    // Distinctness on the always-defined signature (v₂, q(x), q(y)).
    let mut pairwise_distinct = true;
    for i in 0..rows.len() {
        for j in i + 1..rows.len() {
            let sig = |r: &DistinctionRow| (r.v2_nonzero, r.q_values[0], r.q_values[1]);
            if sig(&rows[i]) == sig(&rows[j]) {
                pairwise_distinct = false;
            }
        }
    }
    Ok(DistinctionTable {
        rows,
        pairwise_distinct,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn connected_sum_single_double_point() {
        let sphere =
            ImmersedSphere::catalog(Quotient::ConnectedSum, PiClass::Y, DEFAULT_ISOTOPY_EPS)
                .unwrap();
        let report = double_points(&sphere, 200).unwrap();
        assert_eq!(report.count, 1);
        let w = &report.witnesses[0];
        assert!((w.params[0] - 0.5).abs() <= 1e-8);
        let t = w.params[1];
        assert!((t - 0.25).abs() <= 1e-8 || (t - 0.75).abs() <= 1e-8);
        assert!(w.analytic_defect.unwrap() <= 1e-8);
        assert!(w.residual <= WITNESS_RESIDUAL_TOL);
        assert!(w.transverse);
    }

    #[test]
    fn fiber_spheres_are_embedded() {
        for quotient in [
            Quotient::ProductWithProjective,
            Quotient::TwistedBundle,
            Quotient::ConnectedSum,
        ] {
            let sphere =
                ImmersedSphere::catalog(quotient, PiClass::X, DEFAULT_ISOTOPY_EPS).unwrap();
            let report = double_points(&sphere, 100).unwrap();
            assert_eq!(report.count, 0);
            assert!(report.residual_floor.unwrap() > 0.1);
        }
    }

    #[test]
    fn folded_sphere_single_double_point() {
        let sphere = ImmersedSphere::catalog(
            Quotient::ProductWithProjective,
            PiClass::Y,
            DEFAULT_ISOTOPY_EPS,
        )
        .unwrap();
        let report = double_points(&sphere, 200).unwrap();
        assert_eq!(report.count, 1);
        // The double point sits over the poles.
        let w = &report.witnesses[0];
        assert!(w.params[2].abs() > 1.0 - 1e-6);
    }

    #[test]
    fn isotoped_diagonal_count_is_eps_independent() {
        for eps in [0.05, 0.1, 0.2] {
            let sphere =
                ImmersedSphere::catalog(Quotient::TwistedBundle, PiClass::XY, eps).unwrap();
            let report = double_points(&sphere, 200).unwrap();
            assert_eq!(report.count, 1, "eps = {eps}");
            // Witnesses at ±i.
            let w = &report.witnesses[0];
            assert!(w.params[0].abs() > 1.0 - 1e-6);
        }
    }

    #[test]
    fn count_stable_under_grid_refinement() {
        let sphere =
            ImmersedSphere::catalog(Quotient::ConnectedSum, PiClass::Y, DEFAULT_ISOTOPY_EPS)
                .unwrap();
        let coarse = double_points(&sphere, 200).unwrap();
        let fine = double_points(&sphere, 400).unwrap();
        assert_eq!(coarse.count, fine.count);
    }

    #[test]
    fn q_values_product_quotient() {
        let q = |class| {
            let sphere =
                ImmersedSphere::catalog(Quotient::ProductWithProjective, class, 0.1).unwrap();
            q_kkr(&sphere, 200).unwrap().value
        };
        assert_eq!(q(PiClass::X), 0);
        assert_eq!(q(PiClass::Y), 2);
        assert_eq!(q(PiClass::XY), 2);
    }

    #[test]
    fn q_values_twisted_bundle_vanish() {
        for class in [PiClass::X, PiClass::Y, PiClass::XY] {
            let sphere = ImmersedSphere::catalog(Quotient::TwistedBundle, class, 0.1).unwrap();
            assert_eq!(q_kkr(&sphere, 200).unwrap().value, 0);
        }
    }

    #[test]
    fn q_value_connected_sum_y() {
        let sphere = ImmersedSphere::catalog(Quotient::ConnectedSum, PiClass::Y, 0.1).unwrap();
        assert_eq!(q_kkr(&sphere, 200).unwrap().value, 2);
    }

    #[test]
    fn zero_class_is_zero() {
        let sphere = ImmersedSphere::catalog(Quotient::TwistedBundle, PiClass::Zero, 0.1).unwrap();
        assert_eq!(q_kkr(&sphere, 50).unwrap().value, 0);
    }

    #[test]
    fn distinction_table() {
        let table = distinguish_quotients(200).unwrap();
        assert!(table.pairwise_distinct);
        assert!(!table.rows[0].v2_nonzero);
        assert!(table.rows[1].v2_nonzero);
        assert!(table.rows[2].v2_nonzero);
        assert_eq!(table.rows[0].q_values, [Some(0), Some(2), Some(2)]);
        assert_eq!(table.rows[1].q_values, [Some(0), Some(0), Some(0)]);
        assert_eq!(table.rows[2].q_values[1], Some(2));
        assert_eq!(table.rows[2].q_values[2], None);
    }
}
