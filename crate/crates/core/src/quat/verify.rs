//! Sampled verification of the registered actions: orders, commutativity,
//! and freeness certified by a grid-plus-refinement displacement bound.

use super::maps::{
    boundary_involution, boundary_twist, covering_lift, covering_map, double_antipode,
    glue_involution, klein_first, klein_second, order_four_action, twist_factor_closed_form, v_map,
    EBoundaryPoint,
};
use super::quaternion::{
    DiscCoord, HemiPoint, Hemisphere, ProductPoint, QuatError, Quaternion, S2Point,
};
use crate::tol::{COMPOSITE_TOL, FIXED_POINT_TOL, LIFT_TOL};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

/// The registered actions on S²×S².
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ActionKind {
    /// The order-4 map (s, t) ↦ (t, -s).
    OrderFour,
    /// Its square, the antipode on both factors.
    DoubleAntipode,
    /// The hemisphere-glued involution of the twisted double quotient.
    GlueInvolution,
    /// The Klein four-group of the twisted projective-plane bundle.
    KleinFour,
    /// The identity map (order 1 and certainly not free).
    Identity,
}

impl ActionKind {
    pub fn cli_name(self) -> &'static str {
        match self {
            ActionKind::OrderFour => "sigma",
            ActionKind::DoubleAntipode => "sigma2",
            ActionKind::GlueInvolution => "psi",
            ActionKind::KleinFour => "klein",
            ActionKind::Identity => "identity",
        }
    }

    pub fn from_cli_name(name: &str) -> Option<Self> {
        match name {
            "sigma" => Some(ActionKind::OrderFour),
            "sigma2" => Some(ActionKind::DoubleAntipode),
            "psi" => Some(ActionKind::GlueInvolution),
            "klein" => Some(ActionKind::KleinFour),
            "identity" => Some(ActionKind::Identity),
            _ => None,
        }
    }
}

/// Result of verifying one action.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ActionReport {
    pub action: String,
    pub order: u32,
    pub order_ok: bool,
    pub order_max_err: f64,
    /// Present for multi-generator actions.
    pub commute_max_err: Option<f64>,
    /// Smallest displacement of any nontrivial element over the samples.
    pub min_displacement: f64,
    /// The sampled minimum pushed further down by local pattern search;
    /// this is the certified freeness bound.
    pub refined_min_displacement: f64,
    pub worst_point: [f64; 6],
    pub samples: usize,
    pub seed: u64,
}

pub fn random_unit_quaternion(rng: &mut ChaCha8Rng) -> Quaternion {
    loop {
        let q = Quaternion::new(
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
        );
        let n = q.norm_sq();
        if n > 1e-3 && n <= 1.0 {
            return q.normalize();
        }
    }
}

pub fn random_s2_point(rng: &mut ChaCha8Rng) -> S2Point {
    loop {
        let (x, y, z) = (
            rng.gen_range(-1.0f64..1.0),
            rng.gen_range(-1.0f64..1.0),
            rng.gen_range(-1.0f64..1.0),
        );
        let n = x * x + y * y + z * z;
        if n > 1e-3 && n <= 1.0 {
            return S2Point::new(x, y, z);
        }
    }
}

fn random_product_point(rng: &mut ChaCha8Rng) -> ProductPoint {
    ProductPoint::new(random_s2_point(rng), random_s2_point(rng))
}

/// Pattern search minimising a displacement functional over R^6-embedded
/// product points (coordinates renormalised on evaluation). Only ever
/// drives the bound down, so the result is still a certified upper bound
/// on the true minimum and a lower bound witness for freeness when it
/// stays away from zero.
fn refine_product_min<F>(f: F, start: ProductPoint) -> (f64, ProductPoint)
where
    F: Fn(ProductPoint) -> f64,
{
    let mut coords = start.flat();
    let rebuild = |c: &[f64; 6]| -> ProductPoint {
        ProductPoint::new(
            S2Point::new(c[0], c[1], c[2]),
            S2Point::new(c[3], c[4], c[5]),
        )
    };
    let mut best = f(start);
    let mut step = 0.2;
    for _ in 0..400 {
        let mut improved = false;
        for i in 0..6 {
            for sign in [-1.0, 1.0] {
                let mut trial = coords;
                trial[i] += sign * step;
                let p = rebuild(&trial);
                let v = f(p);
                if v < best {
                    best = v;
                    coords = p.flat();
                    improved = true;
                }
            }
        }
        if !improved {
            step *= 0.5;
            if step < 1e-12 {
                break;
            }
        }
    }
    (best, rebuild(&coords))
}

struct SampledMin {
    value: f64,
    point: ProductPoint,
}

fn sampled_displacement_min<F>(rng: &mut ChaCha8Rng, samples: usize, f: &F) -> SampledMin
where
    F: Fn(ProductPoint) -> f64,
{
    let mut best = SampledMin {
        value: f64::INFINITY,
        point: ProductPoint::new(S2Point::I, S2Point::J),
    };
    for _ in 0..samples {
        let p = random_product_point(rng);
        let v = f(p);
        if v < best.value {
            best = SampledMin { value: v, point: p };
        }
    }
    best
}

/// Verifies order, commutativity (for the Klein action) and freeness of a
/// registered action at the given sample count.
pub fn verify_action(
    kind: ActionKind,
    samples: usize,
    seed: u64,
) -> Result<ActionReport, QuatError> {
    match kind {
        ActionKind::GlueInvolution => verify_glue_involution(samples, seed),
        _ => verify_product_action(kind, samples, seed),
    }
}

fn verify_product_action(
    kind: ActionKind,
    samples: usize,
    seed: u64,
) -> Result<ActionReport, QuatError> {
    type Map = fn(ProductPoint) -> ProductPoint;
    let identity: Map = |p| p;
    let (order, generators): (u32, Vec<Map>) = match kind {
        ActionKind::OrderFour => (4, vec![order_four_action as Map]),
        ActionKind::DoubleAntipode => (2, vec![double_antipode as Map]),
        ActionKind::KleinFour => (2, vec![klein_first as Map, klein_second as Map]),
        ActionKind::Identity => (1, vec![identity]),
        ActionKind::GlueInvolution => unreachable!(),
    };

    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    // Order: every generator to its declared power is the identity.
    let mut order_max_err = 0.0f64;
    for _ in 0..samples.min(2000) {
        let p = random_product_point(&mut rng);
        for g in &generators {
            let mut q = p;
            for _ in 0..order {
                q = g(q);
            }
            order_max_err = order_max_err.max(q.dist(p));
        }
    }
    if order_max_err > COMPOSITE_TOL {
        return Err(QuatError::OrderFailed(order_max_err));
    }

    // Commutativity for multi-generator actions.
    let commute_max_err = if generators.len() > 1 {
        let mut worst = 0.0f64;
        for _ in 0..samples.min(2000) {
            let p = random_product_point(&mut rng);
            for (i, g) in generators.iter().enumerate() {
                for h in &generators[i + 1..] {
                    worst = worst.max(g(h(p)).dist(h(g(p))));
                }
            }
        }
        if worst > COMPOSITE_TOL {
            return Err(QuatError::OrderFailed(worst));
        }
        Some(worst)
    } else {
        None
    };

    // All nontrivial elements of the generated group. For the identity
    // "action" the map itself is checked, which reports its fixed points.
    let displacement: Box<dyn Fn(ProductPoint) -> f64> = match kind {
        ActionKind::OrderFour => Box::new(|p| {
            let g1 = order_four_action(p);
            let g2 = order_four_action(g1);
            let g3 = order_four_action(g2);
            g1.dist(p).min(g2.dist(p)).min(g3.dist(p))
        }),
        ActionKind::DoubleAntipode => Box::new(|p| double_antipode(p).dist(p)),
        ActionKind::KleinFour => Box::new(|p| {
            let a = klein_first(p);
            let b = klein_second(p);
            let ab = klein_first(klein_second(p));
            a.dist(p).min(b.dist(p)).min(ab.dist(p))
        }),
        ActionKind::Identity => Box::new(|p: ProductPoint| p.dist(p)),
        ActionKind::GlueInvolution => unreachable!(),
    };

    let sampled = sampled_displacement_min(&mut rng, samples, &displacement);
    let (refined, worst) = refine_product_min(&displacement, sampled.point);
    if refined < FIXED_POINT_TOL {
        return Err(QuatError::FixedPointFound {
            witness: worst.flat(),
            displacement: refined,
        });
    }
    Ok(ActionReport {
        action: kind.cli_name().to_string(),
        order,
        order_ok: true,
        order_max_err,
        commute_max_err,
        min_displacement: sampled.value,
        refined_min_displacement: refined,
        worst_point: worst.flat(),
        samples,
        seed,
    })
}

fn random_hemi_point(rng: &mut ChaCha8Rng) -> HemiPoint {
    let hemisphere = if rng.gen_bool(0.5) {
        Hemisphere::Upper
    } else {
        Hemisphere::Lower
    };
    HemiPoint {
        s: random_s2_point(rng),
        d: DiscCoord::new(rng.gen_range(0.0..=1.0), rng.gen_range(0.0..1.0)),
        hemisphere,
    }
}

fn verify_glue_involution(samples: usize, seed: u64) -> Result<ActionReport, QuatError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    // Involutivity.
    let mut order_max_err = 0.0f64;
    for _ in 0..samples.min(10_000) {
        let p = random_hemi_point(&mut rng);
        let back = glue_involution(glue_involution(p)?)?;
        order_max_err = order_max_err.max(back.to_product().dist(p.to_product()));
    }
    if order_max_err > COMPOSITE_TOL {
        return Err(QuatError::OrderFailed(order_max_err));
    }

    // Freeness: sample the displacement, then refine in the (s, r, t)
    // chart of the worst hemisphere.
    let displacement = |p: HemiPoint| -> f64 {
        glue_involution(p)
            .map(|q| q.to_product().dist(p.to_product()))
            .unwrap_or(f64::INFINITY)
    };
    let mut best = f64::INFINITY;
    let mut best_point = random_hemi_point(&mut rng);
    for _ in 0..samples {
        let p = random_hemi_point(&mut rng);
        let v = displacement(p);
        if v < best {
            best = v;
            best_point = p;
        }
    }

    let (refined, worst) = refine_hemi_min(&displacement, best_point);
    if refined < FIXED_POINT_TOL {
        return Err(QuatError::FixedPointFound {
            witness: worst.to_product().flat(),
            displacement: refined,
        });
    }
    Ok(ActionReport {
        action: ActionKind::GlueInvolution.cli_name().to_string(),
        order: 2,
        order_ok: true,
        order_max_err,
        commute_max_err: None,
        min_displacement: best,
        refined_min_displacement: refined,
        worst_point: worst.to_product().flat(),
        samples,
        seed,
    })
}

fn refine_hemi_min<F>(f: &F, start: HemiPoint) -> (f64, HemiPoint)
where
    F: Fn(HemiPoint) -> f64,
{
    let mut current = start;
    let mut best = f(start);
    let mut step = 0.1;
    for _ in 0..400 {
        let mut improved = false;
        let [sx, sy, sz] = current.s.coords();
        let candidates = |step: f64| -> Vec<HemiPoint> {
            let mut out = Vec::with_capacity(10);
            for (dx, dy, dz) in [
                (step, 0.0, 0.0),
                (-step, 0.0, 0.0),
                (0.0, step, 0.0),
                (0.0, -step, 0.0),
                (0.0, 0.0, step),
                (0.0, 0.0, -step),
            ] {
                out.push(HemiPoint {
                    s: S2Point::new(sx + dx, sy + dy, sz + dz),
                    ..current
                });
            }
            for (dr, dt) in [(step, 0.0), (-step, 0.0), (0.0, step), (0.0, -step)] {
                let r = (current.d.r + dr).clamp(0.0, 1.0);
                out.push(HemiPoint {
                    d: DiscCoord::new(r, current.d.t + dt),
                    ..current
                });
            }
            out
        };
        for cand in candidates(step) {
            let v = f(cand);
            if v < best {
                best = v;
                current = cand;
                improved = true;
            }
        }
        if !improved {
            step *= 0.5;
            if step < 1e-12 {
                break;
            }
        }
    }
    (best, current)
}

/// Results of the covering-identity checks.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CoverReport {
    pub samples: usize,
    pub seed: u64,
    /// max |s•t| over sampled images (the image lies on the orthogonality
    /// locus).
    pub orthogonality_max: f64,
    /// max distance between f(q) and f(-q).
    pub even_max_err: f64,
    /// max distance between f(q·(1+k)/√2) and the order-4 action applied
    /// to f(q).
    pub lift_max_err: f64,
    /// Smallest order n ≤ 16 with lift^n = id (expected 8).
    pub lift_order: u32,
    /// Over random pairs with close images, both preimages agree up to
    /// sign.
    pub injectivity_ok: bool,
}

/// Checks the covering identities at `samples` random unit quaternions.
pub fn covering_check(samples: usize, seed: u64) -> Result<CoverReport, QuatError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut orthogonality_max = 0.0f64;
    let mut even_max_err = 0.0f64;
    let mut lift_max_err = 0.0f64;

    for _ in 0..samples {
        let q = random_unit_quaternion(&mut rng);
        let image = covering_map(q)?;
        orthogonality_max = orthogonality_max.max(image.first.dot(image.second).abs());
        even_max_err = even_max_err.max(image.dist(covering_map(-q)?));
        let lifted = covering_map(covering_lift(q))?;
        lift_max_err = lift_max_err.max(lifted.dist(order_four_action(image)));
    }
    if orthogonality_max > LIFT_TOL {
        return Err(QuatError::IdentityViolated {
            context: "image not on the orthogonality locus",
            error: orthogonality_max,
        });
    }
    if even_max_err > LIFT_TOL {
        return Err(QuatError::IdentityViolated {
            context: "f(-q) differs from f(q)",
            error: even_max_err,
        });
    }
    if lift_max_err > LIFT_TOL {
        return Err(QuatError::IdentityViolated {
            context: "lift identity fails",
            error: lift_max_err,
        });
    }

    // Order of the lift by its power table.
    let mut lift_order = 0u32;
    let mut q = Quaternion::ONE;
    for n in 1..=16u32 {
        q = covering_lift(q);
        if q.dist(Quaternion::ONE) <= LIFT_TOL {
            lift_order = n;
            break;
        }
    }

    // Injectivity up to sign: points with (anti)podal parameters map
    // together, nearby-but-distinct parameters must not.
    let mut injectivity_ok = true;
    for _ in 0..samples.min(2000) {
        let a = random_unit_quaternion(&mut rng);
        let b = random_unit_quaternion(&mut rng);
        let image_close = covering_map(a)?.dist(covering_map(b)?) < 1e-9;
        let param_close = a.dist(b).min(a.dist(-b)) < 1e-7;
        if image_close != param_close {
            injectivity_ok = false;
        }
    }

    Ok(CoverReport {
        samples,
        seed,
        orthogonality_max,
        even_max_err,
        lift_max_err,
        lift_order,
        injectivity_ok,
    })
}

/// Maximum deviation between the quaternionic and closed-form evaluations
/// of the boundary twist factor over an n×n parameter grid.
pub fn twist_factor_grid_deviation(n: usize) -> f64 {
    let mut worst = 0.0f64;
    for i in 0..n {
        for j in 0..n {
            let d = DiscCoord::new(i as f64 / (n - 1) as f64, j as f64 / n as f64);
            let arithmetic = v_map(d.half_turn()).inverse() * v_map(d);
            worst = worst.max(arithmetic.dist(twist_factor_closed_form(d)));
        }
    }
    worst
}

/// Maximum seam mismatch of the gluing involution along the equator: the
/// two branch formulas evaluated at r = 1 must agree.
pub fn glue_seam_mismatch(samples: usize, seed: u64) -> f64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    for _ in 0..samples {
        let s = random_s2_point(&mut rng);
        let d = DiscCoord::new(1.0, rng.gen_range(0.0..1.0));
        let upper = glue_involution(HemiPoint {
            s,
            d,
            hemisphere: Hemisphere::Upper,
        })
        .expect("twist factor agrees on the equator");
        let lower = glue_involution(HemiPoint {
            s,
            d,
            hemisphere: Hemisphere::Lower,
        })
        .expect("lower branch is exact");
        worst = worst.max(upper.to_product().dist(lower.to_product()));
    }
    worst
}

/// Maximum mismatch of `ξ∘f` against `f∘ξ` on the boundary of the twisted
/// piece, in the quotient metric.
pub fn boundary_commute_mismatch(samples: usize, seed: u64) -> f64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    for _ in 0..samples {
        let p = EBoundaryPoint::new(1, random_s2_point(&mut rng), rng.gen_range(0.0..1.0));
        let a = boundary_twist(boundary_involution(p));
        let b = boundary_involution(boundary_twist(p));
        worst = worst.max(a.dist(b));
    }
    worst
}
