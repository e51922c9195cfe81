//! Acceptance suite: one test per criterion, each printing a PASS line
//! (run with `-- --nocapture` to see them all) and asserting the tabulated
//! values at their stated tolerances.
//!
//! Criteria 1, 6 and 12 assert reference values that disagree with direct
//! computation (see `data/expected.json` notes and the project README);
//! they are kept asserting the tabulated values, so they fail, loudly and
//! deliberately, rather than being weakened to match the code.

use s2s2_core::ahss::{bordism_answer, d2_dual, BordismInput};
use s2s2_core::exact::{smith_normal_form, AbelianInvariants, IntMatrix};
use s2s2_core::f2ring::{catalog as rings, ring_isomorphic, GradedF2Algebra};
use s2s2_core::gamma::{gamma_functor, oriented_pi2_projective_product, swap_symmetry};
use s2s2_core::homalg::{
    f2_cohomology_dim, f2_homology_dim, group_cohomology, FiniteAbelianGroup, GroupModule,
};
use s2s2_core::kkr::{q_kkr, ImmersedSphere, PiClass, Quotient};
use s2s2_core::quat::{covering_check, twist_factor_grid_deviation, verify_action, ActionKind};
use s2s2_core::tol::LIFT_TOL;
use std::time::{Duration, Instant};

fn finish(criterion: u32, start: Instant, budget: Duration, detail: &str) {
    let elapsed = start.elapsed();
    assert!(
        elapsed <= budget,
        "criterion {criterion}: over time budget ({elapsed:?} > {budget:?})"
    );
    println!("ACCEPTANCE {criterion}: PASS in {elapsed:?} — {detail}");
}

/// Criterion 1: cohomology of the cyclic-4 group with quarter-turn
/// coefficients, degrees 0..6, against the tabulated pattern Z, then Z/2
/// in odd and 0 in even positive degrees.
#[test]
fn criterion_01_cohomology_quarter_turn() {
    let start = Instant::now();
    let g = FiniteAbelianGroup::z4();
    let m = GroupModule::pi2_of_z4_quotient(&g);
    let expected: Vec<AbelianInvariants> = vec![
        AbelianInvariants::free(1), // tabulated; direct computation yields 0
        AbelianInvariants::cyclic(2),
        AbelianInvariants::trivial(),
        AbelianInvariants::cyclic(2),
        AbelianInvariants::trivial(),
        AbelianInvariants::cyclic(2),
        AbelianInvariants::trivial(),
    ];
    let computed: Vec<AbelianInvariants> = (0..=6).map(|n| group_cohomology(&g, &m, n)).collect();
    assert_eq!(
        computed, expected,
        "ACCEPTANCE 1: FAIL — H^n pattern mismatch (computed left, tabulated right)"
    );
    finish(1, start, Duration::from_secs(1), "H^0 = Z, odd Z/2, even 0");
}

/// Criterion 2: the swap-coefficient pattern in positive degrees.
#[test]
fn criterion_02_cohomology_swap() {
    let start = Instant::now();
    let g = FiniteAbelianGroup::z4();
    let m = GroupModule::pi3_of_z4_quotient(&g);
    for n in 1..=6usize {
        let h = group_cohomology(&g, &m, n);
        let expected = if n % 2 == 0 {
            AbelianInvariants::cyclic(2)
        } else {
            AbelianInvariants::trivial()
        };
        assert_eq!(h, expected, "H^{n}");
    }
    finish(2, start, Duration::from_secs(1), "even positive Z/2, odd 0");
}

/// Criterion 3: the four differentials, computed from the Cartan formula
/// with w1 = x and w2 = u, never hard-coded.
#[test]
fn criterion_03_differentials() {
    let start = Instant::now();
    let input = BordismInput::cyclic4();
    let r = &input.ring;
    let d = |name: &str| {
        let alpha = r.class(name).unwrap();
        d2_dual(&input, &alpha).unwrap()
    };
    assert_eq!(d("x"), r.class("x*u").unwrap());
    assert!(!d("x").is_zero());
    assert!(d("u").is_zero());
    assert!(d("x*u").is_zero());
    assert_eq!(d("u^2"), r.class("u^3").unwrap());
    assert!(!d("u^2").is_zero());
    finish(
        3,
        start,
        Duration::from_secs(1),
        "d(x)=xu, d(u)=0, d(xu)=0, d(u^2)=u^3",
    );
}

/// Criterion 4: the assembled bordism answer — three Z/2 summands at
/// (0,4), (2,2), (4,0) with the corner flagged as assumption-dependent.
#[test]
fn criterion_04_bordism_answer() {
    let start = Instant::now();
    let answer = bordism_answer(&BordismInput::cyclic4(), true);
    assert_eq!(answer.total, AbelianInvariants::from_parts(0, &[2, 2, 2]));
    let positions: Vec<(usize, usize)> = answer.summands.iter().map(|s| (s.p, s.q)).collect();
    assert_eq!(positions, vec![(0, 4), (2, 2), (4, 0)]);
    assert!(answer
        .summands
        .iter()
        .any(|s| (s.p, s.q) == (4, 0) && s.assumption.is_some()));
    finish(
        4,
        start,
        Duration::from_secs(1),
        "(Z/2)^3 with flagged corner",
    );
}

/// Criterion 5: Wu classes of the two 4-manifold rings.
#[test]
fn criterion_05_wu_classes() {
    let start = Instant::now();
    let product = rings::projective_product_ring();
    let (v1, v2) = product.wu_classes().unwrap();
    assert_eq!(v1, product.class("t + u").unwrap());
    assert_eq!(v2, product.class("t*u").unwrap());

    let twisted = rings::twisted_projective_ring();
    let (v1, v2) = twisted.wu_classes().unwrap();
    // w = t* + u* and x = u* in the dual basis, so these are t* + u* and
    // t*u* + (u*)^2.
    assert_eq!(v1, twisted.class("w").unwrap());
    assert_eq!(v2, twisted.class("w*x").unwrap());
    finish(
        5,
        start,
        Duration::from_secs(1),
        "v1 = t+u twice, v2 = tu and tu+u^2",
    );
}

/// Criterion 6: ring distinction — not isomorphic in top degree, and the
/// tabulated claim that the degree-3 truncations agree.
#[test]
fn criterion_06_ring_distinction() {
    let start = Instant::now();
    let a = rings::projective_product_ring();
    let b = rings::twisted_projective_ring();
    assert!(!ring_isomorphic(&a, &b).0, "top-degree rings must differ");

    let a3 = a.truncate(3).unwrap();
    let b3 = b.truncate(3).unwrap();
    let (iso, _) = ring_isomorphic(&a3, &b3);
    assert!(
        iso,
        "ACCEPTANCE 6: FAIL — tabulated value says the degree-3 truncations are isomorphic, \
         but the exhaustive search certifies they are not (the cubing map on degree 1 \
         has two null lines in one ring and one in the other)"
    );
    finish(
        6,
        start,
        Duration::from_secs(1),
        "distinct in top degree, equal truncated",
    );
}

/// Criterion 7: quadratic-functor coinvariants and polarisation orbit
/// counts.
#[test]
fn criterion_07_gamma() {
    let start = Instant::now();
    let g = FiniteAbelianGroup::klein();
    let gm = gamma_functor(&oriented_pi2_projective_product(&g));
    assert_eq!(
        gm.twisted_coinvariants(),
        AbelianInvariants::from_parts(1, &[2, 2])
    );
    let with_swap = gm.torsion_orbit_count(&[swap_symmetry()]).unwrap();
    assert_eq!(with_swap.orbit_count, 3);
    let without = gm.torsion_orbit_count(&[]).unwrap();
    assert_eq!(without.orbit_count, 4);
    finish(
        7,
        start,
        Duration::from_secs(1),
        "Z + (Z/2)^2; orbits 3 and 4",
    );
}

/// Criterion 8: the quadratic-function table at grid 400, with the
/// connected-sum witness pinned to cos(πr) = cos(2πt) = 0.
#[test]
fn criterion_08_q_table() {
    let start = Instant::now();
    let grid = 400;
    let q = |quotient, class| {
        let sphere = ImmersedSphere::catalog(quotient, class, 0.1).unwrap();
        q_kkr(&sphere, grid).unwrap()
    };

    for (class, expected) in [(PiClass::X, 0), (PiClass::Y, 2), (PiClass::XY, 2)] {
        assert_eq!(q(Quotient::ProductWithProjective, class).value, expected);
    }
    for class in [PiClass::X, PiClass::Y, PiClass::XY] {
        assert_eq!(q(Quotient::TwistedBundle, class).value, 0);
    }

    let connected = q(Quotient::ConnectedSum, PiClass::Y);
    assert_eq!(connected.value, 2);
    let report = &connected.double_points;
    assert_eq!(report.count, 1);
    let w = &report.witnesses[0];
    assert!((w.params[0] - 0.5).abs() <= 1e-8, "r = 1/2");
    let t = w.params[1];
    assert!(
        (t - 0.25).abs() <= 1e-8 || (t - 0.75).abs() <= 1e-8,
        "t = 1/4 or 3/4"
    );
    assert!(w.residual <= 1e-8);
    assert!(w.analytic_defect.unwrap() <= 1e-8);
    finish(
        8,
        start,
        Duration::from_secs(10),
        "(0,2,2), (0,0,0), q(y)=2 with 1 double point",
    );
}

/// Criterion 9: action verification and the closed-form twist check.
#[test]
fn criterion_09_actions() {
    let start = Instant::now();
    let sigma = verify_action(ActionKind::OrderFour, 10_000, 0).unwrap();
    assert!(sigma.order_ok && sigma.order == 4);
    assert!(sigma.refined_min_displacement > 0.0);

    let klein = verify_action(ActionKind::KleinFour, 10_000, 0).unwrap();
    assert!(klein.order_ok);
    assert!(klein.commute_max_err.unwrap() <= 1e-9);
    assert!(klein.refined_min_displacement > 1e-3);

    let glue = verify_action(ActionKind::GlueInvolution, 10_000, 0).unwrap();
    assert!(glue.order_ok && glue.order == 2);
    assert!(glue.refined_min_displacement > 1e-3);

    assert!(twist_factor_grid_deviation(100) <= 1e-10);
    finish(
        9,
        start,
        Duration::from_secs(10),
        "orders, freeness bounds, twist grid",
    );
}

/// Criterion 10: covering identities at 10^4 samples.
#[test]
fn criterion_10_covering() {
    let start = Instant::now();
    let report = covering_check(10_000, 0).unwrap();
    assert!(report.orthogonality_max <= LIFT_TOL);
    assert!(report.even_max_err <= LIFT_TOL);
    assert!(report.lift_max_err <= LIFT_TOL);
    assert_eq!(report.lift_order, 8);
    finish(
        10,
        start,
        Duration::from_secs(5),
        "orthogonality, evenness, lift at 1e-10",
    );
}

/// Criterion 11: the property suites — 1000 random Smith reconstructions,
/// Cartan consistency on all basis pairs of the three rings, and mod-2
/// dimension duality through degree 6.
#[test]
fn criterion_11_property_suites() {
    use num_bigint::BigInt;
    use num_traits::{One, Zero};
    use rand::{Rng, SeedableRng};

    let start = Instant::now();

    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0);
    for _ in 0..1000 {
        let rows = rng.gen_range(1..=6);
        let cols = rng.gen_range(1..=6);
        let m = IntMatrix::from_fn(rows, cols, |_, _| BigInt::from(rng.gen_range(-10i64..=10)));
        let snf = smith_normal_form(&m);
        assert_eq!(snf.u.mul(&m).mul(&snf.v), snf.d);
        assert!(snf.u.det_abs().is_one());
        assert!(snf.v.det_abs().is_one());
        let k = rows.min(cols);
        for i in 0..k.saturating_sub(1) {
            let a = &snf.d[(i, i)];
            let b = &snf.d[(i + 1, i + 1)];
            if a.is_zero() {
                assert!(b.is_zero());
            } else {
                assert!((b % a).is_zero());
            }
        }
    }

    let cartan_consistent = |r: &GradedF2Algebra| {
        for da in 0..=r.top_degree() {
            for db in 0..=(r.top_degree() - da) {
                for a in r.basis(da) {
                    for b in r.basis(db) {
                        let ca = r.monomial_class(&a);
                        let cb = r.monomial_class(&b);
                        let prod = r.cup(&ca, &cb).unwrap();
                        for n in 0..=(da + db) {
                            let lhs = r.sq(n, &prod);
                            let mut rhs = r.zero_class(da + db + n);
                            for i in 0..=n {
                                let left = r.sq(i, &ca);
                                let right = r.sq(n - i, &cb);
                                if left.degree + right.degree <= r.top_degree() {
                                    rhs = r.add(&rhs, &r.cup(&left, &right).unwrap());
                                }
                            }
                            assert_eq!(lhs, rhs, "Cartan at Sq^{n}");
                        }
                    }
                }
            }
        }
    };
    cartan_consistent(&rings::projective_product_ring());
    cartan_consistent(&rings::twisted_projective_ring());
    cartan_consistent(&rings::cyclic4_group_ring());

    for g in [FiniteAbelianGroup::z4(), FiniteAbelianGroup::klein()] {
        for n in 0..=6usize {
            assert_eq!(f2_homology_dim(&g, n), f2_cohomology_dim(&g, n));
        }
    }
    finish(
        11,
        start,
        Duration::from_secs(30),
        "1000 SNF, Cartan pairs, F2 duality",
    );
}

/// Criterion 12: the full reference-value suite exits cleanly.
#[test]
fn criterion_12_paper_suite() {
    let start = Instant::now();
    let out = std::process::Command::new(env!("CARGO_BIN_EXE_s2s2"))
        .args(["paper-suite", "--format", "json"])
        .output()
        .expect("binary runs");
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let failing: Vec<String> = report["payload"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|o| o["pass"] == serde_json::Value::Bool(false))
        .map(|o| {
            format!(
                "{} (expected '{}', computed '{}')",
                o["id"], o["expected"], o["computed"]
            )
        })
        .collect();
    assert_eq!(
        out.status.code(),
        Some(0),
        "ACCEPTANCE 12: FAIL — the reference suite reports mismatches: {failing:?}"
    );
    finish(12, start, Duration::from_secs(60), "reference suite green");
}
