//! Property suites across the exact kernel and the algebra built on it.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use s2s2_core::exact::{
    cokernel_invariants, smith_normal_form, subquotient_invariants, AbelianInvariants, F2Matrix,
    IntMatrix,
};
use s2s2_core::homalg::{
    f2_cohomology_dim, f2_homology_dim, group_cohomology, group_homology, resolution,
    FiniteAbelianGroup, GroupModule,
};

fn arb_matrix() -> impl Strategy<Value = IntMatrix> {
    (1usize..=6, 1usize..=6).prop_flat_map(|(r, c)| {
        proptest::collection::vec(-10i64..=10, r * c).prop_map(move |entries| {
            IntMatrix::from_fn(r, c, |i, j| BigInt::from(entries[i * c + j]))
        })
    })
}

/// A unimodular matrix built from a list of elementary row operations.
fn unimodular_from_ops(n: usize, ops: &[(usize, usize, i64)]) -> IntMatrix {
    let mut m = IntMatrix::identity(n);
    for &(a, b, c) in ops {
        let (a, b) = (a % n, b % n);
        if a != b {
            m.add_row_multiple(a, b, &BigInt::from(c));
        }
    }
    m
}

type ElementaryOps = Vec<(usize, usize, i64)>;

fn arb_matrix_with_ops() -> impl Strategy<Value = (IntMatrix, ElementaryOps, ElementaryOps)> {
    arb_matrix().prop_flat_map(|m| {
        let ops = proptest::collection::vec((0usize..8, 0usize..8, -2i64..=2), 0..12);
        (Just(m), ops.clone(), ops)
    })
}

proptest! {
    /// Reconstruction, diagonality, the divisibility chain, and
    /// unimodularity of the transforms.
    #[test]
    fn snf_reconstruction(m in arb_matrix()) {
        let snf = smith_normal_form(&m);
        prop_assert_eq!(snf.u.mul(&m).mul(&snf.v), snf.d.clone());
        for i in 0..snf.d.rows() {
            for j in 0..snf.d.cols() {
                if i != j {
                    prop_assert!(snf.d[(i, j)].is_zero());
                } else {
                    prop_assert!(!snf.d[(i, i)].is_negative());
                }
            }
        }
        let k = snf.d.rows().min(snf.d.cols());
        for i in 0..k.saturating_sub(1) {
            let a = &snf.d[(i, i)];
            let b = &snf.d[(i + 1, i + 1)];
            if !a.is_zero() {
                prop_assert!((b % a).is_zero());
            } else {
                prop_assert!(b.is_zero());
            }
        }
        prop_assert!(snf.u.det_abs().is_one());
        prop_assert!(snf.v.det_abs().is_one());
    }

    /// Cokernel invariants do not change under unimodular row/column
    /// transformations.
    #[test]
    fn cokernel_unimodular_invariance((m, lops, rops) in arb_matrix_with_ops()) {
        let l = unimodular_from_ops(m.rows(), &lops);
        let r = unimodular_from_ops(m.cols(), &rops);
        let transformed = l.mul(&m).mul(&r);
        prop_assert_eq!(cokernel_invariants(&m), cokernel_invariants(&transformed));
    }

    /// The mod-2 rank never exceeds the integer rank.
    #[test]
    fn f2_rank_bounded_by_integer_rank(m in arb_matrix()) {
        let int_rank = smith_normal_form(&m).rank();
        let f2_rank = F2Matrix::from_int_matrix(&m).rank();
        prop_assert!(f2_rank <= int_rank);
    }
}

/// Universal-coefficient shape on the quarter-turn and swap complexes:
/// free parts agree degreewise and the torsion of H^n matches the torsion
/// of H_{n-1}.
#[test]
fn universal_coefficients_on_known_complexes() {
    let g = FiniteAbelianGroup::z4();
    for module in [
        GroupModule::pi2_of_z4_quotient(&g),
        GroupModule::pi3_of_z4_quotient(&g),
    ] {
        for n in 1..=5usize {
            let hn = group_cohomology(&g, &module, n);
            let hn_low = group_homology(&g, &module, n);
            let hn_minus_1 = group_homology(&g, &module, n - 1);
            assert_eq!(hn.free_rank, hn_low.free_rank, "free parts at {n}");
            assert_eq!(hn.torsion, hn_minus_1.torsion, "torsion shift at {n}");
        }
    }
}

/// Cohomology of the cyclic group is 2-periodic in positive degrees.
#[test]
fn periodicity_for_quarter_turn_coefficients() {
    let g = FiniteAbelianGroup::z4();
    let m = GroupModule::pi2_of_z4_quotient(&g);
    for n in 1..=4usize {
        assert_eq!(group_cohomology(&g, &m, n), group_cohomology(&g, &m, n + 2));
    }
}

/// Every positive-degree torsion coefficient divides the group order.
#[test]
fn torsion_divides_group_order() {
    let cases: Vec<(FiniteAbelianGroup, GroupModule)> = vec![
        {
            let g = FiniteAbelianGroup::z4();
            let m = GroupModule::pi2_of_z4_quotient(&g);
            (g, m)
        },
        {
            let g = FiniteAbelianGroup::z4();
            let m = GroupModule::trivial_z(&g);
            (g, m)
        },
        {
            let g = FiniteAbelianGroup::klein();
            let m = GroupModule::pi2_of_projective_product(&g);
            (g, m)
        },
        {
            let g = FiniteAbelianGroup::klein();
            let m = GroupModule::twisted_z(&g, vec![-1, -1]);
            (g, m)
        },
    ];
    for (g, m) in cases {
        let order = BigInt::from(g.order());
        for n in 1..=5usize {
            for flavor in [group_cohomology(&g, &m, n), group_homology(&g, &m, n)] {
                assert_eq!(flavor.free_rank, 0, "finite group, positive degree");
                for t in &flavor.torsion {
                    assert!((&order % t).is_zero(), "{t} | {order} fails in degree {n}");
                }
            }
        }
    }
}

/// Mod-2 homology and cohomology dimensions agree in every degree.
#[test]
fn f2_duality_of_dimensions() {
    for g in [
        FiniteAbelianGroup::z4(),
        FiniteAbelianGroup::klein(),
        FiniteAbelianGroup::z2(),
        FiniteAbelianGroup::trivial(),
    ] {
        for n in 0..=6usize {
            assert_eq!(f2_homology_dim(&g, n), f2_cohomology_dim(&g, n));
        }
    }
}

/// Exactness witnesses: the resolution verifies on construction; spot
/// check a subquotient at an interior position by hand too.
#[test]
fn interior_subquotients_vanish() {
    let g = FiniteAbelianGroup::klein();
    let res = resolution(&g, 5);
    for k in 1..=3usize {
        let h =
            subquotient_invariants(res.integral_boundary(k + 1), res.integral_boundary(k)).unwrap();
        assert!(h.is_trivial());
    }
}

/// The induced action matrices of the quadratic functor satisfy the group
/// relations whenever the input does.
#[test]
fn gamma_preserves_group_relations() {
    use s2s2_core::gamma::gamma_functor;
    let g = FiniteAbelianGroup::klein();
    let m = GroupModule::pi2_of_projective_product(&g);
    let gm = gamma_functor(&m);
    let dim = gm.rank();
    for a in gm.actions() {
        assert_eq!(a.mul(a), IntMatrix::identity(dim));
    }
    let (t, u) = (&gm.actions()[0], &gm.actions()[1]);
    assert_eq!(t.mul(u), u.mul(t));
}

/// Registered geometry maps preserve unit norms per application.
#[test]
fn geometry_preserves_norms() {
    use rand::SeedableRng;
    use s2s2_core::quat::{
        double_antipode, klein_first, klein_second, order_four_action, random_s2_point,
        ProductPoint,
    };
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
    for _ in 0..500 {
        let p = ProductPoint::new(random_s2_point(&mut rng), random_s2_point(&mut rng));
        for map in [
            order_four_action,
            double_antipode,
            klein_first,
            klein_second,
        ] {
            let q = map(p);
            for part in [q.first, q.second] {
                let [x, y, z] = part.coords();
                assert!(((x * x + y * y + z * z) - 1.0).abs() <= 1e-12);
            }
        }
    }
}

/// A twisted-coefficient sanity value quoted repeatedly downstream.
#[test]
fn klein_group_homology_of_twisted_integers() {
    let g = FiniteAbelianGroup::klein();
    let m = GroupModule::twisted_z(&g, vec![-1, -1]);
    assert_eq!(group_homology(&g, &m, 0), AbelianInvariants::cyclic(2));
}
