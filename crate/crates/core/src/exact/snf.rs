//! Smith normal form over ℤ.

use super::int_matrix::{better_pivot, IntMatrix};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

/// Result of a Smith normal form computation: `u * m * v = d` with `u`, `v`
/// unimodular and `d` diagonal with each entry dividing the next.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SnfResult {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl SnfResult {
    /// Number of nonzero diagonal entries.
    pub fn rank(&self) -> usize {
        let n = self.d.rows().min(self.d.cols());
        (0..n).filter(|&i| !self.d[(i, i)].is_zero()).count()
    }

    /// The nonzero diagonal entries, in divisibility order.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        let n = self.d.rows().min(self.d.cols());
        (0..n)
            .map(|i| self.d[(i, i)].clone())
            .filter(|e| !e.is_zero())
            .collect()
    }
}

/// Finds the pivot position in the trailing submatrix starting at `(k, k)`:
/// the nonzero entry of smallest absolute value, ties broken by lowest row
/// then column index. Deterministic, so results are reproducible.
fn find_pivot(a: &IntMatrix, k: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in k..a.rows() {
        for j in k..a.cols() {
            if a[(i, j)].is_zero() {
                continue;
            }
            match best {
                None => best = Some((i, j)),
                Some((bi, bj)) => {
                    if better_pivot((&a[(i, j)], i, j), (&a[(bi, bj)], bi, bj)) {
                        best = Some((i, j));
                    }
                }
            }
        }
    }
    best
}

/// Computes the Smith normal form of `m`.
///
/// Total on all inputs, including empty matrices. The returned transforms
/// satisfy `u * m * v = d` exactly.
pub fn smith_normal_form(m: &IntMatrix) -> SnfResult {
    let rows = m.rows();
    let cols = m.cols();
    let mut a = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    let kmax = rows.min(cols);
    let mut k = 0;
    'stage: while k < kmax {
        let Some((pi, pj)) = find_pivot(&a, k) else {
            break;
        };
        a.swap_rows(k, pi);
        u.swap_rows(k, pi);
        a.swap_cols(k, pj);
        v.swap_cols(k, pj);

        // Clear column k below the pivot and row k to its right. A nonzero
        // remainder leaves an entry strictly smaller than the pivot, so
        // restarting the stage terminates.
        let pivot = a[(k, k)].clone();
        let mut dirty = false;
        for i in k + 1..rows {
            if a[(i, k)].is_zero() {
                continue;
            }
            let q = -(&a[(i, k)] / &pivot);
            a.add_row_multiple(i, k, &q);
            u.add_row_multiple(i, k, &q);
            if !a[(i, k)].is_zero() {
                dirty = true;
            }
        }
        for j in k + 1..cols {
            if a[(k, j)].is_zero() {
                continue;
            }
            let q = -(&a[(k, j)] / &pivot);
            a.add_col_multiple(j, k, &q);
            v.add_col_multiple(j, k, &q);
            if !a[(k, j)].is_zero() {
                dirty = true;
            }
        }
        if dirty {
            continue 'stage;
        }

        // The pivot must divide every remaining entry; if not, pull the
        // offending row up and restart with a smaller pivot.
        for i in k + 1..rows {
            for j in k + 1..cols {
                if !(&a[(i, j)] % &pivot).is_zero() {
                    let one = BigInt::from(1);
                    a.add_row_multiple(k, i, &one);
                    u.add_row_multiple(k, i, &one);
                    continue 'stage;
                }
            }
        }
        k += 1;
    }

    // Enforce the divisibility chain on the diagonal. Off-diagonal entries
    // are already zero, so the 2×2 gcd/lcm transform only moves diagonal
    // mass around.
    let r = (0..kmax).take_while(|&i| !a[(i, i)].is_zero()).count();
    for i in 0..r {
        for j in i + 1..r {
            let di = a[(i, i)].clone();
            let dj = a[(j, j)].clone();
            if (&dj % &di).is_zero() {
                continue;
            }
            let e = di.extended_gcd(&dj);
            let (g, s, t) = (e.gcd, e.x, e.y);
            let bi = &di / &g;
            let bj = &dj / &g;
            // rows: [[s, t], [-dj/g, di/g]]; cols: [[1, -t*dj/g], [1, s*di/g]]
            a.transform_rows(i, j, &s, &t, &(-&bj), &bi);
            u.transform_rows(i, j, &s, &t, &(-&bj), &bi);
            let q = -(&t * &bj);
            let p = &s * &bi;
            a.transform_cols(i, j, &BigInt::from(1), &BigInt::from(1), &q, &p);
            v.transform_cols(i, j, &BigInt::from(1), &BigInt::from(1), &q, &p);
        }
    }

    // Nonnegative diagonal.
    for i in 0..kmax {
        if a[(i, i)].is_negative() {
            a.negate_row(i);
            u.negate_row(i);
        }
    }

    debug_assert_eq!(u.mul(m).mul(&v), a, "snf transform identity violated");
    SnfResult { d: a, u, v }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag_of(d: &IntMatrix) -> Vec<i64> {
        (0..d.rows().min(d.cols()))
            .map(|i| i64::try_from(&d[(i, i)]).unwrap())
            .collect()
    }

    #[test]
    fn identity_2x2() {
        let m = IntMatrix::identity(2);
        let snf = smith_normal_form(&m);
        assert_eq!(diag_of(&snf.d), vec![1, 1]);
    }

    #[test]
    fn already_diagonal_with_zero() {
        let m = IntMatrix::from_rows(&[vec![1, 0], vec![0, 0]]);
        let snf = smith_normal_form(&m);
        assert_eq!(diag_of(&snf.d), vec![1, 0]);
    }

    /// Hand row/column reduction oracle: gcd of all entries is 2, |det| = 8,
    /// so the diagonal is forced to be (2, 4).
    #[test]
    fn two_by_two_reduction() {
        let m = IntMatrix::from_rows(&[vec![2, 4], vec![6, 8]]);
        let snf = smith_normal_form(&m);
        assert_eq!(diag_of(&snf.d), vec![2, 4]);
        assert_eq!(snf.u.mul(&m).mul(&snf.v), snf.d);
    }

    #[test]
    fn divisibility_chain_from_coprime_diagonal() {
        let m = IntMatrix::from_rows(&[vec![2, 0], vec![0, 3]]);
        let snf = smith_normal_form(&m);
        assert_eq!(diag_of(&snf.d), vec![1, 6]);
    }

    #[test]
    fn empty_matrix() {
        let m = IntMatrix::zeros(0, 0);
        let snf = smith_normal_form(&m);
        assert_eq!(snf.d.rows(), 0);
        let m = IntMatrix::zeros(0, 3);
        let snf = smith_normal_form(&m);
        assert_eq!(snf.v, IntMatrix::identity(3));
    }

    #[test]
    fn transforms_are_unimodular() {
        let m = IntMatrix::from_rows(&[vec![4, -2, 7], vec![0, 3, 1], vec![5, 5, 5]]);
        let snf = smith_normal_form(&m);
        assert_eq!(snf.u.det_abs(), BigInt::from(1));
        assert_eq!(snf.v.det_abs(), BigInt::from(1));
        assert_eq!(snf.u.mul(&m).mul(&snf.v), snf.d);
    }
}
