//! Dense integer matrices with arbitrary-precision entries.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

/// A dense `rows × cols` matrix over ℤ, stored row-major.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from rows of machine integers. Panics if the rows are
    /// ragged.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        let data = rows
            .iter()
            .flat_map(|row| row.iter().map(|&e| BigInt::from(e)))
            .collect();
        Self {
            rows: r,
            cols: c,
            data,
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        Self::from_fn(self.rows, other.cols, |i, j| {
            (0..self.cols).map(|k| &self[(i, k)] * &other[(k, j)]).sum()
        })
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] + &other[(i, j)])
    }

    pub fn neg(&self) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| -&self[(i, j)])
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| c * &self[(i, j)])
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows);
        Self::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                other[(i, j - self.cols)].clone()
            }
        })
    }

    /// Vertical concatenation.
    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols);
        Self::from_fn(self.rows + other.rows, self.cols, |i, j| {
            if i < self.rows {
                self[(i, j)].clone()
            } else {
                other[(i - self.rows, j)].clone()
            }
        })
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    /// Matrix–vector product.
    pub fn apply(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| &self[(i, j)] * &v[j]).sum())
            .collect()
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            let ia = a * self.cols + j;
            let ib = b * self.cols + j;
            self.data.swap(ia, ib);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            let ia = i * self.cols + a;
            let ib = i * self.cols + b;
            self.data.swap(ia, ib);
        }
    }

    /// `row[a] += c * row[b]`
    pub fn add_row_multiple(&mut self, a: usize, b: usize, c: &BigInt) {
        for j in 0..self.cols {
            let v = &self[(b, j)] * c;
            self[(a, j)] += v;
        }
    }

    /// `col[a] += c * col[b]`
    pub fn add_col_multiple(&mut self, a: usize, b: usize, c: &BigInt) {
        for i in 0..self.rows {
            let v = &self[(i, b)] * c;
            self[(i, a)] += v;
        }
    }

    pub fn negate_row(&mut self, a: usize) {
        for j in 0..self.cols {
            let v = -&self[(a, j)];
            self[(a, j)] = v;
        }
    }

    /// Replaces rows a and b by the linear combinations given by the 2×2
    /// matrix `[[p, q], [r, s]]` acting from the left.
    pub fn transform_rows(
        &mut self,
        a: usize,
        b: usize,
        p: &BigInt,
        q: &BigInt,
        r: &BigInt,
        s: &BigInt,
    ) {
        for j in 0..self.cols {
            let va = self[(a, j)].clone();
            let vb = self[(b, j)].clone();
            self[(a, j)] = p * &va + q * &vb;
            self[(b, j)] = r * &va + s * &vb;
        }
    }

    /// Column analogue of [`IntMatrix::transform_rows`]: the 2×2 matrix
    /// `[[p, r], [q, s]]` acts from the right on columns a and b.
    pub fn transform_cols(
        &mut self,
        a: usize,
        b: usize,
        p: &BigInt,
        q: &BigInt,
        r: &BigInt,
        s: &BigInt,
    ) {
        for i in 0..self.rows {
            let va = self[(i, a)].clone();
            let vb = self[(i, b)].clone();
            self[(i, a)] = p * &va + q * &vb;
            self[(i, b)] = r * &va + s * &vb;
        }
    }

    /// Reduction mod 2 of every entry, as 0/1 bytes.
    pub fn mod2_entries(&self) -> Vec<u8> {
        self.data
            .iter()
            .map(|e| if (e % 2u8).is_zero() { 0 } else { 1 })
            .collect()
    }

    /// Absolute value of the determinant, via the Smith normal form
    /// diagonal. Panics on non-square input.
    pub fn det_abs(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let snf = super::smith_normal_form(self);
        (0..self.rows).map(|i| snf.d[(i, i)].clone()).product()
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self[(i, j)].to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self[(i, j)].to_string()).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

/// True if the entry is strictly smaller in absolute value, or equal and the
/// position is earlier in row-major order. Used by the deterministic pivot
/// rule.
pub(crate) fn better_pivot(cand: (&BigInt, usize, usize), best: (&BigInt, usize, usize)) -> bool {
    let (cv, ci, cj) = cand;
    let (bv, bi, bj) = best;
    match cv.abs().cmp(&bv.abs()) {
        std::cmp::Ordering::Less => true,
        std::cmp::Ordering::Greater => false,
        std::cmp::Ordering::Equal => (ci, cj) < (bi, bj),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_and_identity() {
        let a = IntMatrix::from_rows(&[vec![1, 2], vec![3, 4]]);
        let i = IntMatrix::identity(2);
        assert_eq!(a.mul(&i), a);
        assert_eq!(i.mul(&a), a);
    }

    #[test]
    fn transpose_involutive() {
        let a = IntMatrix::from_rows(&[vec![1, 2, 3], vec![4, 5, 6]]);
        assert_eq!(a.transpose().transpose(), a);
    }

    #[test]
    fn empty_matrices_allowed() {
        let a = IntMatrix::zeros(0, 3);
        let b = IntMatrix::zeros(3, 0);
        assert_eq!(a.mul(&b).rows(), 0);
        assert!(a.is_zero());
    }

    #[test]
    fn det_abs_small() {
        let a = IntMatrix::from_rows(&[vec![2, 4], vec![6, 8]]);
        assert_eq!(a.det_abs(), BigInt::from(8));
    }
}
