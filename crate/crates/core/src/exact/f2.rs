//! Dense matrices over the two-element field.

use super::int_matrix::IntMatrix;
use serde::{Deserialize, Serialize};
use std::fmt;

/// A `rows × cols` matrix over 𝔽₂ with entries stored as 0/1 bytes.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct F2Matrix {
    rows: usize,
    cols: usize,
    data: Vec<u8>,
}

impl F2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<u8>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        let data = rows
            .iter()
            .flat_map(|row| row.iter().map(|&b| b & 1))
            .collect();
        Self {
            rows: r,
            cols: c,
            data,
        }
    }

    /// Reduction of an integer matrix mod 2.
    pub fn from_int_matrix(m: &IntMatrix) -> Self {
        Self {
            rows: m.rows(),
            cols: m.cols(),
            data: m.mod2_entries(),
        }
    }

    pub fn from_columns(cols: &[Vec<u8>], rows: usize) -> Self {
        let c = cols.len();
        let mut m = Self::zeros(rows, c);
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, &b) in col.iter().enumerate() {
                m.set(i, j, b);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u8) {
        self.data[i * self.cols + j] = v & 1;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&b| b == 0)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = 0u8;
                for k in 0..self.cols {
                    acc ^= self.get(i, k) & other.get(k, j);
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a ^ b)
            .collect();
        Self {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn apply(&self, v: &[u8]) -> Vec<u8> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| (0..self.cols).fold(0u8, |acc, j| acc ^ (self.get(i, j) & v[j])))
            .collect()
    }

    /// Reduced row echelon form together with the pivot column per pivot
    /// row, in order.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&i| m.get(i, col) == 1) else {
                continue;
            };
            if p != row {
                for j in 0..m.cols {
                    let a = m.get(row, j);
                    let b = m.get(p, j);
                    m.set(row, j, b);
                    m.set(p, j, a);
                }
            }
            for i in 0..m.rows {
                if i != row && m.get(i, col) == 1 {
                    for j in 0..m.cols {
                        let v = m.get(i, j) ^ m.get(row, j);
                        m.set(i, j, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Dimension of the cokernel `F2^rows / im`.
    pub fn quotient_dim(&self) -> usize {
        self.rows - self.rank()
    }

    /// Canonical kernel basis from the reduced echelon form: one vector per
    /// free column, with a 1 in the free position and pivot rows filled in.
    pub fn kernel_basis(&self) -> Vec<Vec<u8>> {
        let (r, pivots) = self.rref();
        let pivot_set: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (row, &col) in pivots.iter().enumerate() {
                v[col] = Some(row);
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set[free].is_some() {
                continue;
            }
            let mut vec = vec![0u8; self.cols];
            vec[free] = 1;
            for (col, slot) in pivot_set.iter().enumerate() {
                if let Some(row) = slot {
                    vec[col] = r.get(*row, free);
                }
            }
            basis.push(vec);
        }
        basis
    }

    pub fn kernel_dim(&self) -> usize {
        self.cols - self.rank()
    }

    /// Solves `self * x = b` if consistent.
    pub fn solve(&self, b: &[u8]) -> Option<Vec<u8>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Self::zeros(self.rows, self.cols + 1);
        for (i, &bi) in b.iter().enumerate() {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, self.cols, bi);
        }
        let (r, pivots) = aug.rref();
        // Inconsistent if a pivot lands in the augmented column.
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![0u8; self.cols];
        for (row, &col) in pivots.iter().enumerate() {
            x[col] = r.get(row, self.cols);
        }
        Some(x)
    }
}

impl fmt::Debug for F2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "F2Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(""))?;
        }
        write!(f, "]")
    }
}
