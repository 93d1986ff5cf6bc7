//! Dense exact matrices over the active ring.
//!
//! Row-major storage; every entry stays in canonical form (lowest terms,
//! reduced residues, arbitrary-precision integers). Zero-row and zero-column
//! matrices are first-class: boundary degrees of complexes produce them
//! constantly.

use crate::ring::{Ring, Scalar};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    ring: Ring,
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn zero(ring: Ring, rows: usize, cols: usize) -> Matrix {
        Matrix {
            ring,
            rows,
            cols,
            entries: vec![ring.zero(); rows * cols],
        }
    }

    pub fn identity(ring: Ring, n: usize) -> Matrix {
        let mut m = Matrix::zero(ring, n, n);
        for i in 0..n {
            m.set(i, i, ring.one());
        }
        m
    }

    pub fn from_fn(ring: Ring, rows: usize, cols: usize, f: impl Fn(usize, usize) -> Scalar) -> Matrix {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix { ring, rows, cols, entries }
    }

    pub fn from_rows_i64(ring: Ring, rows: &[Vec<i64>]) -> Matrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix rows");
        Matrix::from_fn(ring, r, c, |i, j| ring.from_i64(rows[i][j]))
    }

    /// A 1x1 matrix.
    pub fn scalar(ring: Ring, v: i64) -> Matrix {
        Matrix::from_rows_i64(ring, &[vec![v]])
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| self.ring.is_zero(e))
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    if i == j {
                        self.ring.is_one(self.get(i, j))
                    } else {
                        self.ring.is_zero(self.get(i, j))
                    }
                })
            })
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch in add");
        Matrix::from_fn(self.ring, self.rows, self.cols, |i, j| {
            self.ring.add(self.get(i, j), other.get(i, j))
        })
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Matrix {
        Matrix::from_fn(self.ring, self.rows, self.cols, |i, j| self.ring.neg(self.get(i, j)))
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix::from_fn(self.ring, self.rows, self.cols, |i, j| self.ring.mul(c, self.get(i, j)))
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in mul: {}x{} * {}x{}",
            self.rows, self.cols, other.rows, other.cols);
        let ring = self.ring;
        Matrix::from_fn(ring, self.rows, other.cols, |i, j| {
            let mut acc = ring.zero();
            for k in 0..self.cols {
                let a = self.get(i, k);
                if ring.is_zero(a) {
                    continue;
                }
                acc = ring.add(&acc, &ring.mul(a, other.get(k, j)));
            }
            acc
        })
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.ring, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn hstack(parts: &[&Matrix]) -> Matrix {
        assert!(!parts.is_empty());
        let ring = parts[0].ring;
        let rows = parts[0].rows;
        assert!(parts.iter().all(|m| m.rows == rows && m.ring == ring));
        let cols = parts.iter().map(|m| m.cols).sum();
        let mut out = Matrix::zero(ring, rows, cols);
        let mut off = 0;
        for m in parts {
            for i in 0..rows {
                for j in 0..m.cols {
                    out.set(i, off + j, m.get(i, j).clone());
                }
            }
            off += m.cols;
        }
        out
    }

    pub fn vstack(parts: &[&Matrix]) -> Matrix {
        assert!(!parts.is_empty());
        let ring = parts[0].ring;
        let cols = parts[0].cols;
        assert!(parts.iter().all(|m| m.cols == cols && m.ring == ring));
        let rows = parts.iter().map(|m| m.rows).sum();
        let mut out = Matrix::zero(ring, rows, cols);
        let mut off = 0;
        for m in parts {
            for i in 0..m.rows {
                for j in 0..cols {
                    out.set(off + i, j, m.get(i, j).clone());
                }
            }
            off += m.rows;
        }
        out
    }

    pub fn block_diag(ring: Ring, parts: &[&Matrix]) -> Matrix {
        let rows = parts.iter().map(|m| m.rows).sum();
        let cols = parts.iter().map(|m| m.cols).sum();
        let mut out = Matrix::zero(ring, rows, cols);
        let (mut ro, mut co) = (0, 0);
        for m in parts {
            assert_eq!(m.ring, ring);
            for i in 0..m.rows {
                for j in 0..m.cols {
                    out.set(ro + i, co + j, m.get(i, j).clone());
                }
            }
            ro += m.rows;
            co += m.cols;
        }
        out
    }

    /// Assemble from a grid of blocks; `grid[i][j]` sits at block-row i,
    /// block-column j. Row counts must agree along block-rows and column
    /// counts along block-columns.
    pub fn from_blocks(ring: Ring, grid: &[Vec<&Matrix>]) -> Matrix {
        assert!(!grid.is_empty() && !grid[0].is_empty());
        let row_heights: Vec<usize> = grid.iter().map(|r| r[0].rows).collect();
        let col_widths: Vec<usize> = grid[0].iter().map(|m| m.cols).collect();
        for (bi, row) in grid.iter().enumerate() {
            assert_eq!(row.len(), col_widths.len(), "ragged block grid");
            for (bj, m) in row.iter().enumerate() {
                assert_eq!(m.rows, row_heights[bi], "block row height mismatch");
                assert_eq!(m.cols, col_widths[bj], "block col width mismatch");
            }
        }
        let rows = row_heights.iter().sum();
        let cols = col_widths.iter().sum();
        let mut out = Matrix::zero(ring, rows, cols);
        let mut ro = 0;
        for (bi, row) in grid.iter().enumerate() {
            let mut co = 0;
            for (bj, m) in row.iter().enumerate() {
                for i in 0..m.rows {
                    for j in 0..m.cols {
                        out.set(ro + i, co + j, m.get(i, j).clone());
                    }
                }
                co += col_widths[bj];
            }
            ro += row_heights[bi];
        }
        out
    }

    pub fn submatrix(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> Matrix {
        assert!(r0 <= r1 && r1 <= self.rows && c0 <= c1 && c1 <= self.cols);
        Matrix::from_fn(self.ring, r1 - r0, c1 - c0, |i, j| self.get(r0 + i, c0 + j).clone())
    }

    pub fn column(&self, j: usize) -> Matrix {
        self.submatrix(0, self.rows, j, j + 1)
    }

    pub fn select_columns(&self, idx: &[usize]) -> Matrix {
        Matrix::from_fn(self.ring, self.rows, idx.len(), |i, j| self.get(i, idx[j]).clone())
    }

    /// Drop columns that are entirely zero.
    pub fn drop_zero_columns(&self) -> Matrix {
        let keep: Vec<usize> = (0..self.cols)
            .filter(|&j| (0..self.rows).any(|i| !self.ring.is_zero(self.get(i, j))))
            .collect();
        self.select_columns(&keep)
    }

    // in-place elementary operations (used by the normal-form routine)

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub(crate) fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row_i += c * row_j
    pub(crate) fn add_row_multiple(&mut self, i: usize, j: usize, c: &Scalar) {
        assert_ne!(i, j);
        for k in 0..self.cols {
            let v = self.ring.add(self.get(i, k), &self.ring.mul(c, self.get(j, k)));
            self.set(i, k, v);
        }
    }

    /// col_i += c * col_j
    pub(crate) fn add_col_multiple(&mut self, i: usize, j: usize, c: &Scalar) {
        assert_ne!(i, j);
        for k in 0..self.rows {
            let v = self.ring.add(self.get(k, i), &self.ring.mul(c, self.get(k, j)));
            self.set(k, i, v);
        }
    }

    /// row_i *= u (u a unit)
    pub(crate) fn scale_row(&mut self, i: usize, u: &Scalar) {
        for k in 0..self.cols {
            let v = self.ring.mul(u, self.get(i, k));
            self.set(i, k, v);
        }
    }

    /// col_j *= u (u a unit)
    pub(crate) fn scale_col(&mut self, j: usize, u: &Scalar) {
        for k in 0..self.rows {
            let v = self.ring.mul(u, self.get(k, j));
            self.set(k, j, v);
        }
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {} [", self.rows, self.cols, self.ring)?;
        for i in 0..self.rows {
            write!(f, "  [")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            writeln!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}
