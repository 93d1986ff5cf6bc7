//! Smith normal form and the exact linear solvers built on it.
//!
//! The decomposition tracks both transforms and their inverses, so
//! invertibility is witnessed rather than asserted. Pivoting always picks the
//! entry of smallest nonzero magnitude, which keeps integer growth tame at
//! the scales this library targets. Over a field the same routine degenerates
//! to Gauss elimination and the diagonal becomes the rank normal form.

use crate::matrix::Matrix;
use crate::ring::{Ring, Scalar};

/// U * A * V = S with S diagonal, d_i | d_{i+1}, and U, V invertible
/// (inverses carried along as witnesses).
#[derive(Clone, Debug)]
pub struct SmithDecomposition {
    pub s: Matrix,
    pub u: Matrix,
    pub u_inv: Matrix,
    pub v: Matrix,
    pub v_inv: Matrix,
    pub divisors: Vec<Scalar>,
    pub rank: usize,
}

impl SmithDecomposition {
    /// Re-verify every identity the decomposition promises. Test helper.
    pub fn verify(&self, a: &Matrix) -> bool {
        let ring = a.ring();
        if self.u.mul(a).mul(&self.v) != self.s {
            return false;
        }
        if !self.u.mul(&self.u_inv).is_identity() || !self.u_inv.mul(&self.u).is_identity() {
            return false;
        }
        if !self.v.mul(&self.v_inv).is_identity() || !self.v_inv.mul(&self.v).is_identity() {
            return false;
        }
        for i in 0..self.s.rows() {
            for j in 0..self.s.cols() {
                if i != j && !ring.is_zero(self.s.get(i, j)) {
                    return false;
                }
            }
        }
        for w in self.divisors.windows(2) {
            if !ring.divides(&w[0], &w[1]) {
                return false;
            }
        }
        self.divisors.len() == self.rank
            && self.divisors.iter().all(|d| !ring.is_zero(d))
    }
}

struct Reducer {
    ring: Ring,
    s: Matrix,
    u: Matrix,
    u_inv: Matrix,
    v: Matrix,
    v_inv: Matrix,
}

impl Reducer {
    fn swap_rows(&mut self, a: usize, b: usize) {
        self.s.swap_rows(a, b);
        self.u.swap_rows(a, b);
        self.u_inv.swap_cols(a, b);
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        self.s.swap_cols(a, b);
        self.v.swap_cols(a, b);
        self.v_inv.swap_rows(a, b);
    }

    /// row_i += c * row_j (on S), mirrored on U and its inverse.
    fn add_row(&mut self, i: usize, j: usize, c: &Scalar) {
        self.s.add_row_multiple(i, j, c);
        self.u.add_row_multiple(i, j, c);
        self.u_inv.add_col_multiple(j, i, &self.ring.neg(c));
    }

    /// col_i += c * col_j (on S), mirrored on V and its inverse.
    fn add_col(&mut self, i: usize, j: usize, c: &Scalar) {
        self.s.add_col_multiple(i, j, c);
        self.v.add_col_multiple(i, j, c);
        self.v_inv.add_row_multiple(j, i, &self.ring.neg(c));
    }

    /// row_i *= unit, mirrored.
    fn scale_row(&mut self, i: usize, unit: &Scalar) {
        self.s.scale_row(i, unit);
        self.u.scale_row(i, unit);
        self.u_inv.scale_col(i, &self.ring.inv(unit));
    }

    fn best_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.s.rows() {
            for j in t..self.s.cols() {
                let e = self.s.get(i, j);
                if self.ring.is_zero(e) {
                    continue;
                }
                match best {
                    None => best = Some((i, j)),
                    Some((bi, bj)) => {
                        if self.ring.pivot_key(e) < self.ring.pivot_key(self.s.get(bi, bj)) {
                            best = Some((i, j));
                        }
                    }
                }
            }
        }
        best
    }
}

pub fn smith_normal_form(a: &Matrix) -> SmithDecomposition {
    let ring = a.ring();
    let (m, n) = (a.rows(), a.cols());
    let mut r = Reducer {
        ring,
        s: a.clone(),
        u: Matrix::identity(ring, m),
        u_inv: Matrix::identity(ring, m),
        v: Matrix::identity(ring, n),
        v_inv: Matrix::identity(ring, n),
    };

    let mut t = 0;
    while t < m.min(n) {
        if r.best_pivot(t).is_none() {
            break;
        }
        'pivot: loop {
            let (pi, pj) = r.best_pivot(t).expect("pivot vanished");
            r.swap_rows(t, pi);
            r.swap_cols(t, pj);
            let pivot = r.s.get(t, t).clone();
            for i in t + 1..m {
                if ring.is_zero(r.s.get(i, t)) {
                    continue;
                }
                let q = ring.round_div(r.s.get(i, t), &pivot);
                if !ring.is_zero(&q) {
                    r.add_row(i, t, &ring.neg(&q));
                }
                if !ring.is_zero(r.s.get(i, t)) {
                    // leftover remainder is strictly smaller; restart with it
                    continue 'pivot;
                }
            }
            for j in t + 1..n {
                if ring.is_zero(r.s.get(t, j)) {
                    continue;
                }
                let q = ring.round_div(r.s.get(t, j), &pivot);
                if !ring.is_zero(&q) {
                    r.add_col(j, t, &ring.neg(&q));
                }
                if !ring.is_zero(r.s.get(t, j)) {
                    continue 'pivot;
                }
            }
            if ring == Ring::Int {
                // divisibility sweep: drag any non-multiple into the working row
                let mut bad = None;
                'scan: for i in t + 1..m {
                    for j in t + 1..n {
                        if !ring.divides(&pivot, r.s.get(i, j)) {
                            bad = Some(i);
                            break 'scan;
                        }
                    }
                }
                if let Some(i) = bad {
                    r.add_row(t, i, &ring.one());
                    continue 'pivot;
                }
            }
            break;
        }
        t += 1;
    }

    // canonical pivots: positive integers, unit 1 over fields
    for i in 0..m.min(n) {
        let d = r.s.get(i, i).clone();
        if !ring.is_zero(&d) {
            let unit = ring.normalizing_unit(&d);
            if !ring.is_one(&unit) {
                r.scale_row(i, &unit);
            }
        }
    }

    let divisors: Vec<Scalar> = (0..m.min(n))
        .map(|i| r.s.get(i, i).clone())
        .filter(|d| !ring.is_zero(d))
        .collect();
    let rank = divisors.len();
    SmithDecomposition {
        s: r.s,
        u: r.u,
        u_inv: r.u_inv,
        v: r.v,
        v_inv: r.v_inv,
        divisors,
        rank,
    }
}

/// Solve A·X = B exactly. `None` means no solution exists over the ring.
pub fn solve_matrix_equation(a: &Matrix, b: &Matrix) -> Option<Matrix> {
    assert_eq!(a.rows(), b.rows(), "dimension mismatch: A is {}x{}, B has {} rows",
        a.rows(), a.cols(), b.rows());
    let ring = a.ring();
    if ring.is_field() {
        return solve_field(a, b);
    }
    let dec = smith_normal_form(a);
    let y = dec.u.mul(b);
    let mut x_hat = Matrix::zero(ring, a.cols(), b.cols());
    for i in 0..y.rows() {
        for j in 0..y.cols() {
            let yij = y.get(i, j);
            if i < dec.rank {
                let d = &dec.divisors[i];
                let q = ring.exact_div(yij, d)?;
                x_hat.set(i, j, q);
            } else if !ring.is_zero(yij) {
                return None;
            }
        }
    }
    Some(dec.v.mul(&x_hat))
}

/// Columns form a generating set (a basis, over these rings) of {x : A·x = 0}.
pub fn kernel_basis(a: &Matrix) -> Matrix {
    let ring = a.ring();
    if ring.is_field() {
        return kernel_field(a);
    }
    let dec = smith_normal_form(a);
    dec.v.submatrix(0, a.cols(), dec.rank, a.cols())
}

// field-only Gauss elimination fast paths

fn rref(a: &Matrix) -> (Matrix, Vec<usize>) {
    let ring = a.ring();
    let mut m = a.clone();
    let (rows, cols) = (m.rows(), m.cols());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !ring.is_zero(m.get(i, c))) else {
            continue;
        };
        m.swap_rows(r, p);
        let inv = ring.inv(m.get(r, c));
        m.scale_row(r, &inv);
        for i in 0..rows {
            if i != r && !ring.is_zero(m.get(i, c)) {
                let f = ring.neg(m.get(i, c));
                m.add_row_multiple(i, r, &f);
            }
        }
        pivots.push(c);
        r += 1;
    }
    (m, pivots)
}

fn solve_field(a: &Matrix, b: &Matrix) -> Option<Matrix> {
    let ring = a.ring();
    let aug = Matrix::hstack(&[a, b]);
    let (e, pivots) = rref(&aug);
    // any pivot landing in the B block kills solvability
    if pivots.iter().any(|&c| c >= a.cols()) {
        return None;
    }
    let mut x = Matrix::zero(ring, a.cols(), b.cols());
    for (r, &c) in pivots.iter().enumerate() {
        for j in 0..b.cols() {
            x.set(c, j, e.get(r, a.cols() + j).clone());
        }
    }
    Some(x)
}

fn kernel_field(a: &Matrix) -> Matrix {
    let ring = a.ring();
    let (e, pivots) = rref(a);
    let free: Vec<usize> = (0..a.cols()).filter(|c| !pivots.contains(c)).collect();
    let mut k = Matrix::zero(ring, a.cols(), free.len());
    for (j, &fc) in free.iter().enumerate() {
        k.set(fc, j, ring.one());
        for (r, &pc) in pivots.iter().enumerate() {
            k.set(pc, j, ring.neg(e.get(r, fc)));
        }
    }
    k
}
