//! Dense exact matrices with deterministic elimination.
//!
//! Convention used across the whole crate: vectors are rows, a linear map
//! `U -> W` is a `dim U x dim W` matrix, and "f then g" is the product `F * G`.
//! Pivoting is deterministic (leftmost pivot column, first nonzero row), so
//! every basis produced downstream is reproducible bit for bit.

use super::scalar::{FieldKind, Scalar};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    pub field: FieldKind,
    data: Vec<Scalar>,
}

impl Mat {
    pub fn zeros(field: FieldKind, rows: usize, cols: usize) -> Mat {
        Mat {
            rows,
            cols,
            field,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: FieldKind, n: usize) -> Mat {
        let mut m = Mat::zeros(field, n, n);
        for i in 0..n {
            m[(i, i)] = field.one();
        }
        m
    }

    pub fn from_fn(field: FieldKind, rows: usize, cols: usize, f: impl Fn(usize, usize) -> Scalar) -> Mat {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, field, data }
    }

    pub fn from_rows(field: FieldKind, cols: usize, rows: Vec<Vec<Scalar>>) -> Mat {
        let r = rows.len();
        let mut data = Vec::with_capacity(r * cols);
        for row in rows {
            assert_eq!(row.len(), cols);
            data.extend(row);
        }
        Mat { rows: r, cols, field, data }
    }

    pub fn from_i64(field: FieldKind, rows: &[&[i64]]) -> Mat {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        Mat::from_fn(field, r, c, |i, j| field.from_i64(rows[i][j]))
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vec(&self, i: usize) -> Vec<Scalar> {
        self.row(i).to_vec()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.field, self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn scale(&self, c: &Scalar) -> Mat {
        Mat::from_fn(self.field, self.rows, self.cols, |i, j| &self[(i, j)] * c)
    }

    /// Vertical stack: `self` on top of `other`.
    pub fn vstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Mat { rows: self.rows + other.rows, cols: self.cols, field: self.field, data }
    }

    pub fn hstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.rows, other.rows);
        Mat::from_fn(self.field, self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                other[(i, j - self.cols)].clone()
            }
        })
    }

    /// Builds a block matrix from a grid of blocks. Row/column dimensions must
    /// be consistent along each band.
    pub fn block(field: FieldKind, grid: &[Vec<&Mat>]) -> Mat {
        if grid.is_empty() || grid[0].is_empty() {
            return Mat::zeros(field, 0, 0);
        }
        let row_dims: Vec<usize> = grid.iter().map(|band| band[0].rows).collect();
        let col_dims: Vec<usize> = grid[0].iter().map(|b| b.cols).collect();
        let rows: usize = row_dims.iter().sum();
        let cols: usize = col_dims.iter().sum();
        let mut m = Mat::zeros(field, rows, cols);
        let mut r0 = 0;
        for (bi, band) in grid.iter().enumerate() {
            assert_eq!(band.len(), col_dims.len());
            let mut c0 = 0;
            for (bj, blk) in band.iter().enumerate() {
                assert_eq!(blk.rows, row_dims[bi], "block row mismatch at {bi},{bj}");
                assert_eq!(blk.cols, col_dims[bj], "block col mismatch at {bi},{bj}");
                for i in 0..blk.rows {
                    for j in 0..blk.cols {
                        m[(r0 + i, c0 + j)] = blk[(i, j)].clone();
                    }
                }
                c0 += blk.cols;
            }
            r0 += row_dims[bi];
        }
        m
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Mat {
        Mat::from_fn(self.field, rows.len(), cols.len(), |i, j| {
            self[(rows[i], cols[j])].clone()
        })
    }

    /// Applies a row vector on the left: `v * self`.
    pub fn apply_row(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.rows);
        let mut out = vec![self.field.zero(); self.cols];
        for (i, vi) in v.iter().enumerate() {
            if vi.is_zero() {
                continue;
            }
            for j in 0..self.cols {
                let x = &self[(i, j)];
                if !x.is_zero() {
                    out[j] = out[j].clone() + vi.clone() * x.clone();
                }
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Reduced row-echelon form with the accumulated row transform:
    /// `transform * self = reduced`, `transform` invertible.
    pub fn rref(&self) -> Rref {
        let f = self.field;
        let mut red = self.clone();
        let mut tr = Mat::identity(f, self.rows);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            // first nonzero row at or below r
            let Some(pr) = (r..self.rows).find(|&i| !red[(i, c)].is_zero()) else {
                continue;
            };
            red.swap_rows(r, pr);
            tr.swap_rows(r, pr);
            let inv = red[(r, c)].inv();
            red.scale_row(r, &inv);
            tr.scale_row(r, &inv);
            for i in 0..self.rows {
                if i != r && !red[(i, c)].is_zero() {
                    let factor = red[(i, c)].clone();
                    red.sub_scaled_row(i, r, &factor);
                    tr.sub_scaled_row(i, r, &factor);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref { rank: r, pivots, reduced: red, transform: tr }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn scale_row(&mut self, r: usize, c: &Scalar) {
        for j in 0..self.cols {
            let idx = r * self.cols + j;
            if !self.data[idx].is_zero() {
                self.data[idx] = self.data[idx].clone() * c.clone();
            }
        }
    }

    fn sub_scaled_row(&mut self, dst: usize, src: usize, c: &Scalar) {
        for j in 0..self.cols {
            let s = self.data[src * self.cols + j].clone();
            if !s.is_zero() {
                let idx = dst * self.cols + j;
                self.data[idx] = self.data[idx].clone() - c.clone() * s;
            }
        }
    }

    /// Left kernel: basis (as rows) of `{ v : v * self = 0 }`, canonical under
    /// deterministic elimination.
    pub fn left_kernel(&self) -> Mat {
        self.transpose().right_kernel_cols().transpose()
    }

    /// Right kernel of `self * x = 0` with solutions as columns.
    fn right_kernel_cols(&self) -> Mat {
        let rr = self.rref();
        let f = self.field;
        let free: Vec<usize> = (0..self.cols).filter(|c| !rr.pivots.contains(c)).collect();
        let mut k = Mat::zeros(f, self.cols, free.len());
        for (kcol, &fc) in free.iter().enumerate() {
            k[(fc, kcol)] = f.one();
            for (prow, &pc) in rr.pivots.iter().enumerate() {
                k[(pc, kcol)] = -rr.reduced[(prow, fc)].clone();
            }
        }
        k
    }

    /// Solves `x * self = rhs` for a single row vector; `None` if inconsistent.
    pub fn solve_row(&self, rhs: &[Scalar]) -> Option<Vec<Scalar>> {
        let sol = solve(&self.transpose(), &Mat::from_rows(self.field, rhs.len(), vec![rhs.to_vec()]).transpose())?;
        Some(sol.particular.transpose().row_vec(0))
    }

    pub fn inverse(&self) -> Option<Mat> {
        assert_eq!(self.rows, self.cols);
        let rr = self.rref();
        if rr.rank == self.rows {
            Some(rr.transform)
        } else {
            None
        }
    }
}

impl std::ops::Index<(usize, usize)> for Mat {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &Mat {
    type Output = Mat;
    fn mul(self, rhs: &Mat) -> Mat {
        assert_eq!(self.cols, rhs.rows, "matrix product dimension mismatch");
        let f = self.field;
        let mut out = Mat::zeros(f, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] = out[(i, j)].clone() + a.clone() * b.clone();
                    }
                }
            }
        }
        out
    }
}

impl Add for &Mat {
    type Output = Mat;
    fn add(self, rhs: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Mat::from_fn(self.field, self.rows, self.cols, |i, j| &self[(i, j)] + &rhs[(i, j)])
    }
}

impl Sub for &Mat {
    type Output = Mat;
    fn sub(self, rhs: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Mat::from_fn(self.field, self.rows, self.cols, |i, j| {
            self[(i, j)].clone() - rhs[(i, j)].clone()
        })
    }
}

impl Neg for &Mat {
    type Output = Mat;
    fn neg(self) -> Mat {
        Mat::from_fn(self.field, self.rows, self.cols, |i, j| -self[(i, j)].clone())
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} over {}", self.rows, self.cols, self.field)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

pub struct Rref {
    pub rank: usize,
    pub pivots: Vec<usize>,
    pub reduced: Mat,
    pub transform: Mat,
}

pub struct LinSolution {
    /// One solution of `a * x = b`, same shape as `x`.
    pub particular: Mat,
    /// Columns span `{ x : a * x = 0 }`.
    pub kernel: Mat,
}

/// Solves `a * x = b` exactly (column unknowns). Returns `None` when some
/// column of `b` is outside the column span of `a`.
pub fn solve(a: &Mat, b: &Mat) -> Option<LinSolution> {
    assert_eq!(a.rows, b.rows, "solve: row mismatch");
    let rr = a.rref();
    let c = &rr.transform * b;
    // rows past the rank must vanish
    for i in rr.rank..a.rows {
        for j in 0..c.cols {
            if !c[(i, j)].is_zero() {
                return None;
            }
        }
    }
    let f = a.field;
    let mut part = Mat::zeros(f, a.cols, b.cols);
    for (prow, &pc) in rr.pivots.iter().enumerate() {
        for j in 0..c.cols {
            part[(pc, j)] = c[(prow, j)].clone();
        }
    }
    Some(LinSolution { particular: part, kernel: a.right_kernel_cols() })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldKind {
        FieldKind::Q
    }

    #[test]
    fn rref_rank_one() {
        // second row is a multiple of the first
        let m = Mat::from_i64(q(), &[&[1, 2], &[2, 4]]);
        let rr = m.rref();
        assert_eq!(rr.rank, 1);
        assert_eq!(&rr.transform * &m, rr.reduced);
    }

    #[test]
    fn rref_identity() {
        let m = Mat::identity(q(), 3);
        let rr = m.rref();
        assert_eq!(rr.rank, 3);
        assert_eq!(rr.reduced, Mat::identity(q(), 3));
    }

    #[test]
    fn rref_transform_invertible() {
        let m = Mat::from_i64(q(), &[&[0, 1, 3], &[0, 2, 6], &[5, 1, 0], &[5, 2, 3]]);
        let rr = m.rref();
        assert!(rr.transform.inverse().is_some());
        assert_eq!(&rr.transform * &m, rr.reduced);
    }

    #[test]
    fn solve_identity() {
        let a = Mat::identity(q(), 3);
        let b = Mat::from_i64(q(), &[&[4], &[-1], &[7]]);
        let s = solve(&a, &b).unwrap();
        assert_eq!(s.particular, b);
        assert_eq!(s.kernel.cols, 0);
    }

    #[test]
    fn solve_zero_matrix_kernel() {
        let a = Mat::zeros(q(), 2, 2);
        let b = Mat::zeros(q(), 2, 1);
        let s = solve(&a, &b).unwrap();
        assert_eq!(s.kernel.cols, 2);
    }

    #[test]
    fn solve_inconsistent() {
        let a = Mat::from_i64(q(), &[&[1], &[1]]);
        let b = Mat::from_i64(q(), &[&[0], &[1]]);
        assert!(solve(&a, &b).is_none());
    }

    #[test]
    fn solve_reproduces_rhs() {
        let a = Mat::from_i64(q(), &[&[2, 1, 0], &[1, 1, 1]]);
        let b = Mat::from_i64(q(), &[&[3], &[3]]);
        let s = solve(&a, &b).unwrap();
        assert_eq!(&a * &s.particular, b);
    }
}
