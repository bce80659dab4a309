//! Row-space subspace arithmetic: canonical bases, sums, intersections and
//! quotients with explicit projections.

use super::mat::{solve, Mat};
use super::scalar::{FieldKind, Scalar};

/// A subspace of a coordinate row space, kept in canonical (RREF) basis form.
#[derive(Clone, Debug, PartialEq)]
pub struct Subspace {
    pub ambient: usize,
    pub field: FieldKind,
    /// Canonical basis, one row per basis vector; rows are in RREF.
    pub basis: Mat,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn from_rows(field: FieldKind, ambient: usize, rows: &Mat) -> Subspace {
        assert_eq!(rows.cols, ambient);
        let rr = rows.rref();
        let basis = Mat::from_fn(field, rr.rank, ambient, |i, j| rr.reduced[(i, j)].clone());
        Subspace { ambient, field, basis, pivots: rr.pivots }
    }

    pub fn zero(field: FieldKind, ambient: usize) -> Subspace {
        Subspace::from_rows(field, ambient, &Mat::zeros(field, 0, ambient))
    }

    pub fn full(field: FieldKind, ambient: usize) -> Subspace {
        Subspace::from_rows(field, ambient, &Mat::identity(field, ambient))
    }

    pub fn dim(&self) -> usize {
        self.basis.rows
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.coords_of(v).is_some()
    }

    pub fn contains_space(&self, other: &Subspace) -> bool {
        (0..other.basis.rows).all(|i| self.contains(other.basis.row(i)))
    }

    /// Coordinates of `v` in the canonical basis, if `v` lies in the subspace.
    pub fn coords_of(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(v.len(), self.ambient);
        // RREF basis: coefficient of basis row i is v[pivot_i]; verify residual.
        let coeffs: Vec<Scalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut resid = v.to_vec();
        for (i, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for j in 0..self.ambient {
                let b = &self.basis[(i, j)];
                if !b.is_zero() {
                    resid[j] = resid[j].clone() - c.clone() * b.clone();
                }
            }
        }
        if resid.iter().all(|x| x.is_zero()) {
            Some(coeffs)
        } else {
            None
        }
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        Subspace::from_rows(self.field, self.ambient, &self.basis.vstack(&other.basis))
    }

    /// Intersection via left kernel of the stacked bases.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient, "ambient dimension mismatch");
        let stacked = self.basis.vstack(&Mat::from_fn(
            self.field,
            other.basis.rows,
            self.ambient,
            |i, j| -other.basis[(i, j)].clone(),
        ));
        let lk = stacked.left_kernel();
        // each kernel row (lambda | mu) gives lambda * self.basis in the intersection
        let lam = lk.submatrix(&(0..lk.rows).collect::<Vec<_>>(), &(0..self.basis.rows).collect::<Vec<_>>());
        let vecs = &lam * &self.basis;
        let result = Subspace::from_rows(self.field, self.ambient, &vecs);
        // Grassmann identity, verified on every call
        debug_assert_eq!(
            result.dim() + self.sum(other).dim(),
            self.dim() + other.dim(),
            "Grassmann dimension identity violated"
        );
        result
    }

    /// Representatives of a complement: the standard basis vectors at the
    /// non-pivot coordinates. Together with the subspace they span the
    /// ambient space, and reduction modulo the subspace is canonical.
    pub fn complement_reps(&self) -> Vec<usize> {
        (0..self.ambient).filter(|c| !self.pivots.contains(c)).collect()
    }

    /// Reduces `v` modulo the subspace: returns the canonical coset
    /// representative supported on non-pivot coordinates.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut resid = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            let c = resid[p].clone();
            if c.is_zero() {
                continue;
            }
            for j in 0..self.ambient {
                let b = &self.basis[(i, j)];
                if !b.is_zero() {
                    resid[j] = resid[j].clone() - c.clone() * b.clone();
                }
            }
        }
        resid
    }
}

/// A quotient `ambient / sub` with a chosen coordinate system on the quotient.
#[derive(Clone, Debug)]
pub struct QuotientSpace {
    pub sub: Subspace,
    /// Ambient coordinates of the chosen quotient basis representatives.
    pub rep_coords: Vec<usize>,
}

impl QuotientSpace {
    pub fn new(sub: Subspace) -> QuotientSpace {
        let rep_coords = sub.complement_reps();
        QuotientSpace { sub, rep_coords }
    }

    pub fn dim(&self) -> usize {
        self.rep_coords.len()
    }

    /// Image of an ambient vector in quotient coordinates.
    pub fn project(&self, v: &[Scalar]) -> Vec<Scalar> {
        let r = self.sub.reduce(v);
        self.rep_coords.iter().map(|&c| r[c].clone()).collect()
    }

    /// Ambient representative of a quotient coordinate vector.
    pub fn lift(&self, q: &[Scalar]) -> Vec<Scalar> {
        let mut v = vec![self.sub.field.zero(); self.sub.ambient];
        for (k, &c) in self.rep_coords.iter().enumerate() {
            v[c] = q[k].clone();
        }
        v
    }

    /// Matrix of `project` as a linear map (ambient rows -> quotient cols).
    pub fn projection_mat(&self) -> Mat {
        let f = self.sub.field;
        let n = self.sub.ambient;
        let mut m = Mat::zeros(f, n, self.dim());
        for i in 0..n {
            let mut e = vec![f.zero(); n];
            e[i] = f.one();
            let p = self.project(&e);
            for (j, x) in p.into_iter().enumerate() {
                m[(i, j)] = x;
            }
        }
        m
    }

    /// Matrix of `lift` (quotient rows -> ambient cols).
    pub fn lift_mat(&self) -> Mat {
        let f = self.sub.field;
        let mut m = Mat::zeros(f, self.dim(), self.sub.ambient);
        for (k, &c) in self.rep_coords.iter().enumerate() {
            m[(k, c)] = f.one();
        }
        m
    }
}

/// Coordinate extraction against a fixed spanning set: after one elimination,
/// arbitrary vectors can be expressed in the span (or rejected) cheaply.
#[derive(Clone, Debug)]
pub struct Coordinatizer {
    span_rows: Mat,
}

impl Coordinatizer {
    pub fn new(span_rows: Mat) -> Coordinatizer {
        Coordinatizer { span_rows }
    }

    pub fn coords_of(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if self.span_rows.rows == 0 {
            return if v.iter().all(|x| x.is_zero()) { Some(vec![]) } else { None };
        }
        let rhs = Mat::from_rows(self.span_rows.field, v.len(), vec![v.to_vec()]);
        let sol = solve(&self.span_rows.transpose(), &rhs.transpose())?;
        Some(sol.particular.transpose().row_vec(0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldKind {
        FieldKind::Q
    }

    #[test]
    fn axis_planes() {
        let e1 = Subspace::from_rows(q(), 2, &Mat::from_i64(q(), &[&[1, 0]]));
        let e2 = Subspace::from_rows(q(), 2, &Mat::from_i64(q(), &[&[0, 1]]));
        assert_eq!(e1.intersect(&e2).dim(), 0);
        assert_eq!(e1.sum(&e2).dim(), 2);
    }

    #[test]
    fn self_intersection() {
        let u = Subspace::from_rows(q(), 3, &Mat::from_i64(q(), &[&[1, 2, 3], &[0, 1, 1]]));
        let i = u.intersect(&u);
        assert_eq!(i, u);
    }

    #[test]
    fn quotient_roundtrip() {
        let u = Subspace::from_rows(q(), 3, &Mat::from_i64(q(), &[&[1, 1, 0]]));
        let qt = QuotientSpace::new(u);
        assert_eq!(qt.dim(), 2);
        let v = [q().from_i64(2), q().from_i64(5), q().from_i64(-1)];
        let p = qt.project(&v);
        let lifted = qt.lift(&p);
        // lift differs from v by an element of the subspace
        let diff: Vec<Scalar> = v.iter().zip(&lifted).map(|(a, b)| a.clone() - b.clone()).collect();
        assert!(qt.sub.contains(&diff));
    }
}
