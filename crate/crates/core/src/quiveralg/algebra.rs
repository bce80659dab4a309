//! Finite-dimensional algebras presented by an ordered basis, structure
//! constants, a complete orthogonal idempotent family and a radical basis.
//!
//! Every basis element is Peirce-homogeneous: it carries a pair of
//! idempotent "legs" `(l, r)` with `b = e_l * b * e_r`. Multiplication is
//! written `x * y`; for path algebras built downstream the product of
//! composable paths `p: s -> t` and `q: u -> s` is `p * q = "q then p"`, so a
//! path `s -> t` has legs `(t, s)` and left modules over the path algebra are
//! representations with arrow maps pointing along the arrows.

use crate::error::{ForgeError, Result};
use crate::exactlin::{FieldKind, Mat, Scalar, Subspace};

pub type SparseVec = Vec<(usize, Scalar)>;

pub fn sparse_to_dense(field: FieldKind, dim: usize, v: &SparseVec) -> Vec<Scalar> {
    let mut out = vec![field.zero(); dim];
    for (i, c) in v {
        out[*i] = c.clone();
    }
    out
}

pub fn dense_to_sparse(v: &[Scalar]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.clone()))
        .collect()
}

#[derive(Clone)]
pub struct AlgebraData {
    pub field: FieldKind,
    pub labels: Vec<String>,
    /// Peirce legs `(left, right)` of each basis element.
    pub legs: Vec<(usize, usize)>,
    pub n_idem: usize,
    /// `idem_basis[a]` = basis index of the idempotent `e_a`.
    pub idem_basis: Vec<usize>,
    /// `table[i][j]` = coordinates of `b_i * b_j`.
    table: Vec<Vec<SparseVec>>,
    /// Basis of the Jacobson radical as coordinate vectors, each
    /// Peirce-homogeneous.
    pub radical: Vec<Vec<Scalar>>,
    /// Basis indices of a multiplicative generating set (idempotents are
    /// implicit generators and not listed).
    pub gens: Vec<usize>,
    /// `words[i]` expresses `b_i` as `gens[w[0]] * gens[w[1]] * ...`;
    /// empty exactly for idempotents.
    pub words: Vec<Vec<usize>>,
}

impl AlgebraData {
    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn new(
        field: FieldKind,
        labels: Vec<String>,
        legs: Vec<(usize, usize)>,
        n_idem: usize,
        idem_basis: Vec<usize>,
        table: Vec<Vec<SparseVec>>,
        radical: Vec<Vec<Scalar>>,
        gens: Vec<usize>,
        words: Vec<Vec<usize>>,
    ) -> AlgebraData {
        AlgebraData { field, labels, legs, n_idem, idem_basis, table, radical, gens, words }
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &SparseVec {
        &self.table[i][j]
    }

    /// Product of two arbitrary coordinate vectors.
    pub fn mul_vec(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![self.field.zero(); self.dim()];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                for (k, c) in &self.table[i][j] {
                    out[*k] = out[*k].clone() + xi.clone() * yj.clone() * c.clone();
                }
            }
        }
        out
    }

    pub fn unit(&self) -> Vec<Scalar> {
        let mut u = vec![self.field.zero(); self.dim()];
        for &b in &self.idem_basis {
            u[b] = self.field.one();
        }
        u
    }

    /// Indices of basis elements with the given legs, in basis order.
    pub fn peirce_indices(&self, l: usize, r: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.legs[i] == (l, r)).collect()
    }

    /// Splits a vector into its Peirce-homogeneous components, dropping zeros.
    pub fn peirce_split(&self, v: &[Scalar]) -> Vec<((usize, usize), Vec<Scalar>)> {
        let mut out: Vec<((usize, usize), Vec<Scalar>)> = Vec::new();
        for (i, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let legs = self.legs[i];
            match out.iter_mut().find(|(l, _)| *l == legs) {
                Some((_, comp)) => comp[i] = c.clone(),
                None => {
                    let mut comp = vec![self.field.zero(); self.dim()];
                    comp[i] = c.clone();
                    out.push((legs, comp));
                }
            }
        }
        out
    }

    pub fn is_idempotent_basis_elt(&self, i: usize) -> bool {
        self.idem_basis.contains(&i)
    }

    /// Full structural validation: leg coherence, idempotent axioms,
    /// associativity on all basis triples, and the radical contract
    /// (two-sided ideal, nilpotent, semisimple quotient).
    pub fn validate(&self) -> Result<()> {
        let d = self.dim();
        if self.legs.len() != d || self.table.len() != d || self.words.len() != d {
            return Err(ForgeError::InvalidAlgebra("inconsistent table sizes".into()));
        }
        if let FieldKind::Fp(p) = self.field {
            if (p as usize) <= d {
                return Err(ForgeError::InvalidAlgebra(format!(
                    "prime {p} too small for dimension {d} (radical computation needs p > dim)"
                )));
            }
        }
        // idempotent axioms
        for a in 0..self.n_idem {
            let ea = self.idem_basis[a];
            if self.legs[ea] != (a, a) {
                return Err(ForgeError::InvalidAlgebra(format!("idempotent {a} has wrong legs")));
            }
            for b in 0..self.n_idem {
                let eb = self.idem_basis[b];
                let prod = &self.table[ea][eb];
                let expect: SparseVec =
                    if a == b { vec![(ea, self.field.one())] } else { vec![] };
                if *prod != expect {
                    return Err(ForgeError::InvalidAlgebra(format!(
                        "idempotents {a},{b} not orthogonal"
                    )));
                }
            }
        }
        // unit acts as identity via legs
        for i in 0..d {
            let (l, r) = self.legs[i];
            for a in 0..self.n_idem {
                let left = &self.table[self.idem_basis[a]][i];
                let expect: SparseVec =
                    if a == l { vec![(i, self.field.one())] } else { vec![] };
                if *left != expect {
                    return Err(ForgeError::InvalidAlgebra(format!(
                        "e_{a} * b_{i} inconsistent with legs"
                    )));
                }
                let right = &self.table[i][self.idem_basis[a]];
                let expect: SparseVec =
                    if a == r { vec![(i, self.field.one())] } else { vec![] };
                if *right != expect {
                    return Err(ForgeError::InvalidAlgebra(format!(
                        "b_{i} * e_{a} inconsistent with legs"
                    )));
                }
            }
        }
        // leg coherence of the table
        for i in 0..d {
            for j in 0..d {
                let prod = &self.table[i][j];
                if self.legs[i].1 != self.legs[j].0 && !prod.is_empty() {
                    return Err(ForgeError::InvalidAlgebra(format!(
                        "product of incomposable elements {i},{j} is nonzero"
                    )));
                }
                for (k, _) in prod {
                    if self.legs[*k] != (self.legs[i].0, self.legs[j].1) {
                        return Err(ForgeError::InvalidAlgebra(format!(
                            "product {i}*{j} leaves its Peirce component"
                        )));
                    }
                }
            }
        }
        self.check_associativity()?;
        self.check_radical()?;
        Ok(())
    }

    /// Associativity `(b_i b_j) b_k = b_i (b_j b_k)` on all basis triples.
    pub fn check_associativity(&self) -> Result<()> {
        let d = self.dim();
        for i in 0..d {
            for j in 0..d {
                let ij = &self.table[i][j];
                for k in 0..d {
                    let mut lhs = vec![self.field.zero(); d];
                    for (m, c) in ij {
                        for (l, c2) in &self.table[*m][k] {
                            lhs[*l] = lhs[*l].clone() + c.clone() * c2.clone();
                        }
                    }
                    let mut rhs = vec![self.field.zero(); d];
                    for (m, c) in &self.table[j][k] {
                        for (l, c2) in &self.table[i][*m] {
                            rhs[*l] = rhs[*l].clone() + c.clone() * c2.clone();
                        }
                    }
                    if lhs != rhs {
                        return Err(ForgeError::InvalidAlgebra(format!(
                            "associativity fails on triple ({i},{j},{k})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Radical contract: span is a two-sided ideal, nilpotent, and the
    /// quotient has nondegenerate trace form (semisimple).
    pub fn check_radical(&self) -> Result<()> {
        let d = self.dim();
        let f = self.field;
        let rad_rows = Mat::from_rows(
            f,
            d,
            self.radical.clone(),
        );
        let rad = Subspace::from_rows(f, d, &rad_rows);
        // two-sided ideal
        for v in &self.radical {
            for i in 0..d {
                let mut e = vec![f.zero(); d];
                e[i] = f.one();
                if !rad.contains(&self.mul_vec(&e, v)) || !rad.contains(&self.mul_vec(v, &e)) {
                    return Err(ForgeError::InvalidAlgebra(
                        "radical basis does not span a two-sided ideal".into(),
                    ));
                }
            }
        }
        // nilpotency: powers of the radical shrink to zero
        let mut current: Vec<Vec<Scalar>> = self.radical.clone();
        for _ in 0..=d {
            if current.is_empty() {
                break;
            }
            let mut next_rows = Vec::new();
            for v in &current {
                for w in &self.radical {
                    let p = self.mul_vec(v, w);
                    if p.iter().any(|x| !x.is_zero()) {
                        next_rows.push(p);
                    }
                }
            }
            if next_rows.is_empty() {
                current = Vec::new();
                break;
            }
            let sub = Subspace::from_rows(f, d, &Mat::from_rows(f, d, next_rows));
            current = (0..sub.dim()).map(|i| sub.basis.row_vec(i)).collect();
        }
        if !current.is_empty() {
            return Err(ForgeError::InvalidAlgebra("radical is not nilpotent".into()));
        }
        // semisimple quotient: trace form of the quotient is nondegenerate
        let expected = radical_by_trace(self)?;
        let exp_space = Subspace::from_rows(f, d, &Mat::from_rows(f, d, expected));
        if exp_space != rad {
            return Err(ForgeError::InvalidAlgebra(
                "radical basis does not match the maximal nilpotent ideal".into(),
            ));
        }
        Ok(())
    }

    /// Opposite algebra: same basis, reversed multiplication, swapped legs.
    pub fn opposite(&self) -> AlgebraData {
        let d = self.dim();
        let mut table = vec![vec![SparseVec::new(); d]; d];
        for i in 0..d {
            for j in 0..d {
                table[i][j] = self.table[j][i].clone();
            }
        }
        AlgebraData {
            field: self.field,
            labels: self.labels.clone(),
            legs: self.legs.iter().map(|&(l, r)| (r, l)).collect(),
            n_idem: self.n_idem,
            idem_basis: self.idem_basis.clone(),
            table,
            radical: self.radical.clone(),
            gens: self.gens.clone(),
            words: self.words.iter().map(|w| w.iter().rev().cloned().collect()).collect(),
        }
    }

}

/// Radical via the trace form of the regular representation: the radical is
/// the null space of `G[i][j] = trace(L_{b_i * b_j})`. Exact over the
/// rationals; over a prime field the prime must exceed the dimension (checked
/// at validation).
pub fn radical_by_trace(alg: &AlgebraData) -> Result<Vec<Vec<Scalar>>> {
    let d = alg.dim();
    let f = alg.field;
    // trace(L_{b_k}) for each k
    let mut tr = vec![f.zero(); d];
    for k in 0..d {
        let mut t = f.zero();
        for j in 0..d {
            if let Some((_, c)) = alg.table[k][j].iter().find(|(idx, _)| *idx == j) {
                t = t + c.clone();
            }
        }
        tr[k] = t;
    }
    let gram = Mat::from_fn(f, d, d, |i, j| {
        let mut g = f.zero();
        for (k, c) in &alg.table[i][j] {
            g = g + c.clone() * tr[*k].clone();
        }
        g
    });
    let kernel = gram.left_kernel();
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    // re-basis into Peirce-homogeneous pieces
    let mut pieces = Vec::new();
    for i in 0..kernel.rows {
        for (_, comp) in alg.peirce_split(kernel.row(i)) {
            pieces.push(comp);
        }
    }
    if !pieces.is_empty() {
        let sub = Subspace::from_rows(f, d, &Mat::from_rows(f, d, pieces));
        for i in 0..sub.dim() {
            rows.push(sub.basis.row_vec(i));
        }
    }
    Ok(rows)
}

/// Quotient of an algebra by a two-sided ideal given as row vectors in the
/// algebra coordinates. The ideal is re-based into Peirce-homogeneous pieces,
/// two-sidedness is re-verified, and the quotient basis is the set of
/// original basis elements that survive elimination (idempotent coordinates
/// are eliminated last, so the idempotent family descends).
pub struct AlgebraQuotient {
    pub alg: AlgebraData,
    /// Basis indices of the parent algebra that survive as the quotient basis.
    pub surviving: Vec<usize>,
    /// Ideal as a subspace of the parent coordinates.
    pub ideal: Subspace,
}

impl AlgebraQuotient {
    /// Projects a parent coordinate vector to quotient coordinates.
    pub fn project(&self, v: &[Scalar]) -> Vec<Scalar> {
        let r = self.reduce_parent(v);
        self.surviving.iter().map(|&i| r[i].clone()).collect()
    }

    /// Canonical parent representative of a quotient vector.
    pub fn lift(&self, q: &[Scalar]) -> Vec<Scalar> {
        let mut v = vec![self.alg.field.zero(); self.ideal.ambient];
        for (k, &i) in self.surviving.iter().enumerate() {
            v[i] = q[k].clone();
        }
        v
    }

    fn reduce_parent(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.ideal.reduce(v)
    }
}

pub fn quotient_algebra(parent: &AlgebraData, ideal_rows: &Mat) -> Result<AlgebraQuotient> {
    let d = parent.dim();
    let f = parent.field;
    assert_eq!(ideal_rows.cols, d);
    // Peirce re-basis
    let mut pieces = Vec::new();
    for i in 0..ideal_rows.rows {
        for (_, comp) in parent.peirce_split(ideal_rows.row(i)) {
            pieces.push(comp);
        }
    }
    // Reorder coordinates so idempotents are eliminated last: permute columns.
    let mut order: Vec<usize> = (0..d).filter(|i| !parent.is_idempotent_basis_elt(*i)).collect();
    order.extend(parent.idem_basis.iter().cloned());
    let perm = Mat::from_fn(f, d, d, |i, j| {
        if order[j] == i {
            f.one()
        } else {
            f.zero()
        }
    });
    let permuted = &Mat::from_rows(f, d, pieces.clone()) * &perm;
    let sub_perm = Subspace::from_rows(f, d, &permuted);
    let pivots_orig: Vec<usize> = sub_perm
        .complement_reps()
        .iter()
        .map(|&c| order[c])
        .collect();
    let mut surviving = pivots_orig;
    surviving.sort_unstable();

    let ideal = Subspace::from_rows(f, d, &Mat::from_rows(f, d, pieces));
    // the ideal must miss every idempotent
    for &e in &parent.idem_basis {
        if !surviving.contains(&e) {
            return Err(ForgeError::InvalidAlgebra(
                "ideal eliminates an idempotent; quotient would not be unital over the same family"
                    .into(),
            ));
        }
    }
    // two-sidedness
    for i in 0..ideal.basis.rows {
        let v = ideal.basis.row_vec(i);
        for b in 0..d {
            let mut e = vec![f.zero(); d];
            e[b] = f.one();
            if !ideal.contains(&parent.mul_vec(&e, &v)) || !ideal.contains(&parent.mul_vec(&v, &e))
            {
                return Err(ForgeError::InvalidAlgebra("quotient ideal is not two-sided".into()));
            }
        }
    }

    // reduction of a parent vector to quotient coordinates
    let reduce = |v: &[Scalar]| -> Vec<Scalar> {
        let r = ideal.reduce(v);
        surviving.iter().map(|&i| r[i].clone()).collect()
    };
    // sanity: reduction of a surviving basis element is the corresponding unit vector
    for (k, &i) in surviving.iter().enumerate() {
        let mut e = vec![f.zero(); d];
        e[i] = f.one();
        let r = reduce(&e);
        if !(0..r.len()).all(|j| if j == k { r[j].is_one() } else { r[j].is_zero() }) {
            return Err(ForgeError::InvalidAlgebra("quotient basis reduction inconsistent".into()));
        }
    }

    let qd = surviving.len();
    let mut table = vec![vec![SparseVec::new(); qd]; qd];
    for (i, &bi) in surviving.iter().enumerate() {
        for (j, &bj) in surviving.iter().enumerate() {
            let prod = sparse_to_dense(f, d, parent.mul_basis(bi, bj));
            table[i][j] = dense_to_sparse(&reduce(&prod));
        }
    }
    let labels = surviving.iter().map(|&i| parent.labels[i].clone()).collect();
    let legs: Vec<(usize, usize)> = surviving.iter().map(|&i| parent.legs[i]).collect();
    let idem_basis: Vec<usize> = parent
        .idem_basis
        .iter()
        .map(|e| surviving.iter().position(|s| s == e).unwrap())
        .collect();
    // in the quotient every basis element is its own generator
    let gens: Vec<usize> = (0..qd).filter(|&i| !idem_basis.contains(&i)).collect();
    let words: Vec<Vec<usize>> = (0..qd)
        .map(|i| {
            if idem_basis.contains(&i) {
                vec![]
            } else {
                vec![gens.iter().position(|&g| g == i).unwrap()]
            }
        })
        .collect();
    let mut alg = AlgebraData {
        field: f,
        labels,
        legs,
        n_idem: parent.n_idem,
        idem_basis,
        table,
        radical: vec![],
        gens,
        words,
    };
    alg.radical = radical_by_trace(&alg)?;
    alg.validate()?;
    Ok(AlgebraQuotient { alg, surviving, ideal })
}

/// Builds an algebra from explicit Hom-space style data where every basis
/// element is its own generator. Used for endomorphism-type algebras.
pub fn algebra_from_table(
    field: FieldKind,
    labels: Vec<String>,
    legs: Vec<(usize, usize)>,
    n_idem: usize,
    idem_basis: Vec<usize>,
    table: Vec<Vec<SparseVec>>,
) -> Result<AlgebraData> {
    let d = labels.len();
    let gens: Vec<usize> = (0..d).filter(|i| !idem_basis.contains(i)).collect();
    let words: Vec<Vec<usize>> = (0..d)
        .map(|i| {
            if idem_basis.contains(&i) {
                vec![]
            } else {
                vec![gens.iter().position(|&g| g == i).unwrap()]
            }
        })
        .collect();
    let mut alg = AlgebraData {
        field,
        labels,
        legs,
        n_idem,
        idem_basis,
        table,
        radical: vec![],
        gens,
        words,
    };
    alg.radical = radical_by_trace(&alg)?;
    alg.validate()?;
    Ok(alg)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// k itself: one idempotent, nothing else.
    fn ground_field() -> AlgebraData {
        let f = FieldKind::Q;
        algebra_from_table(
            f,
            vec!["e".into()],
            vec![(0, 0)],
            1,
            vec![0],
            vec![vec![vec![(0, f.one())]]],
        )
        .unwrap()
    }

    #[test]
    fn ground_field_valid() {
        let a = ground_field();
        assert_eq!(a.dim(), 1);
        assert!(a.radical.is_empty());
    }

    #[test]
    fn dual_numbers_radical() {
        // k[x]/x^2: radical = span(x)
        let f = FieldKind::Q;
        let table = vec![
            vec![vec![(0, f.one())], vec![(1, f.one())]],
            vec![vec![(1, f.one())], vec![]],
        ];
        let mut alg = AlgebraData::new(
            f,
            vec!["e".into(), "x".into()],
            vec![(0, 0), (0, 0)],
            1,
            vec![0],
            table,
            vec![],
            vec![1],
            vec![vec![], vec![0]],
        );
        alg.radical = radical_by_trace(&alg).unwrap();
        assert_eq!(alg.radical.len(), 1);
        alg.validate().unwrap();
    }

    #[test]
    fn opposite_involutive() {
        let a = ground_field();
        let aop = a.opposite().opposite();
        assert_eq!(aop.legs, a.legs);
    }
}
