//! Left modules over a Peirce-graded algebra, given by one coordinate space
//! per idempotent and an action matrix per generator.
//!
//! A quiver representation is exactly such a module over the path algebra:
//! components are the vertex spaces and the generator actions are the arrow
//! matrices, pointing along the arrows. Morphisms are per-component matrices
//! composed in diagrammatic order (`f then g` is `F_a * G_a`).

use crate::error::{ForgeError, Result};
use crate::exactlin::{FieldKind, Mat, Scalar, Subspace};
use crate::quiveralg::algebra::{sparse_to_dense, AlgebraData};

#[derive(Clone, PartialEq)]
pub struct AModule {
    /// Dimension of each idempotent component.
    pub dims: Vec<usize>,
    /// One matrix per algebra generator `g` with legs `(l, r)`, mapping the
    /// `r`-component to the `l`-component.
    pub action: Vec<Mat>,
}

impl AModule {
    pub fn zero(alg: &AlgebraData) -> AModule {
        let dims = vec![0; alg.n_idem];
        let action = alg
            .gens
            .iter()
            .map(|_| Mat::zeros(alg.field, 0, 0))
            .collect();
        AModule { dims, action }
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn offsets(&self) -> Vec<usize> {
        let mut off = Vec::with_capacity(self.dims.len());
        let mut acc = 0;
        for &d in &self.dims {
            off.push(acc);
            acc += d;
        }
        off
    }

    /// Action matrix of an arbitrary basis element, derived from its
    /// generator word. Idempotents act as the identity on their component.
    pub fn action_of_basis(&self, alg: &AlgebraData, i: usize) -> Mat {
        if let Some(a) = alg.idem_basis.iter().position(|&b| b == i) {
            return Mat::identity(alg.field, self.dims[a]);
        }
        let word = &alg.words[i];
        assert!(!word.is_empty(), "non-idempotent basis element with empty word");
        // b = g_1 * g_2 * ... * g_k acts as A(g_k) ... A(g_1)
        let mut acc: Option<Mat> = None;
        for &g in word.iter().rev() {
            let m = &self.action[g];
            acc = Some(match acc {
                None => m.clone(),
                Some(a) => &a * m,
            });
        }
        acc.unwrap()
    }

    /// Action of a Peirce-homogeneous coordinate vector.
    pub fn action_of_homog(&self, alg: &AlgebraData, v: &[Scalar]) -> ((usize, usize), Mat) {
        let mut legs: Option<(usize, usize)> = None;
        for (i, c) in v.iter().enumerate() {
            if !c.is_zero() {
                match legs {
                    None => legs = Some(alg.legs[i]),
                    Some(l) => assert_eq!(l, alg.legs[i], "vector is not Peirce-homogeneous"),
                }
            }
        }
        let (l, r) = legs.expect("zero vector has no legs");
        let mut m = Mat::zeros(alg.field, self.dims[r], self.dims[l]);
        for (i, c) in v.iter().enumerate() {
            if !c.is_zero() {
                m = &m + &self.action_of_basis(alg, i).scale(c);
            }
        }
        ((l, r), m)
    }

    pub fn direct_sum(alg: &AlgebraData, parts: &[&AModule]) -> (AModule, Vec<CompMap>, Vec<CompMap>) {
        let f = alg.field;
        let n = alg.n_idem;
        let dims: Vec<usize> = (0..n).map(|a| parts.iter().map(|p| p.dims[a]).sum()).collect();
        let mut action = Vec::with_capacity(alg.gens.len());
        for (gi, &g) in alg.gens.iter().enumerate() {
            let (l, r) = alg.legs[g];
            let mut m = Mat::zeros(f, dims[r], dims[l]);
            let mut ro = 0;
            let mut co = 0;
            for p in parts {
                let blk = &p.action[gi];
                for i in 0..blk.rows {
                    for j in 0..blk.cols {
                        m[(ro + i, co + j)] = blk[(i, j)].clone();
                    }
                }
                ro += p.dims[r];
                co += p.dims[l];
            }
            action.push(m);
        }
        let sum = AModule { dims, action };
        let mut incls = Vec::new();
        let mut projs = Vec::new();
        let mut offs = vec![vec![0usize; n]; parts.len() + 1];
        for (k, p) in parts.iter().enumerate() {
            for a in 0..n {
                offs[k + 1][a] = offs[k][a] + p.dims[a];
            }
        }
        for (k, p) in parts.iter().enumerate() {
            let mut iblocks = Vec::new();
            let mut pblocks = Vec::new();
            for a in 0..n {
                let mut inc = Mat::zeros(f, p.dims[a], sum.dims[a]);
                let mut prj = Mat::zeros(f, sum.dims[a], p.dims[a]);
                for i in 0..p.dims[a] {
                    inc[(i, offs[k][a] + i)] = f.one();
                    prj[(offs[k][a] + i, i)] = f.one();
                }
                iblocks.push(inc);
                pblocks.push(prj);
            }
            incls.push(CompMap { blocks: iblocks });
            projs.push(CompMap { blocks: pblocks });
        }
        (sum, incls, projs)
    }

    /// Verifies the module axioms: for all pairs of basis elements, the
    /// derived actions respect the multiplication table.
    pub fn validate(&self, alg: &AlgebraData) -> Result<()> {
        if self.dims.len() != alg.n_idem || self.action.len() != alg.gens.len() {
            return Err(ForgeError::InvalidModule("shape mismatch".into()));
        }
        for (gi, &g) in alg.gens.iter().enumerate() {
            let (l, r) = alg.legs[g];
            let m = &self.action[gi];
            if m.rows != self.dims[r] || m.cols != self.dims[l] {
                return Err(ForgeError::InvalidModule(format!(
                    "action of generator {gi} has wrong shape"
                )));
            }
        }
        let d = alg.dim();
        for i in 0..d {
            for j in 0..d {
                if alg.legs[i].1 != alg.legs[j].0 {
                    continue;
                }
                // action(b_i * b_j) = A(b_j) * A(b_i)
                let prod = sparse_to_dense(alg.field, d, alg.mul_basis(i, j));
                let (li, _ri) = alg.legs[i];
                let (_lj, rj) = alg.legs[j];
                let mut lhs = Mat::zeros(alg.field, self.dims[rj], self.dims[li]);
                if prod.iter().any(|c| !c.is_zero()) {
                    let (_, m) = self.action_of_homog(alg, &prod);
                    lhs = m;
                }
                let rhs = &self.action_of_basis(alg, j) * &self.action_of_basis(alg, i);
                if lhs != rhs {
                    return Err(ForgeError::InvalidModule(format!(
                        "module action violates relation b_{i} * b_{j}"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// A morphism of modules: one matrix per component, `X_a -> Y_a`.
#[derive(Clone, PartialEq)]
pub struct CompMap {
    pub blocks: Vec<Mat>,
}

impl CompMap {
    pub fn zero(field: FieldKind, x: &AModule, y: &AModule) -> CompMap {
        CompMap {
            blocks: x
                .dims
                .iter()
                .zip(&y.dims)
                .map(|(&a, &b)| Mat::zeros(field, a, b))
                .collect(),
        }
    }

    pub fn identity(field: FieldKind, x: &AModule) -> CompMap {
        CompMap {
            blocks: x.dims.iter().map(|&a| Mat::identity(field, a)).collect(),
        }
    }

    /// Diagrammatic composite: `self` then `g`.
    pub fn then(&self, g: &CompMap) -> CompMap {
        CompMap {
            blocks: self
                .blocks
                .iter()
                .zip(&g.blocks)
                .map(|(a, b)| a * b)
                .collect(),
        }
    }

    pub fn add(&self, other: &CompMap) -> CompMap {
        CompMap {
            blocks: self.blocks.iter().zip(&other.blocks).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &CompMap) -> CompMap {
        CompMap {
            blocks: self.blocks.iter().zip(&other.blocks).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn neg(&self) -> CompMap {
        CompMap { blocks: self.blocks.iter().map(|a| -a).collect() }
    }

    pub fn scale(&self, c: &Scalar) -> CompMap {
        CompMap { blocks: self.blocks.iter().map(|a| a.scale(c)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(|b| b.is_zero())
    }

    /// Checks the intertwining condition against every generator.
    pub fn is_module_map(&self, alg: &AlgebraData, x: &AModule, y: &AModule) -> bool {
        for (gi, &g) in alg.gens.iter().enumerate() {
            let (l, r) = alg.legs[g];
            let lhs = &x.action[gi] * &self.blocks[l];
            let rhs = &self.blocks[r] * &y.action[gi];
            if lhs != rhs {
                return false;
            }
        }
        true
    }

    /// Flattens to the fixed coordinate layout used by the Hom solvers.
    pub fn to_vec(&self) -> Vec<Scalar> {
        let mut v = Vec::new();
        for b in &self.blocks {
            for i in 0..b.rows {
                v.extend(b.row(i).iter().cloned());
            }
        }
        v
    }

    pub fn from_vec(field: FieldKind, x: &AModule, y: &AModule, v: &[Scalar]) -> CompMap {
        let mut blocks = Vec::new();
        let mut pos = 0;
        for a in 0..x.dims.len() {
            let (r, c) = (x.dims[a], y.dims[a]);
            let m = Mat::from_fn(field, r, c, |i, j| v[pos + i * c + j].clone());
            pos += r * c;
            blocks.push(m);
        }
        assert_eq!(pos, v.len());
        CompMap { blocks }
    }
}

pub fn hom_vec_len(x: &AModule, y: &AModule) -> usize {
    x.dims.iter().zip(&y.dims).map(|(a, b)| a * b).sum()
}

/// Basis of the space of module maps `x -> y`, canonical under deterministic
/// elimination. One dense linear system per query.
pub fn hom_module_basis(alg: &AlgebraData, x: &AModule, y: &AModule) -> Vec<CompMap> {
    let f = alg.field;
    let n_unknowns = hom_vec_len(x, y);
    if n_unknowns == 0 {
        return vec![];
    }
    // unknown offsets per component
    let mut uoff = Vec::with_capacity(x.dims.len());
    let mut acc = 0;
    for a in 0..x.dims.len() {
        uoff.push(acc);
        acc += x.dims[a] * y.dims[a];
    }
    // constraints as columns of C (unknowns x constraints); kernel rows solve u*C = 0
    let mut n_constraints = 0;
    for &g in &alg.gens {
        let (l, r) = alg.legs[g];
        n_constraints += x.dims[r] * y.dims[l];
    }
    let mut c = Mat::zeros(f, n_unknowns, n_constraints);
    let mut col = 0;
    for (gi, &g) in alg.gens.iter().enumerate() {
        let (l, r) = alg.legs[g];
        let ax = &x.action[gi]; // X_r x X_l
        let ay = &y.action[gi]; // Y_r x Y_l
        for i in 0..x.dims[r] {
            for j in 0..y.dims[l] {
                // sum_k ax[i,k] * F_l[k,j]  -  sum_s F_r[i,s] * ay[s,j] = 0
                for k in 0..x.dims[l] {
                    let coeff = ax[(i, k)].clone();
                    if !coeff.is_zero() {
                        let u = uoff[l] + k * y.dims[l] + j;
                        c[(u, col)] = c[(u, col)].clone() + coeff;
                    }
                }
                for s in 0..y.dims[r] {
                    let coeff = ay[(s, j)].clone();
                    if !coeff.is_zero() {
                        let u = uoff[r] + i * y.dims[r] + s;
                        c[(u, col)] = c[(u, col)].clone() - coeff;
                    }
                }
                col += 1;
            }
        }
    }
    let kernel = c.left_kernel();
    (0..kernel.rows)
        .map(|i| CompMap::from_vec(f, x, y, kernel.row(i)))
        .collect()
}

/// A graded subspace closed under the module action.
#[derive(Clone)]
pub struct Submodule {
    /// Canonical row basis per component.
    pub comp: Vec<Subspace>,
}

impl Submodule {
    pub fn from_rows(alg: &AlgebraData, m: &AModule, rows: Vec<Vec<Mat>>) -> Submodule {
        // rows: list of contributions, each a per-component row matrix
        let f = alg.field;
        let comp = (0..alg.n_idem)
            .map(|a| {
                let mut stacked = Mat::zeros(f, 0, m.dims[a]);
                for r in &rows {
                    stacked = stacked.vstack(&r[a]);
                }
                Subspace::from_rows(f, m.dims[a], &stacked)
            })
            .collect();
        Submodule { comp }
    }

    pub fn dims(&self) -> Vec<usize> {
        self.comp.iter().map(|s| s.dim()).collect()
    }

    pub fn total_dim(&self) -> usize {
        self.comp.iter().map(|s| s.dim()).sum()
    }

    pub fn is_closed(&self, alg: &AlgebraData, m: &AModule) -> bool {
        for (gi, &g) in alg.gens.iter().enumerate() {
            let (l, r) = alg.legs[g];
            let img = &self.comp[r].basis * &m.action[gi];
            for i in 0..img.rows {
                if !self.comp[l].contains(img.row(i)) {
                    return false;
                }
            }
        }
        true
    }

    /// Realizes the submodule as a module with the inclusion map.
    pub fn as_module(&self, alg: &AlgebraData, m: &AModule) -> (AModule, CompMap) {
        let f = alg.field;
        let dims = self.dims();
        let mut action = Vec::new();
        for (gi, &g) in alg.gens.iter().enumerate() {
            let (l, r) = alg.legs[g];
            let img = &self.comp[r].basis * &m.action[gi];
            let mut sm = Mat::zeros(f, dims[r], dims[l]);
            for i in 0..img.rows {
                let coords = self.comp[l]
                    .coords_of(img.row(i))
                    .expect("submodule not closed under action");
                for (j, cx) in coords.into_iter().enumerate() {
                    sm[(i, j)] = cx;
                }
            }
            action.push(sm);
        }
        let module = AModule { dims, action };
        let incl = CompMap { blocks: self.comp.iter().map(|s| s.basis.clone()).collect() };
        (module, incl)
    }

    /// Quotient module with the projection map.
    pub fn quotient(&self, alg: &AlgebraData, m: &AModule) -> (AModule, CompMap) {
        let quots: Vec<crate::exactlin::QuotientSpace> = self
            .comp
            .iter()
            .map(|s| crate::exactlin::QuotientSpace::new(s.clone()))
            .collect();
        let dims: Vec<usize> = quots.iter().map(|q| q.dim()).collect();
        let mut action = Vec::new();
        for (gi, &g) in alg.gens.iter().enumerate() {
            let (l, r) = alg.legs[g];
            // lift from quotient_r, act, project to quotient_l
            let lift = quots[r].lift_mat();
            let proj = quots[l].projection_mat();
            action.push(&(&lift * &m.action[gi]) * &proj);
        }
        let module = AModule { dims, action };
        let proj = CompMap { blocks: quots.iter().map(|q| q.projection_mat()).collect() };
        (module, proj)
    }
}

/// Kernel of a module map as a submodule of the source.
pub fn kernel_of(alg: &AlgebraData, x: &AModule, f: &CompMap) -> Submodule {
    let field = alg.field;
    let comp = f
        .blocks
        .iter()
        .enumerate()
        .map(|(a, b)| Subspace::from_rows(field, x.dims[a], &b.left_kernel()))
        .collect();
    let sub = Submodule { comp };
    debug_assert!(sub.is_closed(alg, x), "kernel of a module map must be a submodule");
    sub
}

/// Image of a module map as a submodule of the target.
pub fn image_of(alg: &AlgebraData, y: &AModule, f: &CompMap) -> Submodule {
    let field = alg.field;
    let comp = f
        .blocks
        .iter()
        .enumerate()
        .map(|(a, b)| Subspace::from_rows(field, y.dims[a], b))
        .collect();
    let sub = Submodule { comp };
    debug_assert!(sub.is_closed(alg, y), "image of a module map must be a submodule");
    sub
}

/// The indecomposable projective `P_t = A e_t`: component `a` has the basis
/// elements with legs `(a, t)`, generators act by left multiplication.
pub fn projective_module(alg: &AlgebraData, t: usize) -> AModule {
    let f = alg.field;
    let comp_basis: Vec<Vec<usize>> = (0..alg.n_idem).map(|a| alg.peirce_indices(a, t)).collect();
    let dims: Vec<usize> = comp_basis.iter().map(|b| b.len()).collect();
    let mut action = Vec::new();
    for &g in &alg.gens {
        let (l, r) = alg.legs[g];
        let mut m = Mat::zeros(f, dims[r], dims[l]);
        for (i, &x) in comp_basis[r].iter().enumerate() {
            for (k, c) in alg.mul_basis(g, x) {
                let j = comp_basis[l]
                    .iter()
                    .position(|&b| b == *k)
                    .expect("product left its Peirce component");
                m[(i, j)] = c.clone();
            }
        }
        action.push(m);
    }
    AModule { dims, action }
}

/// Basis-element indices realizing the coordinates of `projective_module`.
pub fn projective_basis_indices(alg: &AlgebraData, t: usize) -> Vec<Vec<usize>> {
    (0..alg.n_idem).map(|a| alg.peirce_indices(a, t)).collect()
}

/// The indecomposable injective `I_t = D(e_t A)`: component `a` is the dual
/// of the span of basis elements with legs `(t, a)`; a generator `g` acts as
/// the transpose of right multiplication by `g`.
pub fn injective_module(alg: &AlgebraData, t: usize) -> AModule {
    let f = alg.field;
    let comp_basis: Vec<Vec<usize>> = (0..alg.n_idem).map(|a| alg.peirce_indices(t, a)).collect();
    let dims: Vec<usize> = comp_basis.iter().map(|b| b.len()).collect();
    let mut action = Vec::new();
    for &g in &alg.gens {
        let (l, r) = alg.legs[g];
        // right multiplication e_t A e_l -> e_t A e_r, then transpose
        let mut b = Mat::zeros(f, dims[l], dims[r]);
        for (i, &x) in comp_basis[l].iter().enumerate() {
            for (k, c) in alg.mul_basis(x, g) {
                let j = comp_basis[r]
                    .iter()
                    .position(|&bb| bb == *k)
                    .expect("product left its Peirce component");
                b[(i, j)] = c.clone();
            }
        }
        action.push(b.transpose());
    }
    AModule { dims, action }
}

/// The simple module at `t`, valid when every non-idempotent basis element is
/// radical (true for path algebras of acyclic quivers).
pub fn simple_module(alg: &AlgebraData, t: usize) -> AModule {
    let f = alg.field;
    let dims: Vec<usize> = (0..alg.n_idem).map(|a| usize::from(a == t)).collect();
    let action = alg
        .gens
        .iter()
        .map(|&g| {
            let (l, r) = alg.legs[g];
            Mat::zeros(f, dims[r], dims[l])
        })
        .collect();
    AModule { dims, action }
}

/// The module map `P_t -> M` determined by the image `v` of the generator
/// `e_t` (a vector in the `t`-component of `M`).
pub fn map_from_generator_image(
    alg: &AlgebraData,
    t: usize,
    m: &AModule,
    v: &[Scalar],
) -> CompMap {
    let f = alg.field;
    let comp_basis = projective_basis_indices(alg, t);
    let blocks = (0..alg.n_idem)
        .map(|a| {
            let mut blk = Mat::zeros(f, comp_basis[a].len(), m.dims[a]);
            for (i, &x) in comp_basis[a].iter().enumerate() {
                // x has legs (a, t); x . v lands in component a
                let row = m.action_of_basis(alg, x).apply_row(v);
                for (j, val) in row.into_iter().enumerate() {
                    blk[(i, j)] = val;
                }
            }
            blk
        })
        .collect();
    CompMap { blocks }
}

/// The radical submodule `rad(A) . M`.
pub fn radical_submodule(alg: &AlgebraData, m: &AModule) -> Submodule {
    let f = alg.field;
    let mut rows: Vec<Vec<Mat>> = Vec::new();
    for v in &alg.radical {
        if v.iter().all(|c| c.is_zero()) {
            continue;
        }
        // rows of the action matrix are images of the r-component basis in M_l
        let ((l, _), act) = m.action_of_homog(alg, v);
        let mut contrib: Vec<Mat> = m.dims.iter().map(|&d| Mat::zeros(f, 0, d)).collect();
        contrib[l] = act;
        rows.push(contrib);
    }
    Submodule::from_rows(alg, m, rows)
}

/// Projective cover data: the cover module, the multiset of vertices of its
/// indecomposable summands (with per-copy generator lifts), and the
/// surjection onto `M`.
pub struct Cover {
    pub verts: Vec<usize>,
    pub module: AModule,
    pub eps: CompMap,
}

pub fn projective_cover(alg: &AlgebraData, m: &AModule) -> Cover {
    let f = alg.field;
    let rad = radical_submodule(alg, m);
    let mut verts = Vec::new();
    let mut lifts: Vec<Vec<Scalar>> = Vec::new();
    for a in 0..alg.n_idem {
        let q = crate::exactlin::QuotientSpace::new(rad.comp[a].clone());
        for &c in &q.rep_coords {
            verts.push(a);
            let mut v = vec![f.zero(); m.dims[a]];
            v[c] = f.one();
            lifts.push(v);
        }
    }
    let parts: Vec<AModule> = verts.iter().map(|&t| projective_module(alg, t)).collect();
    let part_refs: Vec<&AModule> = parts.iter().collect();
    let (module, _, _) = AModule::direct_sum(alg, &part_refs);
    // component blocks of eps are the stacked per-summand blocks
    let pieces: Vec<CompMap> = verts
        .iter()
        .zip(&lifts)
        .map(|(&t, v)| map_from_generator_image(alg, t, m, v))
        .collect();
    let blocks = (0..alg.n_idem)
        .map(|a| {
            let mut stacked = Mat::zeros(f, 0, m.dims[a]);
            for p in &pieces {
                stacked = stacked.vstack(&p.blocks[a]);
            }
            stacked
        })
        .collect();
    let eps = CompMap { blocks };
    Cover { verts, module, eps }
}

/// A minimal projective resolution `... -> Q_1 -> Q_0 -> M -> 0`.
pub struct ProjResolution {
    /// Vertex multisets of the terms, `terms[0]` covering `M`.
    pub terms: Vec<Vec<usize>>,
    pub modules: Vec<AModule>,
    /// `diffs[k]: Q_{k+1} -> Q_k`.
    pub diffs: Vec<CompMap>,
    /// Augmentation `Q_0 -> M`.
    pub aug: CompMap,
}

pub fn min_proj_resolution(alg: &AlgebraData, m: &AModule, bound: usize) -> Result<ProjResolution> {
    if m.is_zero() {
        return Ok(ProjResolution { terms: vec![], modules: vec![], diffs: vec![], aug: CompMap::zero(alg.field, &AModule::zero(alg), m) });
    }
    let mut terms = Vec::new();
    let mut modules = Vec::new();
    let mut diffs = Vec::new();
    let mut aug = None;
    let mut current = m.clone();
    let mut prev_incl: Option<CompMap> = None;
    for k in 0..=bound {
        let cover = projective_cover(alg, &current);
        match &prev_incl {
            None => aug = Some(cover.eps.clone()),
            Some(incl) => diffs.push(cover.eps.then(incl)),
        }
        let ker = kernel_of(alg, &cover.module, &cover.eps);
        terms.push(cover.verts.clone());
        let total_ker = ker.total_dim();
        modules.push(cover.module.clone());
        if total_ker == 0 {
            let res = ProjResolution { terms, modules, diffs, aug: aug.unwrap() };
            verify_resolution(alg, m, &res)?;
            return Ok(res);
        }
        if k == bound {
            return Err(ForgeError::ResolutionTooLong(bound));
        }
        // minimality: the kernel must sit inside the radical of the cover
        let rad = radical_submodule(alg, &cover.module);
        for a in 0..alg.n_idem {
            if !rad.comp[a].contains_space(&ker.comp[a]) {
                return Err(ForgeError::InvalidModule(
                    "projective cover not minimal: kernel escapes the radical".into(),
                ));
            }
        }
        let (kmod, incl) = ker.as_module(alg, &cover.module);
        current = kmod;
        prev_incl = Some(incl);
    }
    unreachable!()
}

fn verify_resolution(alg: &AlgebraData, m: &AModule, res: &ProjResolution) -> Result<()> {
    // d . d = 0 and exactness by rank counts
    for k in 0..res.diffs.len() {
        let next = if k == 0 { &res.aug } else { &res.diffs[k - 1] };
        if !res.diffs[k].then(next).is_zero() {
            return Err(ForgeError::InvalidComplex("consecutive differentials do not vanish".into()));
        }
    }
    // surjectivity of the augmentation
    let img = image_of(alg, m, &res.aug);
    if img.total_dim() != m.total_dim() {
        return Err(ForgeError::InvalidModule("augmentation not surjective".into()));
    }
    // exactness at Q_k: rank d_k = dim ker(next)
    for k in 0..res.diffs.len() {
        let next = if k == 0 { &res.aug } else { &res.diffs[k - 1] };
        let ker = kernel_of(alg, &res.modules[k], next);
        let img = image_of(alg, &res.modules[k], &res.diffs[k]);
        if ker.total_dim() != img.total_dim() {
            return Err(ForgeError::InvalidModule(format!("resolution not exact at step {k}")));
        }
    }
    Ok(())
}

/// Builds the standard direct sum of indecomposable projectives for a vertex
/// multiset, in the canonical coordinate layout.
pub fn standard_proj_module(alg: &AlgebraData, verts: &[usize]) -> AModule {
    let parts: Vec<AModule> = verts.iter().map(|&t| projective_module(alg, t)).collect();
    let refs: Vec<&AModule> = parts.iter().collect();
    AModule::direct_sum(alg, &refs).0
}

pub fn standard_inj_module(alg: &AlgebraData, verts: &[usize]) -> AModule {
    let parts: Vec<AModule> = verts.iter().map(|&t| injective_module(alg, t)).collect();
    let refs: Vec<&AModule> = parts.iter().collect();
    AModule::direct_sum(alg, &refs).0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiveralg::quiver::tests_support::a2_algebra;

    #[test]
    fn a2_projectives() {
        let qa = a2_algebra();
        let p1 = projective_module(&qa, 0);
        let p2 = projective_module(&qa, 1);
        assert_eq!(p1.dims, vec![1, 1]);
        assert_eq!(p2.dims, vec![0, 1]);
    }

    #[test]
    fn a2_hom_spaces() {
        let qa = a2_algebra();
        let p1 = projective_module(&qa, 0);
        let p2 = projective_module(&qa, 1);
        assert_eq!(hom_module_basis(&qa, &p2, &p1).len(), 1);
        assert_eq!(hom_module_basis(&qa, &p1, &p2).len(), 0);
        assert_eq!(hom_module_basis(&qa, &p1, &p1).len(), 1);
    }

    #[test]
    fn hom_contains_identity() {
        let qa = a2_algebra();
        let p1 = projective_module(&qa, 0);
        let id = CompMap::identity(qa.field, &p1);
        let basis = hom_module_basis(&qa, &p1, &p1);
        assert!(basis.len() == 1);
        // identity is a module map
        assert!(id.is_module_map(&qa, &p1, &p1));
    }

    #[test]
    fn simple_resolution_lengths() {
        let qa = a2_algebra();
        // S_2 = P_2: length 0
        let s2 = simple_module(&qa, 1);
        let r2 = min_proj_resolution(&qa, &s2, 8).unwrap();
        assert_eq!(r2.terms.len(), 1);
        assert_eq!(r2.terms[0], vec![1]);
        // S_1: 0 -> P_2 -> P_1 -> S_1 -> 0
        let s1 = simple_module(&qa, 0);
        let r1 = min_proj_resolution(&qa, &s1, 8).unwrap();
        assert_eq!(r1.terms, vec![vec![0], vec![1]]);
    }

    #[test]
    fn yoneda_dimension_count() {
        // dim Hom(P_t, M) = dim M_t
        let qa = a2_algebra();
        let p1 = projective_module(&qa, 0);
        for t in 0..2 {
            let pt = projective_module(&qa, t);
            assert_eq!(hom_module_basis(&qa, &pt, &p1).len(), p1.dims[t]);
        }
    }
}
