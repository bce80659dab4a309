//! Acyclic quivers, relation sets, and the bound quiver algebra.
//!
//! Paths are stored in traversal order (`arrows[0]` is walked first) and
//! displayed the same way, e.g. `a12a23` for "1 -> 2 -> 3". The algebra
//! product is in function order, so for composable paths `p: s -> t` and
//! `q: u -> s` the basis product is `p * q = "q then p"` and a path `s -> t`
//! has Peirce legs `(t, s)`. The two-sided relation ideal is computed by
//! linear closure: every padding of a relation by paths on both sides is
//! enumerated, which is exhaustive because the quiver is acyclic.

use crate::error::{ForgeError, Result};
use crate::exactlin::{FieldKind, Mat, Scalar, Subspace};
use crate::quiveralg::algebra::{dense_to_sparse, AlgebraData, SparseVec};

#[derive(Clone, Debug)]
pub struct Arrow {
    pub label: String,
    pub from: usize,
    pub to: usize,
}

#[derive(Clone, Debug)]
pub struct Quiver {
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(vertices: Vec<String>, arrows: Vec<(String, String, String)>) -> Result<Quiver> {
        let mut seen = std::collections::BTreeSet::new();
        for v in &vertices {
            if !seen.insert(v.clone()) {
                return Err(ForgeError::DuplicateLabel(v.clone()));
            }
        }
        let vert_idx = |l: &str| -> Result<usize> {
            vertices
                .iter()
                .position(|v| v == l)
                .ok_or_else(|| ForgeError::UnknownArrow(l.to_string()))
        };
        let mut arrs = Vec::new();
        let mut aseen = std::collections::BTreeSet::new();
        for (label, from, to) in arrows {
            if !aseen.insert(label.clone()) || seen.contains(&label) {
                return Err(ForgeError::DuplicateLabel(label));
            }
            arrs.push(Arrow { label, from: vert_idx(&from)?, to: vert_idx(&to)? });
        }
        let q = Quiver { vertices, arrows: arrs };
        q.check_acyclic()?;
        Ok(q)
    }

    pub fn n_vertices(&self) -> usize {
        self.vertices.len()
    }

    fn check_acyclic(&self) -> Result<()> {
        // Kahn's algorithm; leftover vertices lie on a cycle
        let n = self.n_vertices();
        let mut indeg = vec![0usize; n];
        for a in &self.arrows {
            indeg[a.to] += 1;
        }
        let mut queue: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut removed = 0;
        while let Some(v) = queue.pop() {
            removed += 1;
            for a in &self.arrows {
                if a.from == v {
                    indeg[a.to] -= 1;
                    if indeg[a.to] == 0 {
                        queue.push(a.to);
                    }
                }
            }
        }
        if removed != n {
            let culprit = (0..n).find(|&v| indeg[v] > 0).unwrap();
            return Err(ForgeError::CyclicQuiver(self.vertices[culprit].clone()));
        }
        Ok(())
    }

    pub fn arrow_index(&self, label: &str) -> Result<usize> {
        self.arrows
            .iter()
            .position(|a| a.label == label)
            .ok_or_else(|| ForgeError::UnknownArrow(label.to_string()))
    }
}

/// A path in traversal order; empty list of arrows = trivial path at `vertex`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Path {
    pub arrows: Vec<usize>,
    pub vertex: usize,
}

impl Path {
    pub fn source(&self, q: &Quiver) -> usize {
        self.arrows.first().map(|&a| q.arrows[a].from).unwrap_or(self.vertex)
    }

    pub fn target(&self, q: &Quiver) -> usize {
        self.arrows.last().map(|&a| q.arrows[a].to).unwrap_or(self.vertex)
    }

    pub fn display(&self, q: &Quiver) -> String {
        if self.arrows.is_empty() {
            format!("e_{}", q.vertices[self.vertex])
        } else {
            self.arrows.iter().map(|&a| q.arrows[a].label.clone()).collect::<Vec<_>>().join("")
        }
    }
}

/// All paths of the acyclic quiver, trivial paths first, then by length and
/// construction order. Deterministic.
pub fn enumerate_paths(q: &Quiver) -> Vec<Path> {
    let mut paths: Vec<Path> = (0..q.n_vertices()).map(|v| Path { arrows: vec![], vertex: v }).collect();
    let mut frontier: Vec<Path> = paths.clone();
    loop {
        let mut next = Vec::new();
        for p in &frontier {
            let t = p.target(q);
            for (ai, a) in q.arrows.iter().enumerate() {
                if a.from == t {
                    let mut arrows = p.arrows.clone();
                    arrows.push(ai);
                    next.push(Path { arrows, vertex: p.vertex });
                }
            }
        }
        if next.is_empty() {
            break;
        }
        paths.extend(next.iter().cloned());
        frontier = next;
    }
    paths
}

/// A formal linear combination of parallel paths of length >= 2.
#[derive(Clone, Debug)]
pub struct Relation {
    /// `(coefficient, arrow labels in traversal order)`.
    pub terms: Vec<(i64, Vec<String>)>,
}

#[derive(Clone, Debug, Default)]
pub struct RelationSet {
    pub relations: Vec<Relation>,
}

/// A bound quiver algebra together with its path bookkeeping.
pub struct QuiverAlgebra {
    pub alg: AlgebraData,
    pub quiver: Quiver,
    pub paths: Vec<Path>,
    /// `class_of[p]` = basis index of the class of path `p`, if the path
    /// survives as a basis element.
    pub class_of: Vec<Option<usize>>,
    /// Expansion of each path in the surviving class basis.
    pub reduce: Vec<SparseVec>,
}

pub fn build_algebra(q: &Quiver, rels: &RelationSet, field: FieldKind) -> Result<QuiverAlgebra> {
    let paths = enumerate_paths(q);
    let np = paths.len();
    let mut lookup: std::collections::BTreeMap<(Vec<usize>, usize), usize> =
        std::collections::BTreeMap::new();
    for (i, p) in paths.iter().enumerate() {
        let key = (p.arrows.clone(), if p.arrows.is_empty() { p.vertex } else { usize::MAX });
        lookup.insert(key, i);
    }
    let path_index = |arrows: &[usize], vertex: usize| -> Option<usize> {
        let key = (arrows.to_vec(), if arrows.is_empty() { vertex } else { usize::MAX });
        lookup.get(&key).copied()
    };

    // resolve relations into path vectors and check homogeneity
    let mut rel_vectors: Vec<Vec<Scalar>> = Vec::new();
    for rel in &rels.relations {
        let mut v = vec![field.zero(); np];
        let mut ends: Option<(usize, usize)> = None;
        for (coeff, labels) in &rel.terms {
            if labels.len() < 2 {
                return Err(ForgeError::ShortRelationPath);
            }
            let mut arrows = Vec::new();
            for l in labels {
                arrows.push(q.arrow_index(l)?);
            }
            // consecutive arrows must chain
            for w in arrows.windows(2) {
                if q.arrows[w[0]].to != q.arrows[w[1]].from {
                    return Err(ForgeError::InhomogeneousRelation);
                }
            }
            let s = q.arrows[arrows[0]].from;
            let t = q.arrows[*arrows.last().unwrap()].to;
            match ends {
                None => ends = Some((s, t)),
                Some(e) => {
                    if e != (s, t) {
                        return Err(ForgeError::InhomogeneousRelation);
                    }
                }
            }
            let pi = path_index(&arrows, s).ok_or(ForgeError::InhomogeneousRelation)?;
            v[pi] = v[pi].clone() + field.from_i64(*coeff);
        }
        rel_vectors.push(v);
    }

    // two-sided ideal: all paddings pre * rho * post (in traversal order)
    let mut ideal_rows: Vec<Vec<Scalar>> = Vec::new();
    for rel in &rels.relations {
        // endpoints of the relation
        let (rs, rt) = {
            let labels = &rel.terms[0].1;
            let first = q.arrow_index(&labels[0])?;
            let last = q.arrow_index(labels.last().unwrap())?;
            (q.arrows[first].from, q.arrows[last].to)
        };
        for pre in &paths {
            if pre.target(q) != rs {
                continue;
            }
            for post in &paths {
                if post.source(q) != rt {
                    continue;
                }
                let mut v = vec![field.zero(); np];
                for (coeff, labels) in &rel.terms {
                    let mut arrows = pre.arrows.clone();
                    for l in labels {
                        arrows.push(q.arrow_index(l)?);
                    }
                    arrows.extend(post.arrows.iter().cloned());
                    let pi = path_index(&arrows, pre.source(q))
                        .expect("padded relation path must exist in an acyclic quiver");
                    v[pi] = v[pi].clone() + field.from_i64(*coeff);
                }
                ideal_rows.push(v);
            }
        }
    }

    let ideal = Subspace::from_rows(field, np, &Mat::from_rows(field, np, ideal_rows));
    // surviving path classes: non-pivot paths
    let reps = ideal.complement_reps();
    let class_of: Vec<Option<usize>> = (0..np)
        .map(|p| reps.iter().position(|&r| r == p))
        .collect();
    // reduce each path to class coordinates
    let mut reduce: Vec<SparseVec> = Vec::with_capacity(np);
    for p in 0..np {
        let mut e = vec![field.zero(); np];
        e[p] = field.one();
        let r = ideal.reduce(&e);
        let coords: Vec<Scalar> = reps.iter().map(|&c| r[c].clone()).collect();
        reduce.push(dense_to_sparse(&coords));
    }

    let dim = reps.len();
    let labels: Vec<String> = reps.iter().map(|&p| paths[p].display(q)).collect();
    // legs (target, source)
    let legs: Vec<(usize, usize)> = reps
        .iter()
        .map(|&p| (paths[p].target(q), paths[p].source(q)))
        .collect();
    let idem_basis: Vec<usize> = (0..q.n_vertices())
        .map(|v| {
            class_of[v].expect("trivial paths always survive (relations have length >= 2)")
        })
        .collect();

    // multiplication table: class(x) * class(y) = class of "rep(y) then rep(x)"
    let mut table = vec![vec![SparseVec::new(); dim]; dim];
    for (i, &pi) in reps.iter().enumerate() {
        for (j, &pj) in reps.iter().enumerate() {
            let x = &paths[pi];
            let y = &paths[pj];
            if y.target(q) != x.source(q) {
                continue;
            }
            let mut arrows = y.arrows.clone();
            arrows.extend(x.arrows.iter().cloned());
            let concat =
                path_index(&arrows, y.source(q)).expect("concatenation of paths is a path");
            table[i][j] = reduce[concat].clone();
        }
    }

    // radical: classes of paths of length >= 1
    let radical: Vec<Vec<Scalar>> = reps
        .iter()
        .enumerate()
        .filter(|(_, &p)| !paths[p].arrows.is_empty())
        .map(|(i, _)| {
            let mut v = vec![field.zero(); dim];
            v[i] = field.one();
            v
        })
        .collect();

    // generators: arrow classes; words in function order (reversed traversal)
    let gens: Vec<usize> = q
        .arrows
        .iter()
        .enumerate()
        .map(|(ai, _)| {
            class_of[q.n_vertices() + ai].expect("arrows always survive admissible relations")
        })
        .collect();
    // the word of a path in function order is the reversed traversal; gens
    // are indexed by arrow position
    let words: Vec<Vec<usize>> = reps
        .iter()
        .map(|&p| paths[p].arrows.iter().rev().cloned().collect())
        .collect();

    let alg = AlgebraData::new(field, labels, legs, q.n_vertices(), idem_basis, table, radical, gens, words);
    alg.validate()?;
    Ok(QuiverAlgebra { alg, quiver: q.clone(), paths, class_of, reduce })
}

#[cfg(test)]
pub mod tests_support {
    use super::*;

    /// The path algebra of `1 -> 2` over the rationals.
    pub fn a2_algebra() -> AlgebraData {
        let q = Quiver::new(
            vec!["1".into(), "2".into()],
            vec![("a12".into(), "1".into(), "2".into())],
        )
        .unwrap();
        build_algebra(&q, &RelationSet::default(), FieldKind::Q).unwrap().alg
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a2_dimension() {
        let qa = tests_support::a2_algebra();
        assert_eq!(qa.dim(), 3);
        assert_eq!(qa.n_idem, 2);
        assert_eq!(qa.radical.len(), 1);
    }

    #[test]
    fn one_vertex_is_ground_field() {
        let q = Quiver::new(vec!["*".into()], vec![]).unwrap();
        let qa = build_algebra(&q, &RelationSet::default(), FieldKind::Q).unwrap();
        assert_eq!(qa.alg.dim(), 1);
    }

    #[test]
    fn cyclic_rejected() {
        let q = Quiver::new(
            vec!["1".into(), "2".into()],
            vec![
                ("a".into(), "1".into(), "2".into()),
                ("b".into(), "2".into(), "1".into()),
            ],
        );
        assert!(matches!(q, Err(ForgeError::CyclicQuiver(_))));
    }

    #[test]
    fn unknown_arrow_in_relation() {
        let q = Quiver::new(
            vec!["1".into(), "2".into(), "3".into()],
            vec![
                ("a".into(), "1".into(), "2".into()),
                ("b".into(), "2".into(), "3".into()),
            ],
        )
        .unwrap();
        let rels = RelationSet {
            relations: vec![Relation { terms: vec![(1, vec!["a".into(), "c".into()])] }],
        };
        assert!(matches!(
            build_algebra(&q, &rels, FieldKind::Q),
            Err(ForgeError::UnknownArrow(_))
        ));
    }

    #[test]
    fn zero_relation_kills_path() {
        // 1 -> 2 -> 3 with ab = 0: dimension 5+... vertices 3, arrows 2, paths len2: 1 killed
        let q = Quiver::new(
            vec!["1".into(), "2".into(), "3".into()],
            vec![
                ("a".into(), "1".into(), "2".into()),
                ("b".into(), "2".into(), "3".into()),
            ],
        )
        .unwrap();
        let rels = RelationSet {
            relations: vec![Relation { terms: vec![(1, vec!["a".into(), "b".into()])] }],
        };
        let qa = build_algebra(&q, &rels, FieldKind::Q).unwrap();
        assert_eq!(qa.alg.dim(), 5);
    }

    #[test]
    fn commutativity_relation_identifies_paths() {
        // square quiver with commutativity: both length-2 paths collapse to one class
        let q = Quiver::new(
            vec!["1".into(), "2".into(), "3".into(), "4".into()],
            vec![
                ("a".into(), "1".into(), "2".into()),
                ("b".into(), "2".into(), "4".into()),
                ("c".into(), "1".into(), "3".into()),
                ("d".into(), "3".into(), "4".into()),
            ],
        )
        .unwrap();
        let rels = RelationSet {
            relations: vec![Relation {
                terms: vec![(1, vec!["a".into(), "b".into()]), (-1, vec!["c".into(), "d".into()])],
            }],
        };
        let qa = build_algebra(&q, &rels, FieldKind::Q).unwrap();
        // 4 vertices + 4 arrows + 1 class of length-2 paths
        assert_eq!(qa.alg.dim(), 9);
    }
}
