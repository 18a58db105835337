//! Bound quiver algebras kQ/I for length-homogeneous ideals I.
//!
//! The basis is built one path length at a time. Layer d is spanned by the
//! basis words of layer d−1 extended by one arrow; it is cut down by the
//! relation generators `q·r` (q a basis word, r a relation), and the words
//! that survive as non-pivots of that system are kept as basis elements.
//! Columns are ordered so that the lexicographically earliest words survive.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{Field, FieldSpec, Matrix};
use crate::quiver::{ArrowId, LinearRelation, PathWord, Quiver, VertexId};

/// A sparse linear combination of basis elements, sorted by index.
pub type Combination<F> = Vec<(usize, <F as Field>::Elem)>;

pub const DEFAULT_MAX_DEGREE: usize = 64;

#[derive(Clone, Debug)]
pub struct BoundQuiverAlgebra<F: Field> {
    field: F,
    quiver: Quiver,
    relations: Vec<LinearRelation>,
    basis: Vec<PathWord>,
    /// `by_pair[v][w]`: basis indices of paths v → w, in index order.
    by_pair: Vec<Vec<Vec<usize>>>,
    /// `extend[b]` maps an arrow leaving the target of `b` to the normal
    /// form of `b` followed by that arrow.
    extend: Vec<BTreeMap<ArrowId, Combination<F>>>,
    /// Every basis word of positive length is a basis word extended by one arrow.
    parent: Vec<Option<(usize, ArrowId)>>,
    /// First path length contributing no basis elements.
    vanishing_degree: usize,
}

impl<F: Field> BoundQuiverAlgebra<F> {
    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }
    pub fn relations(&self) -> &[LinearRelation] {
        &self.relations
    }
    pub fn vertex_count(&self) -> usize {
        self.quiver.vertex_count()
    }
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }
    pub fn basis(&self) -> &[PathWord] {
        &self.basis
    }
    pub fn basis_word(&self, b: usize) -> &PathWord {
        &self.basis[b]
    }
    /// Basis paths from `v` to `w`.
    pub fn basis_between(&self, v: VertexId, w: VertexId) -> &[usize] {
        &self.by_pair[v][w]
    }
    /// The stationary path at `v` (always basis element `v`).
    pub fn idempotent(&self, v: VertexId) -> usize {
        v
    }
    /// The basis word and arrow that basis element `b` extends, if `b` is not stationary.
    pub fn parent(&self, b: usize) -> Option<(usize, ArrowId)> {
        self.parent[b]
    }
    pub fn vanishing_degree(&self) -> usize {
        self.vanishing_degree
    }
    /// Length of the longest nonzero path.
    pub fn loewy_length(&self) -> usize {
        self.basis.iter().map(|p| p.len()).max().unwrap_or(0) + 1
    }

    /// Normal form of basis element `b` followed by arrow `a`.
    pub fn extend_by_arrow(&self, b: usize, a: ArrowId) -> &[(usize, F::Elem)] {
        self.extend[b].get(&a).map_or(&[], |c| c.as_slice())
    }

    /// Applies arrow `a` on the right of a combination.
    pub fn combination_times_arrow(&self, x: &[(usize, F::Elem)], a: ArrowId) -> Combination<F> {
        let mut acc = BTreeMap::new();
        for (b, c) in x {
            for (t, d) in self.extend_by_arrow(*b, a) {
                let e = acc.entry(*t).or_insert_with(|| self.field.zero());
                self.field.add_mul_assign(e, c, d);
            }
        }
        self.clean(acc)
    }

    fn clean(&self, acc: BTreeMap<usize, F::Elem>) -> Combination<F> {
        acc.into_iter().filter(|(_, c)| !self.field.is_zero(c)).collect()
    }

    /// Normal form of an arbitrary path.
    pub fn normal_form(&self, p: &PathWord) -> Combination<F> {
        let mut x = vec![(p.source, self.field.one())];
        for &a in &p.arrows {
            x = self.combination_times_arrow(&x, a);
        }
        x
    }

    /// Product "first `x`, then `y`" of two elements.
    pub fn multiply(&self, x: &[(usize, F::Elem)], y: &[(usize, F::Elem)]) -> Combination<F> {
        let mut acc: BTreeMap<usize, F::Elem> = BTreeMap::new();
        for (b2, c2) in y {
            let w = &self.basis[*b2];
            let mut cur: Combination<F> =
                x.iter().filter(|(b1, _)| self.basis[*b1].target == w.source).cloned().collect();
            for &a in &w.arrows {
                cur = self.combination_times_arrow(&cur, a);
            }
            for (t, c) in cur {
                let e = acc.entry(t).or_insert_with(|| self.field.zero());
                self.field.add_mul_assign(e, &c, c2);
            }
        }
        self.clean(acc)
    }

    /// Evaluates a relation in the algebra.
    pub fn evaluate(&self, r: &LinearRelation) -> Combination<F> {
        let mut acc: BTreeMap<usize, F::Elem> = BTreeMap::new();
        for (c, p) in &r.terms {
            let c = self.field.from_i64(*c);
            for (t, d) in self.normal_form(p) {
                let e = acc.entry(t).or_insert_with(|| self.field.zero());
                self.field.add_mul_assign(e, &c, &d);
            }
        }
        self.clean(acc)
    }

    /// `C[v][w]` = number of basis paths from `v` to `w`, which is the
    /// dimension of P(v) at vertex `w`.
    pub fn cartan_matrix(&self) -> Vec<Vec<usize>> {
        self.by_pair.iter().map(|row| row.iter().map(|b| b.len()).collect()).collect()
    }

    /// The algebra on the opposite quiver with every relation reversed.
    pub fn opposite(&self) -> Result<BoundQuiverAlgebra<F>> {
        let rels = self.relations.iter().map(|r| r.reversed()).collect();
        build_algebra(self.quiver.opposite(), rels, self.field.clone(), DEFAULT_MAX_DEGREE)
    }

    pub fn summary(&self) -> AlgebraSummary {
        let q = &self.quiver;
        let n = q.vertex_count();
        let mut blocks = Vec::new();
        for v in 0..n {
            for w in 0..n {
                let idx = &self.by_pair[v][w];
                if !idx.is_empty() {
                    blocks.push(BasisBlock {
                        source: q.vertex_label(v).to_string(),
                        target: q.vertex_label(w).to_string(),
                        paths: idx.iter().map(|&b| self.basis[b].display(q)).collect(),
                    });
                }
            }
        }
        AlgebraSummary {
            field: self.field.spec(),
            vertices: q.vertex_labels().to_vec(),
            arrows: q
                .arrows()
                .iter()
                .map(|a| (a.label.clone(), q.vertex_label(a.source).into(), q.vertex_label(a.target).into()))
                .collect(),
            relations: self.relations.iter().map(|r| r.display(q)).collect(),
            dimension: self.dimension(),
            vanishing_degree: self.vanishing_degree,
            basis: blocks,
            cartan: self.cartan_matrix(),
        }
    }
}

/// Serializable description of an algebra: basis by (source, target) and Cartan matrix.
#[derive(Clone, Debug, Serialize)]
pub struct AlgebraSummary {
    pub field: FieldSpec,
    pub vertices: Vec<String>,
    /// (label, source, target)
    pub arrows: Vec<(String, String, String)>,
    pub relations: Vec<String>,
    pub dimension: usize,
    pub vanishing_degree: usize,
    pub basis: Vec<BasisBlock>,
    pub cartan: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct BasisBlock {
    pub source: String,
    pub target: String,
    pub paths: Vec<String>,
}

/// Builds kQ/I where I is generated by `relations`.
///
/// Fails with `NotAdmissible` if paths of length `max_degree` still survive.
pub fn build_algebra<F: Field>(
    quiver: Quiver,
    relations: Vec<LinearRelation>,
    field: F,
    max_degree: usize,
) -> Result<BoundQuiverAlgebra<F>> {
    for r in &relations {
        r.validate()?;
        for (_, p) in &r.terms {
            PathWord::from_arrows(&quiver, p.arrows.clone())?;
        }
    }
    let nv = quiver.vertex_count();
    let mut basis: Vec<PathWord> = (0..nv).map(PathWord::stationary).collect();
    let mut extend: Vec<BTreeMap<ArrowId, Combination<F>>> = vec![BTreeMap::new(); nv];
    let mut parent: Vec<Option<(usize, ArrowId)>> = vec![None; nv];
    // basis indices by degree
    let mut layers: Vec<Vec<usize>> = vec![(0..nv).collect()];

    let mut degree = 1;
    loop {
        let prev = layers[degree - 1].clone();
        // candidate words: previous layer extended by one arrow
        let mut candidates: Vec<(usize, ArrowId, PathWord)> = Vec::new();
        for &b in &prev {
            for &a in quiver.arrows_from(basis[b].target) {
                let mut w = basis[b].clone();
                w.arrows.push(a);
                w.target = quiver.arrow(a).target;
                candidates.push((b, a, w));
            }
        }
        let cand_index: BTreeMap<(usize, ArrowId), usize> =
            candidates.iter().enumerate().map(|(i, (b, a, _))| ((*b, *a), i)).collect();

        // relation generators of this degree, in candidate coordinates
        let mut generators: Vec<BTreeMap<usize, F::Elem>> = Vec::new();
        for r in relations.iter().filter(|r| r.degree() <= degree) {
            let src = r.terms[0].1.source;
            for &q in &layers[degree - r.degree()] {
                if basis[q].target != src {
                    continue;
                }
                let mut g: BTreeMap<usize, F::Elem> = BTreeMap::new();
                for (c, t) in &r.terms {
                    let (last, init) = t.arrows.split_last().expect("relation terms are nonempty");
                    let mut x: Combination<F> = vec![(q, field.one())];
                    for &a in init {
                        x = times_arrow(&field, &extend, &x, a);
                    }
                    let c = field.from_i64(*c);
                    for (b, d) in x {
                        let col = cand_index[&(b, *last)];
                        let e = g.entry(col).or_insert_with(|| field.zero());
                        field.add_mul_assign(e, &c, &d);
                    }
                }
                g.retain(|_, v| !field.is_zero(v));
                if !g.is_empty() {
                    generators.push(g);
                }
            }
        }

        // reduce each (source, target) block separately
        let mut groups: BTreeMap<(VertexId, VertexId), Vec<usize>> = BTreeMap::new();
        for (i, (_, _, w)) in candidates.iter().enumerate() {
            groups.entry((w.source, w.target)).or_default().push(i);
        }
        let mut resolved: Vec<Option<Combination<F>>> = vec![None; candidates.len()];
        let mut new_layer = Vec::new();
        for cols in groups.values() {
            // descending lexicographic order: earliest words end up free
            let mut cols = cols.clone();
            cols.sort_by(|&i, &j| candidates[j].2.arrows.cmp(&candidates[i].2.arrows));
            let pos: BTreeMap<usize, usize> = cols.iter().enumerate().map(|(k, &c)| (c, k)).collect();
            let rows: Vec<&BTreeMap<usize, F::Elem>> = generators
                .iter()
                .filter(|g| g.keys().next().is_some_and(|k| pos.contains_key(k)))
                .collect();
            let mut m = Matrix::zeros(&field, rows.len(), cols.len());
            for (r, g) in rows.iter().enumerate() {
                for (c, v) in g.iter() {
                    m.set(r, pos[c], v.clone());
                }
            }
            let rr = m.rref();
            let mut is_pivot = vec![false; cols.len()];
            for &p in &rr.pivots {
                is_pivot[p] = true;
            }
            let mut free_index = vec![usize::MAX; cols.len()];
            // new basis elements in ascending lexicographic order
            for k in (0..cols.len()).rev() {
                if !is_pivot[k] {
                    let (b, a, w) = &candidates[cols[k]];
                    free_index[k] = basis.len();
                    basis.push(w.clone());
                    extend.push(BTreeMap::new());
                    parent.push(Some((*b, *a)));
                    new_layer.push(free_index[k]);
                    resolved[cols[k]] = Some(vec![(free_index[k], field.one())]);
                }
            }
            for (r, &p) in rr.pivots.iter().enumerate() {
                let mut comb: Combination<F> = (0..cols.len())
                    .filter(|&k| !is_pivot[k] && !field.is_zero(rr.reduced.get(r, k)))
                    .map(|k| (free_index[k], field.neg(rr.reduced.get(r, k))))
                    .collect();
                comb.sort_by_key(|(i, _)| *i);
                resolved[cols[p]] = Some(comb);
            }
        }
        for (i, (b, a, _)) in candidates.iter().enumerate() {
            extend[*b].insert(*a, resolved[i].take().expect("every candidate is resolved"));
        }
        if new_layer.is_empty() {
            break;
        }
        if degree >= max_degree {
            return Err(Error::NotAdmissible { degree, new_elements: new_layer.len() });
        }
        layers.push(new_layer);
        degree += 1;
    }

    let mut by_pair = vec![vec![Vec::new(); nv]; nv];
    for (i, p) in basis.iter().enumerate() {
        by_pair[p.source][p.target].push(i);
    }
    Ok(BoundQuiverAlgebra { field, quiver, relations, basis, by_pair, extend, parent, vanishing_degree: degree })
}

fn times_arrow<F: Field>(
    field: &F,
    extend: &[BTreeMap<ArrowId, Combination<F>>],
    x: &[(usize, F::Elem)],
    a: ArrowId,
) -> Combination<F> {
    let mut acc: BTreeMap<usize, F::Elem> = BTreeMap::new();
    for (b, c) in x {
        if let Some(img) = extend[*b].get(&a) {
            for (t, d) in img {
                let e = acc.entry(*t).or_insert_with(|| field.zero());
                field.add_mul_assign(e, c, d);
            }
        }
    }
    acc.into_iter().filter(|(_, c)| !field.is_zero(c)).collect()
}
