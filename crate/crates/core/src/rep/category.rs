//! Homological toolkit for the module category of a bound quiver algebra.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::subspace::{Quotient, Subspace};
use super::{Morphism, PathActions, Representation};
use crate::algebra::{BoundQuiverAlgebra, Combination};
use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix};
use crate::quiver::VertexId;

#[derive(Debug)]
struct Side<F: Field> {
    alg: BoundQuiverAlgebra<F>,
    projectives: Vec<Representation<F>>,
    /// `position[b]`: index of basis element `b` inside its (source, target) block.
    position: Vec<usize>,
}

impl<F: Field> Side<F> {
    fn new(alg: BoundQuiverAlgebra<F>) -> Self {
        let n = alg.vertex_count();
        let mut position = vec![0; alg.dimension()];
        for v in 0..n {
            for w in 0..n {
                for (i, &b) in alg.basis_between(v, w).iter().enumerate() {
                    position[b] = i;
                }
            }
        }
        let f = alg.field().clone();
        let projectives = (0..n)
            .map(|v| {
                let dims: Vec<usize> = (0..n).map(|w| alg.basis_between(v, w).len()).collect();
                let maps = alg
                    .quiver()
                    .arrows()
                    .iter()
                    .enumerate()
                    .map(|(a, ar)| {
                        let mut m = Matrix::zeros(&f, dims[ar.target], dims[ar.source]);
                        for &b in alg.basis_between(v, ar.source) {
                            for (t, c) in alg.extend_by_arrow(b, a) {
                                m.set(position[*t], position[b], c.clone());
                            }
                        }
                        m
                    })
                    .collect();
                Representation::from_parts(dims, maps)
            })
            .collect();
        Side { alg, projectives, position }
    }
}

/// Modules over an algebra together with its opposite, so that duality,
/// injectives and the transpose are available.
#[derive(Clone, Debug)]
pub struct ModuleCategory<F: Field> {
    here: Arc<Side<F>>,
    there: Arc<Side<F>>,
}

/// A projective cover `P0 → X` built from top generators of `X`.
#[derive(Clone, Debug)]
pub struct Cover<F: Field> {
    /// Vertex of each generator; `P0 = ⊕_j P(tops[j])`.
    pub tops: Vec<VertexId>,
    /// Each generator is the standard vector `gens[j]` of `X` at `tops[j]`.
    pub gens: Vec<usize>,
    pub projective: Representation<F>,
    /// For each vertex `w`, the basis of `P0_w` as pairs (generator, basis path).
    pub labels: Vec<Vec<(usize, usize)>>,
    pub epi: Morphism<F>,
    /// Right inverses of the vertex maps of `epi`.
    pub section: Vec<Matrix<F>>,
}

/// One generator of the relation module: the map `P(vertex) → P0` given by
/// a path combination into each summand.
#[derive(Clone, Debug)]
pub struct RelationGenerator<F: Field> {
    pub vertex: VertexId,
    /// (generator index j, element of `P(tops[j])` at `vertex`).
    pub components: Vec<(usize, Combination<F>)>,
}

/// Minimal projective presentation `P1 → P0 → X → 0`.
#[derive(Clone, Debug)]
pub struct Presentation<F: Field> {
    pub cover: Cover<F>,
    /// Ω X with its inclusion into `P0`.
    pub syzygy: Representation<F>,
    pub inclusion: Morphism<F>,
    /// Rows of the inclusion matrices that read off syzygy coordinates.
    pub(crate) syzygy_rows: Vec<Vec<usize>>,
    pub relations: Vec<RelationGenerator<F>>,
}

/// Projective (or injective) dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ProjDim {
    /// The zero module.
    Zero,
    Finite(usize),
    /// No projective syzygy within the cap.
    Infinite,
}

impl ProjDim {
    pub fn finite(self) -> Option<usize> {
        match self {
            ProjDim::Finite(d) => Some(d),
            _ => None,
        }
    }
}

impl<F: Field> ModuleCategory<F> {
    pub fn new(alg: BoundQuiverAlgebra<F>) -> Result<Self> {
        let op = alg.opposite()?;
        Ok(ModuleCategory { here: Arc::new(Side::new(alg)), there: Arc::new(Side::new(op)) })
    }

    /// The category of modules over the opposite algebra.
    pub fn opposite(&self) -> ModuleCategory<F> {
        ModuleCategory { here: self.there.clone(), there: self.here.clone() }
    }

    pub fn algebra(&self) -> &BoundQuiverAlgebra<F> {
        &self.here.alg
    }
    pub fn opposite_algebra(&self) -> &BoundQuiverAlgebra<F> {
        &self.there.alg
    }
    pub fn field(&self) -> &F {
        self.here.alg.field()
    }
    pub fn vertex_count(&self) -> usize {
        self.here.alg.vertex_count()
    }

    pub fn zero(&self) -> Representation<F> {
        Representation::zero(&self.here.alg)
    }

    pub fn simple(&self, v: VertexId) -> Representation<F> {
        let mut dims = vec![0; self.vertex_count()];
        dims[v] = 1;
        let f = self.field();
        let maps = self
            .algebra()
            .quiver()
            .arrows()
            .iter()
            .map(|a| Matrix::zeros(f, dims[a.target], dims[a.source]))
            .collect();
        Representation::from_parts(dims, maps)
    }

    /// P(v): paths starting at `v`, arrows acting by extension.
    pub fn projective(&self, v: VertexId) -> &Representation<F> {
        &self.here.projectives[v]
    }

    /// I(v): the dual of the projective at `v` over the opposite algebra.
    pub fn injective(&self, v: VertexId) -> Representation<F> {
        self.there.projectives[v].dual()
    }

    /// Checks that `x` is a representation of this algebra.
    pub fn validate(&self, x: &Representation<F>) -> Result<()> {
        Representation::new(self.algebra(), x.dims().to_vec(), x.maps().to_vec()).map(|_| ())
    }

    // ----- radical, top, socle -------------------------------------------------

    fn radical_space(&self, x: &Representation<F>, w: VertexId) -> Matrix<F> {
        let q = self.algebra().quiver();
        let blocks: Vec<&Matrix<F>> = q.arrows_into(w).iter().map(|&a| x.map(a)).collect();
        Matrix::hstack(self.field(), x.dim(w), &blocks)
    }

    fn socle_space(&self, x: &Representation<F>, w: VertexId) -> (Matrix<F>, Vec<usize>) {
        let q = self.algebra().quiver();
        let blocks: Vec<&Matrix<F>> = q.arrows_from(w).iter().map(|&a| x.map(a)).collect();
        Matrix::vstack(self.field(), x.dim(w), &blocks).kernel_basis_with_free()
    }

    /// Multiplicity of S(w) in the top of `x`, for every `w`.
    pub fn top_dims(&self, x: &Representation<F>) -> Vec<usize> {
        (0..self.vertex_count()).map(|w| x.dim(w) - self.radical_space(x, w).rank()).collect()
    }

    /// Multiplicity of S(w) in the socle of `x`, for every `w`.
    pub fn socle_dims(&self, x: &Representation<F>) -> Vec<usize> {
        (0..self.vertex_count()).map(|w| self.socle_space(x, w).0.cols()).collect()
    }

    pub fn radical(&self, x: &Representation<F>) -> (Representation<F>, Morphism<F>) {
        let spaces = (0..self.vertex_count()).map(|w| Subspace::span(&self.radical_space(x, w))).collect();
        self.subrepresentation(x, spaces)
    }

    pub fn socle(&self, x: &Representation<F>) -> (Representation<F>, Morphism<F>) {
        let spaces = (0..self.vertex_count())
            .map(|w| {
                let (k, free) = self.socle_space(x, w);
                Subspace::from_kernel(k, free)
            })
            .collect();
        self.subrepresentation(x, spaces)
    }

    pub fn top(&self, x: &Representation<F>) -> (Representation<F>, Morphism<F>) {
        let (_, inc) = self.radical(x);
        self.cokernel(x, &inc)
    }

    pub fn is_semisimple(&self, x: &Representation<F>) -> bool {
        x.maps().iter().all(|m| m.is_zero())
    }

    pub fn is_projective(&self, x: &Representation<F>) -> bool {
        let top = self.top_dims(x);
        let covered: usize = top.iter().enumerate().map(|(w, &t)| t * self.projective(w).total_dim()).sum();
        covered == x.total_dim()
    }

    pub fn is_injective(&self, x: &Representation<F>) -> bool {
        let soc = self.socle_dims(x);
        let hull: usize =
            soc.iter().enumerate().map(|(w, &s)| s * self.there.projectives[w].total_dim()).sum();
        hull == x.total_dim()
    }

    // ----- sub- and quotient representations ----------------------------------

    /// The subrepresentation on the given vertex subspaces, which must be
    /// stable under the arrows.
    pub fn subrepresentation(
        &self,
        x: &Representation<F>,
        spaces: Vec<Subspace<F>>,
    ) -> (Representation<F>, Morphism<F>) {
        let q = self.algebra().quiver();
        let dims: Vec<usize> = spaces.iter().map(|s| s.dim()).collect();
        let maps = q
            .arrows()
            .iter()
            .enumerate()
            .map(|(a, ar)| spaces[ar.target].coords(&x.map(a).mul(spaces[ar.source].basis())))
            .collect();
        let inc = Morphism { maps: spaces.iter().map(|s| s.basis().clone()).collect() };
        (Representation::from_parts(dims, maps), inc)
    }

    pub fn kernel(&self, x: &Representation<F>, f: &Morphism<F>) -> (Representation<F>, Morphism<F>) {
        let spaces = f
            .maps
            .iter()
            .map(|m| {
                let (k, free) = m.kernel_basis_with_free();
                Subspace::from_kernel(k, free)
            })
            .collect();
        self.subrepresentation(x, spaces)
    }

    pub fn image(&self, y: &Representation<F>, f: &Morphism<F>) -> (Representation<F>, Morphism<F>) {
        let spaces = f.maps.iter().map(Subspace::span).collect();
        self.subrepresentation(y, spaces)
    }

    /// Cokernel of `f: X → y`, with the projection from `y`.
    pub fn cokernel(&self, y: &Representation<F>, f: &Morphism<F>) -> (Representation<F>, Morphism<F>) {
        let fld = self.field();
        let quots: Vec<Quotient<F>> = f.maps.iter().map(Quotient::new).collect();
        let q = self.algebra().quiver();
        let dims: Vec<usize> = quots.iter().map(|c| c.dim()).collect();
        let maps = q
            .arrows()
            .iter()
            .enumerate()
            .map(|(a, ar)| {
                let sec = quots[ar.source].section(fld, y.dim(ar.source));
                quots[ar.target].projection.mul(&y.map(a).mul(&sec))
            })
            .collect();
        let proj = Morphism { maps: quots.into_iter().map(|c| c.projection).collect() };
        (Representation::from_parts(dims, maps), proj)
    }

    // ----- projective covers and presentations --------------------------------

    pub fn projective_cover(&self, x: &Representation<F>) -> Cover<F> {
        let alg = self.algebra();
        let f = self.field();
        let n = self.vertex_count();
        let mut tops = Vec::new();
        let mut gens = Vec::new();
        for w in 0..n {
            for k in self.radical_space(x, w).complement_indices() {
                tops.push(w);
                gens.push(k);
            }
        }
        let parts: Vec<&Representation<F>> = tops.iter().map(|&v| self.projective(v)).collect();
        let projective = Representation::sum_all(alg, &parts);
        let mut actions = PathActions::new(alg, x);
        let mut labels = Vec::with_capacity(n);
        let mut epi = Vec::with_capacity(n);
        let mut section = Vec::with_capacity(n);
        for w in 0..n {
            let lab: Vec<(usize, usize)> = tops
                .iter()
                .enumerate()
                .flat_map(|(j, &v)| alg.basis_between(v, w).iter().map(move |&b| (j, b)))
                .collect();
            let mut pi = Matrix::zeros(f, x.dim(w), lab.len());
            for (c, &(j, b)) in lab.iter().enumerate() {
                let m = actions.get(b);
                for r in 0..x.dim(w) {
                    pi.set(r, c, m.get(r, gens[j]).clone());
                }
            }
            let piv = pi.pivot_columns();
            let inv = pi.select_cols(&piv).inverse().expect("cover is surjective");
            let mut s = Matrix::zeros(f, lab.len(), x.dim(w));
            for (i, &p) in piv.iter().enumerate() {
                for c in 0..x.dim(w) {
                    s.set(p, c, inv.get(i, c).clone());
                }
            }
            labels.push(lab);
            epi.push(pi);
            section.push(s);
        }
        Cover { tops, gens, projective, labels, epi: Morphism { maps: epi }, section }
    }

    pub fn presentation(&self, x: &Representation<F>) -> Presentation<F> {
        let cover = self.projective_cover(x);
        let mut syzygy_rows = Vec::with_capacity(self.vertex_count());
        let spaces: Vec<Subspace<F>> = cover
            .epi
            .maps
            .iter()
            .map(|m| {
                let (k, free) = m.kernel_basis_with_free();
                syzygy_rows.push(free.clone());
                Subspace::from_kernel(k, free)
            })
            .collect();
        let (syzygy, inclusion) = self.subrepresentation(&cover.projective, spaces);
        let mut relations = Vec::new();
        for u in 0..self.vertex_count() {
            for k in self.radical_space(&syzygy, u).complement_indices() {
                let col = inclusion.maps[u].column(k);
                let mut components: Vec<(usize, Combination<F>)> = Vec::new();
                for (c, &(j, b)) in cover.labels[u].iter().enumerate() {
                    if self.field().is_zero(&col[c]) {
                        continue;
                    }
                    match components.last_mut() {
                        Some((jj, comb)) if *jj == j => comb.push((b, col[c].clone())),
                        _ => components.push((j, vec![(b, col[c].clone())])),
                    }
                }
                relations.push(RelationGenerator { vertex: u, components });
            }
        }
        Presentation { cover, syzygy, inclusion, syzygy_rows, relations }
    }

    pub fn syzygy(&self, x: &Representation<F>) -> Representation<F> {
        let cover = self.projective_cover(x);
        self.kernel(&cover.projective, &cover.epi).0
    }

    pub fn syzygy_n(&self, x: &Representation<F>, j: usize) -> Representation<F> {
        let mut y = x.clone();
        for _ in 0..j {
            if y.is_zero() {
                break;
            }
            y = self.syzygy(&y);
        }
        y
    }

    /// Injective envelope `X → I`, dual to a projective cover over the opposite algebra.
    pub fn injective_envelope(&self, x: &Representation<F>) -> (Representation<F>, Morphism<F>) {
        let c = self.opposite().projective_cover(&x.dual());
        (c.projective.dual(), c.epi.dual())
    }

    pub fn cosyzygy(&self, x: &Representation<F>) -> Representation<F> {
        self.opposite().syzygy(&x.dual()).dual()
    }

    pub fn cosyzygy_n(&self, x: &Representation<F>, j: usize) -> Representation<F> {
        self.opposite().syzygy_n(&x.dual(), j).dual()
    }

    /// Smallest `j` with Ω^j X projective; gives up after `dim A` steps.
    pub fn proj_dimension(&self, x: &Representation<F>) -> ProjDim {
        if x.is_zero() {
            return ProjDim::Zero;
        }
        let cap = self.algebra().dimension();
        let mut y = x.clone();
        for j in 0..=cap {
            if self.is_projective(&y) {
                return ProjDim::Finite(j);
            }
            y = self.syzygy(&y);
        }
        ProjDim::Infinite
    }

    pub fn inj_dimension(&self, x: &Representation<F>) -> ProjDim {
        self.opposite().proj_dimension(&x.dual())
    }

    // ----- Hom and Ext ---------------------------------------------------------

    /// The relation matrix whose kernel is Hom(X, y), in the coordinates
    /// `(y_j)_j ∈ ⊕_j y_{tops[j]}` of the images of the generators.
    fn hom_system(&self, pres: &Presentation<F>, y: &Representation<F>) -> Matrix<F> {
        let alg = self.algebra();
        let tops = &pres.cover.tops;
        let col_off: Vec<usize> = offsets(tops.iter().map(|&v| y.dim(v)));
        let row_off: Vec<usize> = offsets(pres.relations.iter().map(|r| y.dim(r.vertex)));
        let mut b = Matrix::zeros(self.field(), *row_off.last().unwrap(), *col_off.last().unwrap());
        let mut actions = PathActions::new(alg, y);
        for (i, r) in pres.relations.iter().enumerate() {
            for (j, comb) in &r.components {
                let blk = actions.combination(comb, y.dim(r.vertex), y.dim(tops[*j]));
                b.set_block(row_off[i], col_off[*j], &blk);
            }
        }
        b
    }

    pub fn hom_dim_with(&self, pres: &Presentation<F>, y: &Representation<F>) -> usize {
        let cols: usize = pres.cover.tops.iter().map(|&v| y.dim(v)).sum();
        if cols == 0 {
            return 0;
        }
        cols - self.hom_system(pres, y).rank()
    }

    pub fn hom_dim(&self, x: &Representation<F>, y: &Representation<F>) -> usize {
        if x.is_zero() || y.is_zero() {
            return 0;
        }
        self.hom_dim_with(&self.presentation(x), y)
    }

    /// Basis of Hom(X, y) from a presentation of X.
    pub fn hom_basis_with(
        &self,
        x: &Representation<F>,
        pres: &Presentation<F>,
        y: &Representation<F>,
    ) -> Vec<Morphism<F>> {
        let alg = self.algebra();
        let f = self.field();
        let tops = &pres.cover.tops;
        let cols: usize = tops.iter().map(|&v| y.dim(v)).sum();
        if cols == 0 {
            return Vec::new();
        }
        let kernel = self.hom_system(pres, y).kernel_basis();
        let col_off = offsets(tops.iter().map(|&v| y.dim(v)));
        let mut actions = PathActions::new(alg, y);
        (0..kernel.cols())
            .map(|t| {
                let z = kernel.column(t);
                let maps = (0..self.vertex_count())
                    .map(|w| {
                        let lab = &pres.cover.labels[w];
                        let mut fw = Matrix::zeros(f, y.dim(w), lab.len());
                        for (c, &(j, b)) in lab.iter().enumerate() {
                            let yj = &z[col_off[j]..col_off[j + 1]];
                            let v = actions.get(b).mul_vec(yj);
                            for (r, e) in v.into_iter().enumerate() {
                                fw.set(r, c, e);
                            }
                        }
                        let m = fw.mul(&pres.cover.section[w]);
                        debug_assert_eq!(m.shape(), (y.dim(w), x.dim(w)));
                        m
                    })
                    .collect();
                Morphism { maps }
            })
            .collect()
    }

    pub fn hom_basis(&self, x: &Representation<F>, y: &Representation<F>) -> Vec<Morphism<F>> {
        if x.is_zero() || y.is_zero() {
            return Vec::new();
        }
        self.hom_basis_with(x, &self.presentation(x), y)
    }

    /// Hom(X, Y) as the solution space of the intertwining equations in all
    /// vertex-matrix entries at once.
    pub fn hom_basis_naive(&self, x: &Representation<F>, y: &Representation<F>) -> Vec<Morphism<F>> {
        let f = self.field();
        let n = self.vertex_count();
        let off = offsets((0..n).map(|w| y.dim(w) * x.dim(w)));
        let unknowns = off[n];
        let q = self.algebra().quiver();
        let mut rows: Vec<Vec<(usize, F::Elem)>> = Vec::new();
        for (a, ar) in q.arrows().iter().enumerate() {
            let (s, t) = (ar.source, ar.target);
            let (xa, ya) = (x.map(a), y.map(a));
            // (Y_a f_s − f_t X_a)[r][c] = 0
            for r in 0..y.dim(t) {
                for c in 0..x.dim(s) {
                    let mut row = Vec::new();
                    for k in 0..y.dim(s) {
                        let v = ya.get(r, k);
                        if !f.is_zero(v) {
                            row.push((off[s] + k * x.dim(s) + c, v.clone()));
                        }
                    }
                    for k in 0..x.dim(t) {
                        let v = xa.get(k, c);
                        if !f.is_zero(v) {
                            row.push((off[t] + r * x.dim(t) + k, f.neg(v)));
                        }
                    }
                    rows.push(row);
                }
            }
        }
        let mut m = Matrix::zeros(f, rows.len(), unknowns);
        for (i, row) in rows.iter().enumerate() {
            for (j, v) in row {
                let cur = m.get(i, *j).clone();
                m.set(i, *j, f.add(&cur, v));
            }
        }
        let k = m.kernel_basis();
        (0..k.cols())
            .map(|t| {
                let z = k.column(t);
                let maps = (0..n)
                    .map(|w| {
                        Matrix::from_data(f, y.dim(w), x.dim(w), z[off[w]..off[w + 1]].to_vec())
                            .expect("sizes match")
                    })
                    .collect();
                Morphism { maps }
            })
            .collect()
    }

    /// dim Ext^i(X, Y), computed as dim Ext^1(Ω^{i−1} X, Y) from the exact
    /// sequence 0 → Hom(Z,Y) → Hom(P0,Y) → Hom(ΩZ,Y) → Ext^1(Z,Y) → 0.
    pub fn ext_dim(&self, x: &Representation<F>, y: &Representation<F>, i: usize) -> usize {
        if i == 0 {
            return self.hom_dim(x, y);
        }
        let z = self.syzygy_n(x, i - 1);
        if z.is_zero() || y.is_zero() {
            return 0;
        }
        let pres = self.presentation(&z);
        self.ext1_with(&pres, y)
    }

    /// dim Ext^1(Z, y) given a presentation of Z.
    pub fn ext1_with(&self, pres: &Presentation<F>, y: &Representation<F>) -> usize {
        if pres.syzygy.is_zero() || y.is_zero() {
            return 0;
        }
        let hom_p0: usize = pres.cover.tops.iter().map(|&v| y.dim(v)).sum();
        let rank = hom_p0 - self.hom_dim_with(pres, y);
        self.hom_dim(&pres.syzygy, y) - rank
    }

    // ----- lifting endomorphisms through a cover --------------------------------

    /// For `φ: X → X'` and covers of both, the induced map of projectives
    /// `P0(X) → P0(X')` and its restriction to the syzygies.
    pub fn lift_through_presentation(
        &self,
        from: &Presentation<F>,
        to: &Presentation<F>,
        phi: &Morphism<F>,
    ) -> (Morphism<F>, Morphism<F>) {
        let alg = self.algebra();
        let f = self.field();
        let p0 = &to.cover.projective;
        // image of each generator of the source cover, lifted into the target P0
        let lifts: Vec<Vec<F::Elem>> = from
            .cover
            .tops
            .iter()
            .zip(&from.cover.gens)
            .map(|(&v, &k)| to.cover.section[v].mul_vec(&phi.maps[v].column(k)))
            .collect();
        let mut actions = PathActions::new(alg, p0);
        let n = self.vertex_count();
        let maps: Vec<Matrix<F>> = (0..n)
            .map(|w| {
                let lab = &from.cover.labels[w];
                let mut m = Matrix::zeros(f, p0.dim(w), lab.len());
                for (c, &(j, b)) in lab.iter().enumerate() {
                    let v = actions.get(b).mul_vec(&lifts[j]);
                    for (r, e) in v.into_iter().enumerate() {
                        m.set(r, c, e);
                    }
                }
                m
            })
            .collect();
        let restricted = (0..n)
            .map(|w| maps[w].mul(&from.inclusion.maps[w]).select_rows(&to.syzygy_rows[w]))
            .collect();
        (Morphism { maps }, Morphism { maps: restricted })
    }

    // ----- transpose and Auslander–Reiten translates --------------------------

    /// Tr X as a module over the opposite algebra: the cokernel of the dual
    /// of the minimal presentation.
    pub fn transpose_with(&self, pres: &Presentation<F>) -> Representation<F> {
        let op = self.opposite();
        let opalg = op.algebra();
        let f = self.field();
        let n = self.vertex_count();
        let src: Vec<VertexId> = pres.cover.tops.clone();
        let tgt: Vec<VertexId> = pres.relations.iter().map(|r| r.vertex).collect();
        let target_parts: Vec<&Representation<F>> = tgt.iter().map(|&u| op.projective(u)).collect();
        let target = Representation::sum_all(opalg, &target_parts);
        // op elements r_ij in P_op(u_i) at vertex v_j
        let mut elems: Vec<Vec<(usize, Combination<F>)>> = vec![Vec::new(); src.len()];
        for (i, r) in pres.relations.iter().enumerate() {
            for (j, comb) in &r.components {
                let mut acc: Combination<F> = Vec::new();
                for (b, c) in comb {
                    let word = self.algebra().basis_word(*b).reversed();
                    for (t, d) in opalg.normal_form(&word) {
                        acc.push((t, f.mul(c, &d)));
                    }
                }
                elems[*j].push((i, merge(f, acc)));
            }
        }
        let tgt_off: Vec<Vec<usize>> =
            (0..n).map(|w| offsets(tgt.iter().map(|&u| opalg.basis_between(u, w).len()))).collect();
        let maps = (0..n)
            .map(|w| {
                let src_cols: usize = src.iter().map(|&v| opalg.basis_between(v, w).len()).sum();
                let mut m = Matrix::zeros(f, target.dim(w), src_cols);
                let mut col = 0;
                for (j, &v) in src.iter().enumerate() {
                    for &qb in opalg.basis_between(v, w) {
                        for (i, r) in &elems[j] {
                            let prod = opalg.multiply(r, &[(qb, f.one())]);
                            for (t, c) in prod {
                                let row = tgt_off[w][*i] + op.here.position[t];
                                let cur = m.get(row, col).clone();
                                m.set(row, col, f.add(&cur, &c));
                            }
                        }
                        col += 1;
                    }
                }
                m
            })
            .collect();
        op.cokernel(&target, &Morphism { maps }).0
    }

    pub fn transpose(&self, x: &Representation<F>) -> Representation<F> {
        if x.is_zero() {
            return Representation::zero(self.opposite_algebra());
        }
        self.transpose_with(&self.presentation(x))
    }

    /// τX = D Tr X.
    pub fn tau(&self, x: &Representation<F>) -> Result<Representation<F>> {
        if self.is_projective(x) {
            return Err(Error::ProjectiveInput);
        }
        Ok(self.transpose(x).dual())
    }

    /// τ⁻¹X = Tr D X.
    pub fn tau_inverse(&self, x: &Representation<F>) -> Result<Representation<F>> {
        if self.is_injective(x) {
            return Err(Error::InjectiveInput);
        }
        Ok(self.opposite().transpose(&x.dual()))
    }
}

fn offsets(sizes: impl Iterator<Item = usize>) -> Vec<usize> {
    let mut out = vec![0];
    for s in sizes {
        out.push(out.last().unwrap() + s);
    }
    out
}

fn merge<F: Field>(f: &F, mut terms: Combination<F>) -> Combination<F> {
    terms.sort_by_key(|(b, _)| *b);
    let mut out: Combination<F> = Vec::new();
    for (b, c) in terms {
        match out.last_mut() {
            Some((bb, cc)) if *bb == b => f.add_assign(cc, &c),
            _ => out.push((b, c)),
        }
    }
    out.retain(|(_, c)| !f.is_zero(c));
    out
}
