//! Modules over a bound quiver algebra, as quiver representations.
//!
//! Modules are left modules: a representation puts a space at every vertex
//! and a matrix on every arrow, acting in the direction of the arrow. A path
//! acts as the product of its arrow matrices in application order.

mod category;
mod decompose;
mod subspace;

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::algebra::BoundQuiverAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix};
use crate::quiver::{ArrowId, VertexId};

pub use category::{Cover, ModuleCategory, Presentation, ProjDim, RelationGenerator};
pub use decompose::{IsoKey, Splitter};
pub use subspace::{Quotient, Subspace};

#[derive(Clone, PartialEq)]
pub struct Representation<F: Field> {
    dims: Vec<usize>,
    /// `maps[a]` is `dims[target(a)] × dims[source(a)]`.
    maps: Vec<Matrix<F>>,
}

impl<F: Field> std::fmt::Debug for Representation<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Representation{:?}", self.dims)
    }
}

impl<F: Field> Representation<F> {
    /// Checks shapes and that every relation of `alg` acts as zero.
    pub fn new(alg: &BoundQuiverAlgebra<F>, dims: Vec<usize>, maps: Vec<Matrix<F>>) -> Result<Self> {
        let q = alg.quiver();
        if dims.len() != q.vertex_count() || maps.len() != q.arrow_count() {
            return Err(Error::InvalidRepresentation(format!(
                "expected {} vertices and {} arrows, got {} and {}",
                q.vertex_count(),
                q.arrow_count(),
                dims.len(),
                maps.len()
            )));
        }
        for (a, m) in maps.iter().enumerate() {
            let ar = q.arrow(a);
            if m.shape() != (dims[ar.target], dims[ar.source]) {
                return Err(Error::InvalidRepresentation(format!(
                    "arrow `{}` has shape {:?}, expected {:?}",
                    ar.label,
                    m.shape(),
                    (dims[ar.target], dims[ar.source])
                )));
            }
        }
        let x = Representation { dims, maps };
        for r in alg.relations() {
            let src = r.terms[0].1.source;
            let tgt = r.terms[0].1.target;
            let f = alg.field();
            let mut acc = Matrix::zeros(f, x.dims[tgt], x.dims[src]);
            for (c, p) in &r.terms {
                let mut m = Matrix::identity(f, x.dims[src]);
                for &a in &p.arrows {
                    m = x.maps[a].mul(&m);
                }
                acc.add_scaled(&f.from_i64(*c), &m);
            }
            if !acc.is_zero() {
                return Err(Error::InvalidRepresentation(format!(
                    "relation `{}` does not vanish",
                    r.display(alg.quiver())
                )));
            }
        }
        Ok(x)
    }

    pub(crate) fn from_parts(dims: Vec<usize>, maps: Vec<Matrix<F>>) -> Self {
        Representation { dims, maps }
    }

    pub fn zero(alg: &BoundQuiverAlgebra<F>) -> Self {
        let q = alg.quiver();
        let f = alg.field();
        Representation {
            dims: vec![0; q.vertex_count()],
            maps: (0..q.arrow_count()).map(|_| Matrix::zeros(f, 0, 0)).collect(),
        }
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }
    pub fn dim(&self, v: VertexId) -> usize {
        self.dims[v]
    }
    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }
    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }
    pub fn map(&self, a: ArrowId) -> &Matrix<F> {
        &self.maps[a]
    }
    pub fn maps(&self) -> &[Matrix<F>] {
        &self.maps
    }

    /// Matrix by which basis element `b` of `alg` acts.
    pub fn path_matrix(&self, alg: &BoundQuiverAlgebra<F>, b: usize) -> Matrix<F> {
        let w = alg.basis_word(b);
        let mut m = Matrix::identity(alg.field(), self.dims[w.source]);
        for &a in &w.arrows {
            m = self.maps[a].mul(&m);
        }
        m
    }

    /// The dual representation over the opposite algebra: same dimensions,
    /// transposed arrow matrices.
    pub fn dual(&self) -> Representation<F> {
        Representation { dims: self.dims.clone(), maps: self.maps.iter().map(|m| m.transpose()).collect() }
    }

    pub fn direct_sum(&self, field: &F, other: &Representation<F>) -> Representation<F> {
        Representation {
            dims: self.dims.iter().zip(&other.dims).map(|(a, b)| a + b).collect(),
            maps: self.maps.iter().zip(&other.maps).map(|(a, b)| Matrix::block_diag(field, &[a, b])).collect(),
        }
    }

    /// Direct sum of a list of representations over `alg`.
    pub fn sum_all(alg: &BoundQuiverAlgebra<F>, parts: &[&Representation<F>]) -> Representation<F> {
        let f = alg.field();
        let n = alg.vertex_count();
        let dims = (0..n).map(|v| parts.iter().map(|p| p.dims[v]).sum()).collect();
        let maps = (0..alg.quiver().arrow_count())
            .map(|a| Matrix::block_diag(f, &parts.iter().map(|p| &p.maps[a]).collect::<Vec<_>>()))
            .collect();
        Representation { dims, maps }
    }

    /// Ranks of the arrow matrices, an isomorphism invariant.
    pub fn arrow_ranks(&self) -> Vec<usize> {
        self.maps.iter().map(|m| m.rank()).collect()
    }

    pub fn to_json(&self, alg: &BoundQuiverAlgebra<F>) -> RepresentationJson {
        let f = alg.field();
        let q = alg.quiver();
        RepresentationJson {
            dims: self.dims.clone(),
            maps: self
                .maps
                .iter()
                .enumerate()
                .map(|(a, m)| ArrowMatrix {
                    arrow: q.arrow(a).label.clone(),
                    rows: (0..m.rows()).map(|i| m.row(i).iter().map(|x| f.format(x)).collect()).collect(),
                })
                .collect(),
        }
    }

    pub fn from_json(alg: &BoundQuiverAlgebra<F>, j: &RepresentationJson) -> Result<Self> {
        let f = alg.field();
        let q = alg.quiver();
        if j.maps.len() != q.arrow_count() {
            return Err(Error::InvalidRepresentation("wrong number of arrow matrices".into()));
        }
        let mut maps = vec![None; q.arrow_count()];
        for am in &j.maps {
            let a = q
                .arrow_by_label(&am.arrow)
                .ok_or_else(|| Error::InvalidRepresentation(format!("unknown arrow `{}`", am.arrow)))?;
            let ar = q.arrow(a);
            let (r, c) = (j.dims[ar.target], j.dims[ar.source]);
            if am.rows.len() != r || am.rows.iter().any(|row| row.len() != c) {
                return Err(Error::InvalidRepresentation(format!("bad shape for `{}`", am.arrow)));
            }
            let data = am.rows.iter().flatten().map(|s| f.parse(s)).collect::<Result<Vec<_>>>()?;
            maps[a] = Some(Matrix::from_data(f, r, c, data)?);
        }
        let maps = maps
            .into_iter()
            .map(|m| m.ok_or_else(|| Error::InvalidRepresentation("missing arrow matrix".into())))
            .collect::<Result<Vec<_>>>()?;
        Representation::new(alg, j.dims.clone(), maps)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepresentationJson {
    pub dims: Vec<usize>,
    pub maps: Vec<ArrowMatrix>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowMatrix {
    pub arrow: String,
    /// Row-major entries formatted in the base field.
    pub rows: Vec<Vec<String>>,
}

/// A homomorphism of representations, one matrix per vertex.
#[derive(Clone, Debug, PartialEq)]
pub struct Morphism<F: Field> {
    pub maps: Vec<Matrix<F>>,
}

impl<F: Field> Morphism<F> {
    pub fn zero(field: &F, x: &Representation<F>, y: &Representation<F>) -> Self {
        Morphism { maps: (0..x.dims.len()).map(|v| Matrix::zeros(field, y.dims[v], x.dims[v])).collect() }
    }

    pub fn identity(field: &F, x: &Representation<F>) -> Self {
        Morphism { maps: x.dims.iter().map(|&d| Matrix::identity(field, d)).collect() }
    }

    /// `self` after `first`.
    pub fn compose(&self, first: &Morphism<F>) -> Morphism<F> {
        Morphism { maps: self.maps.iter().zip(&first.maps).map(|(g, f)| g.mul(f)).collect() }
    }

    pub fn add(&self, other: &Morphism<F>) -> Morphism<F> {
        Morphism { maps: self.maps.iter().zip(&other.maps).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn scale(&self, c: &F::Elem) -> Morphism<F> {
        Morphism { maps: self.maps.iter().map(|m| m.scale(c)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.maps.iter().all(|m| m.is_zero())
    }

    pub fn dual(&self) -> Morphism<F> {
        Morphism { maps: self.maps.iter().map(|m| m.transpose()).collect() }
    }

    /// Whether the vertex maps intertwine the arrow actions of `x` and `y`.
    pub fn is_homomorphism(&self, alg: &BoundQuiverAlgebra<F>, x: &Representation<F>, y: &Representation<F>) -> bool {
        alg.quiver().arrows().iter().enumerate().all(|(a, ar)| {
            self.maps[ar.target].mul(&x.maps[a]) == y.maps[a].mul(&self.maps[ar.source])
        })
    }

    pub fn is_injective(&self) -> bool {
        self.maps.iter().all(|m| m.rank() == m.cols())
    }

    pub fn is_surjective(&self) -> bool {
        self.maps.iter().all(|m| m.rank() == m.rows())
    }

    pub fn is_isomorphism(&self) -> bool {
        self.maps.iter().all(|m| fast_invertible(m))
    }

    /// All vertex matrices flattened into one coordinate vector.
    pub fn flatten(&self) -> Vec<F::Elem> {
        self.maps.iter().flat_map(|m| m.entries().iter().cloned()).collect()
    }

    /// Linear combination `Σ c_i f_i` of morphisms with equal shapes.
    pub fn combine(field: &F, parts: &[Morphism<F>], coeffs: &[F::Elem]) -> Morphism<F> {
        let mut out = Morphism {
            maps: parts[0].maps.iter().map(|m| Matrix::zeros(field, m.rows(), m.cols())).collect(),
        };
        for (p, c) in parts.iter().zip(coeffs) {
            if field.is_zero(c) {
                continue;
            }
            for (o, m) in out.maps.iter_mut().zip(&p.maps) {
                o.add_scaled(c, m);
            }
        }
        out
    }
}

/// Invertibility test that first tries a rank certificate modulo the work
/// prime: full rank modulo p implies full rank over the field.
pub fn fast_invertible<F: Field>(m: &Matrix<F>) -> bool {
    if m.rows() != m.cols() {
        return false;
    }
    if m.rows() == 0 {
        return true;
    }
    let f = m.field();
    if f.characteristic() == 0 {
        let p = f.work_prime();
        if let Ok(fp) = crate::linalg::PrimeField::new(p) {
            let reduced: Option<Vec<u64>> = m.entries().iter().map(|x| f.residue(x)).collect();
            if let Some(data) = reduced {
                let mp = Matrix::from_data(&fp, m.rows(), m.cols(), data).expect("shape preserved");
                if mp.rank() == m.rows() {
                    return true;
                }
            }
        }
    }
    m.rank() == m.rows()
}

/// `0 → left → middle → right → 0`.
#[derive(Clone, Debug)]
pub struct ShortExactSequence<F: Field> {
    pub left: Representation<F>,
    pub middle: Representation<F>,
    pub right: Representation<F>,
    pub mono: Morphism<F>,
    pub epi: Morphism<F>,
}

impl<F: Field> ShortExactSequence<F> {
    /// Checks vertexwise exactness and that both maps are homomorphisms.
    pub fn verify(&self, alg: &BoundQuiverAlgebra<F>) -> bool {
        if !self.mono.is_homomorphism(alg, &self.left, &self.middle)
            || !self.epi.is_homomorphism(alg, &self.middle, &self.right)
        {
            return false;
        }
        (0..alg.vertex_count()).all(|v| {
            let (i, p) = (&self.mono.maps[v], &self.epi.maps[v]);
            i.rank() == self.left.dim(v)
                && p.rank() == self.right.dim(v)
                && self.left.dim(v) + self.right.dim(v) == self.middle.dim(v)
                && p.mul(i).is_zero()
        })
    }
}

/// Memoised path actions of one representation.
pub(crate) struct PathActions<'a, F: Field> {
    alg: &'a BoundQuiverAlgebra<F>,
    rep: &'a Representation<F>,
    cache: HashMap<usize, Matrix<F>>,
}

impl<'a, F: Field> PathActions<'a, F> {
    pub fn new(alg: &'a BoundQuiverAlgebra<F>, rep: &'a Representation<F>) -> Self {
        PathActions { alg, rep, cache: HashMap::new() }
    }

    pub fn get(&mut self, b: usize) -> &Matrix<F> {
        if !self.cache.contains_key(&b) {
            let m = match self.alg.parent(b) {
                None => Matrix::identity(self.alg.field(), self.rep.dims[b]),
                Some((p, a)) => {
                    let prev = self.get(p).clone();
                    self.rep.maps[a].mul(&prev)
                }
            };
            self.cache.insert(b, m);
        }
        &self.cache[&b]
    }

    /// Action of a combination of basis elements.
    pub fn combination(&mut self, comb: &[(usize, F::Elem)], rows: usize, cols: usize) -> Matrix<F> {
        let f = self.alg.field().clone();
        let mut acc = Matrix::zeros(&f, rows, cols);
        for (b, c) in comb {
            let m = self.get(*b).clone();
            acc.add_scaled(c, &m);
        }
        acc
    }
}
