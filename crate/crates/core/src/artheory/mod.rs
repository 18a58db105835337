//! Almost split sequences and enumeration of indecomposable modules.

mod arquiver;

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix};
use crate::rep::{
    IsoKey, ModuleCategory, Morphism, Quotient, Representation, RepresentationJson, ShortExactSequence, Splitter,
};

pub use arquiver::{ar_quiver, ArArrow, ArNode, ArQuiver};
pub(crate) use arquiver::dims_label;

/// The almost split sequence `0 → τZ → E → Z → 0` ending in an
/// indecomposable non-projective `z`.
///
/// The extension class is a nonzero element of Ext¹(Z, τZ) killed by
/// rad End(Z), found inside Hom(ΩZ, τZ) modulo restrictions from the cover.
pub fn almost_split_sequence<F: Field>(
    cat: &ModuleCategory<F>,
    z: &Representation<F>,
) -> Result<ShortExactSequence<F>> {
    if z.is_zero() {
        return Err(Error::InvalidInput("the zero module has no almost split sequence".into()));
    }
    if cat.is_projective(z) {
        return Err(Error::ProjectiveInput);
    }
    let f = cat.field();
    let y = cat.tau(z)?;
    let pres = cat.presentation(z);
    let end = cat.hom_basis_with(z, &pres, z);
    let sp = Splitter::new(cat, 0);
    if sp.semisimple_dim(z, &end)? != 1 {
        return Err(Error::InvalidInput(format!(
            "module with dimension vector {:?} is not indecomposable with End/rad equal to the base field",
            z.dims()
        )));
    }
    let rad = sp.endomorphism_radical(z, &end)?;
    let omega = &pres.syzygy;
    let omega_cover = cat.projective_cover(omega);
    let hom = cat.hom_basis(omega, &y);

    // a map out of ΩZ is determined by the images of the top generators of ΩZ
    let gen_values = |g: &Morphism<F>| -> Vec<F::Elem> {
        omega_cover
            .tops
            .iter()
            .zip(&omega_cover.gens)
            .flat_map(|(&v, &k)| g.maps[v].column(k))
            .collect()
    };
    let ambient: usize = omega_cover.tops.iter().map(|&v| y.dim(v)).sum();

    // Ext¹ = Hom(ΩZ, τZ) / B with B the restrictions of maps P0 → τZ
    let restricted: Vec<Vec<F::Elem>> = cat
        .hom_basis(&pres.cover.projective, &y)
        .iter()
        .map(|psi| gen_values(&psi.compose(&pres.inclusion)))
        .collect();
    let quot = Quotient::new(&columns(f, ambient, &restricted));
    let class = |g: &Morphism<F>| quot.projection.mul_vec(&gen_values(g));

    // socle condition: the class of g ∘ φ₁ vanishes for every φ in rad End(Z)
    let mut blocks = Vec::with_capacity(rad.len());
    for phi in &rad {
        let (_, phi1) = cat.lift_through_presentation(&pres, &pres, phi);
        let cols: Vec<Vec<F::Elem>> = hom.iter().map(|g| class(&g.compose(&phi1))).collect();
        blocks.push(columns(f, quot.dim(), &cols));
    }
    let constraints = Matrix::vstack(f, hom.len(), &blocks.iter().collect::<Vec<_>>());
    let solutions = constraints.kernel_basis();
    let g = (0..solutions.cols())
        .map(|t| Morphism::combine(f, &hom, &solutions.column(t)))
        .find(|g| class(g).iter().any(|c| !f.is_zero(c)))
        .ok_or_else(|| {
            Error::DecompositionFailed(format!(
                "no nonzero socle element in Ext¹(Z, τZ) for dimension vector {:?}",
                z.dims()
            ))
        })?;
    Ok(pushout(cat, &pres.cover.projective, &pres.inclusion, &pres.cover.epi, &y, &g, z))
}

/// Pushout of `0 → Ω → P0 → Z → 0` along `g: Ω → Y`.
fn pushout<F: Field>(
    cat: &ModuleCategory<F>,
    p0: &Representation<F>,
    inclusion: &Morphism<F>,
    epi: &Morphism<F>,
    y: &Representation<F>,
    g: &Morphism<F>,
    z: &Representation<F>,
) -> ShortExactSequence<F> {
    let f = cat.field();
    let sum = y.direct_sum(f, p0);
    let n = cat.vertex_count();
    let u = Morphism {
        maps: (0..n)
            .map(|w| Matrix::vstack(f, inclusion.maps[w].cols(), &[&g.maps[w], &inclusion.maps[w].neg()]))
            .collect(),
    };
    let (middle, proj) = cat.cokernel(&sum, &u);
    let mono = Morphism {
        maps: (0..n).map(|w| proj.maps[w].select_cols(&(0..y.dim(w)).collect::<Vec<_>>())).collect(),
    };
    let epi = Morphism {
        maps: (0..n)
            .map(|w| {
                let zero = Matrix::zeros(f, z.dim(w), y.dim(w));
                let onto = Matrix::hstack(f, z.dim(w), &[&zero, &epi.maps[w]]);
                onto.mul(&right_inverse(&proj.maps[w]))
            })
            .collect(),
    };
    ShortExactSequence { left: y.clone(), middle, right: z.clone(), mono, epi }
}

/// A right inverse of a matrix with full row rank.
fn right_inverse<F: Field>(m: &Matrix<F>) -> Matrix<F> {
    let f = m.field();
    let piv = m.pivot_columns();
    let inv = m.select_cols(&piv).inverse().expect("full row rank");
    let mut out = Matrix::zeros(f, m.cols(), m.rows());
    for (i, &p) in piv.iter().enumerate() {
        for c in 0..m.rows() {
            out.set(p, c, inv.get(i, c).clone());
        }
    }
    out
}

fn columns<F: Field>(f: &F, rows: usize, cols: &[Vec<F::Elem>]) -> Matrix<F> {
    Matrix::from_fn(f, rows, cols.len(), |r, c| cols[c][r].clone())
}

/// Limits on an enumeration run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    pub max_modules: usize,
    /// Bound on the sum of the dimensions of all modules found.
    pub max_total_dim: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { max_modules: 2000, max_total_dim: 100_000 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum EnumerationStatus {
    Complete,
    ExceededCap(String),
}

/// One isoclass found by the enumeration, with the AR data gathered while
/// processing it.
#[derive(Clone, Debug)]
pub struct EnumeratedModule<F: Field> {
    pub rep: Representation<F>,
    pub key: IsoKey,
    pub projective: bool,
    pub injective: bool,
    pub tau: Option<usize>,
    pub tau_inverse: Option<usize>,
    /// Sources of irreducible maps into this module with multiplicities: the
    /// summands of the AR-sequence middle, or of the radical for projectives.
    pub predecessors: Vec<(usize, usize)>,
    /// Whether the module has been processed.
    pub done: bool,
}

#[derive(Clone, Debug)]
pub struct EnumerationResult<F: Field> {
    pub status: EnumerationStatus,
    pub modules: Vec<EnumeratedModule<F>>,
    pub caps: Caps,
    pub seed: u64,
    pub total_dim: usize,
}

impl<F: Field> EnumerationResult<F> {
    pub fn is_complete(&self) -> bool {
        self.status == EnumerationStatus::Complete
    }
    pub fn len(&self) -> usize {
        self.modules.len()
    }
    pub fn is_empty(&self) -> bool {
        self.modules.is_empty()
    }
    pub fn reps(&self) -> impl Iterator<Item = &Representation<F>> {
        self.modules.iter().map(|m| &m.rep)
    }

    /// Index of the module isomorphic to `x`, if any.
    pub fn find(&self, splitter: &mut Splitter<'_, F>, x: &Representation<F>) -> Option<usize> {
        let key = splitter.iso_key(x);
        self.modules
            .iter()
            .position(|m| m.key == key && splitter.is_isomorphic(&m.rep, x))
    }

    pub fn require_complete(&self) -> Result<()> {
        match &self.status {
            EnumerationStatus::Complete => Ok(()),
            EnumerationStatus::ExceededCap(why) => Err(Error::IncompleteEnumeration(why.clone())),
        }
    }

    pub fn to_json(&self, cat: &ModuleCategory<F>) -> EnumerationJson {
        EnumerationJson {
            schema: 1,
            status: self.status.clone(),
            caps: self.caps,
            seed: self.seed,
            count: self.modules.len(),
            total_dim: self.total_dim,
            modules: self
                .modules
                .iter()
                .enumerate()
                .map(|(i, m)| ModuleJson {
                    index: i,
                    dims: m.rep.dims().to_vec(),
                    projective: m.projective,
                    injective: m.injective,
                    tau: m.tau,
                    tau_inverse: m.tau_inverse,
                    representation: m.rep.to_json(cat.algebra()),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct EnumerationJson {
    pub schema: u32,
    pub status: EnumerationStatus,
    pub caps: Caps,
    pub seed: u64,
    pub count: usize,
    pub total_dim: usize,
    pub modules: Vec<ModuleJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ModuleJson {
    pub index: usize,
    pub dims: Vec<usize>,
    pub projective: bool,
    pub injective: bool,
    pub tau: Option<usize>,
    pub tau_inverse: Option<usize>,
    pub representation: RepresentationJson,
}

struct Enumerator<'a, F: Field> {
    cat: &'a ModuleCategory<F>,
    splitter: Splitter<'a, F>,
    caps: Caps,
    modules: Vec<EnumeratedModule<F>>,
    by_key: HashMap<IsoKey, Vec<usize>>,
    queue: BinaryHeap<Reverse<(usize, usize)>>,
    total_dim: usize,
    exceeded: Option<String>,
}

impl<'a, F: Field> Enumerator<'a, F> {
    /// Index of the isoclass of the indecomposable `x`, adding it if new.
    /// `None` once a cap has tripped.
    fn intern(&mut self, x: Representation<F>) -> Option<usize> {
        let key = self.splitter.iso_key(&x);
        if let Some(found) = self.by_key.get(&key) {
            for &i in found {
                if self.splitter.is_isomorphic(&self.modules[i].rep, &x) {
                    return Some(i);
                }
            }
        }
        if self.exceeded.is_some() {
            return None;
        }
        if self.modules.len() >= self.caps.max_modules {
            self.exceeded = Some(format!("more than {} indecomposables", self.caps.max_modules));
            return None;
        }
        if self.total_dim + x.total_dim() > self.caps.max_total_dim {
            self.exceeded = Some(format!("total dimension above {}", self.caps.max_total_dim));
            return None;
        }
        let i = self.modules.len();
        self.total_dim += x.total_dim();
        self.queue.push(Reverse((x.total_dim(), i)));
        self.by_key.entry(key.clone()).or_default().push(i);
        self.modules.push(EnumeratedModule {
            projective: self.cat.is_projective(&x),
            injective: self.cat.is_injective(&x),
            rep: x,
            key,
            tau: None,
            tau_inverse: None,
            predecessors: Vec::new(),
            done: false,
        });
        Some(i)
    }

    fn intern_summands(&mut self, x: &Representation<F>) -> Result<Option<Vec<(usize, usize)>>> {
        let mut counts: Vec<(usize, usize)> = Vec::new();
        for part in self.splitter.decompose(x)? {
            let Some(i) = self.intern(part) else {
                return Ok(None);
            };
            match counts.iter_mut().find(|(j, _)| *j == i) {
                Some((_, c)) => *c += 1,
                None => counts.push((i, 1)),
            }
        }
        counts.sort_unstable();
        Ok(Some(counts))
    }

    fn process(&mut self, i: usize) -> Result<()> {
        let x = self.modules[i].rep.clone();
        let end = self.cat.hom_basis(&x, &x);
        if end.len() > 1 && self.splitter.semisimple_dim(&x, &end)? != 1 {
            return Err(Error::DecompositionFailed(format!(
                "End/rad of the module with dimension vector {:?} is larger than the base field",
                x.dims()
            )));
        }
        if self.modules[i].projective {
            let (rad, _) = self.cat.radical(&x);
            let Some(preds) = self.intern_summands(&rad)? else { return Ok(()) };
            self.modules[i].predecessors = preds;
        } else {
            let seq = almost_split_sequence(self.cat, &x)?;
            let Some(t) = self.intern(seq.left) else { return Ok(()) };
            self.modules[i].tau = Some(t);
            self.modules[t].tau_inverse = Some(i);
            let Some(preds) = self.intern_summands(&seq.middle)? else { return Ok(()) };
            self.modules[i].predecessors = preds;
        }
        if !self.modules[i].injective {
            let Some(t) = self.intern(self.cat.tau_inverse(&x)?) else { return Ok(()) };
            self.modules[i].tau_inverse = Some(t);
            self.modules[t].tau = Some(i);
        }
        self.modules[i].done = true;
        Ok(())
    }
}

/// Closes `{P(v)} ∪ {I(v)}` under τ⁻¹, τ, and summands of AR-sequence middles
/// and of radicals of projectives, smallest modules first.
pub fn enumerate_indecomposables<F: Field>(
    cat: &ModuleCategory<F>,
    caps: Caps,
    seed: u64,
) -> Result<EnumerationResult<F>> {
    let mut en = Enumerator {
        cat,
        splitter: Splitter::new(cat, seed),
        caps,
        modules: Vec::new(),
        by_key: HashMap::new(),
        queue: BinaryHeap::new(),
        total_dim: 0,
        exceeded: None,
    };
    for v in 0..cat.vertex_count() {
        en.intern(cat.projective(v).clone());
        en.intern(cat.injective(v));
    }
    while en.exceeded.is_none() {
        let Some(Reverse((_, i))) = en.queue.pop() else { break };
        en.process(i)?;
    }
    let status = match en.exceeded {
        None => EnumerationStatus::Complete,
        Some(why) => EnumerationStatus::ExceededCap(why),
    };
    Ok(EnumerationResult { status, modules: en.modules, caps, seed, total_dim: en.total_dim })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::linalg::Rationals;

    fn cat(name: &str) -> ModuleCategory<Rationals> {
        ModuleCategory::new(fixtures::by_name(name).unwrap().build(Rationals).unwrap()).unwrap()
    }

    #[test]
    fn a2_almost_split() {
        let c = cat("kA(2)");
        let seq = almost_split_sequence(&c, &c.simple(0)).unwrap();
        assert!(seq.verify(c.algebra()));
        assert_eq!(seq.left.dims(), &[0, 1]);
        assert_eq!(seq.middle.dims(), &[1, 1]);
        assert!(almost_split_sequence(&c, &c.simple(1)).is_err());
    }

    #[test]
    fn a3_middle_of_simple() {
        let c = cat("kA(3)");
        let seq = almost_split_sequence(&c, &c.simple(0)).unwrap();
        assert!(seq.verify(c.algebra()));
        let mut sp = Splitter::new(&c, 1);
        let parts = sp.decompose(&seq.middle).unwrap();
        assert_eq!(parts.len(), 1);
        assert_eq!(parts[0].dims(), &[1, 1, 0]);
    }

    #[test]
    fn linear_counts() {
        for m in 1..=4 {
            let r = enumerate_indecomposables(&cat(&format!("kA({m})")), Caps::default(), 5).unwrap();
            assert!(r.is_complete());
            assert_eq!(r.len(), m * (m + 1) / 2);
        }
    }

    #[test]
    fn caps_trip() {
        let caps = Caps { max_modules: 2, max_total_dim: 100 };
        let r = enumerate_indecomposables(&cat("kA(3)"), caps, 5).unwrap();
        assert!(!r.is_complete());
        assert!(r.require_complete().is_err());
    }
}
