use crate::artheory::EnumerationResult;
use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix};
use crate::rep::{IsoKey, ModuleCategory, Morphism, Presentation, ProjDim, Representation, Splitter};

use super::profile::{prinj_generator, AuslanderProfile, PrinjGenerator};

/// A complete list of indecomposables of an n-Auslander algebra together with
/// the per-module homological data the set-level checks need.
pub struct Catalog<'a, F: Field> {
    pub cat: &'a ModuleCategory<F>,
    pub profile: AuslanderProfile,
    pub n: usize,
    pub prinj: PrinjGenerator<F>,
    pub modules: Vec<Representation<F>>,
    pub projective: Vec<bool>,
    pub injective: Vec<bool>,
    pub pd: Vec<ProjDim>,
    pub id: Vec<ProjDim>,
    keys: Vec<IsoKey>,
    presentations: Vec<Option<Presentation<F>>>,
    splitter: Splitter<'a, F>,
}

impl<'a, F: Field> Catalog<'a, F> {
    pub fn new(cat: &'a ModuleCategory<F>, en: &EnumerationResult<F>, seed: u64) -> Result<Self> {
        en.require_complete()?;
        let profile = AuslanderProfile::compute(cat);
        let prinj = prinj_generator(cat, &profile)?;
        let n = profile.n.expect("checked by prinj_generator");
        let modules: Vec<_> = en.reps().cloned().collect();
        let pd = modules.iter().map(|x| cat.proj_dimension(x)).collect();
        let id = modules.iter().map(|x| cat.inj_dimension(x)).collect();
        Ok(Catalog {
            cat,
            profile,
            n,
            prinj,
            projective: en.modules.iter().map(|m| m.projective).collect(),
            injective: en.modules.iter().map(|m| m.injective).collect(),
            pd,
            id,
            keys: en.modules.iter().map(|m| m.key.clone()).collect(),
            presentations: vec![None; modules.len()],
            modules,
            splitter: Splitter::new(cat, seed),
        })
    }

    pub fn len(&self) -> usize {
        self.modules.len()
    }
    pub fn is_empty(&self) -> bool {
        self.modules.is_empty()
    }

    fn ensure_presentation(&mut self, i: usize) {
        if self.presentations[i].is_none() {
            self.presentations[i] = Some(self.cat.presentation(&self.modules[i]));
        }
    }

    pub fn presentation(&mut self, i: usize) -> &Presentation<F> {
        self.ensure_presentation(i);
        self.presentations[i].as_ref().unwrap()
    }

    pub fn hom_dim_to(&mut self, i: usize, y: &Representation<F>) -> usize {
        if y.is_zero() {
            return 0;
        }
        self.ensure_presentation(i);
        self.cat.hom_dim_with(self.presentations[i].as_ref().unwrap(), y)
    }

    pub fn hom_dim(&mut self, i: usize, j: usize) -> usize {
        if self.modules[j].is_zero() {
            return 0;
        }
        self.ensure_presentation(i);
        self.cat.hom_dim_with(self.presentations[i].as_ref().unwrap(), &self.modules[j])
    }

    pub fn hom_basis_to(&mut self, i: usize, y: &Representation<F>) -> Vec<Morphism<F>> {
        self.ensure_presentation(i);
        self.cat.hom_basis_with(&self.modules[i], self.presentations[i].as_ref().unwrap(), y)
    }

    /// Index of the enumerated module isomorphic to `x`.
    pub fn find(&mut self, x: &Representation<F>) -> Option<usize> {
        let key = self.splitter.iso_key(x);
        (0..self.modules.len()).find(|&i| self.keys[i] == key && self.splitter.is_isomorphic(&self.modules[i], x))
    }

    /// Indices of the indecomposable summands of `x`.
    pub fn summand_indices(&mut self, x: &Representation<F>) -> Result<Vec<usize>> {
        let parts = self.splitter.decompose(x)?;
        parts
            .iter()
            .map(|p| {
                self.find(p).ok_or_else(|| {
                    Error::IncompleteEnumeration(format!("summand with dimension vector {:?} not listed", p.dims()))
                })
            })
            .collect()
    }

    pub fn is_indecomposable(&mut self, x: &Representation<F>) -> Result<bool> {
        self.splitter.is_indecomposable(x)
    }

    /// Largest projective dimension of a simple at the given vertices.
    pub fn max_simple_pd(&self, vertices: impl IntoIterator<Item = usize>) -> ProjDim {
        vertices.into_iter().map(|v| self.profile.simple_pd[v]).max().unwrap_or(ProjDim::Zero)
    }

    pub fn socle_pd(&self, i: usize) -> ProjDim {
        let soc = self.cat.socle_dims(&self.modules[i]);
        self.max_simple_pd(support(&soc))
    }

    pub fn top_pd(&self, i: usize) -> ProjDim {
        let top = self.cat.top_dims(&self.modules[i]);
        self.max_simple_pd(support(&top))
    }

    /// Vertices of the composition factors.
    pub fn factors(&self, i: usize) -> Vec<usize> {
        support(self.modules[i].dims())
    }

    pub fn label(&self, i: usize) -> String {
        dims_label(self.modules[i].dims())
    }

    pub fn labels(&self, idx: &[usize]) -> Vec<String> {
        idx.iter().map(|&i| self.label(i)).collect()
    }
}

pub(crate) fn support(dims: &[usize]) -> Vec<usize> {
    (0..dims.len()).filter(|&v| dims[v] > 0).collect()
}

pub(crate) fn dims_label(dims: &[usize]) -> String {
    crate::artheory::dims_label(dims)
}

/// Whether the columns of the stacked maps span every vertex space of `x`,
/// i.e. the images of the given maps into `x` generate it.
pub(crate) fn images_generate<F: Field>(field: &F, x: &Representation<F>, maps: &[Morphism<F>]) -> bool {
    (0..x.dims().len()).all(|w| {
        let d = x.dim(w);
        if d == 0 {
            return true;
        }
        let blocks: Vec<&Matrix<F>> = maps.iter().map(|g| &g.maps[w]).collect();
        !blocks.is_empty() && Matrix::hstack(field, d, &blocks).rank() == d
    })
}

/// Whether the given maps out of `x` have zero joint kernel.
pub(crate) fn jointly_injective<F: Field>(field: &F, x: &Representation<F>, maps: &[Morphism<F>]) -> bool {
    (0..x.dims().len()).all(|w| {
        let d = x.dim(w);
        if d == 0 {
            return true;
        }
        let blocks: Vec<&Matrix<F>> = maps.iter().map(|g| &g.maps[w]).collect();
        !blocks.is_empty() && Matrix::vstack(field, d, &blocks).rank() == d
    })
}
