use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::Field;
use crate::quiver::VertexId;
use crate::rep::{ModuleCategory, ProjDim, Representation, Splitter};

/// Dominant dimension; `capped` means the resolution stayed projective for
/// all `value` steps that were examined, so only `≥ value` is known.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DominantDimension {
    pub value: usize,
    pub capped: bool,
}

impl DominantDimension {
    pub fn at_least(&self, d: usize) -> bool {
        self.value >= d
    }
}

impl std::fmt::Display for DominantDimension {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.capped {
            write!(f, "≥ {}", self.value)
        } else {
            write!(f, "{}", self.value)
        }
    }
}

/// Homological data of a basic algebra relevant to the higher Auslander
/// condition.
#[derive(Clone, Debug, Serialize)]
pub struct AuslanderProfile {
    /// `None` if some simple has no finite projective resolution within the cap.
    pub gld: Option<usize>,
    pub domdim: DominantDimension,
    /// Smallest `n ≥ 1` with `gld ≤ n+1` and `domdim ≥ n+1`, if any.
    pub n: Option<usize>,
    /// Vertices `v` with P(v) injective.
    pub prinj: Vec<VertexId>,
    /// Vertices `v` with I(v) projective.
    pub prinj_injective: Vec<VertexId>,
    /// Whether both lists describe the same isoclasses of modules.
    pub prinj_consistent: bool,
    pub simple_pd: Vec<ProjDim>,
}

impl AuslanderProfile {
    pub fn compute<F: Field>(cat: &ModuleCategory<F>) -> Self {
        let simple_pd = simple_pd_table(cat);
        let gld = gld_from_table(&simple_pd);
        let domdim = dominant_dimension(cat);
        let n = gld.and_then(|g| {
            let n = g.max(2) - 1;
            domdim.at_least(n + 1).then_some(n)
        });
        let nv = cat.vertex_count();
        let prinj: Vec<VertexId> = (0..nv).filter(|&v| cat.is_injective(cat.projective(v))).collect();
        let prinj_injective: Vec<VertexId> = (0..nv).filter(|&v| cat.is_projective(&cat.injective(v))).collect();
        let mut sp = Splitter::new(cat, 0);
        let prinj_consistent = prinj.len() == prinj_injective.len()
            && prinj.iter().all(|&v| {
                prinj_injective
                    .iter()
                    .any(|&w| sp.is_isomorphic(cat.projective(v), &cat.injective(w)))
            });
        AuslanderProfile { gld, domdim, n, prinj, prinj_injective, prinj_consistent, simple_pd }
    }

    /// `gld ≤ n+1` and `domdim ≥ n+1`.
    pub fn is_n_auslander(&self, n: usize) -> bool {
        n >= 1 && self.gld.is_some_and(|g| g <= n + 1) && self.domdim.at_least(n + 1)
    }

    /// Vertices whose simple has projective dimension at most `d`.
    pub fn simples_with_pd_at_most(&self, d: usize) -> Vec<VertexId> {
        (0..self.simple_pd.len())
            .filter(|&v| matches!(self.simple_pd[v], ProjDim::Finite(p) if p <= d))
            .collect()
    }
}

pub fn simple_pd_table<F: Field>(cat: &ModuleCategory<F>) -> Vec<ProjDim> {
    (0..cat.vertex_count()).map(|v| cat.proj_dimension(&cat.simple(v))).collect()
}

fn gld_from_table(table: &[ProjDim]) -> Option<usize> {
    table.iter().try_fold(0, |acc, d| match d {
        ProjDim::Zero => Some(acc),
        ProjDim::Finite(p) => Some(acc.max(*p)),
        ProjDim::Infinite => None,
    })
}

/// Maximum projective dimension of a simple module.
pub fn global_dimension<F: Field>(cat: &ModuleCategory<F>) -> Option<usize> {
    gld_from_table(&simple_pd_table(cat))
}

/// Number of leading projective terms in the minimal injective resolution of
/// `⊕ P(v)`, examined up to `dim A` terms.
pub fn dominant_dimension<F: Field>(cat: &ModuleCategory<F>) -> DominantDimension {
    let cap = cat.algebra().dimension();
    let mut best = cap;
    let mut capped = true;
    // the resolution of a sum is the sum of the resolutions
    for v in 0..cat.vertex_count() {
        let mut x = cat.projective(v).clone();
        let mut d = 0;
        while d < best && !x.is_zero() {
            let (env, _) = cat.injective_envelope(&x);
            if !cat.is_projective(&env) {
                best = d;
                capped = false;
                break;
            }
            x = cat.cosyzygy(&x);
            d += 1;
        }
    }
    DominantDimension { value: best, capped }
}

/// Whether `A` is an n-Auslander algebra, with the profile used to decide it.
pub fn is_n_auslander<F: Field>(cat: &ModuleCategory<F>, n: usize) -> (bool, AuslanderProfile) {
    let p = AuslanderProfile::compute(cat);
    (p.is_n_auslander(n), p)
}

/// The basic projective-injective generator `Q` and `ν⁻¹Q`.
#[derive(Clone, Debug)]
pub struct PrinjGenerator<F: Field> {
    /// Vertices `v` with I(v) projective; `Q = ⊕ I(v)` and `ν⁻¹Q = ⊕ P(v)`.
    pub vertices: Vec<VertexId>,
    pub q: Vec<Representation<F>>,
    pub nu_inv_q: Vec<Representation<F>>,
}

pub fn prinj_generator<F: Field>(
    cat: &ModuleCategory<F>,
    profile: &AuslanderProfile,
) -> Result<PrinjGenerator<F>> {
    let Some(n) = profile.n else {
        return Err(Error::NotAuslander(format!(
            "n-Auslander for any n (gld {:?}, domdim {})",
            profile.gld, profile.domdim
        )));
    };
    if !profile.prinj_consistent {
        return Err(Error::NotAuslander(format!(
            "{n}-Auslander: projective-injectives are not matched by the Nakayama functor"
        )));
    }
    let vertices = profile.prinj_injective.clone();
    let q = vertices.iter().map(|&v| cat.injective(v)).collect();
    let nu_inv_q = vertices.iter().map(|&v| cat.projective(v).clone()).collect();
    Ok(PrinjGenerator { vertices, q, nu_inv_q })
}
