use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::Field;
use crate::rep::ProjDim;

use super::catalog::{images_generate, jointly_injective, Catalog};

fn pd_at_most(d: ProjDim, n: usize) -> bool {
    match d {
        ProjDim::Zero => true,
        ProjDim::Finite(p) => p <= n,
        ProjDim::Infinite => false,
    }
}

fn mismatch<F: Field>(c: &Catalog<'_, F>, set: &str, i: usize, detail: &str) -> Error {
    Error::CharacterizationMismatch { set: set.into(), detail: format!("module {}: {detail}", c.label(i)) }
}

/// Sub Q: modules embedding into a power of Q, i.e. those on which the maps
/// to Q have zero joint kernel. Cross-checked against `pd soc X ≤ n` and
/// `pd X ≤ n`.
pub fn sub_q<F: Field>(c: &mut Catalog<'_, F>) -> Result<Vec<usize>> {
    let field = c.cat.field().clone();
    let n = c.n;
    let q = c.prinj.q.clone();
    let mut out = Vec::new();
    for i in 0..c.len() {
        let maps: Vec<_> = q.iter().flat_map(|qj| c.hom_basis_to(i, qj)).collect();
        let definitional = jointly_injective(&field, &c.modules[i], &maps);
        let by_socle = pd_at_most(c.socle_pd(i), n);
        let by_pd = pd_at_most(c.pd[i], n);
        if definitional != by_socle {
            return Err(mismatch(c, "Sub Q", i, &format!("embeds: {definitional}, pd soc ≤ n: {by_socle}")));
        }
        if definitional != by_pd {
            return Err(mismatch(c, "Sub Q", i, &format!("embeds: {definitional}, pd ≤ n: {by_pd}")));
        }
        if definitional {
            out.push(i);
        }
    }
    Ok(out)
}

/// ⊥Q: modules with no nonzero map to Q. Cross-checked against every
/// composition factor having projective dimension n+1.
pub fn perp_q<F: Field>(c: &mut Catalog<'_, F>) -> Result<Vec<usize>> {
    let n = c.n;
    let q = c.prinj.q.clone();
    let mut out = Vec::new();
    for i in 0..c.len() {
        let definitional = q.iter().all(|qj| c.hom_dim_to(i, qj) == 0);
        let by_factors = c.factors(i).into_iter().all(|v| c.profile.simple_pd[v] == ProjDim::Finite(n + 1));
        if definitional != by_factors {
            return Err(mismatch(c, "⊥Q", i, &format!("Hom(X,Q) = 0: {definitional}, factors of pd n+1: {by_factors}")));
        }
        if definitional {
            out.push(i);
        }
    }
    Ok(out)
}

/// Fac(ν⁻¹Q): modules generated by the images of maps from ν⁻¹Q.
/// Cross-checked against every simple in the top having pd ≤ n.
pub fn fac_nu_inv_q<F: Field>(c: &mut Catalog<'_, F>) -> Result<Vec<usize>> {
    let cat = c.cat;
    let field = cat.field().clone();
    let n = c.n;
    let gens: Vec<_> = c.prinj.nu_inv_q.iter().map(|p| (p.clone(), cat.presentation(p))).collect();
    let mut out = Vec::new();
    for i in 0..c.len() {
        let x = &c.modules[i];
        let maps: Vec<_> = gens.iter().flat_map(|(p, pres)| cat.hom_basis_with(p, pres, x)).collect();
        let definitional = images_generate(&field, x, &maps);
        let by_top = pd_at_most(c.top_pd(i), n);
        if definitional != by_top {
            return Err(mismatch(c, "Fac(ν⁻¹Q)", i, &format!("generated: {definitional}, pd top ≤ n: {by_top}")));
        }
        if definitional {
            out.push(i);
        }
    }
    Ok(out)
}

/// The three subcategories, as sorted index lists into the catalog.
#[derive(Clone, Debug, Serialize)]
pub struct Subcategories {
    pub fac: Vec<usize>,
    pub perp: Vec<usize>,
    pub sub: Vec<usize>,
}

pub fn subcategories<F: Field>(c: &mut Catalog<'_, F>) -> Result<Subcategories> {
    Ok(Subcategories { fac: fac_nu_inv_q(c)?, perp: perp_q(c)?, sub: sub_q(c)? })
}

/// Outcome of the torsion pair axioms for one pair `(T, F)`.
#[derive(Clone, Debug, Serialize)]
pub struct TorsionPairCheck {
    pub name: String,
    /// Hom(X, Y) = 0 for X ∈ T and Y ∈ F.
    pub hom_vanishing: bool,
    /// Every X with Hom(X, F) = 0 lies in T.
    pub torsion_maximal: bool,
    /// Every Y with Hom(T, Y) = 0 lies in F.
    pub torsionfree_maximal: bool,
    /// Offending modules, by label.
    pub violations: Vec<String>,
}

impl TorsionPairCheck {
    pub fn pass(&self) -> bool {
        self.hom_vanishing && self.torsion_maximal && self.torsionfree_maximal
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TtfReport {
    pub sets: Subcategories,
    pub fac_labels: Vec<String>,
    pub perp_labels: Vec<String>,
    pub sub_labels: Vec<String>,
    pub pairs: Vec<TorsionPairCheck>,
    pub fac_in_sub: bool,
    /// Modules in Fac(ν⁻¹Q) but not in Sub Q.
    pub fac_not_sub: Vec<String>,
    /// Global dimension of the base algebra, when known.
    pub base_gld: Option<usize>,
    /// `(gld base ≤ n) ⇔ Fac ⊆ Sub`, when the base is known.
    pub gld_criterion: Option<bool>,
}

impl TtfReport {
    pub fn pass(&self) -> bool {
        self.pairs.iter().all(|p| p.pass()) && self.gld_criterion != Some(false)
    }
}

fn torsion_pair<F: Field>(c: &Catalog<'_, F>, hom: &[Vec<usize>], name: &str, t: &[usize], f: &[usize]) -> TorsionPairCheck {
    let mut violations = Vec::new();
    let mut hom_vanishing = true;
    for &x in t {
        for &y in f {
            if hom[x][y] != 0 {
                hom_vanishing = false;
                violations.push(format!("Hom({}, {}) ≠ 0", c.label(x), c.label(y)));
            }
        }
    }
    let all = 0..c.len();
    let mut torsion_maximal = true;
    for x in all.clone().filter(|x| !t.contains(x)) {
        if f.iter().all(|&y| hom[x][y] == 0) {
            torsion_maximal = false;
            violations.push(format!("{} is left orthogonal to F but not in T", c.label(x)));
        }
    }
    let mut torsionfree_maximal = true;
    for y in all.filter(|y| !f.contains(y)) {
        if t.iter().all(|&x| hom[x][y] == 0) {
            torsionfree_maximal = false;
            violations.push(format!("{} is right orthogonal to T but not in F", c.label(y)));
        }
    }
    TorsionPairCheck { name: name.into(), hom_vanishing, torsion_maximal, torsionfree_maximal, violations }
}

/// Checks that `(Fac(ν⁻¹Q), ⊥Q)` and `(⊥Q, Sub Q)` are torsion pairs by
/// brute force over all pairs of indecomposables, and evaluates Fac ⊆ Sub.
pub fn verify_ttf<F: Field>(c: &mut Catalog<'_, F>, base_gld: Option<usize>) -> Result<TtfReport> {
    let sets = subcategories(c)?;
    let len = c.len();
    let mut hom = vec![vec![0; len]; len];
    for (i, row) in hom.iter_mut().enumerate() {
        for (j, h) in row.iter_mut().enumerate() {
            *h = c.hom_dim(i, j);
        }
    }
    let pairs = vec![
        torsion_pair(c, &hom, "(Fac(ν⁻¹Q), ⊥Q)", &sets.fac, &sets.perp),
        torsion_pair(c, &hom, "(⊥Q, Sub Q)", &sets.perp, &sets.sub),
    ];
    let outside: Vec<usize> = sets.fac.iter().copied().filter(|i| !sets.sub.contains(i)).collect();
    let fac_in_sub = outside.is_empty();
    let gld_criterion = base_gld.map(|g| (g <= c.n) == fac_in_sub);
    Ok(TtfReport {
        fac_labels: c.labels(&sets.fac),
        perp_labels: c.labels(&sets.perp),
        sub_labels: c.labels(&sets.sub),
        sets,
        pairs,
        fac_in_sub,
        fac_not_sub: c.labels(&outside),
        base_gld,
        gld_criterion,
    })
}
