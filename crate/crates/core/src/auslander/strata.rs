use serde::Serialize;

use crate::artheory::almost_split_sequence;
use crate::error::{Error, Result};
use crate::linalg::Field;
use crate::rep::{ModuleCategory, ProjDim, Representation};

use super::catalog::Catalog;

/// Indecomposables of projective dimension n+1, sorted by injective dimension.
#[derive(Clone, Debug, Serialize)]
pub struct StratumTable {
    pub n: usize,
    /// `t[i]` = number of indecomposables with pd = n+1 and id = i, for `i ≤ n+1`.
    pub t: Vec<usize>,
    /// Size of the pd = n+1 stratum.
    pub top_stratum: usize,
    pub non_projective: usize,
    /// `Σ_{j=1}^{n+1} (n−j+2) t_j + (n+1) t_0`.
    pub predicted: usize,
    pub coverage: SyzygyCoverage,
}

/// Whether the syzygies of the top stratum reach every non-projective
/// indecomposable of projective dimension at most n.
#[derive(Clone, Debug, Serialize)]
pub struct SyzygyCoverage {
    pub required: usize,
    pub covered: usize,
    pub missing: Vec<String>,
}

impl SyzygyCoverage {
    pub fn complete(&self) -> bool {
        self.missing.is_empty()
    }
}

/// The stratum formula for non-projective counts.
pub fn predicted_non_projective(n: usize, t: &[usize]) -> usize {
    let sum: usize = (1..=n + 1).map(|j| (n + 2 - j) * t.get(j).copied().unwrap_or(0)).sum();
    sum + (n + 1) * t.first().copied().unwrap_or(0)
}

pub fn pd_stratum_report<F: Field>(c: &mut Catalog<'_, F>) -> Result<StratumTable> {
    let n = c.n;
    let top = ProjDim::Finite(n + 1);
    let stratum: Vec<usize> = (0..c.len()).filter(|&i| c.pd[i] == top).collect();
    let mut t = vec![0; n + 2];
    for &i in &stratum {
        match c.id[i] {
            ProjDim::Finite(d) if d <= n + 1 => t[d] += 1,
            other => {
                return Err(Error::InvalidInput(format!(
                    "module {} has pd n+1 but injective dimension {other:?}",
                    c.label(i)
                )))
            }
        }
    }
    let non_projective = c.projective.iter().filter(|p| !**p).count();
    let predicted = predicted_non_projective(n, &t);
    let coverage = syzygy_coverage(c, &stratum)?;
    if predicted != non_projective {
        return Err(Error::FormulaMismatch { expected: predicted as i64, observed: non_projective as i64 });
    }
    Ok(StratumTable { n, t, top_stratum: stratum.len(), non_projective, predicted, coverage })
}

fn syzygy_coverage<F: Field>(c: &mut Catalog<'_, F>, stratum: &[usize]) -> Result<SyzygyCoverage> {
    let n = c.n;
    let mut reached = vec![false; c.len()];
    for &y in stratum {
        let mut z = c.modules[y].clone();
        for _ in 1..=n {
            z = c.cat.syzygy(&z);
            if z.is_zero() {
                break;
            }
            for k in c.summand_indices(&z)? {
                reached[k] = true;
            }
        }
    }
    let required: Vec<usize> = (0..c.len())
        .filter(|&i| !c.projective[i] && matches!(c.pd[i], ProjDim::Finite(p) if p <= n))
        .collect();
    let missing: Vec<usize> = required.iter().copied().filter(|&i| !reached[i]).collect();
    Ok(SyzygyCoverage { required: required.len(), covered: required.len() - missing.len(), missing: c.labels(&missing) })
}

/// Checks on short exact sequences `0 → X → P → Y → 0` with P
/// projective-injective: `(X indecomposable and X → P an injective envelope)`
/// holds exactly when `(Y indecomposable and P → Y a projective cover)`.
#[derive(Clone, Debug, Default, Serialize)]
pub struct CoverEnvelopeReport {
    pub checked: usize,
    pub violations: Vec<String>,
}

impl CoverEnvelopeReport {
    pub fn pass(&self) -> bool {
        self.violations.is_empty()
    }
}

fn is_envelope<F: Field>(cat: &ModuleCategory<F>, x: &Representation<F>, i: &Representation<F>) -> bool {
    // a mono is essential exactly when it is onto the socle of the target
    cat.is_injective(i) && cat.socle_dims(x) == cat.socle_dims(i)
}

fn is_cover<F: Field>(cat: &ModuleCategory<F>, p: &Representation<F>, y: &Representation<F>) -> bool {
    cat.is_projective(p) && cat.top_dims(p) == cat.top_dims(y)
}

pub fn cover_envelope_report<F: Field>(c: &mut Catalog<'_, F>) -> Result<CoverEnvelopeReport> {
    let cat = c.cat;
    let mut rep = CoverEnvelopeReport::default();
    let mut check = |c: &mut Catalog<'_, F>,
                     what: String,
                     x: &Representation<F>,
                     p: &Representation<F>,
                     y: &Representation<F>|
     -> Result<()> {
        if !(cat.is_projective(p) && cat.is_injective(p)) {
            return Ok(());
        }
        let left = c.is_indecomposable(x)? && is_envelope(cat, x, p);
        let right = c.is_indecomposable(y)? && is_cover(cat, p, y);
        rep.checked += 1;
        if left != right {
            rep.violations.push(format!("{what}: envelope side {left}, cover side {right}"));
        }
        Ok(())
    };
    for i in 0..c.len() {
        let m = c.modules[i].clone();
        let label = c.label(i);
        if !c.projective[i] {
            let pres = cat.presentation(&m);
            check(c, format!("cover of {label}"), &pres.syzygy, &pres.cover.projective, &m)?;
            let ar = almost_split_sequence(cat, &m)?;
            check(c, format!("almost split sequence ending in {label}"), &ar.left, &ar.middle, &ar.right)?;
        }
        if !c.injective[i] {
            let (env, _) = cat.injective_envelope(&m);
            let cosyz = cat.cosyzygy(&m);
            check(c, format!("envelope of {label}"), &m, &env, &cosyz)?;
        }
    }
    Ok(rep)
}
