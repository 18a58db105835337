//! Krull–Schmidt decomposition by Fitting splits, and isomorphism tests.
//!
//! End(X)/rad End(X) is detected through the trace form `(f, g) ↦ tr(fg)`
//! on X, whose radical is rad End(X) in characteristic 0 or p > dim X. When
//! the quotient is larger than the base field, an endomorphism `f` with two
//! distinct eigenvalues splits X into generalised eigenspaces: the stable
//! kernel and stable image of `f − λ` for an eigenvalue `λ`.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::category::ModuleCategory;
use super::subspace::Subspace;
use super::{Morphism, PathActions, Representation};
use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix, PrimeField};

/// Number of random candidates tried before the deterministic sweep.
pub const RANDOM_TRIALS: usize = 32;

/// Isomorphism invariant used to avoid most full isomorphism tests: the
/// dimension vector and the rank of every nonstationary basis path.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IsoKey {
    pub dims: Vec<usize>,
    pub ranks: Vec<usize>,
}

/// Decomposition and isomorphism testing with a seeded random source.
pub struct Splitter<'a, F: Field> {
    cat: &'a ModuleCategory<F>,
    rng: ChaCha8Rng,
}

impl<'a, F: Field> Splitter<'a, F> {
    pub fn new(cat: &'a ModuleCategory<F>, seed: u64) -> Self {
        Splitter { cat, rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn iso_key(&self, x: &Representation<F>) -> IsoKey {
        let alg = self.cat.algebra();
        let mut actions = PathActions::new(alg, x);
        let ranks = (alg.vertex_count()..alg.dimension())
            .map(|b| {
                let w = alg.basis_word(b);
                if x.dim(w.source) == 0 || x.dim(w.target) == 0 {
                    0
                } else {
                    actions.get(b).rank()
                }
            })
            .collect();
        IsoKey { dims: x.dims().to_vec(), ranks }
    }

    /// Gram matrix of the trace form `(f, g) ↦ tr(fg)` on `end`.
    fn trace_gram(&self, x: &Representation<F>, end: &[Morphism<F>]) -> Result<Matrix<F>> {
        let f = self.cat.field();
        let p = f.characteristic();
        if p != 0 && p as usize <= x.total_dim().max(end.len()) {
            return Err(Error::InvalidInput(format!(
                "characteristic {p} is too small for the trace-form radical of a module of dimension {}",
                x.total_dim()
            )));
        }
        let k = end.len();
        let mut gram = Matrix::zeros(f, k, k);
        for i in 0..k {
            for j in i..k {
                let mut t = f.zero();
                for (a, b) in end[i].maps.iter().zip(&end[j].maps) {
                    // tr(AB) without forming AB
                    for r in 0..a.rows() {
                        for c in 0..a.cols() {
                            let (u, v) = (a.get(r, c), b.get(c, r));
                            if !f.is_zero(u) && !f.is_zero(v) {
                                f.add_mul_assign(&mut t, u, v);
                            }
                        }
                    }
                }
                gram.set(j, i, t.clone());
                gram.set(i, j, t);
            }
        }
        Ok(gram)
    }

    /// Dimension of End(X)/rad End(X), from the rank of the trace form.
    pub fn semisimple_dim(&self, x: &Representation<F>, end: &[Morphism<F>]) -> Result<usize> {
        Ok(self.trace_gram(x, end)?.rank())
    }

    /// A basis of rad End(X), given a basis `end` of End(X).
    pub fn endomorphism_radical(&self, x: &Representation<F>, end: &[Morphism<F>]) -> Result<Vec<Morphism<F>>> {
        let f = self.cat.field();
        let k = self.trace_gram(x, end)?.kernel_basis();
        Ok((0..k.cols()).map(|t| Morphism::combine(f, end, &k.column(t))).collect())
    }

    pub fn is_indecomposable(&mut self, x: &Representation<F>) -> Result<bool> {
        if x.is_zero() {
            return Ok(false);
        }
        Ok(self.split(x)?.is_none())
    }

    /// Splits `x` into two nonzero summands, or returns `None` when
    /// End(X)/rad End(X) is the base field (so `x` is indecomposable).
    pub fn split(&mut self, x: &Representation<F>) -> Result<Option<(Representation<F>, Representation<F>)>> {
        if x.is_zero() {
            return Ok(None);
        }
        let end = self.cat.hom_basis(x, x);
        if end.len() == 1 {
            return Ok(None);
        }
        let ss = self.semisimple_dim(x, &end)?;
        if ss == 1 {
            return Ok(None);
        }
        // basis endomorphisms first: their summands tend to have small entries
        for g in &end {
            if let Some(parts) = self.try_fitting(x, g) {
                return Ok(Some(parts));
            }
        }
        let f = self.cat.field().clone();
        for _ in 0..RANDOM_TRIALS {
            let coeffs: Vec<F::Elem> = (0..end.len()).map(|_| f.sample(&mut self.rng, 3)).collect();
            let g = Morphism::combine(&f, &end, &coeffs);
            if let Some(parts) = self.try_fitting(x, &g) {
                return Ok(Some(parts));
            }
        }
        Err(Error::DecompositionFailed(format!(
            "module with dimension vector {:?} has End/rad of dimension {ss} but no splitting endomorphism was found",
            x.dims()
        )))
    }

    fn try_fitting(
        &self,
        x: &Representation<F>,
        g: &Morphism<F>,
    ) -> Option<(Representation<F>, Representation<F>)> {
        let f = self.cat.field();
        let mut lambdas = vec![f.zero()];
        for l in eigenvalue_candidates(f, g) {
            if !lambdas.contains(&l) {
                lambdas.push(l);
            }
        }
        for l in lambdas {
            let h = Morphism {
                maps: g
                    .maps
                    .iter()
                    .map(|m| m.sub(&Matrix::identity(f, m.rows()).scale(&l)))
                    .collect(),
            };
            if let Some(parts) = self.fitting_split(x, &h) {
                return Some(parts);
            }
        }
        None
    }

    /// X = ker h^N ⊕ im h^N when both are nonzero.
    fn fitting_split(
        &self,
        x: &Representation<F>,
        h: &Morphism<F>,
    ) -> Option<(Representation<F>, Representation<F>)> {
        let mut images = Vec::new();
        let mut kernels = Vec::new();
        let (mut im_total, mut ker_total) = (0, 0);
        for m in &h.maps {
            let im = stable_image(m);
            let (kb, free) = stable_kernel(m);
            im_total += im.dim();
            ker_total += kb.cols();
            images.push(im);
            kernels.push(Subspace::from_kernel(kb, free));
        }
        if im_total == 0 || ker_total == 0 {
            return None;
        }
        let (a, _) = self.cat.subrepresentation(x, images);
        let (b, _) = self.cat.subrepresentation(x, kernels);
        Some((a, b))
    }

    /// Indecomposable summands of `x`, in a deterministic order for a fixed seed.
    pub fn decompose(&mut self, x: &Representation<F>) -> Result<Vec<Representation<F>>> {
        let mut out = Vec::new();
        let mut stack = vec![x.clone()];
        while let Some(y) = stack.pop() {
            if y.is_zero() {
                continue;
            }
            match self.split(&y)? {
                Some((a, b)) => {
                    stack.push(b);
                    stack.push(a);
                }
                None => out.push(y),
            }
        }
        Ok(out)
    }

    /// Whether Hom(X, Y) contains an isomorphism: random combinations first,
    /// then basis elements and pairwise sums.
    pub fn is_isomorphic(&mut self, x: &Representation<F>, y: &Representation<F>) -> bool {
        if x.dims() != y.dims() {
            return false;
        }
        if x.is_zero() {
            return true;
        }
        let hom = self.cat.hom_basis(x, y);
        self.contains_isomorphism(&hom)
    }

    pub fn contains_isomorphism(&mut self, hom: &[Morphism<F>]) -> bool {
        if hom.is_empty() {
            return false;
        }
        let f = self.cat.field().clone();
        for _ in 0..RANDOM_TRIALS {
            let coeffs: Vec<F::Elem> = (0..hom.len()).map(|_| f.sample(&mut self.rng, 1000)).collect();
            if Morphism::combine(&f, hom, &coeffs).is_isomorphism() {
                return true;
            }
        }
        for (i, g) in hom.iter().enumerate() {
            if g.is_isomorphism() {
                return true;
            }
            for h in &hom[i + 1..] {
                if g.add(h).is_isomorphism() {
                    return true;
                }
            }
        }
        false
    }
}

fn stable_image<F: Field>(m: &Matrix<F>) -> Subspace<F> {
    let mut u = Subspace::span(&Matrix::identity(m.field(), m.rows()));
    loop {
        let next = Subspace::span(&m.mul(u.basis()));
        if next.dim() == u.dim() {
            return next;
        }
        u = next;
    }
}

fn stable_kernel<F: Field>(m: &Matrix<F>) -> (Matrix<F>, Vec<usize>) {
    // rows of `l` span the annihilator of ker m^k
    let mut l = Matrix::identity(m.field(), m.rows());
    loop {
        let next = l.mul(m).row_space_basis();
        if next.rows() == l.rows() {
            return next.kernel_basis_with_free();
        }
        l = next;
    }
}

/// Eigenvalues of the vertex maps of `g` that can be recognised from roots
/// of the characteristic polynomials modulo the work prime. Each candidate is
/// exact in the field but is only a guess for ℚ; callers verify.
fn eigenvalue_candidates<F: Field>(f: &F, g: &Morphism<F>) -> Vec<F::Elem> {
    let p = f.work_prime();
    let Ok(fp) = PrimeField::new(p) else {
        return Vec::new();
    };
    let mut out: Vec<F::Elem> = Vec::new();
    for m in &g.maps {
        let d = m.rows();
        if d == 0 || d as u64 >= p {
            continue;
        }
        let Some(data) = m.entries().iter().map(|x| f.residue(x)).collect::<Option<Vec<u64>>>() else {
            continue;
        };
        let a = Matrix::from_data(&fp, d, d, data).expect("square");
        let poly = charpoly(&fp, &a);
        let roots: Vec<u64> = if p <= 1 << 18 {
            (0..p).filter(|&r| horner(&fp, &poly, r) == 0).collect()
        } else {
            // too large to scan: try small integers only
            (-64i64..=64).map(|r| fp.from_i64(r)).filter(|&r| horner(&fp, &poly, r) == 0).collect()
        };
        for r in roots {
            if let Some(l) = f.lift_residue(r) {
                if !out.contains(&l) {
                    out.push(l);
                }
            }
        }
    }
    out
}

/// Coefficients `c_0, …, c_d` (monic) of det(t·I − A) by Faddeev–LeVerrier.
fn charpoly(fp: &PrimeField, a: &Matrix<PrimeField>) -> Vec<u64> {
    let d = a.rows();
    let mut c = vec![0u64; d + 1];
    c[d] = 1;
    let mut m = Matrix::zeros(fp, d, d);
    for k in 1..=d {
        let mut next = a.mul(&m);
        for i in 0..d {
            let v = fp.add(next.get(i, i), &c[d - k + 1]);
            next.set(i, i, v);
        }
        m = next;
        let tr = a.mul(&m).trace();
        let kinv = fp.inv(&fp.from_i64(k as i64)).expect("k below p");
        c[d - k] = fp.neg(&fp.mul(&tr, &kinv));
    }
    c
}

fn horner(fp: &PrimeField, poly: &[u64], x: u64) -> u64 {
    let mut acc = 0;
    for c in poly.iter().rev() {
        acc = fp.add(&fp.mul(&acc, &x), c);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn charpoly_of_diagonal() {
        let fp = PrimeField::new(101).unwrap();
        let a = Matrix::from_i64(&fp, 2, 2, &[2, 0, 0, 5]);
        // (t − 2)(t − 5) = t² − 7t + 10
        assert_eq!(charpoly(&fp, &a), vec![10, fp.from_i64(-7), 1]);
        let poly = charpoly(&fp, &a);
        let roots: Vec<u64> = (0..101).filter(|&r| horner(&fp, &poly, r) == 0).collect();
        assert_eq!(roots, vec![2, 5]);
    }

    #[test]
    fn stable_parts_of_a_jordan_block_plus_unit() {
        let f = crate::linalg::Rationals;
        // nilpotent on e1, e2 and invertible on e3
        let m = Matrix::from_i64(&f, 3, 3, &[0, 1, 0, 0, 0, 0, 0, 0, 2]);
        assert_eq!(stable_image(&m).dim(), 1);
        assert_eq!(stable_kernel(&m).0.cols(), 2);
    }
}
