//! Subspaces and quotients of a coordinate space, with coordinate maps.

use crate::linalg::{Field, Matrix};

/// A subspace of `F^n` given by a basis (the columns of `basis`), together
/// with a left inverse that reads off coordinates of vectors in the span.
#[derive(Clone, Debug)]
pub struct Subspace<F: Field> {
    basis: Matrix<F>,
    rows: Vec<usize>,
    inv: Option<Matrix<F>>,
}

impl<F: Field> Subspace<F> {
    /// The span of the columns of `m` (dependent columns are dropped).
    pub fn span(m: &Matrix<F>) -> Self {
        // reduced rows of mᵀ give a basis that is the identity on its pivot rows
        let r = m.transpose().rref();
        let basis = r.reduced.select_rows(&(0..r.rank()).collect::<Vec<_>>()).transpose();
        Subspace { basis, rows: r.pivots, inv: None }
    }

    /// Wraps a basis whose rows `free` form an identity block.
    pub fn from_kernel(basis: Matrix<F>, free: Vec<usize>) -> Self {
        Subspace { basis, rows: free, inv: None }
    }

    /// Uses the columns of `m`, assumed independent, as the basis.
    pub fn with_basis(m: Matrix<F>) -> Self {
        let rows = m.transpose().pivot_columns();
        let inv = m.select_rows(&rows).inverse().expect("independent columns");
        Subspace { basis: m, rows, inv: Some(inv) }
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.rows()
    }
    pub fn dim(&self) -> usize {
        self.basis.cols()
    }
    pub fn basis(&self) -> &Matrix<F> {
        &self.basis
    }

    /// Coordinates of the columns of `v`, which must lie in the subspace.
    pub fn coords(&self, v: &Matrix<F>) -> Matrix<F> {
        let sel = v.select_rows(&self.rows);
        match &self.inv {
            Some(inv) => inv.mul(&sel),
            None => sel,
        }
    }
}

/// The quotient of `F^n` by a subspace `U`, realised on a complement spanned
/// by standard basis vectors.
#[derive(Clone, Debug)]
pub struct Quotient<F: Field> {
    /// Indices of the standard vectors spanning the complement.
    pub complement: Vec<usize>,
    /// `dim quotient × n`: sends a vector to its class.
    pub projection: Matrix<F>,
}

impl<F: Field> Quotient<F> {
    /// Quotient by the column span of `u`.
    pub fn new(u: &Matrix<F>) -> Self {
        let f = u.field();
        let n = u.rows();
        // the span basis is the identity on its pivot rows, so subtracting
        // its combination leaves a vector supported on the other rows
        let span = Subspace::span(u);
        let basis = span.basis();
        let complement: Vec<usize> = (0..n).filter(|r| !span.rows.contains(r)).collect();
        let mut projection = Matrix::zeros(f, complement.len(), n);
        for (i, &c) in complement.iter().enumerate() {
            projection.set(i, c, f.one());
            for (k, &r) in span.rows.iter().enumerate() {
                let v = basis.get(c, k);
                if !f.is_zero(v) {
                    projection.set(i, r, f.neg(v));
                }
            }
        }
        Quotient { complement, projection }
    }

    pub fn dim(&self) -> usize {
        self.complement.len()
    }

    /// Lifts of the quotient basis: the chosen standard vectors, as columns.
    pub fn section(&self, field: &F, n: usize) -> Matrix<F> {
        Matrix::identity(field, n).select_cols(&self.complement)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Rationals;

    fn q(rows: usize, cols: usize, e: &[i64]) -> Matrix<Rationals> {
        Matrix::from_i64(&Rationals, rows, cols, e)
    }

    #[test]
    fn span_coordinates() {
        let u = q(3, 2, &[1, 2, 2, 4, 0, 1]);
        let s = Subspace::span(&u);
        assert_eq!(s.dim(), 2);
        let c = s.coords(&u);
        assert_eq!(s.basis().mul(&c), u);
    }

    #[test]
    fn with_basis_coordinates() {
        let u = q(3, 2, &[1, 2, 2, 4, 0, 1]);
        let s = Subspace::with_basis(u.clone());
        assert!(s.coords(&u).is_identity());
    }

    #[test]
    fn quotient_kills_subspace() {
        let u = q(3, 1, &[1, 1, 1]);
        let qt = Quotient::new(&u);
        assert_eq!(qt.dim(), 2);
        assert!(qt.projection.mul(&u).is_zero());
        let sec = qt.section(&Rationals, 3);
        assert!(qt.projection.mul(&sec).is_identity());
    }
}
