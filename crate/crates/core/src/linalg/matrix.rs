//! Dense row-major matrices over an exact [`Field`].

use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::field::Field;

#[derive(Clone, PartialEq)]
pub struct Matrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Rref<F: Field> {
    pub reduced: Matrix<F>,
    pub pivots: Vec<usize>,
}

impl<F: Field> Rref<F> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

impl<F: Field> Matrix<F> {
    pub fn zeros(field: &F, rows: usize, cols: usize) -> Self {
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: &F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn from_fn(field: &F, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F::Elem) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { field: field.clone(), rows, cols, data }
    }

    /// Builds a matrix from row-major integer entries.
    pub fn from_i64(field: &F, rows: usize, cols: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count does not match shape");
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data: entries.iter().map(|&v| field.from_i64(v)).collect(),
        }
    }

    pub fn from_data(field: &F, rows: usize, cols: usize, data: Vec<F::Elem>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Matrix { field: field.clone(), rows, cols, data })
    }

    /// A single column vector.
    pub fn column_vector(field: &F, entries: Vec<F::Elem>) -> Self {
        let rows = entries.len();
        Matrix { field: field.clone(), rows, cols: 1, data: entries }
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }
    pub fn entries(&self) -> &[F::Elem] {
        &self.data
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &F::Elem {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: F::Elem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[F::Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<F::Elem> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| self.field.is_zero(x))
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = self.get(i, j);
                    if i == j {
                        self.field.is_one(x)
                    } else {
                        self.field.is_zero(x)
                    }
                })
            })
    }

    pub fn nonzero_count(&self) -> usize {
        self.data.iter().filter(|x| !self.field.is_zero(x)).count()
    }

    pub fn mul(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!(
            self.cols, other.rows,
            "cannot multiply {}x{} by {}x{}",
            self.rows, self.cols, other.rows, other.cols
        );
        let f = &self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if f.is_zero(a) {
                    continue;
                }
                let orow = other.row(k);
                let base = i * other.cols;
                for (j, b) in orow.iter().enumerate() {
                    if !f.is_zero(b) {
                        f.add_mul_assign(&mut out.data[base + j], a, b);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(self.cols, v.len());
        let f = &self.field;
        (0..self.rows)
            .map(|i| {
                let mut acc = f.zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !f.is_zero(a) && !f.is_zero(b) {
                        f.add_mul_assign(&mut acc, a, b);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.shape(), other.shape());
        let f = &self.field;
        Matrix {
            field: f.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f.add(a, b)).collect(),
        }
    }

    pub fn sub(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.shape(), other.shape());
        let f = &self.field;
        Matrix {
            field: f.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f.sub(a, b)).collect(),
        }
    }

    pub fn scale(&self, c: &F::Elem) -> Matrix<F> {
        let f = &self.field;
        Matrix {
            field: f.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| f.mul(a, c)).collect(),
        }
    }

    /// `self += c * other`
    pub fn add_scaled(&mut self, c: &F::Elem, other: &Matrix<F>) {
        assert_eq!(self.shape(), other.shape());
        let f = self.field.clone();
        if f.is_zero(c) {
            return;
        }
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            if !f.is_zero(b) {
                f.add_mul_assign(a, c, b);
            }
        }
    }

    pub fn neg(&self) -> Matrix<F> {
        let f = &self.field;
        Matrix {
            field: f.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| f.neg(a)).collect(),
        }
    }

    pub fn transpose(&self) -> Matrix<F> {
        Matrix::from_fn(&self.field, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn trace(&self) -> F::Elem {
        let f = &self.field;
        let mut acc = f.zero();
        for i in 0..self.rows.min(self.cols) {
            f.add_assign(&mut acc, self.get(i, i));
        }
        acc
    }

    /// Horizontal concatenation; all blocks need the same row count.
    pub fn hstack(field: &F, rows: usize, blocks: &[&Matrix<F>]) -> Matrix<F> {
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(field, rows, cols);
        let mut c0 = 0;
        for b in blocks {
            assert_eq!(b.rows, rows, "hstack row mismatch");
            out.set_block(0, c0, b);
            c0 += b.cols;
        }
        out
    }

    /// Vertical concatenation; all blocks need the same column count.
    pub fn vstack(field: &F, cols: usize, blocks: &[&Matrix<F>]) -> Matrix<F> {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let mut data = Vec::with_capacity(rows * cols);
        for b in blocks {
            assert_eq!(b.cols, cols, "vstack column mismatch");
            data.extend(b.data.iter().cloned());
        }
        Matrix { field: field.clone(), rows, cols, data }
    }

    pub fn block_diag(field: &F, blocks: &[&Matrix<F>]) -> Matrix<F> {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(field, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            out.set_block(r0, c0, b);
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    /// Copies `block` into `self` with its top-left corner at `(r0, c0)`.
    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Matrix<F>) {
        assert!(r0 + block.rows <= self.rows && c0 + block.cols <= self.cols);
        for i in 0..block.rows {
            for j in 0..block.cols {
                self.data[(r0 + i) * self.cols + c0 + j] = block.get(i, j).clone();
            }
        }
    }

    pub fn block(&self, r0: usize, rows: usize, c0: usize, cols: usize) -> Matrix<F> {
        Matrix::from_fn(&self.field, rows, cols, |i, j| self.get(r0 + i, c0 + j).clone())
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix<F> {
        Matrix::from_fn(&self.field, idx.len(), self.cols, |i, j| self.get(idx[i], j).clone())
    }

    pub fn select_cols(&self, idx: &[usize]) -> Matrix<F> {
        Matrix::from_fn(&self.field, self.rows, idx.len(), |i, j| self.get(i, idx[j]).clone())
    }

    /// Basis of the row space: the nonzero rows of the reduced echelon form.
    pub fn row_space_basis(&self) -> Matrix<F> {
        let Rref { reduced, pivots } = self.rref();
        reduced.select_rows(&(0..pivots.len()).collect::<Vec<_>>())
    }

    /// Reduced row echelon form with deterministic pivoting: the first row
    /// holding a nonzero entry in the leftmost unprocessed column.
    pub fn rref(&self) -> Rref<F> {
        let mut m = self.clone();
        let pivots = m.rref_in_place(self.cols);
        Rref { reduced: m, pivots }
    }

    /// Row reduces in place, choosing pivots only among the first
    /// `pivot_cols` columns. Returns the pivot columns.
    fn rref_in_place(&mut self, pivot_cols: usize) -> Vec<usize> {
        let f = self.field.clone();
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        let mut pivot_row: Vec<(usize, F::Elem)> = Vec::new();
        for c in 0..pivot_cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !f.is_zero(&self.data[i * cols + c])) else {
                continue;
            };
            if p != r {
                for j in 0..cols {
                    self.data.swap(p * cols + j, r * cols + j);
                }
            }
            let inv = f.inv(&self.data[r * cols + c]).expect("pivot is nonzero");
            pivot_row.clear();
            for j in c..cols {
                let x = &mut self.data[r * cols + j];
                if !f.is_zero(x) {
                    *x = f.mul(x, &inv);
                    pivot_row.push((j, x.clone()));
                }
            }
            for i in 0..rows {
                if i == r {
                    continue;
                }
                let factor = self.data[i * cols + c].clone();
                if f.is_zero(&factor) {
                    continue;
                }
                let base = i * cols;
                for (j, v) in &pivot_row {
                    f.sub_mul_assign(&mut self.data[base + j], &factor, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        // eliminate along the shorter side
        if self.rows < self.cols {
            self.rref().rank()
        } else {
            self.transpose().rref().rank()
        }
    }

    /// Columns form a basis of `{x : self * x = 0}`.
    pub fn kernel_basis(&self) -> Matrix<F> {
        self.kernel_basis_with_free().0
    }

    /// Kernel basis together with the free columns: row `free[t]` of the
    /// basis is the `t`-th standard vector, so the coordinates of a kernel
    /// vector are its entries at the free positions.
    pub fn kernel_basis_with_free(&self) -> (Matrix<F>, Vec<usize>) {
        let f = &self.field;
        let Rref { reduced, pivots } = self.rref();
        let free: Vec<usize> = {
            let mut is_pivot = vec![false; self.cols];
            for &p in &pivots {
                is_pivot[p] = true;
            }
            (0..self.cols).filter(|&c| !is_pivot[c]).collect()
        };
        let mut k = Matrix::zeros(f, self.cols, free.len());
        for (t, &fc) in free.iter().enumerate() {
            k.set(fc, t, f.one());
            for (r, &pc) in pivots.iter().enumerate() {
                let v = reduced.get(r, fc);
                if !f.is_zero(v) {
                    k.set(pc, t, f.neg(v));
                }
            }
        }
        (k, free)
    }

    /// Rows form a basis of `{y : y * self = 0}`.
    pub fn left_kernel_basis(&self) -> Matrix<F> {
        self.transpose().kernel_basis().transpose()
    }

    /// Indices of a maximal set of independent columns (the earliest ones).
    pub fn pivot_columns(&self) -> Vec<usize> {
        self.rref().pivots
    }

    /// Basis of the column space made from the earliest independent columns.
    pub fn column_space_basis(&self) -> Matrix<F> {
        self.select_cols(&self.pivot_columns())
    }

    /// Standard basis vectors (by index) completing the independent columns
    /// of `self` to a basis of the ambient space.
    pub fn complement_indices(&self) -> Vec<usize> {
        let f = &self.field;
        let aug = Matrix::hstack(f, self.rows, &[self, &Matrix::identity(f, self.rows)]);
        aug.rref()
            .pivots
            .into_iter()
            .filter(|&p| p >= self.cols)
            .map(|p| p - self.cols)
            .collect()
    }

    /// Some `X` with `self * X = rhs`, free variables set to zero; `None` if
    /// the system is inconsistent.
    pub fn solve_right(&self, rhs: &Matrix<F>) -> Result<Option<Matrix<F>>> {
        if self.rows != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "solve_right: lhs has {} rows, rhs has {}",
                self.rows, rhs.rows
            )));
        }
        let f = &self.field;
        let mut aug = Matrix::hstack(f, self.rows, &[self, rhs]);
        let pivots = aug.rref_in_place(aug.cols);
        if pivots.iter().any(|&p| p >= self.cols) {
            return Ok(None);
        }
        let mut x = Matrix::zeros(f, self.cols, rhs.cols);
        for (r, &pc) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x.set(pc, j, aug.get(r, self.cols + j).clone());
            }
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Option<Matrix<F>> {
        if self.rows != self.cols {
            return None;
        }
        // A X = I is consistent exactly when A has full rank
        self.solve_right(&Matrix::identity(&self.field, self.rows)).ok()?
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }
}

impl<F: Field> fmt::Debug for Matrix<F> {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(fm, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(fm, "; ")?;
            }
            let row: Vec<String> = self.row(i).iter().map(|x| self.field.format(x)).collect();
            write!(fm, "{}", row.join(" "))?;
        }
        write!(fm, "] ({}x{})", self.rows, self.cols)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::field::{PrimeField, Rationals};

    fn q(rows: usize, cols: usize, e: &[i64]) -> Matrix<Rationals> {
        Matrix::from_i64(&Rationals, rows, cols, e)
    }

    #[test]
    fn rref_identity_is_fixed() {
        let id = Matrix::identity(&Rationals, 3);
        let r = id.rref();
        assert_eq!(r.reduced, id);
        assert_eq!(r.rank(), 3);
    }

    #[test]
    fn rref_zero() {
        let z = Matrix::zeros(&Rationals, 2, 5);
        let r = z.rref();
        assert!(r.reduced.is_zero());
        assert_eq!(r.rank(), 0);
    }

    #[test]
    fn rref_rank_one() {
        let r = q(2, 2, &[1, 2, 2, 4]).rref();
        assert_eq!(r.pivots, vec![0]);
        assert_eq!(r.reduced, q(2, 2, &[1, 2, 0, 0]));
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(Matrix::identity(&Rationals, 4).kernel_basis().cols(), 0);
        assert_eq!(Matrix::zeros(&Rationals, 2, 3).kernel_basis().cols(), 3);
        let k = q(1, 2, &[1, 1]).kernel_basis();
        assert_eq!(k, q(2, 1, &[-1, 1]));
    }

    #[test]
    fn solve_right_examples() {
        let b = q(2, 3, &[1, 2, 3, 4, 5, 6]);
        let x = Matrix::identity(&Rationals, 2).solve_right(&b).unwrap().unwrap();
        assert_eq!(x, b);
        assert!(q(2, 1, &[1, 0]).solve_right(&q(2, 1, &[0, 1])).unwrap().is_none());
        let x = q(1, 1, &[2]).solve_right(&q(1, 1, &[1])).unwrap().unwrap();
        assert_eq!(Rationals.format(x.get(0, 0)), "1/2");
        assert!(q(2, 1, &[1, 0]).solve_right(&q(3, 1, &[0, 1, 0])).is_err());
    }

    #[test]
    fn complement_of_line() {
        let u = q(3, 1, &[1, 1, 0]);
        assert_eq!(u.complement_indices(), vec![0, 2]);
    }

    #[test]
    fn inverse_roundtrip() {
        let a = q(2, 2, &[2, 1, 1, 1]);
        let ai = a.inverse().unwrap();
        assert!(a.mul(&ai).is_identity());
        assert!(q(2, 2, &[1, 2, 2, 4]).inverse().is_none());
    }

    #[test]
    fn prime_field_rank() {
        let f = PrimeField::new(7).unwrap();
        // rank 1 mod 7, rank 2 over Q
        let m = Matrix::from_i64(&f, 2, 2, &[1, 3, 2, 13]);
        assert_eq!(m.rank(), 1);
        assert_eq!(q(2, 2, &[1, 3, 2, 13]).rank(), 2);
    }
}
