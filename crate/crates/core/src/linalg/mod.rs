//! Exact dense linear algebra over ℚ and 𝔽p.

pub mod field;
pub mod matrix;

pub use field::{Field, FieldSpec, PrimeField, Rationals};
pub use matrix::{Matrix, Rref};
