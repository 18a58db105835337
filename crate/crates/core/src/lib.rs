//! Exact computations with bound quiver algebras and their module categories.

pub mod error;
pub mod linalg;
pub mod quiver;
pub mod algebra;
pub mod rep;
pub mod fixtures;
pub mod artheory;
pub mod auslander;

pub use error::{Error, Result};
