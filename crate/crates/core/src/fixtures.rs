//! Named algebras: the linear quivers, the Q_m^n family and two small
//! Nakayama algebras with zero relations of length two.

use crate::algebra::{build_algebra, BoundQuiverAlgebra, DEFAULT_MAX_DEGREE};
use crate::error::{Error, Result};
use crate::linalg::Field;
use crate::quiver::{build_iyama_quiver, build_linear_am, Arrow, LinearRelation, PathWord, Quiver};

/// A quiver with relations, before choosing a field.
#[derive(Clone, Debug)]
pub struct BoundQuiver {
    pub name: String,
    pub quiver: Quiver,
    pub relations: Vec<LinearRelation>,
}

impl BoundQuiver {
    pub fn build<F: Field>(&self, field: F) -> Result<BoundQuiverAlgebra<F>> {
        build_algebra(self.quiver.clone(), self.relations.clone(), field, DEFAULT_MAX_DEGREE)
    }
}

/// `1 ← 2 ← ⋯ ← k` with arrows `a_i: i+1 → i` and the zero relations
/// `a_{i+1}` followed by `a_i` for the listed `i`.
fn descending_nakayama(name: &str, k: usize, zero_at: &[usize]) -> BoundQuiver {
    let labels = (1..=k).map(|i| i.to_string()).collect();
    let arrows = (1..k).map(|i| Arrow { source: i, target: i - 1, label: format!("a{i}") }).collect();
    let quiver = Quiver::new(labels, arrows).expect("valid quiver");
    let relations = zero_at
        .iter()
        .map(|&i| {
            // arrow ids are i − 1 for a_i
            LinearRelation::zero_relation(PathWord::from_arrows(&quiver, vec![i, i - 1]).expect("composable"))
        })
        .collect();
    BoundQuiver { name: name.to_string(), quiver, relations }
}

/// Seven vertices `1 ← 2 ← ⋯ ← 7` with `a1a2 = a2a3 = a4a5 = a5a6 = 0`.
pub fn example_2_8() -> BoundQuiver {
    descending_nakayama("example-2.8", 7, &[1, 2, 4, 5])
}

/// `1 ← 2 ← ⋯ ← n+2` with `a_i a_{i+1} = 0` for `1 ≤ i ≤ n`.
pub fn example_3_5(n: usize) -> BoundQuiver {
    let zeros: Vec<usize> = (1..=n).collect();
    descending_nakayama(&format!("example-3.5({n})"), n + 2, &zeros)
}

/// The path algebra of `1 → 2 → ⋯ → m`.
pub fn linear(m: usize) -> Result<BoundQuiver> {
    Ok(BoundQuiver { name: format!("kA({m})"), quiver: build_linear_am(m)?, relations: Vec::new() })
}

/// Q_m^n with the relations generating I_m^n.
pub fn iyama(m: usize, n: usize) -> Result<BoundQuiver> {
    let iq = build_iyama_quiver(m, n)?;
    Ok(BoundQuiver { name: format!("A({m},{n})"), quiver: iq.quiver, relations: iq.relations })
}

/// Resolves `example-2.8`, `example-3.5(n)` and `kA(m)`.
pub fn by_name(name: &str) -> Result<BoundQuiver> {
    let arg = |prefix: &str| -> Option<usize> {
        name.strip_prefix(prefix)?.strip_suffix(')')?.trim().parse().ok()
    };
    if name == "example-2.8" {
        Ok(example_2_8())
    } else if let Some(n) = arg("example-3.5(") {
        Ok(example_3_5(n))
    } else if let Some(m) = arg("kA(") {
        linear(m)
    } else {
        Err(Error::InvalidInput(format!(
            "unknown fixture `{name}`; expected example-2.8, example-3.5(n) or kA(m)"
        )))
    }
}
