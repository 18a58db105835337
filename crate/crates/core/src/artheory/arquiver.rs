use std::fmt::Write;

use serde::Serialize;

use super::EnumerationResult;
use crate::error::Result;
use crate::linalg::Field;
use crate::rep::{ModuleCategory, ProjDim, Representation};

#[derive(Clone, Debug)]
pub struct ArNode<F: Field> {
    pub id: usize,
    pub rep: Representation<F>,
    pub projective: bool,
    pub injective: bool,
    pub pd: ProjDim,
    pub id_dim: ProjDim,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ArArrow {
    pub source: usize,
    pub target: usize,
    pub multiplicity: usize,
}

/// Auslander–Reiten quiver of a complete enumeration.
#[derive(Clone, Debug)]
pub struct ArQuiver<F: Field> {
    pub nodes: Vec<ArNode<F>>,
    pub arrows: Vec<ArArrow>,
    /// `tau[i]` is the translate of node `i`, defined on non-projective nodes.
    pub tau: Vec<Option<usize>>,
}

/// Irreducible maps into a non-projective `Y` come from the summands of the
/// middle of the almost split sequence ending in `Y`; into a projective `P`
/// from the summands of rad P. Both are recorded during enumeration.
pub fn ar_quiver<F: Field>(cat: &ModuleCategory<F>, en: &EnumerationResult<F>) -> Result<ArQuiver<F>> {
    en.require_complete()?;
    let nodes = en
        .modules
        .iter()
        .enumerate()
        .map(|(id, m)| ArNode {
            id,
            rep: m.rep.clone(),
            projective: m.projective,
            injective: m.injective,
            pd: cat.proj_dimension(&m.rep),
            id_dim: cat.inj_dimension(&m.rep),
        })
        .collect();
    let mut arrows: Vec<ArArrow> = en
        .modules
        .iter()
        .enumerate()
        .flat_map(|(t, m)| {
            m.predecessors.iter().map(move |&(s, mult)| ArArrow { source: s, target: t, multiplicity: mult })
        })
        .collect();
    arrows.sort();
    let tau = en.modules.iter().map(|m| m.tau).collect();
    Ok(ArQuiver { nodes, arrows, tau })
}

/// Compact dimension-vector label: digits when all are below ten.
pub(crate) fn dims_label(dims: &[usize]) -> String {
    if dims.iter().all(|&d| d < 10) {
        dims.iter().map(|d| d.to_string()).collect()
    } else {
        format!("({})", dims.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(","))
    }
}

#[derive(Serialize)]
struct NodeJson {
    id: usize,
    dims: Vec<usize>,
    projective: bool,
    injective: bool,
    pd: ProjDim,
    id_dim: ProjDim,
    tau: Option<usize>,
}

#[derive(Serialize)]
struct ArQuiverJson<'a> {
    schema: u32,
    nodes: Vec<NodeJson>,
    arrows: &'a [ArArrow],
}

impl<F: Field> ArQuiver<F> {
    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    /// Number of arrows counted with multiplicity.
    pub fn arrow_count(&self) -> usize {
        self.arrows.iter().map(|a| a.multiplicity).sum()
    }

    pub fn to_dot(&self, name: &str) -> String {
        let mut s = format!("digraph \"{name}\" {{\n  rankdir=LR;\n");
        for n in &self.nodes {
            let shape = match (n.projective, n.injective) {
                (true, true) => "doubleoctagon",
                (true, false) => "box",
                (false, true) => "diamond",
                _ => "ellipse",
            };
            let _ = writeln!(s, "  n{} [label=\"{}\", shape={shape}];", n.id, dims_label(n.rep.dims()));
        }
        for a in &self.arrows {
            let label = if a.multiplicity > 1 { format!(" [label=\"{}\"]", a.multiplicity) } else { String::new() };
            let _ = writeln!(s, "  n{} -> n{}{label};", a.source, a.target);
        }
        for (i, t) in self.tau.iter().enumerate() {
            if let Some(t) = t {
                let _ = writeln!(s, "  n{i} -> n{t} [style=dashed, constraint=false];");
            }
        }
        s.push_str("}\n");
        s
    }

    pub fn to_json(&self) -> serde_json::Value {
        let j = ArQuiverJson {
            schema: 1,
            nodes: self
                .nodes
                .iter()
                .map(|n| NodeJson {
                    id: n.id,
                    dims: n.rep.dims().to_vec(),
                    projective: n.projective,
                    injective: n.injective,
                    pd: n.pd,
                    id_dim: n.id_dim,
                    tau: self.tau[n.id],
                })
                .collect(),
            arrows: &self.arrows,
        };
        serde_json::to_value(j).expect("serialisable")
    }
}
