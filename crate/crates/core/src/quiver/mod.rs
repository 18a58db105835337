//! Finite quivers, paths and linear relations.
//!
//! Paths are stored in application order: the word `[a, b]` means "first `a`,
//! then `b`". Composition written right to left, as in `b·a`, is the same path.

mod cycles;
mod iyama;

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use cycles::find_induced_cycles;
pub use iyama::{build_iyama_quiver, build_linear_am, split_iyama, IyamaQuiver, IyamaSplit, IyamaVertex};

pub type VertexId = usize;
pub type ArrowId = usize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arrow {
    pub source: VertexId,
    pub target: VertexId,
    pub label: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    vertex_labels: Vec<String>,
    arrows: Vec<Arrow>,
    out_arrows: Vec<Vec<ArrowId>>,
    in_arrows: Vec<Vec<ArrowId>>,
}

impl Quiver {
    pub fn new(vertex_labels: Vec<String>, arrows: Vec<Arrow>) -> Result<Self> {
        let n = vertex_labels.len();
        let mut seen = BTreeSet::new();
        for l in &vertex_labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::InvalidInput(format!("duplicate vertex label `{l}`")));
            }
        }
        let mut seen = BTreeSet::new();
        let mut out_arrows = vec![Vec::new(); n];
        let mut in_arrows = vec![Vec::new(); n];
        for (id, a) in arrows.iter().enumerate() {
            if a.source >= n || a.target >= n {
                return Err(Error::InvalidInput(format!("arrow `{}` has an invalid endpoint", a.label)));
            }
            if !seen.insert(a.label.as_str()) {
                return Err(Error::InvalidInput(format!("duplicate arrow label `{}`", a.label)));
            }
            out_arrows[a.source].push(id);
            in_arrows[a.target].push(id);
        }
        Ok(Quiver { vertex_labels, arrows, out_arrows, in_arrows })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_labels.len()
    }
    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }
    pub fn vertex_label(&self, v: VertexId) -> &str {
        &self.vertex_labels[v]
    }
    pub fn vertex_labels(&self) -> &[String] {
        &self.vertex_labels
    }
    pub fn arrow(&self, a: ArrowId) -> &Arrow {
        &self.arrows[a]
    }
    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }
    pub fn arrows_from(&self, v: VertexId) -> &[ArrowId] {
        &self.out_arrows[v]
    }
    pub fn arrows_into(&self, v: VertexId) -> &[ArrowId] {
        &self.in_arrows[v]
    }
    pub fn vertex_by_label(&self, label: &str) -> Option<VertexId> {
        self.vertex_labels.iter().position(|l| l == label)
    }
    pub fn arrow_by_label(&self, label: &str) -> Option<ArrowId> {
        self.arrows.iter().position(|a| a.label == label)
    }

    /// Same vertices, every arrow reversed. Labels gain (or lose) an `^op`
    /// suffix, so taking the opposite twice gives back the original quiver.
    pub fn opposite(&self) -> Quiver {
        let arrows = self
            .arrows
            .iter()
            .map(|a| Arrow {
                source: a.target,
                target: a.source,
                label: match a.label.strip_suffix("^op") {
                    Some(base) => base.to_string(),
                    None => format!("{}^op", a.label),
                },
            })
            .collect();
        Quiver::new(self.vertex_labels.clone(), arrows).expect("opposite of a valid quiver")
    }

    /// Subquiver on `vertices` (in the given order) with every arrow between them.
    /// Returns the subquiver and, for each of its arrows, the original arrow id.
    pub fn induced_subquiver(&self, vertices: &[VertexId]) -> (Quiver, Vec<ArrowId>) {
        let mut pos = vec![None; self.vertex_count()];
        for (i, &v) in vertices.iter().enumerate() {
            pos[v] = Some(i);
        }
        let mut arrows = Vec::new();
        let mut origin = Vec::new();
        for (id, a) in self.arrows.iter().enumerate() {
            if let (Some(s), Some(t)) = (pos[a.source], pos[a.target]) {
                arrows.push(Arrow { source: s, target: t, label: a.label.clone() });
                origin.push(id);
            }
        }
        let labels = vertices.iter().map(|&v| self.vertex_labels[v].clone()).collect();
        (Quiver::new(labels, arrows).expect("induced subquiver is valid"), origin)
    }

    /// Graphviz rendering: one node per vertex in id order, one edge per arrow.
    pub fn to_dot(&self, name: &str) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "digraph \"{name}\" {{");
        let _ = writeln!(s, "  rankdir=LR;");
        for (v, l) in self.vertex_labels.iter().enumerate() {
            let _ = writeln!(s, "  v{v} [label=\"{l}\"];");
        }
        for a in &self.arrows {
            let _ = writeln!(s, "  v{} -> v{} [label=\"{}\"];", a.source, a.target, a.label);
        }
        s.push_str("}\n");
        s
    }
}

/// A path in a quiver: its endpoints and its arrows in application order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PathWord {
    pub source: VertexId,
    pub target: VertexId,
    pub arrows: Vec<ArrowId>,
}

impl PathWord {
    pub fn stationary(v: VertexId) -> Self {
        PathWord { source: v, target: v, arrows: Vec::new() }
    }

    pub fn from_arrows(q: &Quiver, arrows: Vec<ArrowId>) -> Result<Self> {
        let Some(&first) = arrows.first() else {
            return Err(Error::InvalidInput("empty arrow list needs an explicit vertex".into()));
        };
        for w in arrows.windows(2) {
            if q.arrow(w[0]).target != q.arrow(w[1]).source {
                return Err(Error::InvalidInput(format!(
                    "arrows `{}` and `{}` do not compose",
                    q.arrow(w[0]).label,
                    q.arrow(w[1]).label
                )));
            }
        }
        let last = *arrows.last().unwrap();
        Ok(PathWord { source: q.arrow(first).source, target: q.arrow(last).target, arrows })
    }

    /// Builds a path from arrow labels in application order.
    pub fn from_labels(q: &Quiver, labels: &[&str]) -> Result<Self> {
        let ids = labels
            .iter()
            .map(|l| q.arrow_by_label(l).ok_or_else(|| Error::InvalidInput(format!("no arrow `{l}`"))))
            .collect::<Result<Vec<_>>>()?;
        Self::from_arrows(q, ids)
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    /// The same path read in the opposite quiver.
    pub fn reversed(&self) -> PathWord {
        PathWord {
            source: self.target,
            target: self.source,
            arrows: self.arrows.iter().rev().copied().collect(),
        }
    }

    pub fn display(&self, q: &Quiver) -> String {
        if self.arrows.is_empty() {
            format!("e{}", q.vertex_label(self.source))
        } else {
            self.arrows.iter().map(|&a| q.arrow(a).label.as_str()).collect::<Vec<_>>().join(".")
        }
    }
}

/// A linear combination of parallel paths of equal length ≥ 2, with integer
/// coefficients interpreted in whatever field the algebra is built over.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearRelation {
    pub terms: Vec<(i64, PathWord)>,
}

impl LinearRelation {
    pub fn zero_relation(path: PathWord) -> Self {
        LinearRelation { terms: vec![(1, path)] }
    }

    pub fn commutativity(p: PathWord, q: PathWord) -> Self {
        LinearRelation { terms: vec![(1, p), (-1, q)] }
    }

    /// Checks the admissibility shape: nonempty, parallel, homogeneous, length ≥ 2.
    pub fn validate(&self) -> Result<()> {
        let Some((_, first)) = self.terms.first() else {
            return Err(Error::InvalidInput("relation without terms".into()));
        };
        for (c, p) in &self.terms {
            if *c == 0 {
                return Err(Error::InvalidInput("relation term with zero coefficient".into()));
            }
            if p.source != first.source || p.target != first.target {
                return Err(Error::InvalidInput("relation terms are not parallel".into()));
            }
            if p.len() != first.len() {
                return Err(Error::InhomogeneousRelation(format!(
                    "terms of lengths {} and {}",
                    first.len(),
                    p.len()
                )));
            }
        }
        if first.len() < 2 {
            return Err(Error::InvalidInput("relations must have length at least 2".into()));
        }
        Ok(())
    }

    pub fn degree(&self) -> usize {
        self.terms.first().map_or(0, |(_, p)| p.len())
    }

    pub fn reversed(&self) -> LinearRelation {
        LinearRelation { terms: self.terms.iter().map(|(c, p)| (*c, p.reversed())).collect() }
    }

    pub fn display(&self, q: &Quiver) -> String {
        let mut s = String::new();
        for (i, (c, p)) in self.terms.iter().enumerate() {
            let sign = if *c < 0 { "-" } else if i > 0 { "+" } else { "" };
            let mag = c.unsigned_abs();
            let coef = if mag == 1 { String::new() } else { format!("{mag}*") };
            let _ = write!(s, "{}{}{}{}", if i > 0 { " " } else { "" }, sign, coef, p.display(q));
        }
        s
    }
}
