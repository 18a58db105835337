//! The quivers Q_m^n with their commutativity and zero relations.
//!
//! Vertices are strictly increasing tuples `1 ≤ x_1 < … < x_n ≤ m+n−1`, with
//! an arrow `a_i(x): x → x+e_i` whenever `x+e_i` is again such a tuple.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Arrow, ArrowId, LinearRelation, PathWord, Quiver, VertexId};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IyamaVertex {
    pub coords: Vec<u32>,
}

impl IyamaVertex {
    /// Digit-string label (`146`) when every coordinate is a single digit,
    /// otherwise a parenthesised tuple.
    pub fn label(&self) -> String {
        if self.coords.iter().all(|&c| c < 10) {
            self.coords.iter().map(|c| c.to_string()).collect()
        } else {
            let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
            format!("({})", parts.join(","))
        }
    }

    /// `x + e_i` (with `i` counted from 1) if it is still strictly increasing
    /// and bounded by `top`.
    pub fn shifted(&self, i: usize, top: u32) -> Option<IyamaVertex> {
        let mut c = self.coords.clone();
        c[i - 1] += 1;
        let ok = c[i - 1] <= top && (i == c.len() || c[i - 1] < c[i]);
        ok.then_some(IyamaVertex { coords: c })
    }
}

impl fmt::Display for IyamaVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// Q_m^n together with its coordinates and the generators of I_m^n.
#[derive(Clone, Debug)]
pub struct IyamaQuiver {
    pub m: usize,
    pub n: usize,
    pub quiver: Quiver,
    /// `vertices[v]` are the coordinates of vertex id `v`, in lexicographic order.
    pub vertices: Vec<IyamaVertex>,
    /// `arrow_dirs[a]` is the direction `i` (from 1) of arrow `a = a_i(x)`.
    pub arrow_dirs: Vec<usize>,
    pub relations: Vec<LinearRelation>,
}

impl IyamaQuiver {
    pub fn vertex_of(&self, x: &IyamaVertex) -> Option<VertexId> {
        self.vertices.binary_search(x).ok()
    }

    /// The arrow `a_i(x)`, if present.
    pub fn arrow_at(&self, x: VertexId, i: usize) -> Option<ArrowId> {
        self.quiver.arrows_from(x).iter().copied().find(|&a| self.arrow_dirs[a] == i)
    }
}

/// The linearly oriented quiver `1 → 2 → ⋯ → m`.
pub fn build_linear_am(m: usize) -> Result<Quiver> {
    if m == 0 {
        return Err(Error::InvalidInput("linear quiver needs m ≥ 1".into()));
    }
    let labels = (1..=m).map(|i| i.to_string()).collect();
    let arrows = (0..m - 1)
        .map(|i| Arrow { source: i, target: i + 1, label: format!("a{}", i + 1) })
        .collect();
    Quiver::new(labels, arrows)
}

fn tuples(n: usize, top: u32) -> Vec<IyamaVertex> {
    fn rec(start: u32, left: usize, top: u32, cur: &mut Vec<u32>, out: &mut Vec<IyamaVertex>) {
        if left == 0 {
            out.push(IyamaVertex { coords: cur.clone() });
            return;
        }
        // leave room for the remaining coordinates
        let last = top + 1 - left as u32;
        for v in start..=last {
            cur.push(v);
            rec(v + 1, left - 1, top, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n as u32 <= top {
        rec(1, n, top, &mut Vec::new(), &mut out);
    }
    out
}

/// Builds Q_m^n and the relations ρ_ij^x.
///
/// For each `x` and unordered `{i, j}` with `x + e_i + e_j` a vertex, emits
/// the commutativity relation when both intermediate vertices exist and the
/// zero relation on the single existing path otherwise.
pub fn build_iyama_quiver(m: usize, n: usize) -> Result<IyamaQuiver> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidInput("Q_m^n needs m ≥ 1 and n ≥ 1".into()));
    }
    let top = (m + n - 1) as u32;
    let vertices = tuples(n, top);
    let index = |x: &IyamaVertex| vertices.binary_search(x).ok();

    let mut arrows = Vec::new();
    let mut arrow_dirs = Vec::new();
    let mut arrow_id = std::collections::HashMap::new();
    for (v, x) in vertices.iter().enumerate() {
        for i in 1..=n {
            if let Some(y) = x.shifted(i, top) {
                arrow_id.insert((v, i), arrows.len());
                arrows.push(Arrow {
                    source: v,
                    target: index(&y).expect("shifted tuple is a vertex"),
                    label: format!("a{i}({})", x.label()),
                });
                arrow_dirs.push(i);
            }
        }
    }
    let labels = vertices.iter().map(|x| x.label()).collect();
    let quiver = Quiver::new(labels, arrows)?;

    let mut relations = Vec::new();
    for (v, x) in vertices.iter().enumerate() {
        for i in 1..=n {
            for j in i + 1..=n {
                let xi = x.shifted(i, top);
                let xj = x.shifted(j, top);
                // path through x+e_i: a_i(x) then a_j(x+e_i)
                let via_i = xi.as_ref().and_then(|y| {
                    let w = index(y)?;
                    Some(vec![arrow_id[&(v, i)], *arrow_id.get(&(w, j))?])
                });
                let via_j = xj.as_ref().and_then(|y| {
                    let w = index(y)?;
                    Some(vec![arrow_id[&(v, j)], *arrow_id.get(&(w, i))?])
                });
                let word = |a: Vec<ArrowId>| PathWord::from_arrows(&quiver, a).expect("composable");
                match (via_i, via_j) {
                    (Some(p), Some(q)) => {
                        relations.push(LinearRelation::commutativity(word(p), word(q)))
                    }
                    (Some(p), None) => {
                        relations.push(LinearRelation::zero_relation(word(p)))
                    }
                    (None, Some(q)) => {
                        relations.push(LinearRelation::zero_relation(word(q)))
                    }
                    (None, None) => {}
                }
            }
        }
    }
    Ok(IyamaQuiver { m, n, quiver, vertices, arrow_dirs, relations })
}

/// The decomposition of Q_m^n along the last coordinate.
#[derive(Clone, Debug)]
pub struct IyamaSplit {
    /// Induced on `x_n = m+n−1`; isomorphic to Q_m^{n−1} by dropping `x_n`.
    pub upper: Quiver,
    pub upper_vertices: Vec<VertexId>,
    /// Induced on `x_n < m+n−1`; isomorphic to Q_{m−1}^n with the same coordinates.
    pub lower: Quiver,
    pub lower_vertices: Vec<VertexId>,
    /// Arrows `a_n(x)` with `x_n = m+n−2`, from the lower part into the upper part.
    pub connecting: Vec<ArrowId>,
    pub upper_arrows: Vec<ArrowId>,
    pub lower_arrows: Vec<ArrowId>,
}

pub fn split_iyama(m: usize, n: usize) -> Result<(IyamaQuiver, IyamaSplit)> {
    if m < 2 || n < 2 {
        return Err(Error::InvalidInput("split needs m ≥ 2 and n ≥ 2".into()));
    }
    let iq = build_iyama_quiver(m, n)?;
    let top = (m + n - 1) as u32;
    let (upper_vertices, lower_vertices): (Vec<VertexId>, Vec<VertexId>) =
        (0..iq.vertices.len()).partition(|&v| iq.vertices[v].coords[n - 1] == top);
    let (upper, upper_arrows) = iq.quiver.induced_subquiver(&upper_vertices);
    let (lower, lower_arrows) = iq.quiver.induced_subquiver(&lower_vertices);
    let connecting = (0..iq.quiver.arrow_count())
        .filter(|&a| {
            let ar = iq.quiver.arrow(a);
            iq.vertices[ar.source].coords[n - 1] != top && iq.vertices[ar.target].coords[n - 1] == top
        })
        .collect();
    let split = IyamaSplit { upper, upper_vertices, lower, lower_vertices, connecting, upper_arrows, lower_arrows };
    Ok((iq, split))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binom(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn vertex_counts_are_binomial() {
        for m in 1..=6 {
            for n in 1..=6 {
                let iq = build_iyama_quiver(m, n).unwrap();
                assert_eq!(iq.vertices.len(), binom(m + n - 1, n), "m={m} n={n}");
            }
        }
    }

    #[test]
    fn q24_is_linear_with_zero_relations() {
        let iq = build_iyama_quiver(2, 4).unwrap();
        let labels: Vec<&str> = iq.quiver.vertex_labels().iter().map(|s| s.as_str()).collect();
        assert_eq!(labels, ["1234", "1235", "1245", "1345", "2345"]);
        let q = &iq.quiver;
        let edges: Vec<(&str, &str)> = q
            .arrows()
            .iter()
            .map(|a| (q.vertex_label(a.source), q.vertex_label(a.target)))
            .collect();
        assert_eq!(edges, [("1234", "1235"), ("1235", "1245"), ("1245", "1345"), ("1345", "2345")]);
        assert_eq!(iq.relations.len(), 3);
        assert!(iq.relations.iter().all(|r| r.terms.len() == 1 && r.degree() == 2));
    }

    #[test]
    fn rho_uses_application_order() {
        // x = 12 in Q_3^2: x+e_1 = 22 is not a vertex, so the relation is
        // the zero relation a_1(13)a_2(12), stored as the word [a2(12), a1(13)].
        let iq = build_iyama_quiver(3, 2).unwrap();
        let q = &iq.quiver;
        let x = iq.vertex_of(&IyamaVertex { coords: vec![1, 2] }).unwrap();
        let rel = iq.relations.iter().find(|r| r.terms[0].1.source == x).unwrap();
        assert_eq!(rel.terms.len(), 1);
        let word = &rel.terms[0].1;
        assert_eq!(q.arrow(word.arrows[0]).label, "a2(12)");
        assert_eq!(q.arrow(word.arrows[1]).label, "a1(13)");
        // at x = 13 both 23 and 14 exist: a commutativity relation with the
        // first term going through x + e_1 = 23
        let x = iq.vertex_of(&IyamaVertex { coords: vec![1, 3] }).unwrap();
        let rel = iq.relations.iter().find(|r| r.terms[0].1.source == x).unwrap();
        assert_eq!(rel.terms.len(), 2);
        assert_eq!(rel.terms[0].0, 1);
        assert_eq!(rel.terms[1].0, -1);
        assert_eq!(q.arrow(rel.terms[0].1.arrows[0]).label, "a1(13)");
        assert_eq!(q.arrow(rel.terms[0].1.arrows[1]).label, "a2(23)");
        assert_eq!(q.arrow(rel.terms[1].1.arrows[0]).label, "a2(13)");
        assert_eq!(q.arrow(rel.terms[1].1.arrows[1]).label, "a1(14)");
    }

    #[test]
    fn relations_are_valid() {
        for (m, n) in [(2, 3), (3, 3), (3, 4), (4, 3), (4, 2)] {
            let iq = build_iyama_quiver(m, n).unwrap();
            for r in &iq.relations {
                r.validate().unwrap();
                assert_eq!(r.degree(), 2);
                match r.terms.len() {
                    1 => assert_eq!(r.terms[0].0, 1),
                    2 => assert_eq!((r.terms[0].0, r.terms[1].0), (1, -1)),
                    k => panic!("relation with {k} terms"),
                }
            }
        }
    }

    #[test]
    fn linear_am() {
        assert_eq!(build_linear_am(1).unwrap().arrow_count(), 0);
        let q = build_linear_am(4).unwrap();
        assert_eq!(q.vertex_count(), 4);
        assert!(q.arrows().iter().all(|a| a.target == a.source + 1));
        assert!(build_linear_am(0).is_err());
    }

    #[test]
    fn q2n_matches_linear_nakayama_shape() {
        for n in 1..=6 {
            let iq = build_iyama_quiver(2, n).unwrap();
            assert_eq!(iq.vertices.len(), n + 1);
            assert_eq!(iq.quiver.arrow_count(), n);
            assert_eq!(iq.relations.len(), n.saturating_sub(1));
        }
    }

    #[test]
    fn split_is_a_partition() {
        for (m, n) in [(2, 2), (3, 3), (2, 4), (4, 3), (3, 4)] {
            let (iq, s) = split_iyama(m, n).unwrap();
            let mut all: Vec<ArrowId> = s
                .upper_arrows
                .iter()
                .chain(&s.lower_arrows)
                .chain(&s.connecting)
                .copied()
                .collect();
            all.sort();
            assert_eq!(all, (0..iq.quiver.arrow_count()).collect::<Vec<_>>());
            assert_eq!(s.upper_vertices.len() + s.lower_vertices.len(), iq.vertices.len());
        }
        assert!(split_iyama(1, 3).is_err());
    }
}
