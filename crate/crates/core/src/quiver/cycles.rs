use std::collections::BTreeSet;

use super::{Quiver, VertexId};

/// Vertex sets of size `length` whose induced subquiver has a single cycle of
/// that length as its underlying undirected graph. Orientation is ignored.
/// Each set is returned sorted; the list is sorted.
pub fn find_induced_cycles(q: &Quiver, length: usize) -> Vec<Vec<VertexId>> {
    let n = q.vertex_count();
    if length < 3 || length > n {
        return Vec::new();
    }
    let mut adj = vec![vec![false; n]; n];
    for a in q.arrows() {
        if a.source != a.target {
            adj[a.source][a.target] = true;
            adj[a.target][a.source] = true;
        }
    }
    let neighbours: Vec<Vec<VertexId>> =
        (0..n).map(|v| (0..n).filter(|&w| adj[v][w]).collect()).collect();

    let mut found = BTreeSet::new();
    let mut path = Vec::with_capacity(length);
    for s in 0..n {
        path.clear();
        path.push(s);
        extend(&adj, &neighbours, length, &mut path, &mut found);
    }
    found.into_iter().collect()
}

// Grows chordless paths whose smallest vertex is path[0].
fn extend(
    adj: &[Vec<bool>],
    neighbours: &[Vec<VertexId>],
    length: usize,
    path: &mut Vec<VertexId>,
    found: &mut BTreeSet<Vec<VertexId>>,
) {
    let s = path[0];
    let last = *path.last().unwrap();
    for &w in &neighbours[last] {
        if w <= s || path.contains(&w) {
            continue;
        }
        // w may touch only `last` among the interior vertices
        if path.len() > 2 && path[1..path.len() - 1].iter().any(|&u| adj[u][w]) {
            continue;
        }
        let closing = path.len() + 1 == length;
        if path.len() > 1 && adj[s][w] != closing {
            continue;
        }
        if closing {
            if path.len() == 1 {
                continue;
            }
            // each cycle is found in both directions; keep one
            if path[1] < w {
                let mut set = path.clone();
                set.push(w);
                set.sort_unstable();
                found.insert(set);
            }
            continue;
        }
        path.push(w);
        extend(adj, neighbours, length, path, found);
        path.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::{build_iyama_quiver, build_linear_am, Arrow};

    #[test]
    fn trees_have_no_cycles() {
        let q = build_linear_am(4).unwrap();
        for len in 3..=4 {
            assert!(find_induced_cycles(&q, len).is_empty());
        }
    }

    #[test]
    fn commutative_square() {
        let arrows = [(0, 1), (0, 2), (1, 3), (2, 3)]
            .iter()
            .enumerate()
            .map(|(i, &(s, t))| Arrow { source: s, target: t, label: format!("b{i}") })
            .collect();
        let q = Quiver::new((1..=4).map(|i| i.to_string()).collect(), arrows).unwrap();
        assert_eq!(find_induced_cycles(&q, 4), vec![vec![0, 1, 2, 3]]);
        assert!(find_induced_cycles(&q, 3).is_empty());
    }

    #[test]
    fn chords_disqualify() {
        // a triangle plus a pendant square sharing an edge: 0-1-2-0 and 1-2-3
        let pairs = [(0, 1), (1, 2), (2, 0), (1, 3), (2, 3)];
        let arrows = pairs
            .iter()
            .enumerate()
            .map(|(i, &(s, t))| Arrow { source: s, target: t, label: format!("c{i}") })
            .collect();
        let q = Quiver::new((0..4).map(|i| i.to_string()).collect(), arrows).unwrap();
        assert_eq!(find_induced_cycles(&q, 3).len(), 2);
        // 0-1-3-2 has the chord 1-2
        assert!(find_induced_cycles(&q, 4).is_empty());
    }

    #[test]
    fn q43_contains_the_affine_hexagon() {
        let iq = build_iyama_quiver(4, 3).unwrap();
        let mut want: Vec<VertexId> = ["146", "136", "236", "145", "245", "235"]
            .iter()
            .map(|l| iq.quiver.vertex_by_label(l).unwrap())
            .collect();
        want.sort();
        let cycles = find_induced_cycles(&iq.quiver, 6);
        assert!(cycles.contains(&want));
    }
}
