use std::collections::HashSet;

use super::LabeledGraph;

/// Closed walk through every edge exactly once, as a vertex sequence whose
/// first and last entries coincide. `None` unless the graph is Eulerian.
///
/// Hierholzer's algorithm: walk until stuck, then splice in sub-circuits
/// from vertices on the current walk that still have unused edges.
pub fn euler_circuit(g: &LabeledGraph) -> Option<Vec<usize>> {
    if !g.profile().eulerian {
        return None;
    }
    if g.edge_count() == 0 {
        return Some(vec![0]);
    }
    let n = g.order();
    // next unused neighbour position per vertex
    let mut cursor = vec![0usize; n];
    let mut used = vec![false; n * n];
    let start = (0..n).find(|&v| g.degree(v) > 0)?;
    let mut stack = vec![start];
    let mut circuit = Vec::with_capacity(g.edge_count() + 1);
    while let Some(&u) = stack.last() {
        let nbrs = g.neighbors(u);
        while cursor[u] < nbrs.len() && used[u * n + nbrs[cursor[u]]] {
            cursor[u] += 1;
        }
        if cursor[u] == nbrs.len() {
            circuit.push(u);
            stack.pop();
        } else {
            let v = nbrs[cursor[u]];
            used[u * n + v] = true;
            used[v * n + u] = true;
            stack.push(v);
        }
    }
    circuit.reverse();
    Some(circuit)
}

/// Checks that `walk` is closed and uses every edge of `g` exactly once.
pub fn is_euler_circuit(g: &LabeledGraph, walk: &[usize]) -> bool {
    if g.edge_count() == 0 {
        return walk.len() <= 1;
    }
    if walk.len() != g.edge_count() + 1 || walk.first() != walk.last() {
        return false;
    }
    let mut seen = HashSet::new();
    walk.windows(2).all(|w| {
        let (u, v) = (w[0].min(w[1]), w[0].max(w[1]));
        u != v && v < g.order() && g.has_edge(u, v) && seen.insert((u, v))
    })
}
