//! Exact Hamiltonian cycle search.
//!
//! Cheap exact refutations (too few vertices, a vertex of degree < 2, a
//! disconnected graph, a cut vertex) and the complete-graph case are decided
//! for any size. Everything else goes to a backtracking search, which is
//! subject to the size gate.
//!
//! The search breaks the symmetry between true twins (vertices with equal
//! closed neighbourhoods): twins are entered in ascending index order. Any
//! Hamiltonian cycle through vertex 0 can be mapped onto such a cycle by an
//! automorphism permuting twins and fixing 0, so no answer is lost.

use super::connectivity::blocks;
use super::{gate, Algorithm, LabeledGraph, Skipped};

/// A Hamiltonian cycle starting at vertex 0 (the closing edge back to the
/// first vertex is implicit), or `None` if none exists. Graphs with fewer
/// than three vertices have no cycles.
pub fn hamiltonian_cycle(g: &LabeledGraph, max_vertices: usize) -> Result<Option<Vec<usize>>, Skipped> {
    let n = g.order();
    if n < 3 || (0..n).any(|v| g.degree(v) < 2) || !g.is_connected() {
        return Ok(None);
    }
    if g.is_complete() {
        return Ok(Some((0..n).collect()));
    }
    if blocks(g).cut_vertex.iter().any(|&c| c) {
        return Ok(None);
    }
    gate(Algorithm::Hamiltonian, n, max_vertices)?;

    let twin_class = twin_classes(g);
    let mut search = Search {
        g,
        twin_class,
        visited: vec![false; n],
        path: vec![0],
    };
    search.visited[0] = true;
    Ok(search.run(0).then_some(search.path))
}

/// Checks that `cycle` visits every vertex once and consecutive vertices
/// (including last to first) are adjacent.
pub fn is_hamiltonian_cycle(g: &LabeledGraph, cycle: &[usize]) -> bool {
    let n = g.order();
    if n < 3 || cycle.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &v in cycle {
        if v >= n || std::mem::replace(&mut seen[v], true) {
            return false;
        }
    }
    (0..n).all(|i| g.has_edge(cycle[i], cycle[(i + 1) % n]))
}

/// Class id per vertex; vertices share a class iff their closed
/// neighbourhoods are equal.
fn twin_classes(g: &LabeledGraph) -> Vec<usize> {
    let n = g.order();
    let closed = |v: usize| {
        let mut nb = g.neighbors(v).to_vec();
        let pos = nb.partition_point(|&x| x < v);
        nb.insert(pos, v);
        nb
    };
    let mut class = vec![usize::MAX; n];
    for v in 0..n {
        if class[v] != usize::MAX {
            continue;
        }
        class[v] = v;
        let nv = closed(v);
        for &u in g.neighbors(v) {
            if u > v && class[u] == usize::MAX && closed(u) == nv {
                class[u] = v;
            }
        }
    }
    class
}

struct Search<'a> {
    g: &'a LabeledGraph,
    twin_class: Vec<usize>,
    visited: Vec<bool>,
    path: Vec<usize>,
}

impl Search<'_> {
    fn run(&mut self, at: usize) -> bool {
        let n = self.g.order();
        if self.path.len() == n {
            return self.g.has_edge(at, 0);
        }
        if !self.feasible(at) {
            return false;
        }
        let g = self.g;
        for &next in g.neighbors(at) {
            if self.visited[next] || !self.first_unvisited_twin(next) {
                continue;
            }
            self.visited[next] = true;
            self.path.push(next);
            if self.run(next) {
                return true;
            }
            self.path.pop();
            self.visited[next] = false;
        }
        false
    }

    fn first_unvisited_twin(&self, v: usize) -> bool {
        let class = self.twin_class[v];
        (class..v).all(|u| self.twin_class[u] != class || self.visited[u])
    }

    /// Every unvisited vertex needs two usable neighbours, and the unvisited
    /// vertices must be reachable from the path end without using the path.
    fn feasible(&self, at: usize) -> bool {
        let g = self.g;
        let n = g.order();
        for w in 0..n {
            if self.visited[w] {
                continue;
            }
            let usable = g
                .neighbors(w)
                .iter()
                .filter(|&&x| !self.visited[x] || x == at || x == 0)
                .count();
            if usable < 2 {
                return false;
            }
        }
        let mut reached = vec![false; n];
        let mut stack = vec![at];
        reached[at] = true;
        let mut count = 0;
        while let Some(u) = stack.pop() {
            for &v in g.neighbors(u) {
                if !self.visited[v] && !reached[v] {
                    reached[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == n - self.path.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graph() {
        let k4 = LabeledGraph::complete(4);
        let c = hamiltonian_cycle(&k4, 20).unwrap().unwrap();
        assert!(is_hamiltonian_cycle(&k4, &c));
    }

    #[test]
    fn star_and_k2_have_none() {
        assert_eq!(hamiltonian_cycle(&LabeledGraph::star(3), 20), Ok(None));
        assert_eq!(hamiltonian_cycle(&LabeledGraph::complete(2), 20), Ok(None));
    }

    #[test]
    fn petersen_is_not_hamiltonian() {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        let g = LabeledGraph::from_edges(10, outer.chain(spokes).chain(inner)).unwrap();
        assert_eq!(hamiltonian_cycle(&g, 20), Ok(None));
    }

    #[test]
    fn cube_is_hamiltonian() {
        let edges = (0..8usize)
            .flat_map(|u| (0..3).map(move |b| (u, u ^ (1 << b))))
            .filter(|&(u, v)| u < v);
        let g = LabeledGraph::from_edges(8, edges).unwrap();
        let c = hamiltonian_cycle(&g, 20).unwrap().unwrap();
        assert!(is_hamiltonian_cycle(&g, &c));
    }

    #[test]
    fn gate_applies_only_to_search() {
        // K_{3,4} is 2-connected and not complete, so it needs the search
        let g = LabeledGraph::complete_bipartite(3, 4);
        assert!(hamiltonian_cycle(&g, 6).is_err());
        assert_eq!(hamiltonian_cycle(&g, 7), Ok(None));
        // a complete graph is decided regardless of the gate
        assert!(hamiltonian_cycle(&LabeledGraph::complete(30), 6).unwrap().is_some());
    }

    #[test]
    fn twins_collapse_search() {
        // K_2 joined to three disjoint K_4: many twins, no Hamiltonian cycle
        let mut g = LabeledGraph::unlabeled(14);
        g.add_edge(0, 1).unwrap();
        for block in 0..3 {
            let base = 2 + 4 * block;
            for i in 0..4 {
                g.add_edge(0, base + i).unwrap();
                g.add_edge(1, base + i).unwrap();
                for j in i + 1..4 {
                    g.add_edge(base + i, base + j).unwrap();
                }
            }
        }
        assert_eq!(hamiltonian_cycle(&g, 20), Ok(None));
    }
}
