//! Planarity testing with Kuratowski certificates.
//!
//! Vertices of degree at most one are stripped, the remainder is split into
//! blocks, and each block is decided by the edge-count bound `e <= 3v - 6`
//! or, failing that, by path-addition embedding (Demoucron, Malgrange and
//! Pertuiset): grow a face list from a cycle, always placing a fragment that
//! fits in exactly one face when there is one.
//!
//! For a non-planar graph the witness comes from a K5 clique if one exists,
//! and otherwise from an edge-minimal non-planar subgraph, which is exactly a
//! subdivision of K5 or K3,3.

use serde::Serialize;

use super::connectivity::blocks;
use super::{gate, Algorithm, LabeledGraph, Skipped};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum KuratowskiKind {
    K5,
    K33,
}

/// A subdivision of K5 or K3,3 inside a graph.
///
/// `branch` holds the 5 (or 6) branch vertices; for K3,3 the first three
/// form one side. Each entry of `paths` runs between two branch vertices
/// through subdivision vertices, endpoints included.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KuratowskiWitness {
    pub kind: KuratowskiKind,
    pub branch: Vec<usize>,
    pub paths: Vec<Vec<usize>>,
}

impl KuratowskiWitness {
    /// Checks the witness against `g`: the right branch pairs are each joined
    /// by one path, paths use edges of `g`, and paths share no interior vertex
    /// with each other or with the branch set.
    pub fn verify(&self, g: &LabeledGraph) -> bool {
        let n = g.order();
        let k = match self.kind {
            KuratowskiKind::K5 => 5,
            KuratowskiKind::K33 => 6,
        };
        if self.branch.len() != k || self.branch.iter().any(|&v| v >= n) {
            return false;
        }
        let mut used = vec![false; n];
        for &b in &self.branch {
            if std::mem::replace(&mut used[b], true) {
                return false;
            }
        }
        let mut wanted: Vec<(usize, usize)> = match self.kind {
            KuratowskiKind::K5 => (0..5).flat_map(|i| (i + 1..5).map(move |j| (i, j))).collect(),
            KuratowskiKind::K33 => (0..3).flat_map(|i| (3..6).map(move |j| (i, j))).collect(),
        };
        if self.paths.len() != wanted.len() {
            return false;
        }
        for path in &self.paths {
            if path.len() < 2 || path.iter().any(|&v| v >= n) {
                return false;
            }
            let ends = (path[0], path[path.len() - 1]);
            let (Some(i), Some(j)) = (
                self.branch.iter().position(|&b| b == ends.0),
                self.branch.iter().position(|&b| b == ends.1),
            ) else {
                return false;
            };
            let Some(slot) = wanted.iter().position(|&p| p == (i.min(j), i.max(j))) else {
                return false;
            };
            wanted.swap_remove(slot);
            if !path.windows(2).all(|w| g.has_edge(w[0], w[1])) {
                return false;
            }
            for &v in &path[1..path.len() - 1] {
                if std::mem::replace(&mut used[v], true) {
                    return false;
                }
            }
        }
        wanted.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Planarity {
    Planar,
    NonPlanar(KuratowskiWitness),
}

impl Planarity {
    pub fn is_planar(&self) -> bool {
        matches!(self, Planarity::Planar)
    }

    pub fn witness(&self) -> Option<&KuratowskiWitness> {
        match self {
            Planarity::Planar => None,
            Planarity::NonPlanar(w) => Some(w),
        }
    }
}

/// Planarity verdict with a Kuratowski witness when non-planar.
pub fn is_planar(g: &LabeledGraph, max_vertices: usize) -> Result<Planarity, Skipped> {
    gate(Algorithm::Planarity, g.order(), max_vertices)?;
    let n = g.order();
    let edges: Vec<(usize, usize)> = g.edges().collect();
    if planar_edges(n, &edges) {
        return Ok(Planarity::Planar);
    }
    let witness = k5_clique(g).unwrap_or_else(|| {
        let minimal = minimal_nonplanar(n, edges);
        extract_witness(n, &minimal).expect("edge-minimal non-planar graph is a Kuratowski subdivision")
    });
    debug_assert!(witness.verify(g));
    Ok(Planarity::NonPlanar(witness))
}

/// Planarity verdict without gate or certificate.
pub fn is_planar_ungated(g: &LabeledGraph) -> bool {
    planar_edges(g.order(), &g.edges().collect::<Vec<_>>())
}

fn planar_edges(n: usize, edges: &[(usize, usize)]) -> bool {
    if n >= 3 && edges.len() > 3 * n - 6 {
        return false;
    }
    let g = strip_low_degree(n, edges);
    for block in blocks(&g).blocks {
        let mut vertices: Vec<usize> = block.iter().flat_map(|&(u, v)| [u, v]).collect();
        vertices.sort_unstable();
        vertices.dedup();
        let v = vertices.len();
        if v <= 4 {
            continue;
        }
        if block.len() > 3 * v - 6 {
            return false;
        }
        let local = |x: usize| vertices.binary_search(&x).unwrap();
        let local_edges = block.iter().map(|&(a, b)| (local(a), local(b)));
        let bg = LabeledGraph::from_edges(v, local_edges).expect("block edges are in range");
        if !embed_biconnected(&bg) {
            return false;
        }
    }
    true
}

/// Repeatedly drops edges at vertices of degree one.
fn strip_low_degree(n: usize, edges: &[(usize, usize)]) -> LabeledGraph {
    let mut g = LabeledGraph::from_edges(n, edges.iter().copied()).expect("edges are in range");
    let mut degree = g.degree_sequence();
    let mut alive = vec![true; n];
    let mut stack: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    while let Some(v) = stack.pop() {
        if !alive[v] {
            continue;
        }
        alive[v] = false;
        for &u in g.neighbors(v) {
            if alive[u] {
                degree[u] -= 1;
                if degree[u] == 1 {
                    stack.push(u);
                }
            }
        }
    }
    if alive.iter().all(|&a| a) {
        return g;
    }
    let kept = edges.iter().copied().filter(|&(u, v)| alive[u] && alive[v]);
    g = LabeledGraph::from_edges(n, kept).expect("edges are in range");
    g
}

struct Fragment {
    attachments: Vec<usize>,
    /// Non-embedded vertices of the fragment; empty for a chord.
    interior: Vec<usize>,
}

/// Path-addition embedding of a biconnected graph with at least 3 vertices.
fn embed_biconnected(g: &LabeledGraph) -> bool {
    let n = g.order();
    let Some(cycle) = super::find_cycle(g) else {
        return true;
    };
    let mut on = vec![false; n];
    let mut embedded_edge = vec![false; n * n];
    let mut embedded = 0;
    for i in 0..cycle.len() {
        let (u, v) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        on[u] = true;
        embedded_edge[u * n + v] = true;
        embedded_edge[v * n + u] = true;
        embedded += 1;
    }
    let mut faces = vec![cycle.clone(), cycle];

    while embedded < g.edge_count() {
        let fragments = fragments(g, &on, &embedded_edge);
        let mut choice = None;
        for (idx, frag) in fragments.iter().enumerate() {
            let admissible: Vec<usize> = (0..faces.len())
                .filter(|&f| frag.attachments.iter().all(|a| faces[f].contains(a)))
                .collect();
            match admissible.len() {
                0 => return false,
                1 => {
                    choice = Some((idx, admissible[0]));
                    break;
                }
                _ if choice.is_none() => choice = Some((idx, admissible[0])),
                _ => {}
            }
        }
        let (idx, face) = choice.expect("an unembedded edge leaves a fragment");
        let path = fragment_path(g, &on, &fragments[idx]);
        for w in path.windows(2) {
            embedded_edge[w[0] * n + w[1]] = true;
            embedded_edge[w[1] * n + w[0]] = true;
        }
        for &v in &path {
            on[v] = true;
        }
        embedded += path.len() - 1;
        let (f1, f2) = split_face(&faces[face], &path);
        faces[face] = f1;
        faces.push(f2);
    }
    true
}

fn fragments(g: &LabeledGraph, on: &[bool], embedded_edge: &[bool]) -> Vec<Fragment> {
    let n = g.order();
    let mut out = Vec::new();
    for (u, v) in g.edges() {
        if on[u] && on[v] && !embedded_edge[u * n + v] {
            out.push(Fragment { attachments: vec![u, v], interior: Vec::new() });
        }
    }
    let mut seen = vec![false; n];
    for s in 0..n {
        if on[s] || seen[s] {
            continue;
        }
        seen[s] = true;
        let mut interior = vec![s];
        let mut attachments = Vec::new();
        let mut i = 0;
        while i < interior.len() {
            let u = interior[i];
            i += 1;
            for &v in g.neighbors(u) {
                if on[v] {
                    attachments.push(v);
                } else if !seen[v] {
                    seen[v] = true;
                    interior.push(v);
                }
            }
        }
        attachments.sort_unstable();
        attachments.dedup();
        out.push(Fragment { attachments, interior });
    }
    out
}

/// A path through the fragment joining two distinct attachment vertices.
fn fragment_path(g: &LabeledGraph, on: &[bool], frag: &Fragment) -> Vec<usize> {
    if frag.interior.is_empty() {
        return frag.attachments.clone();
    }
    let n = g.order();
    let a = frag.attachments[0];
    let mut in_frag = vec![false; n];
    for &v in &frag.interior {
        in_frag[v] = true;
    }
    let start = *g.neighbors(a).iter().find(|&&c| in_frag[c]).expect("attachment touches fragment");
    let mut prev = vec![usize::MAX; n];
    prev[start] = start;
    let mut queue = std::collections::VecDeque::from([start]);
    while let Some(u) = queue.pop_front() {
        if let Some(&b) = g.neighbors(u).iter().find(|&&b| on[b] && b != a) {
            let mut path = vec![b, u];
            let mut x = u;
            while x != start {
                x = prev[x];
                path.push(x);
            }
            path.push(a);
            path.reverse();
            return path;
        }
        for &v in g.neighbors(u) {
            if in_frag[v] && prev[v] == usize::MAX {
                prev[v] = u;
                queue.push_back(v);
            }
        }
    }
    unreachable!("fragment of a biconnected graph has two attachments")
}

/// Splits a face (cyclic vertex list) along a path between two of its vertices.
fn split_face(face: &[usize], path: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let len = face.len();
    let (a, b) = (path[0], path[path.len() - 1]);
    let i = face.iter().position(|&v| v == a).unwrap();
    let j = face.iter().position(|&v| v == b).unwrap();
    let arc = |from: usize, to: usize| {
        let mut out = vec![face[from]];
        let mut k = from;
        while k != to {
            k = (k + 1) % len;
            out.push(face[k]);
        }
        out
    };
    let interior = &path[1..path.len() - 1];
    let mut f1 = arc(i, j);
    f1.extend(interior.iter().rev());
    let mut f2 = arc(j, i);
    f2.extend(interior);
    (f1, f2)
}

fn k5_clique(g: &LabeledGraph) -> Option<KuratowskiWitness> {
    fn grow(g: &LabeledGraph, chosen: &mut Vec<usize>, from: usize) -> bool {
        if chosen.len() == 5 {
            return true;
        }
        for v in from..g.order() {
            if g.degree(v) >= 4 && chosen.iter().all(|&u| g.has_edge(u, v)) {
                chosen.push(v);
                if grow(g, chosen, v + 1) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    let mut branch = Vec::new();
    if !grow(g, &mut branch, 0) {
        return None;
    }
    let paths = (0..5)
        .flat_map(|i| (i + 1..5).map(move |j| (i, j)))
        .map(|(i, j)| vec![branch[i], branch[j]])
        .collect();
    Some(KuratowskiWitness { kind: KuratowskiKind::K5, branch, paths })
}

/// Deletes vertices, then edges, while the graph stays non-planar.
fn minimal_nonplanar(n: usize, mut edges: Vec<(usize, usize)>) -> Vec<(usize, usize)> {
    for v in 0..n {
        let without: Vec<_> = edges.iter().copied().filter(|&(a, b)| a != v && b != v).collect();
        if without.len() < edges.len() && !planar_edges(n, &without) {
            edges = without;
        }
    }
    let mut i = 0;
    while i < edges.len() {
        let removed = edges.remove(i);
        if planar_edges(n, &edges) {
            edges.insert(i, removed);
            i += 1;
        }
    }
    edges
}

/// Reads branch vertices and paths off a subdivision of K5 or K3,3.
fn extract_witness(n: usize, edges: &[(usize, usize)]) -> Option<KuratowskiWitness> {
    let h = LabeledGraph::from_edges(n, edges.iter().copied()).ok()?;
    let branch: Vec<usize> = (0..n).filter(|&v| h.degree(v) >= 3).collect();
    let kind = match (branch.len(), branch.iter().all(|&v| h.degree(v) == 4), branch.iter().all(|&v| h.degree(v) == 3)) {
        (5, true, _) => KuratowskiKind::K5,
        (6, _, true) => KuratowskiKind::K33,
        _ => return None,
    };
    let is_branch = |v: usize| h.degree(v) >= 3;
    let mut paths = Vec::new();
    for &b in &branch {
        for &first in h.neighbors(b) {
            let mut path = vec![b, first];
            let (mut prev, mut at) = (b, first);
            while !is_branch(at) {
                let &next = h.neighbors(at).iter().find(|&&x| x != prev)?;
                path.push(next);
                (prev, at) = (at, next);
            }
            // keep each path once, from its smaller end
            if b < at {
                paths.push(path);
            }
        }
    }
    let branch = match kind {
        KuratowskiKind::K5 => branch,
        KuratowskiKind::K33 => {
            let b0 = branch[0];
            let linked = |v: usize| paths.iter().any(|p| p[0].min(*p.last().unwrap()) == b0.min(v) && p[0].max(*p.last().unwrap()) == b0.max(v));
            let (other, same): (Vec<usize>, Vec<usize>) = branch.iter().partition(|&&v| v != b0 && linked(v));
            if same.len() != 3 || other.len() != 3 {
                return None;
            }
            same.into_iter().chain(other).collect()
        }
    };
    paths.sort();
    Some(KuratowskiWitness { kind, branch, paths })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn petersen() -> LabeledGraph {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        LabeledGraph::from_edges(10, outer.chain(spokes).chain(inner)).unwrap()
    }

    #[test]
    fn small_complete_graphs() {
        assert_eq!(is_planar(&LabeledGraph::complete(4), 30), Ok(Planarity::Planar));
        let k5 = LabeledGraph::complete(5);
        let verdict = is_planar(&k5, 30).unwrap();
        let w = verdict.witness().unwrap();
        assert_eq!(w.kind, KuratowskiKind::K5);
        assert!(w.verify(&k5));
    }

    #[test]
    fn k33_witness() {
        let k33 = LabeledGraph::complete_bipartite(3, 3);
        let verdict = is_planar(&k33, 30).unwrap();
        let w = verdict.witness().unwrap();
        assert_eq!(w.kind, KuratowskiKind::K33);
        assert_eq!(w.branch, vec![0, 1, 2, 3, 4, 5]);
        assert!(w.verify(&k33));
    }

    #[test]
    fn petersen_has_subdivision_witness() {
        let g = petersen();
        let verdict = is_planar(&g, 30).unwrap();
        let w = verdict.witness().unwrap();
        assert!(w.verify(&g));
        assert!(w.paths.iter().any(|p| p.len() > 2));
    }

    #[test]
    fn planar_families() {
        let cube_edges = (0..8usize)
            .flat_map(|u| (0..3).map(move |b| (u, u ^ (1 << b))))
            .filter(|&(u, v)| u < v);
        let cube = LabeledGraph::from_edges(8, cube_edges).unwrap();
        assert!(is_planar_ungated(&cube));
        // wheel on 8 vertices
        let mut wheel = LabeledGraph::cycle(7);
        let mut w = LabeledGraph::unlabeled(8);
        for (u, v) in wheel.edges().collect::<Vec<_>>() {
            w.add_edge(u + 1, v + 1).unwrap();
        }
        for v in 1..8 {
            w.add_edge(0, v).unwrap();
        }
        wheel = w;
        assert!(is_planar_ungated(&wheel));
        assert!(is_planar_ungated(&LabeledGraph::star(20)));
        assert!(is_planar_ungated(&LabeledGraph::complete_bipartite(2, 9)));
    }

    #[test]
    fn forged_witness_rejected() {
        let k5 = LabeledGraph::complete(5);
        let mut w = is_planar(&k5, 30).unwrap().witness().unwrap().clone();
        w.paths.pop();
        assert!(!w.verify(&k5));
        let k4 = LabeledGraph::complete(4);
        let fake = KuratowskiWitness {
            kind: KuratowskiKind::K5,
            branch: vec![0, 1, 2, 3, 3],
            paths: vec![],
        };
        assert!(!fake.verify(&k4));
    }

    #[test]
    fn gate() {
        assert!(is_planar(&LabeledGraph::complete(31), 30).is_err());
    }

    #[test]
    fn face_split() {
        let (a, b) = split_face(&[0, 1, 2, 3], &[1, 9, 3]);
        assert_eq!(a, vec![1, 2, 3, 9]);
        assert_eq!(b, vec![3, 0, 1, 9]);
    }
}
