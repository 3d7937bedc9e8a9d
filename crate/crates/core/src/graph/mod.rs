//! Simple undirected graphs whose vertices carry group-element labels, and
//! exact decision procedures over them.
//!
//! The exponential procedures (maximum clique, Hamiltonian cycle,
//! circumference, planarity) are guarded by vertex-count gates from
//! [`Gates`]. A graph above the gate yields [`Skipped`] instead of an answer.

mod clique;
mod connectivity;
mod cycles;
mod euler;
mod export;
mod hamilton;
mod planarity;

pub use clique::{clique_number, maximum_clique};
pub use cycles::{circumference, find_cycle, has_cycle};
pub use euler::{euler_circuit, is_euler_circuit};
pub use export::{GraphJson, GraphMetadata};
pub use hamilton::{hamiltonian_cycle, is_hamiltonian_cycle};
pub use planarity::{is_planar, is_planar_ungated, KuratowskiKind, KuratowskiWitness, Planarity};

use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph on {order} vertices")]
    MissingVertex { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex count {actual} does not equal {expected}")]
    SizeMismatch { expected: usize, actual: usize },
    #[error("no vertex labelled with the identity element")]
    NoIdentity,
    #[error("malformed graph JSON: {0}")]
    Json(String),
}

pub type Result<T, E = GraphError> = std::result::Result<T, E>;

/// Which exact algorithm declined to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Algorithm {
    Clique,
    Hamiltonian,
    Circumference,
    Planarity,
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Algorithm::Clique => "clique",
            Algorithm::Hamiltonian => "hamiltonian",
            Algorithm::Circumference => "circumference",
            Algorithm::Planarity => "planarity",
        };
        f.write_str(name)
    }
}

/// A size gate was exceeded, so no answer was computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error, Serialize)]
#[error("{algorithm} skipped: {vertices} vertices exceeds gate {gate}")]
pub struct Skipped {
    pub algorithm: Algorithm,
    pub vertices: usize,
    pub gate: usize,
}

/// Vertex-count limits for the exponential algorithms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Gates {
    pub clique: usize,
    pub hamiltonian: usize,
    pub circumference: usize,
    pub planarity: usize,
}

impl Default for Gates {
    fn default() -> Self {
        Gates { clique: 40, hamiltonian: 24, circumference: 14, planarity: 30 }
    }
}

pub(crate) fn gate(algorithm: Algorithm, vertices: usize, gate: usize) -> Result<(), Skipped> {
    if vertices > gate {
        Err(Skipped { algorithm, vertices, gate })
    } else {
        Ok(())
    }
}

/// Simple undirected graph. Vertex `i` stands for group element
/// `elements[i]` and is displayed as `labels[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    elements: Vec<usize>,
    labels: Vec<String>,
    adjacency: Vec<bool>,
    neighbors: Vec<Vec<usize>>,
    edge_count: usize,
}

impl LabeledGraph {
    /// Graph with no edges; `elements[i]` is the element vertex `i` stands for.
    pub fn edgeless(elements: Vec<usize>, labels: Vec<String>) -> Self {
        assert_eq!(elements.len(), labels.len(), "one label per vertex");
        let n = elements.len();
        LabeledGraph {
            elements,
            labels,
            adjacency: vec![false; n * n],
            neighbors: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    /// Graph on `0..n` labelled by index.
    pub fn unlabeled(n: usize) -> Self {
        Self::edgeless((0..n).collect(), (0..n).map(|i| i.to_string()).collect())
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Self::unlabeled(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::unlabeled(n);
        for u in 0..n {
            for v in u + 1..n {
                g.insert(u, v);
            }
        }
        g
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut g = Self::unlabeled(a + b);
        for u in 0..a {
            for v in a..a + b {
                g.insert(u, v);
            }
        }
        g
    }

    /// Star `K_{1,leaves}` with center 0.
    pub fn star(leaves: usize) -> Self {
        Self::complete_bipartite(1, leaves)
    }

    pub fn path(n: usize) -> Self {
        let mut g = Self::unlabeled(n);
        for v in 1..n {
            g.insert(v - 1, v);
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Self::path(n);
        if n >= 3 {
            g.insert(n - 1, 0);
        }
        g
    }

    /// Adds `{u, v}`; adding an existing edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.insert(u, v);
        Ok(())
    }

    pub(crate) fn insert(&mut self, u: usize, v: usize) {
        debug_assert_ne!(u, v);
        let n = self.order();
        if self.adjacency[u * n + v] {
            return;
        }
        self.adjacency[u * n + v] = true;
        self.adjacency[v * n + u] = true;
        let pos = self.neighbors[u].partition_point(|&x| x < v);
        self.neighbors[u].insert(pos, v);
        let pos = self.neighbors[v].partition_point(|&x| x < u);
        self.neighbors[v].insert(pos, u);
        self.edge_count += 1;
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(GraphError::MissingVertex { vertex: v, order: self.order() })
        }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u * self.order() + v]
    }

    /// Neighbours of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    pub fn element(&self, v: usize) -> usize {
        self.elements[v]
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Vertex standing for group element `x`, if any.
    pub fn vertex_of(&self, x: usize) -> Option<usize> {
        self.elements.iter().position(|&e| e == x)
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order())
            .flat_map(move |u| self.neighbors[u].iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        (0..self.order()).map(|v| self.degree(v)).collect()
    }

    /// Connected components, each ascending, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &v in &self.neighbors[u] {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        queue.push_back(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.order() <= 1 || self.components().len() == 1
    }

    /// Two-colouring by breadth-first layering, or `None` if an odd cycle exists.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let n = self.order();
        let mut color: Vec<Option<bool>> = vec![None; n];
        for s in 0..n {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for &v in &self.neighbors[u] {
                    match color[v] {
                        None => {
                            color[v] = Some(!cu);
                            queue.push_back(v);
                        }
                        Some(cv) if cv == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(Option::unwrap).collect())
    }

    pub fn is_complete(&self) -> bool {
        let n = self.order();
        self.edge_count == n * n.saturating_sub(1) / 2
    }

    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    /// Vertices adjacent to every other vertex.
    pub fn cone_vertices(&self) -> Vec<usize> {
        let n = self.order();
        (0..n).filter(|&v| self.degree(v) + 1 == n).collect()
    }

    /// Induced subgraph on `vertices` (kept in the given order).
    pub fn induced(&self, vertices: &[usize]) -> Result<Self> {
        for &v in vertices {
            self.check_vertex(v)?;
        }
        let mut g = LabeledGraph::edgeless(
            vertices.iter().map(|&v| self.elements[v]).collect(),
            vertices.iter().map(|&v| self.labels[v].clone()).collect(),
        );
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.insert(i, j);
                }
            }
        }
        Ok(g)
    }

    pub fn delete_vertex(&self, v: usize) -> Result<Self> {
        self.check_vertex(v)?;
        let keep: Vec<usize> = (0..self.order()).filter(|&u| u != v).collect();
        self.induced(&keep)
    }

    /// The graph with the vertex standing for the identity element removed.
    pub fn deleted(&self) -> Result<Self> {
        let e = self.vertex_of(0).ok_or(GraphError::NoIdentity)?;
        self.delete_vertex(e)
    }

    /// Whether the graph is `apex * (K_a + K_b)`: a vertex adjacent to all
    /// others whose removal leaves two disjoint cliques of sizes `a` and `b`
    /// with no edges between them.
    pub fn is_apex_double_clique(&self, a: usize, b: usize) -> Result<bool> {
        let n = self.order();
        if n != a + b + 1 {
            return Err(GraphError::SizeMismatch { expected: a + b + 1, actual: n });
        }
        let mut want = [a, b];
        want.sort_unstable();
        for apex in self.cone_vertices() {
            let rest = self.delete_vertex(apex)?;
            let comps = rest.components();
            if !comps.iter().all(|c| rest.is_clique(c)) {
                continue;
            }
            let mut sizes: Vec<usize> = comps.iter().map(Vec::len).collect();
            sizes.sort_unstable();
            let matches = match want {
                [0, 0] => sizes.is_empty(),
                [0, x] => sizes == [x],
                [x, y] => sizes == [x, y],
            };
            if matches {
                return Ok(true);
            }
        }
        Ok(false)
    }

    pub fn profile(&self) -> GraphProfile {
        let n = self.order();
        let degrees = self.degree_sequence();
        let connected = self.is_connected();
        let tree = connected && self.edge_count + 1 == n;
        let star = tree && degrees.iter().any(|&d| d + 1 == n);
        let regular_degree = match degrees.split_first() {
            Some((&d, rest)) if rest.iter().all(|&x| x == d) => Some(d),
            None => Some(0),
            _ => None,
        };
        GraphProfile {
            connected,
            complete: self.is_complete(),
            bipartite: self.bipartition().is_some(),
            tree,
            star,
            eulerian: n == 1 || (connected && degrees.iter().all(|d| d % 2 == 0)),
            regular_degree,
            degree_sequence: degrees,
        }
    }
}

/// Structural summary of a graph.
///
/// `eulerian` follows the convention: a single vertex is Eulerian; otherwise
/// the graph must be connected with every degree even.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphProfile {
    pub connected: bool,
    pub complete: bool,
    pub bipartite: bool,
    pub tree: bool,
    pub star: bool,
    pub eulerian: bool,
    pub regular_degree: Option<usize>,
    pub degree_sequence: Vec<usize>,
}
