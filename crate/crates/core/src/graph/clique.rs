//! Exact maximum clique by branch and bound with a greedy-colouring bound.

use super::{gate, Algorithm, LabeledGraph, Skipped};

/// A maximum clique, ascending. Among equally large cliques the first one
/// found by the (deterministic) search is returned.
pub fn maximum_clique(g: &LabeledGraph, max_vertices: usize) -> Result<Vec<usize>, Skipped> {
    gate(Algorithm::Clique, g.order(), max_vertices)?;
    let mut search = Search { g, best: Vec::new(), current: Vec::new() };
    let candidates: Vec<usize> = (0..g.order()).collect();
    search.expand(candidates);
    let mut best = search.best;
    best.sort_unstable();
    Ok(best)
}

/// Clique number `omega(g)`; 0 for the empty graph.
pub fn clique_number(g: &LabeledGraph, max_vertices: usize) -> Result<usize, Skipped> {
    maximum_clique(g, max_vertices).map(|c| c.len())
}

struct Search<'a> {
    g: &'a LabeledGraph,
    best: Vec<usize>,
    current: Vec<usize>,
}

impl Search<'_> {
    fn expand(&mut self, candidates: Vec<usize>) {
        let (order, colors) = self.color_sort(&candidates);
        for i in (0..order.len()).rev() {
            if self.current.len() + colors[i] <= self.best.len() {
                return;
            }
            let v = order[i];
            self.current.push(v);
            let next: Vec<usize> = order[..i].iter().copied().filter(|&u| self.g.has_edge(u, v)).collect();
            if next.is_empty() {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
            } else {
                self.expand(next);
            }
            self.current.pop();
        }
    }

    /// Greedy colouring; returns vertices sorted by colour and, per position,
    /// the colour number (an upper bound on the clique within the prefix).
    fn color_sort(&self, candidates: &[usize]) -> (Vec<usize>, Vec<usize>) {
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for &v in candidates {
            match classes.iter_mut().find(|c| c.iter().all(|&u| !self.g.has_edge(u, v))) {
                Some(class) => class.push(v),
                None => classes.push(vec![v]),
            }
        }
        let mut order = Vec::with_capacity(candidates.len());
        let mut colors = Vec::with_capacity(candidates.len());
        for (k, class) in classes.into_iter().enumerate() {
            for v in class {
                order.push(v);
                colors.push(k + 1);
            }
        }
        (order, colors)
    }
}
