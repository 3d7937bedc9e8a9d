use super::{gate, Algorithm, LabeledGraph, Skipped};

struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        DisjointSets { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Merges the sets of `a` and `b`; false if they were already joined.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        true
    }
}

/// True iff some edge closes a cycle (the graph is not a forest).
pub fn has_cycle(g: &LabeledGraph) -> bool {
    let mut sets = DisjointSets::new(g.order());
    g.edges().any(|(u, v)| !sets.union(u, v))
}

/// Some simple cycle (at least three vertices), or `None` for a forest.
pub fn find_cycle(g: &LabeledGraph) -> Option<Vec<usize>> {
    let mut sets = DisjointSets::new(g.order());
    let (u, v) = g.edges().find(|&(u, v)| !sets.union(u, v))?;
    // path from u to v avoiding the edge {u, v}
    let n = g.order();
    let mut prev = vec![usize::MAX; n];
    prev[u] = u;
    let mut queue = std::collections::VecDeque::from([u]);
    while let Some(x) = queue.pop_front() {
        for &y in g.neighbors(x) {
            if prev[y] == usize::MAX && !(x == u && y == v) {
                prev[y] = x;
                queue.push_back(y);
            }
        }
    }
    let mut cycle = vec![v];
    let mut x = v;
    while x != u {
        x = prev[x];
        cycle.push(x);
    }
    cycle.reverse();
    Some(cycle)
}

/// Length of a longest simple cycle; 0 for forests.
///
/// Each cycle is counted from its smallest vertex `s`. Up to
/// [`DP_LIMIT`] vertices this is a subset dynamic program over paths
/// leaving `s`; larger (explicitly ungated) inputs fall back to
/// backtracking.
pub fn circumference(g: &LabeledGraph, max_vertices: usize) -> Result<usize, Skipped> {
    gate(Algorithm::Circumference, g.order(), max_vertices)?;
    let n = g.order();
    if n <= DP_LIMIT {
        return Ok(circumference_dp(g));
    }
    let mut best = 0;
    let mut on_path = vec![false; n];
    for start in 0..n {
        if best == n - start {
            break;
        }
        on_path[start] = true;
        extend(g, start, start, 1, &mut on_path, &mut best);
        on_path[start] = false;
    }
    Ok(best)
}

const DP_LIMIT: usize = 22;

fn circumference_dp(g: &LabeledGraph) -> usize {
    let n = g.order();
    let adj: Vec<u32> = (0..n).map(|v| g.neighbors(v).iter().fold(0, |m, &w| m | 1 << w)).collect();
    let mut best = 0;
    for s in 0..n {
        let m = n - s;
        if best >= m {
            break;
        }
        // vertex s + i is bit i; reach[mask] holds the possible endpoints of
        // a path from s visiting exactly `mask`
        let local: Vec<u32> = adj[s..].iter().map(|a| a >> s).collect();
        let mut reach = vec![0u32; 1 << m];
        reach[1] = 1;
        for mask in (1..1usize << m).step_by(2) {
            let ends = reach[mask];
            if ends == 0 {
                continue;
            }
            let size = mask.count_ones() as usize;
            if size >= 3 && size > best && ends & local[0] != 0 {
                best = size;
            }
            let mut e = ends;
            while e != 0 {
                let v = e.trailing_zeros() as usize;
                e &= e - 1;
                let mut next = local[v] & !(mask as u32);
                while next != 0 {
                    let w = next.trailing_zeros() as usize;
                    next &= next - 1;
                    reach[mask | 1 << w] |= 1 << w;
                }
            }
        }
    }
    best
}

fn extend(g: &LabeledGraph, start: usize, at: usize, len: usize, on_path: &mut [bool], best: &mut usize) {
    for &next in g.neighbors(at) {
        if next == start && len >= 3 {
            *best = (*best).max(len);
        } else if next > start && !on_path[next] {
            on_path[next] = true;
            extend(g, start, next, len + 1, on_path, best);
            on_path[next] = false;
        }
        if *best == g.order() - start {
            return;
        }
    }
}
