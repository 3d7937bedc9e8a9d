use super::LabeledGraph;

/// Biconnected components (as edge lists) and articulation points.
pub(crate) struct Blocks {
    pub blocks: Vec<Vec<(usize, usize)>>,
    pub cut_vertex: Vec<bool>,
}

/// Hopcroft-Tarjan block decomposition with an explicit stack.
pub(crate) fn blocks(g: &LabeledGraph) -> Blocks {
    let n = g.order();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut cut_vertex = vec![false; n];
    let mut blocks = Vec::new();
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut time = 0;

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut root_children = 0;
        // (vertex, parent, next neighbour index)
        let mut stack = vec![(root, usize::MAX, 0usize)];
        while let Some(&mut (u, parent, ref mut idx)) = stack.last_mut() {
            let nbrs = g.neighbors(u);
            if *idx < nbrs.len() {
                let v = nbrs[*idx];
                *idx += 1;
                if v == parent {
                    continue;
                }
                if disc[v] == usize::MAX {
                    disc[v] = time;
                    low[v] = time;
                    time += 1;
                    edge_stack.push((u, v));
                    if u == root {
                        root_children += 1;
                    }
                    stack.push((v, u, 0));
                } else if disc[v] < disc[u] {
                    low[u] = low[u].min(disc[v]);
                    edge_stack.push((u, v));
                }
            } else {
                stack.pop();
                if parent != usize::MAX {
                    low[parent] = low[parent].min(low[u]);
                    if low[u] >= disc[parent] {
                        if parent != root {
                            cut_vertex[parent] = true;
                        }
                        let mut block = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            block.push((e.0.min(e.1), e.0.max(e.1)));
                            if e == (parent, u) {
                                break;
                            }
                        }
                        block.sort_unstable();
                        blocks.push(block);
                    }
                }
            }
        }
        if root_children > 1 {
            cut_vertex[root] = true;
        }
    }
    Blocks { blocks, cut_vertex }
}
