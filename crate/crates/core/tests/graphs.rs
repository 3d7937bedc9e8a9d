use eqgraph_core::graph::{
    circumference, clique_number, euler_circuit, has_cycle, hamiltonian_cycle, is_euler_circuit, is_hamiltonian_cycle,
    is_planar, maximum_clique,
};
use eqgraph_core::LabeledGraph;
use itertools::Itertools;
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = LabeledGraph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        prop::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let edges = (0..n).tuple_combinations().zip(bits).filter(|(_, b)| *b).map(|(e, _)| e);
            LabeledGraph::from_edges(n, edges).unwrap()
        })
    })
}

fn brute_clique(g: &LabeledGraph) -> usize {
    let n = g.order();
    (0u32..1 << n)
        .filter(|&m| {
            let vs: Vec<usize> = (0..n).filter(|&v| m >> v & 1 == 1).collect();
            g.is_clique(&vs)
        })
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Longest cycle by trying every ordered vertex sequence.
fn brute_circumference(g: &LabeledGraph) -> usize {
    let n = g.order();
    (3..=n)
        .rev()
        .find(|&k| {
            (0..n).permutations(k).any(|c| c[0] == *c.iter().min().unwrap() && (0..k).all(|i| g.has_edge(c[i], c[(i + 1) % k])))
        })
        .unwrap_or(0)
}

/// Exhaustive topological K5 / K3,3 search.
fn has_kuratowski_subdivision(g: &LabeledGraph) -> bool {
    let n = g.order();
    for branch in (0..n).combinations(5) {
        let pattern: Vec<(usize, usize)> = branch.iter().copied().tuple_combinations().collect();
        if realizes(g, &branch, &pattern) {
            return true;
        }
    }
    for six in (0..n).combinations(6) {
        for rest in six[1..].iter().copied().combinations(2) {
            let left = [six[0], rest[0], rest[1]];
            let right: Vec<usize> = six.iter().copied().filter(|v| !left.contains(v)).collect();
            let pattern: Vec<(usize, usize)> = left.iter().copied().cartesian_product(right).collect();
            if realizes(g, &six, &pattern) {
                return true;
            }
        }
    }
    false
}

fn realizes(g: &LabeledGraph, branch: &[usize], pattern: &[(usize, usize)]) -> bool {
    let free: Vec<usize> = (0..g.order()).filter(|v| !branch.contains(v)).collect();
    // each free vertex goes to one pattern edge's path interior, or nowhere
    let choices = pattern.len() + 1;
    let total = choices.pow(free.len() as u32);
    (0..total).any(|mut code| {
        let mut interior = vec![Vec::new(); pattern.len()];
        for &v in &free {
            let c = code % choices;
            code /= choices;
            if c > 0 {
                interior[c - 1].push(v);
            }
        }
        pattern.iter().zip(&interior).all(|(&(a, b), inner)| {
            inner.iter().copied().permutations(inner.len()).any(|order| {
                let walk: Vec<usize> = std::iter::once(a).chain(order).chain(std::iter::once(b)).collect();
                walk.windows(2).all(|w| g.has_edge(w[0], w[1]))
            })
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn adjacency_is_simple_and_symmetric(g in graph(10)) {
        let degree_sum: usize = g.degree_sequence().iter().sum();
        prop_assert_eq!(degree_sum, 2 * g.edge_count());
        for u in 0..g.order() {
            prop_assert!(!g.has_edge(u, u));
            for v in 0..g.order() {
                prop_assert_eq!(g.has_edge(u, v), g.has_edge(v, u));
            }
        }
    }

    #[test]
    fn profile_implications(g in graph(9)) {
        let p = g.profile();
        if p.tree {
            prop_assert!(p.connected && g.edge_count() + 1 == g.order());
        }
        if p.star {
            prop_assert!(p.tree);
        }
        if p.eulerian {
            prop_assert!(p.connected && g.degree_sequence().iter().all(|d| d % 2 == 0));
        }
        if p.complete {
            prop_assert!(g.order() == 0 || p.regular_degree == Some(g.order() - 1));
        }
    }

    #[test]
    fn euler_circuits(g in graph(9)) {
        let walk = euler_circuit(&g);
        prop_assert_eq!(walk.is_some(), g.profile().eulerian);
        if let Some(w) = walk {
            prop_assert!(is_euler_circuit(&g, &w));
        }
    }

    #[test]
    fn cliques_match_brute_force(g in graph(10)) {
        let omega = clique_number(&g, 40).unwrap();
        prop_assert_eq!(omega, brute_clique(&g));
        let max_degree = g.degree_sequence().into_iter().max().unwrap_or(0);
        prop_assert!(omega <= max_degree + 1);
        let witness = maximum_clique(&g, 40).unwrap();
        prop_assert!(g.is_clique(&witness) && witness.len() == omega);
    }

    #[test]
    fn hamiltonian_matches_brute_force(g in graph(8)) {
        let found = hamiltonian_cycle(&g, 24).unwrap();
        let n = g.order();
        let brute = n >= 3 && (1..n).permutations(n - 1).any(|rest| {
            let c: Vec<usize> = std::iter::once(0).chain(rest).collect();
            (0..n).all(|i| g.has_edge(c[i], c[(i + 1) % n]))
        });
        prop_assert_eq!(found.is_some(), brute);
        if let Some(c) = found {
            prop_assert!(is_hamiltonian_cycle(&g, &c));
        }
    }

    #[test]
    fn circumference_matches_brute_force(g in graph(8)) {
        let c = circumference(&g, 14).unwrap();
        prop_assert_eq!(c >= 3, has_cycle(&g));
        prop_assert_eq!(c, brute_circumference(&g));
    }

    #[test]
    fn json_round_trip(g in graph(10)) {
        let back = LabeledGraph::from_json(&g.to_json(None)).unwrap();
        prop_assert_eq!(back.order(), g.order());
        prop_assert_eq!(back.edges().collect::<Vec<_>>(), g.edges().collect::<Vec<_>>());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn planarity_matches_subdivision_search(g in graph(8)) {
        let verdict = is_planar(&g, 30).unwrap();
        prop_assert_eq!(verdict.is_planar(), !has_kuratowski_subdivision(&g));
        if let Some(w) = verdict.witness() {
            prop_assert!(w.verify(&g));
        }
    }
}

#[test]
fn dense_planarity_cases() {
    // K5 minus an edge is planar; K3,3 plus an edge is not
    let mut k5e = LabeledGraph::complete(5);
    k5e = LabeledGraph::from_edges(5, k5e.edges().filter(|&e| e != (0, 1))).unwrap();
    assert!(is_planar(&k5e, 30).unwrap().is_planar());
    let mut k33 = LabeledGraph::complete_bipartite(3, 3);
    k33.add_edge(0, 1).unwrap();
    let v = is_planar(&k33, 30).unwrap();
    assert!(!v.is_planar() && v.witness().unwrap().verify(&k33));
    assert!(!has_kuratowski_subdivision(&k5e) && has_kuratowski_subdivision(&k33));
}

#[test]
fn clique_of_complete_graphs() {
    for n in 0..12 {
        assert_eq!(clique_number(&LabeledGraph::complete(n), 40).unwrap(), n);
    }
}
