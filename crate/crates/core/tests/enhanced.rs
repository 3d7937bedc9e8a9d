use std::collections::BTreeSet;

use eqgraph_core::group::{FiniteGroup, QuotientGroup};
use eqgraph_core::verifier::default_catalog;
use eqgraph_core::{enhanced_power_graph, enhanced_quotient_graph, Subgroup};

/// Whether `a` and `b` lie in a common cyclic subgroup, scanning all powers.
fn share_cyclic(g: &FiniteGroup, a: usize, b: usize) -> bool {
    g.elements().any(|z| {
        let p = g.powers(z);
        p.contains(&a) && p.contains(&b)
    })
}

#[test]
fn quotient_graph_matches_definition() {
    for entry in default_catalog(24).unwrap() {
        let g = &entry.group;
        for h in &entry.subgroups {
            let x = enhanced_quotient_graph(g, h).unwrap();
            let q = QuotientGroup::new(g, h).unwrap();
            let expected: Vec<usize> = std::iter::once(0).chain(g.elements().filter(|&a| !h.contains(a))).collect();
            assert_eq!(x.elements(), expected.as_slice(), "{} {:?}", entry.spec, h.members());
            let qg = q.group();
            for u in 0..x.order() {
                for v in u + 1..x.order() {
                    let (ca, cb) = (q.coset_of(x.element(u)), q.coset_of(x.element(v)));
                    let by_definition = ca == cb || share_cyclic(qg, ca, cb);
                    assert_eq!(x.has_edge(u, v), by_definition, "{} {:?} {u} {v}", entry.spec, h.members());
                }
            }
            // e is adjacent to every other vertex
            assert_eq!(x.degree(0), x.order() - 1);
        }
    }
}

#[test]
fn trivial_subgroup_gives_the_power_graph() {
    for entry in default_catalog(24).unwrap().into_iter().filter(|e| e.group.order() > 1) {
        let p = enhanced_power_graph(&entry.group);
        let x = enhanced_quotient_graph(&entry.group, &Subgroup::trivial()).unwrap();
        assert_eq!(p.elements(), x.elements());
        assert_eq!(p.edges().collect::<Vec<_>>(), x.edges().collect::<Vec<_>>(), "{}", entry.spec);
        let oracle: BTreeSet<(usize, usize)> = (0..p.order())
            .flat_map(|a| (a + 1..p.order()).map(move |b| (a, b)))
            .filter(|&(a, b)| share_cyclic(&entry.group, a, b))
            .collect();
        assert_eq!(p.edges().collect::<BTreeSet<_>>(), oracle, "{}", entry.spec);
    }
}

#[test]
fn coset_and_two_coset_cliques() {
    for entry in default_catalog(24).unwrap() {
        let g = &entry.group;
        for h in &entry.subgroups {
            let x = enhanced_quotient_graph(g, h).unwrap();
            let q = QuotientGroup::new(g, h).unwrap();
            let vertices = |c: usize| -> Vec<usize> { q.coset(c).iter().map(|&a| x.vertex_of(a).unwrap()).collect() };
            for c in 1..q.index() {
                assert!(x.is_clique(&vertices(c)));
                for d in c + 1..q.index() {
                    let (vc, vd) = (vertices(c), vertices(d));
                    let edges = vc.iter().flat_map(|&u| vd.iter().map(move |&v| (u, v))).filter(|&(u, v)| x.has_edge(u, v)).count();
                    assert!(edges == 0 || edges == vc.len() * vd.len(), "{} {:?}", entry.spec, h.members());
                }
            }
        }
    }
}

#[test]
fn rejects_bad_subgroups() {
    let g = eqgraph_core::make_group("symmetric:3").unwrap();
    assert!(enhanced_quotient_graph(&g, &Subgroup::whole(&g)).is_err());
    // a reflection subgroup is not normal
    let reflection = (1..6).find(|&a| g.element_order(a).unwrap() == 2).unwrap();
    let h = Subgroup::new(&g, [0, reflection]).unwrap();
    assert!(enhanced_quotient_graph(&g, &h).is_err());
}
