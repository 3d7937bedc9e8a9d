use eqgraph_core::group::{
    all_subgroups, make_group, normal_subgroups, order_spectrum, FiniteGroup, QuotientGroup, Subgroup,
};
use proptest::prelude::*;

fn factor() -> impl Strategy<Value = String> {
    prop_oneof![
        (1usize..=12).prop_map(|n| format!("cyclic:{n}")),
        (3usize..=6).prop_map(|n| format!("dihedral:{n}")),
        (2usize..=4).prop_map(|n| format!("dicyclic:{n}")),
        (3usize..=4).prop_map(|n| format!("symmetric:{n}")),
        prop_oneof![Just("elab:2^2"), Just("elab:2^3"), Just("elab:3^2")].prop_map(String::from),
    ]
}

fn group_spec() -> impl Strategy<Value = String> {
    prop::collection::vec(factor(), 1..=2).prop_map(|fs| fs.join(" x "))
}

fn small_group() -> impl Strategy<Value = FiniteGroup> {
    group_spec().prop_filter_map("order above 48", |s| make_group(&s).ok().filter(|g| g.order() <= 48))
}

fn assert_group_axioms(g: &FiniteGroup) {
    let n = g.order();
    for a in 0..n {
        let mut row: Vec<usize> = (0..n).map(|b| g.mul(a, b)).collect();
        let mut col: Vec<usize> = (0..n).map(|b| g.mul(b, a)).collect();
        row.sort_unstable();
        col.sort_unstable();
        assert!(row.iter().copied().eq(0..n) && col.iter().copied().eq(0..n));
        assert_eq!(g.mul(0, a), a);
        assert_eq!(g.mul(a, 0), a);
        assert!((0..n).any(|b| g.mul(a, b) == 0));
        for b in 0..n {
            for c in 0..n {
                assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn constructed_groups_satisfy_axioms(g in small_group()) {
        assert_group_axioms(&g);
        for x in g.elements() {
            prop_assert_eq!(g.order() % g.element_order(x).unwrap(), 0);
            prop_assert_eq!(g.mul(x, g.inv(x)), 0);
        }
    }

    #[test]
    fn subgroups_are_closed_and_divide(g in small_group()) {
        for h in all_subgroups(&g, 64).unwrap() {
            prop_assert_eq!(g.order() % h.order(), 0);
            prop_assert!(h.contains(0));
            for &a in h.members() {
                prop_assert!(h.contains(g.inv(a)));
                for &b in h.members() {
                    prop_assert!(h.contains(g.mul(a, b)));
                }
            }
        }
    }

    #[test]
    fn quotients_are_groups(g in small_group()) {
        for h in normal_subgroups(&g, 64).unwrap() {
            for x in g.elements() {
                for &a in h.members() {
                    prop_assert!(h.contains(g.mul(g.mul(x, a), g.inv(x))));
                }
            }
            let q = QuotientGroup::new(&g, &h).unwrap();
            let qg = q.group();
            prop_assert_eq!(qg.order(), g.order() / h.order());
            assert_group_axioms(qg);
            let mut seen = vec![false; g.order()];
            for coset in q.cosets() {
                prop_assert_eq!(coset.len(), h.order());
                for &x in coset {
                    prop_assert!(!seen[x]);
                    seen[x] = true;
                }
            }
            prop_assert_eq!(q.coset(0), h.members());
            prop_assert_eq!(q.coset_of(0), 0);
            for x in g.elements() {
                for y in g.elements() {
                    prop_assert_eq!(q.coset_of(g.mul(x, y)), qg.mul(q.coset_of(x), q.coset_of(y)));
                }
            }
            // each coset's order divides the order of any representative
            for x in g.elements() {
                prop_assert_eq!(g.element_order(x).unwrap() % qg.element_order(q.coset_of(x)).unwrap(), 0);
            }
        }
    }

    #[test]
    fn spectrum_invariants(g in small_group()) {
        let s = order_spectrum(&g);
        for &k in &s.pi_e {
            prop_assert!(s.mu.iter().any(|&m| m % k == 0));
        }
        for &m in &s.mu {
            prop_assert!(s.pi_e.contains(&m));
            prop_assert!(!s.mu.iter().any(|&o| o != m && o % m == 0));
        }
        let primes: std::collections::BTreeSet<usize> = s
            .pi_e
            .iter()
            .flat_map(|&k| (2..=k).filter(move |&p| k % p == 0 && (2..p).all(|d| p % d != 0)))
            .collect();
        prop_assert_eq!(&s.pi, &primes);
    }
}

#[test]
fn trivial_quotient_is_the_group() {
    for spec in ["cyclic:6", "dihedral:4", "symmetric:3 x cyclic:2", "dicyclic:3"] {
        let g = make_group(spec).unwrap();
        let q = QuotientGroup::new(&g, &Subgroup::trivial()).unwrap();
        for x in g.elements() {
            assert_eq!(q.coset(q.coset_of(x)), [x]);
            for y in g.elements() {
                let product = q.group().mul(q.coset_of(x), q.coset_of(y));
                assert_eq!(q.coset(product), [g.mul(x, y)]);
            }
        }
    }
}

#[test]
fn product_indices_are_mixed_radix() {
    let g = make_group("cyclic:3 x cyclic:4").unwrap();
    for (a, b) in (0..3).flat_map(|a| (0..4).map(move |b| (a, b))) {
        for (c, d) in (0..3).flat_map(|c| (0..4).map(move |d| (c, d))) {
            assert_eq!(g.mul(a * 4 + b, c * 4 + d), (a + c) % 3 * 4 + (b + d) % 4);
        }
    }
}
