use serde::Serialize;
use serde_json::Value;

use super::check::{product_instance, shape, Instance, Shape};
use super::claims::ClaimId;
use super::{CheckOptions, GroupContext};
use crate::enhanced::{enhanced_quotient_graph, DegreeFormulaTerms, QuotientInstance};
use crate::graph::is_hamiltonian_cycle;
use crate::group::{QuotientGroup, Subgroup};

/// Counterexample attached to a failing verdict. Unless stated otherwise,
/// numbers are element indices of `G`.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    /// The enhanced quotient graph splits into these components.
    Disconnected { components: Vec<Vec<usize>> },
    /// Two members of one non-kernel coset are not adjacent.
    MissingEdge { a: usize, b: usize },
    /// Two cosets joined by the `present` edge but missing the `missing` one.
    Propagation { present: [usize; 2], missing: [usize; 2] },
    /// Adjacency of `a, b` differs from what the claim predicts. In the
    /// `quotient-power` graph `a` and `b` are coset indices.
    EdgeMismatch { graph: String, a: usize, b: usize, adjacent: bool, expected: bool },
    /// In `G x Z_n`, the vertex `(e, a)` (index `a`) misses `non_neighbor`.
    NotCone { n: usize, vertex: usize, non_neighbor: usize },
    /// The closed-form degree disagrees with the actual degree.
    Degree(DegreeFormulaTerms),
    /// A lifted quotient cycle (coset indices) that is not Hamiltonian.
    BrokenLift { quotient_cycle: Vec<usize>, lifted: Vec<usize> },
    /// Item `premise` holds while item `conclusion` does not (items are
    /// numbered from 1 in claim order).
    Implication {
        premise: usize,
        conclusion: usize,
        premise_text: String,
        conclusion_text: String,
        detail: Value,
    },
}

/// Independently re-establishes the violation a witness records for
/// `(claim, G, H)`. Graphs are rebuilt from scratch and adjacency is
/// re-derived from the definition where possible.
pub fn recheck(claim: ClaimId, ctx: &GroupContext, subgroup: &Subgroup, witness: &Witness, options: CheckOptions) -> bool {
    let group = ctx.group();
    let Ok(x) = enhanced_quotient_graph(group, subgroup) else {
        return false;
    };
    let Ok(q) = QuotientGroup::new(group, subgroup) else {
        return false;
    };
    let vertex = |a: usize| x.vertex_of(a);
    let adjacent = |a: usize, b: usize| match (vertex(a), vertex(b)) {
        (Some(u), Some(v)) => Some(x.has_edge(u, v)),
        _ => None,
    };
    match (claim.number(), witness) {
        (1, Witness::Disconnected { components }) => {
            components.len() > 1 && components.concat().len() == x.order() && x.components().len() == components.len()
        }
        (2, Witness::MissingEdge { a, b }) => {
            a != b && q.coset_of(*a) == q.coset_of(*b) && q.coset_of(*a) != 0 && adjacent(*a, *b) == Some(false)
        }
        (3, Witness::Propagation { present, missing }) => {
            let pair = |[a, b]: [usize; 2]| {
                let (ca, cb) = (q.coset_of(a), q.coset_of(b));
                (ca.min(cb), ca.max(cb))
            };
            let (c1, c2) = pair(*present);
            c1 != 0 && c1 != c2
                && pair(*missing) == (c1, c2)
                && adjacent(present[0], present[1]) == Some(true)
                && adjacent(missing[0], missing[1]) == Some(false)
        }
        (4, Witness::EdgeMismatch { graph, a, b, adjacent: was, expected }) if graph == "quotient" => {
            let (ca, cb) = (q.coset_of(*a), q.coset_of(*b));
            let by_definition = ca == cb || common_cyclic(q.group(), ca, cb);
            by_definition == *expected && adjacent(*a, *b) == Some(*was) && was != expected
        }
        (5, Witness::EdgeMismatch { graph, a, b, adjacent: true, expected: false }) => {
            let qg = q.group();
            let (ca, cb) = if graph == "quotient-power" {
                if *a >= qg.order() || *b >= qg.order() {
                    return false;
                }
                (*a, *b)
            } else if graph == "quotient" {
                if adjacent(*a, *b) != Some(true) {
                    return false;
                }
                (q.coset_of(*a), q.coset_of(*b))
            } else {
                return false;
            };
            let (pa, pb) = (sorted_powers(qg, ca), sorted_powers(qg, cb));
            ca != 0 && cb != 0 && pa.len() == pb.len() && pa != pb && common_cyclic(qg, ca, cb)
        }
        (10, Witness::NotCone { n, vertex: a, non_neighbor }) => {
            let Some((_, product)) = ctx.coprime_products().iter().find(|(m, _)| m == n) else {
                return false;
            };
            let pi = product_instance(product, *n, subgroup);
            let g = pi.graph();
            match (pi.vertex_of(*a), pi.vertex_of(*non_neighbor)) {
                (Some(u), Some(v)) => num_integer::gcd(*a, *n) == 1 && u != v && !g.has_edge(u, v),
                _ => false,
            }
        }
        (15, Witness::Degree(terms)) => {
            let Ok(inst) = QuotientInstance::new(group, subgroup) else {
                return false;
            };
            let fresh = inst.degree_formula(terms.g);
            fresh.as_ref() == Ok(terms)
                && vertex(terms.g).map(|v| x.degree(v)) == Some(terms.actual_degree)
                && terms.formula_value != terms.actual_degree
        }
        (16, Witness::BrokenLift { quotient_cycle, lifted }) => {
            let Ok(inst) = QuotientInstance::new(group, subgroup) else {
                return false;
            };
            let Ok(fresh) = inst.lift_hamiltonian(quotient_cycle) else {
                return false;
            };
            let as_elements: Vec<usize> = fresh.iter().map(|&v| inst.graph().element(v)).collect();
            &as_elements == lifted && !is_hamiltonian_cycle(&x, &fresh)
        }
        (_, Witness::Implication { premise, conclusion, .. }) => {
            let Ok(inst) = Instance::new(ctx, subgroup, options) else {
                return false;
            };
            let values: Vec<_> = match shape(claim, &inst) {
                Ok(Shape::Equivalent(items)) => items.into_iter().map(|i| i.value).collect(),
                Ok(Shape::Implies(p, c)) => vec![p.value, c.value],
                Err(_) => return false,
            };
            let get = |i: usize| i.checked_sub(1).and_then(|i| values.get(i)).cloned();
            get(*premise) == Some(Ok(true)) && get(*conclusion) == Some(Ok(false))
        }
        _ => false,
    }
}

fn sorted_powers(g: &crate::group::FiniteGroup, x: usize) -> Vec<usize> {
    let mut p = g.powers(x);
    p.sort_unstable();
    p
}

/// Whether some cyclic subgroup of `g` contains both `a` and `b`, by
/// scanning every element's powers.
fn common_cyclic(g: &crate::group::FiniteGroup, a: usize, b: usize) -> bool {
    g.elements().any(|z| {
        let p = g.powers(z);
        p.contains(&a) && p.contains(&b)
    })
}
