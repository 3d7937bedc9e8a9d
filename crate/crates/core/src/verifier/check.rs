use std::sync::OnceLock;
use std::time::Instant;

use serde_json::{json, Value};

use super::claims::ClaimId;
use super::witness::Witness;
use super::{CheckOptions, ClaimVerdict, Verdict};
use crate::enhanced::{cyclic_subgroups, QuotientInstance};
use crate::graph::{circumference, clique_number, find_cycle, has_cycle, hamiltonian_cycle, is_hamiltonian_cycle, is_planar,
    LabeledGraph, Planarity, Skipped};
use crate::group::{
    center, cyclic, direct_product, has_cyclic_sylow, has_unique_minimal_subgroup, is_cyclic,
    is_elementary_abelian_2_group, is_generalized_quaternion, make_group, normal_subgroups, p_group_prime,
    prime_divisors, FiniteGroup, GroupError, Subgroup, DEFAULT_ENUMERATION_BOUND,
};

/// A group with lazily built data shared by all its subgroups' checks.
#[derive(Debug)]
pub struct GroupContext {
    spec: String,
    group: FiniteGroup,
    coprime_products: OnceLock<Vec<(usize, FiniteGroup)>>,
}

impl GroupContext {
    pub fn new(spec: impl Into<String>, group: FiniteGroup) -> Self {
        GroupContext { spec: spec.into(), group, coprime_products: OnceLock::new() }
    }

    pub fn from_spec(spec: &str) -> Result<Self, GroupError> {
        let group = make_group(spec)?;
        Ok(Self::new(group.name().to_string(), group))
    }

    pub fn spec(&self) -> &str {
        &self.spec
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    /// `G x Z_n` for `2 <= n <= 9` with `gcd(|G|, n) = 1`. Element `(g, a)`
    /// of the product has index `g * n + a`.
    pub fn coprime_products(&self) -> &[(usize, FiniteGroup)] {
        self.coprime_products.get_or_init(|| {
            let order = self.group.order();
            (2..=9)
                .filter(|&n| num_integer::gcd(order, n) == 1)
                .map(|n| {
                    let zn = cyclic(n).expect("n >= 1");
                    (n, direct_product(&[&self.group, &zn]).expect("product of valid groups"))
                })
                .collect()
        })
    }
}

/// A checked `(G, H)` pair with its graphs.
pub(crate) struct Instance<'a> {
    pub ctx: &'a GroupContext,
    pub q: QuotientInstance,
    deleted: OnceLock<LabeledGraph>,
    pub options: CheckOptions,
}

impl<'a> Instance<'a> {
    pub fn new(ctx: &'a GroupContext, subgroup: &Subgroup, options: CheckOptions) -> Result<Self, String> {
        let q = QuotientInstance::new(&ctx.group, subgroup).map_err(|e| e.to_string())?;
        Ok(Instance { ctx, q, deleted: OnceLock::new(), options })
    }

    /// `X = G_H(G)`.
    pub fn x(&self) -> &LabeledGraph {
        self.q.graph()
    }

    /// `X* = X - e`.
    pub fn deleted(&self) -> &LabeledGraph {
        self.deleted.get_or_init(|| self.x().deleted().expect("e is vertex 0"))
    }

    pub fn quotient(&self) -> &FiniteGroup {
        self.q.quotient().group()
    }

    pub fn h_order(&self) -> usize {
        self.q.subgroup().order()
    }

    /// Elements of a list of vertices of `graph`.
    pub fn elements_of(graph: &LabeledGraph, vertices: &[usize]) -> Vec<usize> {
        vertices.iter().map(|&v| graph.element(v)).collect()
    }

    fn has_nonidentity_cone(&self) -> bool {
        self.x().cone_vertices().into_iter().any(|v| v != 0)
    }
}

pub(crate) enum Outcome {
    Holds,
    Fails(Witness),
    Skipped(Skipped),
    Inapplicable(String),
}

/// One side of an equivalence.
pub(crate) struct Item {
    pub label: &'static str,
    pub value: Result<bool, Skipped>,
    pub detail: Value,
}

fn item(label: &'static str, value: bool) -> Item {
    Item { label, value: Ok(value), detail: Value::Null }
}

fn item_with(label: &'static str, value: Result<bool, Skipped>, detail: Value) -> Item {
    Item { label, value, detail }
}

/// How a claim's items combine.
pub(crate) enum Shape {
    /// All items equivalent.
    Equivalent(Vec<Item>),
    /// First item implies the second; a false premise makes the claim
    /// inapplicable.
    Implies(Item, Item),
}

/// Checks one claim on `(G, H)`.
pub fn check_claim(claim: ClaimId, ctx: &GroupContext, subgroup: &Subgroup, options: CheckOptions) -> ClaimVerdict {
    check_instance(ctx, subgroup, &[claim], options).pop().expect("one claim requested")
}

/// Checks several claims on `(G, H)`, sharing the constructed graphs.
pub fn check_instance(
    ctx: &GroupContext,
    subgroup: &Subgroup,
    claims: &[ClaimId],
    options: CheckOptions,
) -> Vec<ClaimVerdict> {
    let start = Instant::now();
    let inst = Instance::new(ctx, subgroup, options);
    let setup = start.elapsed();
    claims
        .iter()
        .map(|&claim| {
            let start = Instant::now();
            let (outcome, evidence) = match &inst {
                Ok(inst) => evaluate(claim, inst),
                Err(reason) => (Outcome::Inapplicable(format!("H is not a proper normal subgroup: {reason}")), None),
            };
            let (verdict, witness, note) = match outcome {
                Outcome::Holds => (Verdict::Holds, None, None),
                Outcome::Fails(w) => (Verdict::Fails, Some(w), None),
                Outcome::Skipped(s) => (Verdict::Skipped, None, Some(s.to_string())),
                Outcome::Inapplicable(reason) => (Verdict::Inapplicable, None, Some(reason)),
            };
            ClaimVerdict {
                claim,
                group: ctx.spec.clone(),
                subgroup: subgroup.members().to_vec(),
                verdict,
                witness,
                evidence,
                note,
                elapsed: setup + start.elapsed(),
            }
        })
        .collect()
}

pub(crate) fn evaluate(claim: ClaimId, inst: &Instance) -> (Outcome, Option<Value>) {
    match claim.number() {
        1 => (connectivity(inst), None),
        2 => (coset_cliques(inst), None),
        3 => (two_coset_cliques(inst), None),
        4 => (edge_correspondence(inst), None),
        5 => (generator_non_adjacency(inst), None),
        10 => cone_in_products(inst),
        15 => (degree_formula(inst), None),
        16 => hamiltonian_lifting(inst),
        17 => {
            let formulas = inst.q.clique_formulas(Some(inst.options.gates.clique));
            let evidence = serde_json::to_value(formulas).expect("formulas serialize");
            (combine(shape(claim, inst)), Some(evidence))
        }
        _ => (combine(shape(claim, inst)), None),
    }
}

fn combine(shape: Result<Shape, String>) -> Outcome {
    let shape = match shape {
        Ok(s) => s,
        Err(reason) => return Outcome::Inapplicable(reason),
    };
    let implication = |i: usize, j: usize, items: &[Item]| Witness::Implication {
        premise: i + 1,
        conclusion: j + 1,
        premise_text: items[i].label.to_string(),
        conclusion_text: items[j].label.to_string(),
        detail: json!({ "premise": items[i].detail, "conclusion": items[j].detail }),
    };
    let items = match shape {
        Shape::Implies(premise, conclusion) => {
            return match (premise.value, conclusion.value) {
                (Err(s), _) => Outcome::Skipped(s),
                (Ok(false), _) => Outcome::Inapplicable(format!("premise does not hold: {}", premise.label)),
                (Ok(true), Err(s)) => Outcome::Skipped(s),
                (Ok(true), Ok(true)) => Outcome::Holds,
                (Ok(true), Ok(false)) => Outcome::Fails(implication(0, 1, &[premise, conclusion])),
            };
        }
        Shape::Equivalent(items) => items,
    };
    for i in 0..items.len() {
        for j in 0..items.len() {
            if i != j && items[i].value == Ok(true) && items[j].value == Ok(false) {
                return Outcome::Fails(implication(i, j, &items));
            }
        }
    }
    match items.iter().find_map(|it| it.value.err()) {
        Some(s) => Outcome::Skipped(s),
        None => Outcome::Holds,
    }
}

/// Items of the claims evaluated as equivalences or implications.
pub(crate) fn shape(claim: ClaimId, inst: &Instance) -> Result<Shape, String> {
    let x = inst.x();
    let q = inst.quotient();
    let pq = inst.q.quotient_graph();
    let gates = inst.options.gates;
    let h = inst.h_order();
    let g_order = inst.ctx.group.order();
    Ok(match claim.number() {
        6 => {
            let cycle = find_cycle(x).map(|c| Instance::elements_of(x, &c));
            let s = inst.q.max_quotient_order();
            Shape::Equivalent(vec![
                item_with("X has a cycle", Ok(cycle.is_some()), json!({ "cycle": cycle })),
                item_with("some |aH| >= 3", Ok(s >= 3), json!({ "max_coset_order": s })),
            ])
        }
        7 => {
            let (px, pp) = (x.profile(), pq.profile());
            Shape::Equivalent(vec![
                item("X bipartite", px.bipartite),
                item("P(Q) bipartite", pp.bipartite),
                item("X tree", px.tree),
                item("P(Q) tree", pp.tree),
                item("Q elementary abelian 2-group", is_elementary_abelian_2_group(q)),
                item("X star", px.star),
                item("P(Q) star", pp.star),
            ])
        }
        8 => Shape::Equivalent(vec![
            item("X complete", x.is_complete()),
            item("Q cyclic", is_cyclic(q)),
            item("P(Q) complete", pq.is_complete()),
        ]),
        9 => {
            let glued = glued_with_kernel(inst);
            let a = g_order - h;
            let apex = glued.is_apex_double_clique(a, h - 1).expect("glued graph has |G| vertices");
            let k = inst.q.quotient().index();
            Shape::Equivalent(vec![
                item("X glued with K_H is e * (K_|G-H| + K_|H|-1)", apex),
                item("G cyclic", is_cyclic(&inst.ctx.group)),
                item("X is |G-H|-regular", x.profile().regular_degree == Some(a)),
                item("P(Q) complete", pq.is_complete()),
                item("P(Q) is ([G:H]-1)-regular", pq.profile().regular_degree == Some(k - 1)),
            ])
        }
        11 => {
            if !inst.ctx.group.is_abelian() {
                return Err("G is not abelian".into());
            }
            let k = inst.q.quotient().index();
            let p = prime_power_base(k).ok_or("[G:H] is not a prime power")?;
            if h.is_multiple_of(p) {
                return Err(format!("|H| is divisible by p = {p}"));
            }
            let sylow = has_cyclic_sylow(&inst.ctx.group, p).map_err(|e| e.to_string())?;
            Shape::Equivalent(vec![
                item_with("X has a non-identity cone vertex", Ok(inst.has_nonidentity_cone()), cone_detail(inst)),
                item_with("Sylow p-subgroup of G cyclic", Ok(sylow), json!({ "p": p })),
            ])
        }
        12 => {
            let p = p_group_prime(&inst.ctx.group).ok_or("G is not a p-group")?;
            if h != p {
                return Err(format!("|H| = {h} is not p = {p}"));
            }
            Shape::Equivalent(vec![
                item_with("X has a non-identity cone vertex", Ok(inst.has_nonidentity_cone()), cone_detail(inst)),
                item("Q generalized quaternion", is_generalized_quaternion(q)),
            ])
        }
        13 => {
            let normals = normal_subgroups(q, DEFAULT_ENUMERATION_BOUND.max(q.order())).map_err(|e| e.to_string())?;
            Shape::Implies(
                item("H maximal normal", normals.len() == 2),
                item_with("X has no non-identity cone vertex", Ok(!inst.has_nonidentity_cone()), cone_detail(inst)),
            )
        }
        14 => {
            let p = x.profile();
            Shape::Equivalent(vec![
                item_with(
                    "X Eulerian",
                    Ok(p.eulerian),
                    json!({ "vertices": x.order(), "connected": p.connected, "degrees": p.degree_sequence }),
                ),
                item_with("|G| odd", Ok(g_order % 2 == 1), json!({ "group_order": g_order })),
            ])
        }
        17 => {
            let s = inst.q.max_quotient_order();
            let predicted = h >= 4 || (h == 1 && s >= 5) || (h == 2 && s >= 3) || (h == 3 && s >= 2);
            let planarity = is_planar(x, gates.planarity);
            let detail = match &planarity {
                Ok(Planarity::NonPlanar(w)) => json!({
                    "kind": w.kind,
                    "branch": Instance::elements_of(x, &w.branch),
                    "paths": w.paths.iter().map(|p| Instance::elements_of(x, p)).collect::<Vec<_>>(),
                }),
                _ => Value::Null,
            };
            Shape::Equivalent(vec![
                item_with("X non-planar", planarity.map(|p| !p.is_planar()), detail),
                item_with("|H| and s meet the non-planarity condition", Ok(predicted), json!({ "h": h, "s": s })),
            ])
        }
        18 => {
            if q.order() == 1 || p_group_prime(q).is_none() {
                return Err("Q is not a p-group".into());
            }
            let unique = has_unique_minimal_subgroup(q).map_err(|e| e.to_string())?;
            Shape::Equivalent(vec![
                item_with("X* connected", Ok(inst.deleted().is_connected()), components_detail(inst.deleted())),
                item("Q has a unique minimal subgroup", unique),
            ])
        }
        19 => {
            let z = center(q).order();
            Shape::Implies(
                item_with("|Pi(Z(Q))| >= 2", Ok(prime_divisors(z).len() >= 2), json!({ "center_order": z })),
                item_with("X* connected", Ok(inst.deleted().is_connected()), components_detail(inst.deleted())),
            )
        }
        20 => {
            if prime_divisors(q.order()).len() < 2 {
                return Err("|Pi(Q)| < 2".into());
            }
            let z = center(q);
            let p = match prime_divisors(z.order()).as_slice() {
                [p] => *p,
                _ => return Err(format!("|Z(Q)| = {} is not a nontrivial prime power", z.order())),
            };
            let pair = order_p_neighbour(inst, &z, p);
            Shape::Equivalent(vec![
                item_with("X* connected", Ok(inst.deleted().is_connected()), components_detail(inst.deleted())),
                item_with(
                    "some non-central xH of order p is adjacent to some gH of order not a power of p",
                    Ok(pair.is_some()),
                    json!({ "p": p, "pair": pair }),
                ),
            ])
        }
        21 => {
            if !inst.q.subgroup().is_trivial() {
                return Err("H is not trivial".into());
            }
            let d = inst.deleted();
            let forest = d.edge_count() + d.components().len() == d.order();
            let g = &inst.ctx.group;
            let max_order = g.elements().map(|x| g.order_of(x)).max().unwrap_or(1);
            Shape::Equivalent(vec![
                item("X* bipartite", d.bipartition().is_some()),
                item("X* forest", forest),
                item("X* has no cycle", !has_cycle(d)),
                item_with("every |g| <= 3", Ok(max_order <= 3), json!({ "max_order": max_order })),
            ])
        }
        22 => {
            let d = inst.deleted();
            let k = inst.q.quotient().index() - 1;
            let cross = d.edges().find(|&(u, v)| inst.q.coset_of_vertex(u + 1) != inst.q.coset_of_vertex(v + 1));
            let partite = h == k && cross.is_none();
            let circ = circumference(d, gates.circumference);
            let omega = clique_number(d, gates.clique);
            let s = inst.q.max_quotient_order();
            Shape::Equivalent(vec![
                item_with(
                    "X* k-partite with parts meeting each nontrivial coset once",
                    Ok(partite),
                    json!({ "k": k, "h": h, "cross_edge": cross.map(|(u, v)| [d.element(u), d.element(v)]) }),
                ),
                item_with("circumference of X* is |H|", circ.map(|c| c == h), json!({ "circumference": circ.ok() })),
                item_with("omega(X*) = |H|", omega.map(|w| w == h), json!({ "omega": omega.ok() })),
                item_with("every |aH| <= 2", Ok(s <= 2), json!({ "max_coset_order": s })),
                item("Q elementary abelian 2-group", is_elementary_abelian_2_group(q)),
            ])
        }
        n => unreachable!("claim C{n:02} is not evaluated by items"),
    })
}

fn prime_power_base(k: usize) -> Option<usize> {
    match prime_divisors(k).as_slice() {
        [p] => Some(*p),
        _ => None,
    }
}

fn cone_detail(inst: &Instance) -> Value {
    let x = inst.x();
    json!({ "cone_vertices": Instance::elements_of(x, &x.cone_vertices()) })
}

fn components_detail(g: &LabeledGraph) -> Value {
    let comps: Vec<Vec<usize>> = g.components().iter().map(|c| Instance::elements_of(g, c)).collect();
    json!({ "components": comps.len(), "smallest_members": comps.iter().map(|c| c[0]).collect::<Vec<_>>() })
}

/// `G` with the members of `H - e` added back and joined into a clique
/// with `e`; vertices `0..|G|` are the elements.
fn glued_with_kernel(inst: &Instance) -> LabeledGraph {
    let g = &inst.ctx.group;
    let x = inst.x();
    let mut glued = LabeledGraph::edgeless(g.elements().collect(), g.labels().to_vec());
    for (u, v) in x.edges() {
        glued.insert(x.element(u), x.element(v));
    }
    let h = inst.q.subgroup().members();
    for (i, &a) in h.iter().enumerate() {
        for &b in &h[i + 1..] {
            glued.insert(a, b);
        }
    }
    glued
}

/// A non-central coset of order `p` adjacent (in `G(G/H)`) to a coset whose
/// order is not a power of `p`, as representative elements.
fn order_p_neighbour(inst: &Instance, z: &Subgroup, p: usize) -> Option<[usize; 2]> {
    let q = inst.quotient();
    let pq = inst.q.quotient_graph();
    let is_p_power = |mut n: usize| {
        while n.is_multiple_of(p) {
            n /= p;
        }
        n == 1
    };
    for x in q.elements().filter(|&x| q.order_of(x) == p && !z.contains(x)) {
        if let Some(&g) = pq.neighbors(x).iter().find(|&&g| !is_p_power(q.order_of(g))) {
            return Some([inst.q.quotient().coset(x)[0], inst.q.quotient().coset(g)[0]]);
        }
    }
    None
}

fn connectivity(inst: &Instance) -> Outcome {
    let x = inst.x();
    let comps = x.components();
    if comps.len() > 1 {
        let components = comps.iter().map(|c| Instance::elements_of(x, c)).collect();
        return Outcome::Fails(Witness::Disconnected { components });
    }
    Outcome::Holds
}

fn coset_cliques(inst: &Instance) -> Outcome {
    let x = inst.x();
    for coset in &inst.q.quotient().cosets()[1..] {
        for (i, &a) in coset.iter().enumerate() {
            for &b in &coset[i + 1..] {
                let (u, v) = (inst.q.vertex_of(a).unwrap(), inst.q.vertex_of(b).unwrap());
                if !x.has_edge(u, v) {
                    return Outcome::Fails(Witness::MissingEdge { a, b });
                }
            }
        }
    }
    Outcome::Holds
}

fn two_coset_cliques(inst: &Instance) -> Outcome {
    let x = inst.x();
    let cosets = inst.q.quotient().cosets();
    let vx = |a: usize| inst.q.vertex_of(a).unwrap();
    for i in 1..cosets.len() {
        for j in i + 1..cosets.len() {
            let pairs = || cosets[i].iter().flat_map(|&a| cosets[j].iter().map(move |&b| (a, b)));
            let present = pairs().find(|&(a, b)| x.has_edge(vx(a), vx(b)));
            let missing = pairs().find(|&(a, b)| !x.has_edge(vx(a), vx(b)));
            if let (Some(p), Some(m)) = (present, missing) {
                return Outcome::Fails(Witness::Propagation { present: [p.0, p.1], missing: [m.0, m.1] });
            }
        }
    }
    Outcome::Holds
}

fn edge_correspondence(inst: &Instance) -> Outcome {
    let x = inst.x();
    let pq = inst.q.quotient_graph();
    for u in 0..x.order() {
        for v in u + 1..x.order() {
            let (cu, cv) = (inst.q.coset_of_vertex(u), inst.q.coset_of_vertex(v));
            let expected = cu == cv || pq.has_edge(cu, cv);
            let adjacent = x.has_edge(u, v);
            if adjacent != expected {
                return Outcome::Fails(Witness::EdgeMismatch {
                    graph: "quotient".into(),
                    a: x.element(u),
                    b: x.element(v),
                    adjacent,
                    expected,
                });
            }
        }
    }
    Outcome::Holds
}

fn generator_non_adjacency(inst: &Instance) -> Outcome {
    let q = inst.quotient();
    let pq = inst.q.quotient_graph();
    let x = inst.x();
    let cyclics: Vec<Vec<usize>> = cyclic_subgroups(q).into_iter().filter(|c| c.len() > 1).collect();
    let generators = |c: &[usize]| c.iter().copied().filter(|&y| q.order_of(y) == c.len()).collect::<Vec<_>>();
    for (i, a) in cyclics.iter().enumerate() {
        for b in cyclics[i + 1..].iter().filter(|b| b.len() == a.len()) {
            for &ga in &generators(a) {
                for &gb in &generators(b) {
                    if pq.has_edge(ga, gb) {
                        return Outcome::Fails(Witness::EdgeMismatch {
                            graph: "quotient-power".into(),
                            a: ga,
                            b: gb,
                            adjacent: true,
                            expected: false,
                        });
                    }
                    for &ea in inst.q.quotient().coset(ga) {
                        for &eb in inst.q.quotient().coset(gb) {
                            let (u, v) = (inst.q.vertex_of(ea).unwrap(), inst.q.vertex_of(eb).unwrap());
                            if x.has_edge(u, v) {
                                return Outcome::Fails(Witness::EdgeMismatch {
                                    graph: "quotient".into(),
                                    a: ea,
                                    b: eb,
                                    adjacent: true,
                                    expected: false,
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    Outcome::Holds
}

/// `G_{H x 0}(G x Z_n)` for a coprime product, built from `H`.
pub(crate) fn product_instance(product: &FiniteGroup, n: usize, h: &Subgroup) -> QuotientInstance {
    let lifted = Subgroup::new(product, h.members().iter().map(|&x| x * n)).expect("H x 0 is a subgroup");
    QuotientInstance::new(product, &lifted).expect("H x 0 is proper and normal")
}

fn cone_in_products(inst: &Instance) -> (Outcome, Option<Value>) {
    let products = inst.ctx.coprime_products();
    if products.is_empty() {
        return (Outcome::Inapplicable("no n in 2..=9 is coprime to |G|".into()), None);
    }
    let mut checked = Vec::new();
    for (n, product) in products {
        let pi = product_instance(product, *n, inst.q.subgroup());
        let graph = pi.graph();
        let units: Vec<usize> = (1..*n).filter(|&a| num_integer::gcd(a, *n) == 1).collect();
        for &a in &units {
            let v = pi.vertex_of(a).expect("(e, a) lies outside H x 0");
            if let Some(w) = (0..graph.order()).find(|&w| w != v && !graph.has_edge(v, w)) {
                let witness = Witness::NotCone { n: *n, vertex: a, non_neighbor: graph.element(w) };
                return (Outcome::Fails(witness), None);
            }
        }
        checked.push(json!({ "n": n, "cone_vertices": units }));
    }
    (Outcome::Holds, Some(json!({ "products": checked })))
}

fn degree_formula(inst: &Instance) -> Outcome {
    let g = &inst.ctx.group;
    for x in g.elements().filter(|&x| inst.q.quotient().coset_of(x) != 0) {
        let terms = inst.q.degree_formula(x).expect("x lies outside H");
        if terms.formula_value != terms.actual_degree {
            return Outcome::Fails(Witness::Degree(terms));
        }
    }
    Outcome::Holds
}

fn hamiltonian_lifting(inst: &Instance) -> (Outcome, Option<Value>) {
    let pq = inst.q.quotient_graph();
    match hamiltonian_cycle(pq, inst.options.gates.hamiltonian) {
        Err(s) => (Outcome::Skipped(s), None),
        Ok(None) => (Outcome::Inapplicable("P(Q) is not Hamiltonian".into()), None),
        Ok(Some(cycle)) => {
            let lifted = inst.q.lift_hamiltonian(&cycle).expect("search returns a Hamiltonian cycle from coset 0");
            if is_hamiltonian_cycle(inst.x(), &lifted) {
                (Outcome::Holds, Some(json!({ "quotient_cycle": cycle })))
            } else {
                let lifted = Instance::elements_of(inst.x(), &lifted);
                (Outcome::Fails(Witness::BrokenLift { quotient_cycle: cycle, lifted }), None)
            }
        }
    }
}
