//! Enhanced power graphs, enhanced quotient graphs and Cayley graphs, plus
//! the closed-form quantities (degree formula, clique formulas, lifted
//! Hamiltonian cycles, embedded quotient copies) that claims are checked
//! against.

use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{clique_number, is_hamiltonian_cycle, GraphError, LabeledGraph};
use crate::group::{FiniteGroup, GroupError, QuotientGroup, Subgroup};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EnhancedError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("the subgroup is the whole group, leaving no non-identity vertices")]
    WholeGroup,
    #[error("connection set is not closed under inverses: {0} lacks its inverse")]
    NotInverseClosed(usize),
    #[error("connection set contains the identity")]
    ContainsIdentity,
    #[error("element {0} lies in the subgroup")]
    InSubgroup(usize),
    #[error("not a Hamiltonian cycle of the quotient's enhanced power graph")]
    NotHamiltonian,
    #[error("invalid transversal: {0}")]
    InvalidTransversal(String),
}

pub type Result<T, E = EnhancedError> = std::result::Result<T, E>;

/// Distinct cyclic subgroups as ascending member lists, sorted by
/// (order, members).
pub fn cyclic_subgroups(group: &FiniteGroup) -> Vec<Vec<usize>> {
    let set: BTreeSet<(usize, Vec<usize>)> = group
        .elements()
        .map(|g| {
            let mut m = group.powers(g);
            m.sort_unstable();
            (m.len(), m)
        })
        .collect();
    set.into_iter().map(|(_, m)| m).collect()
}

/// Cyclic subgroups contained in no larger cyclic subgroup, sorted by
/// (order, members).
pub fn maximal_cyclic_subgroups(group: &FiniteGroup) -> Vec<Vec<usize>> {
    let all = cyclic_subgroups(group);
    let n = group.order();
    let masks: Vec<Vec<bool>> = all
        .iter()
        .map(|c| {
            let mut mask = vec![false; n];
            c.iter().for_each(|&x| mask[x] = true);
            mask
        })
        .collect();
    all.iter()
        .enumerate()
        .filter(|&(i, c)| {
            !all.iter()
                .enumerate()
                .any(|(j, d)| j != i && d.len() > c.len() && c.iter().all(|&x| masks[j][x]))
        })
        .map(|(_, c)| c.clone())
        .collect()
}

/// `G(G)`: vertex `i` is element `i`; two elements are adjacent when some
/// cyclic subgroup contains both. Built as the union of cliques on the
/// maximal cyclic subgroups.
pub fn enhanced_power_graph(group: &FiniteGroup) -> LabeledGraph {
    let mut g = LabeledGraph::edgeless(group.elements().collect(), group.labels().to_vec());
    for c in maximal_cyclic_subgroups(group) {
        for (i, &x) in c.iter().enumerate() {
            for &y in &c[i + 1..] {
                g.insert(x, y);
            }
        }
    }
    g
}

/// `G_H(G)` on `{e}` followed by `G \ H` ascending.
pub fn enhanced_quotient_graph(group: &FiniteGroup, h: &Subgroup) -> Result<LabeledGraph> {
    let q = quotient_for(group, h)?;
    Ok(build_quotient_graph(group, &q))
}

fn quotient_for(group: &FiniteGroup, h: &Subgroup) -> Result<QuotientGroup> {
    let q = QuotientGroup::new(group, h)?;
    if q.index() == 1 {
        return Err(EnhancedError::WholeGroup);
    }
    Ok(q)
}

/// Vertices of `G_H(G)` as elements: `e` then `G \ H` ascending.
fn quotient_vertices(group: &FiniteGroup, q: &QuotientGroup) -> Vec<usize> {
    std::iter::once(0)
        .chain(group.elements().filter(|&x| q.coset_of(x) != 0))
        .collect()
}

/// Two vertices are joined when their cosets lie in a common cyclic subgroup
/// of `G/H`; the cyclic subgroups are taken maximal, and every coset lies in
/// its own cyclic subgroup, so same-coset pairs are covered too.
fn build_quotient_graph(group: &FiniteGroup, q: &QuotientGroup) -> LabeledGraph {
    let elements = quotient_vertices(group, q);
    let labels = elements.iter().map(|&x| group.label(x).to_string()).collect();
    let mut vertex_of = vec![usize::MAX; group.order()];
    for (v, &x) in elements.iter().enumerate() {
        vertex_of[x] = v;
    }
    let mut g = LabeledGraph::edgeless(elements, labels);
    for c in maximal_cyclic_subgroups(q.group()) {
        let vertices: Vec<usize> = c
            .iter()
            .flat_map(|&coset| q.coset(coset).iter().map(|&x| vertex_of[x]))
            .filter(|&v| v != usize::MAX)
            .collect();
        for (i, &u) in vertices.iter().enumerate() {
            for &w in &vertices[i + 1..] {
                if u != w {
                    g.insert(u, w);
                }
            }
        }
    }
    g
}

/// Cayley graph: `g ~ h` iff `h g^-1` lies in the connection set.
pub fn cayley_graph(group: &FiniteGroup, connection: &[usize]) -> Result<LabeledGraph> {
    let n = group.order();
    let mut inside = vec![false; n];
    for &c in connection {
        group.check_index(c)?;
        inside[c] = true;
    }
    if inside[0] {
        return Err(EnhancedError::ContainsIdentity);
    }
    if let Some(&c) = connection.iter().find(|&&c| !inside[group.inv(c)]) {
        return Err(EnhancedError::NotInverseClosed(c));
    }
    let mut g = LabeledGraph::edgeless(group.elements().collect(), group.labels().to_vec());
    for x in 0..n {
        let xi = group.inv(x);
        for y in x + 1..n {
            if inside[group.mul(y, xi)] {
                g.insert(x, y);
            }
        }
    }
    Ok(g)
}

/// Terms of the closed-form degree of a vertex `g` in `G_H(G)`.
///
/// `maximal_cyclics` are the maximal cyclic subgroups of `G/H` containing
/// `gH`, as coset-index lists, ordered by decreasing size then members.
/// `overlap_sizes[i]` is `|C_i ∩ (C_1 ∪ … ∪ C_{i-1})|` (0 for the first).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeFormulaTerms {
    pub g: usize,
    pub maximal_cyclics: Vec<Vec<usize>>,
    pub overlap_sizes: Vec<usize>,
    pub formula_value: usize,
    pub actual_degree: usize,
}

/// Clique-number closed forms. `power_value` is `|H|^(s-1) + 1`, saturating
/// at `u128::MAX`; `coset_value` is `(s-1)|H| + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CliqueFormulas {
    pub s: usize,
    pub power_value: u128,
    pub coset_value: usize,
    pub exact_omega: Option<usize>,
}

/// Induced subgraph on `{e} ∪ transversal` and whether mapping each
/// representative to its coset is an isomorphism onto `G(G/H)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddedCopy {
    pub graph: LabeledGraph,
    pub isomorphic: bool,
}

/// A `(G, H)` pair with the quotient and both graphs built once.
#[derive(Debug, Clone)]
pub struct QuotientInstance {
    group: FiniteGroup,
    subgroup: Subgroup,
    quotient: QuotientGroup,
    quotient_graph: LabeledGraph,
    graph: LabeledGraph,
    vertex_of: Vec<Option<usize>>,
}

impl QuotientInstance {
    pub fn new(group: &FiniteGroup, subgroup: &Subgroup) -> Result<Self> {
        let quotient = quotient_for(group, subgroup)?;
        let graph = build_quotient_graph(group, &quotient);
        let quotient_graph = enhanced_power_graph(quotient.group());
        let mut vertex_of = vec![None; group.order()];
        for (v, &x) in graph.elements().iter().enumerate() {
            vertex_of[x] = Some(v);
        }
        Ok(QuotientInstance {
            group: group.clone(),
            subgroup: subgroup.clone(),
            quotient,
            quotient_graph,
            graph,
            vertex_of,
        })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn subgroup(&self) -> &Subgroup {
        &self.subgroup
    }

    pub fn quotient(&self) -> &QuotientGroup {
        &self.quotient
    }

    /// `G(G/H)`, vertex `c` being coset `c`.
    pub fn quotient_graph(&self) -> &LabeledGraph {
        &self.quotient_graph
    }

    /// `G_H(G)`.
    pub fn graph(&self) -> &LabeledGraph {
        &self.graph
    }

    /// Vertex of `G_H(G)` standing for element `x`, if `x` is a vertex.
    pub fn vertex_of(&self, x: usize) -> Option<usize> {
        self.vertex_of.get(x).copied().flatten()
    }

    /// Coset of the element a vertex stands for.
    pub fn coset_of_vertex(&self, v: usize) -> usize {
        self.quotient.coset_of(self.graph.element(v))
    }

    pub fn degree_formula(&self, g: usize) -> Result<DegreeFormulaTerms> {
        self.group.check_index(g)?;
        let coset = self.quotient.coset_of(g);
        if coset == 0 {
            return Err(EnhancedError::InSubgroup(g));
        }
        let mut cyclics: Vec<Vec<usize>> = maximal_cyclic_subgroups(self.quotient.group())
            .into_iter()
            .filter(|c| c.binary_search(&coset).is_ok())
            .collect();
        cyclics.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        let h = self.subgroup.order();
        let mut seen = vec![false; self.quotient.index()];
        let mut overlap_sizes = Vec::with_capacity(cyclics.len());
        let mut formula_value = 0;
        for (i, c) in cyclics.iter().enumerate() {
            let overlap = c.iter().filter(|&&x| seen[x]).count();
            if i == 0 {
                formula_value += (c.len() - 1) * h + 1;
                overlap_sizes.push(0);
            } else {
                formula_value += (c.len() - overlap) * h;
                overlap_sizes.push(overlap);
            }
            c.iter().for_each(|&x| seen[x] = true);
        }
        let v = self.vertex_of(g).expect("elements outside H are vertices");
        Ok(DegreeFormulaTerms {
            g,
            maximal_cyclics: cyclics,
            overlap_sizes,
            formula_value,
            actual_degree: self.graph.degree(v),
        })
    }

    /// Highest element order of `G/H`.
    pub fn max_quotient_order(&self) -> usize {
        let q = self.quotient.group();
        q.elements().map(|x| q.order_of(x)).max().unwrap_or(1)
    }

    /// Closed forms for the clique number; the exact value is computed when
    /// `exact_gate` is given and the graph fits under it.
    pub fn clique_formulas(&self, exact_gate: Option<usize>) -> CliqueFormulas {
        let s = self.max_quotient_order();
        let h = self.subgroup.order();
        let power_value = (h as u128).checked_pow((s - 1) as u32).map_or(u128::MAX, |p| p.saturating_add(1));
        CliqueFormulas {
            s,
            power_value,
            coset_value: (s - 1) * h + 1,
            exact_omega: exact_gate.and_then(|gate| clique_number(&self.graph, gate).ok()),
        }
    }

    /// Lifts a Hamiltonian cycle of `G(G/H)` starting at coset 0 (closing edge
    /// implicit) to `G_H(G)`: `e`, then each coset's members in ascending
    /// order, coset by coset. Returns vertex indices.
    pub fn lift_hamiltonian(&self, quotient_cycle: &[usize]) -> Result<Vec<usize>> {
        if quotient_cycle.first() != Some(&0) || !is_hamiltonian_cycle(&self.quotient_graph, quotient_cycle) {
            return Err(EnhancedError::NotHamiltonian);
        }
        let mut cycle = vec![0];
        for &c in &quotient_cycle[1..] {
            cycle.extend(self.quotient.coset(c).iter().map(|&x| self.vertex_of(x).expect("non-kernel coset")));
        }
        Ok(cycle)
    }

    /// Number of transversals of the nontrivial cosets, `|H|^([G:H]-1)`,
    /// saturating.
    pub fn transversal_count(&self) -> u128 {
        let h = self.subgroup.order() as u128;
        (0..self.quotient.index() - 1).fold(1u128, |acc, _| acc.saturating_mul(h))
    }

    /// All transversals, each listing one member of cosets `1..[G:H]` in
    /// coset order; enumerated with the last coset varying fastest.
    pub fn transversals(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        let k = self.quotient.index() - 1;
        let h = self.subgroup.order();
        let mut digits = vec![0usize; k];
        let mut done = false;
        std::iter::from_fn(move || {
            if done {
                return None;
            }
            let out = (0..k).map(|i| self.quotient.coset(i + 1)[digits[i]]).collect();
            done = true;
            for i in (0..k).rev() {
                digits[i] += 1;
                if digits[i] < h {
                    done = false;
                    break;
                }
                digits[i] = 0;
            }
            Some(out)
        })
    }

    pub fn embedded_copy(&self, transversal: &[usize]) -> Result<EmbeddedCopy> {
        let k = self.quotient.index();
        if transversal.len() != k - 1 {
            return Err(EnhancedError::InvalidTransversal(format!(
                "expected {} representatives, got {}",
                k - 1,
                transversal.len()
            )));
        }
        let mut by_coset = vec![None; k];
        for &x in transversal {
            self.group.check_index(x)?;
            let c = self.quotient.coset_of(x);
            if c == 0 {
                return Err(EnhancedError::InvalidTransversal(format!("{x} lies in H")));
            }
            if by_coset[c].replace(x).is_some() {
                return Err(EnhancedError::InvalidTransversal(format!("two representatives of coset {c}")));
            }
        }
        let vertices: Vec<usize> = std::iter::once(0)
            .chain(by_coset[1..].iter().map(|x| self.vertex_of(x.expect("all cosets covered")).unwrap()))
            .collect();
        let graph = self.graph.induced(&vertices)?;
        // vertex i of the copy maps to coset i
        let isomorphic = (0..k).all(|a| (a + 1..k).all(|b| graph.has_edge(a, b) == self.quotient_graph.has_edge(a, b)));
        Ok(EmbeddedCopy { graph, isomorphic })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::hamiltonian_cycle;
    use crate::group::{cyclic, make_group, named_subgroup};

    fn instance(spec: &str, members: &[usize]) -> QuotientInstance {
        let g = make_group(spec).unwrap();
        let h = Subgroup::new(&g, members.iter().copied()).unwrap();
        QuotientInstance::new(&g, &h).unwrap()
    }

    #[test]
    fn power_graph_examples() {
        let v4 = enhanced_power_graph(&make_group("elab:2^2").unwrap());
        assert!(v4.profile().star);
        assert_eq!(v4.cone_vertices(), vec![0]);
        assert!(enhanced_power_graph(&cyclic(5).unwrap()).is_complete());
        let s3 = enhanced_power_graph(&make_group("symmetric:3").unwrap());
        assert_eq!(s3.edge_count(), 6);
        let mut degrees = s3.degree_sequence();
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        assert_eq!(degrees, vec![5, 2, 2, 1, 1, 1]);
    }

    #[test]
    fn quotient_graph_examples() {
        let k3 = instance("cyclic:4", &[0, 2]);
        assert!(k3.graph().is_complete());
        assert_eq!(k3.graph().elements(), &[0, 1, 3]);
        assert_eq!(k3.graph().labels(), &["e", "g", "g^3"]);
        let k7 = instance("cyclic:9", &[0, 3, 6]);
        assert!(k7.graph().is_complete());
        assert_eq!(k7.graph().order(), 7);
        let s3 = make_group("symmetric:3").unwrap();
        let a3 = named_subgroup(&s3, None, "alternating").unwrap();
        let k4 = enhanced_quotient_graph(&s3, &a3).unwrap();
        assert!(k4.is_complete());
        assert_eq!(k4.order(), 4);
    }

    #[test]
    fn quotient_graph_errors() {
        let s3 = make_group("symmetric:3").unwrap();
        let not_normal = Subgroup::new(&s3, [0, 1]).unwrap();
        assert!(matches!(enhanced_quotient_graph(&s3, &not_normal), Err(EnhancedError::Group(_))));
        assert_eq!(enhanced_quotient_graph(&s3, &Subgroup::whole(&s3)), Err(EnhancedError::WholeGroup));
    }

    #[test]
    fn trivial_subgroup_gives_power_graph() {
        let q8 = make_group("dicyclic:2").unwrap();
        let inst = QuotientInstance::new(&q8, &Subgroup::trivial()).unwrap();
        assert_eq!(inst.graph().edges().collect::<Vec<_>>(), enhanced_power_graph(&q8).edges().collect::<Vec<_>>());
        let deleted = inst.graph().deleted().unwrap();
        assert_eq!(deleted.order(), 7);
        assert!(deleted.is_connected());
    }

    #[test]
    fn deleted_examples() {
        let k3 = instance("cyclic:4", &[0, 2]);
        let d = k3.graph().deleted().unwrap();
        assert_eq!(d.edges().collect::<Vec<_>>(), vec![(0, 1)]);
        let v4 = enhanced_power_graph(&make_group("elab:2^2").unwrap()).deleted().unwrap();
        assert_eq!(v4.edge_count(), 0);
        assert_eq!(v4.order(), 3);
    }

    #[test]
    fn cayley_examples() {
        let z4 = cyclic(4).unwrap();
        let c4 = cayley_graph(&z4, &[1, 3]).unwrap();
        assert_eq!(c4.profile().regular_degree, Some(2));
        assert!(c4.is_connected());
        assert_eq!(cayley_graph(&z4, &[]).unwrap().edge_count(), 0);
        let matching = cayley_graph(&z4, &[2]).unwrap();
        assert_eq!(matching.edges().collect::<Vec<_>>(), vec![(0, 2), (1, 3)]);
        assert_eq!(cayley_graph(&z4, &[1]), Err(EnhancedError::NotInverseClosed(1)));
        assert_eq!(cayley_graph(&z4, &[0, 2]), Err(EnhancedError::ContainsIdentity));
    }

    #[test]
    fn degree_formula_examples() {
        let inst = instance("cyclic:9", &[0, 3, 6]);
        let t = inst.degree_formula(1).unwrap();
        assert_eq!((t.formula_value, t.actual_degree), (7, 6));
        assert_eq!(t.maximal_cyclics, vec![vec![0, 1, 2]]);
        assert_eq!(inst.graph().degree(0), 6);
        let t = instance("cyclic:4", &[0, 2]).degree_formula(1).unwrap();
        assert_eq!((t.formula_value, t.actual_degree), (3, 2));
        assert_eq!(inst.degree_formula(3), Err(EnhancedError::InSubgroup(3)));
    }

    #[test]
    fn degree_formula_with_overlaps() {
        // Z2 x Z4 with trivial H: g=(1,2)? pick element (0,2) of order 2, lying in
        // the two maximal cyclics of order 4 generated by (0,1) and (1,1)
        let inst = instance("cyclic:2 x cyclic:4", &[0]);
        let t = inst.degree_formula(2).unwrap();
        assert_eq!(t.maximal_cyclics.len(), 2);
        assert_eq!(t.overlap_sizes, vec![0, 2]);
        assert_eq!(t.formula_value, t.actual_degree + 1);
    }

    #[test]
    fn clique_formula_examples() {
        let f = instance("cyclic:9", &[0, 3, 6]).clique_formulas(Some(40));
        assert_eq!((f.s, f.power_value, f.coset_value, f.exact_omega), (3, 10, 7, Some(7)));
        let f = instance("cyclic:4", &[0, 2]).clique_formulas(Some(40));
        assert_eq!((f.s, f.power_value, f.coset_value, f.exact_omega), (2, 3, 3, Some(3)));
        assert_eq!(instance("cyclic:9", &[0, 3, 6]).clique_formulas(None).exact_omega, None);
    }

    #[test]
    fn hamiltonian_lifting() {
        let inst = instance("cyclic:9", &[0, 3, 6]);
        let lifted = inst.lift_hamiltonian(&[0, 1, 2]).unwrap();
        assert_eq!(lifted.len(), 7);
        assert!(is_hamiltonian_cycle(inst.graph(), &lifted));

        let inst = instance("cyclic:8", &[0, 4]);
        let qc = hamiltonian_cycle(inst.quotient_graph(), 24).unwrap().unwrap();
        let lifted = inst.lift_hamiltonian(&qc).unwrap();
        assert_eq!(lifted.len(), 7);
        assert!(is_hamiltonian_cycle(inst.graph(), &lifted));

        let two = instance("cyclic:4", &[0, 2]);
        assert_eq!(two.lift_hamiltonian(&[0, 1]), Err(EnhancedError::NotHamiltonian));
    }

    #[test]
    fn embedded_copies() {
        let inst = instance("cyclic:4", &[0, 2]);
        let all: Vec<_> = inst.transversals().collect();
        assert_eq!(all, vec![vec![1], vec![3]]);
        assert_eq!(inst.transversal_count(), 2);
        for t in &all {
            assert!(inst.embedded_copy(t).unwrap().isomorphic);
        }
        let inst = instance("cyclic:9", &[0, 3, 6]);
        assert_eq!(inst.transversals().count(), 9);
        assert_eq!(inst.transversal_count(), 9);
        assert!(inst.transversals().all(|t| inst.embedded_copy(&t).unwrap().graph.is_complete()));
        assert!(inst.embedded_copy(&[1, 4]).is_err());
        assert!(inst.embedded_copy(&[1, 3]).is_err());

        let s3 = make_group("symmetric:3").unwrap();
        let inst = QuotientInstance::new(&s3, &Subgroup::trivial()).unwrap();
        let only: Vec<_> = inst.transversals().collect();
        assert_eq!(only, vec![vec![1, 2, 3, 4, 5]]);
        let copy = inst.embedded_copy(&only[0]).unwrap();
        assert!(copy.isomorphic);
        assert_eq!(copy.graph, enhanced_power_graph(&s3));
    }
}
