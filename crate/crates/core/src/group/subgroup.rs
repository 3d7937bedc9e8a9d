use std::collections::BTreeSet;

use super::builders::{is_even_permutation, permutations};
use super::{FiniteGroup, GroupError, GroupSpec, Result};

/// Groups above this order need explicitly supplied subgroups.
pub const DEFAULT_ENUMERATION_BOUND: usize = 64;

/// A subgroup of some parent group, stored as its sorted member indices.
///
/// The parent is not held by reference; every operation that needs it takes
/// the parent explicitly.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgroup {
    members: Vec<usize>,
    normal: bool,
}

impl Subgroup {
    /// Validates `members` as a subgroup of `group` and records normality.
    pub fn new(group: &FiniteGroup, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let set: BTreeSet<usize> = members.into_iter().collect();
        let members: Vec<usize> = set.into_iter().collect();
        for &m in &members {
            group.check_index(m)?;
        }
        let mut inside = vec![false; group.order()];
        for &m in &members {
            inside[m] = true;
        }
        if !inside[0] {
            return Err(GroupError::NotSubgroup(members, "identity missing".into()));
        }
        for &a in &members {
            if !inside[group.inv(a)] {
                return Err(GroupError::NotSubgroup(members, format!("inverse of {a} missing")));
            }
            for &b in &members {
                if !inside[group.mul(a, b)] {
                    return Err(GroupError::NotSubgroup(
                        members.clone(),
                        format!("product of {a} and {b} missing"),
                    ));
                }
            }
        }
        let normal = conjugation_violation(group, &inside, &members).is_none();
        Ok(Subgroup { members, normal })
    }

    pub(crate) fn from_mask(group: &FiniteGroup, inside: &[bool]) -> Self {
        let members: Vec<usize> = (0..group.order()).filter(|&i| inside[i]).collect();
        let normal = conjugation_violation(group, inside, &members).is_none();
        Subgroup { members, normal }
    }

    pub fn trivial() -> Self {
        Subgroup { members: vec![0], normal: true }
    }

    pub fn whole(group: &FiniteGroup) -> Self {
        Subgroup { members: group.elements().collect(), normal: true }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn is_normal(&self) -> bool {
        self.normal
    }

    pub fn contains(&self, g: usize) -> bool {
        self.members.binary_search(&g).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    /// Returns `Ok` if normal, otherwise the first `(g, h)` with `ghg^-1` outside.
    pub fn require_normal(&self, group: &FiniteGroup) -> Result<()> {
        let mut inside = vec![false; group.order()];
        for &m in &self.members {
            inside[m] = true;
        }
        match conjugation_violation(group, &inside, &self.members) {
            None => Ok(()),
            Some((g, h)) => Err(GroupError::NotNormal { g, h }),
        }
    }
}

fn conjugation_violation(
    group: &FiniteGroup,
    inside: &[bool],
    members: &[usize],
) -> Option<(usize, usize)> {
    for g in group.elements() {
        let gi = group.inv(g);
        for &h in members {
            if !inside[group.mul(group.mul(g, h), gi)] {
                return Some((g, h));
            }
        }
    }
    None
}

/// The cyclic subgroup `<g>`.
pub fn cyclic_subgroup(group: &FiniteGroup, g: usize) -> Result<Subgroup> {
    group.check_index(g)?;
    Subgroup::new(group, group.powers(g))
}

/// Elements `x` of `<g>` with `<x> = <g>`, ascending.
pub fn generators_of(group: &FiniteGroup, g: usize) -> Result<Vec<usize>> {
    group.check_index(g)?;
    let n = group.order_of(g);
    let mut gens: Vec<usize> = group
        .powers(g)
        .into_iter()
        .enumerate()
        .filter(|&(k, _)| num_integer::gcd(k, n) == 1 || n == 1)
        .map(|(_, x)| x)
        .collect();
    gens.sort_unstable();
    Ok(gens)
}

/// Smallest subgroup containing `gens`.
pub(crate) fn closure(group: &FiniteGroup, gens: &[usize]) -> Vec<bool> {
    let mut inside = vec![false; group.order()];
    inside[0] = true;
    let mut queue = vec![0];
    while let Some(x) = queue.pop() {
        for &g in gens {
            let y = group.mul(x, g);
            if !inside[y] {
                inside[y] = true;
                queue.push(y);
            }
        }
    }
    inside
}

fn mask_key(mask: &[bool]) -> Vec<u64> {
    let mut key = vec![0u64; mask.len().div_ceil(64)];
    for (i, &b) in mask.iter().enumerate() {
        if b {
            key[i / 64] |= 1 << (i % 64);
        }
    }
    key
}

/// Every subgroup of `group`, sorted by `(order, members)`.
///
/// Subgroups are found by joining cyclic subgroups until no new subgroup
/// appears; every subgroup is a join of the cyclic subgroups it contains.
pub fn all_subgroups(group: &FiniteGroup, bound: usize) -> Result<Vec<Subgroup>> {
    if group.order() > bound {
        return Err(GroupError::EnumerationBound { order: group.order(), bound });
    }
    // one generator per distinct cyclic subgroup
    let mut cyclic_gens = Vec::new();
    let mut seen = BTreeSet::new();
    for g in group.elements() {
        if seen.insert(mask_key(&closure(group, &[g]))) {
            cyclic_gens.push(g);
        }
    }
    let mut known: BTreeSet<Vec<u64>> = BTreeSet::new();
    let mut frontier: Vec<(Vec<bool>, Vec<usize>)> = Vec::new();
    for &g in &cyclic_gens {
        let mask = closure(group, &[g]);
        known.insert(mask_key(&mask));
        frontier.push((mask, vec![g]));
    }
    let mut all: Vec<Vec<bool>> = frontier.iter().map(|(m, _)| m.clone()).collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for (mask, gens) in &frontier {
            for &c in &cyclic_gens {
                if mask[c] {
                    continue;
                }
                let mut joined = gens.clone();
                joined.push(c);
                let m = closure(group, &joined);
                if known.insert(mask_key(&m)) {
                    all.push(m.clone());
                    next.push((m, joined));
                }
            }
        }
        frontier = next;
    }
    let mut subgroups: Vec<Subgroup> = all.iter().map(|m| Subgroup::from_mask(group, m)).collect();
    subgroups.sort_by(|a, b| (a.order(), &a.members).cmp(&(b.order(), &b.members)));
    Ok(subgroups)
}

/// Normal subgroups of `group` (including the trivial and whole group).
pub fn normal_subgroups(group: &FiniteGroup, bound: usize) -> Result<Vec<Subgroup>> {
    Ok(all_subgroups(group, bound)?.into_iter().filter(Subgroup::is_normal).collect())
}

/// The center `Z(G)`.
pub fn center(group: &FiniteGroup) -> Subgroup {
    let inside: Vec<bool> = group
        .elements()
        .map(|z| group.elements().all(|g| group.mul(z, g) == group.mul(g, z)))
        .collect();
    Subgroup::from_mask(group, &inside)
}

/// Resolves a subgroup selector: a comma-separated index list, or one of the
/// names `trivial`, `whole`, `center`, `alternating` (symmetric groups only).
/// Without an explicit `spec` the group's name is parsed as one.
pub fn named_subgroup(group: &FiniteGroup, spec: Option<&GroupSpec>, selector: &str) -> Result<Subgroup> {
    let selector = selector.trim();
    match selector {
        "trivial" => Ok(Subgroup::trivial()),
        "whole" => Ok(Subgroup::whole(group)),
        "center" => Ok(center(group)),
        "alternating" => match spec.cloned().or_else(|| GroupSpec::parse(group.name()).ok()) {
            Some(GroupSpec::Symmetric(n)) => {
                let even = permutations(n)
                    .iter()
                    .enumerate()
                    .filter(|(_, p)| is_even_permutation(p))
                    .map(|(i, _)| i)
                    .collect::<Vec<_>>();
                Subgroup::new(group, even)
            }
            _ => Err(GroupError::UnknownSelector(
                "alternating (only defined for symmetric:n)".into(),
            )),
        },
        list if list.chars().next().is_some_and(|c| c.is_ascii_digit()) => {
            let members = list
                .split(',')
                .map(|s| s.trim().parse::<usize>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|_| GroupError::UnknownSelector(list.to_string()))?;
            Subgroup::new(group, members)
        }
        other => Err(GroupError::UnknownSelector(other.to_string())),
    }
}
