//! Element-order data and the structural tests built on it.

use std::collections::BTreeSet;

use serde::Serialize;

use super::{FiniteGroup, GroupError, Result};

pub(crate) fn is_prime(n: usize) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

pub(crate) fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Element orders `pi_e`, their prime divisors `pi`, and the orders `mu`
/// that are maximal under divisibility.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrderSpectrum {
    pub pi_e: BTreeSet<usize>,
    pub pi: BTreeSet<usize>,
    pub mu: BTreeSet<usize>,
}

pub fn order_spectrum(group: &FiniteGroup) -> OrderSpectrum {
    let pi_e: BTreeSet<usize> = group.elements().map(|g| group.order_of(g)).collect();
    let pi = pi_e.iter().flat_map(|&k| prime_divisors(k)).collect();
    let mu = pi_e
        .iter()
        .copied()
        .filter(|&a| !pi_e.iter().any(|&b| b != a && b % a == 0))
        .collect();
    OrderSpectrum { pi_e, pi, mu }
}

pub fn is_cyclic(group: &FiniteGroup) -> bool {
    group.elements().any(|g| group.order_of(g) == group.order())
}

/// The prime `p` if `|G|` is a power of `p`; `None` otherwise (including the trivial group).
pub fn p_group_prime(group: &FiniteGroup) -> Option<usize> {
    match prime_divisors(group.order()).as_slice() {
        [p] => Some(*p),
        _ => None,
    }
}

/// Nontrivial group in which every non-identity element has order 2.
pub fn is_elementary_abelian_2_group(group: &FiniteGroup) -> bool {
    group.order() > 1 && group.elements().skip(1).all(|g| group.order_of(g) == 2)
}

/// Whether some element has order equal to the full `p`-part of `|G|`.
pub fn has_cyclic_sylow(group: &FiniteGroup, p: usize) -> Result<bool> {
    if !is_prime(p) {
        return Err(GroupError::NotPrime(p));
    }
    let n = group.order();
    if !n.is_multiple_of(p) {
        return Err(GroupError::NotDivisor { p, order: n });
    }
    let mut part = 1;
    while n.is_multiple_of(part * p) {
        part *= p;
    }
    Ok(group.elements().any(|g| group.order_of(g) == part))
}

/// Whether all elements of prime order generate one and the same subgroup.
pub fn has_unique_minimal_subgroup(group: &FiniteGroup) -> Result<bool> {
    if group.order() == 1 {
        return Err(GroupError::TrivialGroup);
    }
    let mut first: Option<Vec<usize>> = None;
    for g in group.elements() {
        if !is_prime(group.order_of(g)) {
            continue;
        }
        let mut sub = group.powers(g);
        sub.sort_unstable();
        match &first {
            None => first = Some(sub),
            Some(f) if *f != sub => return Ok(false),
            Some(_) => {}
        }
    }
    Ok(true)
}

/// Noncyclic 2-group of order at least 8 with a unique minimal subgroup.
///
/// For 2-groups this is the classical characterization of the generalized
/// quaternion groups, so no isomorphism test against `dicyclic:2^k` is needed.
pub fn is_generalized_quaternion(group: &FiniteGroup) -> bool {
    let n = group.order();
    n >= 8
        && n.is_power_of_two()
        && !is_cyclic(group)
        && has_unique_minimal_subgroup(group).unwrap_or(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{make_group, QuotientGroup, Subgroup};

    fn set(xs: &[usize]) -> BTreeSet<usize> {
        xs.iter().copied().collect()
    }

    #[test]
    fn spectra() {
        let s = order_spectrum(&make_group("cyclic:12").unwrap());
        assert_eq!(s.pi_e, set(&[1, 2, 3, 4, 6, 12]));
        assert_eq!(s.pi, set(&[2, 3]));
        assert_eq!(s.mu, set(&[12]));

        let s = order_spectrum(&make_group("elab:2^2").unwrap());
        assert_eq!(s.pi_e, set(&[1, 2]));
        assert_eq!(s.mu, set(&[2]));

        let s = order_spectrum(&make_group("symmetric:3").unwrap());
        assert_eq!(s.pi_e, set(&[1, 2, 3]));
        assert_eq!(s.mu, set(&[2, 3]));
    }

    #[test]
    fn sylow() {
        assert!(has_cyclic_sylow(&make_group("cyclic:12").unwrap(), 2).unwrap());
        assert!(!has_cyclic_sylow(&make_group("elab:2^2").unwrap(), 2).unwrap());
        assert!(has_cyclic_sylow(&make_group("symmetric:3").unwrap(), 3).unwrap());
        let z6 = make_group("cyclic:6").unwrap();
        assert_eq!(has_cyclic_sylow(&z6, 4), Err(GroupError::NotPrime(4)));
        assert_eq!(has_cyclic_sylow(&z6, 5), Err(GroupError::NotDivisor { p: 5, order: 6 }));
    }

    #[test]
    fn unique_minimal() {
        assert!(has_unique_minimal_subgroup(&make_group("dicyclic:2").unwrap()).unwrap());
        assert!(!has_unique_minimal_subgroup(&make_group("elab:2^2").unwrap()).unwrap());
        assert!(has_unique_minimal_subgroup(&make_group("cyclic:9").unwrap()).unwrap());
        assert_eq!(
            has_unique_minimal_subgroup(&make_group("cyclic:1").unwrap()),
            Err(GroupError::TrivialGroup)
        );
    }

    #[test]
    fn quaternion() {
        assert!(is_generalized_quaternion(&make_group("dicyclic:2").unwrap()));
        assert!(is_generalized_quaternion(&make_group("dicyclic:4").unwrap()));
        assert!(!is_generalized_quaternion(&make_group("dicyclic:3").unwrap()));
        assert!(!is_generalized_quaternion(&make_group("cyclic:8").unwrap()));
        assert!(!is_generalized_quaternion(&make_group("dihedral:4").unwrap()));
    }

    #[test]
    fn cyclicity() {
        assert!(is_cyclic(&make_group("cyclic:7").unwrap()));
        assert!(!is_cyclic(&make_group("elab:2^2").unwrap()));
        assert!(is_cyclic(&make_group("cyclic:2 x cyclic:3").unwrap()));
        let z4 = make_group("cyclic:4").unwrap();
        let q = QuotientGroup::new(&z4, &Subgroup::new(&z4, [0, 2]).unwrap()).unwrap();
        assert!(is_cyclic(q.group()));
    }
}
