use crate::group::{make_group, normal_subgroups, FiniteGroup, GroupError, Subgroup, DEFAULT_ENUMERATION_BOUND};

/// Largest group order the default catalog supports.
pub const MAX_CATALOG_ORDER: usize = DEFAULT_ENUMERATION_BOUND;

/// A group together with the proper normal subgroups it is paired with.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub spec: String,
    pub group: FiniteGroup,
    pub subgroups: Vec<Subgroup>,
}

impl CatalogEntry {
    /// Pairs `group` with all of its proper normal subgroups.
    pub fn with_all_normal(spec: impl Into<String>, group: FiniteGroup) -> Result<Self, GroupError> {
        let subgroups = normal_subgroups(&group, DEFAULT_ENUMERATION_BOUND.max(group.order()))?
            .into_iter()
            .filter(|h| h.order() < group.order())
            .collect();
        Ok(CatalogEntry { spec: spec.into(), group, subgroups })
    }
}

/// Group specs of the default catalog, with their orders, in catalog order:
/// the single-factor families first, then pairwise products.
pub fn catalog_specs(max_order: usize) -> Vec<(String, usize)> {
    let mut base: Vec<(String, usize)> = Vec::new();
    base.extend((1..=max_order).map(|n| (format!("cyclic:{n}"), n)));
    base.extend((3..).take_while(|n| 2 * n <= max_order).map(|n| (format!("dihedral:{n}"), 2 * n)));
    base.extend((2..).take_while(|n| 4 * n <= max_order).map(|n| (format!("dicyclic:{n}"), 4 * n)));
    base.extend([(3, 6), (4, 24)].into_iter().filter(|&(_, o)| o <= max_order).map(|(n, o)| (format!("symmetric:{n}"), o)));
    for p in [2usize, 3] {
        base.extend(
            (2u32..)
                .map(|k| (k, p.pow(k)))
                .take_while(|&(_, o)| o <= max_order)
                .map(|(k, o)| (format!("elab:{p}^{k}"), o)),
        );
    }
    let factors: Vec<&(String, usize)> = base.iter().filter(|(_, o)| *o > 1).collect();
    let mut products = Vec::new();
    for (i, a) in factors.iter().enumerate() {
        for b in &factors[i..] {
            if a.1 * b.1 <= max_order {
                products.push((format!("{} x {}", a.0, b.0), a.1 * b.1));
            }
        }
    }
    base.extend(products);
    base
}

/// The default catalog up to `max_order`, each group paired with all of its
/// proper normal subgroups.
pub fn default_catalog(max_order: usize) -> Result<Vec<CatalogEntry>, GroupError> {
    if max_order > MAX_CATALOG_ORDER {
        return Err(GroupError::EnumerationBound { order: max_order, bound: MAX_CATALOG_ORDER });
    }
    catalog_specs(max_order)
        .into_iter()
        .map(|(spec, _)| CatalogEntry::with_all_normal(spec.clone(), make_group(&spec)?))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_eight_catalog() {
        let specs: Vec<String> = catalog_specs(8).into_iter().map(|(s, _)| s).collect();
        for expected in [
            "cyclic:1", "cyclic:8", "elab:2^2", "elab:2^3", "dihedral:3", "dihedral:4", "dicyclic:2", "symmetric:3",
            "cyclic:2 x cyclic:2", "cyclic:2 x cyclic:4", "cyclic:2 x elab:2^2", "cyclic:2 x cyclic:3",
        ] {
            assert!(specs.iter().any(|s| s == expected), "missing {expected}");
        }
        assert!(!specs.iter().any(|s| s.contains("cyclic:1 x")));
        assert!(!catalog_specs(4).iter().any(|(s, _)| s == "symmetric:4"));
    }

    #[test]
    fn subgroups_are_proper_and_normal() {
        for entry in default_catalog(8).unwrap() {
            assert_eq!(entry.group.name(), entry.spec);
            for h in &entry.subgroups {
                assert!(h.is_normal());
                assert!(h.order() < entry.group.order());
            }
        }
    }

    #[test]
    fn bound_is_enforced() {
        assert!(default_catalog(65).is_err());
    }
}
