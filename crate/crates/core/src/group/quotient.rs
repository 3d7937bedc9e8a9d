use super::{FiniteGroup, Result, Subgroup};

/// The quotient `G/H` by a normal subgroup.
///
/// Cosets are numbered by their smallest member, so coset 0 is `H` itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientGroup {
    kernel: Subgroup,
    cosets: Vec<Vec<usize>>,
    coset_of: Vec<usize>,
    group: FiniteGroup,
}

impl QuotientGroup {
    pub fn new(parent: &FiniteGroup, kernel: &Subgroup) -> Result<Self> {
        kernel.require_normal(parent)?;
        let n = parent.order();
        let mut coset_of = vec![usize::MAX; n];
        let mut cosets: Vec<Vec<usize>> = Vec::new();
        for x in parent.elements() {
            if coset_of[x] != usize::MAX {
                continue;
            }
            let mut members: Vec<usize> =
                kernel.members().iter().map(|&h| parent.mul(x, h)).collect();
            members.sort_unstable();
            for &m in &members {
                coset_of[m] = cosets.len();
            }
            cosets.push(members);
        }
        let k = cosets.len();
        let mut table = Vec::with_capacity(k * k);
        for a in &cosets {
            for b in &cosets {
                table.push(coset_of[parent.mul(a[0], b[0])]);
            }
        }
        let labels = cosets
            .iter()
            .enumerate()
            .map(|(i, c)| if i == 0 { "H".to_string() } else { format!("{}H", parent.label(c[0])) })
            .collect();
        let name = format!("{}/{:?}", parent.name(), kernel.members());
        let group = FiniteGroup::from_flat(name, labels, table)?;
        Ok(QuotientGroup { kernel: kernel.clone(), cosets, coset_of, group })
    }

    /// The quotient as a group on coset indices.
    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn kernel(&self) -> &Subgroup {
        &self.kernel
    }

    pub fn cosets(&self) -> &[Vec<usize>] {
        &self.cosets
    }

    pub fn coset(&self, c: usize) -> &[usize] {
        &self.cosets[c]
    }

    #[inline]
    pub fn coset_of(&self, x: usize) -> usize {
        self.coset_of[x]
    }

    pub fn index(&self) -> usize {
        self.cosets.len()
    }
}
