//! Finite groups given by explicit multiplication tables.
//!
//! Every group keeps its identity at index 0. Elements are plain `usize`
//! indices into the table; labels are only for display and export.

mod builders;
mod quotient;
mod spectrum;
mod spec;
mod subgroup;

pub use builders::{cyclic, dicyclic, dihedral, direct_product, elementary_abelian, symmetric};
pub use quotient::QuotientGroup;
pub use spec::{make_group, GroupSpec, TableFile};
pub use spectrum::{
    has_cyclic_sylow, has_unique_minimal_subgroup, is_cyclic, is_elementary_abelian_2_group,
    is_generalized_quaternion, p_group_prime, order_spectrum, OrderSpectrum,
};
pub use subgroup::{
    all_subgroups, center, cyclic_subgroup, generators_of, named_subgroup, normal_subgroups,
    Subgroup, DEFAULT_ENUMERATION_BOUND,
};

pub(crate) use spectrum::{is_prime, prime_divisors};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("malformed group spec `{spec}`: {reason}")]
    MalformedSpec { spec: String, reason: String },
    #[error("table is not a {order}x{order} array")]
    TableShape { order: usize },
    #[error("table entry {value} at ({row},{col}) is out of range")]
    EntryOutOfRange { row: usize, col: usize, value: usize },
    #[error("table has no identity element")]
    NoIdentity,
    #[error("row {0} of the table is not a permutation")]
    RowNotPermutation(usize),
    #[error("column {0} of the table is not a permutation")]
    ColumnNotPermutation(usize),
    #[error("associativity fails at ({0},{1},{2})")]
    NotAssociative(usize, usize, usize),
    #[error("element {0} has no inverse")]
    NoInverse(usize),
    #[error("element index {index} out of range for group of order {order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("{0:?} is not a subgroup: {1}")]
    NotSubgroup(Vec<usize>, String),
    #[error("subgroup is not normal: {g}*{h}*{g}^-1 leaves the subgroup")]
    NotNormal { g: usize, h: usize },
    #[error("subgroup enumeration is bounded at order {bound}, group has order {order}")]
    EnumerationBound { order: usize, bound: usize },
    #[error("{0} is not a prime")]
    NotPrime(usize),
    #[error("{p} does not divide the group order {order}")]
    NotDivisor { p: usize, order: usize },
    #[error("the trivial group has no minimal subgroups")]
    TrivialGroup,
    #[error("unknown subgroup selector `{0}`")]
    UnknownSelector(String),
    #[error("cannot read table file {path}: {reason}")]
    TableFile { path: String, reason: String },
}

pub type Result<T, E = GroupError> = std::result::Result<T, E>;

/// A finite group stored as its Cayley table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    table: Vec<usize>,
    labels: Vec<String>,
    inverses: Vec<usize>,
    orders: Vec<usize>,
}

impl FiniteGroup {
    /// Builds a group from a full table, validating every group axiom.
    ///
    /// If the identity is not at index 0 it is swapped there and the labels
    /// follow it.
    pub fn from_table(
        name: impl Into<String>,
        labels: Vec<String>,
        table: Vec<Vec<usize>>,
    ) -> Result<Self> {
        let n = table.len();
        if n == 0 || labels.len() != n || table.iter().any(|row| row.len() != n) {
            return Err(GroupError::TableShape { order: labels.len().max(n) });
        }
        for (i, row) in table.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(GroupError::EntryOutOfRange { row: i, col: j, value: v });
                }
            }
        }
        let identity = (0..n)
            .find(|&i| (0..n).all(|j| table[i][j] == j && table[j][i] == j))
            .ok_or(GroupError::NoIdentity)?;

        let (labels, flat) = if identity == 0 {
            (labels, table.into_iter().flatten().collect())
        } else {
            // swap identity <-> 0 everywhere
            let relabel = |x: usize| match x {
                0 => identity,
                x if x == identity => 0,
                x => x,
            };
            let mut flat = vec![0; n * n];
            for i in 0..n {
                for j in 0..n {
                    flat[relabel(i) * n + relabel(j)] = relabel(table[i][j]);
                }
            }
            let mut labels = labels;
            labels.swap(0, identity);
            (labels, flat)
        };
        Self::from_flat(name.into(), labels, flat)
    }

    /// Constructor for tables whose identity is already at 0.
    pub(crate) fn from_flat(
        name: String,
        labels: Vec<String>,
        table: Vec<usize>,
    ) -> Result<Self> {
        let n = labels.len();
        if table.len() != n * n || n == 0 {
            return Err(GroupError::TableShape { order: n });
        }
        if (0..n).any(|j| table[j] != j || table[j * n] != j) {
            return Err(GroupError::NoIdentity);
        }
        let mut seen = vec![usize::MAX; n];
        for i in 0..n {
            for j in 0..n {
                let v = table[i * n + j];
                if v >= n {
                    return Err(GroupError::EntryOutOfRange { row: i, col: j, value: v });
                }
                if seen[v] == i {
                    return Err(GroupError::RowNotPermutation(i));
                }
                seen[v] = i;
            }
        }
        seen.fill(usize::MAX);
        for j in 0..n {
            for i in 0..n {
                let v = table[i * n + j];
                if seen[v] == j {
                    return Err(GroupError::ColumnNotPermutation(j));
                }
                seen[v] = j;
            }
        }
        let mut inverses = vec![0; n];
        for (i, inv) in inverses.iter_mut().enumerate() {
            *inv = (0..n)
                .find(|&j| table[i * n + j] == 0)
                .ok_or(GroupError::NoInverse(i))?;
        }
        for i in 0..n {
            for j in 0..n {
                let ij = table[i * n + j];
                for k in 0..n {
                    if table[ij * n + k] != table[i * n + table[j * n + k]] {
                        return Err(GroupError::NotAssociative(i, j, k));
                    }
                }
            }
        }
        let mut orders = vec![1; n];
        for (g, ord) in orders.iter_mut().enumerate() {
            let mut x = g;
            while x != 0 {
                x = table[x * n + g];
                *ord += 1;
            }
        }
        Ok(Self { name, order: n, table, labels, inverses, orders })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub(crate) fn set_name(&mut self, name: String) {
        self.name = name;
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn pow(&self, a: usize, k: usize) -> usize {
        (0..k % self.orders[a]).fold(0, |acc, _| self.mul(acc, a))
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn row(&self, a: usize) -> &[usize] {
        &self.table[a * self.order..(a + 1) * self.order]
    }

    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(<[usize]>::to_vec).collect()
    }

    /// Order of `g`, or an error for an out-of-range index.
    pub fn element_order(&self, g: usize) -> Result<usize> {
        self.check_index(g)?;
        Ok(self.orders[g])
    }

    /// Unchecked variant used by hot loops.
    #[inline]
    pub(crate) fn order_of(&self, g: usize) -> usize {
        self.orders[g]
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn check_index(&self, g: usize) -> Result<()> {
        if g < self.order {
            Ok(())
        } else {
            Err(GroupError::IndexOutOfRange { index: g, order: self.order })
        }
    }

    /// Powers `e, g, g^2, ...` up to the order of `g`.
    pub fn powers(&self, g: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.orders[g]);
        let mut x = 0;
        loop {
            out.push(x);
            x = self.mul(x, g);
            if x == 0 {
                break;
            }
        }
        out
    }
}
