//! Group spec expressions such as `cyclic:6`, `elab:2^3` or
//! `cyclic:2 x symmetric:3`, and the JSON Cayley-table file format.

use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::builders;
use super::{FiniteGroup, GroupError, Result};

/// One factor of a group spec.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(usize),
    Dihedral(usize),
    Dicyclic(usize),
    Symmetric(usize),
    ElementaryAbelian { p: usize, k: usize },
    Table(String),
    Product(Vec<GroupSpec>),
}

impl GroupSpec {
    pub fn parse(input: &str) -> Result<Self> {
        let parts = split_product(&input.replace('×', " x "));
        if parts.iter().any(String::is_empty) {
            return Err(malformed(input, "empty factor"));
        }
        let mut parsed = parts
            .iter()
            .map(|part| parse_factor(part, input))
            .collect::<Result<Vec<_>>>()?;
        Ok(if parsed.len() == 1 { parsed.remove(0) } else { GroupSpec::Product(parsed) })
    }

    pub fn build(&self) -> Result<FiniteGroup> {
        match self {
            GroupSpec::Cyclic(n) => builders::cyclic(*n),
            GroupSpec::Dihedral(n) => builders::dihedral(*n),
            GroupSpec::Dicyclic(n) => builders::dicyclic(*n),
            GroupSpec::Symmetric(n) => builders::symmetric(*n),
            GroupSpec::ElementaryAbelian { p, k } => builders::elementary_abelian(*p, *k),
            GroupSpec::Table(path) => {
                let mut g = TableFile::load(path)?.into_group()?;
                g.set_name(self.to_string());
                Ok(g)
            }
            GroupSpec::Product(factors) => {
                let groups = factors.iter().map(GroupSpec::build).collect::<Result<Vec<_>>>()?;
                let refs: Vec<&FiniteGroup> = groups.iter().collect();
                builders::direct_product(&refs)
            }
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "cyclic:{n}"),
            GroupSpec::Dihedral(n) => write!(f, "dihedral:{n}"),
            GroupSpec::Dicyclic(n) => write!(f, "dicyclic:{n}"),
            GroupSpec::Symmetric(n) => write!(f, "symmetric:{n}"),
            GroupSpec::ElementaryAbelian { p, k } => write!(f, "elab:{p}^{k}"),
            GroupSpec::Table(path) => write!(f, "table:{path}"),
            GroupSpec::Product(factors) => {
                for (i, factor) in factors.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" x ")?;
                    }
                    write!(f, "{factor}")?;
                }
                Ok(())
            }
        }
    }
}

fn split_product(input: &str) -> Vec<String> {
    let mut parts = Vec::new();
    let mut current: Vec<&str> = Vec::new();
    for token in input.split_whitespace() {
        if token == "x" {
            parts.push(current.join(" "));
            current.clear();
        } else {
            current.push(token);
        }
    }
    parts.push(current.join(" "));
    parts
}

fn parse_factor(text: &str, whole: &str) -> Result<GroupSpec> {
    let (kind, arg) = text
        .split_once(':')
        .ok_or_else(|| malformed(whole, &format!("factor `{text}` has no `kind:` prefix")))?;
    let number = |s: &str| {
        s.trim()
            .parse::<usize>()
            .map_err(|_| malformed(whole, &format!("`{s}` is not a non-negative integer")))
    };
    match kind.trim() {
        "cyclic" => Ok(GroupSpec::Cyclic(number(arg)?)),
        "dihedral" => Ok(GroupSpec::Dihedral(number(arg)?)),
        "dicyclic" => Ok(GroupSpec::Dicyclic(number(arg)?)),
        "symmetric" => Ok(GroupSpec::Symmetric(number(arg)?)),
        "elab" => {
            let (p, k) = arg
                .split_once('^')
                .ok_or_else(|| malformed(whole, "elab expects `p^k`"))?;
            Ok(GroupSpec::ElementaryAbelian { p: number(p)?, k: number(k)? })
        }
        "table" if !arg.trim().is_empty() => Ok(GroupSpec::Table(arg.trim().to_string())),
        other => Err(malformed(whole, &format!("unknown group kind `{other}`"))),
    }
}

fn malformed(spec: &str, reason: &str) -> GroupError {
    GroupError::MalformedSpec { spec: spec.to_string(), reason: reason.to_string() }
}

/// Parses a spec expression and builds the group it names.
pub fn make_group(spec: &str) -> Result<FiniteGroup> {
    let parsed = GroupSpec::parse(spec)?;
    let mut group = parsed.build()?;
    group.set_name(parsed.to_string());
    Ok(group)
}

/// On-disk Cayley table: `{"name", "order", "labels", "table"}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableFile {
    pub name: String,
    pub order: usize,
    pub labels: Vec<String>,
    pub table: Vec<Vec<usize>>,
}

impl TableFile {
    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let err = |reason: String| GroupError::TableFile { path: path.display().to_string(), reason };
        let text = std::fs::read_to_string(path).map_err(|e| err(e.to_string()))?;
        serde_json::from_str(&text).map_err(|e| err(e.to_string()))
    }

    pub fn into_group(self) -> Result<FiniteGroup> {
        if self.table.len() != self.order || self.labels.len() != self.order {
            return Err(GroupError::TableShape { order: self.order });
        }
        FiniteGroup::from_table(self.name, self.labels, self.table)
    }

    pub fn from_group(group: &FiniteGroup) -> Self {
        TableFile {
            name: group.name().to_string(),
            order: group.order(),
            labels: group.labels().to_vec(),
            table: group.table_rows(),
        }
    }
}
