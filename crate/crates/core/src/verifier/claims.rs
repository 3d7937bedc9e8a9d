use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

/// Identifier of a registered claim.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ClaimId(u8);

impl ClaimId {
    pub const COUNT: u8 = 22;

    pub fn new(number: u8) -> Option<Self> {
        (1..=Self::COUNT).contains(&number).then_some(ClaimId(number))
    }

    pub fn number(self) -> u8 {
        self.0
    }

    pub fn all() -> impl Iterator<Item = ClaimId> {
        (1..=Self::COUNT).map(ClaimId)
    }

    pub fn claim(self) -> &'static Claim {
        &REGISTRY[self.0 as usize - 1]
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C{:02}", self.0)
    }
}

impl FromStr for ClaimId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let digits = s.trim().strip_prefix(['C', 'c']).ok_or_else(|| format!("unknown claim `{s}`"))?;
        digits
            .parse::<u8>()
            .ok()
            .and_then(ClaimId::new)
            .ok_or_else(|| format!("unknown claim `{s}`"))
    }
}

impl Serialize for ClaimId {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClaimKind {
    /// Expected to hold on every instance; a failure is a bug.
    MustPass,
    /// Evaluated neutrally; failures are recorded as evidence.
    Adjudicated,
}

impl fmt::Display for ClaimKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClaimKind::MustPass => "must-pass",
            ClaimKind::Adjudicated => "adjudicated",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Claim {
    pub id: ClaimId,
    pub kind: ClaimKind,
    pub title: &'static str,
    /// What is checked, in the notation `Q = G/H`, `X = G_H(G)`,
    /// `X* = X - e`, `P(.)` the enhanced power graph.
    pub statement: &'static str,
}

use ClaimKind::{Adjudicated, MustPass};

const fn claim(n: u8, kind: ClaimKind, title: &'static str, statement: &'static str) -> Claim {
    Claim { id: ClaimId(n), kind, title, statement }
}

static REGISTRY: [Claim; 22] = [
    claim(1, MustPass, "connectivity", "X is connected"),
    claim(2, MustPass, "coset clique", "for every coset aH != H, aH is a clique of X"),
    claim(3, MustPass, "two-coset clique propagation",
        "for distinct cosets aH, bH != H, one edge between them implies aH u bH is a clique"),
    claim(4, MustPass, "edge correspondence",
        "a ~ b in X iff aH = bH or aH ~ bH in P(Q)"),
    claim(5, MustPass, "generator non-adjacency",
        "if |aH| = |bH| and <aH> != <bH>, no generator of <aH> is adjacent to a generator of <bH> in P(Q), nor are their members in X"),
    claim(6, Adjudicated, "cycle criterion", "X has a cycle iff some |aH| >= 3"),
    claim(7, Adjudicated, "bipartite equivalence",
        "(1) X bipartite (2) P(Q) bipartite (3) X tree (4) P(Q) tree (5) Q elementary abelian 2-group (6) X star (7) P(Q) star are equivalent"),
    claim(8, MustPass, "completeness",
        "(1) X complete (2) Q cyclic (3) P(Q) complete are equivalent"),
    claim(9, Adjudicated, "apex double clique and regularity",
        "(1) X glued with a clique on H is e * (K_|G-H| + K_|H|-1) (2) G cyclic (3) X is |G-H|-regular (4) P(Q) complete (5) P(Q) is ([G:H]-1)-regular are equivalent"),
    claim(10, MustPass, "cone vertices of a coprime product",
        "for n coprime to |G|, every (e, a) with gcd(a, n) = 1 is a cone vertex of G_{H x 0}(G x Z_n)"),
    claim(11, Adjudicated, "abelian cone property",
        "G abelian, |G| = |H| p^s, gcd(|H|, p) = 1: X has a non-identity cone vertex iff the Sylow p-subgroup of G is cyclic"),
    claim(12, Adjudicated, "p-group cone property",
        "G a p-group, |H| = p: X has a non-identity cone vertex iff Q is generalized quaternion"),
    claim(13, Adjudicated, "maximal normal subgroup", "H maximal normal implies X has no non-identity cone vertex"),
    claim(14, Adjudicated, "Eulerian criterion", "X is Eulerian iff |G| is odd"),
    claim(15, Adjudicated, "degree formula",
        "for g outside H, the closed-form degree from the maximal cyclic subgroups of Q containing gH equals deg(g) in X"),
    claim(16, MustPass, "Hamiltonian lifting",
        "a Hamiltonian cycle of P(Q) lifts coset by coset to a Hamiltonian cycle of X"),
    claim(17, Adjudicated, "planarity",
        "X non-planar iff |H| >= 4, or |H| = 1 and s >= 5, or |H| = 2 and s >= 3, or |H| = 3 and s >= 2, with s the largest element order of Q"),
    claim(18, MustPass, "deleted connectivity for p-group quotients",
        "Q a p-group: X* connected iff Q has a unique minimal subgroup"),
    claim(19, MustPass, "deleted connectivity from the center", "|Pi(Z(Q))| >= 2 implies X* connected"),
    claim(20, Adjudicated, "deleted connectivity via order-p elements",
        "|Pi(Q)| >= 2 and |Z(Q)| = p^t, t >= 1: X* connected iff some non-central xH of order p is adjacent to some gH whose order is not a power of p"),
    claim(21, MustPass, "deleted power graph forests",
        "H trivial: (1) X* bipartite (2) X* forest (3) X* acyclic (4) every |g| <= 3 are equivalent"),
    claim(22, Adjudicated, "deleted quotient graph circumference",
        "with k nontrivial cosets: (1) X* is k-partite with parts meeting each nontrivial coset once (2) circumference of X* is |H| (3) omega(X*) = |H| (4) every |aH| <= 2 (5) Q elementary abelian 2-group are equivalent"),
];

/// The fixed claim registry, in id order.
pub fn claim_registry() -> &'static [Claim] {
    &REGISTRY
}

/// Parses `all`, `must-pass`, `adjudicated`, or a comma-separated id list.
pub fn parse_claim_selector(selector: &str) -> Result<Vec<ClaimId>, String> {
    let pick = |kind: ClaimKind| REGISTRY.iter().filter(|c| c.kind == kind).map(|c| c.id).collect();
    match selector.trim() {
        "all" => Ok(ClaimId::all().collect()),
        "must-pass" => Ok(pick(MustPass)),
        "adjudicated" => Ok(pick(Adjudicated)),
        list => {
            let mut ids = list.split(',').map(str::parse).collect::<Result<Vec<ClaimId>, _>>()?;
            ids.sort_unstable();
            ids.dedup();
            Ok(ids)
        }
    }
}
