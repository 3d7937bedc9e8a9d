//! Enhanced power graphs and enhanced quotient graphs of finite groups.
//!
//! The crate is organised bottom-up:
//!
//! * [`group`]: finite groups as Cayley tables, subgroups, quotients and
//!   order statistics.
//! * [`graph`]: simple labelled graphs with exact (size-gated) decision
//!   procedures: cliques, Hamiltonian cycles, circumference, planarity,
//!   Euler circuits.
//! * [`enhanced`]: the enhanced power graph `G(G)`, the enhanced quotient
//!   graph `G_H(G)`, Cayley graphs and the closed-form quantities used when
//!   adjudicating claims about them.
//! * [`verifier`]: a registry of claims about these graphs, evaluated on
//!   catalogs of `(G, H)` pairs with counterexample witnesses.

pub mod enhanced;
pub mod graph;
pub mod group;
pub mod verifier;

pub use enhanced::{enhanced_power_graph, enhanced_quotient_graph, QuotientInstance};
pub use graph::{Gates, GraphProfile, LabeledGraph, Skipped};
pub use group::{make_group, FiniteGroup, GroupError, QuotientGroup, Subgroup};
