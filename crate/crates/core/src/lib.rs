//! Extremal edge counts for graphs with bounded clique number and bounded
//! matching number.
//!
//! The maximum number of edges of an `n`-vertex graph with clique number at
//! most `k` and matching number at most `s` is `t(n, k)` when `n <= 2s + 1`
//! and `max(t(2s+1, k), g(n, k, s))` otherwise, where `t` counts Turán graph
//! edges and `g` counts edges of `G(n, k, s)`: `k - 1` balanced classes of
//! total size `s` joined completely to an independent set of size `n - s`.
//!
//! The crate provides the closed forms ([`formulas`]), the constructions
//! ([`graph`]), exact invariants ([`invariants`]), an exhaustive oracle
//! ([`oracle`]), Zykov symmetrization with a local search
//! ([`symmetrization`]) and the forbidden color-critical subgraph variant
//! ([`hfree`]).

pub mod error;
pub mod formulas;
pub mod graph;
pub mod hfree;
pub mod invariants;
pub mod oracle;
pub mod symmetrization;

pub use error::{Error, Result};
pub use formulas::{ex_edges, g_edges, turan_edges, ExtremalResult, Winner};
pub use graph::{make_gks, make_turan, parse_graph, write_graph, Graph, Partition, VertexSet};
