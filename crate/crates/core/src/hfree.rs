//! Forbidden color-critical subgraphs: chromatic number, criticality,
//! subgraph containment and the brute-force comparison against `g(n, k, s)`.

use std::fmt;

use crate::error::{check_capacity, invalid, Result};
use crate::formulas::g_edges;
use crate::graph::Graph;
use crate::invariants::clique_number;
use crate::oracle::hfree_oracle_with;

pub const MAX_CHROMATIC_VERTICES: usize = 16;
pub const MAX_PATTERN_VERTICES: usize = 8;
pub const MAX_HOST_VERTICES: usize = 64;

fn masks_of(g: &Graph) -> Vec<u64> {
    g.adjacency_masks().expect("caller checked n <= 64")
}

fn colorable(adj: &[u64], order: &[usize], colors: usize) -> bool {
    fn assign(
        adj: &[u64],
        order: &[usize],
        classes: &mut Vec<u64>,
        colors: usize,
        i: usize,
    ) -> bool {
        let Some(&v) = order.get(i) else {
            return true;
        };
        for c in 0..classes.len() {
            if classes[c] & adj[v] == 0 {
                classes[c] |= 1 << v;
                if assign(adj, order, classes, colors, i + 1) {
                    return true;
                }
                classes[c] &= !(1 << v);
            }
        }
        // Opening a new class: all empty classes are interchangeable.
        if classes.len() < colors {
            classes.push(1 << v);
            if assign(adj, order, classes, colors, i + 1) {
                return true;
            }
            classes.pop();
        }
        false
    }
    assign(adj, order, &mut Vec::with_capacity(colors), colors, 0)
}

/// Exact chromatic number by backtracking over `k = max(ω, 1), ω + 1, ...`,
/// coloring vertices in decreasing degree order. `n <= 16`.
pub fn chromatic_number(g: &Graph) -> Result<usize> {
    let n = g.n();
    check_capacity("exact coloring", MAX_CHROMATIC_VERTICES, n)?;
    if n == 0 {
        return Ok(0);
    }
    let adj = masks_of(g);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let lower = clique_number(g)?.0.max(1);
    Ok((lower..=n)
        .find(|&k| colorable(&adj, &order, k))
        .expect("n colors always suffice"))
}

/// First edge, in lexicographic order, whose deletion lowers the chromatic
/// number; `None` when `h` is not color-critical.
pub fn is_color_critical(h: &Graph) -> Result<Option<(usize, usize)>> {
    if h.edge_count() == 0 {
        return Err(invalid("color-criticality needs at least one edge"));
    }
    let chi = chromatic_number(h)?;
    for (u, v) in h.edges() {
        let mut smaller = h.clone();
        smaller.remove_edge(u, v);
        if chromatic_number(&smaller)? < chi {
            return Ok(Some((u, v)));
        }
    }
    Ok(None)
}

/// A small graph prepared for embedding searches: vertices in a connected
/// search order, each with the mask of earlier positions it must be
/// adjacent to.
#[derive(Clone, Debug)]
pub struct Pattern {
    n: usize,
    order: Vec<usize>,
    degree: Vec<u32>,
    back: Vec<u64>,
    edges: u32,
    bipartite: bool,
}

/// Two-colors the graph given by adjacency masks, if possible.
fn is_bipartite(adj: &[u64]) -> bool {
    let n = adj.len();
    let mut side = vec![None::<bool>; n];
    for start in 0..n {
        if side[start].is_some() {
            continue;
        }
        side[start] = Some(false);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            let here = side[v].expect("colored before push");
            let mut nbrs = adj[v];
            while nbrs != 0 {
                let w = nbrs.trailing_zeros() as usize;
                nbrs &= nbrs - 1;
                match side[w] {
                    Some(c) if c == here => return false,
                    Some(_) => {}
                    None => {
                        side[w] = Some(!here);
                        stack.push(w);
                    }
                }
            }
        }
    }
    true
}

impl Pattern {
    pub fn new(h: &Graph) -> Result<Self> {
        let n = h.n();
        check_capacity("forbidden subgraph", MAX_PATTERN_VERTICES, n)?;
        let adj = masks_of(h);
        let degree: Vec<u32> = adj.iter().map(|m| m.count_ones()).collect();
        let mut order = Vec::with_capacity(n);
        let mut placed = 0u64;
        while order.len() < n {
            // Most already-placed neighbors first, then highest degree.
            let next = (0..n)
                .filter(|&v| placed >> v & 1 == 0)
                .max_by_key(|&v| {
                    (
                        (adj[v] & placed).count_ones(),
                        degree[v],
                        std::cmp::Reverse(v),
                    )
                })
                .expect("an unplaced vertex remains");
            placed |= 1 << next;
            order.push(next);
        }
        let back = order
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                (0..i)
                    .filter(|&j| adj[v] >> order[j] & 1 == 1)
                    .fold(0u64, |acc, j| acc | 1 << j)
            })
            .collect();
        Ok(Pattern {
            n,
            order,
            degree,
            back,
            edges: h.edge_count() as u32,
            bipartite: is_bipartite(&adj),
        })
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.back[1..].iter().all(|&b| b != 0)
    }

    /// True iff the host graph given by adjacency masks contains this
    /// pattern as a (not necessarily induced) subgraph.
    pub fn embeds_in(&self, host: &[u64]) -> bool {
        if self.n > host.len() {
            return false;
        }
        let host_degree: Vec<u32> = host.iter().map(|m| m.count_ones()).collect();
        if host_degree.iter().sum::<u32>() < 2 * self.edges {
            return false;
        }
        // An embedding is a homomorphism, and bipartite hosts only admit
        // bipartite patterns.
        if !self.bipartite && is_bipartite(host) {
            return false;
        }
        let all = if host.len() == 64 {
            u64::MAX
        } else {
            (1u64 << host.len()) - 1
        };
        let mut image = [0usize; MAX_PATTERN_VERTICES];
        self.extend(host, &host_degree, all, 0, &mut image)
    }

    fn extend(
        &self,
        host: &[u64],
        host_degree: &[u32],
        free: u64,
        pos: usize,
        image: &mut [usize],
    ) -> bool {
        if pos == self.n {
            return true;
        }
        let need = self.degree[self.order[pos]];
        let mut cand = free;
        let mut back = self.back[pos];
        while back != 0 {
            let j = back.trailing_zeros() as usize;
            back &= back - 1;
            cand &= host[image[j]];
        }
        while cand != 0 {
            let x = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            if host_degree[x] < need {
                continue;
            }
            image[pos] = x;
            if self.extend(host, host_degree, free & !(1 << x), pos + 1, image) {
                return true;
            }
        }
        false
    }
}

/// True iff `g` has a subgraph isomorphic to `h`. `|V(h)| <= 8`, `|V(g)| <= 64`.
pub fn contains_subgraph(g: &Graph, h: &Graph) -> Result<bool> {
    check_capacity("host graph", MAX_HOST_VERTICES, g.n())?;
    let pattern = Pattern::new(h)?;
    Ok(pattern.embeds_in(&masks_of(g)))
}

/// A forbidden graph with its chromatic data.
#[derive(Clone, Debug)]
pub struct ForbiddenPattern {
    pub h: Graph,
    pub chi: usize,
    /// Edge whose deletion lowers `chi`, if `h` is color-critical.
    pub critical_edge: Option<(usize, usize)>,
}

impl ForbiddenPattern {
    pub fn new(h: &Graph) -> Result<Self> {
        let chi = chromatic_number(h)?;
        let critical_edge = is_color_critical(h)?;
        Ok(ForbiddenPattern {
            h: h.clone(),
            chi,
            critical_edge,
        })
    }

    pub fn critical(&self) -> bool {
        self.critical_edge.is_some()
    }

    /// Clique-analog bound `chi - 1`.
    pub fn k(&self) -> usize {
        self.chi.saturating_sub(1)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Comparison {
    Equal,
    /// Expected below the asymptotic regime.
    OracleLarger,
    /// Impossible: `G(n, k, s)` itself is `H`-free.
    OracleSmaller,
}

impl Comparison {
    pub fn as_str(self) -> &'static str {
        match self {
            Comparison::Equal => "EQUAL",
            Comparison::OracleLarger => "ORACLE_LARGER",
            Comparison::OracleSmaller => "ORACLE_SMALLER",
        }
    }
}

impl fmt::Display for Comparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug)]
pub struct PropositionReport {
    pub chi: usize,
    pub k: usize,
    pub critical_edge: (usize, usize),
    pub n: usize,
    pub s: usize,
    pub oracle_value: u64,
    pub oracle_witness: Graph,
    pub g_value: u64,
    pub comparison: Comparison,
}

/// Brute-force maximum over `H`-free graphs with matching number at most `s`
/// against `g(n, χ(H) - 1, s)`.
pub fn verify_proposition_with(
    h: &Graph,
    n: usize,
    s: usize,
    threads: usize,
) -> Result<PropositionReport> {
    let pattern = ForbiddenPattern::new(h)?;
    let Some(critical_edge) = pattern.critical_edge else {
        return Err(invalid("forbidden graph is not color-critical"));
    };
    if pattern.chi <= 2 {
        return Err(invalid(format!(
            "forbidden graph needs chromatic number > 2, got {}",
            pattern.chi
        )));
    }
    let k = pattern.k();
    let g_value = g_edges(n, k, s)?;
    let (oracle_value, mask) = hfree_oracle_with(n, h, s, threads)?;
    let comparison = match oracle_value.cmp(&g_value) {
        std::cmp::Ordering::Equal => Comparison::Equal,
        std::cmp::Ordering::Greater => Comparison::OracleLarger,
        std::cmp::Ordering::Less => Comparison::OracleSmaller,
    };
    Ok(PropositionReport {
        chi: pattern.chi,
        k,
        critical_edge,
        n,
        s,
        oracle_value,
        oracle_witness: crate::oracle::graph_from_mask(n, mask),
        g_value,
        comparison,
    })
}

pub fn verify_proposition(h: &Graph, n: usize, s: usize) -> Result<PropositionReport> {
    verify_proposition_with(h, n, s, 1)
}
