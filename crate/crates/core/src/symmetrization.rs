//! Zykov symmetrization and a constraint-preserving local search.
//!
//! Replacing the neighborhood of `u` by that of a non-adjacent `v` never
//! raises the clique number: a new clique through `u` misses `v`, so swapping
//! `u` for `v` gives a clique of the same size in the original graph. When
//! both vertices lie in a Tutte–Berge set `B`, the components of `G - B` do
//! not change, so the matching bound certified by `B` survives too.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::fmt::Write as _;

use crate::error::{invalid, Error, Result};
use crate::formulas::ex_edges;
use crate::graph::{make_gks, Graph};
use crate::invariants::{
    clique_number, find_clique_in, gallai_edmonds, matching_number, TutteBergeWitness,
};

/// `G'` with `N'(u) = N(v)`; every other adjacency is unchanged except for
/// edges at `u`.
pub fn replace_neighborhood(g: &Graph, u: usize, v: usize) -> Result<Graph> {
    if u >= g.n() || v >= g.n() {
        return Err(invalid(format!("vertex out of range for n={}", g.n())));
    }
    if u == v {
        return Err(Error::InvalidMove(format!("u = v = {u}")));
    }
    if g.has_edge(u, v) {
        return Err(Error::InvalidMove(format!("{u} and {v} are adjacent")));
    }
    let mut out = g.clone();
    out.set_neighborhood(u, g.neighbors(v));
    Ok(out)
}

/// Recomputes `ω` on both sides of [`replace_neighborhood`] and reports
/// whether it did not increase.
pub fn clique_safe(g: &Graph, u: usize, v: usize) -> Result<bool> {
    let after = replace_neighborhood(g, u, v)?;
    Ok(clique_number(&after)?.0 <= clique_number(g)?.0)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Move {
    /// `N(u) := N(v)`.
    Replace {
        u: usize,
        v: usize,
    },
    /// `N(v) := N(u)`, then `N(w) := N(u)`, for non-adjacent `uv`, `uw` and adjacent `vw`.
    DoubleReplace {
        u: usize,
        v: usize,
        w: usize,
    },
    AddEdge {
        u: usize,
        v: usize,
    },
    RemoveEdge {
        u: usize,
        v: usize,
    },
}

fn first_single_move(g: &Graph, set: &[usize]) -> Option<(usize, usize)> {
    for &u in set {
        for &v in set {
            if u != v && !g.has_edge(u, v) && g.degree(u) < g.degree(v) {
                return Some((u, v));
            }
        }
    }
    None
}

fn first_transitivity_violation(g: &Graph, set: &[usize]) -> Option<(usize, usize, usize)> {
    for &u in set {
        for (i, &v) in set.iter().enumerate() {
            if v == u || g.has_edge(u, v) {
                continue;
            }
            for &w in &set[i + 1..] {
                if w != u && !g.has_edge(u, w) && g.has_edge(v, w) {
                    return Some((u, v, w));
                }
            }
        }
    }
    None
}

fn symmetrize_traced(g: &Graph, set: &[usize], history: &mut Vec<Move>) -> Graph {
    let mut g = g.clone();
    loop {
        if let Some((u, v)) = first_single_move(&g, set) {
            g.set_neighborhood(u, &g.neighbors(v).clone());
            history.push(Move::Replace { u, v });
            continue;
        }
        // All non-adjacent pairs in B now have equal degree, so the double
        // replacement gains at least one edge.
        if let Some((u, v, w)) = first_transitivity_violation(&g, set) {
            let target = g.neighbors(u).clone();
            g.set_neighborhood(v, &target);
            g.set_neighborhood(w, &target);
            history.push(Move::DoubleReplace { u, v, w });
            continue;
        }
        return g;
    }
}

/// Symmetrizes the vertices of `witness.set` to a fixpoint: repeatedly
/// replaces the neighborhood of a lower-degree vertex by that of a
/// non-adjacent higher-degree one, and resolves intransitive non-adjacency
/// with the double replacement. Afterwards non-adjacency on `B` is an
/// equivalence relation, the edge count has not decreased, and `B` remains a
/// witness with the same bound.
pub fn symmetrize_within(g: &Graph, witness: &TutteBergeWitness) -> Result<Graph> {
    if !witness.is_valid_for(g) {
        return Err(invalid("witness does not describe the graph"));
    }
    Ok(symmetrize_traced(g, &witness.set, &mut Vec::new()))
}

/// Search state: the graph always satisfies `ω <= k` and `ν <= s`.
#[derive(Clone, Debug)]
pub struct SearchState {
    pub graph: Graph,
    pub k: usize,
    pub s: usize,
    /// Gallai–Edmonds witness for the final graph.
    pub witness_b: Option<TutteBergeWitness>,
    pub history: Vec<Move>,
}

impl SearchState {
    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }
}

/// Budget and schedule for [`local_search_with`].
#[derive(Clone, Debug)]
pub struct SearchConfig {
    pub restarts: usize,
    /// Plateau rounds per restart.
    pub iters: usize,
    /// Random re-additions after each deletion; `None` means `2n`.
    pub readd_attempts: Option<usize>,
    /// Stop as soon as a graph meets the closed-form upper bound.
    pub stop_at_bound: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            restarts: 50,
            iters: DEFAULT_ITERS,
            readd_attempts: None,
            stop_at_bound: true,
        }
    }
}

pub const DEFAULT_ITERS: usize = 40;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RestartSummary {
    pub restart_id: usize,
    pub seed: u64,
    pub best_edges: usize,
}

#[derive(Clone, Debug)]
pub struct SearchReport {
    pub best: SearchState,
    pub restarts: Vec<RestartSummary>,
    pub formula_value: u64,
}

pub const SEARCH_CSV_HEADER: &str = "restart_id,seed,best_edges,formula_value,match";

impl SearchReport {
    pub fn reached_formula(&self) -> bool {
        self.best.edge_count() as u64 == self.formula_value
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{SEARCH_CSV_HEADER}");
        for r in &self.restarts {
            let _ = writeln!(
                out,
                "{},{},{},{},{}",
                r.restart_id,
                r.seed,
                r.best_edges,
                self.formula_value,
                r.best_edges as u64 == self.formula_value
            );
        }
        out
    }
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

struct Walker {
    graph: Graph,
    k: usize,
    s: usize,
    nu: usize,
    history: Vec<Move>,
}

impl Walker {
    fn new(graph: Graph, k: usize, s: usize) -> Self {
        let nu = matching_number(&graph).0;
        Walker {
            graph,
            k,
            s,
            nu,
            history: Vec::new(),
        }
    }

    fn valid(&self, g: &Graph) -> Option<usize> {
        let nu = matching_number(g).0;
        let free = clique_number(g).is_ok_and(|(omega, _)| omega <= self.k);
        (nu <= self.s && free).then_some(nu)
    }

    fn try_add(&mut self, u: usize, v: usize) -> bool {
        if u == v || self.graph.has_edge(u, v) {
            return false;
        }
        // A new (k+1)-clique would be uv plus a (k-1)-clique of common neighbors.
        let mut common = self.graph.neighbors(u).clone();
        common.intersect_with(self.graph.neighbors(v));
        if self.k == 0 || find_clique_in(&self.graph, &common, self.k - 1).is_some() {
            return false;
        }
        self.graph.add_edge(u, v);
        // One edge raises ν by at most one.
        if self.nu == self.s {
            let nu = matching_number(&self.graph).0;
            if nu > self.s {
                self.graph.remove_edge(u, v);
                return false;
            }
            self.nu = nu;
        } else {
            self.nu = matching_number(&self.graph).0;
        }
        self.history.push(Move::AddEdge { u, v });
        true
    }

    fn remove(&mut self, u: usize, v: usize) {
        if self.graph.remove_edge(u, v) {
            self.nu = matching_number(&self.graph).0;
            self.history.push(Move::RemoveEdge { u, v });
        }
    }

    fn isolate(&mut self, u: usize) {
        let nbrs: Vec<usize> = self.graph.neighbors(u).ones().collect();
        for v in nbrs {
            self.remove(u, v);
        }
    }

    fn zykov_step(&mut self) -> bool {
        let n = self.graph.n();
        for u in 0..n {
            for v in 0..n {
                if u == v
                    || self.graph.has_edge(u, v)
                    || self.graph.degree(u) >= self.graph.degree(v)
                {
                    continue;
                }
                let mut next = self.graph.clone();
                next.set_neighborhood(u, self.graph.neighbors(v));
                if let Some(nu) = self.valid(&next) {
                    self.graph = next;
                    self.nu = nu;
                    self.history.push(Move::Replace { u, v });
                    return true;
                }
            }
        }
        false
    }

    fn symmetrize_witness(&mut self) {
        let Ok(ge) = gallai_edmonds(&self.graph) else {
            return;
        };
        let witness = ge.witness(&self.graph);
        let mut moves = Vec::new();
        let next = symmetrize_traced(&self.graph, &witness.set, &mut moves);
        if moves.is_empty() {
            return;
        }
        if let Some(nu) = self.valid(&next) {
            self.graph = next;
            self.nu = nu;
            self.history.extend(moves);
        }
    }

    fn greedy_fill(&mut self) -> bool {
        let n = self.graph.n();
        let mut grew = false;
        for u in 0..n {
            for v in u + 1..n {
                grew |= self.try_add(u, v);
            }
        }
        grew
    }

    /// Symmetrization, Zykov moves and greedy additions until none applies.
    fn polish(&mut self) {
        loop {
            self.symmetrize_witness();
            let mut changed = false;
            while self.zykov_step() {
                changed = true;
            }
            changed |= self.greedy_fill();
            if !changed {
                return;
            }
        }
    }

    fn random_additions(&mut self, rng: &mut ChaCha8Rng, attempts: usize) {
        let n = self.graph.n();
        let mut non_edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| !self.graph.has_edge(u, v))
            .collect();
        non_edges.shuffle(rng);
        for &(u, v) in non_edges.iter().take(attempts) {
            self.try_add(u, v);
        }
    }

    fn delete_random_edges(&mut self, rng: &mut ChaCha8Rng, count: usize) {
        let mut edges: Vec<(usize, usize)> = self.graph.edges().collect();
        edges.shuffle(rng);
        for &(u, v) in edges.iter().take(count) {
            self.remove(u, v);
        }
    }
}

fn start_graph(n: usize, k: usize, s: usize) -> Graph {
    if k <= 1 {
        return Graph::empty(n);
    }
    make_gks(n, k, s.min(n / 2))
        .expect("clipped parameters are valid")
        .0
}

/// Local search with the default budget and [`DEFAULT_ITERS`] replaced by `iters`.
pub fn local_search(n: usize, k: usize, s: usize, seed: u64, iters: usize) -> Result<SearchState> {
    let config = SearchConfig {
        iters,
        ..SearchConfig::default()
    };
    Ok(local_search_with(n, k, s, seed, &config)?.best)
}

/// Restarted plateau search for an `n`-vertex graph with `ω <= k`,
/// `ν <= s` and many edges.
///
/// Restart 0 begins at `G(n, k, s)`; restart `r > 0` deletes a random
/// `r / restarts` fraction of its edges first. Each restart polishes
/// (symmetrization, Zykov moves, greedy additions), then runs `iters` rounds
/// of: delete one random edge (or, with probability 1/2, every edge at one
/// of its endpoints), try random re-additions, polish, keep the result unless
/// it lost edges. The best graph over all restarts wins, ties
/// going to the earliest restart.
pub fn local_search_with(
    n: usize,
    k: usize,
    s: usize,
    seed: u64,
    config: &SearchConfig,
) -> Result<SearchReport> {
    if n == 0 {
        return Err(invalid("search needs n >= 1"));
    }
    if k == 0 {
        return Err(invalid("clique bound k must be >= 1"));
    }
    let formula_value = ex_edges(n, k, s)?.value;
    let start = start_graph(n, k, s);
    let readd = config.readd_attempts.unwrap_or(2 * n);
    let restarts = config.restarts.max(1);

    let mut summaries = Vec::new();
    let mut best: Option<Walker> = None;
    for restart_id in 0..restarts {
        let sub_seed = splitmix64(seed ^ splitmix64(restart_id as u64));
        let mut rng = ChaCha8Rng::seed_from_u64(sub_seed);
        let mut walker = Walker::new(start.clone(), k, s);
        if restart_id > 0 {
            let count = (start.edge_count() * restart_id).div_ceil(restarts);
            walker.delete_random_edges(&mut rng, count);
            walker.random_additions(&mut rng, readd);
        }
        walker.polish();
        let mut restart_best = walker.graph.clone();
        let mut restart_history = walker.history.clone();
        for _ in 0..config.iters {
            if config.stop_at_bound && restart_best.edge_count() as u64 >= formula_value {
                break;
            }
            let saved = (walker.graph.clone(), walker.nu, walker.history.len());
            let edges: Vec<(usize, usize)> = walker.graph.edges().collect();
            if edges.is_empty() {
                break;
            }
            let (u, v) = edges[rng.gen_range(0..edges.len())];
            if rng.gen_bool(0.5) {
                walker.remove(u, v);
            } else {
                walker.isolate(u);
            }
            walker.random_additions(&mut rng, readd);
            walker.polish();
            if walker.graph.edge_count() < saved.0.edge_count() {
                walker.graph = saved.0;
                walker.nu = saved.1;
                walker.history.truncate(saved.2);
            } else if walker.graph.edge_count() > restart_best.edge_count() {
                restart_best = walker.graph.clone();
                restart_history = walker.history.clone();
            }
        }
        summaries.push(RestartSummary {
            restart_id,
            seed: sub_seed,
            best_edges: restart_best.edge_count(),
        });
        if best
            .as_ref()
            .is_none_or(|b| restart_best.edge_count() > b.graph.edge_count())
        {
            let mut w = Walker::new(restart_best, k, s);
            w.history = restart_history;
            best = Some(w);
        }
        let best_edges = best.as_ref().map_or(0, |b| b.graph.edge_count()) as u64;
        if config.stop_at_bound && best_edges >= formula_value {
            break;
        }
    }

    let best = best.expect("at least one restart ran");
    debug_assert!(best.valid(&best.graph).is_some());
    let witness_b = gallai_edmonds(&best.graph)
        .ok()
        .map(|ge| ge.witness(&best.graph));
    Ok(SearchReport {
        best: SearchState {
            graph: best.graph,
            k,
            s,
            witness_b,
            history: best.history,
        },
        restarts: summaries,
        formula_value,
    })
}
