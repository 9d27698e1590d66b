use std::collections::VecDeque;

use crate::error::{check_capacity, Result};
use crate::graph::Graph;

pub const MAX_MATCHING_ORACLE_VERTICES: usize = 22;

const NONE: usize = usize::MAX;

/// A set of pairwise disjoint edges, stored as `(u, v)` with `u < v`, sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Matching {
    pairs: Vec<(usize, usize)>,
}

impl Matching {
    fn from_mates(mate: &[usize]) -> Self {
        let pairs = mate
            .iter()
            .enumerate()
            .filter(|&(u, &v)| v != NONE && u < v)
            .map(|(u, &v)| (u, v))
            .collect();
        Matching { pairs }
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// True when every pair is an edge of `g` and no vertex is used twice.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let mut used = vec![false; g.n()];
        self.pairs.iter().all(|&(u, v)| {
            if u >= g.n() || v >= g.n() || !g.has_edge(u, v) || used[u] || used[v] {
                return false;
            }
            used[u] = true;
            used[v] = true;
            true
        })
    }

    pub fn covers(&self, v: usize) -> bool {
        self.pairs.iter().any(|&(a, b)| a == v || b == v)
    }
}

/// Edmonds' blossom algorithm with explicit contraction through a base array.
struct Blossom<'a> {
    adj: &'a [Vec<usize>],
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    seen: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'a> Blossom<'a> {
    fn new(adj: &'a [Vec<usize>]) -> Self {
        let n = adj.len();
        Blossom {
            adj,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            seen: vec![false; n],
            queue: VecDeque::with_capacity(n),
        }
    }

    fn greedy(&mut self) {
        for u in 0..self.adj.len() {
            if self.mate[u] != NONE {
                continue;
            }
            if let Some(&v) = self.adj[u].iter().find(|&&v| self.mate[v] == NONE) {
                self.mate[u] = v;
                self.mate[v] = u;
            }
        }
    }

    fn lca(&mut self, mut a: usize, mut b: usize) -> usize {
        self.seen.fill(false);
        loop {
            a = self.base[a];
            self.seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if self.seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, root: usize, mut child: usize) {
        while self.base[v] != root {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// BFS over alternating paths from `root`; returns the far end of an
    /// augmenting path if one exists.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.adj.len();
        self.used.fill(false);
        self.parent.fill(NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            let adj = self.adj;
            for &to in &adj[v] {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let top = self.lca(v, to);
                    self.in_blossom.fill(false);
                    self.mark_path(v, top, to);
                    self.mark_path(to, top, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = top;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let ppv = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = ppv;
        }
    }

    fn run(mut self) -> Vec<usize> {
        self.greedy();
        for root in 0..self.adj.len() {
            if self.mate[root] == NONE {
                if let Some(end) = self.find_path(root) {
                    self.augment(end);
                }
            }
        }
        self.mate
    }
}

/// Maximum matching by Edmonds' blossom algorithm, O(n^3).
pub fn matching_number(g: &Graph) -> (usize, Matching) {
    let adj = g.adjacency_lists();
    let mate = Blossom::new(&adj).run();
    let matching = Matching::from_mates(&mate);
    (matching.len(), matching)
}

/// Matching number by dynamic programming over vertex subsets. Independent
/// of [`matching_number`]; exponential, `n <= 22`.
pub fn matching_number_oracle(g: &Graph) -> Result<usize> {
    let n = g.n();
    check_capacity("subset-DP matching oracle", MAX_MATCHING_ORACLE_VERTICES, n)?;
    let nbr: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).ones().fold(0u32, |acc, w| acc | 1 << w))
        .collect();
    let mut best = vec![0u8; 1 << n];
    for set in 1usize..1 << n {
        let low = set.trailing_zeros() as usize;
        let rest = set & (set - 1);
        let mut value = best[rest];
        let mut partners = nbr[low] as usize & rest;
        while partners != 0 {
            let u = partners.trailing_zeros();
            partners &= partners - 1;
            value = value.max(1 + best[rest & !(1 << u)]);
        }
        best[set] = value;
    }
    Ok(best[(1 << n) - 1] as usize)
}
