//! Simple undirected graphs on vertices `0..n` with bitset adjacency.

mod generators;
mod io;

use fixedbitset::FixedBitSet;

use crate::error::{invalid, Result};

pub use generators::{
    complete_multipartite, fixture, make_gks, make_turan, random_graph, Partition, FIXTURE_NAMES,
};
pub use io::{parse_graph, write_graph};

/// A set of vertices, one bit per vertex.
pub type VertexSet = FixedBitSet;

/// Undirected simple graph. Adjacency is kept symmetric and loop-free, and
/// the edge count is cached.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    m: usize,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![FixedBitSet::with_capacity(n); n],
            m: 0,
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// Builds a graph from an edge list. Repeated edges are merged; loops and
    /// out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(invalid(format!("edge ({u},{v}) out of range for n={n}")));
            }
            if u == v {
                return Err(invalid(format!("loop at vertex {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::empty(n);
        if n >= 3 {
            for u in 0..n {
                g.add_edge(u, (u + 1) % n);
            }
        } else if n == 2 {
            g.add_edge(0, 1);
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 1..n {
            g.add_edge(u - 1, u);
        }
        g
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        complete_multipartite(&[a, b]).0
    }

    /// The Petersen graph: outer 5-cycle on 0..5, inner pentagram on 5..10.
    pub fn petersen() -> Self {
        let mut g = Graph::empty(10);
        for i in 0..5 {
            g.add_edge(i, (i + 1) % 5);
            g.add_edge(i, i + 5);
            g.add_edge(5 + i, 5 + (i + 2) % 5);
        }
        g
    }

    /// Builds a graph from 64-bit adjacency masks (`n <= 64`).
    pub fn from_masks(masks: &[u64]) -> Self {
        let n = masks.len();
        let mut g = Graph::empty(n);
        for (u, &row) in masks.iter().enumerate() {
            let mut rest = row >> (u + 1) << (u + 1);
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                g.add_edge(u, v);
            }
        }
        g
    }

    /// Adjacency rows as 64-bit masks, or `None` when `n > 64`.
    pub fn adjacency_masks(&self) -> Option<Vec<u64>> {
        if self.n > 64 {
            return None;
        }
        Some(
            self.adj
                .iter()
                .map(|row| row.ones().fold(0u64, |acc, v| acc | 1 << v))
                .collect(),
        )
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones(..)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// Adds `uv`; returns false if it was already present.
    ///
    /// Panics on a loop or an out-of-range endpoint.
    pub fn add_edge(&mut self, u: usize, v: usize) -> bool {
        assert!(u != v, "loop at vertex {u}");
        assert!(u < self.n && v < self.n, "vertex out of range");
        if self.adj[u].put(v) {
            return false;
        }
        self.adj[v].insert(u);
        self.m += 1;
        true
    }

    /// Removes `uv`; returns false if it was absent.
    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        if u == v || !self.adj[u].contains(v) {
            return false;
        }
        self.adj[u].set(v, false);
        self.adj[v].set(u, false);
        self.m -= 1;
        true
    }

    /// Replaces the neighborhood of `u` by `new`. `new` must not contain `u`.
    pub(crate) fn set_neighborhood(&mut self, u: usize, new: &VertexSet) {
        debug_assert!(!new.contains(u));
        let old = self.adj[u].clone();
        for w in old.ones() {
            if !new.contains(w) {
                self.remove_edge(u, w);
            }
        }
        for w in new.ones() {
            self.add_edge(u, w);
        }
    }

    /// Removes every edge at `v`, keeping the vertex.
    pub fn isolate(&mut self, v: usize) {
        let old = self.adj[v].clone();
        for w in old.ones() {
            self.remove_edge(v, w);
        }
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.ones().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Adjacency lists in ascending order.
    pub fn adjacency_lists(&self) -> Vec<Vec<usize>> {
        self.adj.iter().map(|row| row.ones().collect()).collect()
    }

    /// Same graph with `extra` isolated vertices appended.
    pub fn padded(&self, extra: usize) -> Graph {
        let mut g = Graph::empty(self.n + extra);
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        g
    }

    /// Induced subgraph on `vertices`, relabeled `0..len` in the given order.
    /// The second component maps new labels to old ones.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<(Graph, Vec<usize>)> {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            if v >= self.n {
                return Err(invalid(format!("vertex {v} out of range for n={}", self.n)));
            }
            if index[v] != usize::MAX {
                return Err(invalid(format!("vertex {v} listed twice")));
            }
            index[v] = i;
        }
        let mut sub = Graph::empty(vertices.len());
        for (i, &v) in vertices.iter().enumerate() {
            for w in self.adj[v].ones() {
                let j = index[w];
                if j != usize::MAX && i < j {
                    sub.add_edge(i, j);
                }
            }
        }
        Ok((sub, vertices.to_vec()))
    }

    /// Connected components of the subgraph induced on `alive`, each sorted,
    /// ordered by smallest vertex.
    pub fn components_within(&self, alive: &VertexSet) -> Vec<Vec<usize>> {
        let mut seen = FixedBitSet::with_capacity(self.n);
        let mut out = Vec::new();
        for start in alive.ones() {
            if seen.contains(start) {
                continue;
            }
            seen.insert(start);
            let mut comp = vec![start];
            let mut i = 0;
            while i < comp.len() {
                let x = comp[i];
                i += 1;
                for y in self.adj[x].ones() {
                    if alive.contains(y) && !seen.put(y) {
                        comp.push(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// All vertices as a set.
    pub fn vertex_set(&self) -> VertexSet {
        let mut all = FixedBitSet::with_capacity(self.n);
        all.insert_range(..);
        all
    }

    /// Checks the representation invariants: symmetry, no loops, cached `m`.
    pub fn is_consistent(&self) -> bool {
        let mut twice = 0;
        for u in 0..self.n {
            if self.adj[u].len() != self.n || self.adj[u].contains(u) {
                return false;
            }
            for v in self.adj[u].ones() {
                if !self.adj[v].contains(u) {
                    return false;
                }
            }
            twice += self.adj[u].count_ones(..);
        }
        twice == 2 * self.m
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn induced_subgraph_examples() {
        let (g, _) = make_gks(7, 2, 2).unwrap();
        let (five, map) = g.induced_subgraph(&[2, 3, 4, 5, 6]).unwrap();
        assert_eq!(five.n(), 5);
        assert_eq!(five.edge_count(), 0);
        assert_eq!(map, vec![2, 3, 4, 5, 6]);

        let (p4, _) = Graph::cycle(5).induced_subgraph(&[0, 1, 2, 3]).unwrap();
        assert_eq!(p4, Graph::path(4));

        let (k3, _) = Graph::complete(6).induced_subgraph(&[1, 3, 5]).unwrap();
        assert_eq!(k3, Graph::complete(3));
    }

    #[test]
    fn induced_subgraph_rejects_bad_vertices() {
        let g = Graph::cycle(5);
        assert!(g.induced_subgraph(&[0, 5]).is_err());
        assert!(g.induced_subgraph(&[1, 1]).is_err());
    }

    #[test]
    fn edge_bookkeeping() {
        let mut g = Graph::empty(4);
        assert!(g.add_edge(0, 1));
        assert!(!g.add_edge(1, 0));
        assert!(g.add_edge(2, 3));
        assert_eq!(g.edge_count(), 2);
        assert!(g.remove_edge(1, 0));
        assert!(!g.remove_edge(1, 0));
        assert_eq!(g.edge_count(), 1);
        assert!(g.is_consistent());
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(2, 3)]);
    }

    #[test]
    fn masks_round_trip() {
        let g = Graph::petersen();
        assert_eq!(g.edge_count(), 15);
        assert!((0..10).all(|v| g.degree(v) == 3));
        let masks = g.adjacency_masks().unwrap();
        assert_eq!(Graph::from_masks(&masks), g);
    }

    #[test]
    fn components() {
        let g = Graph::from_edges(6, &[(0, 1), (2, 3), (3, 4)]).unwrap();
        let comps = g.components_within(&g.vertex_set());
        assert_eq!(comps, vec![vec![0, 1], vec![2, 3, 4], vec![5]]);
    }
}
