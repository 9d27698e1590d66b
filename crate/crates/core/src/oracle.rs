//! Exhaustive ground truth over all labeled graphs on up to 8 vertices.
//!
//! Graphs are encoded as edge bitmasks: bit `i` is the `i`-th pair `(u, v)`,
//! `u < v`, in lexicographic order. The oracle computes clique and matching
//! numbers with its own bitmask kernels, independent of [`crate::invariants`].

use std::fmt::Write as _;
use std::ops::Range;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use crate::error::{check_capacity, invalid, Error, Result};
use crate::formulas::{ex_edges, ExtremalResult};
use crate::graph::Graph;
use crate::hfree::Pattern;

pub const MAX_ORACLE_VERTICES: usize = 8;

/// Lexicographic vertex pairs of `K_n`, indexed by edge-bitmask bit.
pub fn pair_list(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

/// Graph encoded by `mask` over [`pair_list`]`(n)`.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut g = Graph::empty(n);
    for (i, (u, v)) in pair_list(n).into_iter().enumerate() {
        if mask >> i & 1 == 1 {
            g.add_edge(u, v);
        }
    }
    g
}

/// Edge bitmask of `g` (`n <= 11`, so that `C(n, 2) <= 64`).
pub fn mask_from_graph(g: &Graph) -> u64 {
    pair_list(g.n())
        .into_iter()
        .enumerate()
        .filter(|&(_, (u, v))| g.has_edge(u, v))
        .fold(0, |acc, (i, _)| acc | 1 << i)
}

fn decode(mask: u64, pairs: &[(usize, usize)], adj: &mut [u64; MAX_ORACLE_VERTICES]) {
    *adj = [0; MAX_ORACLE_VERTICES];
    let mut rest = mask;
    while rest != 0 {
        let (u, v) = pairs[rest.trailing_zeros() as usize];
        rest &= rest - 1;
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
}

pub(crate) fn clique_small(adj: &[u64], cand: u64, size: u32, best: &mut u32) {
    if cand == 0 {
        *best = (*best).max(size);
        return;
    }
    if size + cand.count_ones() <= *best {
        return;
    }
    let v = cand.trailing_zeros();
    let rest = cand & (cand - 1);
    clique_small(adj, rest & adj[v as usize], size + 1, best);
    clique_small(adj, rest, size, best);
}

pub(crate) fn matching_small(adj: &[u64], set: u64) -> u32 {
    if set == 0 {
        return 0;
    }
    let v = set.trailing_zeros();
    let rest = set & (set - 1);
    let cap = set.count_ones() / 2;
    let mut best = matching_small(adj, rest);
    let mut partners = adj[v as usize] & rest;
    while partners != 0 && best < cap {
        let u = partners.trailing_zeros();
        partners &= partners - 1;
        best = best.max(1 + matching_small(adj, rest & !(1 << u)));
    }
    best
}

/// Best graph seen for a cell: most edges, then smallest bitmask.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Entry {
    edges: u64,
    mask: u64,
}

fn prefer(a: Option<Entry>, b: Option<Entry>) -> Option<Entry> {
    match (a, b) {
        (Some(x), Some(y)) => {
            if y.edges > x.edges || (y.edges == x.edges && y.mask < x.mask) {
                Some(y)
            } else {
                Some(x)
            }
        }
        (x, None) => x,
        (None, y) => y,
    }
}

/// Runs `work` over contiguous chunks of `0..total` on up to `threads`
/// workers and returns the per-chunk results in chunk order.
fn run_chunked<T: Send>(
    total: u64,
    threads: usize,
    work: impl Fn(Range<u64>) -> T + Sync,
) -> Vec<T> {
    let threads = threads.max(1);
    let chunks = if threads == 1 {
        1
    } else {
        (threads * 16).min(total.max(1) as usize)
    };
    let size = total.div_ceil(chunks as u64).max(1);
    let ranges: Vec<Range<u64>> = (0..chunks as u64)
        .map(|i| (i * size).min(total)..((i + 1) * size).min(total))
        .collect();
    let results: Mutex<Vec<Option<T>>> = Mutex::new((0..chunks).map(|_| None).collect());
    let next = AtomicUsize::new(0);
    std::thread::scope(|scope| {
        for _ in 0..threads.min(chunks) {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= chunks {
                    break;
                }
                let out = work(ranges[i].clone());
                results.lock().unwrap()[i] = Some(out);
            });
        }
    });
    results
        .into_inner()
        .unwrap()
        .into_iter()
        .map(|r| r.expect("every chunk ran"))
        .collect()
}

/// Enumeration settings. The popcount prune skips the clique computation
/// for a graph with `m` edges and matching number `ν` when an earlier graph
/// in the same chunk already has at least `m` edges, clique number at most 2
/// and matching number at most `ν`; such a graph can never be the preferred
/// witness of any cell.
#[derive(Clone, Copy, Debug)]
pub struct OracleOptions {
    pub threads: usize,
    pub prune: bool,
}

impl Default for OracleOptions {
    fn default() -> Self {
        OracleOptions {
            threads: 1,
            prune: true,
        }
    }
}

/// Maximum edge counts over all labeled graphs on `n` vertices, per
/// (clique bound `k`, matching bound `s`), with one witness per cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleTable {
    n: usize,
    edges: Vec<Vec<u64>>,
    witness: Vec<Vec<u64>>,
}

impl OracleTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn max_s(&self) -> usize {
        self.n / 2
    }

    /// Cell `(k, s)` for `1 <= k <= n`, `0 <= s <= n/2`.
    pub fn max_edges(&self, k: usize, s: usize) -> u64 {
        self.edges[k - 1][s]
    }

    /// Smallest edge bitmask among the graphs attaining cell `(k, s)`.
    pub fn witness_mask(&self, k: usize, s: usize) -> u64 {
        self.witness[k - 1][s]
    }

    pub fn witness(&self, k: usize, s: usize) -> Graph {
        graph_from_mask(self.n, self.witness_mask(k, s))
    }

    /// Cells `(k, s)` in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (1..=self.n).flat_map(move |k| (0..=self.n / 2).map(move |s| (k, s)))
    }
}

fn check_oracle_n(n: usize) -> Result<()> {
    if n == 0 {
        return Err(invalid("oracle needs n >= 1"));
    }
    check_capacity("exhaustive enumeration", MAX_ORACLE_VERTICES, n)
}

pub fn enumerate_oracle(n: usize, thread_hint: usize) -> Result<OracleTable> {
    enumerate_oracle_with(
        n,
        OracleOptions {
            threads: thread_hint,
            ..OracleOptions::default()
        },
    )
}

pub fn enumerate_oracle_with(n: usize, options: OracleOptions) -> Result<OracleTable> {
    check_oracle_n(n)?;
    let pairs = pair_list(n);
    let total = 1u64 << pairs.len();
    let max_s = n / 2;
    let full: u64 = (1u64 << n) - 1;
    // raw[w][v]: best graph with clique number exactly w, matching number exactly v.
    let empty_raw = || vec![vec![None::<Entry>; max_s + 1]; n + 1];

    let partials = run_chunked(total, options.threads, |range| {
        let mut raw = empty_raw();
        let mut adj = [0u64; MAX_ORACLE_VERTICES];
        for mask in range {
            let edges = mask.count_ones() as u64;
            decode(mask, &pairs, &mut adj);
            let nu = matching_small(&adj, full) as usize;
            if options.prune && edges > 0 {
                let dominated = raw[1..=2]
                    .iter()
                    .flat_map(|row| row[..=nu].iter())
                    .flatten()
                    .any(|e| e.edges >= edges);
                if dominated {
                    continue;
                }
            }
            let mut omega = 0;
            clique_small(&adj, full, 0, &mut omega);
            let cell = &mut raw[omega as usize][nu];
            *cell = prefer(*cell, Some(Entry { edges, mask }));
        }
        raw
    });

    let mut raw = empty_raw();
    for part in partials {
        for (w, row) in part.into_iter().enumerate() {
            for (v, entry) in row.into_iter().enumerate() {
                raw[w][v] = prefer(raw[w][v], entry);
            }
        }
    }

    // Prefix maximum: cell (k, s) covers every graph with ω <= k and ν <= s.
    let mut best = vec![vec![None::<Entry>; max_s + 1]; n + 1];
    for k in 1..=n {
        for s in 0..=max_s {
            let mut e = prefer(raw[k][s], best[k - 1][s]);
            if s > 0 {
                e = prefer(e, best[k][s - 1]);
            }
            best[k][s] = e;
        }
    }
    let cell = |k: usize, s: usize| best[k][s].expect("the empty graph fills every cell");
    Ok(OracleTable {
        n,
        edges: (1..=n)
            .map(|k| (0..=max_s).map(|s| cell(k, s).edges).collect())
            .collect(),
        witness: (1..=n)
            .map(|k| (0..=max_s).map(|s| cell(k, s).mask).collect())
            .collect(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CellStatus {
    Pass,
    Fail,
}

impl CellStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            CellStatus::Pass => "PASS",
            CellStatus::Fail => "FAIL",
        }
    }
}

#[derive(Clone, Debug)]
pub struct CellReport {
    pub n: usize,
    pub k: usize,
    pub s: usize,
    pub max_edges: u64,
    pub formula: ExtremalResult,
    pub witness_mask: u64,
    pub status: CellStatus,
}

impl CellReport {
    pub fn witness(&self) -> Graph {
        graph_from_mask(self.n, self.witness_mask)
    }
}

/// One line per cell, in `(n, k, s)` order.
#[derive(Clone, Debug, Default)]
pub struct TheoremReport {
    pub cells: Vec<CellReport>,
}

pub const THEOREM_CSV_HEADER: &str = "n,k,s,max_edges,formula,turan_branch,gks_branch,status";

impl TheoremReport {
    pub fn passed(&self) -> bool {
        self.cells.iter().all(|c| c.status == CellStatus::Pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CellReport> {
        self.cells.iter().filter(|c| c.status == CellStatus::Fail)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{THEOREM_CSV_HEADER}");
        for c in &self.cells {
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{},{}",
                c.n,
                c.k,
                c.s,
                c.max_edges,
                c.formula.value,
                c.formula.turan_branch,
                c.formula.gks_branch,
                c.status.as_str()
            );
        }
        out
    }
}

/// Compares every oracle cell for `1 <= n <= n_max` against `formula`,
/// reporting all cells.
pub fn theorem_report_with<F>(n_max: usize, threads: usize, formula: F) -> Result<TheoremReport>
where
    F: Fn(usize, usize, usize) -> Result<ExtremalResult>,
{
    check_capacity("exhaustive enumeration", MAX_ORACLE_VERTICES, n_max)?;
    let mut report = TheoremReport::default();
    for n in 1..=n_max {
        let table = enumerate_oracle(n, threads)?;
        for (k, s) in table.cells() {
            let expected = formula(n, k, s)?;
            let max_edges = table.max_edges(k, s);
            report.cells.push(CellReport {
                n,
                k,
                s,
                max_edges,
                formula: expected,
                witness_mask: table.witness_mask(k, s),
                status: if max_edges == expected.value {
                    CellStatus::Pass
                } else {
                    CellStatus::Fail
                },
            });
        }
    }
    Ok(report)
}

/// [`theorem_report_with`] against [`ex_edges`].
pub fn theorem_report(n_max: usize, threads: usize) -> Result<TheoremReport> {
    theorem_report_with(n_max, threads, ex_edges)
}

/// Verifies the closed form on every cell up to `n_max`; the first mismatch
/// becomes an error carrying its witness graph.
pub fn verify_theorem(n_max: usize, threads: usize) -> Result<TheoremReport> {
    let report = theorem_report(n_max, threads)?;
    if let Some(bad) = report.failures().next() {
        return Err(Error::VerificationFailure {
            n: bad.n,
            k: bad.k,
            s: bad.s,
            oracle: bad.max_edges,
            formula: bad.formula.value,
            witness: Box::new(bad.witness()),
        });
    }
    Ok(report)
}

/// Maximum edge count over `H`-free graphs on `n` vertices with matching
/// number at most `s`, with the smallest attaining bitmask.
pub fn hfree_oracle_with(n: usize, h: &Graph, s: usize, threads: usize) -> Result<(u64, u64)> {
    check_oracle_n(n)?;
    let pattern = Pattern::new(h)?;
    if !pattern.is_connected() || h.edge_count() == 0 {
        return Err(invalid(
            "forbidden graph must be connected with at least one edge",
        ));
    }
    let pairs = pair_list(n);
    let total = 1u64 << pairs.len();
    let full: u64 = (1u64 << n) - 1;
    let partials = run_chunked(total, threads, |range| {
        let mut best: Option<Entry> = None;
        let mut adj = [0u64; MAX_ORACLE_VERTICES];
        for mask in range {
            let edges = mask.count_ones() as u64;
            if best.is_some_and(|b| b.edges >= edges) {
                continue;
            }
            decode(mask, &pairs, &mut adj);
            if matching_small(&adj, full) as usize > s {
                continue;
            }
            if pattern.embeds_in(&adj[..n]) {
                continue;
            }
            best = Some(Entry { edges, mask });
        }
        best
    });
    let best = partials
        .into_iter()
        .fold(None, prefer)
        .expect("the empty graph is H-free");
    Ok((best.edges, best.mask))
}

pub fn hfree_oracle(n: usize, h: &Graph, s: usize) -> Result<u64> {
    Ok(hfree_oracle_with(n, h, s, 1)?.0)
}
