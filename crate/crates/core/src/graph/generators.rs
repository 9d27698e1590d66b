use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Graph;
use crate::error::{invalid, Result};

/// Vertex classes of a complete multipartite graph, in generator order.
/// Empty classes are kept so the class count always matches the request.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    classes: Vec<Vec<usize>>,
}

impl Partition {
    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }
}

/// Sizes of `k` classes as equal as possible summing to `n`, larger first.
pub(crate) fn balanced_sizes(n: usize, k: usize) -> Vec<usize> {
    let (q, r) = (n / k, n % k);
    (0..k).map(|i| if i < r { q + 1 } else { q }).collect()
}

/// Complete multipartite graph with contiguous vertex blocks of the given sizes.
pub fn complete_multipartite(sizes: &[usize]) -> (Graph, Partition) {
    let n = sizes.iter().sum();
    let mut next = 0;
    let classes: Vec<Vec<usize>> = sizes
        .iter()
        .map(|&len| {
            let class = (next..next + len).collect();
            next += len;
            class
        })
        .collect();
    let mut class_of = vec![0; n];
    for (c, class) in classes.iter().enumerate() {
        for &v in class {
            class_of[v] = c;
        }
    }
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if class_of[u] != class_of[v] {
                g.add_edge(u, v);
            }
        }
    }
    (g, Partition { classes })
}

/// Turán graph `T(n, k)`: `n mod k` classes of size `ceil(n/k)`, then the rest
/// of size `floor(n/k)`.
pub fn make_turan(n: usize, k: usize) -> Result<(Graph, Partition)> {
    if k == 0 {
        return Err(invalid("Turán graph needs k >= 1"));
    }
    Ok(complete_multipartite(&balanced_sizes(n, k)))
}

/// `G(n, k, s)`: `k - 1` balanced classes of total size `s` plus one class of
/// size `n - s`.
pub fn make_gks(n: usize, k: usize, s: usize) -> Result<(Graph, Partition)> {
    if k == 0 {
        return Err(invalid("G(n,k,s) needs k >= 1"));
    }
    if s > n {
        return Err(invalid(format!("G(n,k,s) needs s <= n, got s={s}, n={n}")));
    }
    if k == 1 && s > 0 {
        return Err(invalid("G(n,1,s) is undefined for s > 0"));
    }
    let mut sizes = if k == 1 {
        Vec::new()
    } else {
        balanced_sizes(s, k - 1)
    };
    sizes.push(n - s);
    Ok(complete_multipartite(&sizes))
}

/// Erdős–Rényi graph driven by ChaCha8 seeded with `seed`. Pairs are drawn in
/// lexicographic order `(0,1), (0,2), ..., (n-2,n-1)`, one Bernoulli trial each.
///
/// Panics unless `0 <= p <= 1`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    assert!(
        (0.0..=1.0).contains(&p),
        "edge probability {p} outside [0, 1]"
    );
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Names accepted by [`fixture`], besides the generic `K<n>` and `C<n>`.
pub const FIXTURE_NAMES: &[&str] = &["K3", "K4", "C5", "C6", "C7", "K4e", "PETERSEN"];

/// Named small graphs: `K<n>`, `C<n>`, `K4e` (K4 minus an edge), `PETERSEN`.
pub fn fixture(name: &str) -> Option<Graph> {
    let upper = name.to_ascii_uppercase();
    if upper == "PETERSEN" {
        return Some(Graph::petersen());
    }
    if upper == "K4E" {
        let mut g = Graph::complete(4);
        g.remove_edge(2, 3);
        return Some(g);
    }
    let (kind, digits) = upper.split_at(1.min(upper.len()));
    let size: usize = digits.parse().ok()?;
    match kind {
        "K" if size >= 1 => Some(Graph::complete(size)),
        "C" if size >= 3 => Some(Graph::cycle(size)),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn turan_examples() {
        let (g, p) = make_turan(5, 2).unwrap();
        assert_eq!(p.sizes(), vec![3, 2]);
        assert_eq!(g, Graph::complete_bipartite(3, 2));
        assert_eq!(g.edge_count(), 6);

        let (g, p) = make_turan(4, 5).unwrap();
        assert_eq!(g, Graph::complete(4));
        assert_eq!(p.sizes(), vec![1, 1, 1, 1, 0]);
        assert!(p.classes()[4].is_empty());

        let (g, p) = make_turan(7, 3).unwrap();
        assert_eq!(p.sizes(), vec![3, 2, 2]);
        assert_eq!(p.classes()[1], vec![3, 4]);
        assert_eq!(g.edge_count(), 16);

        assert!(make_turan(3, 0).is_err());
    }

    #[test]
    fn gks_examples() {
        let (g, p) = make_gks(7, 2, 2).unwrap();
        assert_eq!(p.sizes(), vec![2, 5]);
        assert_eq!(g.edge_count(), 10);

        let (g, p) = make_gks(10, 3, 4).unwrap();
        assert_eq!(p.sizes(), vec![2, 2, 6]);
        assert_eq!(g.edge_count(), 28);

        let (g, p) = make_gks(9, 4, 3).unwrap();
        assert_eq!(p.sizes(), vec![1, 1, 1, 6]);
        assert_eq!(g.edge_count(), 21);

        let (g, p) = make_gks(5, 1, 0).unwrap();
        assert_eq!(p.sizes(), vec![5]);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn gks_rejects_invalid() {
        assert!(make_gks(3, 1, 1).is_err());
        assert!(make_gks(3, 2, 4).is_err());
        assert!(make_gks(3, 0, 0).is_err());
    }

    #[test]
    fn random_graph_extremes() {
        assert_eq!(random_graph(9, 0.0, 7).edge_count(), 0);
        assert_eq!(random_graph(9, 1.0, 7), Graph::complete(9));
        assert_eq!(random_graph(12, 0.4, 3), random_graph(12, 0.4, 3));
    }

    #[test]
    fn fixtures_resolve() {
        for name in FIXTURE_NAMES {
            assert!(fixture(name).is_some(), "{name}");
        }
        assert_eq!(fixture("k4e").unwrap().edge_count(), 5);
        assert_eq!(fixture("C7").unwrap(), Graph::cycle(7));
        assert!(fixture("C2").is_none());
        assert!(fixture("X5").is_none());
        assert!(fixture("").is_none());
    }
}
