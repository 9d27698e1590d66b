use fixedbitset::FixedBitSet;

use crate::error::{check_capacity, Result};
use crate::graph::{Graph, VertexSet};

pub const MAX_CLIQUE_VERTICES: usize = 128;

/// Greedy sequential coloring of `cand`. Returns vertices ordered by color
/// class and, for each position, the number of colors used so far; that
/// number bounds the clique size among the vertices up to that position.
fn color_sort(g: &Graph, cand: &VertexSet) -> (Vec<usize>, Vec<usize>) {
    let mut order = Vec::with_capacity(cand.count_ones(..));
    let mut bounds = Vec::with_capacity(order.capacity());
    let mut uncolored = cand.clone();
    let mut color = 0;
    while !uncolored.is_clear() {
        color += 1;
        let mut avail = uncolored.clone();
        while let Some(v) = avail.minimum() {
            avail.set(v, false);
            avail.difference_with(g.neighbors(v));
            uncolored.set(v, false);
            order.push(v);
            bounds.push(color);
        }
    }
    (order, bounds)
}

fn color_bound(g: &Graph, cand: &VertexSet) -> usize {
    color_sort(g, cand).1.last().copied().unwrap_or(0)
}

fn expand(g: &Graph, current: &mut Vec<usize>, mut cand: VertexSet, best: &mut Vec<usize>) {
    let (order, bounds) = color_sort(g, &cand);
    for i in (0..order.len()).rev() {
        if current.len() + bounds[i] <= best.len() {
            return;
        }
        let v = order[i];
        current.push(v);
        let mut next = cand.clone();
        next.intersect_with(g.neighbors(v));
        if next.is_clear() {
            if current.len() > best.len() {
                best.clone_from(current);
            }
        } else {
            expand(g, current, next, best);
        }
        current.pop();
        cand.set(v, false);
    }
}

/// Depth-first search in ascending vertex order, so the first clique found
/// is the lexicographically smallest of the requested size.
fn extend_to(g: &Graph, current: &mut Vec<usize>, mut cand: VertexSet, target: usize) -> bool {
    let need = target - current.len();
    if need == 0 {
        return true;
    }
    if cand.count_ones(..) < need || color_bound(g, &cand) < need {
        return false;
    }
    while let Some(v) = cand.minimum() {
        if cand.count_ones(..) < need {
            return false;
        }
        current.push(v);
        let mut next = cand.clone();
        next.intersect_with(g.neighbors(v));
        if extend_to(g, current, next, target) {
            return true;
        }
        current.pop();
        cand.set(v, false);
    }
    false
}

/// Lexicographically smallest clique of exactly `size` vertices inside
/// `candidates`, if any.
pub fn find_clique_in(g: &Graph, candidates: &VertexSet, size: usize) -> Option<Vec<usize>> {
    let mut current = Vec::with_capacity(size);
    let mut cand = FixedBitSet::with_capacity(g.n());
    cand.union_with(candidates);
    extend_to(g, &mut current, cand, size).then_some(current)
}

/// Clique number with the lexicographically smallest maximum clique.
/// Branch and bound with greedy-coloring bounds; `n <= 128`.
pub fn clique_number(g: &Graph) -> Result<(usize, Vec<usize>)> {
    check_capacity("exact clique search", MAX_CLIQUE_VERTICES, g.n())?;
    if g.n() == 0 {
        return Ok((0, Vec::new()));
    }
    let mut best = vec![0];
    expand(g, &mut Vec::new(), g.vertex_set(), &mut best);
    let omega = best.len();
    let witness = find_clique_in(g, &g.vertex_set(), omega).expect("a clique of size ω exists");
    Ok((omega, witness))
}

/// True iff `ω(g) <= k`. Stops at the first clique of size `k + 1`.
pub fn is_k_clique_free(g: &Graph, k: usize) -> Result<bool> {
    check_capacity("exact clique search", MAX_CLIQUE_VERTICES, g.n())?;
    Ok(find_clique_in(g, &g.vertex_set(), k + 1).is_none())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_gks, make_turan, random_graph};

    fn is_clique(g: &Graph, vs: &[usize]) -> bool {
        vs.iter()
            .enumerate()
            .all(|(i, &u)| vs[i + 1..].iter().all(|&v| g.has_edge(u, v)))
    }

    fn brute_omega(g: &Graph) -> usize {
        let masks = g.adjacency_masks().unwrap();
        let n = g.n();
        (0u64..1 << n)
            .filter(|&set| {
                let mut rest = set;
                while rest != 0 {
                    let v = rest.trailing_zeros();
                    rest &= rest - 1;
                    if set & !masks[v as usize] & !(1 << v) != 0 {
                        return false;
                    }
                }
                true
            })
            .map(|set| set.count_ones() as usize)
            .max()
            .unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(clique_number(&make_turan(9, 3).unwrap().0).unwrap().0, 3);
        assert_eq!(clique_number(&Graph::cycle(5)).unwrap(), (2, vec![0, 1]));
        assert_eq!(clique_number(&make_gks(10, 4, 2).unwrap().0).unwrap().0, 3);
        assert_eq!(clique_number(&Graph::empty(4)).unwrap(), (1, vec![0]));
        assert_eq!(clique_number(&Graph::empty(0)).unwrap().0, 0);

        assert!(is_k_clique_free(&make_turan(9, 3).unwrap().0, 3).unwrap());
        assert!(!is_k_clique_free(&Graph::complete(5), 4).unwrap());
        assert!(is_k_clique_free(&make_gks(12, 3, 4).unwrap().0, 3).unwrap());
    }

    #[test]
    fn matches_brute_force() {
        for seed in 0..120u64 {
            let n = 1 + (seed % 12) as usize;
            let g = random_graph(n, 0.2 + 0.6 * ((seed % 7) as f64 / 6.0), seed);
            let (omega, witness) = clique_number(&g).unwrap();
            assert_eq!(omega, brute_omega(&g), "seed {seed}");
            assert_eq!(witness.len(), omega);
            assert!(is_clique(&g, &witness));
            assert!(is_k_clique_free(&g, omega).unwrap());
            assert!(omega == 0 || !is_k_clique_free(&g, omega - 1).unwrap());
        }
    }

    #[test]
    fn witness_is_lexicographically_first() {
        // Two triangles {1,2,3} and {0,4,5}: the second is lexicographically first.
        let g = Graph::from_edges(6, &[(1, 2), (2, 3), (1, 3), (0, 4), (4, 5), (0, 5)]).unwrap();
        assert_eq!(clique_number(&g).unwrap().1, vec![0, 4, 5]);
    }

    #[test]
    fn capacity() {
        assert!(clique_number(&Graph::empty(129)).is_err());
        assert!(clique_number(&Graph::empty(128)).is_ok());
    }
}
