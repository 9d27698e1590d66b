use std::cmp::Reverse;

use fixedbitset::FixedBitSet;

use super::matching::matching_number;
use crate::error::{check_capacity, invalid, Result};
use crate::graph::Graph;

pub const MAX_TUTTE_BERGE_VERTICES: usize = 16;
pub const MAX_GALLAI_EDMONDS_VERTICES: usize = 512;

/// A vertex set `B` together with the component structure of `G - B`.
///
/// `bound = (n + |B| - odd(G - B)) / 2` is an upper bound on the matching
/// number of `G`. When every component is odd it reads
/// `b + sum (a_i - 1) / 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TutteBergeWitness {
    /// `B`, sorted.
    pub set: Vec<usize>,
    /// Sizes of the odd components of `G - B`, largest first.
    pub odd_components: Vec<usize>,
    /// Sizes of the even components of `G - B`, largest first.
    pub even_components: Vec<usize>,
    pub bound: usize,
}

impl TutteBergeWitness {
    /// Computes the witness data for `set` in `g`.
    pub fn for_set(g: &Graph, set: &[usize]) -> Result<Self> {
        let mut alive = g.vertex_set();
        let mut sorted = set.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != set.len() {
            return Err(invalid("witness set lists a vertex twice"));
        }
        for &v in &sorted {
            if v >= g.n() {
                return Err(invalid(format!("vertex {v} out of range for n={}", g.n())));
            }
            alive.set(v, false);
        }
        let (mut odd, mut even): (Vec<usize>, Vec<usize>) = g
            .components_within(&alive)
            .iter()
            .map(Vec::len)
            .partition(|len| len % 2 == 1);
        odd.sort_unstable_by_key(|&a| Reverse(a));
        even.sort_unstable_by_key(|&a| Reverse(a));
        let bound = (g.n() + sorted.len() - odd.len()) / 2;
        Ok(TutteBergeWitness {
            set: sorted,
            odd_components: odd,
            even_components: even,
            bound,
        })
    }

    pub fn b(&self) -> usize {
        self.set.len()
    }

    /// `odd(G - B) - |B|`.
    pub fn deficiency(&self) -> isize {
        self.odd_components.len() as isize - self.set.len() as isize
    }

    /// True when this witness describes `set` in `g` exactly.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        TutteBergeWitness::for_set(g, &self.set).is_ok_and(|w| w == *self)
    }
}

/// Enumerates every `B` and returns one of maximum deficiency, preferring
/// smaller `|B|`, then the lexicographically smaller sorted `B`. `n <= 16`.
pub fn tutte_berge_max_deficiency(g: &Graph) -> Result<TutteBergeWitness> {
    let n = g.n();
    check_capacity(
        "Tutte–Berge subset enumeration",
        MAX_TUTTE_BERGE_VERTICES,
        n,
    )?;
    let nbr: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).ones().fold(0u32, |acc, w| acc | 1 << w))
        .collect();
    let full: u32 = if n == 0 { 0 } else { u32::MAX >> (32 - n) };
    let odd_count = |removed: u32| -> usize {
        let mut left = full & !removed;
        let mut odd = 0;
        while left != 0 {
            let mut comp = left & left.wrapping_neg();
            let mut frontier = comp;
            while frontier != 0 {
                let v = frontier.trailing_zeros();
                frontier &= frontier - 1;
                let fresh = nbr[v as usize] & left & !comp;
                comp |= fresh;
                frontier |= fresh;
            }
            left &= !comp;
            odd += (comp.count_ones() % 2) as usize;
        }
        odd
    };
    let members = |mask: u32| -> Vec<usize> { (0..n).filter(|&v| mask >> v & 1 == 1).collect() };

    let mut best_mask = 0u32;
    let mut best_def = odd_count(0) as isize;
    for mask in 1..=full {
        let def = odd_count(mask) as isize - mask.count_ones() as isize;
        let better = def > best_def
            || (def == best_def
                && (mask.count_ones() < best_mask.count_ones()
                    || (mask.count_ones() == best_mask.count_ones()
                        && members(mask) < members(best_mask))));
        if better {
            best_mask = mask;
            best_def = def;
        }
    }
    TutteBergeWitness::for_set(g, &members(best_mask))
}

/// Gallai–Edmonds partition of the vertex set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GallaiEdmonds {
    /// Vertices missed by some maximum matching.
    pub d: Vec<usize>,
    /// Neighbors of `D` outside `D`.
    pub a: Vec<usize>,
    /// Everything else.
    pub c: Vec<usize>,
}

impl GallaiEdmonds {
    /// `B = A` as a Tutte–Berge witness; it attains the matching number.
    pub fn witness(&self, g: &Graph) -> TutteBergeWitness {
        TutteBergeWitness::for_set(g, &self.a).expect("A is a valid vertex set")
    }
}

/// `D = {v : ν(G - v) = ν(G)}`, `A = N(D) \ D`, `C` the rest. Uses one
/// blossom run per vertex covered by the first maximum matching; `n <= 512`.
pub fn gallai_edmonds(g: &Graph) -> Result<GallaiEdmonds> {
    let n = g.n();
    check_capacity(
        "Gallai–Edmonds decomposition",
        MAX_GALLAI_EDMONDS_VERTICES,
        n,
    )?;
    let (nu, matching) = matching_number(g);
    let mut in_d = FixedBitSet::with_capacity(n);
    for v in 0..n {
        // An exposed vertex is missed by this maximum matching already.
        let missed = !matching.covers(v) || {
            let mut without = g.clone();
            without.isolate(v);
            matching_number(&without).0 == nu
        };
        in_d.set(v, missed);
    }
    let mut in_a = FixedBitSet::with_capacity(n);
    for v in in_d.ones() {
        in_a.union_with(g.neighbors(v));
    }
    in_a.difference_with(&in_d);
    let d: Vec<usize> = in_d.ones().collect();
    let a: Vec<usize> = in_a.ones().collect();
    let c = (0..n)
        .filter(|&v| !in_d.contains(v) && !in_a.contains(v))
        .collect();
    Ok(GallaiEdmonds { d, a, c })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::make_gks;

    #[test]
    fn witness_examples() {
        let (g, _) = make_gks(9, 3, 2).unwrap();
        let w = tutte_berge_max_deficiency(&g).unwrap();
        assert_eq!(w.set, vec![0, 1]);
        assert_eq!(w.odd_components, vec![1; 7]);
        assert_eq!(w.bound, 2);
        assert_eq!(w.deficiency(), 5);

        let w = tutte_berge_max_deficiency(&Graph::complete(4)).unwrap();
        assert!(w.set.is_empty());
        assert_eq!(w.even_components, vec![4]);
        assert_eq!(w.bound, 2);

        let w = tutte_berge_max_deficiency(&Graph::cycle(5)).unwrap();
        assert!(w.set.is_empty());
        assert_eq!(w.odd_components, vec![5]);
        assert_eq!(w.bound, 2);

        let w = tutte_berge_max_deficiency(&Graph::empty(0)).unwrap();
        assert_eq!(w.bound, 0);
    }

    #[test]
    fn tie_break_prefers_lexicographic_sets() {
        // Star K_{1,3} plus its center duplicated would tie; a path P_5 has
        // several optimal sets of size 0 and 2. B = {} gives deficiency 1.
        let w = tutte_berge_max_deficiency(&Graph::path(5)).unwrap();
        assert!(w.set.is_empty());
        assert_eq!(w.bound, 2);
        // Two stars sharing nothing: centers 0 and 4.
        let g = Graph::from_edges(8, &[(0, 1), (0, 2), (0, 3), (4, 5), (4, 6), (4, 7)]).unwrap();
        let w = tutte_berge_max_deficiency(&g).unwrap();
        assert_eq!(w.set, vec![0, 4]);
        assert_eq!(w.bound, 2);
    }

    #[test]
    fn capacity() {
        assert!(tutte_berge_max_deficiency(&Graph::empty(17)).is_err());
        assert!(gallai_edmonds(&Graph::empty(513)).is_err());
    }

    #[test]
    fn gallai_edmonds_examples() {
        let g = Graph::complete_bipartite(2, 5);
        let ge = gallai_edmonds(&g).unwrap();
        assert_eq!(ge.d, vec![2, 3, 4, 5, 6]);
        assert_eq!(ge.a, vec![0, 1]);
        assert!(ge.c.is_empty());
        assert_eq!(ge.witness(&g).bound, 2);

        let ge = gallai_edmonds(&Graph::complete(4)).unwrap();
        assert!(ge.d.is_empty() && ge.a.is_empty());
        assert_eq!(ge.c, vec![0, 1, 2, 3]);

        let ge = gallai_edmonds(&Graph::cycle(5)).unwrap();
        assert_eq!(ge.d, vec![0, 1, 2, 3, 4]);
        assert!(ge.a.is_empty() && ge.c.is_empty());
    }

    #[test]
    fn witness_validation() {
        let g = Graph::cycle(6);
        let w = TutteBergeWitness::for_set(&g, &[0, 3]).unwrap();
        assert_eq!(w.even_components, vec![2, 2]);
        assert_eq!(w.bound, 4);
        assert!(w.is_valid_for(&g));
        let mut bogus = w.clone();
        bogus.bound = 1;
        assert!(!bogus.is_valid_for(&g));
        assert!(TutteBergeWitness::for_set(&g, &[0, 0]).is_err());
        assert!(TutteBergeWitness::for_set(&g, &[6]).is_err());
    }
}
