use proptest::prelude::*;
use turanmatch::formulas::ex_edges;
use turanmatch::graph::random_graph;
use turanmatch::invariants::{
    clique_number, matching_number, tutte_berge_max_deficiency, TutteBergeWitness,
};
use turanmatch::oracle::enumerate_oracle;
use turanmatch::symmetrization::{
    clique_safe, local_search_with, replace_neighborhood, symmetrize_within, SearchConfig,
};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn replacement_laws(n in 2usize..=12, p in 0.1f64..0.9, seed in any::<u64>(), a in any::<usize>(), b in any::<usize>()) {
        let g = random_graph(n, p, seed);
        let (u, v) = (a % n, b % n);
        prop_assume!(u != v && !g.has_edge(u, v));
        let out = replace_neighborhood(&g, u, v).unwrap();
        prop_assert!(out.is_consistent());
        prop_assert_eq!(out.edge_count() + g.degree(u), g.edge_count() + g.degree(v));
        prop_assert_eq!(out.neighbors(u), g.neighbors(v));
        prop_assert!(!out.has_edge(u, v));
        prop_assert!(clique_number(&out).unwrap().0 <= clique_number(&g).unwrap().0);
        prop_assert!(clique_safe(&g, u, v).unwrap());
    }

    #[test]
    fn symmetrization_preserves_witness(n in 3usize..=12, p in 0.1f64..0.9, seed in any::<u64>()) {
        let g = random_graph(n, p, seed);
        let w = tutte_berge_max_deficiency(&g).unwrap();
        let out = symmetrize_within(&g, &w).unwrap();
        prop_assert!(out.edge_count() >= g.edge_count());
        prop_assert!(matching_number(&out).0 <= w.bound);
        prop_assert!(clique_number(&out).unwrap().0 <= clique_number(&g).unwrap().0);
        prop_assert_eq!(&TutteBergeWitness::for_set(&out, &w.set).unwrap(), &w);
        // G - B is untouched.
        let rest: Vec<usize> = (0..n).filter(|v| !w.set.contains(v)).collect();
        prop_assert_eq!(g.induced_subgraph(&rest).unwrap().0, out.induced_subgraph(&rest).unwrap().0);
        // Non-adjacency on B is transitive at the fixpoint.
        for &x in &w.set {
            for &y in &w.set {
                for &z in &w.set {
                    if x != y && y != z && x != z && !out.has_edge(x, y) && !out.has_edge(y, z) {
                        prop_assert!(!out.has_edge(x, z));
                    }
                }
            }
        }
    }
}

#[test]
fn search_never_beats_the_oracle() {
    let config = SearchConfig::default();
    for n in 1..=6 {
        let table = enumerate_oracle(n, 1).unwrap();
        for (k, s) in table.cells() {
            let report = local_search_with(n, k, s, 17, &config).unwrap();
            let g = &report.best.graph;
            assert!(clique_number(g).unwrap().0 <= k);
            assert!(matching_number(g).0 <= s);
            assert_eq!(
                g.edge_count() as u64,
                table.max_edges(k, s),
                "n={n} k={k} s={s}"
            );
            assert_eq!(report.formula_value, ex_edges(n, k, s).unwrap().value);
        }
    }
}

#[test]
fn search_respects_constraints_without_stopping_early() {
    let config = SearchConfig {
        restarts: 4,
        iters: 10,
        stop_at_bound: false,
        ..SearchConfig::default()
    };
    for (n, k, s, seed) in [(10, 3, 3, 1), (12, 4, 4, 2), (9, 2, 4, 3), (14, 5, 5, 4)] {
        let report = local_search_with(n, k, s, seed, &config).unwrap();
        let g = &report.best.graph;
        assert!(clique_number(g).unwrap().0 <= k);
        assert!(matching_number(g).0 <= s);
        assert!(g.edge_count() as u64 <= report.formula_value);
        let w = report.best.witness_b.as_ref().unwrap();
        assert!(w.bound <= s);
        assert_eq!(report.restarts.len(), 4);
    }
}
