use proptest::prelude::*;
use turanmatch::formulas::{g_edges, turan_edges};
use turanmatch::graph::{make_gks, make_turan, parse_graph, random_graph, write_graph, Graph};
use turanmatch::invariants::{clique_number, matching_number};

#[test]
fn turan_generator_matches_formula() {
    for n in 0..=60 {
        for k in 1..=n + 2 {
            let (g, p) = make_turan(n, k).unwrap();
            assert!(g.is_consistent());
            assert_eq!(
                g.edge_count() as u64,
                turan_edges(n, k).unwrap(),
                "T({n},{k})"
            );
            assert_eq!(p.classes().len(), k);
            assert_eq!(p.sizes().iter().sum::<usize>(), n);
            let sizes = p.sizes();
            assert!(sizes.windows(2).all(|w| w[0] >= w[1]));
            assert!(sizes[0] - sizes[k - 1] <= 1);
            if n <= 20 {
                assert_eq!(clique_number(&g).unwrap().0, n.min(k));
            }
        }
    }
}

#[test]
fn gks_generator_matches_formula() {
    for n in 0..=40 {
        for k in 1..=n + 2 {
            for s in 0..=n / 2 {
                if k == 1 && s > 0 {
                    continue;
                }
                let (g, p) = make_gks(n, k, s).unwrap();
                assert_eq!(g.edge_count() as u64, g_edges(n, k, s).unwrap());
                assert_eq!(p.sizes().last().copied(), Some(n - s));
                assert_eq!(matching_number(&g).0, s, "ν(G({n},{k},{s}))");
                if n > s && n <= 24 {
                    assert_eq!(clique_number(&g).unwrap().0, k.min(s + 1));
                }
            }
        }
    }
}

#[test]
fn random_graph_golden() {
    // Recorded once from ChaCha8 with lexicographic pair order.
    let g = random_graph(5, 0.5, 42);
    assert_eq!(write_graph(&g), "5 5\n0 3\n1 2\n1 3\n1 4\n3 4\n");
}

#[test]
fn edge_list_round_trip_on_seeded_graphs() {
    for seed in 0..100u64 {
        let g = random_graph(1 + (seed % 30) as usize, (seed % 10) as f64 / 9.0, seed);
        let text = write_graph(&g);
        assert_eq!(parse_graph(&text).unwrap(), g);
        assert!(text.ends_with('\n'));
    }
}

proptest! {
    #[test]
    fn round_trip(n in 0usize..40, p in 0.0f64..=1.0, seed in any::<u64>()) {
        let g = random_graph(n, p, seed);
        prop_assert!(g.is_consistent());
        prop_assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);
    }

    #[test]
    fn induced_subgraph_keeps_inner_edges(n in 1usize..20, seed in any::<u64>(), pick in any::<u32>()) {
        let g = random_graph(n, 0.5, seed);
        let chosen: Vec<usize> = (0..n).filter(|v| pick >> v & 1 == 1).collect();
        let (sub, map) = g.induced_subgraph(&chosen).unwrap();
        let inner = g.edges().filter(|&(u, v)| chosen.contains(&u) && chosen.contains(&v)).count();
        prop_assert_eq!(sub.edge_count(), inner);
        for (a, b) in sub.edges() {
            prop_assert!(g.has_edge(map[a], map[b]));
        }
    }
}

#[test]
fn padded_keeps_edges() {
    let (t, _) = make_turan(7, 3).unwrap();
    let g = t.padded(5);
    assert_eq!(g.n(), 12);
    assert_eq!(g.edge_count(), 16);
    assert_eq!(g.degree(11), 0);
    assert_eq!(Graph::empty(3).padded(0), Graph::empty(3));
}
