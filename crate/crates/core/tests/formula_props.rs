use turanmatch::formulas::{
    case4_b_max, case4_f, erdos_gallai_edges, ex_edges, g_edges, pairs, turan_edges,
};
use turanmatch::graph::{make_gks, make_turan};
use turanmatch::invariants::{clique_number, matching_number};

/// `t(n, k)` by counting cross-class pairs of explicit class sizes.
fn turan_by_classes(n: usize, k: usize) -> u64 {
    let sizes: Vec<u64> = (0..k).map(|i| ((n + k - 1 - i) / k) as u64).collect();
    let mut cross = 0;
    for i in 0..k {
        for j in i + 1..k {
            cross += sizes[i] * sizes[j];
        }
    }
    cross
}

#[test]
fn turan_closed_form_matches_class_products() {
    for n in 0..120 {
        for k in 1..40 {
            assert_eq!(
                turan_edges(n, k).unwrap(),
                turan_by_classes(n, k),
                "t({n},{k})"
            );
        }
    }
}

#[test]
fn case4_discrete_convexity() {
    for k in 2..=10 {
        for s in 0..=30 {
            let top = case4_b_max(k, s).unwrap();
            for n in 2 * s + 1..=100 {
                let f = |b| case4_f(n, k, s, b).unwrap() as i64;
                for b in 0..(top.saturating_sub(1)) {
                    assert!(
                        f(b + 2) - f(b + 1) >= f(b + 1) - f(b),
                        "k={k} s={s} n={n} b={b}"
                    );
                }
                let best = (0..=top).map(f).max().unwrap();
                assert!(best == f(0) || best == f(top), "k={k} s={s} n={n}");
                assert_eq!(f(0) as u64, turan_edges(2 * s + 1, k).unwrap());
            }
        }
    }
}

#[test]
fn erdos_gallai_specialization() {
    for n in 0..=100 {
        for s in 0..=40 {
            let closed = if n > 2 * s {
                pairs(2 * s + 1).max(pairs(s) + (s * (n - s)) as u64)
            } else {
                pairs(n)
            };
            for k in [2 * s + 1, 2 * s + 2, 3 * s + 5, 200] {
                assert_eq!(
                    ex_edges(n, k, s).unwrap().value,
                    closed,
                    "n={n} k={k} s={s}"
                );
            }
            assert_eq!(erdos_gallai_edges(n, s).unwrap(), closed);
        }
    }
}

#[test]
fn turan_specialization() {
    for n in 0..=100 {
        for k in 1..=n + 2 {
            for s in [n / 2, n / 2 + 1, n, 3 * n + 7] {
                assert_eq!(ex_edges(n, k, s).unwrap().value, turan_edges(n, k).unwrap());
            }
        }
    }
}

#[test]
fn monotone_in_each_parameter() {
    let ex = |n, k, s| ex_edges(n, k, s).unwrap().value;
    for n in 0..=60 {
        for k in 1..=12 {
            for s in 0..=20 {
                let v = ex(n, k, s);
                assert!(ex(n + 1, k, s) >= v);
                assert!(ex(n, k + 1, s) >= v);
                assert!(ex(n, k, s + 1) >= v);
            }
        }
    }
}

#[test]
fn constructions_attain_the_value() {
    for n in 1..=40 {
        for k in 1..=n {
            for s in 0..=n / 2 {
                let r = ex_edges(n, k, s).unwrap();
                let core = (2 * s + 1).min(n);
                let (t, _) = make_turan(core, k).unwrap();
                let turan = t.padded(n - core);
                let gks = if k == 1 {
                    make_gks(n, 1, 0).unwrap().0
                } else {
                    make_gks(n, k, s).unwrap().0
                };
                assert_eq!(
                    r.value,
                    turan.edge_count().max(gks.edge_count()) as u64,
                    "n={n} k={k} s={s}"
                );
                if n <= 24 {
                    for g in [&turan, &gks] {
                        assert!(clique_number(g).unwrap().0 <= k);
                        assert!(matching_number(g).0 <= s);
                    }
                }
            }
        }
    }
}

#[test]
fn gks_formula_matches_parts() {
    for n in 0..50 {
        for k in 2..10 {
            for s in 0..=n {
                assert_eq!(
                    g_edges(n, k, s).unwrap(),
                    turan_by_classes(s, k - 1) + (s * (n - s)) as u64
                );
            }
        }
    }
}
