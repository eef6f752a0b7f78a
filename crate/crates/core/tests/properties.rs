mod common;

use common::{doubled_delta, doubled_tau, floyd_warshall, oracle_doubled_delta};
use hypdom::domination::{derive_sequence, hierarchical_dominating_set, hierarchy_check};
use hypdom::eccentricity::compute_all_eccentricities;
use hypdom::graph::{bfs_distances, load_edge_list, write_edge_list, EdgeListFormat};
use hypdom::hyperbolicity::{delta4, lemma_sandwich_check, tau4};
use hypdom::labeling::{build_hub_labels, LabelOrdering};
use hypdom::{compute_hyperbolicity, Graph, SearchConfig};
use proptest::prelude::*;

/// A random tree plus a few extra edges: always connected.
fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (4..=max_n).prop_flat_map(|n| {
        let parents = proptest::collection::vec(any::<u32>(), n - 1);
        let extra = proptest::collection::vec((0..n as u32, 0..n as u32), 0..2 * n);
        (parents, extra).prop_map(move |(parents, extra)| {
            let tree = parents.iter().enumerate().map(|(i, &p)| ((i + 1) as u32, p % (i as u32 + 1)));
            let extra = extra.into_iter().filter(|(u, v)| u != v);
            Graph::from_edges(n, tree.chain(extra).collect::<Vec<_>>())
        })
    })
}

fn permutations() -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let p = [a, b, c, d];
                    if (0..4).all(|i| p.contains(&i)) {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn delta4_is_symmetric(g in graph(14), q in proptest::array::uniform4(0usize..14)) {
        let d = floyd_warshall(&g);
        let q = q.map(|v| v % g.n());
        let at = |p: [usize; 4]| {
            let [u, v, x, y] = p.map(|i| q[i]);
            delta4(d[u][v], d[x][y], d[u][x], d[v][y], d[u][y], d[v][x]).0
        };
        let base = at([0, 1, 2, 3]);
        prop_assert_eq!(base, doubled_delta(&d, q));
        for p in permutations() {
            prop_assert_eq!(at(p), base);
        }
    }

    #[test]
    fn tau4_matches_oracle(g in graph(14), q in proptest::array::uniform4(0usize..14)) {
        let d = floyd_warshall(&g);
        let [u, v, x, y] = q.map(|v| v % g.n());
        let t = tau4(d[u][v], d[x][y], d[u][x], d[v][y], d[u][y], d[v][x]).0;
        prop_assert_eq!(t, doubled_tau(&d, [u, v, x, y]));
        prop_assert!(t <= doubled_delta(&d, [u, v, x, y]));
    }

    #[test]
    fn bfs_matches_floyd_warshall(g in graph(30)) {
        let d = floyd_warshall(&g);
        for s in g.vertices() {
            prop_assert_eq!(&bfs_distances(&g, s), &d[s as usize]);
        }
    }

    #[test]
    fn hub_labels_answer_exact_distances(g in graph(30), shuffle in any::<u64>()) {
        let d = floyd_warshall(&g);
        let mut order: Vec<u32> = g.vertices().collect();
        order.sort_by_key(|&v| (v as u64).wrapping_mul(shuffle | 1) ^ shuffle);
        for ordering in [LabelOrdering::DegreeDescending, LabelOrdering::Custom(order)] {
            let labels = build_hub_labels(&g, &ordering).unwrap();
            for u in g.vertices() {
                for v in g.vertices() {
                    prop_assert_eq!(labels.query_distance(u, v), d[u as usize][v as usize]);
                }
            }
        }
    }

    #[test]
    fn eccentricities_match_all_bfs(g in graph(40)) {
        let t = compute_all_eccentricities(&g);
        let want: Vec<u32> = g.vertices().map(|s| *bfs_distances(&g, s).iter().max().unwrap()).collect();
        prop_assert_eq!(&t.ecc, &want);
        prop_assert_eq!(t.radius, *want.iter().min().unwrap());
        prop_assert_eq!(t.diameter, *want.iter().max().unwrap());
        prop_assert_eq!(want[t.central_vertex as usize], t.radius);
        prop_assert!(want[..t.central_vertex as usize].iter().all(|&e| e > t.radius));
    }

    #[test]
    fn hierarchy_invariants(g in graph(40), k in 0u32..6, r in 1.2f64..4.0) {
        let h = hierarchical_dominating_set(&g, &derive_sequence(k, r).unwrap());
        let report = hierarchy_check(&g, &h);
        prop_assert!(report.is_ok(), "{:?}", report.violations);
        let sandwich = lemma_sandwich_check(&g, &h, 2_000, 1);
        prop_assert!(sandwich.is_ok(), "{:?}", sandwich.violations);
    }

    #[test]
    fn max_tau_equals_max_delta(g in graph(11)) {
        let d = floyd_warshall(&g);
        let n = g.n();
        let mut best = 0;
        for u in 0..n {
            for v in 0..n {
                for x in 0..n {
                    for y in 0..n {
                        best = best.max(doubled_tau(&d, [u, v, x, y]));
                    }
                }
            }
        }
        prop_assert_eq!(best, oracle_doubled_delta(&g));
    }

    #[test]
    fn engine_matches_oracle(g in graph(18), k in 0u32..5, r in 1.2f64..4.0) {
        let (res, _) = compute_hyperbolicity(&g, &SearchConfig::new(k, r)).unwrap();
        let want = oracle_doubled_delta(&g);
        prop_assert_eq!(res.delta.0, want);
        let d = floyd_warshall(&g);
        prop_assert_eq!(doubled_delta(&d, res.witness.map(|v| v as usize)), want);
        let s = res.delta.to_string();
        prop_assert!(s.ends_with(".0") || s.ends_with(".5"));
    }

    #[test]
    fn edge_list_round_trip(g in graph(30)) {
        let mut buf = Vec::new();
        write_edge_list(&g, None, &mut buf).unwrap();
        let back = load_edge_list(&buf[..], EdgeListFormat::EdgeList).unwrap();
        prop_assert_eq!(back.graph.n(), g.n());
        let mut a: Vec<_> = g.edges().collect();
        let mut b: Vec<_> = back
            .graph
            .edges()
            .map(|(u, v)| {
                let (u, v) = (back.original_ids[u as usize] as u32, back.original_ids[v as usize] as u32);
                (u.min(v), u.max(v))
            })
            .collect();
        a.sort_unstable();
        b.sort_unstable();
        prop_assert_eq!(a, b);
    }
}
