use proptest::prelude::*;

use ramsey_lab::graph::io::{parse_edge_list, to_edge_list};
use ramsey_lab::graph::{pair_count, random_halving, sample_gnp};
use ramsey_lab::witness::{brute_force_contains, contains_book, contains_kmn};
use ramsey_lab::{Graph, PatternSpec, RngStream};

fn graph_strategy(max_vertices: usize) -> impl Strategy<Value = Graph> {
    (1..=max_vertices).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), pair_count(n)).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn graph_invariants(g in graph_strategy(20)) {
        let n = g.vertex_count();
        let degree_sum: usize = (0..n).map(|v| g.degree(v)).sum();
        prop_assert_eq!(degree_sum, 2 * g.edge_count());
        prop_assert!(g.edge_count() <= pair_count(n));
        for v in 0..n {
            prop_assert!(!g.has_edge(v, v));
        }
        for (u, v) in g.edges() {
            prop_assert!(u < v);
            prop_assert!(g.has_edge(v, u));
        }
        prop_assert!(g.is_subgraph_of(&Graph::complete(n)));
    }

    #[test]
    fn edge_list_round_trip(g in graph_strategy(25)) {
        prop_assert_eq!(parse_edge_list(&to_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn halving_partitions_source(seed in any::<u64>(), n in 0usize..40, p in 0.0f64..=1.0) {
        let g = sample_gnp(n, p, &RngStream::new(seed, 0)).unwrap();
        let split = random_halving(&g, &RngStream::new(seed, 1));
        prop_assert!(split.partitions(&g));
        prop_assert_eq!(split.red.edge_count() + split.blue.edge_count(), g.edge_count());
        prop_assert_eq!(split.source(), g);
    }

    #[test]
    fn sampling_is_deterministic(seed in any::<u64>(), stream in any::<u64>(), n in 0usize..60, p in 0.0f64..=1.0) {
        let rng = RngStream::new(seed, stream);
        let a = sample_gnp(n, p, &rng).unwrap();
        prop_assert_eq!(&a, &sample_gnp(n, p, &rng).unwrap());
        prop_assert_eq!(random_halving(&a, &rng), random_halving(&a, &rng));
    }

    #[test]
    fn containment_is_monotone_under_edge_addition(g in graph_strategy(10), extra in (0usize..10, 0usize..10), m in 1usize..3, n in 1usize..4) {
        let (u, v) = extra;
        let mut edges: Vec<_> = g.edges().collect();
        if u != v && u < g.vertex_count() && v < g.vertex_count() {
            edges.push((u, v));
        }
        let bigger = Graph::from_edges(g.vertex_count(), edges).unwrap();
        if m <= g.vertex_count() {
            if contains_kmn(&g, m, n).unwrap().is_some() {
                prop_assert!(contains_kmn(&bigger, m, n).unwrap().is_some());
            }
            if contains_book(&g, m, n).unwrap().is_some() {
                prop_assert!(contains_book(&bigger, m, n).unwrap().is_some());
            }
        }
    }

    #[test]
    fn book_implies_complete_bipartite(g in graph_strategy(11), m in 1usize..4, n in 1usize..5) {
        prop_assume!(m <= g.vertex_count());
        if contains_book(&g, m, n).unwrap().is_some() {
            prop_assert!(contains_kmn(&g, m, n).unwrap().is_some());
        }
    }

    #[test]
    fn witnesses_are_valid(g in graph_strategy(14), m in 1usize..4, n in 1usize..5) {
        prop_assume!(m <= g.vertex_count());
        if let Some(w) = contains_kmn(&g, m, n).unwrap() {
            prop_assert!(w.certifies_kmn(&g, m, n));
        }
        if let Some(w) = contains_book(&g, m, n).unwrap() {
            prop_assert!(w.certifies_book(&g, m, n));
            prop_assert_eq!(w.core.len(), m);
            prop_assert!(w.leaves.len() >= n);
        }
    }

    #[test]
    fn search_agrees_with_brute_force(g in graph_strategy(9), m in 1usize..4, n in 1usize..4) {
        prop_assume!(m <= g.vertex_count());
        let kmn = PatternSpec::complete_bipartite(m, n).unwrap();
        let book = PatternSpec::book(m, n).unwrap();
        prop_assert_eq!(contains_kmn(&g, m, n).unwrap().is_some(), brute_force_contains(&g, &kmn).unwrap());
        prop_assert_eq!(contains_book(&g, m, n).unwrap().is_some(), brute_force_contains(&g, &book).unwrap());
    }

    #[test]
    fn containment_symmetric_in_kmn(g in graph_strategy(12), m in 1usize..4, n in 1usize..4) {
        prop_assume!(m.max(n) <= g.vertex_count());
        prop_assert_eq!(contains_kmn(&g, m, n).unwrap().is_some(), contains_kmn(&g, n, m).unwrap().is_some());
    }

    #[test]
    fn pair_density_in_unit_interval(g in graph_strategy(16), split in 1usize..15) {
        let n = g.vertex_count();
        prop_assume!(split < n);
        let xs: Vec<usize> = (0..split).collect();
        let ys: Vec<usize> = (split..n).collect();
        let d = g.pair_density(&xs, &ys).unwrap();
        prop_assert!((0.0..=1.0).contains(&d));
        let crossing = g.edges().filter(|&(u, v)| u < split && v >= split).count();
        prop_assert_eq!(d, crossing as f64 / (xs.len() * ys.len()) as f64);
    }
}
