use proptest::prelude::*;
use proptest::sample::subsequence;

use meshstar::formulas::{
    combined_bound, cor13_span_f3, span_f1, span_f2, thm18_odd_bound, thm18_via_parts, thm6_even_bound, thm6_via_pairs,
    thm9_gstar_bound,
};
use meshstar::graph::{bfs_distances, build_path, build_star, cartesian_product, diameter};
use meshstar::io::{parse_graph, parse_labeling, write_graph, write_labeling, write_product_graph};
use meshstar::labeling::{consecutive_only_assign, greedy_assign, validate, Provenance};
use meshstar::ordering::paper_ordering;
use meshstar::product::build_product_graph;
use meshstar::search::{exact_rn, permutation_oracle};
use meshstar::{Budget, CellIndexing, Graph, Labeling, OrderingPlan, ProductParams, RadioSystem, VertexCoord};

fn indexing() -> impl Strategy<Value = CellIndexing> {
    prop::sample::select(CellIndexing::ALL.to_vec())
}

fn params(max_m: usize, max_n: usize) -> impl Strategy<Value = ProductParams> {
    (2..=max_m, 1..=max_n).prop_map(|(m, n)| ProductParams::new(m, n).unwrap())
}

/// Random connected graph: a random spanning tree plus extra edges.
fn connected_graph(max_vertices: usize) -> impl Strategy<Value = Graph> {
    (2..=max_vertices)
        .prop_flat_map(|n| {
            let parents: Vec<_> = (1..n).map(|v| 0..v).collect();
            let extra = prop::collection::vec((0..n, 0..n), 0..n);
            (Just(n), parents, extra)
        })
        .prop_map(|(n, parents, extra)| {
            let tree = parents.into_iter().enumerate().map(|(i, p)| (i + 1, p));
            let extra = extra.into_iter().filter(|(u, v)| u != v);
            Graph::from_edges(n, tree.chain(extra)).unwrap()
        })
}

fn family_factor() -> impl Strategy<Value = Graph> {
    prop_oneof![
        (2..=5usize).prop_map(|m| build_path(m).unwrap()),
        (1..=4usize).prop_map(|n| build_star(n).unwrap()),
    ]
}

fn graph_with_order(max_vertices: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    connected_graph(max_vertices).prop_flat_map(|g| {
        let order = Just((0..g.num_vertices()).collect::<Vec<_>>()).prop_shuffle();
        (Just(g), order)
    })
}

proptest! {
    #[test]
    fn coordinates_round_trip(p in params(7, 4), ix in indexing(), seed in any::<prop::sample::Index>()) {
        let id = seed.index(p.vertex_count());
        let c = p.decode(id).unwrap();
        prop_assert_eq!(p.encode(c), id);
        let i = 1 + seed.index(p.cells());
        let (row, col) = ix.cell_of(i, p.m()).unwrap();
        prop_assert_eq!(ix.index_of(row, col, p.m()).unwrap(), i);
    }

    #[test]
    fn product_degree_law(p in params(5, 4)) {
        let pg = build_product_graph(p, CellIndexing::RowMajor).unwrap();
        prop_assert_eq!(pg.graph.num_vertices(), p.m() * p.m() * (p.n() + 1));
        for (id, VertexCoord { row, col, star }) in pg.coords() {
            let extra = if star == 0 { p.n() } else { 1 };
            prop_assert_eq!(pg.graph.degree(id), p.mesh_degree(row, col) + extra);
        }
    }

    #[test]
    fn bfs_is_symmetric_and_metric(g in connected_graph(10)) {
        let n = g.num_vertices();
        let rows: Vec<Vec<u32>> = (0..n).map(|s| bfs_distances(&g, s).unwrap()).collect();
        for u in 0..n {
            prop_assert_eq!(rows[u][u], 0);
            for v in 0..n {
                prop_assert_eq!(rows[u][v], rows[v][u]);
                prop_assert_eq!(rows[u][v] == 1, g.has_edge(u, v));
                for w in 0..n {
                    prop_assert!(rows[u][w] <= rows[u][v] + rows[v][w]);
                }
            }
        }
    }

    #[test]
    fn diameter_is_additive(factors in prop::collection::vec(family_factor(), 2..=3)) {
        let product = cartesian_product(&factors).unwrap();
        let sum: u32 = factors.iter().map(|f| diameter(f).unwrap()).sum();
        prop_assert_eq!(diameter(&product).unwrap(), sum);
        let order: usize = factors.iter().map(Graph::num_vertices).product();
        prop_assert_eq!(product.num_vertices(), order);
    }

    #[test]
    fn greedy_is_always_valid((g, order) in graph_with_order(12)) {
        let sys = RadioSystem::new(&g).unwrap();
        let n = g.num_vertices();
        let plan = OrderingPlan::new(order.clone(), n, Provenance::External).unwrap();
        let l = greedy_assign(&sys, &plan);
        prop_assert!(validate(&sys, &l).unwrap().is_valid());
        prop_assert_eq!(l.get(order[0]), 0);
        // labels never decrease along the plan
        for w in order.windows(2) {
            prop_assert!(l.get(w[0]) < l.get(w[1]));
        }
    }

    #[test]
    fn consecutive_labels_telescope((g, order) in graph_with_order(10)) {
        let sys = RadioSystem::new(&g).unwrap();
        let plan = OrderingPlan::new(order.clone(), g.num_vertices(), Provenance::External).unwrap();
        let l = consecutive_only_assign(&sys, &plan);
        let total: u64 = order.windows(2).map(|w| sys.required_gap(w[0], w[1])).sum();
        prop_assert_eq!(l.get(*order.last().unwrap()), total);
        let greedy = greedy_assign(&sys, &plan);
        for &v in &order {
            prop_assert!(greedy.get(v) >= l.get(v));
        }
    }

    #[test]
    fn validity_ignores_shifts(g in connected_graph(8), labels in prop::collection::vec(0u64..30, 8), by in 0u64..100) {
        let sys = RadioSystem::new(&g).unwrap();
        let l = Labeling::new(labels[..g.num_vertices()].to_vec());
        let base = validate(&sys, &l).unwrap();
        prop_assert_eq!(&validate(&sys, &l.shifted(by)).unwrap(), &base);
        prop_assert_eq!(&validate(&sys, &l.normalized()).unwrap(), &base);
        prop_assert_eq!(l.shifted(by).span(), l.span());
    }

    #[test]
    fn file_formats_round_trip(g in connected_graph(12), labels in prop::collection::vec(0u64..1000, 1..20)) {
        let parsed = parse_graph(&write_graph(&g)).unwrap();
        prop_assert_eq!(parsed.graph, g);
        let l = Labeling::new(labels);
        prop_assert_eq!(parse_labeling(&write_labeling(&l)).unwrap(), l);
    }

    #[test]
    fn product_files_keep_coordinates(p in params(4, 3), ix in indexing()) {
        let pg = build_product_graph(p, ix).unwrap();
        let parsed = parse_graph(&write_product_graph(&pg)).unwrap();
        prop_assert_eq!(&parsed.graph, &pg.graph);
        let coords: Vec<_> = pg.coords().map(|(_, c)| c).collect();
        prop_assert_eq!(parsed.coords.unwrap(), coords);
    }

    #[test]
    fn even_identities(m in (1..=5usize).prop_map(|k| 2 * k), n in 1..=6usize) {
        let p = ProductParams::new(m, n).unwrap();
        prop_assert_eq!(thm6_even_bound(p).unwrap(), thm6_via_pairs(p).unwrap());
        prop_assert_eq!(combined_bound(p).unwrap(), thm6_even_bound(p).unwrap());
    }

    #[test]
    fn odd_identities(m in (1..=5usize).prop_map(|k| 2 * k + 1), n in 1..=6usize) {
        let p = ProductParams::new(m, n).unwrap();
        let g = thm9_gstar_bound(p).unwrap();
        prop_assert_eq!(g.statement, g.expanded);
        prop_assert_eq!(thm18_odd_bound(p).unwrap(), thm18_via_parts(p).unwrap());
        prop_assert_eq!(combined_bound(p).unwrap(), thm18_odd_bound(p).unwrap());
        if n >= 2 {
            prop_assert_eq!(cor13_span_f3(p).unwrap(), span_f1(p).unwrap() + span_f2(p).unwrap());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn search_agrees_with_oracle(g in connected_graph(7)) {
        let sys = RadioSystem::new(&g).unwrap();
        let exact = exact_rn(&sys, Budget::unlimited()).unwrap();
        let oracle = permutation_oracle(&sys).unwrap();
        prop_assert!(exact.is_exact());
        prop_assert_eq!(exact.value, oracle.value);
        let w = exact.witness.unwrap();
        prop_assert_eq!(w.span(), exact.value);
        prop_assert!(validate(&sys, &w).unwrap().is_valid());
    }

    #[test]
    fn exact_never_exceeds_greedy((g, order) in graph_with_order(9)) {
        let sys = RadioSystem::new(&g).unwrap();
        let plan = OrderingPlan::new(order, g.num_vertices(), Provenance::External).unwrap();
        let exact = exact_rn(&sys, Budget::unlimited()).unwrap();
        prop_assert!(exact.value <= greedy_assign(&sys, &plan).span());
    }

    #[test]
    fn constructions_are_permutations(p in params(7, 4), ix in indexing()) {
        let plan = paper_ordering(p, ix).unwrap();
        let mut seen = plan.sequence().to_vec();
        seen.sort_unstable();
        prop_assert_eq!(seen, (0..p.vertex_count()).collect::<Vec<_>>());
    }

    #[test]
    fn restricted_subsystems_keep_host_gaps(p in params(4, 2), picks in subsequence((0..8usize).collect::<Vec<_>>(), 2..=4)) {
        let pg = build_product_graph(p, CellIndexing::RowMajor).unwrap();
        let sys = RadioSystem::new(&pg.graph).unwrap();
        let sub = sys.restrict(&picks);
        prop_assert_eq!(sub.diameter(), sys.diameter());
        for (a, &u) in picks.iter().enumerate() {
            for (b, &v) in picks.iter().enumerate() {
                if a != b {
                    prop_assert_eq!(sub.required_gap(a, b), sys.required_gap(u, v));
                }
            }
        }
    }
}
