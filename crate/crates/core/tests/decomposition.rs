mod common;

use common::{binomial, brute_alpha, brute_biclique, brute_chromatic_number, gnp};
use proptest::prelude::*;
use strgraph::decomposition::{
    certified_product, clique_or_independent, color_graph, crossing_count, crossing_pair_sets,
    find_independent_set, find_independent_set_traced, greedy_biclique, max_biclique_exact,
    quasi_planarity, theorem3_bound, Branch,
};
use strgraph::generators::{
    convex_drawing, disjoint_segments, grid_biclique, interval_cycle, pairwise_crossing_star,
    random_drawing, random_plane_drawing, random_segments,
};
use strgraph::graph::induced_subgraph;
use strgraph::string_graph::build_string_graph;
use strgraph::{Graph, ParamSet};

fn random_family(n: usize, seed: u64) -> Graph {
    build_string_graph(&random_segments(n, 8 * n as i64, seed).unwrap())
}

#[test]
fn coloring_on_named_families() {
    let p = ParamSet::default();
    for n in [1, 5, 30] {
        let g = build_string_graph(&disjoint_segments(n).unwrap());
        assert_eq!(color_graph(&g, 2, &p).coloring.k, 1);
    }
    for n in [2, 6, 25] {
        let g = build_string_graph(&pairwise_crossing_star(n).unwrap());
        let out = color_graph(&g, n + 1, &p);
        assert!(out.coloring.is_proper(&g));
        assert_eq!(out.coloring.k, n);
    }
    let c5 = build_string_graph(&interval_cycle(5).unwrap());
    assert_eq!(color_graph(&c5, 3, &p).coloring.k, 3);
    assert_eq!(brute_chromatic_number(&c5), 3);
}

#[test]
fn coloring_never_undercuts_chromatic_number() {
    let p = ParamSet::default();
    for seed in 0..40 {
        let n = 4 + seed as usize % 9;
        let g = random_family(n, seed);
        let out = color_graph(&g, 4, &p);
        assert!(out.coloring.is_proper(&g));
        assert!(out.coloring.k >= brute_chromatic_number(&g));
    }
}

#[test]
fn adding_colour_classes_back_in_reverse_rebuilds_the_graph() {
    let g = random_family(60, 3);
    let coloring = color_graph(&g, 4, &ParamSet::default()).coloring;
    let mut alive: Vec<usize> = Vec::new();
    let mut m = 0;
    for class in coloring.classes().iter().rev() {
        // a class brings no edges of its own, only edges to earlier classes
        let gained = g
            .edges()
            .filter(|&(u, v)| {
                class.contains(&u) && alive.contains(&v) || class.contains(&v) && alive.contains(&u)
            })
            .count();
        alive.extend(class);
        m += gained;
        assert_eq!(induced_subgraph(&g, &alive).unwrap().0.m(), m);
    }
    assert_eq!(alive.len(), g.n());
    assert_eq!(m, g.m());
}

#[test]
fn independent_set_matches_oracle_in_base_case() {
    let p = ParamSet::default();
    for seed in 0..40 {
        let n = 3 + seed as usize % (p.base_case_n - 2);
        let g = random_family(n, seed);
        let set = find_independent_set(&g, 3, &p);
        assert!(g.is_independent(&set));
        assert_eq!(set.len(), brute_alpha(&g), "seed {seed}");
    }
}

#[test]
fn independent_set_quality_on_random_families() {
    let p = ParamSet::default();
    for seed in 0..10 {
        for n in [20, 40, 60] {
            let g = random_family(n, seed);
            let (set, stats) = find_independent_set_traced(&g, 4, &p);
            assert!(g.is_independent(&set));
            assert!(!set.is_empty());
            assert_eq!(stats.union_violations, 0);
            if n <= 20 {
                assert!(4 * set.len() >= brute_alpha(&g));
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn independent_for_every_t(n in 1usize..200, seed in 0u64..1000, t in 2usize..=8) {
        let g = random_family(n, seed);
        let set = find_independent_set(&g, t, &ParamSet::default());
        prop_assert!(g.is_independent(&set));
        prop_assert!(set.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn greedy_biclique_is_a_biclique_and_below_exact(n in 2usize..=10, seed in 0u64..500, p in 0.1f64..0.9) {
        let g = gnp(n, p, seed);
        let greedy = greedy_biclique(&g);
        let exact = max_biclique_exact(&g).unwrap();
        prop_assert!(greedy.certifies(&g));
        prop_assert!(exact.certifies(&g));
        prop_assert!(greedy.size() <= exact.size());
        prop_assert_eq!(exact.size(), brute_biclique(&g));
    }
}

#[test]
fn biclique_anchor_values() {
    assert_eq!(brute_biclique(&Graph::complete(6)), 3);
    assert_eq!(max_biclique_exact(&Graph::complete(6)).unwrap().size(), 3);
    let k33 = build_string_graph(&grid_biclique(3, 3).unwrap());
    assert_eq!(brute_biclique(&k33), 3);
    assert_eq!(max_biclique_exact(&k33).unwrap().size(), 3);
    assert_eq!(greedy_biclique(&k33).size(), 3);
    for n in 11..=14 {
        let g = random_family(n, n as u64);
        assert!(greedy_biclique(&g).size() <= max_biclique_exact(&g).unwrap().size());
    }
}

#[test]
fn clique_or_independent_certificates() {
    let p = ParamSet::default();
    let mut met = 0;
    let mut runs = 0;
    for n in [30, 50] {
        for seed in 0..10 {
            let g = random_family(n, seed);
            let out = clique_or_independent(&g, 0.5, &p).unwrap();
            match out.branch {
                Branch::Clique => assert!(g.is_clique(&out.set) && out.set.len() >= out.t),
                Branch::Independent => assert!(g.is_independent(&out.set)),
            }
            assert!(out.verified);
            runs += 1;
            met += out.meets_target() as usize;
        }
    }
    assert!(5 * met >= 4 * runs, "{met}/{runs}");
}

#[test]
fn bound_pipeline_for_default_constants() {
    for t in [2, 4, 16, 256] {
        let bp = theorem3_bound(t, &ParamSet::default()).unwrap();
        assert!(bp.n0_in_monotone_range() && bp.phi_n0_ok() && bp.ratio_ok() && bp.q_ok());
        // direct product, stepping n by 4/3 until the factors vanish
        let step = (4.0f64 / 3.0).log2();
        let direct: f64 = (0..100_000)
            .map(|i| 1.0 + bp.phi_log2(bp.log2_n0 + i as f64 * step))
            .product();
        assert!(bp.product.lower <= direct * (1.0 + 1e-12));
        assert!(direct <= bp.q);
        assert!(bp.q <= std::f64::consts::E);
    }
    let zero = certified_product(|_| 0.0, 0.0, 1e-12).unwrap();
    assert_eq!((zero.lower, zero.factors), (1.0, 0));
}

#[test]
fn convex_crossings_are_four_subsets() {
    for n in 4..=10 {
        let d = convex_drawing(n).unwrap();
        let pairs = (0..d.m()).flat_map(|i| (i + 1..d.m()).map(move |j| (i, j)));
        let oracle = pairs.filter(|&(i, j)| d.edges_cross(i, j)).count();
        assert_eq!(crossing_count(&d).count as u64, binomial(n as u64, 4));
        assert_eq!(oracle as u64, binomial(n as u64, 4));
    }
}

#[test]
fn plane_drawings() {
    for seed in 0..25 {
        let n = 5 + seed as usize;
        let d = random_plane_drawing(n, usize::MAX, seed).unwrap();
        assert!(d.m() <= 3 * n - 6);
        assert_eq!(crossing_count(&d).count, 0);
        assert!(quasi_planarity(&d, 2).unwrap());
        let sets = crossing_pair_sets(&d);
        assert!(sets.e1.is_empty() && sets.e2.is_empty());
    }
}

#[test]
fn crossing_pairs_recheck_and_ratio() {
    let k6 = convex_drawing(6).unwrap();
    let sets = crossing_pair_sets(&k6);
    assert!(!sets.e1.is_empty() && sets.certifies(&k6));
    assert!(!quasi_planarity(&k6, 3).unwrap());
    for seed in 0..20 {
        let d = random_drawing(20, 80, seed).unwrap();
        let stats = crossing_count(&d);
        assert!(stats.ratio.is_some());
        assert!(crossing_pair_sets(&d).certifies(&d));
    }
}

#[test]
fn colour_count_grows_slowly() {
    let p = ParamSet::default();
    for n in [64, 128, 256] {
        for seed in 0..3 {
            let g = random_family(n, seed);
            let k = color_graph(&g, 4, &p).coloring.k;
            assert!((k as f64) <= (n as f64).powf(0.9), "n = {n}, k = {k}");
        }
    }
}
