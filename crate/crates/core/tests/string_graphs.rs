mod common;

use common::{rational_segments_intersect, TestRng};
use strgraph::generators::{
    disjoint_segments, grid_biclique, interval_path, pairwise_crossing_star, random_drawing,
    random_segments,
};
use strgraph::string_graph::{build_edge_crossing_graph, build_string_graph};
use strgraph::{Graph, Point, Polyline};

#[test]
fn deterministic_generators_up_to_fifty() {
    for n in 1..=50 {
        assert_eq!(
            build_string_graph(&disjoint_segments(n).unwrap()),
            Graph::empty(n)
        );
        if n >= 2 {
            assert_eq!(
                build_string_graph(&pairwise_crossing_star(n).unwrap()),
                Graph::complete(n)
            );
            assert_eq!(
                build_string_graph(&interval_path(n).unwrap()),
                Graph::path(n)
            );
        }
        let (r, c) = (n.div_ceil(2), n / 2 + 1);
        assert_eq!(
            build_string_graph(&grid_biclique(r, c).unwrap()),
            Graph::complete_bipartite(r, c)
        );
    }
}

#[test]
fn random_families_match_segment_oracle() {
    for seed in 0..10 {
        let fam = random_segments(50, 400, seed).unwrap();
        let g = build_string_graph(&fam);
        assert!(g.is_well_formed());
        for i in 0..fam.len() {
            for j in i + 1..fam.len() {
                let s = fam.curves[i].segments().next().unwrap();
                let t = fam.curves[j].segments().next().unwrap();
                assert_eq!(g.has_edge(i, j), rational_segments_intersect(s, t));
            }
        }
    }
}

#[test]
fn string_graph_is_invariant_under_translation() {
    let mut rng = TestRng(5);
    for seed in 0..10 {
        let fam = random_segments(30, 200, seed).unwrap();
        let dx = (rng.next() % 10_000) as i64 - 5000;
        let dy = (rng.next() % 10_000) as i64 - 5000;
        assert_eq!(
            build_string_graph(&fam),
            build_string_graph(&fam.translate(dx, dy).unwrap())
        );
    }
}

#[test]
fn bent_curves_intersect_through_any_segment() {
    // An L-shape meets a segment only through its second leg.
    let pt = |x, y| Point::new(x, y).unwrap();
    let l = Polyline::new(vec![pt(0, 0), pt(10, 0), pt(10, 10)]).unwrap();
    let s = Polyline::segment(pt(8, 5), pt(12, 5)).unwrap();
    let far = Polyline::segment(pt(2, 5), pt(8, 5)).unwrap();
    let g = build_string_graph(&strgraph::CurveFamily::new(vec![l, s, far]));
    assert!(g.has_edge(0, 1));
    assert!(!g.has_edge(0, 2));
    assert!(g.has_edge(1, 2));
}

#[test]
fn crossing_graph_ignores_shared_endpoints() {
    for seed in 0..5 {
        let d = random_drawing(12, 30, seed).unwrap();
        let cg = build_edge_crossing_graph(&d);
        for (i, j) in cg.edges() {
            let (a, b) = (&d.edges()[i], &d.edges()[j]);
            // straight edges sharing an endpoint cannot cross elsewhere
            assert!(a.u != b.u && a.u != b.v && a.v != b.u && a.v != b.v);
        }
    }
}
