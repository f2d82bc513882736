mod common;

use common::{rational_segments_intersect, segment, TestRng};
use proptest::prelude::*;
use strgraph::geometry::{orient, polylines_intersect, segments_intersect};
use strgraph::{Point, Polyline};

fn coords(range: i64) -> impl Strategy<Value = (i64, i64, i64, i64)> {
    (
        -range..=range,
        -range..=range,
        -range..=range,
        -range..=range,
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn matches_rational_oracle(a in coords(100), b in coords(100)) {
        if let (Some(s1), Some(s2)) = (segment(a.0, a.1, a.2, a.3), segment(b.0, b.1, b.2, b.3)) {
            prop_assert_eq!(segments_intersect(s1, s2), rational_segments_intersect(s1, s2));
        }
    }

    // A tiny grid makes collinear and touching cases common.
    #[test]
    fn matches_rational_oracle_on_degenerate_grid(a in coords(3), b in coords(3)) {
        if let (Some(s1), Some(s2)) = (segment(a.0, a.1, a.2, a.3), segment(b.0, b.1, b.2, b.3)) {
            prop_assert_eq!(segments_intersect(s1, s2), rational_segments_intersect(s1, s2));
            prop_assert_eq!(segments_intersect(s1, s2), segments_intersect(s2, s1));
        }
    }

    #[test]
    fn orientation_is_antisymmetric(a in coords(1 << 30), b in (-(1i64 << 30)..=1 << 30, -(1i64 << 30)..=1 << 30)) {
        let p = Point::new(a.0, a.1).unwrap();
        let q = Point::new(a.2, a.3).unwrap();
        let r = Point::new(b.0, b.1).unwrap();
        prop_assert_eq!(orient(p, q, r), -orient(q, p, r));
        prop_assert_eq!(orient(p, q, r), orient(q, r, p));
    }
}

#[test]
fn extreme_coordinates_stay_exact() {
    let m = strgraph::geometry::MAX_COORD;
    let s1 = segment(-m, -m, m, m).unwrap();
    let s2 = segment(-m, m, m, -m).unwrap();
    let s3 = segment(-m, -m + 1, m - 1, m).unwrap();
    assert!(segments_intersect(s1, s2));
    assert!(!segments_intersect(s1, s3));
    assert_eq!(
        segments_intersect(s1, s3),
        rational_segments_intersect(s1, s3)
    );
}

#[test]
fn polylines_agree_with_segmentwise_oracle() {
    let mut rng = TestRng(99);
    let mut coord = || (rng.next() % 41) as i64 - 20;
    for _ in 0..500 {
        let mut make = || {
            let mut pts: Vec<Point> = Vec::new();
            while pts.len() < 4 {
                let p = Point::new(coord(), coord()).unwrap();
                if pts.last() != Some(&p) {
                    pts.push(p);
                }
            }
            Polyline::new(pts).unwrap()
        };
        let (c1, c2) = (make(), make());
        let oracle = c1
            .segments()
            .any(|s| c2.segments().any(|t| rational_segments_intersect(s, t)));
        assert_eq!(polylines_intersect(&c1, &c2), oracle);
    }
}
