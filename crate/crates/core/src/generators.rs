//! Instance families. Every generator is a pure function of its parameters
//! and seed; seeded ones draw from [`SplitMix64`](crate::rng::SplitMix64).

use crate::error::{Error, Result};
use crate::geometry::{open_edges_intersect, orient, Point, Polyline};
use crate::rng::SplitMix64;
use crate::string_graph::{CurveFamily, Drawing};

/// Largest pairwise-crossing family offered.
pub const MAX_STAR: usize = 360;
/// Coordinate range used for random drawings.
pub const DRAWING_SPAN: i64 = 1024;
const MAX_RESAMPLES: usize = 1000;

fn pt(x: i64, y: i64) -> Point {
    Point::new(x, y).expect("generator coordinates stay small")
}

fn seg(a: Point, b: Point) -> Polyline {
    Polyline::segment(a, b).expect("generator segments are non-degenerate")
}

fn require(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidParameter(msg()))
    }
}

/// `n` horizontal segments at distinct heights.
pub fn disjoint_segments(n: usize) -> Result<CurveFamily> {
    require(n >= 1, || "disjoint_segments needs n >= 1".into())?;
    let curves = (0..n as i64)
        .map(|i| seg(pt(0, 2 * i), pt(10, 2 * i)))
        .collect();
    Ok(CurveFamily::new(curves))
}

/// `n` segments that pairwise cross, at pairwise distinct points.
///
/// Segment `i` joins `(i * n, 0)` to `(-i^2, 2n^2)`. Any two meet strictly
/// inside both, and no three are concurrent because the crossing abscissa at
/// a fixed height is a non-degenerate quadratic in `i`.
pub fn pairwise_crossing_star(n: usize) -> Result<CurveFamily> {
    require((2..=MAX_STAR).contains(&n), || {
        format!("pairwise_crossing_star needs 2 <= n <= {MAX_STAR}, got {n}")
    })?;
    let k = n as i64;
    let h = 2 * k * k;
    let curves = (0..k).map(|i| seg(pt(i * k, 0), pt(-i * i, h))).collect();
    Ok(CurveFamily::new(curves))
}

/// Flat segments `[2i, 2i + 3]` on the x-axis: the path `P_n`.
pub fn interval_path(n: usize) -> Result<CurveFamily> {
    require(n >= 2, || "interval_path needs n >= 2".into())?;
    let curves = (0..n as i64)
        .map(|i| seg(pt(2 * i, 0), pt(2 * i + 3, 0)))
        .collect();
    Ok(CurveFamily::new(curves))
}

/// The cycle `C_n`: `interval_path(n - 1)` closed by a bent curve that rises
/// from the right end of the last interval and comes down onto the first.
pub fn interval_cycle(n: usize) -> Result<CurveFamily> {
    require(n >= 3, || "interval_cycle needs n >= 3".into())?;
    let mut family = interval_path(n - 1)?;
    let right = 2 * (n as i64 - 2) + 3;
    let closing = Polyline::new(vec![pt(right, 0), pt(right, 5), pt(1, 5), pt(1, 0)])
        .expect("distinct consecutive vertices");
    family.curves.push(closing);
    Ok(family)
}

/// `r` horizontal and `c` vertical segments in a grid: `K_{r,c}`.
pub fn grid_biclique(r: usize, c: usize) -> Result<CurveFamily> {
    require(r >= 1 && c >= 1, || "grid_biclique needs r, c >= 1".into())?;
    let (ri, ci) = (r as i64, c as i64);
    let horizontal = (0..ri).map(|i| seg(pt(-1, i), pt(ci, i)));
    let vertical = (0..ci).map(|j| seg(pt(j, -1), pt(j, ri)));
    Ok(CurveFamily::new(horizontal.chain(vertical).collect()))
}

/// `n` random segments with endpoints in `[0, span]^2`.
///
/// Each segment draws `x1, y1, x2, y2` in that order via
/// `range_i64(0, span)`, redrawing the second endpoint while it equals the
/// first.
pub fn random_segments(n: usize, span: i64, seed: u64) -> Result<CurveFamily> {
    require(n >= 1, || "random_segments needs n >= 1".into())?;
    require(span >= 4 * n as i64, || {
        format!("random_segments needs span >= 4n = {}, got {span}", 4 * n)
    })?;
    let mut rng = SplitMix64::new(seed);
    let curves = (0..n)
        .map(|_| {
            let a = pt(rng.range_i64(0, span), rng.range_i64(0, span));
            loop {
                let b = pt(rng.range_i64(0, span), rng.range_i64(0, span));
                if b != a {
                    return seg(a, b);
                }
            }
        })
        .collect();
    Ok(CurveFamily::new(curves))
}

/// True iff the points, in the given cyclic order, form a strictly convex
/// polygon: every other point lies strictly left of every edge.
pub fn in_strictly_convex_position(points: &[Point]) -> bool {
    let n = points.len();
    (0..n).all(|i| {
        let (a, b) = (points[i], points[(i + 1) % n]);
        (0..n)
            .filter(|&j| j != i && j != (i + 1) % n)
            .all(|j| orient(a, b, points[j]) > 0)
    })
}

/// Complete graph drawn with straight edges on `n` rounded points of a circle
/// of radius 2^20.
pub fn convex_drawing(n: usize) -> Result<Drawing> {
    require((3..=64).contains(&n), || {
        format!("convex_drawing needs 3 <= n <= 64, got {n}")
    })?;
    let radius = (1u64 << 20) as f64;
    let points: Vec<Point> = (0..n)
        .map(|k| {
            let angle = 2.0 * std::f64::consts::PI * k as f64 / n as f64;
            pt(
                (radius * angle.cos()).round() as i64,
                (radius * angle.sin()).round() as i64,
            )
        })
        .collect();
    if !in_strictly_convex_position(&points) {
        return Err(Error::Generator(format!("rounded {n}-gon lost convexity")));
    }
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    Drawing::straight(points, &edges)
}

/// `n` points in `[0, span]^2`, no two equal and no three collinear. A
/// candidate that violates this is redrawn; more than 1000 redraws in total
/// is an error.
fn general_position_points(n: usize, span: i64, rng: &mut SplitMix64) -> Result<Vec<Point>> {
    let mut points: Vec<Point> = Vec::with_capacity(n);
    let mut redraws = 0;
    while points.len() < n {
        let c = pt(rng.range_i64(0, span), rng.range_i64(0, span));
        let degenerate = points
            .iter()
            .enumerate()
            .any(|(i, &a)| a == c || points[i + 1..].iter().any(|&b| orient(a, b, c) == 0));
        if degenerate {
            redraws += 1;
            if redraws > MAX_RESAMPLES {
                return Err(Error::Generator(format!(
                    "could not place {n} points in general position within span {span}"
                )));
            }
        } else {
            points.push(c);
        }
    }
    Ok(points)
}

fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

/// `n` random points in general position with `m` distinct random straight
/// edges (a shuffled prefix of all pairs, then sorted).
pub fn random_drawing(n: usize, m: usize, seed: u64) -> Result<Drawing> {
    require(n >= 2, || "random_drawing needs n >= 2".into())?;
    require(m <= n * (n - 1) / 2, || {
        format!("{m} edges do not fit on {n} vertices")
    })?;
    let mut rng = SplitMix64::new(seed);
    let points = general_position_points(n, DRAWING_SPAN, &mut rng)?;
    let mut pairs = all_pairs(n);
    rng.shuffle(&mut pairs);
    pairs.truncate(m);
    pairs.sort_unstable();
    Drawing::straight(points, &pairs)
}

/// Random crossing-free straight-line drawing: points in general position,
/// candidate edges in shuffled order, each kept if it crosses no kept edge,
/// until `max_edges` are kept or candidates run out.
pub fn random_plane_drawing(n: usize, max_edges: usize, seed: u64) -> Result<Drawing> {
    require(n >= 2, || "random_plane_drawing needs n >= 2".into())?;
    let mut rng = SplitMix64::new(seed);
    let points = general_position_points(n, DRAWING_SPAN, &mut rng)?;
    let mut pairs = all_pairs(n);
    rng.shuffle(&mut pairs);
    let mut kept: Vec<(usize, usize, Polyline)> = Vec::new();
    for (u, v) in pairs {
        if kept.len() >= max_edges {
            break;
        }
        let curve = seg(points[u], points[v]);
        let crosses = kept.iter().any(|(a, b, other)| {
            let shared: Vec<Point> = [u, v]
                .into_iter()
                .filter(|w| w == a || w == b)
                .map(|w| points[w])
                .collect();
            open_edges_intersect(&curve, other, &shared)
        });
        if !crosses {
            kept.push((u, v, curve));
        }
    }
    kept.sort_by_key(|&(u, v, _)| (u, v));
    Drawing::new(points, kept)
}
