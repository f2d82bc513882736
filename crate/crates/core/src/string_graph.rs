//! Curve families, topological drawings, and the intersection graphs built
//! from them.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::geometry::{open_edges_intersect, polylines_intersect, Point, Polyline};
use crate::graph::Graph;

/// Curves indexed by vertex: curve `i` represents vertex `i`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CurveFamily {
    pub curves: Vec<Polyline>,
}

impl CurveFamily {
    pub fn new(curves: Vec<Polyline>) -> Self {
        CurveFamily { curves }
    }

    pub fn len(&self) -> usize {
        self.curves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.curves.is_empty()
    }

    pub fn translate(&self, dx: i64, dy: i64) -> Result<Self> {
        let curves = self
            .curves
            .iter()
            .map(|c| c.translate(dx, dy))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(CurveFamily { curves })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DrawnEdge {
    pub u: usize,
    pub v: usize,
    pub curve: Polyline,
}

/// A topological graph: one point per vertex and one polyline per edge.
///
/// Construction checks that every curve runs between its endpoints' points,
/// that no curve touches a vertex point other than its own endpoints, and that
/// the underlying graph is simple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Drawing {
    points: Vec<Point>,
    edges: Vec<DrawnEdge>,
}

impl Drawing {
    pub fn new(points: Vec<Point>, edges: Vec<(usize, usize, Polyline)>) -> Result<Self> {
        let n = points.len();
        let mut distinct = HashSet::with_capacity(n);
        for (i, p) in points.iter().enumerate() {
            if !distinct.insert(*p) {
                return Err(Error::InvalidDrawing(format!(
                    "vertex {i} repeats point {p}"
                )));
            }
        }
        let mut seen_pairs = HashSet::with_capacity(edges.len());
        let mut drawn = Vec::with_capacity(edges.len());
        for (idx, (u, v, curve)) in edges.into_iter().enumerate() {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::InvalidDrawing(format!(
                    "edge {idx} is a loop at vertex {u}"
                )));
            }
            if !seen_pairs.insert((u.min(v), u.max(v))) {
                return Err(Error::InvalidDrawing(format!("parallel edge {u}-{v}")));
            }
            if curve.first() != points[u] || curve.last() != points[v] {
                return Err(Error::InvalidDrawing(format!(
                    "edge {idx} ({u}-{v}) does not run between its endpoint points"
                )));
            }
            for (w, &p) in points.iter().enumerate() {
                if w != u && w != v && curve.contains(p) {
                    return Err(Error::InvalidDrawing(format!(
                        "edge {idx} ({u}-{v}) passes through vertex {w} at {p}"
                    )));
                }
            }
            drawn.push(DrawnEdge { u, v, curve });
        }
        Ok(Drawing {
            points,
            edges: drawn,
        })
    }

    /// Straight-line drawing of the given edge list.
    pub fn straight(points: Vec<Point>, edges: &[(usize, usize)]) -> Result<Self> {
        let n = points.len();
        let mut with_curves = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange {
                    vertex: u.max(v),
                    n,
                });
            }
            let curve = Polyline::segment(points[u], points[v]).map_err(Error::from)?;
            with_curves.push((u, v, curve));
        }
        Drawing::new(points, with_curves)
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn edges(&self) -> &[DrawnEdge] {
        &self.edges
    }

    pub fn n(&self) -> usize {
        self.points.len()
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Underlying abstract graph.
    pub fn graph(&self) -> Graph {
        Graph::from_edges(self.n(), self.edges.iter().map(|e| (e.u, e.v)))
            .expect("validated at construction")
    }

    /// Points of the drawing vertices shared by edges `i` and `j`.
    pub fn shared_endpoints(&self, i: usize, j: usize) -> Vec<Point> {
        let (a, b) = (&self.edges[i], &self.edges[j]);
        [a.u, a.v]
            .into_iter()
            .filter(|w| *w == b.u || *w == b.v)
            .map(|w| self.points[w])
            .collect()
    }

    /// Whether edges `i` and `j` cross once their endpoints are removed.
    pub fn edges_cross(&self, i: usize, j: usize) -> bool {
        i != j
            && open_edges_intersect(
                &self.edges[i].curve,
                &self.edges[j].curve,
                &self.shared_endpoints(i, j),
            )
    }
}

/// Intersection graph of a curve family (closed curves: touching counts).
pub fn build_string_graph(family: &CurveFamily) -> Graph {
    let curves = &family.curves;
    let boxes: Vec<_> = curves.iter().map(Polyline::bbox).collect();
    let mut edges = Vec::new();
    for u in 0..curves.len() {
        for v in u + 1..curves.len() {
            let ((lo1, hi1), (lo2, hi2)) = (boxes[u], boxes[v]);
            if lo1.x > hi2.x || lo2.x > hi1.x || lo1.y > hi2.y || lo2.y > hi1.y {
                continue;
            }
            if polylines_intersect(&curves[u], &curves[v]) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(curves.len(), edges).expect("indices in range")
}

/// Crossing graph of a drawing: one vertex per drawing edge, adjacent when the
/// two open edges share a point.
pub fn build_edge_crossing_graph(drawing: &Drawing) -> Graph {
    let m = drawing.m();
    let mut edges = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            if drawing.edges_cross(i, j) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(m, edges).expect("indices in range")
}
