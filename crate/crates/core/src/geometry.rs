//! Exact predicates over integer points, segments and polylines.
//!
//! Coordinates are bounded by [`MAX_COORD`] in absolute value, so every
//! orientation determinant fits in an `i128` with room to spare. Nothing in
//! this module touches floating point.

use std::cmp::Ordering;
use std::fmt;

use crate::error::GeometryError;

/// Largest admissible absolute coordinate value (2^30).
pub const MAX_COORD: i64 = 1 << 30;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    /// Builds a point, rejecting coordinates outside `[-MAX_COORD, MAX_COORD]`.
    pub fn new(x: i64, y: i64) -> Result<Self, GeometryError> {
        if x.abs() > MAX_COORD || y.abs() > MAX_COORD {
            return Err(GeometryError::CoordinateOutOfRange { x, y });
        }
        Ok(Point { x, y })
    }

    pub fn translate(self, dx: i64, dy: i64) -> Result<Self, GeometryError> {
        Point::new(self.x + dx, self.y + dy)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.x, self.y)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Segment {
    pub a: Point,
    pub b: Point,
}

impl Segment {
    pub fn new(a: Point, b: Point) -> Result<Self, GeometryError> {
        if a == b {
            return Err(GeometryError::DegenerateSegment(a));
        }
        Ok(Segment { a, b })
    }

    fn bbox_contains(&self, p: Point) -> bool {
        self.a.x.min(self.b.x) <= p.x
            && p.x <= self.a.x.max(self.b.x)
            && self.a.y.min(self.b.y) <= p.y
            && p.y <= self.a.y.max(self.b.y)
    }

    /// True iff `p` lies on the closed segment.
    pub fn contains(&self, p: Point) -> bool {
        orient(self.a, self.b, p) == 0 && self.bbox_contains(p)
    }
}

/// A curve given as a chain of straight pieces.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polyline {
    vertices: Vec<Point>,
}

impl Polyline {
    /// Needs at least two vertices and no two consecutive equal vertices.
    /// Collinear consecutive pieces are allowed.
    pub fn new(vertices: Vec<Point>) -> Result<Self, GeometryError> {
        if vertices.len() < 2 {
            return Err(GeometryError::TooFewVertices(vertices.len()));
        }
        if let Some(w) = vertices.windows(2).find(|w| w[0] == w[1]) {
            return Err(GeometryError::RepeatedVertex(w[0]));
        }
        Ok(Polyline { vertices })
    }

    pub fn segment(a: Point, b: Point) -> Result<Self, GeometryError> {
        Polyline::new(vec![a, b])
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn first(&self) -> Point {
        self.vertices[0]
    }

    pub fn last(&self) -> Point {
        self.vertices[self.vertices.len() - 1]
    }

    pub fn segments(&self) -> impl Iterator<Item = Segment> + '_ {
        self.vertices
            .windows(2)
            .map(|w| Segment { a: w[0], b: w[1] })
    }

    /// Axis-aligned bounding box as `(min, max)` corners.
    pub fn bbox(&self) -> (Point, Point) {
        let mut lo = self.vertices[0];
        let mut hi = self.vertices[0];
        for p in &self.vertices[1..] {
            lo.x = lo.x.min(p.x);
            lo.y = lo.y.min(p.y);
            hi.x = hi.x.max(p.x);
            hi.y = hi.y.max(p.y);
        }
        (lo, hi)
    }

    pub fn translate(&self, dx: i64, dy: i64) -> Result<Self, GeometryError> {
        let vertices = self
            .vertices
            .iter()
            .map(|p| p.translate(dx, dy))
            .collect::<Result<Vec<_>, _>>()?;
        Polyline::new(vertices)
    }

    /// True iff `p` lies somewhere on the curve.
    pub fn contains(&self, p: Point) -> bool {
        self.segments().any(|s| s.contains(p))
    }
}

/// Sign of the cross product `(q - p) x (r - p)`: `+1` for a left turn,
/// `-1` for a right turn, `0` when collinear.
pub fn orient(p: Point, q: Point, r: Point) -> i8 {
    let det = (q.x - p.x) as i128 * (r.y - p.y) as i128 - (q.y - p.y) as i128 * (r.x - p.x) as i128;
    match det.cmp(&0) {
        Ordering::Greater => 1,
        Ordering::Less => -1,
        Ordering::Equal => 0,
    }
}

/// Closed-segment intersection test.
pub fn segments_intersect(s1: Segment, s2: Segment) -> bool {
    let o1 = orient(s1.a, s1.b, s2.a);
    let o2 = orient(s1.a, s1.b, s2.b);
    let o3 = orient(s2.a, s2.b, s1.a);
    let o4 = orient(s2.a, s2.b, s1.b);

    if o1 * o2 < 0 && o3 * o4 < 0 {
        return true;
    }
    (o1 == 0 && s1.bbox_contains(s2.a))
        || (o2 == 0 && s1.bbox_contains(s2.b))
        || (o3 == 0 && s2.bbox_contains(s1.a))
        || (o4 == 0 && s2.bbox_contains(s1.b))
}

fn bboxes_overlap(c1: &Polyline, c2: &Polyline) -> bool {
    let (lo1, hi1) = c1.bbox();
    let (lo2, hi2) = c2.bbox();
    lo1.x <= hi2.x && lo2.x <= hi1.x && lo1.y <= hi2.y && lo2.y <= hi1.y
}

/// True iff the two curves share at least one point (touching counts).
pub fn polylines_intersect(c1: &Polyline, c2: &Polyline) -> bool {
    if !bboxes_overlap(c1, c2) {
        return false;
    }
    c1.segments()
        .any(|s1| c2.segments().any(|s2| segments_intersect(s1, s2)))
}

/// Set of points shared by two closed segments.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Overlap {
    Empty,
    Single(Point),
    /// A single point that is not necessarily on the integer lattice.
    Crossing,
    Many,
}

fn segment_overlap(s1: Segment, s2: Segment) -> Overlap {
    if !segments_intersect(s1, s2) {
        return Overlap::Empty;
    }
    let collinear = orient(s1.a, s1.b, s2.a) == 0 && orient(s1.a, s1.b, s2.b) == 0;
    if !collinear {
        // At most one common point; report it when it is one of the four
        // endpoints so that callers can compare it exactly.
        for p in [s1.a, s1.b] {
            if s2.contains(p) {
                return Overlap::Single(p);
            }
        }
        for p in [s2.a, s2.b] {
            if s1.contains(p) {
                return Overlap::Single(p);
            }
        }
        return Overlap::Crossing;
    }
    // Collinear: project on the dominant axis.
    let key = |p: Point| {
        if s1.a.x != s1.b.x {
            (p.x, p.y)
        } else {
            (p.y, p.x)
        }
    };
    let (lo1, hi1) = minmax(s1.a, s1.b, key);
    let (lo2, hi2) = minmax(s2.a, s2.b, key);
    let lo = if key(lo1) >= key(lo2) { lo1 } else { lo2 };
    let hi = if key(hi1) <= key(hi2) { hi1 } else { hi2 };
    if lo == hi {
        Overlap::Single(lo)
    } else {
        Overlap::Many
    }
}

fn minmax<K: Ord>(a: Point, b: Point, key: impl Fn(Point) -> K) -> (Point, Point) {
    if key(a) <= key(b) {
        (a, b)
    } else {
        (b, a)
    }
}

/// Intersection test for drawing edges with their endpoints removed: true iff
/// the curves share a point that is not in `shared_endpoints`.
pub fn open_edges_intersect(c1: &Polyline, c2: &Polyline, shared_endpoints: &[Point]) -> bool {
    if !bboxes_overlap(c1, c2) {
        return false;
    }
    c1.segments().any(|s1| {
        c2.segments().any(|s2| match segment_overlap(s1, s2) {
            Overlap::Empty => false,
            Overlap::Single(p) => !shared_endpoints.contains(&p),
            Overlap::Crossing | Overlap::Many => true,
        })
    })
}
