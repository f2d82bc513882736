//! Independent oracles shared by the integration tests. None of them call
//! into the library's algorithms; they only read graphs and points.
#![allow(dead_code)]

use num_rational::Ratio;
use strgraph::{Graph, Point, Segment};

type Q = Ratio<i128>;

fn cross(ax: i128, ay: i128, bx: i128, by: i128) -> i128 {
    ax * by - ay * bx
}

/// Closed segment intersection by solving `p + s r = q + u w` over the
/// rationals, with the collinear case handled by projecting onto `r`.
pub fn rational_segments_intersect(s1: Segment, s2: Segment) -> bool {
    let (px, py) = (s1.a.x as i128, s1.a.y as i128);
    let (rx, ry) = (s1.b.x as i128 - px, s1.b.y as i128 - py);
    let (qx, qy) = (s2.a.x as i128, s2.a.y as i128);
    let (wx, wy) = (s2.b.x as i128 - qx, s2.b.y as i128 - qy);
    let (dx, dy) = (qx - px, qy - py);
    let denom = cross(rx, ry, wx, wy);
    let unit = |v: Q| Q::from_integer(0) <= v && v <= Q::from_integer(1);
    if denom != 0 {
        let s = Q::new(cross(dx, dy, wx, wy), denom);
        let u = Q::new(cross(dx, dy, rx, ry), denom);
        return unit(s) && unit(u);
    }
    if cross(dx, dy, rx, ry) != 0 {
        return false;
    }
    let rr = rx * rx + ry * ry;
    let t0 = Q::new(dx * rx + dy * ry, rr);
    let t1 = t0 + Q::new(wx * rx + wy * ry, rr);
    let (lo, hi) = if t0 <= t1 { (t0, t1) } else { (t1, t0) };
    lo <= Q::from_integer(1) && hi >= Q::from_integer(0)
}

pub fn segment(ax: i64, ay: i64, bx: i64, by: i64) -> Option<Segment> {
    Segment::new(Point::new(ax, ay).ok()?, Point::new(bx, by).ok()?).ok()
}

/// Components of `g - removed` by repeated flood fill over an edge list.
pub fn naive_component_sizes(g: &Graph, removed: &[bool]) -> Vec<usize> {
    let n = g.n();
    let mut label: Vec<usize> = (0..n).collect();
    loop {
        let mut changed = false;
        for (u, v) in g.edges() {
            if removed[u] || removed[v] {
                continue;
            }
            let l = label[u].min(label[v]);
            if label[u] != l || label[v] != l {
                label[u] = l;
                label[v] = l;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let mut sizes = vec![0; n];
    for v in (0..n).filter(|&v| !removed[v]) {
        sizes[label[v]] += 1;
    }
    sizes.into_iter().filter(|&s| s > 0).collect()
}

/// Every component of `g - s` has at most `2n/3` vertices.
pub fn naive_balanced(g: &Graph, s: &[usize]) -> bool {
    let mut removed = vec![false; g.n()];
    for &v in s {
        removed[v] = true;
    }
    naive_component_sizes(g, &removed)
        .into_iter()
        .all(|size| 3 * size <= 2 * g.n())
}

/// Smallest balanced separator size by trying every subset (n <= 12).
pub fn brute_min_separator_size(g: &Graph) -> usize {
    let n = g.n();
    assert!(n <= 12);
    (0u32..1 << n)
        .filter(|&mask| {
            let s: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            naive_balanced(g, &s)
        })
        .map(|mask| mask.count_ones() as usize)
        .min()
        .expect("removing everything is balanced")
}

pub fn brute_alpha(g: &Graph) -> usize {
    let n = g.n();
    assert!(n <= 20);
    (0u32..1 << n)
        .filter(|&mask| {
            g.edges()
                .all(|(u, v)| mask >> u & 1 == 0 || mask >> v & 1 == 0)
        })
        .map(|mask| mask.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Chromatic number by trying `k = 1, 2, ...` with plain backtracking.
pub fn brute_chromatic_number(g: &Graph) -> usize {
    fn colorable(g: &Graph, k: usize, v: usize, colors: &mut Vec<usize>) -> bool {
        if v == g.n() {
            return true;
        }
        for c in 0..k {
            if g.neighbors(v).iter().all(|&w| w >= v || colors[w] != c) {
                colors[v] = c;
                if colorable(g, k, v + 1, colors) {
                    return true;
                }
            }
        }
        false
    }
    if g.n() == 0 {
        return 0;
    }
    (1..=g.n())
        .find(|&k| colorable(g, k, 0, &mut vec![0; g.n()]))
        .expect("n colours always suffice")
}

/// Largest `k` such that some `k`-set `A` and a disjoint `k`-set `B` are
/// completely joined, by trying all pairs of disjoint subsets (n <= 10).
pub fn brute_biclique(g: &Graph) -> usize {
    let n = g.n();
    assert!(n <= 10);
    let mut best = 0;
    for a in 1u32..1 << n {
        for b in 1u32..1 << n {
            if a & b != 0 || a.count_ones() != b.count_ones() || a.count_ones() as usize <= best {
                continue;
            }
            let joined = (0..n).filter(|&u| a >> u & 1 == 1).all(|u| {
                (0..n)
                    .filter(|&v| b >> v & 1 == 1)
                    .all(|v| g.has_edge(u, v))
            });
            if joined {
                best = a.count_ones() as usize;
            }
        }
    }
    best
}

/// Tiny xorshift used only to make test graphs; independent of the library.
pub struct TestRng(pub u64);

impl TestRng {
    pub fn next(&mut self) -> u64 {
        self.0 ^= self.0 << 13;
        self.0 ^= self.0 >> 7;
        self.0 ^= self.0 << 17;
        self.0
    }

    pub fn coin(&mut self, p: f64) -> bool {
        (self.next() >> 11) as f64 / (1u64 << 53) as f64 <= p
    }
}

pub fn gnp(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = TestRng(seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) | 1);
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect::<Vec<_>>()
        .into_iter()
        .filter(|_| rng.coin(p))
        .collect();
    Graph::from_edges(n, edges).unwrap()
}

pub fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}
