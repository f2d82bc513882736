use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::params::ParamSet;

pub const EXACT_BICLIQUE_MAX_N: usize = 16;

/// Balanced complete bipartite subgraph: every vertex of `a` is adjacent to
/// every vertex of `b`, the sides are disjoint and equally large.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BicliqueResult {
    pub a: Vec<usize>,
    pub b: Vec<usize>,
}

impl BicliqueResult {
    /// Size of one side.
    pub fn size(&self) -> usize {
        self.a.len()
    }

    pub fn certifies(&self, g: &Graph) -> bool {
        self.a.len() == self.b.len()
            && self.a.iter().all(|u| !self.b.contains(u))
            && self
                .a
                .iter()
                .all(|&u| self.b.iter().all(|&v| g.has_edge(u, v)))
    }
}

/// Greedy balanced biclique.
///
/// Seeds with the edge of largest degree sum, then repeatedly grows the
/// smaller side (side `a` on ties) by the candidate adjacent to all of the
/// other side that keeps the most candidates alive for the other side. Stops
/// when the side due to grow has no candidate and truncates to balance.
pub fn greedy_biclique(g: &Graph) -> BicliqueResult {
    let seed = g
        .edges()
        .fold(None, |best: Option<(usize, usize, usize)>, (u, v)| {
            let score = g.degree(u) + g.degree(v);
            match best {
                Some((s, _, _)) if s >= score => best,
                _ => Some((score, u, v)),
            }
        });
    let Some((_, u, v)) = seed else {
        return BicliqueResult::default();
    };

    let mut a = vec![u];
    let mut b = vec![v];
    // candidates for a: adjacent to all of b; for b: adjacent to all of a
    let mut cand_a: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| w != u).collect();
    let mut cand_b: Vec<usize> = g.neighbors(u).iter().copied().filter(|&w| w != v).collect();

    loop {
        let grow_a = a.len() <= b.len();
        let (grow, cand_grow, cand_other) = if grow_a {
            (&mut a, &mut cand_a, &mut cand_b)
        } else {
            (&mut b, &mut cand_b, &mut cand_a)
        };
        let pick = cand_grow
            .iter()
            .copied()
            .map(|x| {
                let keep = cand_other.iter().filter(|&&y| g.has_edge(x, y)).count();
                (keep, x)
            })
            .fold(None, |best: Option<(usize, usize)>, (keep, x)| match best {
                Some((k, _)) if k >= keep => best,
                _ => Some((keep, x)),
            });
        let Some((_, x)) = pick else { break };
        grow.push(x);
        cand_grow.retain(|&w| w != x);
        cand_other.retain(|&y| g.has_edge(x, y));
    }

    let k = a.len().min(b.len());
    a.truncate(k);
    b.truncate(k);
    a.sort_unstable();
    b.sort_unstable();
    BicliqueResult { a, b }
}

/// Maximum balanced biclique by exhaustive enumeration (`n <= 16`).
///
/// The side count is the largest `min(|A|, |N(A)|)` over all vertex sets `A`,
/// where `N(A)` is the common neighbourhood. The returned `a` is the
/// lexicographically first set of that size with a large enough common
/// neighbourhood, and `b` the smallest members of it.
pub fn max_biclique_exact(g: &Graph) -> Result<BicliqueResult> {
    let n = g.n();
    if n > EXACT_BICLIQUE_MAX_N {
        return Err(Error::TooLarge {
            what: "max_biclique_exact",
            n,
            max: EXACT_BICLIQUE_MAX_N,
        });
    }
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |acc, &w| acc | 1 << w))
        .collect();
    let full: u32 = if n == 0 { 0 } else { u32::MAX >> (32 - n) };
    let mut common = vec![full; 1 << n];
    let mut best = 0;
    for mask in 1usize..1 << n {
        let low = mask.trailing_zeros() as usize;
        common[mask] = common[mask & (mask - 1)] & adj[low];
        let k = (mask.count_ones()).min(common[mask].count_ones()) as usize;
        best = best.max(k);
    }
    if best == 0 {
        return Ok(BicliqueResult::default());
    }

    let mut combo: Vec<usize> = (0..best).collect();
    loop {
        let mask = combo.iter().fold(0usize, |acc, &v| acc | 1 << v);
        let nb = common[mask];
        if nb.count_ones() as usize >= best {
            let b: Vec<usize> = (0..n).filter(|&v| nb >> v & 1 == 1).take(best).collect();
            return Ok(BicliqueResult { a: combo, b });
        }
        if !next_combination(&mut combo, n) {
            unreachable!("a set of the optimal size exists");
        }
    }
}

fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let k = combo.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if combo[i] < n - k + i {
            combo[i] += 1;
            for j in i + 1..k {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Guaranteed biclique side length for a string graph with `n` vertices and
/// `m = eps * n^2` edges: `eps^b * n / log2 n`.
pub fn lemma2_target(n: usize, m: usize, params: &ParamSet) -> Result<f64> {
    if n < 3 || m < 1 {
        return Err(Error::InvalidParameter(format!(
            "biclique target needs n >= 3 and m >= 1, got n = {n}, m = {m}"
        )));
    }
    let nf = n as f64;
    let eps = m as f64 / (nf * nf);
    Ok(eps.powf(params.b) * nf / nf.log2())
}
