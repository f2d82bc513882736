use super::biclique::greedy_biclique;
use crate::graph::{induced_subgraph, Graph};
use crate::mis::maximum_independent_set;
use crate::params::ParamSet;
use crate::separators::spectral_separator;

/// Which branches the recursion took; useful for reports and tests.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct RecursionStats {
    pub base_cases: usize,
    pub sparse_splits: usize,
    pub dense_splits: usize,
    /// Dense steps that found no biclique and split on a separator instead.
    pub degenerate_bicliques: usize,
    /// Separator unions that turned out not to be independent. Always zero
    /// unless a separator is broken.
    pub union_violations: usize,
}

/// Edge-density threshold separating the sparse and dense cases:
/// `(4 d (log2 n)^2)^-2`.
pub fn density_threshold(n: usize, params: &ParamSet) -> f64 {
    let log_n = (n as f64).log2();
    (4.0 * params.d * log_n * log_n).powi(-2)
}

/// Independent-set size the recursion is designed to guarantee for
/// `K_t`-free string graphs: `n (log2 n)^(-C log2 t)`.
pub fn eq1_target(n: usize, t: usize, params: &ParamSet) -> f64 {
    let nf = n as f64;
    nf * nf.log2().powf(-params.c * (t as f64).log2())
}

/// Independent set built by the separator/biclique recursion.
///
/// * up to `params.base_case_n` vertices: exact maximum independent set;
/// * sparse (`m <= eps n^2`): split on a balanced separator and take the
///   union of both sides' answers;
/// * dense: take a balanced biclique `(A, B)`, recurse on both sides with
///   `ceil(t/2)`, keep the larger answer and extend it greedily to a maximal
///   independent set of the current graph.
///
/// `t` is the clique size the caller asserts is absent; the result is an
/// independent set of `g` whether or not that holds.
pub fn find_independent_set(g: &Graph, t: usize, params: &ParamSet) -> Vec<usize> {
    find_independent_set_traced(g, t, params).0
}

pub fn find_independent_set_traced(
    g: &Graph,
    t: usize,
    params: &ParamSet,
) -> (Vec<usize>, RecursionStats) {
    let mut stats = RecursionStats::default();
    let mut set = recurse(g, t.max(2), params, &mut stats);
    set.sort_unstable();
    (set, stats)
}

fn recurse(g: &Graph, t: usize, params: &ParamSet, stats: &mut RecursionStats) -> Vec<usize> {
    let n = g.n();
    if g.m() == 0 {
        return (0..n).collect();
    }
    if n <= params.base_case_n {
        stats.base_cases += 1;
        return maximum_independent_set(g);
    }
    let nf = n as f64;
    let sparse = (g.m() as f64) <= density_threshold(n, params) * nf * nf;
    if !sparse {
        let bic = greedy_biclique(g);
        if !bic.a.is_empty() {
            stats.dense_splits += 1;
            let half = t.div_ceil(2).max(2);
            let from_a = recurse_on(g, &bic.a, half, params, stats);
            let from_b = recurse_on(g, &bic.b, half, params, stats);
            let best = if from_b.len() > from_a.len() {
                from_b
            } else {
                from_a
            };
            return extend_to_maximal(g, best);
        }
        stats.degenerate_bicliques += 1;
    }

    stats.sparse_splits += 1;
    let sep = spectral_separator(g);
    let left = recurse_on(g, &sep.v1, t, params, stats);
    let right = recurse_on(g, &sep.v2, t, params, stats);
    if left
        .iter()
        .any(|&u| right.iter().any(|&v| g.has_edge(u, v)))
    {
        stats.union_violations += 1;
    }
    let mut union = left;
    union.extend(right);
    union
}

fn recurse_on(
    g: &Graph,
    part: &[usize],
    t: usize,
    params: &ParamSet,
    stats: &mut RecursionStats,
) -> Vec<usize> {
    let (sub, mapping) = induced_subgraph(g, part).expect("part is within range");
    recurse(&sub, t, params, stats)
        .into_iter()
        .map(|v| mapping[v])
        .collect()
}

/// Adds vertices with no neighbour in the set, by increasing degree then
/// index, until the set is maximal.
fn extend_to_maximal(g: &Graph, mut set: Vec<usize>) -> Vec<usize> {
    let mut blocked = vec![false; g.n()];
    for &v in &set {
        blocked[v] = true;
        for &w in g.neighbors(v) {
            blocked[w] = true;
        }
    }
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (g.degree(v), v));
    for v in order {
        if !blocked[v] {
            set.push(v);
            blocked[v] = true;
            for &w in g.neighbors(v) {
                blocked[w] = true;
            }
        }
    }
    set
}
