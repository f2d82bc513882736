use super::independent::find_independent_set;
use crate::graph::{induced_subgraph, Graph};
use crate::params::ParamSet;

/// A proper colouring with colours `0..k`, every colour used.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    pub color: Vec<usize>,
    pub k: usize,
}

impl Coloring {
    pub fn is_proper(&self, g: &Graph) -> bool {
        self.color.len() == g.n()
            && self.color.iter().all(|&c| c < self.k)
            && g.edges().all(|(u, v)| self.color[u] != self.color[v])
            && (0..self.k).all(|c| self.color.contains(&c))
    }

    /// Vertices of each colour, in colour order.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(); self.k];
        for (v, &c) in self.color.iter().enumerate() {
            classes[c].push(v);
        }
        classes
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ColoringOutcome {
    pub coloring: Coloring,
    /// `4 (log2 n)^(C log2 t + 1)`, or `None` below `n = 2`.
    pub bound: Option<f64>,
}

/// Colour bound for `K_t`-free string graphs on `n` vertices.
pub fn theorem1_color_bound(n: usize, t: usize, params: &ParamSet) -> Option<f64> {
    (n >= 2).then(|| 4.0 * (n as f64).log2().powf(params.c * (t as f64).log2() + 1.0))
}

/// Colours `g` by repeatedly extracting an independent set with
/// [`find_independent_set`] from the uncoloured vertices and giving it a
/// fresh colour.
pub fn color_graph(g: &Graph, t: usize, params: &ParamSet) -> ColoringOutcome {
    let n = g.n();
    let mut color = vec![usize::MAX; n];
    let mut remaining: Vec<usize> = (0..n).collect();
    let mut k = 0;
    while !remaining.is_empty() {
        let (sub, mapping) = induced_subgraph(g, &remaining).expect("indices in range");
        for v in find_independent_set(&sub, t, params) {
            color[mapping[v]] = k;
        }
        k += 1;
        remaining.retain(|&v| color[v] == usize::MAX);
    }
    ColoringOutcome {
        coloring: Coloring { color, k },
        bound: theorem1_color_bound(n, t, params),
    }
}
