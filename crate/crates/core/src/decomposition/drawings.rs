use super::biclique::{greedy_biclique, max_biclique_exact, EXACT_BICLIQUE_MAX_N};
use crate::error::{Error, Result};
use crate::graph::is_kt_free;
use crate::string_graph::{build_edge_crossing_graph, Drawing};

/// Two sets of drawing edges (by index into `Drawing::edges`) such that every
/// edge of one crosses every edge of the other.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CrossingPairSets {
    pub e1: Vec<usize>,
    pub e2: Vec<usize>,
}

impl CrossingPairSets {
    /// Geometric re-check of every cross pair.
    pub fn certifies(&self, drawing: &Drawing) -> bool {
        self.e1.iter().all(|i| !self.e2.contains(i))
            && self
                .e1
                .iter()
                .all(|&i| self.e2.iter().all(|&j| drawing.edges_cross(i, j)))
    }
}

/// Balanced biclique of the crossing graph, read back as edge sets. Exact
/// search is used while the crossing graph has at most 16 vertices.
pub fn crossing_pair_sets(drawing: &Drawing) -> CrossingPairSets {
    let cg = build_edge_crossing_graph(drawing);
    let bic = if cg.n() <= EXACT_BICLIQUE_MAX_N {
        max_biclique_exact(&cg).expect("size checked")
    } else {
        greedy_biclique(&cg)
    };
    let out = CrossingPairSets {
        e1: bic.a,
        e2: bic.b,
    };
    debug_assert!(out.certifies(drawing));
    out
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CrossingStats {
    /// Unordered pairs of crossing open edges.
    pub count: usize,
    /// `count * n^2 / m^3`, reported only when `m >= 4n`.
    pub ratio: Option<f64>,
}

pub fn crossing_count(drawing: &Drawing) -> CrossingStats {
    let count = build_edge_crossing_graph(drawing).m();
    let (n, m) = (drawing.n() as f64, drawing.m() as f64);
    let ratio = (drawing.m() >= 4 * drawing.n() && drawing.m() > 0)
        .then(|| count as f64 * n * n / (m * m * m));
    CrossingStats { count, ratio }
}

/// True iff no `t` edges pairwise cross.
pub fn quasi_planarity(drawing: &Drawing, t: usize) -> Result<bool> {
    if t < 2 {
        return Err(Error::InvalidParameter(format!(
            "quasi-planarity needs t >= 2, got {t}"
        )));
    }
    Ok(is_kt_free(&build_edge_crossing_graph(drawing), t))
}
