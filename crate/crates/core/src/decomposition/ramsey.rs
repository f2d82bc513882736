use super::coloring::color_graph;
use crate::error::{Error, Result};
use crate::graph::{extend_to_maximal_clique, find_clique, Graph};
use crate::params::ParamSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    Clique,
    Independent,
}

impl Branch {
    pub fn name(self) -> &'static str {
        match self {
            Branch::Clique => "clique",
            Branch::Independent => "independent",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RamseyOutcome {
    pub branch: Branch,
    pub set: Vec<usize>,
    /// Clique size searched for: `ceil(n^(c / log2 log2 n))` with `c = eps / C`.
    pub t: usize,
    /// `n^(c / log2 log2 n)` before rounding.
    pub clique_target: f64,
    /// `n^(1 - eps)`.
    pub independent_target: f64,
    /// The certificate re-checked against the graph.
    pub verified: bool,
}

impl RamseyOutcome {
    /// Whether the returned set reaches the target of its own branch.
    pub fn meets_target(&self) -> bool {
        let size = self.set.len() as f64;
        match self.branch {
            Branch::Clique => size >= self.clique_target,
            Branch::Independent => size >= self.independent_target,
        }
    }

    /// Achieved size over the target of the returned branch.
    pub fn target_ratio(&self) -> f64 {
        let target = match self.branch {
            Branch::Clique => self.clique_target,
            Branch::Independent => self.independent_target,
        };
        self.set.len() as f64 / target
    }
}

/// Either a clique of size at least `n^(c / log2 log2 n)` or, failing that,
/// the largest colour class of a `K_t`-free colouring.
pub fn clique_or_independent(g: &Graph, epsilon: f64, params: &ParamSet) -> Result<RamseyOutcome> {
    let n = g.n();
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "clique_or_independent needs n >= 3, got {n}"
        )));
    }
    if !(epsilon > 0.0 && epsilon < 1.0) {
        return Err(Error::InvalidParameter(format!(
            "epsilon must lie in (0, 1), got {epsilon}"
        )));
    }
    let nf = n as f64;
    let c = epsilon / params.c;
    let clique_target = nf.powf(c / nf.log2().log2());
    let t = clique_target.ceil() as usize;
    let independent_target = nf.powf(1.0 - epsilon);

    let (branch, set, verified) = match find_clique(g, t) {
        Some(mut clique) => {
            extend_to_maximal_clique(g, &mut clique);
            let ok = g.is_clique(&clique);
            (Branch::Clique, clique, ok)
        }
        None => {
            let coloring = color_graph(g, t, params).coloring;
            let largest = coloring
                .classes()
                .into_iter()
                .fold(Vec::new(), |best, class| {
                    if class.len() > best.len() {
                        class
                    } else {
                        best
                    }
                });
            let ok = g.is_independent(&largest);
            (Branch::Independent, largest, ok)
        }
    };
    Ok(RamseyOutcome {
        branch,
        set,
        t,
        clique_target,
        independent_target,
        verified,
    })
}
