//! Balanced vertex separators.
//!
//! A set `S` separates `G` when every connected component of `G - S` has at
//! most two thirds of the vertices of `G`. Balance is always compared in
//! integers as `3 * size <= 2 * n`.

mod bfs;
mod exact;
mod spectral;

pub use bfs::bfs_separator;
pub use exact::{exact_min_separator, EXACT_SEPARATOR_MAX_N};
pub use spectral::{fiedler_vector, spectral_separator};

use crate::error::{Error, Result};
use crate::graph::{components_masked, Graph};
use crate::params::ParamSet;

/// A certified separation `V = S ∪ V1 ∪ V2` with no edges between `V1` and
/// `V2` and both sides holding at most `2n/3` vertices. All sets are sorted.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SeparatorResult {
    pub s: Vec<usize>,
    pub v1: Vec<usize>,
    pub v2: Vec<usize>,
}

impl SeparatorResult {
    pub fn len(&self) -> usize {
        self.s.len()
    }

    pub fn is_empty(&self) -> bool {
        self.s.is_empty()
    }

    /// Re-checks every partition invariant against `g`.
    pub fn certifies(&self, g: &Graph) -> bool {
        let n = g.n();
        let mut side = vec![0u8; n];
        for (tag, set) in [(1u8, &self.s), (2, &self.v1), (3, &self.v2)] {
            for &v in set.iter() {
                if v >= n || side[v] != 0 {
                    return false;
                }
                side[v] = tag;
            }
        }
        if side.contains(&0) || !balanced(self.v1.len(), n) || !balanced(self.v2.len(), n) {
            return false;
        }
        self.v1
            .iter()
            .all(|&u| g.neighbors(u).iter().all(|&w| side[w] != 3))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SeparatorAlgo {
    Exact,
    Spectral,
    Bfs,
}

impl SeparatorAlgo {
    pub fn run(self, g: &Graph) -> Result<SeparatorResult> {
        match self {
            SeparatorAlgo::Exact => exact_min_separator(g),
            SeparatorAlgo::Spectral => Ok(spectral_separator(g)),
            SeparatorAlgo::Bfs => Ok(bfs_separator(g)),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            SeparatorAlgo::Exact => "exact",
            SeparatorAlgo::Spectral => "spectral",
            SeparatorAlgo::Bfs => "bfs",
        }
    }
}

impl std::str::FromStr for SeparatorAlgo {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact" => Ok(SeparatorAlgo::Exact),
            "spectral" => Ok(SeparatorAlgo::Spectral),
            "bfs" => Ok(SeparatorAlgo::Bfs),
            other => Err(Error::InvalidParameter(format!(
                "unknown separator algorithm `{other}`"
            ))),
        }
    }
}

#[inline]
pub(crate) fn balanced(size: usize, n: usize) -> bool {
    3 * size <= 2 * n
}

/// Checks whether `s` is a balanced separator of `g`, returning the
/// witnessing partition when it is.
///
/// Components of `G - S` are packed largest first into the currently smaller
/// side; if that ever fails to balance, all packings of up to 20 components
/// are tried.
pub fn validate_separator(g: &Graph, s: &[usize]) -> Option<SeparatorResult> {
    let n = g.n();
    let mut alive = vec![true; n];
    for &v in s {
        if v >= n {
            return None;
        }
        alive[v] = false;
    }
    let mut comps = components_masked(g, &alive);
    if comps.iter().any(|c| !balanced(c.len(), n)) {
        return None;
    }
    comps.sort_by(|a, b| b.len().cmp(&a.len()).then(a[0].cmp(&b[0])));

    let mut sep: Vec<usize> = s.to_vec();
    sep.sort_unstable();
    sep.dedup();

    let (mut v1, mut v2) = (Vec::new(), Vec::new());
    for comp in &comps {
        let target = if v1.len() <= v2.len() {
            &mut v1
        } else {
            &mut v2
        };
        target.extend_from_slice(comp);
    }
    if !(balanced(v1.len(), n) && balanced(v2.len(), n)) {
        (v1, v2) = exhaustive_packing(&comps, n)?;
    }
    v1.sort_unstable();
    v2.sort_unstable();
    Some(SeparatorResult { s: sep, v1, v2 })
}

fn exhaustive_packing(comps: &[Vec<usize>], n: usize) -> Option<(Vec<usize>, Vec<usize>)> {
    if comps.len() > 20 {
        return None;
    }
    let total: usize = comps.iter().map(Vec::len).sum();
    let mask = (0u32..1 << comps.len()).find(|&mask| {
        let left: usize = (0..comps.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| comps[i].len())
            .sum();
        balanced(left, n) && balanced(total - left, n)
    })?;
    let (mut v1, mut v2) = (Vec::new(), Vec::new());
    for (i, comp) in comps.iter().enumerate() {
        if mask >> i & 1 == 1 {
            v1.extend_from_slice(comp);
        } else {
            v2.extend_from_slice(comp);
        }
    }
    Some((v1, v2))
}

pub fn is_valid_separator(g: &Graph, s: &[usize]) -> bool {
    validate_separator(g, s).is_some()
}

/// The always-valid fallback: the first `ceil(n/3)` vertices.
pub fn trivial_separator(g: &Graph) -> SeparatorResult {
    let n = g.n();
    let s: Vec<usize> = (0..n.div_ceil(3)).collect();
    validate_separator(g, &s).expect("removing ceil(n/3) vertices always balances")
}

/// Drops separator vertices (in increasing order) whenever the smaller set
/// still separates.
pub(crate) fn shrink(g: &Graph, sep: SeparatorResult) -> SeparatorResult {
    let mut best = sep;
    let mut i = 0;
    while i < best.s.len() {
        let mut candidate = best.s.clone();
        candidate.remove(i);
        match validate_separator(g, &candidate) {
            Some(smaller) => best = smaller,
            None => i += 1,
        }
    }
    best
}

/// `d * sqrt(m) * log2(m)`, the separator size guaranteed for string graphs
/// with `m` edges.
pub fn lemma1_bound(m: usize, params: &ParamSet) -> Result<f64> {
    if m < 2 {
        return Err(Error::InvalidParameter(format!(
            "separator bound needs m >= 2, got {m}"
        )));
    }
    let m = m as f64;
    Ok(params.d * m.sqrt() * m.log2())
}
