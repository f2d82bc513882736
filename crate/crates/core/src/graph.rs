//! Simple undirected graphs with sorted adjacency lists, plus the handful of
//! structural queries every other module leans on.

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// A simple undirected graph on vertices `0..n`.
///
/// Adjacency lists are kept sorted and symmetric; there are no self-loops and
/// no parallel edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) collapse to one.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut m = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            m += list.len();
        }
        Ok(Graph { adj, m: m / 2 })
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::from_edges(n, edges).expect("indices in range")
    }

    pub fn path(n: usize) -> Self {
        Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).expect("indices in range")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))).expect("indices in range")
    }

    pub fn complete_bipartite(r: usize, c: usize) -> Self {
        let edges = (0..r).flat_map(|u| (r..r + c).map(move |v| (u, v)));
        Graph::from_edges(r + c, edges).expect("indices in range")
    }

    /// `rows x cols` grid graph, vertex `(i, j)` numbered `i * cols + j`.
    pub fn grid(rows: usize, cols: usize) -> Self {
        let mut edges = Vec::new();
        for i in 0..rows {
            for j in 0..cols {
                let v = i * cols + j;
                if j + 1 < cols {
                    edges.push((v, v + 1));
                }
                if i + 1 < rows {
                    edges.push((v, v + cols));
                }
            }
        }
        Graph::from_edges(rows * cols, edges).expect("indices in range")
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Complement graph on the same vertex set.
    pub fn complement(&self) -> Graph {
        let n = self.n();
        let edges = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| !self.has_edge(u, v));
        Graph::from_edges(n, edges).expect("indices in range")
    }

    /// Checks the adjacency invariants; used by tests and by file loaders.
    pub fn is_well_formed(&self) -> bool {
        let n = self.n();
        let mut total = 0;
        for (u, list) in self.adj.iter().enumerate() {
            if list.windows(2).any(|w| w[0] >= w[1]) {
                return false;
            }
            for &v in list {
                if v >= n || v == u || self.adj[v].binary_search(&u).is_err() {
                    return false;
                }
            }
            total += list.len();
        }
        total == 2 * self.m
    }

    pub fn is_independent(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| u != v && !self.has_edge(u, v)))
    }

    pub fn is_clique(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }
}

/// Subgraph induced by `vertices`, together with the list mapping new indices
/// back to the original ones. The input order is preserved after sorting and
/// deduplication, so `mapping[i]` is the `i`-th smallest selected vertex.
pub fn induced_subgraph(g: &Graph, vertices: &[usize]) -> Result<(Graph, Vec<usize>)> {
    let n = g.n();
    let mut mapping: Vec<usize> = vertices.to_vec();
    mapping.sort_unstable();
    mapping.dedup();
    if let Some(&v) = mapping.iter().find(|&&v| v >= n) {
        return Err(Error::VertexOutOfRange { vertex: v, n });
    }
    let mut new_index = vec![usize::MAX; n];
    for (i, &v) in mapping.iter().enumerate() {
        new_index[v] = i;
    }
    let mut adj = Vec::with_capacity(mapping.len());
    let mut m = 0;
    for &v in &mapping {
        let list: Vec<usize> = g.adj[v]
            .iter()
            .filter_map(|&w| (new_index[w] != usize::MAX).then_some(new_index[w]))
            .collect();
        m += list.len();
        adj.push(list);
    }
    Ok((Graph { adj, m: m / 2 }, mapping))
}

/// Connected components of `g` restricted to vertices where `alive` is true.
/// Components are sorted internally and listed by smallest element.
pub fn components_masked(g: &Graph, alive: &[bool]) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    let mut queue = VecDeque::new();
    for start in 0..n {
        if seen[start] || !alive[start] {
            continue;
        }
        seen[start] = true;
        queue.push_back(start);
        let mut comp = Vec::new();
        while let Some(v) = queue.pop_front() {
            comp.push(v);
            for &w in g.neighbors(v) {
                if alive[w] && !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

pub fn connected_components(g: &Graph) -> Vec<Vec<usize>> {
    components_masked(g, &vec![true; g.n()])
}

/// Breadth-first distance layers from `root`, restricted to its component.
pub fn bfs_levels(g: &Graph, root: usize) -> Vec<Vec<usize>> {
    let mut dist = vec![usize::MAX; g.n()];
    dist[root] = 0;
    let mut levels: Vec<Vec<usize>> = vec![vec![root]];
    let mut queue = VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbors(v) {
            if dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                if levels.len() <= dist[w] {
                    levels.push(Vec::new());
                }
                levels[dist[w]].push(w);
                queue.push_back(w);
            }
        }
    }
    for level in &mut levels {
        level.sort_unstable();
    }
    levels
}

/// Searches for a clique of exactly `size` vertices. Returns the
/// lexicographically first one found by the branch-and-bound order, or `None`.
///
/// Exponential in the worst case; comfortable for clique numbers up to about
/// 20 or graphs up to about 60 vertices.
pub fn find_clique(g: &Graph, size: usize) -> Option<Vec<usize>> {
    if size == 0 {
        return Some(Vec::new());
    }
    let n = g.n();
    if size > n {
        return None;
    }
    // Vertices with too few neighbours can never be in a clique of this size.
    let mut alive: Vec<bool> = (0..n).map(|v| g.degree(v) + 1 >= size).collect();
    let mut changed = true;
    while changed {
        changed = false;
        for v in 0..n {
            if alive[v] && g.neighbors(v).iter().filter(|&&w| alive[w]).count() + 1 < size {
                alive[v] = false;
                changed = true;
            }
        }
    }
    let cand: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
    let mut current = Vec::with_capacity(size);
    if extend_clique(g, &mut current, &cand, size) {
        Some(current)
    } else {
        None
    }
}

fn extend_clique(g: &Graph, current: &mut Vec<usize>, cand: &[usize], size: usize) -> bool {
    if current.len() == size {
        return true;
    }
    let need = size - current.len();
    if cand.len() < need || greedy_color_bound(g, cand) < need {
        return false;
    }
    for (i, &v) in cand.iter().enumerate() {
        if cand.len() - i < need {
            break;
        }
        let next: Vec<usize> = cand[i + 1..]
            .iter()
            .copied()
            .filter(|&w| g.has_edge(v, w))
            .collect();
        current.push(v);
        if extend_clique(g, current, &next, size) {
            return true;
        }
        current.pop();
    }
    false
}

/// Number of colours in a greedy colouring of `cand`: an upper bound on the
/// clique number of the induced subgraph.
fn greedy_color_bound(g: &Graph, cand: &[usize]) -> usize {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for &v in cand {
        match classes
            .iter_mut()
            .find(|class| class.iter().all(|&w| !g.has_edge(v, w)))
        {
            Some(class) => class.push(v),
            None => classes.push(vec![v]),
        }
    }
    classes.len()
}

/// True iff `g` has no clique on `t` vertices.
pub fn is_kt_free(g: &Graph, t: usize) -> bool {
    find_clique(g, t).is_none()
}

/// Extends `clique` greedily (lowest index first) to a maximal clique.
pub fn extend_to_maximal_clique(g: &Graph, clique: &mut Vec<usize>) {
    for v in 0..g.n() {
        if !clique.contains(&v) && clique.iter().all(|&u| g.has_edge(u, v)) {
            clique.push(v);
        }
    }
    clique.sort_unstable();
}
