//! Exact maximum independent set by branch and bound.
//!
//! Degree-0/1 vertices are taken greedily (always safe), disconnected
//! candidate sets are solved per component, and branches are cut with a
//! greedy clique-cover upper bound. Fast for the recursion's base cases and
//! for sparse graphs up to a few dozen vertices.

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn empty(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64)])
    }

    fn full(n: usize) -> Self {
        let mut b = Bits::empty(n);
        for v in 0..n {
            b.insert(v);
        }
        b
    }

    fn insert(&mut self, v: usize) {
        self.0[v / 64] |= 1 << (v % 64);
    }

    fn remove(&mut self, v: usize) {
        self.0[v / 64] &= !(1 << (v % 64));
    }

    fn contains(&self, v: usize) -> bool {
        self.0[v / 64] >> (v % 64) & 1 == 1
    }

    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    fn and(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn and_not(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & !b).collect())
    }

    fn and_count(&self, other: &Bits) -> usize {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(i, &w)| {
            let mut word = w;
            std::iter::from_fn(move || {
                if word == 0 {
                    return None;
                }
                let bit = word.trailing_zeros() as usize;
                word &= word - 1;
                Some(i * 64 + bit)
            })
        })
    }
}

struct Solver {
    adj: Vec<Bits>,
    n: usize,
}

impl Solver {
    fn degree(&self, v: usize, cand: &Bits) -> usize {
        self.adj[v].and_count(cand)
    }

    fn closed_neighborhood(&self, v: usize) -> Bits {
        let mut nb = self.adj[v].clone();
        nb.insert(v);
        nb
    }

    fn component(&self, start: usize, cand: &Bits) -> Bits {
        let mut comp = Bits::empty(self.n);
        comp.insert(start);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for w in self.adj[v].and(cand).iter() {
                if !comp.contains(w) {
                    comp.insert(w);
                    stack.push(w);
                }
            }
        }
        comp
    }

    fn clique_cover_bound(&self, cand: &Bits) -> usize {
        // Each clique is tracked by the common neighbourhood of its members.
        let mut commons: Vec<Bits> = Vec::new();
        for v in cand.iter() {
            match commons.iter_mut().find(|c| c.contains(v)) {
                Some(c) => *c = c.and(&self.adj[v]),
                None => commons.push(self.adj[v].clone()),
            }
        }
        commons.len()
    }

    /// Maximum independent set of `G[cand]` if its size exceeds `lower`.
    fn search(&self, mut cand: Bits, lower: isize) -> Option<Vec<usize>> {
        let mut forced = Vec::new();
        loop {
            let low = cand.iter().find(|&v| self.degree(v, &cand) <= 1);
            match low {
                Some(v) => {
                    forced.push(v);
                    cand = cand.and_not(&self.closed_neighborhood(v));
                }
                None => break,
            }
        }
        let lower = lower - forced.len() as isize;
        if cand.is_empty() {
            return (0 > lower).then_some(forced);
        }
        if (self.clique_cover_bound(&cand) as isize) <= lower {
            return None;
        }

        let first = cand.iter().next().expect("non-empty");
        let comp = self.component(first, &cand);
        if comp.count() < cand.count() {
            let mut rest_sets = Vec::new();
            let mut remaining = cand;
            while !remaining.is_empty() {
                let v = remaining.iter().next().expect("non-empty");
                let comp = self.component(v, &remaining);
                remaining = remaining.and_not(&comp);
                rest_sets.extend(
                    self.search(comp, -1)
                        .expect("unconstrained search succeeds"),
                );
            }
            if rest_sets.len() as isize > lower {
                forced.extend(rest_sets);
                return Some(forced);
            }
            return None;
        }

        let pivot = cand
            .iter()
            .max_by(|&a, &b| {
                self.degree(a, &cand)
                    .cmp(&self.degree(b, &cand))
                    .then(b.cmp(&a))
            })
            .expect("non-empty");
        let mut best: Option<Vec<usize>> = None;
        let mut bar = lower;
        let with = cand.and_not(&self.closed_neighborhood(pivot));
        if let Some(mut set) = self.search(with, bar - 1) {
            set.push(pivot);
            bar = set.len() as isize;
            best = Some(set);
        }
        let mut without = cand;
        without.remove(pivot);
        if let Some(set) = self.search(without, bar) {
            best = Some(set);
        }
        best.map(|mut set| {
            forced.append(&mut set);
            forced
        })
    }
}

/// A maximum independent set of `g`, sorted.
pub fn maximum_independent_set(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let adj = (0..n)
        .map(|v| {
            let mut b = Bits::empty(n);
            for &w in g.neighbors(v) {
                b.insert(w);
            }
            b
        })
        .collect();
    let solver = Solver { adj, n };
    let mut set = solver
        .search(Bits::full(n), -1)
        .expect("unconstrained search succeeds");
    set.sort_unstable();
    set
}

/// Size of a maximum independent set.
pub fn independence_number(g: &Graph) -> usize {
    maximum_independent_set(g).len()
}
