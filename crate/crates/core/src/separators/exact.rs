use super::{balanced, validate_separator, SeparatorResult};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const EXACT_SEPARATOR_MAX_N: usize = 20;

/// Minimum-cardinality balanced separator by enumerating vertex sets in
/// increasing size, each size in lexicographic order. The first valid set is
/// returned, so ties go to the lexicographically smallest set.
pub fn exact_min_separator(g: &Graph) -> Result<SeparatorResult> {
    let n = g.n();
    if n > EXACT_SEPARATOR_MAX_N {
        return Err(Error::TooLarge {
            what: "exact_min_separator",
            n,
            max: EXACT_SEPARATOR_MAX_N,
        });
    }
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |acc, &w| acc | 1 << w))
        .collect();
    let full: u32 = if n == 0 { 0 } else { u32::MAX >> (32 - n) };

    for k in 0..=n {
        let mut combo: Vec<usize> = (0..k).collect();
        loop {
            let removed = combo.iter().fold(0u32, |acc, &v| acc | 1 << v);
            if all_components_balanced(&adj, full & !removed, n) {
                return Ok(validate_separator(g, &combo).expect("balance checked"));
            }
            if !next_combination(&mut combo, n) {
                break;
            }
        }
    }
    unreachable!("removing every vertex always separates")
}

/// True iff every component of the subgraph on `alive` is balanced.
fn all_components_balanced(adj: &[u32], alive: u32, n: usize) -> bool {
    let mut left = alive;
    while left != 0 {
        let start = left.trailing_zeros() as usize;
        let mut comp = 1u32 << start;
        let mut frontier = comp;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = adj[v] & alive & !comp;
            comp |= fresh;
            frontier |= fresh;
        }
        if !balanced(comp.count_ones() as usize, n) {
            return false;
        }
        left &= !comp;
    }
    true
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

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn forced_sizes() {
        assert_eq!(exact_min_separator(&Graph::path(9)).unwrap().s, vec![2]);
        assert_eq!(
            exact_min_separator(&Graph::complete(6)).unwrap().s,
            vec![0, 1]
        );
        assert_eq!(exact_min_separator(&Graph::cycle(9)).unwrap().s.len(), 2);
        assert_eq!(exact_min_separator(&Graph::empty(7)).unwrap().s.len(), 0);
        assert_eq!(exact_min_separator(&Graph::empty(0)).unwrap().s.len(), 0);
    }

    #[test]
    fn rejects_large_inputs() {
        assert!(exact_min_separator(&Graph::path(21)).is_err());
        assert!(exact_min_separator(&Graph::path(20)).is_ok());
    }

    #[test]
    fn combinations_in_lex_order() {
        let mut c = vec![0, 1];
        let mut seen = vec![c.clone()];
        while next_combination(&mut c, 4) {
            seen.push(c.clone());
        }
        assert_eq!(
            seen,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
    }
}
