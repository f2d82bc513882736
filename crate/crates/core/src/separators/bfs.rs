use super::{trivial_separator, validate_separator, SeparatorResult};
use crate::graph::{bfs_levels, connected_components, Graph};

/// Level-structure separator: breadth-first search from the highest-degree
/// vertex of the largest component, keeping the smallest single level that
/// separates. Returns the trivial `ceil(n/3)` separator when no level does, or
/// when the trivial one is strictly smaller.
pub fn bfs_separator(g: &Graph) -> SeparatorResult {
    if let Some(sep) = validate_separator(g, &[]) {
        return sep;
    }
    let comps = connected_components(g);
    let comp = comps.iter().fold(
        &comps[0],
        |best, c| if c.len() > best.len() { c } else { best },
    );
    let root = comp.iter().copied().fold(comp[0], |best, v| {
        if g.degree(v) > g.degree(best) {
            v
        } else {
            best
        }
    });

    let mut best: Option<SeparatorResult> = None;
    for level in bfs_levels(g, root) {
        if best.as_ref().is_some_and(|b| b.len() <= level.len()) {
            continue;
        }
        if let Some(sep) = validate_separator(g, &level) {
            best = Some(sep);
        }
    }
    let trivial = trivial_separator(g);
    match best {
        Some(sep) if sep.len() <= trivial.len() => sep,
        _ => trivial,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_gets_a_single_level() {
        let g = Graph::path(9);
        let sep = bfs_separator(&g);
        assert_eq!(sep.len(), 1);
        assert!(sep.certifies(&g));
    }

    #[test]
    fn star_splits_at_the_center() {
        let g = Graph::from_edges(9, (1..9).map(|v| (0, v))).unwrap();
        let sep = bfs_separator(&g);
        assert_eq!(sep.s, vec![0]);
        assert_eq!((sep.v1.len(), sep.v2.len()), (4, 4));
    }

    #[test]
    fn clique_falls_back_to_trivial() {
        let g = Graph::complete(6);
        let sep = bfs_separator(&g);
        assert_eq!(sep.s, vec![0, 1]);
    }

    #[test]
    fn single_vertex_and_edge() {
        assert!(bfs_separator(&Graph::empty(1)).certifies(&Graph::empty(1)));
        let k2 = Graph::complete(2);
        assert!(bfs_separator(&k2).certifies(&k2));
    }
}
