use super::{BitSet, LabeledGraph};
use crate::par::{self, Exec};

/// All maximal cliques, each sorted, in lexicographic order.
pub fn maximal_cliques(g: &LabeledGraph) -> Vec<Vec<usize>> {
    collect(g, None, Exec::default())
}

/// All maximal cliques with exactly `size` vertices, lexicographically ordered.
pub fn max_cliques(g: &LabeledGraph, size: usize) -> Vec<Vec<usize>> {
    collect(g, Some(size), Exec::default())
}

pub fn max_cliques_with(g: &LabeledGraph, size: usize, exec: Exec) -> Vec<Vec<usize>> {
    collect(g, Some(size), exec)
}

/// Bron–Kerbosch with Tomita pivoting. The top level is split by vertex:
/// branch `v` sees candidates `N(v) ∩ {w > v}` and excludes `N(v) ∩ {w < v}`,
/// so branches are independent and can run on separate workers.
fn collect(g: &LabeledGraph, size: Option<usize>, exec: Exec) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let branches = par::map_range(exec, n, |v| {
        let later = BitSet::from_indices(n, v + 1..n);
        let p = g.neighbors(v).intersection(&later);
        let x = g.neighbors(v).difference(&later);
        let mut r = vec![v];
        let mut out = Vec::new();
        expand(g, &mut r, p, x, size, &mut out);
        out
    });
    let mut cliques: Vec<Vec<usize>> = branches
        .into_iter()
        .flatten()
        .map(|mut c| {
            c.sort_unstable();
            c
        })
        .collect();
    cliques.sort();
    cliques
}

fn expand(
    g: &LabeledGraph,
    r: &mut Vec<usize>,
    mut p: BitSet,
    mut x: BitSet,
    size: Option<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if let Some(k) = size {
        if r.len() + p.len() < k || r.len() > k {
            return;
        }
    }
    if p.is_empty() {
        if x.is_empty() && size.is_none_or(|k| r.len() == k) {
            out.push(r.clone());
        }
        return;
    }
    let pivot = p
        .iter()
        .chain(x.iter())
        .max_by_key(|&u| g.neighbors(u).intersection_len(&p))
        .expect("p is non-empty");
    let candidates = p.difference(g.neighbors(pivot));
    for v in candidates.iter() {
        let nv = g.neighbors(v);
        r.push(v);
        expand(g, r, p.intersection(nv), x.intersection(nv), size, out);
        r.pop();
        p.remove(v);
        x.insert(v);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle_graph, petersen_graph};
    use proptest::prelude::*;

    /// Exhaustive oracle over all vertex subsets (small graphs only).
    fn brute_maximal_cliques(g: &LabeledGraph) -> Vec<Vec<usize>> {
        let n = g.vertex_count();
        let mut out = Vec::new();
        for mask in 1u32..(1 << n) {
            let set: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            if !g.is_clique(&set) {
                continue;
            }
            let maximal = (0..n)
                .filter(|v| !set.contains(v))
                .all(|v| set.iter().any(|&u| !g.is_adjacent(u, v)));
            if maximal {
                out.push(set);
            }
        }
        out.sort();
        out
    }

    #[test]
    fn simple_examples() {
        assert_eq!(max_cliques(&complete_graph(4), 4), vec![vec![0, 1, 2, 3]]);
        assert_eq!(max_cliques(&cycle_graph(5), 2).len(), 5);
        assert!(max_cliques(&petersen_graph(), 3).is_empty());
        let g = LabeledGraph::unlabeled(5, [(0, 1), (0, 2), (1, 2), (2, 3)]);
        assert_eq!(maximal_cliques(&g), vec![vec![0, 1, 2], vec![2, 3], vec![4]]);
    }

    proptest! {
        #[test]
        fn matches_exhaustive_enumeration(edges in proptest::collection::vec((0usize..10, 0usize..10), 0..35)) {
            let edges: Vec<_> = edges.into_iter().filter(|(u, v)| u != v).collect();
            let g = LabeledGraph::unlabeled(10, edges);
            let expected = brute_maximal_cliques(&g);
            prop_assert_eq!(maximal_cliques(&g), expected.clone());
            for k in 1..5 {
                let filtered: Vec<_> = expected.iter().filter(|c| c.len() == k).cloned().collect();
                prop_assert_eq!(max_cliques_with(&g, k, Exec::Sequential), filtered);
            }
        }
    }
}
