use serde::{Deserialize, Serialize};

use super::{BitSet, GraphError, LabeledGraph};

pub const INDEPENDENT_SET_MAX_VERTICES: usize = 300;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndependentSet {
    /// Independence number `alpha(g)`.
    pub size: usize,
    /// One maximum independent set, sorted.
    pub vertices: Vec<usize>,
}

fn check_size(g: &LabeledGraph) -> Result<(), GraphError> {
    let n = g.vertex_count();
    if n > INDEPENDENT_SET_MAX_VERTICES {
        return Err(GraphError::TooLarge {
            found: n,
            limit: INDEPENDENT_SET_MAX_VERTICES,
        });
    }
    Ok(())
}

/// A maximum independent set by branch and bound on the complement's cliques.
pub fn maximum_independent_set(g: &LabeledGraph) -> Result<IndependentSet, GraphError> {
    check_size(g)?;
    let mut search = CliqueSearch::new(g.complement(), false);
    search.run();
    let mut vertices = search.found.into_iter().next().unwrap_or_default();
    vertices.sort_unstable();
    Ok(IndependentSet {
        size: vertices.len(),
        vertices,
    })
}

/// Every maximum independent set, each sorted, in lexicographic order.
pub fn all_maximum_independent_sets(g: &LabeledGraph) -> Result<Vec<Vec<usize>>, GraphError> {
    check_size(g)?;
    let mut search = CliqueSearch::new(g.complement(), true);
    search.run();
    let mut all: Vec<Vec<usize>> = search
        .found
        .into_iter()
        .map(|mut s| {
            s.sort_unstable();
            s
        })
        .collect();
    all.sort();
    Ok(all)
}

/// Complement of a maximum independent set, sorted.
pub fn minimum_vertex_cover(g: &LabeledGraph) -> Result<Vec<usize>, GraphError> {
    let mis = maximum_independent_set(g)?;
    Ok((0..g.vertex_count())
        .filter(|v| mis.vertices.binary_search(v).is_err())
        .collect())
}

/// Maximum-clique branch and bound with a greedy colouring bound.
struct CliqueSearch {
    g: LabeledGraph,
    enumerate: bool,
    best: usize,
    found: Vec<Vec<usize>>,
}

impl CliqueSearch {
    fn new(g: LabeledGraph, enumerate: bool) -> Self {
        Self {
            g,
            enumerate,
            best: 0,
            found: Vec::new(),
        }
    }

    fn run(&mut self) {
        let n = self.g.vertex_count();
        if n == 0 {
            self.found.push(Vec::new());
            return;
        }
        let mut current = Vec::new();
        self.expand(&mut current, BitSet::full(n));
    }

    /// Greedy sequential colouring of `cand`; returns vertices with their
    /// colour numbers, ascending by colour.
    fn colour(&self, cand: &BitSet) -> Vec<(usize, usize)> {
        let mut order = Vec::with_capacity(cand.len());
        let mut uncoloured = cand.clone();
        let mut colour = 0;
        while !uncoloured.is_empty() {
            colour += 1;
            let mut available = uncoloured.clone();
            while let Some(v) = available.first() {
                available.remove(v);
                available.difference_with(self.g.neighbors(v));
                uncoloured.remove(v);
                order.push((v, colour));
            }
        }
        order
    }

    fn expand(&mut self, current: &mut Vec<usize>, mut cand: BitSet) {
        let order = self.colour(&cand);
        for &(v, colour) in order.iter().rev() {
            let bound = current.len() + colour;
            if bound < self.best || (!self.enumerate && bound == self.best) {
                return;
            }
            current.push(v);
            let next = cand.intersection(self.g.neighbors(v));
            if next.is_empty() {
                self.record(current);
            } else {
                self.expand(current, next);
            }
            current.pop();
            cand.remove(v);
        }
    }

    fn record(&mut self, current: &[usize]) {
        if current.len() > self.best {
            self.best = current.len();
            self.found.clear();
        }
        if current.len() == self.best && (self.enumerate || self.found.is_empty()) {
            self.found.push(current.to_vec());
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle_graph, empty_graph, petersen_graph};
    use proptest::prelude::*;

    fn brute_alpha(g: &LabeledGraph) -> (usize, usize) {
        let n = g.vertex_count();
        let mut best = 0;
        let mut count = 0;
        for mask in 0u32..(1 << n) {
            let set: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            if g.is_independent(&set) {
                match set.len().cmp(&best) {
                    std::cmp::Ordering::Greater => {
                        best = set.len();
                        count = 1;
                    }
                    std::cmp::Ordering::Equal => count += 1,
                    _ => {}
                }
            }
        }
        (best, count)
    }

    #[test]
    fn small_examples() {
        assert_eq!(maximum_independent_set(&empty_graph(6)).unwrap().size, 6);
        assert_eq!(maximum_independent_set(&complete_graph(5)).unwrap().size, 1);
        assert_eq!(minimum_vertex_cover(&complete_graph(5)).unwrap().len(), 4);
        assert_eq!(maximum_independent_set(&petersen_graph()).unwrap().size, 4);
        assert_eq!(all_maximum_independent_sets(&petersen_graph()).unwrap().len(), 5);
        assert_eq!(all_maximum_independent_sets(&cycle_graph(5)).unwrap().len(), 5);
        assert_eq!(maximum_independent_set(&empty_graph(0)).unwrap().size, 0);
    }

    proptest! {
        #[test]
        fn agrees_with_exhaustive_search(edges in proptest::collection::vec((0usize..12, 0usize..12), 0..40)) {
            let edges: Vec<_> = edges.into_iter().filter(|(u, v)| u != v).collect();
            let g = LabeledGraph::unlabeled(12, edges);
            let (alpha, count) = brute_alpha(&g);
            let mis = maximum_independent_set(&g).unwrap();
            prop_assert_eq!(mis.size, alpha);
            prop_assert!(g.is_independent(&mis.vertices));
            let all = all_maximum_independent_sets(&g).unwrap();
            prop_assert_eq!(all.len(), count);
            let cover = minimum_vertex_cover(&g).unwrap();
            prop_assert_eq!(cover.len() + mis.size, 12);
            for (u, v) in g.edges() {
                prop_assert!(cover.contains(&u) || cover.contains(&v));
            }
        }
    }
}
