use super::{GraphError, LabeledGraph};

pub const CHROMATIC_MAX_VERTICES: usize = 64;

/// Exact chromatic number by backtracking `k`-colourability for increasing `k`.
/// Exponential; meant for the small subgraphs tabulated alongside the
/// other invariants.
pub fn chromatic_number(g: &LabeledGraph) -> Result<usize, GraphError> {
    let n = g.vertex_count();
    if n > CHROMATIC_MAX_VERTICES {
        return Err(GraphError::TooLarge {
            found: n,
            limit: CHROMATIC_MAX_VERTICES,
        });
    }
    if n == 0 {
        return Ok(0);
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let mut k = 1;
    loop {
        let mut colours = vec![usize::MAX; n];
        if colourable(g, &order, 0, k, &mut colours) {
            return Ok(k);
        }
        k += 1;
    }
}

fn colourable(g: &LabeledGraph, order: &[usize], at: usize, k: usize, colours: &mut [usize]) -> bool {
    let Some(&v) = order.get(at) else {
        return true;
    };
    // Symmetry breaking: never open more than one new colour at a time.
    let used = colours.iter().filter(|&&c| c != usize::MAX).max().map_or(0, |&c| c + 1);
    for c in 0..k.min(used + 1) {
        if g.neighbors(v).iter().all(|u| colours[u] != c) {
            colours[v] = c;
            if colourable(g, order, at + 1, k, colours) {
                return true;
            }
            colours[v] = usize::MAX;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_bipartite, complete_graph, cycle_graph, empty_graph, hypercube, petersen_graph, rook_graph};

    #[test]
    fn known_chromatic_numbers() {
        assert_eq!(chromatic_number(&complete_graph(5)).unwrap(), 5);
        assert_eq!(chromatic_number(&cycle_graph(5)).unwrap(), 3);
        assert_eq!(chromatic_number(&cycle_graph(6)).unwrap(), 2);
        assert_eq!(chromatic_number(&petersen_graph()).unwrap(), 3);
        assert_eq!(chromatic_number(&hypercube(3)).unwrap(), 2);
        assert_eq!(chromatic_number(&complete_bipartite(3, 3)).unwrap(), 2);
        assert_eq!(chromatic_number(&rook_graph(3, 3)).unwrap(), 3);
        assert_eq!(chromatic_number(&empty_graph(4)).unwrap(), 1);
        // Kneser graph K(6,2): chromatic number 6 - 4 + 2.
        assert_eq!(chromatic_number(&complete_graph(6).line_graph().complement()).unwrap(), 4);
    }
}
