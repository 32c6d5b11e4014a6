use std::collections::BTreeMap;

use super::{GraphError, LabeledGraph};

pub const ISOMORPHISM_MAX_VERTICES: usize = 24;

/// Finds an adjacency-preserving bijection `map[v1] = v2`, if any.
///
/// Colour refinement over the disjoint union gives comparable vertex
/// classes; backtracking then only tries images of matching colour and
/// checks adjacency against every vertex mapped so far.
pub fn is_isomorphic(g1: &LabeledGraph, g2: &LabeledGraph) -> Result<Option<Vec<usize>>, GraphError> {
    for g in [g1, g2] {
        if g.vertex_count() > ISOMORPHISM_MAX_VERTICES {
            return Err(GraphError::TooLarge {
                found: g.vertex_count(),
                limit: ISOMORPHISM_MAX_VERTICES,
            });
        }
    }
    let n = g1.vertex_count();
    if n != g2.vertex_count() || g1.edge_count() != g2.edge_count() {
        return Ok(None);
    }
    let (c1, c2) = refine_colours(g1, g2);
    let histogram = |c: &[usize]| {
        let mut h = BTreeMap::new();
        for &x in c {
            *h.entry(x).or_insert(0usize) += 1;
        }
        h
    };
    if histogram(&c1) != histogram(&c2) {
        return Ok(None);
    }

    // Map rare colours first, then grow along edges so adjacency checks bite early.
    let freq = histogram(&c1);
    let mut order: Vec<usize> = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    while order.len() < n {
        let seed = (0..n)
            .filter(|&v| !placed[v])
            .min_by_key(|&v| (freq[&c1[v]], v))
            .expect("unplaced vertex exists");
        placed[seed] = true;
        order.push(seed);
        let mut k = order.len() - 1;
        while k < order.len() {
            let u = order[k];
            let mut next: Vec<usize> = g1.neighbors(u).iter().filter(|&w| !placed[w]).collect();
            next.sort_by_key(|&w| (freq[&c1[w]], w));
            for w in next {
                placed[w] = true;
                order.push(w);
            }
            k += 1;
        }
    }

    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if extend(g1, g2, &c1, &c2, &order, 0, &mut map, &mut used) {
        Ok(Some(map))
    } else {
        Ok(None)
    }
}

#[allow(clippy::too_many_arguments)]
fn extend(
    g1: &LabeledGraph,
    g2: &LabeledGraph,
    c1: &[usize],
    c2: &[usize],
    order: &[usize],
    at: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    let Some(&v) = order.get(at) else {
        return true;
    };
    for w in 0..g2.vertex_count() {
        if used[w] || c2[w] != c1[v] {
            continue;
        }
        let consistent = order[..at]
            .iter()
            .all(|&u| g1.is_adjacent(u, v) == g2.is_adjacent(map[u], w));
        if !consistent {
            continue;
        }
        map[v] = w;
        used[w] = true;
        if extend(g1, g2, c1, c2, order, at + 1, map, used) {
            return true;
        }
        used[w] = false;
        map[v] = usize::MAX;
    }
    false
}

/// 1-dimensional Weisfeiler–Leman colours, computed jointly so that equal
/// colours in `g1` and `g2` mean equal refinement histories.
fn refine_colours(g1: &LabeledGraph, g2: &LabeledGraph) -> (Vec<usize>, Vec<usize>) {
    let n1 = g1.vertex_count();
    let graphs = [g1, g2];
    let mut colours: Vec<usize> = graphs
        .iter()
        .flat_map(|g| (0..g.vertex_count()).map(|v| g.degree(v)))
        .collect();
    let mut classes = usize::MAX;
    loop {
        let signatures: Vec<(usize, Vec<usize>)> = graphs
            .iter()
            .enumerate()
            .flat_map(|(k, g)| {
                let offset = if k == 0 { 0 } else { n1 };
                let colours = &colours;
                (0..g.vertex_count()).map(move |v| {
                    let mut nb: Vec<usize> = g.neighbors(v).iter().map(|u| colours[offset + u]).collect();
                    nb.sort_unstable();
                    (colours[offset + v], nb)
                })
            })
            .collect();
        let mut ids = BTreeMap::new();
        for s in &signatures {
            let next = ids.len();
            ids.entry(s.clone()).or_insert(next);
        }
        colours = signatures.iter().map(|s| ids[s]).collect();
        if ids.len() == classes {
            break;
        }
        classes = ids.len();
    }
    let c2 = colours.split_off(n1);
    (colours, c2)
}

/// Checks that `map` is a bijection carrying edges onto edges and
/// non-edges onto non-edges, pair by pair.
pub fn verify_isomorphism(g1: &LabeledGraph, g2: &LabeledGraph, map: &[usize]) -> bool {
    let n = g1.vertex_count();
    if n != g2.vertex_count() || map.len() != n {
        return false;
    }
    let mut hit = vec![false; n];
    for &w in map {
        if w >= n || std::mem::replace(&mut hit[w], true) {
            return false;
        }
    }
    (0..n).all(|u| (u + 1..n).all(|v| g1.is_adjacent(u, v) == g2.is_adjacent(map[u], map[v])))
}
