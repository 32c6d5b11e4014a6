use std::collections::VecDeque;

use super::{BitSet, GraphError, LabeledGraph};
use crate::par::{self, Exec};

/// Vertex-count bound for the max-flow connectivity routine.
pub const CONNECTIVITY_MAX_VERTICES: usize = 100;

pub fn is_connected(g: &LabeledGraph) -> bool {
    let n = g.vertex_count();
    if n == 0 {
        return true;
    }
    let mut seen = BitSet::new(n);
    seen.insert(0);
    let mut frontier = vec![0];
    while let Some(u) = frontier.pop() {
        for v in g.neighbors(u).iter() {
            if !seen.contains(v) {
                seen.insert(v);
                frontier.push(v);
            }
        }
    }
    seen.len() == n
}

/// Length of a shortest cycle, `None` for forests.
pub fn girth(g: &LabeledGraph) -> Option<usize> {
    // Triangles are found directly from adjacency rows.
    let has_triangle = g
        .edges()
        .any(|(u, v)| !g.neighbors(u).is_disjoint(g.neighbors(v)));
    if has_triangle {
        return Some(3);
    }
    let n = g.vertex_count();
    let shortest = par::map_range(Exec::default(), n, |root| shortest_cycle_through(g, root));
    shortest.into_iter().flatten().min()
}

/// BFS from `root`; the first non-tree edge closes the shortest cycle that
/// the BFS tree of `root` can see.
fn shortest_cycle_through(g: &LabeledGraph, root: usize) -> Option<usize> {
    let n = g.vertex_count();
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    dist[root] = 0;
    let mut queue = VecDeque::from([root]);
    let mut best: Option<usize> = None;
    while let Some(u) = queue.pop_front() {
        if let Some(b) = best {
            if 2 * dist[u] + 1 >= b {
                break;
            }
        }
        for v in g.neighbors(u).iter() {
            if dist[v] == usize::MAX {
                dist[v] = dist[u] + 1;
                parent[v] = u;
                queue.push_back(v);
            } else if parent[u] != v {
                let len = dist[u] + dist[v] + 1;
                best = Some(best.map_or(len, |b| b.min(len)));
            }
        }
    }
    best
}

/// Minimum number of vertices whose removal disconnects `g` (or leaves a
/// single vertex). Complete graphs give `v - 1`.
pub fn vertex_connectivity(g: &LabeledGraph) -> Result<usize, GraphError> {
    vertex_connectivity_with(g, Exec::default())
}

/// Menger's theorem over unit-capacity flows on the split-vertex network.
///
/// Some vertex among the first `kappa + 1` lies outside any minimum separator,
/// so sources are scanned in order until their index exceeds the best cut.
pub fn vertex_connectivity_with(g: &LabeledGraph, exec: Exec) -> Result<usize, GraphError> {
    let n = g.vertex_count();
    if n > CONNECTIVITY_MAX_VERTICES {
        return Err(GraphError::TooLarge {
            found: n,
            limit: CONNECTIVITY_MAX_VERTICES,
        });
    }
    if n <= 1 {
        return Ok(0);
    }
    let mut best = n - 1;
    let mut source = 0;
    while source <= best && source < n {
        let targets: Vec<usize> = (0..n)
            .filter(|&t| t != source && !g.is_adjacent(source, t))
            .collect();
        let cap = best;
        let cuts = par::map_slice(exec, &targets, |&t| local_connectivity(g, source, t, cap));
        if let Some(&m) = cuts.iter().min() {
            best = best.min(m);
        }
        source += 1;
    }
    Ok(best)
}

/// Unit-capacity residual network over split vertices.
struct FlowNetwork {
    head: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<u32>,
}

impl FlowNetwork {
    fn new(nodes: usize) -> Self {
        Self {
            head: vec![Vec::new(); nodes],
            to: Vec::new(),
            cap: Vec::new(),
        }
    }

    /// Adds `x -> y` with capacity `c` and its reverse residual arc.
    fn arc(&mut self, x: usize, y: usize, c: u32) {
        self.head[x].push(self.to.len());
        self.to.push(y);
        self.cap.push(c);
        self.head[y].push(self.to.len());
        self.to.push(x);
        self.cap.push(0);
    }

    fn augment(&mut self, source: usize, sink: usize) -> bool {
        let mut via = vec![usize::MAX; self.head.len()];
        let mut seen = vec![false; self.head.len()];
        seen[source] = true;
        let mut queue = VecDeque::from([source]);
        while let Some(x) = queue.pop_front() {
            if x == sink {
                break;
            }
            for &a in &self.head[x] {
                let y = self.to[a];
                if self.cap[a] > 0 && !seen[y] {
                    seen[y] = true;
                    via[y] = a;
                    queue.push_back(y);
                }
            }
        }
        if !seen[sink] {
            return false;
        }
        let mut y = sink;
        while y != source {
            let a = via[y];
            self.cap[a] -= 1;
            self.cap[a ^ 1] += 1;
            y = self.to[a ^ 1];
        }
        true
    }
}

/// Number of internally vertex-disjoint `s`-`t` paths, stopping at `cap`.
fn local_connectivity(g: &LabeledGraph, s: usize, t: usize, cap: usize) -> usize {
    let n = g.vertex_count();
    let big = n as u32;
    let mut net = FlowNetwork::new(2 * n);
    for v in 0..n {
        let c = if v == s || v == t { big } else { 1 };
        net.arc(2 * v, 2 * v + 1, c);
    }
    for (u, v) in g.edges() {
        net.arc(2 * u + 1, 2 * v, 1);
        net.arc(2 * v + 1, 2 * u, 1);
    }
    let mut paths = 0;
    while paths < cap && net.augment(2 * s + 1, 2 * t) {
        paths += 1;
    }
    paths
}
