//! Finite simple graphs over labeled vertices, with the invariants and
//! searches needed to dissect commutation graphs.

mod bitset;
mod cliques;
mod coloring;
mod connectivity;
mod independent;
mod isomorphism;
mod spectrum;
mod srg;

pub use bitset::BitSet;
pub use cliques::{max_cliques, max_cliques_with, maximal_cliques};
pub use coloring::chromatic_number;
pub use connectivity::{girth, is_connected, vertex_connectivity, vertex_connectivity_with};
pub use independent::{
    all_maximum_independent_sets, maximum_independent_set, minimum_vertex_cover, IndependentSet,
};
pub use isomorphism::{is_isomorphic, verify_isomorphism, ISOMORPHISM_MAX_VERTICES};
pub use spectrum::{eigenvalues, spectrum, Spectrum};
pub use srg::{is_strongly_regular, is_strongly_regular_with, srg_multiplicities, SrgEigen, SrgParams};

use std::collections::HashMap;

use crate::par::{self, Exec};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GraphError {
    #[error("duplicate vertex label {0:?}")]
    DuplicateLabel(String),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for a graph on {len} vertices")]
    VertexOutOfRange { vertex: usize, len: usize },
    #[error("adjacency is not symmetric at ({0}, {1})")]
    Asymmetric(usize, usize),
    #[error("eigenvalue {0} is not within 1e-6 of an integer")]
    NonIntegralSpectrum(f64),
    #[error("graph has {found} vertices, limit is {limit}")]
    TooLarge { found: usize, limit: usize },
}

/// Simple undirected graph with bitset adjacency rows and injective labels.
#[derive(Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    labels: Vec<String>,
    adj: Vec<BitSet>,
}

impl std::fmt::Debug for LabeledGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("LabeledGraph")
            .field("v", &self.vertex_count())
            .field("e", &self.edge_count())
            .finish()
    }
}

fn default_labels(n: usize) -> Vec<String> {
    (0..n).map(|k| k.to_string()).collect()
}

fn check_labels(labels: &[String]) -> Result<(), GraphError> {
    let mut seen = std::collections::HashSet::with_capacity(labels.len());
    for l in labels {
        if !seen.insert(l.as_str()) {
            return Err(GraphError::DuplicateLabel(l.clone()));
        }
    }
    Ok(())
}

impl LabeledGraph {
    /// Graph on `labels.len()` vertices with the given edge list.
    pub fn from_edges(
        labels: Vec<String>,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        check_labels(&labels)?;
        let n = labels.len();
        let mut adj = vec![BitSet::new(n); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, len: n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Self { labels, adj })
    }

    /// Unlabeled convenience constructor; vertices are named `0..n`.
    pub fn unlabeled(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        Self::from_edges(default_labels(n), edges).expect("edge list out of range")
    }

    /// Builds from explicit adjacency rows, validating symmetry.
    pub fn from_adjacency(labels: Vec<String>, adj: Vec<BitSet>) -> Result<Self, GraphError> {
        check_labels(&labels)?;
        let n = labels.len();
        for (u, row) in adj.iter().enumerate() {
            if row.capacity() != n {
                return Err(GraphError::VertexOutOfRange { vertex: row.capacity(), len: n });
            }
            if row.contains(u) {
                return Err(GraphError::SelfLoop(u));
            }
            if let Some(v) = row.iter().find(|&v| !adj[v].contains(u)) {
                return Err(GraphError::Asymmetric(u, v));
            }
        }
        Ok(Self { labels, adj })
    }

    /// Builds the graph whose edges are the pairs accepted by `adjacent`,
    /// evaluating rows in parallel when `exec` allows it.
    pub fn from_predicate<F>(labels: Vec<String>, exec: Exec, adjacent: F) -> Result<Self, GraphError>
    where
        F: Fn(usize, usize) -> bool + Sync + Send,
    {
        let n = labels.len();
        let adj = par::map_range(exec, n, |u| {
            BitSet::from_indices(n, (0..n).filter(|&v| v != u && adjacent(u, v)))
        });
        Self::from_adjacency(labels, adj)
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BitSet::len).sum::<usize>() / 2
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Label → vertex map, for bulk lookups.
    pub fn label_map(&self) -> HashMap<&str, usize> {
        self.labels.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect()
    }

    pub fn neighbors(&self, v: usize) -> &BitSet {
        &self.adj[v]
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Common degree if the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.degree(0);
        (1..self.vertex_count()).all(|v| self.degree(v) == d).then_some(d)
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Closed neighborhood `{v} ∪ N(v)`.
    pub fn closed_neighborhood(&self, v: usize) -> BitSet {
        let mut s = self.adj[v].clone();
        s.insert(v);
        s
    }

    pub fn is_independent(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| !self.is_adjacent(u, v)))
    }

    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| u != v && self.is_adjacent(u, v)))
    }

    /// Subgraph induced on `vertices`, in the given order, keeping labels.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> LabeledGraph {
        let n = vertices.len();
        let labels = vertices.iter().map(|&v| self.labels[v].clone()).collect();
        let adj = vertices
            .iter()
            .map(|&u| {
                BitSet::from_indices(
                    n,
                    vertices
                        .iter()
                        .enumerate()
                        .filter(|&(_, &v)| self.is_adjacent(u, v))
                        .map(|(k, _)| k),
                )
            })
            .collect();
        LabeledGraph { labels, adj }
    }

    /// Induced subgraph by label; `None` if a label is unknown.
    pub fn induced_by_labels<S: AsRef<str>>(&self, labels: &[S]) -> Option<LabeledGraph> {
        let map = self.label_map();
        let idx: Option<Vec<usize>> = labels.iter().map(|l| map.get(l.as_ref()).copied()).collect();
        Some(self.induced_subgraph(&idx?))
    }

    pub fn complement(&self) -> LabeledGraph {
        let adj = self
            .adj
            .iter()
            .enumerate()
            .map(|(v, row)| {
                let mut c = row.complement();
                c.remove(v);
                c
            })
            .collect();
        LabeledGraph {
            labels: self.labels.clone(),
            adj,
        }
    }

    /// Vertices are the edges of `self` (labeled `u-v`), adjacent iff they
    /// share an endpoint.
    pub fn line_graph(&self) -> LabeledGraph {
        let edges: Vec<(usize, usize)> = self.edges().collect();
        let labels = edges
            .iter()
            .map(|&(u, v)| format!("{}-{}", self.labels[u], self.labels[v]))
            .collect();
        LabeledGraph::from_predicate(labels, Exec::Sequential, |i, j| {
            let (a, b) = edges[i];
            let (c, d) = edges[j];
            a == c || a == d || b == c || b == d
        })
        .expect("line graph labels are unique")
    }

    /// Same graph, vertices renamed.
    pub fn relabeled(&self, labels: Vec<String>) -> Result<LabeledGraph, GraphError> {
        assert_eq!(labels.len(), self.vertex_count());
        check_labels(&labels)?;
        Ok(LabeledGraph {
            labels,
            adj: self.adj.clone(),
        })
    }

    /// Dense 0/1 adjacency matrix.
    pub fn adjacency_matrix(&self) -> nalgebra::DMatrix<f64> {
        let n = self.vertex_count();
        nalgebra::DMatrix::from_fn(n, n, |i, j| if self.is_adjacent(i, j) { 1.0 } else { 0.0 })
    }
}

/// `K_n`.
pub fn complete_graph(n: usize) -> LabeledGraph {
    LabeledGraph::from_predicate(default_labels(n), Exec::Sequential, |_, _| true).unwrap()
}

/// `n` isolated vertices.
pub fn empty_graph(n: usize) -> LabeledGraph {
    LabeledGraph::unlabeled(n, [])
}

/// `K[a, b]`.
pub fn complete_bipartite(a: usize, b: usize) -> LabeledGraph {
    LabeledGraph::from_predicate(default_labels(a + b), Exec::Sequential, |u, v| (u < a) != (v < a))
        .unwrap()
}

pub fn cycle_graph(n: usize) -> LabeledGraph {
    LabeledGraph::unlabeled(n, (0..n).map(|k| (k, (k + 1) % n)))
}

/// The `k`-dimensional hypercube `Q_k`.
pub fn hypercube(k: u32) -> LabeledGraph {
    let n = 1usize << k;
    LabeledGraph::from_predicate(default_labels(n), Exec::Sequential, |u, v| (u ^ v).count_ones() == 1)
        .unwrap()
}

/// The `a x b` rook's graph `K_a □ K_b` (collinearity graph of a grid).
pub fn rook_graph(a: usize, b: usize) -> LabeledGraph {
    LabeledGraph::from_predicate(default_labels(a * b), Exec::Sequential, |u, v| {
        u / b == v / b || u % b == v % b
    })
    .unwrap()
}

/// Petersen graph, as the Kneser graph on 2-subsets of a 5-set.
pub fn petersen_graph() -> LabeledGraph {
    complete_graph(5).line_graph().complement()
}
