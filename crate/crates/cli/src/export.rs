use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use pauli_geom::geometry::PauliGraphBundle;
use pauli_geom::graph::{girth, is_strongly_regular_with, spectrum, vertex_connectivity_with, LabeledGraph};
use pauli_geom::par::Exec;

/// Spectrum, girth and regularity are skipped above this many vertices.
pub const FULL_INVARIANTS_MAX: usize = 1024;

/// Vertex connectivity is only reported up to this many vertices.
pub const CONNECTIVITY_MAX: usize = 100;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphExport {
    pub params: ExportParams,
    pub vertices: Vec<ExportVertex>,
    pub edges: Vec<[usize; 2]>,
    pub invariants: Invariants,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExportParams {
    pub p: u32,
    pub n: usize,
    pub dimension: usize,
    /// `"named"` for the hand-labelled systems, `"symplectic"` otherwise.
    pub labels: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExportVertex {
    pub id: usize,
    pub label: String,
    /// `[a_1..a_n, b_1..b_n]`.
    pub symplectic: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Invariants {
    pub v: usize,
    pub e: usize,
    /// Common degree, or null when the graph is not regular.
    pub degree: Option<usize>,
    /// `[eigenvalue, multiplicity]`, ascending.
    pub spectrum: Option<Vec<(i64, usize)>>,
    pub girth: Option<usize>,
    pub vertex_connectivity: Option<usize>,
    /// `[v, k, lambda, mu]`.
    pub strongly_regular: Option<[usize; 4]>,
}

fn invariants(g: &LabeledGraph, exec: Exec) -> Invariants {
    let v = g.vertex_count();
    let full = v <= FULL_INVARIANTS_MAX;
    Invariants {
        v,
        e: g.edge_count(),
        degree: g.regular_degree(),
        spectrum: full
            .then(|| spectrum(g).ok())
            .flatten()
            .map(|s| s.entries().to_vec()),
        girth: full.then(|| girth(g)).flatten(),
        vertex_connectivity: (v <= CONNECTIVITY_MAX)
            .then(|| vertex_connectivity_with(g, exec).ok())
            .flatten(),
        strongly_regular: full
            .then(|| is_strongly_regular_with(g, exec))
            .flatten()
            .map(|s| {
                let (a, b, c, d) = s.quadruple();
                [a, b, c, d]
            }),
    }
}

pub fn graph_export(bundle: &PauliGraphBundle, exec: Exec) -> GraphExport {
    let params = bundle.params();
    let g = bundle.graph();
    GraphExport {
        params: ExportParams {
            p: params.p(),
            n: params.n(),
            dimension: params.dim(),
            labels: if bundle.has_named_labels() { "named" } else { "symplectic" }.to_string(),
        },
        vertices: (0..bundle.vertex_count())
            .map(|v| ExportVertex {
                id: v,
                label: bundle.label(v).to_string(),
                symplectic: bundle.symplectic(v).to_flat(),
            })
            .collect(),
        edges: g.edges().map(|(u, v)| [u, v]).collect(),
        invariants: invariants(g, exec),
    }
}

fn opt<T: ToString>(x: &Option<T>) -> String {
    x.as_ref().map_or("-".to_string(), T::to_string)
}

pub fn to_text(x: &GraphExport) -> String {
    let inv = &x.invariants;
    let mut out = format!(
        "Pauli graph p = {}, n = {} (dimension {})\n",
        x.params.p, x.params.n, x.params.dimension
    );
    let spectrum = inv.spectrum.as_ref().map(|s| {
        s.iter()
            .map(|&(e, m)| if m == 1 { e.to_string() } else { format!("{e}^{m}") })
            .collect::<Vec<_>>()
            .join(", ")
    });
    let srg = inv.strongly_regular.map(|[a, b, c, d]| format!("({a}, {b}, {c}, {d})"));
    let _ = writeln!(out, "vertices {}", inv.v);
    let _ = writeln!(out, "edges {}", inv.e);
    let _ = writeln!(out, "degree {}", opt(&inv.degree));
    let _ = writeln!(out, "spectrum {}", spectrum.map_or("-".to_string(), |s| format!("{{{s}}}")));
    let _ = writeln!(out, "girth {}", opt(&inv.girth));
    let _ = writeln!(out, "vertex connectivity {}", opt(&inv.vertex_connectivity));
    let _ = writeln!(out, "strongly regular {}", opt(&srg));
    let mut adj = vec![Vec::new(); x.vertices.len()];
    for &[u, v] in &x.edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    out.push('\n');
    for (vert, nb) in x.vertices.iter().zip(&mut adj) {
        nb.sort_unstable();
        let names: Vec<&str> = nb.iter().map(|&w| x.vertices[w].label.as_str()).collect();
        let _ = writeln!(out, "{} {:?}: {}", vert.label, vert.symplectic, names.join(" "));
    }
    out
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

pub fn to_dot(x: &GraphExport) -> String {
    let mut out = format!("graph pauli_p{}_n{} {{\n", x.params.p, x.params.n);
    for v in &x.vertices {
        let _ = writeln!(out, "  {};", quote(&v.label));
    }
    for &[u, v] in &x.edges {
        let _ = writeln!(out, "  {} -- {};", quote(&x.vertices[u].label), quote(&x.vertices[v].label));
    }
    out.push_str("}\n");
    out
}
