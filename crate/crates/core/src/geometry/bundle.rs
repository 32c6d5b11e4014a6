use std::collections::HashMap;

use super::GeometryError;
use crate::graph::LabeledGraph;
use crate::par::{self, Exec};
use crate::pauli::{make_operator, symplectic_product, PauliOperator, SymplecticIndex, SystemParams};

/// Largest accepted operator count `d^2 - 1`.
pub const MAX_OPERATORS: usize = 4096;

/// Pairs checked against monomial commutation when the full check is off.
const SAMPLED_PAIRS: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[derive(Default)]
pub struct BuildOptions {
    pub exec: Exec,
    /// Compare every pair's symplectic adjacency with the monomial commutator.
    /// Debug builds always do this.
    pub debug_oracle: bool,
}


/// The Pauli graph of a system together with each vertex's operator data.
#[derive(Debug, Clone)]
pub struct PauliGraphBundle {
    params: SystemParams,
    graph: LabeledGraph,
    indices: Vec<SymplecticIndex>,
    operators: Vec<PauliOperator>,
    by_index: HashMap<SymplecticIndex, usize>,
}

impl PauliGraphBundle {
    pub fn params(&self) -> &SystemParams {
        &self.params
    }

    pub fn graph(&self) -> &LabeledGraph {
        &self.graph
    }

    pub fn vertex_count(&self) -> usize {
        self.indices.len()
    }

    pub fn label(&self, v: usize) -> &str {
        self.graph.label(v)
    }

    pub fn labels(&self) -> &[String] {
        self.graph.labels()
    }

    pub fn index_of_label(&self, label: &str) -> Option<usize> {
        self.graph.index_of(label)
    }

    /// Vertices for a list of labels; fails on the first unknown label.
    pub fn vertices_of<S: AsRef<str>>(&self, labels: &[S]) -> Result<Vec<usize>, GeometryError> {
        let map = self.graph.label_map();
        labels
            .iter()
            .map(|l| {
                map.get(l.as_ref())
                    .copied()
                    .ok_or_else(|| GeometryError::UnknownPoint(l.as_ref().to_string()))
            })
            .collect()
    }

    pub fn symplectic(&self, v: usize) -> &SymplecticIndex {
        &self.indices[v]
    }

    pub fn operator(&self, v: usize) -> &PauliOperator {
        &self.operators[v]
    }

    pub fn vertex_of_index(&self, idx: &SymplecticIndex) -> Option<usize> {
        self.by_index.get(idx).copied()
    }

    /// Vertex whose operator equals `op` up to a scalar, with that scalar
    /// (`op = zeta^k * operator(v)`). `None` for scalars and foreign operators.
    pub fn identify(&self, op: &PauliOperator) -> Option<(usize, crate::pauli::PhaseScalar)> {
        let idx = index_of_monomial(&self.params, op)?;
        let v = self.vertex_of_index(&idx)?;
        let k = op.equal_up_to_phase(&self.operators[v]).ok()??;
        Some((v, k))
    }

    /// True if the paper-style labels are in use (two qubits, two qutrits).
    pub fn has_named_labels(&self) -> bool {
        named_positions(self.params.p()).is_some() && self.params.n() == 2
    }
}

/// Recovers `(a, b)` from a monomial operator: the permutation fixes `a`,
/// the phase ratio between basis states `e_k` and `e_0` on each qudit fixes `b`.
fn index_of_monomial(params: &SystemParams, op: &PauliOperator) -> Option<SymplecticIndex> {
    let p = params.p() as usize;
    let n = params.n();
    if op.dim() != params.dim() {
        return None;
    }
    let digits = |mut x: usize| {
        let mut out = vec![0u32; n];
        for slot in out.iter_mut().rev() {
            *slot = (x % p) as u32;
            x /= p;
        }
        out
    };
    let row0 = digits(op.perm()[0] as usize);
    let ph = op.phase_exponents();
    let unit = params.phase_modulus() / params.p();
    let mut b = vec![0u32; n];
    for (k, slot) in b.iter_mut().enumerate() {
        // Basis state with a single 1 in qudit k.
        let j = p.pow((n - 1 - k) as u32);
        let diff = (ph[j] + params.phase_modulus() - ph[0]) % params.phase_modulus();
        if !diff.is_multiple_of(unit) {
            return None;
        }
        *slot = diff / unit;
    }
    Some(SymplecticIndex::new(row0, b, params.p()))
}

/// Single-qudit positions used by the named labels, 1-based in list order.
fn named_positions(p: u32) -> Option<&'static [(u32, u32)]> {
    match p {
        // sigma_x, sigma_y, sigma_z
        2 => Some(&[(1, 0), (1, 1), (0, 1)]),
        // Z, X, Y = XZ, V = XZ^2, Z^2, X^2, Y^2, V^2
        3 => Some(&[(0, 1), (1, 0), (1, 1), (1, 2), (0, 2), (2, 0), (2, 2), (2, 1)]),
        _ => None,
    }
}

/// Vertex order and labels. For two qubits/qutrits, position `k` on qudit 0
/// and `j` on qudit 1 (0 = identity) is labeled `j` if `k = 0`, the `k`-th
/// letter if `j = 0`, else `m k + j` with `m = p^2 - 1`; vertices are listed
/// by `(k, j)`. Otherwise vertices follow rank order with coordinate labels.
fn vertex_table(params: &SystemParams) -> Vec<(SymplecticIndex, String)> {
    let p = params.p();
    if let (Some(pos), 2) = (named_positions(p), params.n()) {
        let m = pos.len();
        let at = |k: usize| if k == 0 { (0, 0) } else { pos[k - 1] };
        let mut out = Vec::with_capacity(m * (m + 2));
        for k in 0..=m {
            for j in 0..=m {
                if k == 0 && j == 0 {
                    continue;
                }
                let (a0, b0) = at(k);
                let (a1, b1) = at(j);
                let label = match (k, j) {
                    (0, j) => j.to_string(),
                    (k, 0) => char::from(b'a' + (k - 1) as u8).to_string(),
                    (k, j) => (m * k + j).to_string(),
                };
                out.push((SymplecticIndex::new(vec![a0, a1], vec![b0, b1], p), label));
            }
        }
        return out;
    }
    let total = params.dim() * params.dim();
    (1..total)
        .map(|k| {
            let idx = SymplecticIndex::from_rank(k, params);
            let label = coordinate_label(&idx, p);
            (idx, label)
        })
        .collect()
}

/// `"a1a2..|b1b2.."`, digits comma-separated when `p > 10`.
pub fn coordinate_label(idx: &SymplecticIndex, p: u32) -> String {
    let sep = if p > 10 { "," } else { "" };
    let join = |xs: &[u32]| xs.iter().map(u32::to_string).collect::<Vec<_>>().join(sep);
    format!("{}|{}", join(idx.x_part()), join(idx.z_part()))
}

pub fn build_pauli_graph(params: &SystemParams) -> Result<PauliGraphBundle, GeometryError> {
    build_pauli_graph_with(params, BuildOptions::default())
}

/// Builds the commutation graph from the symplectic form and cross-checks
/// it against monomial commutation (every pair in debug builds or with
/// `debug_oracle`, a fixed sample otherwise).
pub fn build_pauli_graph_with(
    params: &SystemParams,
    options: BuildOptions,
) -> Result<PauliGraphBundle, GeometryError> {
    let count = params.operator_count();
    if count > MAX_OPERATORS {
        return Err(GeometryError::UnsupportedSize {
            operators: count,
            limit: MAX_OPERATORS,
        });
    }
    let (indices, labels): (Vec<_>, Vec<_>) = vertex_table(params).into_iter().unzip();
    let operators = par::map_slice(options.exec, &indices, |idx| make_operator(params, idx))
        .into_iter()
        .collect::<Result<Vec<_>, _>>()?;
    let p = params.p();
    let graph = LabeledGraph::from_predicate(labels, options.exec, |u, v| {
        symplectic_product(&indices[u], &indices[v], p) == 0
    })?;

    let pairs: Vec<(usize, usize)> = if options.debug_oracle || cfg!(debug_assertions) {
        (0..count).flat_map(|u| (u + 1..count).map(move |v| (u, v))).collect()
    } else {
        (0..SAMPLED_PAIRS.min(count * count))
            .map(|k| (k % count, (k.wrapping_mul(2_654_435_761) / 7 + k / count) % count))
            .filter(|(u, v)| u != v)
            .collect()
    };
    let mismatch = par::map_slice(options.exec, &pairs, |&(u, v)| {
        let commute = operators[u].commutes(&operators[v]).unwrap_or(false);
        (commute != graph.is_adjacent(u, v)).then_some((u, v))
    })
    .into_iter()
    .flatten()
    .next();
    if let Some((u, v)) = mismatch {
        return Err(GeometryError::OracleMismatch {
            first: graph.label(u).to_string(),
            second: graph.label(v).to_string(),
        });
    }

    let by_index = indices.iter().cloned().enumerate().map(|(v, i)| (i, v)).collect();
    Ok(PauliGraphBundle {
        params: *params,
        graph,
        indices,
        operators,
        by_index,
    })
}
