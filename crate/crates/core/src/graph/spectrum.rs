use std::fmt;

use nalgebra::SymmetricEigen;
use serde::{Deserialize, Serialize};

use super::{GraphError, LabeledGraph};

const INTEGRAL_TOL: f64 = 1e-6;

/// Integral adjacency spectrum as `(eigenvalue, multiplicity)` pairs,
/// ascending by eigenvalue.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Spectrum {
    entries: Vec<(i64, usize)>,
}

impl Spectrum {
    pub fn from_pairs(pairs: &[(i64, usize)]) -> Self {
        let mut entries: Vec<(i64, usize)> = pairs.iter().copied().filter(|&(_, m)| m > 0).collect();
        entries.sort_unstable();
        Self { entries }
    }

    pub fn entries(&self) -> &[(i64, usize)] {
        &self.entries
    }

    pub fn multiplicity(&self, eigenvalue: i64) -> usize {
        self.entries
            .iter()
            .find(|&&(e, _)| e == eigenvalue)
            .map_or(0, |&(_, m)| m)
    }

    /// Number of eigenvalues counted with multiplicity.
    pub fn total(&self) -> usize {
        self.entries.iter().map(|&(_, m)| m).sum()
    }

    /// `sum m * lambda`, the trace of `A` (0 for simple graphs).
    pub fn trace(&self) -> i64 {
        self.entries.iter().map(|&(e, m)| e * m as i64).sum()
    }

    /// `sum m * lambda^2`, the trace of `A^2` (twice the edge count).
    pub fn trace_of_square(&self) -> i64 {
        self.entries.iter().map(|&(e, m)| e * e * m as i64).sum()
    }

    pub fn largest(&self) -> Option<i64> {
        self.entries.last().map(|&(e, _)| e)
    }
}

impl fmt::Display for Spectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, &(e, m)) in self.entries.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            if m == 1 {
                write!(f, "{e}")?;
            } else {
                write!(f, "{e}^{m}")?;
            }
        }
        write!(f, "}}")
    }
}

/// Raw eigenvalues of the adjacency matrix, ascending.
pub fn eigenvalues(g: &LabeledGraph) -> Vec<f64> {
    if g.vertex_count() == 0 {
        return Vec::new();
    }
    let eig = SymmetricEigen::new(g.adjacency_matrix());
    let mut vals: Vec<f64> = eig.eigenvalues.iter().copied().collect();
    vals.sort_by(|a, b| a.total_cmp(b));
    vals
}

/// Integral spectrum; fails if some eigenvalue is not within `1e-6` of an integer.
pub fn spectrum(g: &LabeledGraph) -> Result<Spectrum, GraphError> {
    let mut entries: Vec<(i64, usize)> = Vec::new();
    for x in eigenvalues(g) {
        let r = x.round();
        if (x - r).abs() > INTEGRAL_TOL {
            return Err(GraphError::NonIntegralSpectrum(x));
        }
        let r = r as i64;
        match entries.last_mut() {
            Some((e, m)) if *e == r => *m += 1,
            _ => entries.push((r, 1)),
        }
    }
    Ok(Spectrum { entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle_graph, hypercube, petersen_graph};

    #[test]
    fn complete_graph_spectrum() {
        for n in 2..8 {
            let s = spectrum(&complete_graph(n)).unwrap();
            assert_eq!(s, Spectrum::from_pairs(&[(-1, n - 1), (n as i64 - 1, 1)]));
        }
    }

    #[test]
    fn known_spectra() {
        assert_eq!(spectrum(&petersen_graph()).unwrap().to_string(), "{-2^4, 1^5, 3}");
        assert_eq!(spectrum(&hypercube(3)).unwrap().to_string(), "{-3, -1^3, 1^3, 3}");
    }

    #[test]
    fn trace_identities() {
        let g = hypercube(4);
        let s = spectrum(&g).unwrap();
        assert_eq!(s.total(), 16);
        assert_eq!(s.trace(), 0);
        assert_eq!(s.trace_of_square(), 2 * g.edge_count() as i64);
    }

    #[test]
    fn pentagon_is_not_integral() {
        assert!(matches!(spectrum(&cycle_graph(5)), Err(GraphError::NonIntegralSpectrum(_))));
        assert_eq!(eigenvalues(&cycle_graph(5)).len(), 5);
    }
}
