use serde::Serialize;

use super::{GeometryError, PauliGraphBundle};
use crate::pauli::{common_eigenbasis, schmidt_rank, symplectic_product, PauliOperator, SymplecticIndex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Entanglement {
    Unentangled,
    Entangled,
}

fn check_line(bundle: &PauliGraphBundle, line: &[usize]) -> Result<(), GeometryError> {
    let params = bundle.params();
    let fail = || GeometryError::NotAnMcs(line.iter().map(|&v| v.to_string()).collect::<Vec<_>>().join(","));
    if params.n() != 2 || line.len() != params.dim() - 1 || line.iter().any(|&v| v >= bundle.vertex_count()) {
        return Err(fail());
    }
    if !bundle.graph().is_clique(line) {
        return Err(fail());
    }
    Ok(())
}

/// Whether the common eigenbasis of a two-qudit line is a product basis.
///
/// Decided combinatorially: the line is unentangled iff the first tensor
/// factors pairwise commute and so do the second ones.
pub fn line_entanglement(bundle: &PauliGraphBundle, line: &[usize]) -> Result<Entanglement, GeometryError> {
    check_line(bundle, line)?;
    let p = bundle.params().p();
    let factor = |v: usize, k: usize| {
        let idx = bundle.symplectic(v);
        SymplecticIndex::new(vec![idx.x_part()[k]], vec![idx.z_part()[k]], p)
    };
    let local = |k: usize| {
        line.iter()
            .enumerate()
            .all(|(i, &u)| line[i + 1..].iter().all(|&v| symplectic_product(&factor(u, k), &factor(v, k), p) == 0))
    };
    Ok(if local(0) && local(1) {
        Entanglement::Unentangled
    } else {
        Entanglement::Entangled
    })
}

/// The numerical counterpart: Schmidt ranks of the common eigenbasis.
pub fn line_entanglement_by_schmidt(bundle: &PauliGraphBundle, line: &[usize]) -> Result<Entanglement, GeometryError> {
    check_line(bundle, line)?;
    let ops: Vec<PauliOperator> = line.iter().map(|&v| bundle.operator(v).clone()).collect();
    let p = bundle.params().p() as usize;
    for e in common_eigenbasis(&ops)? {
        if schmidt_rank(e.as_slice(), p)? > 1 {
            return Ok(Entanglement::Entangled);
        }
    }
    Ok(Entanglement::Unentangled)
}
