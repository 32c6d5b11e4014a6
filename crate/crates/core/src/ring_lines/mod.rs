//! Projective lines over small finite rings and their match with the
//! two-qubit hyperplanes.

mod correspondence;
mod line;
mod ring;

use thiserror::Error;

use crate::geometry::GeometryError;
use crate::graph::GraphError;

pub use correspondence::{hyperplane_correspondence, standard_pair, CorrespondenceReport, CorrespondenceRow, Relation};
pub use line::{is_admissible, pair_symmetric_subsets, projective_line, RingLine, RingLinePoint};
pub use ring::{builtin_ring, FiniteRing, Invertibility, RingName, MAX_RING_ORDER};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum RingError {
    #[error("unknown ring {0} (expected Z2, F4, Z2x_sq, Z2xZ2 or M2Z2)")]
    UnknownRing(String),
    #[error("ring order {0} outside 1..=16")]
    TooLarge(usize),
    #[error("invalid ring table: {0}")]
    InvalidTable(String),
    #[error("unknown point {0}")]
    UnknownPoint(String),
    #[error("points {0} and {1} are not distant")]
    NotDistant(String, String),
    #[error("the correspondence needs two qubits, got p = {p}, n = {n}")]
    NotTwoQubits { p: u32, n: usize },
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}
