//! Point-line geometry carried by the commutation graph: maximal commuting
//! sets as lines, hyperplanes, spreads, ovoids and the named partitions.

mod bundle;
mod entanglement;
mod hyperplane;
mod incidence;
mod mermin;
mod partition;
mod spread;

use thiserror::Error;

use crate::graph::GraphError;
use crate::pauli::PauliError;

pub use bundle::{
    build_pauli_graph, build_pauli_graph_with, coordinate_label, BuildOptions, PauliGraphBundle, MAX_OPERATORS,
};
pub use entanglement::{line_entanglement, line_entanglement_by_schmidt, Entanglement};
pub use hyperplane::{classify_hyperplane, HyperplaneClassification, HyperplaneKind};
pub use incidence::{dual_graph, dual_structure, enumerate_mcs, enumerate_mcs_with, perp_set, IncidenceStructure};
pub use mermin::{mermin_arrangement, verify_polarization, Arrangement, Polarization};
pub use partition::{partition_report, verify_partition, Check, Part, PartitionName, PartitionReport};
pub use spread::{exact_cover, find_ovoids, find_ovoids_with, find_spreads, find_spreads_with, line_bases, mub_deviation};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GeometryError {
    #[error(transparent)]
    Pauli(#[from] PauliError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("{operators} operators exceed the limit of {limit}")]
    UnsupportedSize { operators: usize, limit: usize },
    #[error("symplectic and matrix commutation disagree on {first}, {second}")]
    OracleMismatch { first: String, second: String },
    #[error("unknown point {0}")]
    UnknownPoint(String),
    #[error("unknown line {0}")]
    UnknownLine(String),
    #[error("maximal commuting set {0} has no name in the line table")]
    UnnamedLine(String),
    #[error("not a grid: {0}")]
    NotAGrid(String),
    #[error("operators do not commute: {0}")]
    NotCommuting(String),
    #[error("product is not a scalar: {0}")]
    NotScalar(String),
    #[error("not a maximal commuting set: {0}")]
    NotAnMcs(String),
    #[error("unknown partition {0}")]
    UnknownPartition(String),
    #[error("partition {partition} is not defined for p = {p}, n = {n}")]
    NotApplicable { partition: String, p: u32, n: usize },
    #[error("partition {partition} fails \"{clause}\": {detail}")]
    PartitionFailed {
        partition: String,
        clause: String,
        detail: String,
    },
}
