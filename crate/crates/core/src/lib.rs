//! Generalized Pauli operators of prime-dimensional qudits, their
//! commutation graphs, and the finite geometries those graphs carry.

pub mod geometry;
pub mod graph;
pub mod par;
pub mod pauli;
pub mod polar_space;
pub mod ring_lines;
pub mod verify;
