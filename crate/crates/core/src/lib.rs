//! Interlace matrices of Euler systems, circuit partitions of 4-regular
//! multigraphs, interlace polynomials and orbit counting for permutations.
//!
//! The central fact implemented here: for a circuit partition `P` of a
//! 4-regular multigraph `G` with Euler system `C`, the number of circuits in
//! `P` equals `nullity(I_P) + c(G)`, where `I_P` is obtained from the
//! interlace matrix of `C` by deleting the rows and columns of vertices where
//! `P` follows `C` and setting the diagonal to 1 where `P` is orientation
//! inconsistent with `C`.

pub mod error;
pub mod gf2;
pub mod graph;
pub mod interlace;
pub mod partitions;
pub mod permutations;
pub mod poly;
pub mod polynomials;

pub use error::{Error, Result};
pub use gf2::Gf2Matrix;
pub use graph::{parse_dow, DirectedView, Direction, EulerSystem, Multigraph};
pub use interlace::{interlace_graph, interlace_matrix, interlaced, kappa_transform, LoopedGraph};
pub use partitions::{
    partition_matrix, trace, verify_extended_cle, CircuitPartition, CleReport, Pairing, Transition,
    TransitionAssignment,
};
pub use permutations::{verify_permutation_reduction, Permutation, ReductionReport};
pub use poly::MultiPoly;
pub use polynomials::{courcelle, q_nullity, q_two_variable};
