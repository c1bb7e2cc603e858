//! Exact computation of the one-dimensional stable norm of a finite weighted
//! multigraph.
//!
//! The unit ball of the stable norm on the first real homology of a weighted
//! graph is a polytope whose vertices are the normalized simple oriented
//! circuits of the graph. This crate computes that polytope exactly, together
//! with norm evaluation, dual-norm queries, circuit decompositions of integer
//! homology classes, and an independent brute-force cross-check.
//!
//! All arithmetic is over arbitrary-precision rationals; there are no epsilon
//! tolerances anywhere. The crate is `no_std` (with `alloc`).
//!
//! Overview of the modules:
//!
//! * [`graph`] — multigraph representation, boundary operator, spanning
//!   forest, fundamental-cycle homology basis;
//! * [`circuit`] — enumeration of all simple oriented circuits;
//! * [`norm`] — stable norm, the stable ball, circuit merging and
//!   decomposition of integral classes, vertex verification;
//! * [`polytope`] — exact convex-geometry primitives (extremity and hull
//!   membership tests with certificates);
//! * [`oracle`] — independent computation of the ball as the intersection of
//!   the weighted l1 ball with the cycle subspace, for verification.
//!
//! # Example
//!
//! The theta graph: two vertices joined by three parallel unit edges.
//!
//! ```
//! use stableball::rational::ratio;
//! use stableball::{
//!     enumerate_circuits, stable_ball, stable_norm, HomologyBasis, WeightedMultigraph,
//! };
//!
//! let g = WeightedMultigraph::from_triples(
//!     2,
//!     [(0, 1, ratio(1, 1)), (0, 1, ratio(1, 1)), (0, 1, ratio(1, 1))],
//! )?;
//! let basis = HomologyBasis::new(&g);
//! let circuits = enumerate_circuits(&g)?;
//! let ball = stable_ball(&g, &basis, &circuits);
//! assert_eq!(ball.vertex_count(), 6);
//! let norm = stable_norm(&g, &basis, &[ratio(3, 1), ratio(2, 1)])?;
//! assert_eq!(norm, ratio(10, 1));
//! # Ok::<(), stableball::Error>(())
//! ```

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod circuit;
pub mod graph;
pub mod norm;
pub mod oracle;
pub mod polytope;
pub mod rational;
mod simplex;

pub use circuit::{enumerate_circuits, enumerate_circuits_capped, CircuitSet, Sign, SimpleCircuit, Step};
pub use graph::{Chain, Edge, HomologyBasis, WeightedMultigraph};
pub use norm::{
    chain_norm, decompose_class, dual_norm, merge_circuits, stable_ball, stable_norm,
    verify_vertices, Decomposition, StableBall, VerificationReport,
};
pub use oracle::{ball_by_intersection, norm_by_infimum, InfimumSolution};
pub use polytope::{hull_contains, is_extreme, support_value, HullMembership, PointSet};
pub use rational::{parse_rational, Rational};

use core::fmt;

/// Errors shared across the library.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// An edge weight is zero or negative.
    NonPositiveWeight { edge: usize },
    /// An edge endpoint is not a valid vertex index.
    DanglingEndpoint { edge: usize, vertex: usize },
    /// The graph does not consist of a single connected component.
    Disconnected,
    /// A vector has the wrong length for the operation.
    DimensionMismatch { expected: usize, got: usize },
    /// The chain has nonzero boundary where a cycle is required.
    NotACycle,
    /// The walk revisits a vertex or reuses an edge.
    NotSimple,
    /// The walk is empty or its steps do not close up.
    NotClosed,
    /// Circuit enumeration exceeded the configured cap.
    CircuitCapExceeded { cap: usize },
    /// A class coordinate is not an integer.
    NonIntegralClass { index: usize },
    /// The ball lives in a zero-dimensional homology space.
    DegenerateBall,
    /// The vertex set is empty.
    EmptySet,
    /// The graph has more edges than the oracle cap allows.
    CapExceeded { edges: usize, cap: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonPositiveWeight { edge } => {
                write!(f, "edge {edge} has non-positive weight")
            }
            Error::DanglingEndpoint { edge, vertex } => {
                write!(f, "edge {edge} references vertex {vertex} out of range")
            }
            Error::Disconnected => write!(f, "graph is not connected"),
            Error::DimensionMismatch { expected, got } => {
                write!(f, "dimension mismatch: expected {expected}, got {got}")
            }
            Error::NotACycle => write!(f, "chain has nonzero boundary"),
            Error::NotSimple => write!(f, "walk is not vertex-simple"),
            Error::NotClosed => write!(f, "walk is not closed"),
            Error::CircuitCapExceeded { cap } => {
                write!(f, "more than {cap} oriented circuits; raise the cap")
            }
            Error::NonIntegralClass { index } => {
                write!(f, "class coordinate {index} is not an integer")
            }
            Error::DegenerateBall => write!(f, "ball is degenerate (betti number 0)"),
            Error::EmptySet => write!(f, "empty vertex set"),
            Error::CapExceeded { edges, cap } => {
                write!(f, "{edges} edges exceed the oracle cap of {cap}")
            }
        }
    }
}

impl core::error::Error for Error {}
