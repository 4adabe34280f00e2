//! Enumeration of projective spanning arborescences.
//!
//! Vertices of a digraph are laid out on a line in index order. Two arcs
//! cross when their spans properly interleave; a spanning arborescence is
//! projective when no two of its arcs cross. The crate provides:
//!
//! * [`conflict`]: the crossing relation, the conflict graph and the
//!   lexicographic arc order;
//! * [`mis`]: incremental enumeration of all maximal non-crossing arc sets;
//! * [`count`]: exact arborescence counting with the directed matrix-tree
//!   theorem, generic over the scalar ring;
//! * [`growth`]: layer-by-layer growth of rooted pre-trees pruned by a
//!   determinant extendability test;
//! * [`oracle`]: exponential brute-force references used for cross-checking.

pub mod arcset;
pub mod cli;
pub mod conflict;
pub mod count;
pub mod digraph;
mod error;
pub mod growth;
pub mod mis;
pub mod oracle;
pub mod scalar;

pub use arcset::ArcSet;
pub use conflict::{build_conflict_graph, edges_conflict, ConflictGraph};
pub use count::{count_arborescences, has_arborescence, in_degree_laplacian, InDegreeLaplacian};
pub use digraph::{Arc, Digraph, Span, VertexId};
pub use error::{Error, Result};
pub use growth::{enumerate_projective_arborescences, PreTree, Strategy};
pub use mis::enumerate_maximal_projective_subgraphs;
pub use scalar::ExactScalar;

/// Exact arborescence count.
pub type Count = num_bigint::BigUint;
/// Arbitrary-precision integer used for cofactor evaluation.
pub type BigInt = num_bigint::BigInt;
/// Exact rationals, usable wherever an [`ExactScalar`] is expected.
pub type Rational = num_rational::BigRational;
/// In-degree Laplacian over arbitrary-precision integers.
pub type Laplacian = InDegreeLaplacian<BigInt>;
/// In-degree Laplacian over machine integers (overflow is checked).
pub type LaplacianI64 = InDegreeLaplacian<i64>;
