//! Ordered Ramsey numbers at desk scale.
//!
//! The crate is organised around a small data model ([`OrderedGraph`],
//! [`EdgeColoring`], [`Embedding`]) and a handful of subsystems built on it:
//!
//! * [`containment`] and [`stats`]: ordered subgraph search and the
//!   order-sensitive graph parameters (interval chromatic number, degeneracy,
//!   bandwidth, cover number).
//! * [`generators`]: paths, path powers, multipartite graphs, random,
//!   bit-reversal and jumbled matchings, `J_k`, tight paths and the
//!   stepping-up triple systems.
//! * [`constructions`]: explicit lower-bound colorings (monotone-path
//!   colorings, blow-ups, recursive and random blow-ups, spread orderings).
//! * [`embedders`]: constructive upper-bound procedures returning a verified
//!   red or blue witness, or a certified sparse family of vertex sets.
//! * [`hypergraph`]: triple colorings, cap/cup colorings, the Erdős–Rado
//!   extraction and a small exact 3-uniform search.
//! * [`lll`]: Moser–Tardos resampling for the blue-triangle-free colorings.
//! * [`solver`]: exact `r_<` search with certificates, a brute-force oracle
//!   and DIMACS export.
//! * [`experiments`]: Monte Carlo and discrepancy studies.
//!
//! Vertices are 1-indexed everywhere. Colors are `0..q`; in two-color
//! settings color `0` is red and color `1` is blue. Logarithms are base 2.

pub mod bitset;
pub mod coloring;
pub mod constructions;
pub mod containment;
pub mod embedders;
pub mod embedding;
pub mod error;
pub mod experiments;
pub mod generators;
pub mod graph;
pub mod hypergraph;
pub mod lll;
pub mod rational;
pub mod solver;
pub mod stats;

pub use coloring::EdgeColoring;
pub use embedding::Embedding;
pub use error::{Error, Result};
pub use graph::OrderedGraph;

/// Red in every two-color routine.
pub const RED: u8 = 0;
/// Blue in every two-color routine.
pub const BLUE: u8 = 1;
