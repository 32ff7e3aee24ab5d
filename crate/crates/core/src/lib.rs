//! Minimum consistent subsets and minimum strict consistent subsets of
//! vertex-colored graphs.
//!
//! The crate bundles:
//!
//! * a colored-graph core (distances, nearest-neighbor sets, blocks, class
//!   recognition),
//! * verifiers for consistent, strict consistent and consistent spanning
//!   subsets,
//! * exhaustive oracles for small instances,
//! * an exact dynamic program for (weighted) trees, plus faster exact solvers
//!   for paths, cycles, spiders and combs,
//! * the block-tree 2-approximation on trees,
//! * generators for three hardness reductions and for random instances.

pub mod approx;
pub mod blocks;
pub mod class;
pub mod cli;
pub mod cnf;
pub mod consistency;
pub mod distance;
pub mod error;
pub mod fast;
pub mod generate;
pub mod graph;
pub mod oracle;
pub mod reductions;
pub mod result;
pub mod tree;

pub use blocks::BlockDecomposition;
pub use class::GraphClass;
pub use consistency::{verify_cs, verify_css, verify_scs, Mode, VerifyReport};
pub use distance::{DistanceOracle, ShortestPaths};
pub use error::{Error, Result};
pub use graph::{Color, ColoredGraph, Weight};
pub use result::{Algorithm, Problem, SolveResult};
