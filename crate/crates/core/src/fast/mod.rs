//! Faster exact MSCS solvers for paths, cycles, spiders and combs.
//!
//! Paths, cycles and spiders reduce to constrained problems on a line of
//! colored positions, solved by a shortest path in an acyclic overlay graph
//! (see [`line`]). Combs reuse the tree dynamic program with constant-time
//! constrained queries backed by precomputed tables.

pub mod comb;
pub mod cycle;
pub mod line;
pub mod path;
pub mod spider;

pub use comb::{solve_mscs_comb, CombTables};
pub use cycle::solve_mscs_cycle;
pub use line::{path_valid_pair, solve_line, LineConstraints, OverlayGraph};
pub use path::solve_mscs_path;
pub use spider::solve_mscs_spider;

use crate::error::{Error, Result};
use crate::graph::ColoredGraph;

fn require_unweighted(g: &ColoredGraph, solver: &str) -> Result<()> {
    if g.is_weighted() {
        return Err(Error::Validation(format!("the {solver} solver takes unweighted graphs")));
    }
    Ok(())
}
