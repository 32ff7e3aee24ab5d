//! The block-tree 2-approximation for MSCS on trees.

use std::collections::BTreeSet;

use crate::blocks::BlockDecomposition;
use crate::error::{Error, Result};
use crate::graph::ColoredGraph;
use crate::result::{Algorithm, Problem, SolveResult};

/// A 2-approximate strict consistent subset together with how it was built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ApproxResult {
    pub result: SolveResult,
    pub block_count: usize,
    /// Endpoints taken over all block-tree edges, counted with multiplicity:
    /// `2(b - 1)`. The set itself is smaller when edges share an endpoint.
    pub endpoint_picks: usize,
}

/// For every pair of adjacent blocks, takes both endpoints of the tree edge
/// joining them. Each vertex is then nearest to a chosen vertex of its own
/// block, and since any solution hits every block, the result has at most
/// `2b - 2 <= 2 OPT - 2` vertices.
pub fn two_approx_mscs_tree(g: &ColoredGraph) -> Result<ApproxResult> {
    if !g.is_tree() {
        return Err(Error::WrongClass("tree"));
    }
    let blocks = BlockDecomposition::new(g);
    let b = blocks.block_count();
    if b == 1 {
        let result = SolveResult::new(vec![0], Problem::Mscs, Algorithm::TwoApprox);
        return Ok(ApproxResult { result, block_count: 1, endpoint_picks: 0 });
    }
    let mut chosen = BTreeSet::new();
    for (u, v, _) in g.edges() {
        if blocks.block_of(u) != blocks.block_of(v) {
            chosen.insert(u);
            chosen.insert(v);
        }
    }
    let result = SolveResult::new(chosen.into_iter().collect(), Problem::Mscs, Algorithm::TwoApprox);
    Ok(ApproxResult { result, block_count: b, endpoint_picks: 2 * (b - 1) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::consistency::verify_scs;

    fn path(colors: &[u32]) -> ColoredGraph {
        let edges: Vec<_> = (1..colors.len()).map(|i| (i - 1, i)).collect();
        ColoredGraph::unweighted(colors.to_vec(), &edges).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(two_approx_mscs_tree(&path(&[3; 5])).unwrap().result.size, 1);
        let r = two_approx_mscs_tree(&path(&[0, 0, 1, 1])).unwrap();
        assert_eq!(r.result.witness, vec![1, 2]);
        let r = two_approx_mscs_tree(&path(&[0, 0, 0, 1, 1, 1, 2, 2, 2])).unwrap();
        assert_eq!(r.result.size, 4);
        assert_eq!(r.endpoint_picks, 4);
    }

    #[test]
    fn shared_endpoints_shrink_the_set() {
        let star = ColoredGraph::unweighted(vec![0, 1, 1, 1], &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let r = two_approx_mscs_tree(&star).unwrap();
        assert_eq!(r.result.size, 4);
        assert_eq!(r.endpoint_picks, 6);
        assert!(verify_scs(&star, &r.result.witness).unwrap().holds);
    }

    #[test]
    fn rejects_cycles() {
        let c3 = ColoredGraph::unweighted(vec![0, 1, 2], &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(two_approx_mscs_tree(&c3).unwrap_err(), Error::WrongClass("tree"));
    }
}
