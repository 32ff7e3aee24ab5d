//! Exhaustive solvers used as ground truth on small instances.
//!
//! Subsets are enumerated by increasing cardinality and lexicographically
//! within a cardinality, so the returned witness is the lexicographically
//! smallest optimum.

use std::collections::BTreeMap;

use crate::blocks::BlockDecomposition;
use crate::cnf::Formula;
use crate::distance::DistanceOracle;
use crate::error::{Error, Result};
use crate::graph::{ColoredGraph, Weight};
use crate::result::{Algorithm, Problem, SolveResult};

pub const DEFAULT_CAP: usize = 22;
pub const MAX2SAT_VAR_CAP: usize = 24;

/// Calls `visit` on every `k`-subset of `0..n` in lexicographic order until it
/// returns `true`; returns the subset that stopped the walk.
fn first_combination(n: usize, k: usize, mut visit: impl FnMut(&[usize]) -> bool) -> Option<Vec<usize>> {
    if k > n {
        return None;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if visit(&idx) {
            return Some(idx);
        }
        let mut i = k;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            if idx[i] < n - k + i {
                break;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Precomputed data for fast subset checks on graphs with at most 32 vertices.
struct SubsetChecker {
    n: usize,
    dist: Vec<Weight>,
    color_bit: Vec<u32>,
    block_masks: Vec<u32>,
    color_count: usize,
}

impl SubsetChecker {
    fn new(g: &ColoredGraph) -> Self {
        let n = g.vertex_count();
        let d = DistanceOracle::new(g);
        let mut dist = Vec::with_capacity(n * n);
        for u in 0..n {
            dist.extend((0..n).map(|v| d.d(u, v)));
        }
        let mut dense = BTreeMap::new();
        for &c in g.colors() {
            let next = dense.len();
            dense.entry(c).or_insert(next);
        }
        let color_bit = g.colors().iter().map(|c| 1u32 << dense[c]).collect();
        let blocks = BlockDecomposition::new(g);
        let block_masks = (0..blocks.block_count())
            .map(|b| blocks.members(b).iter().fold(0u32, |m, &v| m | (1 << v)))
            .collect();
        Self { n, dist, color_bit, block_masks, color_count: dense.len() }
    }

    fn hits_every_block(&self, subset: &[usize]) -> bool {
        let mask = subset.iter().fold(0u32, |m, &v| m | (1 << v));
        self.block_masks.iter().all(|&b| b & mask != 0)
    }

    fn holds(&self, subset: &[usize], strict: bool) -> bool {
        (0..self.n).all(|v| {
            let row = &self.dist[v * self.n..(v + 1) * self.n];
            let mut best = Weight::MAX;
            let mut seen = 0u32;
            for &s in subset {
                let d = row[s];
                if d < best {
                    best = d;
                    seen = self.color_bit[s];
                } else if d == best {
                    seen |= self.color_bit[s];
                }
            }
            if strict {
                seen == self.color_bit[v]
            } else {
                seen & self.color_bit[v] != 0
            }
        })
    }
}

fn check_cap(g: &ColoredGraph, cap: usize) -> Result<()> {
    let n = g.vertex_count();
    if n > cap.min(32) {
        return Err(Error::CapExceeded { n, cap: cap.min(32) });
    }
    Ok(())
}

/// Minimum-cardinality subset for `problem` (MCS, MSCS or MCSS) by exhaustive
/// search. Strict and spanning variants start at the block-count lower bound.
pub fn brute_solve(g: &ColoredGraph, problem: Problem, cap: usize) -> Result<SolveResult> {
    check_cap(g, cap)?;
    let checker = SubsetChecker::new(g);
    let n = g.vertex_count();
    let lower = match problem {
        Problem::Mcs => checker.color_count,
        Problem::Mscs | Problem::Mcss => checker.color_count.max(checker.block_masks.len()),
        Problem::DominatingSet => return brute_dominating_capped(g, cap),
    };
    for k in lower.max(1)..=n {
        let found = first_combination(n, k, |s| match problem {
            Problem::Mcs => checker.holds(s, false),
            Problem::Mscs => checker.hits_every_block(s) && checker.holds(s, true),
            _ => checker.hits_every_block(s) && checker.holds(s, false),
        });
        if let Some(w) = found {
            return Ok(SolveResult::new(w, problem, Algorithm::BruteForce));
        }
    }
    unreachable!("the full vertex set is always consistent")
}

pub fn brute_mcs(g: &ColoredGraph) -> Result<SolveResult> {
    brute_solve(g, Problem::Mcs, DEFAULT_CAP)
}

pub fn brute_mscs(g: &ColoredGraph) -> Result<SolveResult> {
    brute_solve(g, Problem::Mscs, DEFAULT_CAP)
}

pub fn brute_mcss(g: &ColoredGraph) -> Result<SolveResult> {
    brute_solve(g, Problem::Mcss, DEFAULT_CAP)
}

/// Minimum dominating set (colors are ignored).
pub fn brute_dominating(g: &ColoredGraph) -> Result<SolveResult> {
    brute_dominating_capped(g, DEFAULT_CAP)
}

pub fn brute_dominating_capped(g: &ColoredGraph, cap: usize) -> Result<SolveResult> {
    check_cap(g, cap)?;
    let n = g.vertex_count();
    let closed: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(1u32 << v, |m, &(w, _)| m | (1 << w)))
        .collect();
    let full = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    for k in 1..=n {
        let found = first_combination(n, k, |s| s.iter().fold(0u32, |m, &v| m | closed[v]) == full);
        if let Some(w) = found {
            return Ok(SolveResult::new(w, Problem::DominatingSet, Algorithm::BruteForce));
        }
    }
    unreachable!("the full vertex set dominates")
}

/// Maximum number of simultaneously satisfiable clauses and the first
/// maximizing assignment in binary counting order (variable 0 is the low bit).
pub fn brute_max2sat(formula: &Formula) -> Result<(usize, Vec<bool>)> {
    let n = formula.num_vars();
    if n > MAX2SAT_VAR_CAP {
        return Err(Error::CapExceeded { n, cap: MAX2SAT_VAR_CAP });
    }
    let mut best = (0, vec![false; n]);
    let mut found = false;
    for mask in 0u64..(1u64 << n) {
        let assignment: Vec<bool> = (0..n).map(|i| mask >> i & 1 == 1).collect();
        let k = formula.satisfied_count(&assignment);
        if !found || k > best.0 {
            best = (k, assignment);
            found = true;
            if k == formula.clauses().len() {
                break;
            }
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cnf::Literal;
    use crate::consistency::{verify_cs, verify_css, verify_scs};

    fn path(colors: &[u32]) -> ColoredGraph {
        let edges: Vec<_> = (1..colors.len()).map(|i| (i - 1, i)).collect();
        ColoredGraph::unweighted(colors.to_vec(), &edges).unwrap()
    }

    fn cycle(n: usize) -> ColoredGraph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        ColoredGraph::unweighted(vec![0; n], &edges).unwrap()
    }

    #[test]
    fn combinations_are_lexicographic() {
        let mut seen = Vec::new();
        first_combination(4, 2, |s| {
            seen.push(s.to_vec());
            false
        });
        assert_eq!(seen, vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
    }

    #[test]
    fn small_mscs_values() {
        assert_eq!(brute_mscs(&path(&[0; 5])).unwrap().size, 1);
        assert_eq!(brute_mscs(&path(&[0, 0, 1, 1])).unwrap().size, 2);
        assert_eq!(brute_mscs(&path(&[0, 1, 0])).unwrap().size, 3);
        assert_eq!(brute_mcs(&path(&[0, 1, 0])).unwrap().size, 3);
    }

    #[test]
    fn witnesses_pass_their_verifier() {
        let g = path(&[0, 0, 1, 0, 1, 1, 0]);
        assert!(verify_cs(&g, &brute_mcs(&g).unwrap().witness).unwrap().holds);
        assert!(verify_scs(&g, &brute_mscs(&g).unwrap().witness).unwrap().holds);
        assert!(verify_css(&g, &brute_mcss(&g).unwrap().witness).unwrap().holds);
    }

    #[test]
    fn dominating_values() {
        let k3 = ColoredGraph::unweighted(vec![0; 3], &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(brute_dominating(&k3).unwrap().size, 1);
        assert_eq!(brute_dominating(&cycle(4)).unwrap().size, 2);
        let star = ColoredGraph::unweighted(vec![0; 5], &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert_eq!(brute_dominating(&star).unwrap().witness, vec![0]);
    }

    #[test]
    fn cap_is_enforced() {
        let g = path(&[0; 23]);
        assert_eq!(brute_mscs(&g).unwrap_err(), Error::CapExceeded { n: 23, cap: 22 });
        assert!(brute_solve(&g, Problem::Mscs, 30).is_ok());
    }

    #[test]
    fn max2sat_values() {
        let one = Formula::new(2, vec![[Literal::pos(0), Literal::pos(1)]]).unwrap();
        assert_eq!(brute_max2sat(&one).unwrap().0, 1);
        let two = Formula::new(
            2,
            vec![[Literal::pos(0), Literal::pos(1)], [Literal::neg(0), Literal::neg(1)]],
        )
        .unwrap();
        let (k, a) = brute_max2sat(&two).unwrap();
        assert_eq!(k, 2);
        assert_eq!(two.satisfied_count(&a), 2);
        let fig = Formula::new(
            3,
            vec![
                [Literal::pos(0), Literal::pos(1)],
                [Literal::pos(0), Literal::neg(2)],
                [Literal::neg(1), Literal::neg(2)],
            ],
        )
        .unwrap();
        assert_eq!(brute_max2sat(&fig).unwrap().0, 3);
    }
}
