use std::fmt;

use serde::{Deserialize, Serialize};

/// Which subset problem was solved.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Problem {
    Mcs,
    Mscs,
    Mcss,
    DominatingSet,
}

/// The routine that produced a solution.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Algorithm {
    BruteForce,
    TreeDp,
    TreeDpWeighted,
    PathOverlay,
    CycleOverlay,
    Spider,
    CombDp,
    TwoApprox,
}

impl fmt::Display for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Problem::Mcs => "mcs",
            Problem::Mscs => "mscs",
            Problem::Mcss => "mcss",
            Problem::DominatingSet => "dominating-set",
        })
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = serde_json::to_value(self).expect("algorithm serializes");
        f.write_str(s.as_str().unwrap_or("?"))
    }
}

/// A solution: the chosen vertices (sorted, distinct) and how they were found.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveResult {
    pub size: usize,
    pub witness: Vec<usize>,
    pub problem: Problem,
    pub algorithm: Algorithm,
}

impl SolveResult {
    pub fn new(mut witness: Vec<usize>, problem: Problem, algorithm: Algorithm) -> Self {
        witness.sort_unstable();
        witness.dedup();
        Self { size: witness.len(), witness, problem, algorithm }
    }
}
