use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::blocks::BlockDecomposition;
use crate::distance::{distances_from, UNREACHABLE};
use crate::error::{Error, Result};
use crate::graph::{Color, ColoredGraph, Weight};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Consistent subset: some nearest member shares the vertex's color.
    Cs,
    /// Strict consistent subset: every nearest member shares it.
    Scs,
    /// Consistent spanning subset: consistent, and every block is hit.
    Css,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Cs => "cs",
            Mode::Scs => "scs",
            Mode::Css => "css",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ViolationKind {
    /// The vertex's nearest members do not carry its color as the mode demands.
    Color,
    /// The vertex's block contains no member of the subset.
    UnhitBlock,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub vertex: usize,
    pub kind: ViolationKind,
    /// Every member of the subset at minimum distance, ties included.
    pub nearest: Vec<usize>,
    pub colors_seen: Vec<Color>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub mode: Mode,
    pub holds: bool,
    pub violations: Vec<Violation>,
}

/// Distance to the subset and the colors found at that distance, per vertex.
struct NearestColors {
    dist: Vec<Weight>,
    colors: Vec<Vec<Color>>,
}

/// Multi-source shortest paths from `subset`, propagating the color sets of
/// nearest members along tight edges. Exact because weights are positive.
fn nearest_colors(g: &ColoredGraph, subset: &[usize]) -> NearestColors {
    let n = g.vertex_count();
    let mut dist = vec![UNREACHABLE; n];
    let mut heap = BinaryHeap::new();
    for &s in subset {
        dist[s] = 0;
        heap.push(Reverse((0, s)));
    }
    let mut order = Vec::with_capacity(n);
    let mut done = vec![false; n];
    while let Some(Reverse((d, v))) = heap.pop() {
        if done[v] || d > dist[v] {
            continue;
        }
        done[v] = true;
        order.push(v);
        for &(w, wt) in g.neighbors(v) {
            if d + wt < dist[w] {
                dist[w] = d + wt;
                heap.push(Reverse((d + wt, w)));
            }
        }
    }
    let mut colors: Vec<Vec<Color>> = vec![Vec::new(); n];
    for &v in &order {
        if dist[v] == 0 {
            colors[v] = vec![g.color(v)];
            continue;
        }
        let mut set = BTreeSet::new();
        for &(p, wt) in g.neighbors(v) {
            if dist[p] != UNREACHABLE && dist[p] + wt == dist[v] {
                set.extend(colors[p].iter().copied());
            }
        }
        colors[v] = set.into_iter().collect();
    }
    NearestColors { dist, colors }
}

fn check_subset(g: &ColoredGraph, subset: &[usize]) -> Result<()> {
    if subset.is_empty() {
        return Err(Error::EmptySubset);
    }
    match subset.iter().find(|&&v| v >= g.vertex_count()) {
        Some(&v) => Err(Error::InvalidVertex(v)),
        None => Ok(()),
    }
}

fn nearest_members(g: &ColoredGraph, v: usize, subset: &[usize], at: Weight) -> Vec<usize> {
    let row = distances_from(g, v);
    let mut out: Vec<usize> = subset.iter().copied().filter(|&s| row.dist[s] == at).collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// Checks `subset` against the given mode and reports every violating vertex.
pub fn verify(g: &ColoredGraph, subset: &[usize], mode: Mode) -> Result<VerifyReport> {
    check_subset(g, subset)?;
    let nc = nearest_colors(g, subset);
    let mut violations = Vec::new();
    for v in 0..g.vertex_count() {
        let seen = &nc.colors[v];
        let ok = match mode {
            Mode::Cs | Mode::Css => seen.contains(&g.color(v)),
            Mode::Scs => seen.as_slice() == [g.color(v)],
        };
        if !ok {
            violations.push(Violation {
                vertex: v,
                kind: ViolationKind::Color,
                nearest: nearest_members(g, v, subset, nc.dist[v]),
                colors_seen: seen.clone(),
            });
        }
    }
    if mode == Mode::Css {
        let blocks = BlockDecomposition::new(g);
        let chosen: BTreeSet<usize> = subset.iter().copied().collect();
        for b in 0..blocks.block_count() {
            if !blocks.members(b).iter().any(|v| chosen.contains(v)) {
                let v = blocks.members(b)[0];
                violations.push(Violation {
                    vertex: v,
                    kind: ViolationKind::UnhitBlock,
                    nearest: nearest_members(g, v, subset, nc.dist[v]),
                    colors_seen: nc.colors[v].clone(),
                });
            }
        }
    }
    Ok(VerifyReport { mode, holds: violations.is_empty(), violations })
}

pub fn verify_cs(g: &ColoredGraph, subset: &[usize]) -> Result<VerifyReport> {
    verify(g, subset, Mode::Cs)
}

pub fn verify_scs(g: &ColoredGraph, subset: &[usize]) -> Result<VerifyReport> {
    verify(g, subset, Mode::Scs)
}

pub fn verify_css(g: &ColoredGraph, subset: &[usize]) -> Result<VerifyReport> {
    verify(g, subset, Mode::Css)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(colors: &[Color]) -> ColoredGraph {
        let edges: Vec<_> = (1..colors.len()).map(|i| (i - 1, i)).collect();
        ColoredGraph::unweighted(colors.to_vec(), &edges).unwrap()
    }

    #[test]
    fn cs_examples() {
        let g = path(&[0, 1, 0]);
        assert!(verify_cs(&g, &[0, 1, 2]).unwrap().holds);
        let r = verify_cs(&g, &[0, 2]).unwrap();
        assert!(!r.holds);
        assert_eq!(r.violations.len(), 1);
        assert_eq!(r.violations[0].vertex, 1);
        assert_eq!(r.violations[0].nearest, vec![0, 2]);
        assert_eq!(r.violations[0].colors_seen, vec![0]);
        assert!(verify_cs(&path(&[0, 0, 1, 1]), &[1, 2]).unwrap().holds);
    }

    #[test]
    fn scs_examples() {
        assert!(verify_scs(&path(&[0, 1, 0]), &[0, 1, 2]).unwrap().holds);
        assert!(verify_scs(&path(&[0, 0, 1, 1]), &[0, 3]).unwrap().holds);
        let r = verify_scs(&path(&[0, 0, 1, 0, 0]), &[0, 4]).unwrap();
        assert!(!r.holds);
        assert_eq!(r.violations[0].vertex, 2);
        assert_eq!(r.violations[0].nearest, vec![0, 4]);
    }

    #[test]
    fn strictness_is_about_ties() {
        // vertex 1 sees 0 and 2 at distance 1: consistent but not strict
        let g = path(&[0, 0, 1]);
        assert!(verify_cs(&g, &[0, 2]).unwrap().holds);
        assert!(!verify_scs(&g, &[0, 2]).unwrap().holds);
    }

    #[test]
    fn css_examples() {
        assert!(verify_css(&path(&[0, 0, 1, 1]), &[1, 2]).unwrap().holds);
        assert!(verify_css(&path(&[2, 2, 2, 2]), &[3]).unwrap().holds);
        let r = verify_css(&path(&[0, 1, 0]), &[0, 1]).unwrap();
        assert!(!r.holds);
        assert!(r.violations.iter().any(|v| v.kind == ViolationKind::UnhitBlock && v.vertex == 2));
    }

    #[test]
    fn weighted_ties_follow_weighted_distance() {
        let g = ColoredGraph::new(vec![0, 0, 1], &[(0, 1, 1), (1, 2, 3)], true).unwrap();
        assert!(verify_scs(&g, &[1, 2]).unwrap().holds);
        let g = ColoredGraph::new(vec![0, 1, 1], &[(0, 1, 2), (1, 2, 2)], true).unwrap();
        assert!(!verify_scs(&g, &[0, 2]).unwrap().holds);
    }

    #[test]
    fn rejects_bad_subsets() {
        let g = path(&[0, 1]);
        assert_eq!(verify_cs(&g, &[]).unwrap_err(), Error::EmptySubset);
        assert_eq!(verify_cs(&g, &[5]).unwrap_err(), Error::InvalidVertex(5));
    }
}
