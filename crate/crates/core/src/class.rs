use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::graph::ColoredGraph;

/// The most specific recognized shape of a connected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphClass {
    /// Vertices in path order, starting from the end with the smaller id.
    Path { order: Vec<usize> },
    /// Vertices in cyclic order starting at vertex 0 toward its smaller neighbor.
    Cycle { order: Vec<usize> },
    /// A tree with exactly one vertex of degree at least three.
    Spider { center: usize },
    /// Skeleton vertices `s_1..s_k` in order and, for every skeleton vertex, its
    /// dangling tooth listed outward (possibly empty).
    Comb { skeleton: Vec<usize>, teeth: Vec<Vec<usize>> },
    Tree,
    General,
}

impl GraphClass {
    pub fn name(&self) -> &'static str {
        match self {
            GraphClass::Path { .. } => "path",
            GraphClass::Cycle { .. } => "cycle",
            GraphClass::Spider { .. } => "spider",
            GraphClass::Comb { .. } => "comb",
            GraphClass::Tree => "tree",
            GraphClass::General => "general",
        }
    }

    pub fn is_tree(&self) -> bool {
        !matches!(self, GraphClass::Cycle { .. } | GraphClass::General)
    }
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Recognizes the most specific class in the order
/// path, cycle, spider, comb, tree, general.
pub fn classify(g: &ColoredGraph) -> GraphClass {
    let n = g.vertex_count();
    if !g.is_tree() {
        if n >= 3 && g.edge_count() == n && (0..n).all(|v| g.degree(v) == 2) {
            return GraphClass::Cycle { order: walk_cycle(g) };
        }
        return GraphClass::General;
    }
    let high: Vec<usize> = (0..n).filter(|&v| g.degree(v) >= 3).collect();
    match high.len() {
        0 => {
            let start = (0..n).find(|&v| g.degree(v) <= 1).expect("a tree has a leaf");
            GraphClass::Path { order: walk_from(g, start, usize::MAX) }
        }
        1 => GraphClass::Spider { center: high[0] },
        _ => match comb_skeleton(g, &high) {
            Some((skeleton, teeth)) => GraphClass::Comb { skeleton, teeth },
            None => GraphClass::Tree,
        },
    }
}

/// Vertices of a path graph in order, starting from the end `start`.
fn walk_from(g: &ColoredGraph, start: usize, from: usize) -> Vec<usize> {
    let mut out = vec![start];
    let (mut prev, mut cur) = (from, start);
    while let Some(next) = g.neighbors(cur).iter().map(|&(w, _)| w).find(|&w| w != prev) {
        out.push(next);
        prev = cur;
        cur = next;
    }
    out
}

fn walk_cycle(g: &ColoredGraph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut order = vec![0];
    let (mut prev, mut cur) = (usize::MAX, 0);
    while order.len() < n {
        let next = g.neighbors(cur).iter().map(|&(w, _)| w).find(|&w| w != prev).unwrap();
        order.push(next);
        prev = cur;
        cur = next;
    }
    order
}

fn bfs(g: &ColoredGraph, s: usize) -> (Vec<usize>, Vec<usize>) {
    let n = g.vertex_count();
    let mut dist = vec![usize::MAX; n];
    let mut pred = vec![usize::MAX; n];
    dist[s] = 0;
    let mut queue = VecDeque::from([s]);
    while let Some(v) = queue.pop_front() {
        for &(w, _) in g.neighbors(v) {
            if dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                pred[w] = v;
                queue.push_back(w);
            }
        }
    }
    (dist, pred)
}

/// Vertices of a branch hanging off `root` through `first`, walked outward.
/// `None` if the branch is not a simple path.
fn dangling_path(g: &ColoredGraph, root: usize, first: usize) -> Option<Vec<usize>> {
    let mut out = vec![first];
    let (mut prev, mut cur) = (root, first);
    loop {
        match g.degree(cur) {
            1 => return Some(out),
            2 => {
                let next = g.neighbors(cur).iter().map(|&(w, _)| w).find(|&w| w != prev)?;
                out.push(next);
                prev = cur;
                cur = next;
            }
            _ => return None,
        }
    }
}

/// A comb has maximum degree three and all degree-3 vertices on one path.
/// The skeleton runs through them and is extended at each end along the
/// longer of the two free branches.
fn comb_skeleton(g: &ColoredGraph, high: &[usize]) -> Option<(Vec<usize>, Vec<Vec<usize>>)> {
    if high.iter().any(|&v| g.degree(v) > 3) {
        return None;
    }
    let farthest = |from: usize| {
        let (dist, _) = bfs(g, from);
        *high.iter().max_by_key(|&&v| (dist[v], std::cmp::Reverse(v))).unwrap()
    };
    let a = farthest(high[0]);
    let b = farthest(a);
    let (_, pred) = bfs(g, a);
    let mut core = vec![b];
    while *core.last().unwrap() != a {
        core.push(pred[*core.last().unwrap()]);
    }
    core.reverse();
    let on_core: BTreeSet<usize> = core.iter().copied().collect();
    if high.iter().any(|v| !on_core.contains(v)) {
        return None;
    }
    let extension = |end: usize, inner: usize| -> Option<(Vec<usize>, Option<Vec<usize>>)> {
        let mut branches = Vec::new();
        for &(w, _) in g.neighbors(end) {
            if w != inner {
                branches.push(dangling_path(g, end, w)?);
            }
        }
        branches.sort_by(|x, y| y.len().cmp(&x.len()).then(x[0].cmp(&y[0])));
        let mut it = branches.into_iter();
        let ext = it.next().unwrap_or_default();
        Some((ext, it.next()))
    };
    let (ext_a, tooth_a) = extension(a, core[1])?;
    let (ext_b, tooth_b) = extension(b, core[core.len() - 2])?;

    let mut skeleton: Vec<usize> = ext_a.iter().rev().copied().collect();
    skeleton.extend_from_slice(&core);
    skeleton.extend_from_slice(&ext_b);
    let on_skeleton: BTreeSet<usize> = skeleton.iter().copied().collect();
    let mut teeth = Vec::with_capacity(skeleton.len());
    for &s in &skeleton {
        let tooth = if s == a {
            tooth_a.clone().unwrap_or_default()
        } else if s == b {
            tooth_b.clone().unwrap_or_default()
        } else {
            let off: Vec<usize> = g
                .neighbors(s)
                .iter()
                .map(|&(w, _)| w)
                .filter(|w| !on_skeleton.contains(w))
                .collect();
            match off.as_slice() {
                [] => Vec::new(),
                [w] => dangling_path(g, s, *w)?,
                _ => return None,
            }
        };
        teeth.push(tooth);
    }
    let covered = skeleton.len() + teeth.iter().map(Vec::len).sum::<usize>();
    (covered == g.vertex_count()).then_some((skeleton, teeth))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> ColoredGraph {
        ColoredGraph::unweighted(vec![0; n], edges).unwrap()
    }

    #[test]
    fn recognizes_basic_shapes() {
        let p = graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]);
        assert_eq!(classify(&p), GraphClass::Path { order: vec![0, 1, 2, 3, 4] });
        let star = graph(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]);
        assert_eq!(classify(&star), GraphClass::Spider { center: 0 });
        let c4 = graph(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert_eq!(classify(&c4), GraphClass::Cycle { order: vec![0, 1, 2, 3] });
        let k4 = graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(classify(&k4), GraphClass::General);
    }

    #[test]
    fn single_vertex_is_a_path() {
        let g = graph(1, &[]);
        assert_eq!(classify(&g), GraphClass::Path { order: vec![0] });
    }

    #[test]
    fn path_order_starts_at_smaller_end() {
        let p = graph(4, &[(3, 1), (1, 0), (0, 2)]);
        assert_eq!(classify(&p), GraphClass::Path { order: vec![2, 0, 1, 3] });
    }

    #[test]
    fn comb_with_long_teeth() {
        // skeleton 0-1-2-3, teeth 1:{4..8}, 2:{9..13}
        let mut e = vec![(0, 1), (1, 2), (2, 3), (1, 4), (2, 9)];
        e.extend((4..8).map(|i| (i, i + 1)));
        e.extend((9..13).map(|i| (i, i + 1)));
        match classify(&graph(14, &e)) {
            GraphClass::Comb { skeleton, teeth } => {
                assert_eq!(skeleton.len() + teeth.iter().map(Vec::len).sum::<usize>(), 14);
                for w in skeleton.windows(2) {
                    assert!(e.contains(&(w[0], w[1])) || e.contains(&(w[1], w[0])));
                }
            }
            other => panic!("expected comb, got {other}"),
        }
    }

    #[test]
    fn non_collinear_branch_points_make_a_tree() {
        // three degree-3 vertices around a fourth; they are not collinear
        let e = [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (2, 6), (2, 7), (3, 8), (3, 9)];
        assert_eq!(classify(&graph(10, &e)), GraphClass::Tree);
    }

    #[test]
    fn degree_four_pair_is_a_tree() {
        let e = [(0, 1), (0, 2), (0, 3), (0, 4), (4, 5), (4, 6), (4, 7)];
        assert_eq!(classify(&graph(8, &e)), GraphClass::Tree);
    }
}
