use std::cmp::Reverse;
use std::collections::{BinaryHeap, VecDeque};

use crate::error::{Error, Result};
use crate::graph::{ColoredGraph, Weight};

pub const UNREACHABLE: Weight = Weight::MAX;

/// Single-source shortest paths: distances plus predecessor links.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShortestPaths {
    pub source: usize,
    pub dist: Vec<Weight>,
    /// `pred[v]` is the vertex before `v` on the chosen shortest path from the
    /// source; `None` for the source itself.
    pub pred: Vec<Option<usize>>,
}

impl ShortestPaths {
    /// Vertices of the shortest path from the source to `target`, inclusive.
    pub fn path_to(&self, target: usize) -> Vec<usize> {
        let mut out = vec![target];
        let mut cur = target;
        while let Some(p) = self.pred[cur] {
            out.push(p);
            cur = p;
        }
        out.reverse();
        out
    }
}

/// Exact single-source distances: BFS hop counts on unweighted graphs,
/// Dijkstra otherwise.
pub fn distances_from(g: &ColoredGraph, source: usize) -> ShortestPaths {
    let n = g.vertex_count();
    assert!(source < n, "source {source} out of range");
    let mut dist = vec![UNREACHABLE; n];
    let mut pred = vec![None; n];
    dist[source] = 0;
    if !g.is_weighted() {
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            for &(w, _) in g.neighbors(v) {
                if dist[w] == UNREACHABLE {
                    dist[w] = dist[v] + 1;
                    pred[w] = Some(v);
                    queue.push_back(w);
                }
            }
        }
    } else {
        let mut heap = BinaryHeap::from([Reverse((0, source))]);
        while let Some(Reverse((d, v))) = heap.pop() {
            if d > dist[v] {
                continue;
            }
            for &(w, wt) in g.neighbors(v) {
                let nd = d + wt;
                if nd < dist[w] {
                    dist[w] = nd;
                    pred[w] = Some(v);
                    heap.push(Reverse((nd, w)));
                }
            }
        }
    }
    ShortestPaths { source, dist, pred }
}

/// All-pairs distances, one [`ShortestPaths`] row per source.
#[derive(Debug, Clone)]
pub struct DistanceOracle {
    n: usize,
    dist: Vec<Weight>,
    rows: Vec<ShortestPaths>,
}

impl DistanceOracle {
    pub fn new(g: &ColoredGraph) -> Self {
        let n = g.vertex_count();
        let rows: Vec<_> = (0..n).map(|s| distances_from(g, s)).collect();
        let mut dist = Vec::with_capacity(n * n);
        for r in &rows {
            dist.extend_from_slice(&r.dist);
        }
        Self { n, dist, rows }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn d(&self, u: usize, v: usize) -> Weight {
        self.dist[u * self.n + v]
    }

    pub fn row(&self, s: usize) -> &ShortestPaths {
        &self.rows[s]
    }

    /// `d(v, set) = min over members`.
    pub fn d_to_set(&self, v: usize, set: &[usize]) -> Option<Weight> {
        set.iter().map(|&s| self.d(v, s)).min()
    }

    pub fn path(&self, u: usize, v: usize) -> Vec<usize> {
        self.rows[u].path_to(v)
    }
}

/// All members of `set` at minimum distance from `v`, sorted. Ties are kept;
/// if `v` is itself in `set` the answer is `{v}`.
pub fn nearest_in_set(d: &DistanceOracle, v: usize, set: &[usize]) -> Result<Vec<usize>> {
    let best = d.d_to_set(v, set).ok_or(Error::EmptySubset)?;
    let mut out: Vec<usize> = set.iter().copied().filter(|&s| d.d(v, s) == best).collect();
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> ColoredGraph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        ColoredGraph::unweighted(vec![0; n], &edges).unwrap()
    }

    #[test]
    fn bfs_on_line() {
        assert_eq!(distances_from(&path(3), 0).dist, vec![0, 1, 2]);
    }

    #[test]
    fn dijkstra_prefers_two_light_edges() {
        let g = ColoredGraph::new(vec![0, 0, 0], &[(0, 1, 2), (1, 2, 2), (0, 2, 5)], true).unwrap();
        let sp = distances_from(&g, 0);
        assert_eq!(sp.dist, vec![0, 2, 4]);
        assert_eq!(sp.path_to(2), vec![0, 1, 2]);
    }

    #[test]
    fn nearest_keeps_ties() {
        let d = DistanceOracle::new(&path(3));
        assert_eq!(nearest_in_set(&d, 1, &[0, 2]).unwrap(), vec![0, 2]);
        assert_eq!(nearest_in_set(&d, 2, &[0, 2]).unwrap(), vec![2]);
        let d4 = DistanceOracle::new(&path(4));
        assert_eq!(nearest_in_set(&d4, 0, &[2, 3]).unwrap(), vec![2]);
        assert_eq!(nearest_in_set(&d4, 0, &[]), Err(Error::EmptySubset));
    }
}
