use std::collections::{BTreeSet, VecDeque};

use crate::graph::{Color, ColoredGraph};

/// Maximal connected monochromatic subgraphs and the graph obtained by
/// contracting each of them to a single node.
///
/// Block ids are assigned in order of each block's smallest vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    block_of: Vec<usize>,
    members: Vec<Vec<usize>>,
    colors: Vec<Color>,
    adjacency: Vec<Vec<usize>>,
}

impl BlockDecomposition {
    pub fn new(g: &ColoredGraph) -> Self {
        let n = g.vertex_count();
        let mut block_of = vec![usize::MAX; n];
        let mut members = Vec::new();
        let mut colors = Vec::new();
        for start in 0..n {
            if block_of[start] != usize::MAX {
                continue;
            }
            let id = members.len();
            let c = g.color(start);
            let mut list = vec![start];
            block_of[start] = id;
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &(w, _) in g.neighbors(v) {
                    if block_of[w] == usize::MAX && g.color(w) == c {
                        block_of[w] = id;
                        list.push(w);
                        queue.push_back(w);
                    }
                }
            }
            list.sort_unstable();
            members.push(list);
            colors.push(c);
        }
        let mut sets = vec![BTreeSet::new(); members.len()];
        for (u, v, _) in g.edges() {
            let (a, b) = (block_of[u], block_of[v]);
            if a != b {
                sets[a].insert(b);
                sets[b].insert(a);
            }
        }
        let adjacency = sets.into_iter().map(|s| s.into_iter().collect()).collect();
        Self { block_of, members, colors, adjacency }
    }

    pub fn block_count(&self) -> usize {
        self.members.len()
    }

    pub fn block_of(&self, v: usize) -> usize {
        self.block_of[v]
    }

    pub fn members(&self, b: usize) -> &[usize] {
        &self.members[b]
    }

    pub fn color(&self, b: usize) -> Color {
        self.colors[b]
    }

    /// Neighboring blocks in the contracted graph (the block tree on trees).
    pub fn neighbors(&self, b: usize) -> &[usize] {
        &self.adjacency[b]
    }

    pub fn block_edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Block-tree edges `(a, b)` with `a < b`.
    pub fn block_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (a, list) in self.adjacency.iter().enumerate() {
            out.extend(list.iter().filter(|&&b| a < b).map(|&b| (a, b)));
        }
        out
    }

    pub fn is_leaf(&self, b: usize) -> bool {
        self.adjacency[b].len() <= 1
    }

    pub fn leaf_blocks(&self) -> Vec<usize> {
        (0..self.block_count()).filter(|&b| self.is_leaf(b)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(colors: &[Color]) -> ColoredGraph {
        let edges: Vec<_> = (1..colors.len()).map(|i| (i - 1, i)).collect();
        ColoredGraph::unweighted(colors.to_vec(), &edges).unwrap()
    }

    #[test]
    fn two_blocks_on_a_path() {
        let b = BlockDecomposition::new(&path(&[0, 0, 1, 1]));
        assert_eq!(b.block_count(), 2);
        assert_eq!(b.members(0), &[0, 1]);
        assert_eq!(b.members(1), &[2, 3]);
        assert_eq!(b.block_edges(), vec![(0, 1)]);
    }

    #[test]
    fn monochromatic_graph_is_one_block() {
        let b = BlockDecomposition::new(&path(&[3, 3, 3, 3, 3]));
        assert_eq!(b.block_count(), 1);
        assert!(b.is_leaf(0));
    }

    #[test]
    fn alternating_path_has_leaf_end_blocks() {
        let b = BlockDecomposition::new(&path(&[0, 1, 0]));
        assert_eq!(b.block_count(), 3);
        assert_eq!(b.leaf_blocks(), vec![0, 2]);
        assert!(!b.is_leaf(1));
    }

    #[test]
    fn same_color_blocks_that_do_not_touch_stay_separate() {
        let b = BlockDecomposition::new(&path(&[0, 1, 1, 0, 0]));
        assert_eq!(b.block_count(), 3);
        assert_eq!(b.block_of(4), b.block_of(3));
        assert_ne!(b.block_of(0), b.block_of(3));
    }
}
