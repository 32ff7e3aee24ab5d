use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Color = u32;
pub type Weight = u64;

/// Largest color id accepted by the loader.
pub const MAX_COLOR: i64 = 65_535;

/// An undirected, connected, vertex-colored graph with positive integer edge
/// weights. Unweighted graphs store weight 1 on every edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredGraph {
    adjacency: Vec<Vec<(usize, Weight)>>,
    colors: Vec<Color>,
    weighted: bool,
}

/// On-disk instance document.
#[derive(Debug, Clone, Serialize, Deserialize)]
struct InstanceFile {
    n: i64,
    colors: Vec<i64>,
    #[serde(default)]
    edges: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    weighted: Option<bool>,
}

impl ColoredGraph {
    /// Builds and validates a graph. Edges are `(u, v, w)`; the graph must be
    /// connected, loop-free and free of parallel edges.
    pub fn new(colors: Vec<Color>, edges: &[(usize, usize, Weight)], weighted: bool) -> Result<Self> {
        let g = Self::new_unchecked(colors, edges, weighted)?;
        if !g.is_connected() {
            return Err(Error::Validation("disconnected".into()));
        }
        Ok(g)
    }

    /// Unweighted convenience constructor.
    pub fn unweighted(colors: Vec<Color>, edges: &[(usize, usize)]) -> Result<Self> {
        let e: Vec<_> = edges.iter().map(|&(u, v)| (u, v, 1)).collect();
        Self::new(colors, &e, false)
    }

    /// Like [`ColoredGraph::new`] but without the connectivity check.
    pub fn new_unchecked(colors: Vec<Color>, edges: &[(usize, usize, Weight)], weighted: bool) -> Result<Self> {
        let n = colors.len();
        if n == 0 {
            return Err(Error::Validation("graph has no vertices".into()));
        }
        if let Some(&c) = colors.iter().find(|&&c| c as i64 > MAX_COLOR) {
            return Err(Error::Validation(format!("color index {c} out of range")));
        }
        let mut adjacency = vec![Vec::new(); n];
        let mut seen = BTreeSet::new();
        for &(u, v, w) in edges {
            if u >= n || v >= n {
                return Err(Error::Validation(format!("edge ({u}, {v}) has an endpoint out of range")));
            }
            if u == v {
                return Err(Error::Validation(format!("self-loop at vertex {u}")));
            }
            if w == 0 {
                return Err(Error::Validation(format!("non-positive weight on edge ({u}, {v})")));
            }
            if !weighted && w != 1 {
                return Err(Error::Validation(format!("unweighted graph has weight {w} on edge ({u}, {v})")));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::Validation(format!("parallel edge ({u}, {v})")));
            }
            adjacency[u].push((v, w));
            adjacency[v].push((u, w));
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Self { adjacency, colors, weighted })
    }

    /// Parses and validates an instance document.
    pub fn load(bytes: &[u8]) -> Result<Self> {
        let file: InstanceFile =
            serde_json::from_slice(bytes).map_err(|e| Error::Parse(e.to_string()))?;
        if file.n < 0 {
            return Err(Error::Validation("negative vertex count".into()));
        }
        let n = file.n as usize;
        if file.colors.len() != n {
            return Err(Error::Validation(format!(
                "expected {n} colors, found {}",
                file.colors.len()
            )));
        }
        let mut colors = Vec::with_capacity(n);
        for &c in &file.colors {
            if !(0..=MAX_COLOR).contains(&c) {
                return Err(Error::Validation(format!("color index {c} out of range")));
            }
            colors.push(c as Color);
        }
        let mut edges = Vec::with_capacity(file.edges.len());
        let mut any_weight = false;
        for e in &file.edges {
            let (u, v, w) = match e.as_slice() {
                [u, v] => (*u, *v, 1),
                [u, v, w] => {
                    any_weight = true;
                    (*u, *v, *w)
                }
                _ => return Err(Error::Parse(format!("edge {e:?} must have 2 or 3 entries"))),
            };
            if u < 0 || v < 0 || u >= file.n || v >= file.n {
                return Err(Error::Validation(format!("edge ({u}, {v}) has an endpoint out of range")));
            }
            if w <= 0 {
                return Err(Error::Validation(format!("non-positive weight on edge ({u}, {v})")));
            }
            edges.push((u as usize, v as usize, w as Weight));
        }
        let weighted = file.weighted.unwrap_or(any_weight || edges.iter().any(|e| e.2 != 1));
        Self::new(colors, &edges, weighted)
    }

    /// Canonical serialization: edges as `[u, v]` (or `[u, v, w]` when
    /// weighted) with `u < v`, sorted lexicographically.
    pub fn to_json(&self) -> String {
        let edges: Vec<Vec<i64>> = self
            .edges()
            .into_iter()
            .map(|(u, v, w)| {
                if self.weighted {
                    vec![u as i64, v as i64, w as i64]
                } else {
                    vec![u as i64, v as i64]
                }
            })
            .collect();
        let file = InstanceFile {
            n: self.vertex_count() as i64,
            colors: self.colors.iter().map(|&c| c as i64).collect(),
            edges,
            weighted: Some(self.weighted),
        };
        let mut s = serde_json::to_string(&file).expect("instance serializes");
        s.push('\n');
        s
    }

    pub fn vertex_count(&self) -> usize {
        self.colors.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn is_weighted(&self) -> bool {
        self.weighted
    }

    pub fn color(&self, v: usize) -> Color {
        self.colors[v]
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    /// Neighbors of `v` with edge weights, sorted by neighbor id.
    pub fn neighbors(&self, v: usize) -> &[(usize, Weight)] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search_by_key(&v, |&(x, _)| x).is_ok()
    }

    /// Edges `(u, v, w)` with `u < v`, lexicographically sorted.
    pub fn edges(&self) -> Vec<(usize, usize, Weight)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, list) in self.adjacency.iter().enumerate() {
            for &(v, w) in list {
                if u < v {
                    out.push((u, v, w));
                }
            }
        }
        out
    }

    pub fn is_monochromatic(&self) -> bool {
        self.colors.iter().all(|&c| c == self.colors[0])
    }

    pub fn color_count(&self) -> usize {
        self.colors.iter().collect::<BTreeSet<_>>().len()
    }

    pub fn is_tree(&self) -> bool {
        self.edge_count() + 1 == self.vertex_count() && self.is_connected()
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for &(w, _) in &self.adjacency[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == n
    }

    /// Returns a copy with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        let n = self.vertex_count();
        if perm.len() != n {
            return Err(Error::InvalidParameter("permutation length mismatch".into()));
        }
        let mut colors = vec![0; n];
        for v in 0..n {
            colors[perm[v]] = self.colors[v];
        }
        let edges: Vec<_> = self.edges().into_iter().map(|(u, v, w)| (perm[u], perm[v], w)).collect();
        Self::new(colors, &edges, self.weighted)
    }

    /// Same graph with different colors.
    pub fn recolored(&self, colors: Vec<Color>) -> Result<Self> {
        if colors.len() != self.vertex_count() {
            return Err(Error::InvalidParameter("color vector length mismatch".into()));
        }
        Self::new(colors, &self.edges(), self.weighted)
    }
}
