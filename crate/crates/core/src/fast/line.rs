//! Strict consistent subsets of a line of colored positions.
//!
//! On a path every block needs one or two chosen positions, and consecutive
//! choices either share a block or straddle a block boundary. A choice `i`
//! left of the boundary between positions `a` and `a + 1` pairs with exactly
//! one position on the right, `k = 2a + 1 - i`: the midpoint then falls
//! between the two blocks, so each side is covered by its own color.
//!
//! The overlay graph makes this a shortest-path problem on a DAG. Node `p_t`
//! stands for "`t` is chosen". Node `c_t` stands for "some earlier position of
//! this block was chosen and another choice at `t` or later is still due".
//! Arcs:
//!
//! * `p_i -> p_k` (weight 0) for each valid pair across a boundary,
//! * `p_i -> c_{i+1}` (weight 1) opening a second choice in the block,
//! * `c_t -> c_{t+1}` and `c_t -> p_t` (weight 0) walking to it,
//! * `s -> p_t` for admissible first choices and `p_t -> t` for admissible
//!   last ones.
//!
//! Every block pays one choice up front, so the solution size is the block
//! count plus the path weight.

use crate::graph::Color;

/// Extra requirements on a line solution.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct LineConstraints {
    /// Position 0 must be chosen.
    pub forced_start: bool,
    /// The last position must be chosen.
    pub forced_end: bool,
    /// With `forced_start`, positions `1..min_second` may not be chosen.
    pub min_second: usize,
}

impl LineConstraints {
    pub fn forced_start(min_second: usize) -> Self {
        Self { forced_start: true, forced_end: false, min_second }
    }
}

/// Maximal runs of equal color as half-open position ranges.
pub fn line_blocks(colors: &[Color]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut start = 0;
    for i in 1..=colors.len() {
        if i == colors.len() || colors[i] != colors[i - 1] {
            out.push((start, i));
            start = i;
        }
    }
    out
}

/// The position in the next block that forms a valid pair with `i`, if any.
pub fn path_valid_pair(colors: &[Color], i: usize) -> Option<usize> {
    let blocks = line_blocks(colors);
    let j = blocks.iter().position(|&(lo, hi)| lo <= i && i < hi)?;
    let &(lo, hi) = blocks.get(j + 1)?;
    let a = lo - 1;
    let k = 2 * a + 1 - i;
    (k < hi).then_some(k)
}

const SOURCE: usize = 0;

#[inline]
fn chain(t: usize) -> usize {
    1 + 2 * t
}

#[inline]
fn port(t: usize) -> usize {
    2 + 2 * t
}

/// The overlay DAG of one constrained line instance.
#[derive(Debug, Clone)]
pub struct OverlayGraph {
    len: usize,
    block_count: usize,
    arcs: Vec<Vec<(usize, u32)>>,
    pub type1_arcs: usize,
    pub type2_arcs: usize,
    pub chain_arcs: usize,
}

impl OverlayGraph {
    pub fn new(colors: &[Color], cons: LineConstraints) -> Self {
        let len = colors.len();
        let blocks = line_blocks(colors);
        let sink = 2 * len + 1;
        let mut g = Self {
            len,
            block_count: blocks.len(),
            arcs: vec![Vec::new(); sink + 1],
            type1_arcs: 0,
            type2_arcs: 0,
            chain_arcs: 0,
        };
        let allowed = |t: usize| !cons.forced_start || t == 0 || t >= cons.min_second;
        let last = blocks.len() - 1;
        for (j, &(lo, hi)) in blocks.iter().enumerate() {
            let first_entry = if j == 0 && cons.forced_start { lo..lo + 1 } else { lo..hi };
            if j == 0 {
                for t in first_entry.filter(|&t| allowed(t)) {
                    g.add(SOURCE, port(t), 0);
                    g.type2_arcs += 1;
                }
            }
            let has_chain = (j > 0 && j < last) || (j == 0 && cons.forced_start) || (j == last && cons.forced_end);
            if has_chain {
                for t in lo..hi {
                    if t + 1 < hi {
                        g.add(port(t), chain(t + 1), 1);
                        g.add(chain(t), chain(t + 1), 0);
                        g.type2_arcs += 1;
                        g.chain_arcs += 1;
                    }
                    if t > lo && allowed(t) {
                        g.add(chain(t), port(t), 0);
                        g.type2_arcs += 1;
                    }
                }
            }
            if j == last {
                let exits = if cons.forced_end { hi - 1..hi } else { lo..hi };
                for t in exits.filter(|&t| allowed(t)) {
                    g.add(port(t), sink, 0);
                    g.type2_arcs += 1;
                }
            } else {
                let (nlo, nhi) = blocks[j + 1];
                for i in lo..hi {
                    let k = 2 * (nlo - 1) + 1 - i;
                    if k < nhi && allowed(i) && allowed(k) {
                        g.add(port(i), port(k), 0);
                        g.type1_arcs += 1;
                    }
                }
            }
        }
        g
    }

    fn add(&mut self, from: usize, to: usize, w: u32) {
        self.arcs[from].push((to, w));
    }

    pub fn arc_count(&self) -> usize {
        self.type1_arcs + self.type2_arcs + self.chain_arcs
    }

    /// The cheapest `s`–`t` path as chosen positions. Among optimal paths the
    /// walk always moves to the successor whose next chosen position is
    /// smallest, which yields the lexicographically smallest solution.
    pub fn shortest(&self) -> Option<Vec<usize>> {
        let sink = 2 * self.len + 1;
        const INF: u32 = u32::MAX;
        // best[v] = (cost to the sink, first chosen position on the way)
        let mut best = vec![(INF, usize::MAX); sink + 1];
        best[sink] = (0, usize::MAX);
        for v in (0..sink).rev() {
            for &(w, wt) in &self.arcs[v] {
                if best[w].0 == INF {
                    continue;
                }
                let cand = (best[w].0 + wt, emitted(w).unwrap_or(best[w].1));
                if cand < best[v] {
                    best[v] = cand;
                }
            }
        }
        if best[SOURCE].0 == INF {
            return None;
        }
        let mut out = Vec::with_capacity(self.block_count + best[SOURCE].0 as usize);
        let mut v = SOURCE;
        while v != sink {
            let (_, next) = self.arcs[v]
                .iter()
                .filter(|&&(w, wt)| best[w].0 != INF && best[w].0 + wt == best[v].0)
                .map(|&(w, _)| (emitted(w).unwrap_or(best[w].1), w))
                .min()
                .expect("an optimal successor exists");
            if let Some(t) = emitted(next) {
                out.push(t);
            }
            v = next;
        }
        debug_assert_eq!(out.len(), self.block_count + best[SOURCE].0 as usize);
        Some(out)
    }
}

/// The position chosen on entering node `v`, for port nodes.
fn emitted(v: usize) -> Option<usize> {
    (v >= 2 && v.is_multiple_of(2)).then(|| (v - 2) / 2)
}

/// Minimum strict consistent subset of a colored line under `cons`, as sorted
/// positions, or `None` if the constraints cannot be met.
pub fn solve_line(colors: &[Color], cons: LineConstraints) -> Option<Vec<usize>> {
    if colors.is_empty() {
        return Some(Vec::new());
    }
    if colors.len() == 1 {
        return Some(vec![0]);
    }
    OverlayGraph::new(colors, cons).shortest()
}
