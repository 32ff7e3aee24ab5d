//! Exact minimum strict consistent subsets on (weighted) trees.
//!
//! A subproblem `T(x, y)` fixes a solution vertex `x` and a vertex `y`; let `u`
//! be the neighbor of `y` on `path(x, y)` and `T_y` the component of `y` once
//! the edge `(u, y)` is removed. `T(x, y)` asks for the smallest strict
//! consistent subset of `path(x, u) ∪ T_y` that contains `x` and in which `x`
//! covers every vertex of `path(x, u)`. Its solution never interferes with the
//! rest of the tree: every vertex outside reaches it through `path(x, u)`,
//! where `x` is already a nearest member.
//!
//! To solve `T(x, y)` we guess `z`, the member of the solution nearest to `x`.
//! Every vertex of `path(x, z)` is then covered by `x` or `z`, and each
//! off-path subtree hanging from `path(y, z)` becomes an independent
//! subproblem anchored at whichever of `x`, `z` is closer to its attachment
//! point. When the attachment point is equidistant both anchors are tried.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::ops::Add;

use crate::blocks::BlockDecomposition;
use crate::distance::DistanceOracle;
use crate::error::{Error, Result};
use crate::fast::comb::CombTables;
use crate::graph::{ColoredGraph, Weight};
use crate::result::{Algorithm, Problem, SolveResult};

const NONE: Weight = Weight::MAX;

/// Size of a (constrained) optimum, or `Infinite` when no solution exists.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Cost {
    Finite(usize),
    Infinite,
}

impl Cost {
    pub fn finite(self) -> Option<usize> {
        match self {
            Cost::Finite(v) => Some(v),
            Cost::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        self == Cost::Infinite
    }

    /// The cost minus the shared anchor that every child solution contains.
    pub fn excess(self) -> Cost {
        match self {
            Cost::Finite(v) => Cost::Finite(v - 1),
            Cost::Infinite => Cost::Infinite,
        }
    }
}

impl Add for Cost {
    type Output = Cost;

    fn add(self, rhs: Cost) -> Cost {
        match (self, rhs) {
            (Cost::Finite(a), Cost::Finite(b)) => Cost::Finite(a + b),
            _ => Cost::Infinite,
        }
    }
}

impl PartialOrd for Cost {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Cost {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Cost::Finite(a), Cost::Finite(b)) => a.cmp(b),
            (Cost::Finite(_), Cost::Infinite) => Ordering::Less,
            (Cost::Infinite, Cost::Finite(_)) => Ordering::Greater,
            (Cost::Infinite, Cost::Infinite) => Ordering::Equal,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Entry {
    cost: Cost,
    /// Chosen partner; `None` means `{x}` alone (monochromatic) or infeasible.
    partner: Option<usize>,
}

/// Which anchor an off-path child subtree is attached to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Side {
    X,
    Z,
    Either,
}

/// Memoized dynamic program over subproblems `T(x, y)` of one tree.
pub struct TreeDp<'g> {
    pub(crate) g: &'g ColoredGraph,
    pub(crate) n: usize,
    pub(crate) dist: DistanceOracle,
    /// `toward[a * n + b]`: the neighbor of `a` on `path(a, b)`.
    toward: Vec<usize>,
    /// `first_off[a * n + b]`: distance from `a` to the first vertex on
    /// `path(a, b)` whose color differs from `a`'s, or `NONE`.
    first_off: Vec<Weight>,
    mono_below: HashMap<(usize, usize), bool>,
    memo: Vec<Option<Entry>>,
    pub(crate) comb: Option<CombTables>,
}

impl<'g> TreeDp<'g> {
    pub fn new(g: &'g ColoredGraph) -> Result<Self> {
        if !g.is_tree() {
            return Err(Error::WrongClass("tree"));
        }
        let n = g.vertex_count();
        let dist = DistanceOracle::new(g);
        let mut toward = vec![usize::MAX; n * n];
        for b in 0..n {
            let row = dist.row(b);
            for a in 0..n {
                if let Some(p) = row.pred[a] {
                    toward[a * n + b] = p;
                }
            }
        }
        let mut first_off = vec![NONE; n * n];
        for a in 0..n {
            let mut stack = vec![(a, usize::MAX)];
            while let Some((v, parent)) = stack.pop() {
                let inherited = if parent == usize::MAX { NONE } else { first_off[a * n + parent] };
                first_off[a * n + v] = if inherited != NONE {
                    inherited
                } else if g.color(v) != g.color(a) {
                    dist.d(a, v)
                } else {
                    NONE
                };
                for &(w, _) in g.neighbors(v) {
                    if w != parent {
                        stack.push((w, v));
                    }
                }
            }
        }
        Ok(Self {
            g,
            n,
            dist,
            toward,
            first_off,
            mono_below: HashMap::new(),
            memo: vec![None; n * n],
            comb: None,
        })
    }

    #[inline]
    pub(crate) fn d(&self, a: usize, b: usize) -> Weight {
        self.dist.d(a, b)
    }

    /// The neighbor of `a` on `path(a, b)`; `a != b`.
    #[inline]
    pub(crate) fn toward(&self, a: usize, b: usize) -> usize {
        self.toward[a * self.n + b]
    }

    /// The vertex `u`: neighbor of `y` on `path(x, y)`.
    pub fn anchor_edge(&self, x: usize, y: usize) -> usize {
        self.toward(y, x)
    }

    /// `true` when `path(a, b)` is colored `C(a)` for at least half its length
    /// from `a`, i.e. every vertex strictly closer to `a` than to `b`, and the
    /// midpoint if there is one, has `a`'s color.
    #[inline]
    fn half_owned(&self, a: usize, b: usize, span: Weight) -> bool {
        let off = self.first_off[a * self.n + b];
        off == NONE || 2 * off > span
    }

    /// Whether `T(x, y)` can have any solution at all: `path(x, u)` must be
    /// monochromatic in `x`'s color.
    pub fn key_feasible(&self, x: usize, y: usize) -> bool {
        x != y && self.first_off[x * self.n + self.anchor_edge(x, y)] == NONE
    }

    /// Whether the component of `child` away from `parent` is monochromatic.
    fn subtree_mono(&mut self, parent: usize, child: usize) -> bool {
        if let Some(&m) = self.mono_below.get(&(parent, child)) {
            return m;
        }
        let c = self.g.color(child);
        let mut ok = true;
        for i in 0..self.g.degree(child) {
            let w = self.g.neighbors(child)[i].0;
            if w != parent && (self.g.color(w) != c || !self.subtree_mono(child, w)) {
                ok = false;
                break;
            }
        }
        self.mono_below.insert((parent, child), ok);
        ok
    }

    /// Vertices of `T_y`, in depth-first order from `y`.
    fn component(&self, y: usize, u: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut stack = vec![(y, u)];
        while let Some((v, parent)) = stack.pop() {
            out.push(v);
            for &(w, _) in self.g.neighbors(v) {
                if w != parent {
                    stack.push((w, v));
                }
            }
        }
        out
    }

    /// Whether `z ∈ T_y` can be the solution member nearest to `x` in `T(x, y)`.
    pub fn is_valid_pair(&self, x: usize, y: usize, z: usize) -> bool {
        let u = self.anchor_edge(x, y);
        let span = self.d(x, z);
        self.d(x, y) + self.d(y, z) == span
            && 2 * self.d(x, u) <= span
            && self.half_owned(x, z, span)
            && self.half_owned(z, x, span)
    }

    /// All valid partners `z` for `x` in `T(x, y)`, sorted.
    pub fn valid_pairs(&self, x: usize, y: usize) -> Vec<usize> {
        if !self.key_feasible(x, y) {
            return Vec::new();
        }
        let u = self.anchor_edge(x, y);
        let mut out: Vec<usize> =
            self.component(y, u).into_iter().filter(|&z| self.is_valid_pair(x, y, z)).collect();
        out.sort_unstable();
        out
    }

    /// `S(x, y)`, memoized.
    pub fn solve_subproblem(&mut self, x: usize, y: usize) -> Cost {
        let key = x * self.n + y;
        if let Some(e) = self.memo[key] {
            return e.cost;
        }
        let entry = self.compute(x, y);
        self.memo[key] = Some(entry);
        entry.cost
    }

    fn compute(&mut self, x: usize, y: usize) -> Entry {
        if !self.key_feasible(x, y) {
            return Entry { cost: Cost::Infinite, partner: None };
        }
        let u = self.anchor_edge(x, y);
        if self.g.color(y) == self.g.color(x) && self.subtree_mono(u, y) {
            return Entry { cost: Cost::Finite(1), partner: None };
        }
        let mut best = Entry { cost: Cost::Infinite, partner: None };
        for z in self.valid_pairs(x, y) {
            let c = self.solve_constrained(x, y, z);
            if c < best.cost {
                best = Entry { cost: c, partner: Some(z) };
            }
        }
        best
    }

    fn side(&self, p: usize, x: usize, z: usize) -> Side {
        match self.d(p, x).cmp(&self.d(p, z)) {
            Ordering::Less => Side::X,
            Ordering::Greater => Side::Z,
            Ordering::Equal => Side::Either,
        }
    }

    /// Contribution of the child subtree at `c` (hanging from path vertex `p`)
    /// beyond the anchor it shares with the parent solution.
    pub(crate) fn child_excess(&mut self, x: usize, z: usize, p: usize, c: usize) -> Cost {
        match self.side(p, x, z) {
            Side::X => self.solve_subproblem(x, c).excess(),
            Side::Z => self.solve_subproblem(z, c).excess(),
            Side::Either => {
                let a = self.solve_subproblem(x, c);
                let b = self.solve_subproblem(z, c);
                a.min(b).excess()
            }
        }
    }

    /// Off-path children of `p` on the walk from `y` toward `z`.
    pub(crate) fn off_path_children(&self, x: usize, z: usize, p: usize) -> Vec<usize> {
        let prev = self.toward(p, x);
        let next = if p == z { usize::MAX } else { self.toward(p, z) };
        self.g
            .neighbors(p)
            .iter()
            .map(|&(w, _)| w)
            .filter(|&w| w != prev && w != next)
            .collect()
    }

    /// `S(x, y, z) = 2 + Σ_{𝒳} (S(x, v′) − 1) + Σ_{𝒵} (S(z, v′) − 1)`.
    pub fn solve_constrained(&mut self, x: usize, y: usize, z: usize) -> Cost {
        if self.comb.is_some() {
            return self.comb_constrained(x, y, z);
        }
        let mut total = Cost::Finite(2);
        let mut p = y;
        loop {
            for c in self.off_path_children(x, z, p) {
                total = total + self.child_excess(x, z, p, c);
                if total.is_infinite() {
                    return total;
                }
            }
            if p == z {
                return total;
            }
            p = self.toward(p, z);
        }
    }

    /// Reconstructs an optimal solution of `T(x, y)`; `None` if infeasible.
    pub fn witness(&mut self, x: usize, y: usize) -> Option<Vec<usize>> {
        let mut out = BTreeSet::new();
        self.collect_witness(x, y, &mut out)?;
        Some(out.into_iter().collect())
    }

    fn collect_witness(&mut self, x: usize, y: usize, out: &mut BTreeSet<usize>) -> Option<()> {
        self.solve_subproblem(x, y).finite()?;
        let entry = self.memo[x * self.n + y].expect("memoized");
        out.insert(x);
        let Some(z) = entry.partner else {
            return Some(());
        };
        out.insert(z);
        let mut p = y;
        loop {
            for c in self.off_path_children(x, z, p) {
                let anchor = match self.side(p, x, z) {
                    Side::X => x,
                    Side::Z => z,
                    Side::Either => {
                        if self.solve_subproblem(x, c) <= self.solve_subproblem(z, c) {
                            x
                        } else {
                            z
                        }
                    }
                };
                self.collect_witness(anchor, c, out)?;
            }
            if p == z {
                return Some(());
            }
            p = self.toward(p, z);
        }
    }

    /// Solves the whole tree: fixes the smallest leaf block `L` and its contact
    /// vertex `y` in the neighboring block, then minimizes `S(x, y)` over
    /// `x ∈ L`.
    pub fn solve(&mut self, algorithm: Algorithm) -> SolveResult {
        if self.g.is_monochromatic() {
            return SolveResult::new(vec![0], Problem::Mscs, algorithm);
        }
        let (leaf, y) = leaf_contact(self.g);
        let mut best: Option<(Cost, usize)> = None;
        for &x in &leaf {
            let c = self.solve_subproblem(x, y);
            if best.is_none_or(|(b, _)| c < b) {
                best = Some((c, x));
            }
        }
        let (_, x) = best.expect("leaf block is non-empty");
        let witness = self.witness(x, y).expect("a tree always has a strict consistent subset");
        SolveResult::new(witness, Problem::Mscs, algorithm)
    }
}

/// The smallest leaf block (ties by block id) and the vertex of its unique
/// neighboring block adjacent to it.
pub(crate) fn leaf_contact(g: &ColoredGraph) -> (Vec<usize>, usize) {
    let blocks = BlockDecomposition::new(g);
    let leaf = blocks
        .leaf_blocks()
        .into_iter()
        .min_by_key(|&b| (blocks.members(b).len(), b))
        .expect("a tree has a leaf block");
    let members = blocks.members(leaf).to_vec();
    let y = members
        .iter()
        .flat_map(|&v| g.neighbors(v).iter().map(|&(w, _)| w))
        .find(|&w| blocks.block_of(w) != leaf)
        .expect("multicolored tree: every block has a neighbor");
    (members, y)
}

/// Minimum strict consistent subset of a tree (weighted trees allowed).
pub fn solve_mscs_tree(g: &ColoredGraph) -> Result<SolveResult> {
    let algorithm = if g.is_weighted() { Algorithm::TreeDpWeighted } else { Algorithm::TreeDp };
    Ok(TreeDp::new(g)?.solve(algorithm))
}

/// Weighted entry point; distances and valid pairs use weighted lengths.
pub fn solve_mscs_tree_weighted(g: &ColoredGraph) -> Result<SolveResult> {
    Ok(TreeDp::new(g)?.solve(Algorithm::TreeDpWeighted))
}
