//! Combs: the tree dynamic program with constant-time constrained queries.
//!
//! Along `path(y, z)` only three kinds of vertex have off-path children: the
//! skeleton vertices where the path enters and leaves the skeleton, `z`
//! itself, and the interior skeleton vertices in between, whose only off-path
//! child is the first vertex of their tooth. The interior contributions are
//! read from two tables:
//!
//! * `P[a][j]`: the excess `S(a, t_j) - 1` of the tooth hanging at skeleton
//!   index `j` when anchored at `a`, solved as a constrained line,
//! * `Q[a][j]`: running sums of `P[a][·]` walking the skeleton from `a`'s
//!   attachment index (exclusive) to `j` (inclusive).

use crate::class::{classify, GraphClass};
use crate::error::{Error, Result};
use crate::fast::line::{solve_line, LineConstraints};
use crate::graph::{Color, ColoredGraph, Weight};
use crate::result::{Algorithm, SolveResult};
use crate::tree::{Cost, TreeDp};

/// A partial sum of costs: the finite part and how many infinite terms it has.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
struct CostSum {
    finite: usize,
    infinite: usize,
}

impl CostSum {
    fn add(self, c: Cost) -> Self {
        match c {
            Cost::Finite(v) => Self { finite: self.finite + v, ..self },
            Cost::Infinite => Self { infinite: self.infinite + 1, ..self },
        }
    }

    /// The sum of the terms in `self` but not in `earlier`.
    fn since(self, earlier: Self) -> Cost {
        if self.infinite > earlier.infinite {
            Cost::Infinite
        } else {
            Cost::Finite(self.finite - earlier.finite)
        }
    }
}

/// Precomputed tooth costs of a comb.
#[derive(Debug, Clone)]
pub struct CombTables {
    skeleton: Vec<usize>,
    teeth: Vec<Vec<usize>>,
    /// Skeleton index each vertex hangs from (its own index on the skeleton).
    root: Vec<usize>,
    /// Distance from each vertex to its skeleton root.
    depth: Vec<Weight>,
    k: usize,
    p: Vec<Cost>,
    q: Vec<CostSum>,
}

impl CombTables {
    pub fn new(dp: &TreeDp<'_>, skeleton: Vec<usize>, teeth: Vec<Vec<usize>>) -> Self {
        let g = dp.g;
        let n = dp.n;
        let k = skeleton.len();
        let mut root = vec![0; n];
        let mut depth = vec![0; n];
        for (j, &s) in skeleton.iter().enumerate() {
            root[s] = j;
            for (i, &v) in teeth[j].iter().enumerate() {
                root[v] = j;
                depth[v] = i as Weight + 1;
            }
        }
        let mut p = vec![Cost::Finite(0); n * k];
        for a in 0..n {
            for j in 0..k {
                p[a * k + j] = tooth_excess(dp, g, a, skeleton[j], &teeth[j], root[a] == j && depth[a] > 0);
            }
        }
        let mut q = vec![CostSum::default(); n * k];
        for a in 0..n {
            let home = root[a];
            let mut acc = CostSum::default();
            for j in home + 1..k {
                acc = acc.add(p[a * k + j]);
                q[a * k + j] = acc;
            }
            let mut acc = CostSum::default();
            for j in (0..home).rev() {
                acc = acc.add(p[a * k + j]);
                q[a * k + j] = acc;
            }
        }
        Self { skeleton, teeth, root, depth, k, p, q }
    }

    pub fn skeleton(&self) -> &[usize] {
        &self.skeleton
    }

    pub fn teeth(&self) -> &[Vec<usize>] {
        &self.teeth
    }

    /// `P[a][j]`.
    pub fn p(&self, a: usize, j: usize) -> Cost {
        self.p[a * self.k + j]
    }

    /// `Q[a][j]`: total of `P[a][i]` over skeleton indices `i` after `a`'s
    /// attachment index up to and including `j`.
    pub fn q(&self, a: usize, j: usize) -> Cost {
        self.q[a * self.k + j].since(CostSum::default())
    }

    /// Sum of `P[a][·]` over skeleton offsets `lo..=hi` from `a`'s attachment
    /// index, walking in direction `dir`.
    fn range(&self, a: usize, dir: isize, lo: isize, hi: isize) -> Cost {
        if lo > hi {
            return Cost::Finite(0);
        }
        let at = |t: isize| (self.root[a] as isize + dir * t) as usize;
        let upper = self.q[a * self.k + at(hi)];
        let lower = if lo == 1 { CostSum::default() } else { self.q[a * self.k + at(lo - 1)] };
        upper.since(lower)
    }
}

/// `S(a, t_j) - 1` for the tooth `t_j` hanging at skeleton vertex `s`.
fn tooth_excess(dp: &TreeDp<'_>, g: &ColoredGraph, a: usize, s: usize, tooth: &[usize], inside: bool) -> Cost {
    if tooth.is_empty() {
        return Cost::Finite(0);
    }
    if inside {
        return Cost::Infinite;
    }
    let mut line = dp.dist.path(a, s);
    let reach = line.len() - 1;
    line.extend_from_slice(tooth);
    let colors: Vec<Color> = line.iter().map(|&v| g.color(v)).collect();
    match solve_line(&colors, LineConstraints::forced_start(2 * reach)) {
        Some(picks) => Cost::Finite(picks.len() - 1),
        None => Cost::Infinite,
    }
}

impl TreeDp<'_> {
    fn on_path(&self, from: usize, to: usize, p: usize) -> bool {
        self.d(from, p) + self.d(p, to) == self.d(from, to)
    }

    /// `S(x, y, z)` on a comb.
    pub(crate) fn comb_constrained(&mut self, x: usize, y: usize, z: usize) -> Cost {
        let t = self.comb.as_ref().expect("comb tables");
        let (sx, sz) = (t.root[x], t.root[z]);
        let (dx, dz) = (t.depth[x] as isize, t.depth[z] as isize);
        let mut specials = vec![t.skeleton[sx], t.skeleton[sz], z];
        specials.sort_unstable();
        specials.dedup();

        let mut total = Cost::Finite(2);
        if sx != sz {
            let len = sx.abs_diff(sz) as isize;
            let dir: isize = if sz > sx { 1 } else { -1 };
            let t0 = (self.d(x, y) as isize - dx).max(1);
            // offset s is x-side when 2s < val, tied when 2s = val
            let val = dz + len - dx;
            let x_hi = (val - 1).div_euclid(2).min(len - 1);
            let z_lo = val.div_euclid(2) + 1;
            total = total + t.range(x, dir, t0, x_hi);
            let z_from = t0.max(z_lo);
            total = total + t.range(z, -dir, 1, len - z_from);
            if val % 2 == 0 && (t0..len).contains(&(val / 2)) {
                let j = (sx as isize + dir * (val / 2)) as usize;
                total = total + t.p(x, j).min(t.p(z, j));
            }
        }
        if total.is_infinite() {
            return total;
        }
        for p in specials {
            if !self.on_path(y, z, p) {
                continue;
            }
            for c in self.off_path_children(x, z, p) {
                total = total + self.child_excess(x, z, p, c);
                if total.is_infinite() {
                    return total;
                }
            }
        }
        total
    }
}

/// Exact MSCS of an unweighted comb.
pub fn solve_mscs_comb(g: &ColoredGraph) -> Result<SolveResult> {
    let GraphClass::Comb { skeleton, teeth } = classify(g) else {
        return Err(Error::WrongClass("comb"));
    };
    super::require_unweighted(g, "comb")?;
    let mut dp = TreeDp::new(g)?;
    let tables = CombTables::new(&dp, skeleton, teeth);
    dp.comb = Some(tables);
    Ok(dp.solve(Algorithm::CombDp))
}

/// Builds a comb solver state for inspection in tests and benchmarks.
pub fn comb_dp(g: &ColoredGraph) -> Result<TreeDp<'_>> {
    let GraphClass::Comb { skeleton, teeth } = classify(g) else {
        return Err(Error::WrongClass("comb"));
    };
    let mut dp = TreeDp::new(g)?;
    dp.comb = Some(CombTables::new(&dp, skeleton, teeth));
    Ok(dp)
}

impl TreeDp<'_> {
    pub fn comb_tables(&self) -> Option<&CombTables> {
        self.comb.as_ref()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::consistency::verify_scs;
    use crate::oracle::brute_mscs;
    use crate::tree::solve_mscs_tree;

    /// Skeleton 0..k, tooth `i` of length `lens[i]` hanging at `i`.
    fn comb(colors: &[Color], lens: &[usize]) -> ColoredGraph {
        let k = lens.len();
        let mut edges: Vec<_> = (1..k).map(|i| (i - 1, i)).collect();
        let mut next = k;
        for (i, &l) in lens.iter().enumerate() {
            let mut prev = i;
            for _ in 0..l {
                edges.push((prev, next));
                prev = next;
                next += 1;
            }
        }
        ColoredGraph::unweighted(colors.to_vec(), &edges).unwrap()
    }

    fn sample() -> ColoredGraph {
        // 5 skeleton vertices, teeth of lengths 1, 2, 0, 3, 1
        comb(&[0, 0, 1, 1, 0, 1, 1, 0, 1, 0, 0, 1], &[1, 2, 0, 3, 1])
    }

    #[test]
    fn examples() {
        let mono = comb(&[2; 8], &[0, 2, 2, 0]);
        assert_eq!(solve_mscs_comb(&mono).unwrap().size, 1);
        let g = sample();
        let r = solve_mscs_comb(&g).unwrap();
        assert_eq!(r.size, solve_mscs_tree(&g).unwrap().size);
        assert_eq!(r.size, brute_mscs(&g).unwrap().size);
        assert!(verify_scs(&g, &r.witness).unwrap().holds);
    }

    #[test]
    fn p_matches_the_generic_subproblem() {
        let g = sample();
        let dp = comb_dp(&g).unwrap();
        let t = dp.comb_tables().unwrap().clone();
        let mut generic = TreeDp::new(&g).unwrap();
        for a in 0..g.vertex_count() {
            for (j, tooth) in t.teeth().iter().enumerate() {
                if tooth.is_empty() || tooth.contains(&a) {
                    continue;
                }
                assert_eq!(t.p(a, j), generic.solve_subproblem(a, tooth[0]).excess(), "a={a} j={j}");
            }
        }
    }

    #[test]
    fn q_is_a_prefix_sum_of_p() {
        let g = sample();
        let dp = comb_dp(&g).unwrap();
        let t = dp.comb_tables().unwrap();
        for a in 0..g.vertex_count() {
            for (i, &s) in t.skeleton().iter().enumerate() {
                let mut want = Cost::Finite(0);
                for (j, &sj) in t.skeleton().iter().enumerate() {
                    let on = dp.on_path(a, s, sj) && j != t.root[a];
                    if on {
                        want = want + t.p(a, j);
                    }
                }
                assert_eq!(t.q(a, i), want, "a={a} i={i}");
            }
        }
    }

    #[test]
    fn constrained_queries_match_the_generic_walk() {
        let g = sample();
        let mut fast = comb_dp(&g).unwrap();
        let mut generic = TreeDp::new(&g).unwrap();
        let n = g.vertex_count();
        for x in 0..n {
            for y in 0..n {
                if x == y {
                    continue;
                }
                for z in generic.valid_pairs(x, y) {
                    assert_eq!(fast.solve_constrained(x, y, z), generic.solve_constrained(x, y, z), "{x} {y} {z}");
                }
            }
        }
    }

    #[test]
    fn empty_teeth_reduce_to_a_path() {
        let g = ColoredGraph::unweighted(vec![0, 0, 1, 1, 0], &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        let dp = TreeDp::new(&g);
        assert!(dp.is_ok());
        let mut dp = dp.unwrap();
        let tables = CombTables::new(&dp, vec![0, 1, 2, 3, 4], vec![Vec::new(); 5]);
        dp.comb = Some(tables);
        let r = dp.solve(Algorithm::CombDp);
        assert_eq!(r.size, crate::fast::solve_mscs_path(&g).unwrap().size);
    }
}
