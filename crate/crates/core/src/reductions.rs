//! Generators for the three hardness constructions.
//!
//! Each generator returns the target instance, a name-to-vertex map for the
//! gadget vertices, and the closed-form size that the construction promises
//! for a given optimum of the source problem.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::cnf::{Formula, Literal};
use crate::error::{Error, Result};
use crate::graph::{Color, ColoredGraph, Weight};
use crate::oracle::{brute_solve, DEFAULT_CAP};
use crate::result::Problem;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ReductionKind {
    DominatingToMcs,
    DominatingToMscs,
    Max2SatToTree,
}

/// Source parameters and the target's named vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReductionMeta {
    pub reduction: ReductionKind,
    pub source_vertices: Option<usize>,
    pub variables: Option<usize>,
    pub clauses: Option<usize>,
    pub stabilizers: Option<usize>,
    /// `ε = num / den` for the weighted construction.
    pub epsilon: Option<(u64, u64)>,
    /// Edge weights (within a copy, between copies, to the singleton) after
    /// scaling to integers.
    pub weights: Option<(Weight, Weight, Weight)>,
    pub expected_size: String,
    pub vertices: BTreeMap<String, usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionInstance {
    pub target: ColoredGraph,
    pub meta: ReductionMeta,
}

impl ReductionInstance {
    /// The optimum the construction promises on the target, given the source
    /// optimum (a domination number, or a number of satisfied clauses).
    pub fn expected_size(&self, source_opt: usize) -> usize {
        match self.meta.reduction {
            ReductionKind::DominatingToMcs | ReductionKind::DominatingToMscs => source_opt + 1,
            ReductionKind::Max2SatToTree => {
                let n = self.meta.variables.unwrap_or(0);
                let m = self.meta.clauses.unwrap_or(0);
                let big_m = self.meta.stabilizers.unwrap_or(0);
                max2sat_expected_size(n, m, big_m, source_opt)
            }
        }
    }

    pub fn meta_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.meta).expect("meta serializes");
        s.push('\n');
        s
    }
}

/// `N(k) = n(M + 2) + 2k + 3(m - k) + 1`.
pub fn max2sat_expected_size(n: usize, m: usize, stabilizers: usize, k: usize) -> usize {
    n * (stabilizers + 2) + 2 * k + 3 * (m - k) + 1
}

/// `H = G + x` with the apex `x` adjacent to every vertex; the original
/// vertices get color 1 and the apex color 2.
pub fn dominating_to_mcs(g: &ColoredGraph) -> Result<ReductionInstance> {
    let n = g.vertex_count();
    let mut edges: Vec<(usize, usize)> = g.edges().into_iter().map(|(u, v, _)| (u, v)).collect();
    edges.extend((0..n).map(|v| (v, n)));
    let mut colors = vec![1; n];
    colors.push(2);
    let target = ColoredGraph::unweighted(colors, &edges)?;
    let mut vertices: BTreeMap<String, usize> = (0..n).map(|v| (format!("v{v}"), v)).collect();
    vertices.insert("x".into(), n);
    let meta = ReductionMeta {
        reduction: ReductionKind::DominatingToMcs,
        source_vertices: Some(n),
        variables: None,
        clauses: None,
        stabilizers: None,
        epsilon: None,
        weights: None,
        expected_size: "gamma + 1".into(),
        vertices,
    };
    Ok(ReductionInstance { target, meta })
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Integer weights for unit copy edges, `3 - 4ε` joins and `2ε` spokes with
/// `ε = num / den`, scaled by `den` and reduced by their common divisor.
pub fn scaled_weights(num: u64, den: u64) -> Result<(Weight, Weight, Weight)> {
    if num == 0 || den == 0 || 2 * num >= den {
        return Err(Error::InvalidParameter(format!("epsilon {num}/{den} must lie strictly between 0 and 1/2")));
    }
    let (within, cross, spoke) = (den, 3 * den - 4 * num, 2 * num);
    let d = gcd(gcd(within, cross), spoke);
    Ok((within / d, cross / d, spoke / d))
}

/// `G' = G1 ∪ G2 ∪ {v_sng}`: two copies of `g` (red `G1` on `0..n`, green
/// `G2` on `n..2n`) joined completely, plus a green singleton `2n` joined to
/// all of `G2`. Weights follow [`scaled_weights`].
pub fn dominating_to_mscs(g: &ColoredGraph, num: u64, den: u64) -> Result<ReductionInstance> {
    let (within, cross, spoke) = scaled_weights(num, den)?;
    let n = g.vertex_count();
    let mut edges = Vec::new();
    for (u, v, _) in g.edges() {
        edges.push((u, v, within));
        edges.push((n + u, n + v, within));
    }
    for u in 0..n {
        for v in 0..n {
            edges.push((u, n + v, cross));
        }
        edges.push((n + u, 2 * n, spoke));
    }
    let mut colors = vec![0; n];
    colors.extend(std::iter::repeat_n(1, n + 1));
    let target = ColoredGraph::new(colors, &edges, true)?;
    let mut vertices = BTreeMap::new();
    for v in 0..n {
        vertices.insert(format!("g1_{v}"), v);
        vertices.insert(format!("g2_{v}"), n + v);
    }
    vertices.insert("v_sng".into(), 2 * n);
    let meta = ReductionMeta {
        reduction: ReductionKind::DominatingToMscs,
        source_vertices: Some(n),
        variables: None,
        clauses: None,
        stabilizers: None,
        epsilon: Some((num, den)),
        weights: Some((within, cross, spoke)),
        expected_size: "gamma + 1".into(),
        vertices,
    };
    Ok(ReductionInstance { target, meta })
}

pub fn default_stabilizers(formula: &Formula) -> usize {
    3 * (formula.num_vars() + formula.clauses().len()) + 10
}

/// Vertex numbering of the MAX-2SAT tree. Superscripts are 1-based, variable,
/// clause and stabilizer indices 0-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TreeLayout {
    pub n: usize,
    pub m: usize,
    pub stabilizers: usize,
}

impl TreeLayout {
    fn var_base(&self, i: usize) -> usize {
        i * (8 + 2 * self.stabilizers)
    }

    fn clause_base(&self, c: usize) -> usize {
        self.n * (8 + 2 * self.stabilizers) + 21 * c
    }

    pub fn vertex_count(&self) -> usize {
        self.n * (8 + 2 * self.stabilizers) + 21 * self.m + 3
    }

    pub fn x(&self, i: usize, a: usize) -> usize {
        self.var_base(i) + a - 1
    }

    pub fn xbar(&self, i: usize, a: usize) -> usize {
        self.var_base(i) + 4 + a - 1
    }

    pub fn s(&self, i: usize, j: usize) -> usize {
        self.var_base(i) + 8 + j
    }

    pub fn sbar(&self, i: usize, j: usize) -> usize {
        self.var_base(i) + 8 + self.stabilizers + j
    }

    pub fn y(&self, c: usize, a: usize) -> usize {
        self.clause_base(c) + a - 1
    }

    pub fn z(&self, c: usize, a: usize) -> usize {
        self.clause_base(c) + 7 + a - 1
    }

    pub fn w(&self, c: usize, a: usize) -> usize {
        self.clause_base(c) + 14 + a - 1
    }

    pub fn v(&self, a: usize) -> usize {
        self.clause_base(self.m) + a - 1
    }

    pub fn literal_color(&self, lit: Literal) -> Color {
        (2 * lit.var + usize::from(lit.negated)) as Color
    }

    pub fn stabilizer_color(&self, i: usize, j: usize) -> Color {
        (2 * self.n + i * self.stabilizers + j) as Color
    }

    pub fn clause_color(&self, c: usize) -> Color {
        (2 * self.n + self.n * self.stabilizers + c) as Color
    }

    pub fn central_color(&self) -> Color {
        (2 * self.n + self.n * self.stabilizers + self.m) as Color
    }
}

/// The tree `T_θ`: variable gadgets (two 4-vertex literal paths with `M`
/// stabilizer pairs), clause gadgets (occurrence paths `y`, `z` hung off the
/// clause path `w`), and the central path `v1 v2 v3`.
pub fn max2sat_to_tree_mcs(formula: &Formula, stabilizers: usize) -> Result<ReductionInstance> {
    if stabilizers == 0 {
        return Err(Error::InvalidParameter("the stabilizer count must be at least 1".into()));
    }
    let layout = TreeLayout { n: formula.num_vars(), m: formula.clauses().len(), stabilizers };
    let total = layout.vertex_count();
    if layout.central_color() as i64 > crate::graph::MAX_COLOR {
        return Err(Error::InvalidParameter("construction needs more colors than supported".into()));
    }
    let mut colors = vec![0 as Color; total];
    let mut edges = Vec::with_capacity(total - 1);
    let mut vertices = BTreeMap::new();
    let chain = |ids: &[usize], edges: &mut Vec<(usize, usize)>| {
        for w in ids.windows(2) {
            edges.push((w[0], w[1]));
        }
    };
    for i in 0..layout.n {
        let pos: Vec<usize> = (1..=4).map(|a| layout.x(i, a)).collect();
        let neg: Vec<usize> = (1..=4).map(|a| layout.xbar(i, a)).collect();
        chain(&pos, &mut edges);
        chain(&neg, &mut edges);
        for a in 1..=4 {
            colors[layout.x(i, a)] = layout.literal_color(Literal::pos(i));
            colors[layout.xbar(i, a)] = layout.literal_color(Literal::neg(i));
            vertices.insert(format!("x_{}^{a}", i + 1), layout.x(i, a));
            vertices.insert(format!("xbar_{}^{a}", i + 1), layout.xbar(i, a));
        }
        for j in 0..stabilizers {
            edges.push((layout.s(i, j), layout.x(i, 1)));
            edges.push((layout.sbar(i, j), layout.xbar(i, 1)));
            colors[layout.s(i, j)] = layout.stabilizer_color(i, j);
            colors[layout.sbar(i, j)] = layout.stabilizer_color(i, j);
            vertices.insert(format!("s_{}^{}", i + 1, j + 1), layout.s(i, j));
            vertices.insert(format!("sbar_{}^{}", i + 1, j + 1), layout.sbar(i, j));
        }
        edges.push((layout.v(1), layout.x(i, 1)));
        edges.push((layout.v(1), layout.xbar(i, 1)));
    }
    for (c, &[left, right]) in formula.clauses().iter().enumerate() {
        let ys: Vec<usize> = (1..=7).map(|a| layout.y(c, a)).collect();
        let zs: Vec<usize> = (1..=7).map(|a| layout.z(c, a)).collect();
        let ws: Vec<usize> = (1..=7).map(|a| layout.w(c, a)).collect();
        chain(&ys, &mut edges);
        chain(&zs, &mut edges);
        chain(&ws, &mut edges);
        edges.push((layout.y(c, 1), layout.w(c, 2)));
        edges.push((layout.z(c, 1), layout.w(c, 6)));
        edges.push((layout.v(1), layout.w(c, 4)));
        for a in 1..=7 {
            colors[layout.y(c, a)] = layout.literal_color(left);
            colors[layout.z(c, a)] = layout.literal_color(right);
            colors[layout.w(c, a)] = layout.clause_color(c);
            vertices.insert(format!("y_{}^{a}", c + 1), layout.y(c, a));
            vertices.insert(format!("z_{}^{a}", c + 1), layout.z(c, a));
            vertices.insert(format!("w_{}^{a}", c + 1), layout.w(c, a));
        }
    }
    chain(&[layout.v(1), layout.v(2), layout.v(3)], &mut edges);
    for a in 1..=3 {
        colors[layout.v(a)] = layout.central_color();
        vertices.insert(format!("v_{a}"), layout.v(a));
    }
    let target = ColoredGraph::unweighted(colors, &edges)?;
    debug_assert_eq!(target.vertex_count(), total);
    let meta = ReductionMeta {
        reduction: ReductionKind::Max2SatToTree,
        source_vertices: None,
        variables: Some(layout.n),
        clauses: Some(layout.m),
        stabilizers: Some(stabilizers),
        epsilon: None,
        weights: None,
        expected_size: "n(M+2) + 2k + 3(m-k) + 1".into(),
        vertices,
    };
    Ok(ReductionInstance { target, meta })
}

/// The consistent subset `V_A` built from an assignment: the stabilizers of
/// the true side with `x^2, x̄^4` (or `x^4, x̄^2`), per clause `w^7, z^1` when
/// the left literal holds, `w^1, y^1` when only the right one does and
/// `w^1, y^1, z^7` otherwise, plus `v3`.
pub fn forward_witness(formula: &Formula, stabilizers: usize, assignment: &[bool]) -> Result<Vec<usize>> {
    if assignment.len() != formula.num_vars() {
        return Err(Error::InvalidParameter(format!(
            "assignment has {} values for {} variables",
            assignment.len(),
            formula.num_vars()
        )));
    }
    let layout = TreeLayout { n: formula.num_vars(), m: formula.clauses().len(), stabilizers };
    let mut out = Vec::new();
    for (i, &value) in assignment.iter().enumerate() {
        for j in 0..stabilizers {
            out.push(if value { layout.s(i, j) } else { layout.sbar(i, j) });
        }
        if value {
            out.extend([layout.x(i, 2), layout.xbar(i, 4)]);
        } else {
            out.extend([layout.x(i, 4), layout.xbar(i, 2)]);
        }
    }
    for (c, &[left, right]) in formula.clauses().iter().enumerate() {
        if left.eval(assignment) {
            out.extend([layout.w(c, 7), layout.z(c, 1)]);
        } else if right.eval(assignment) {
            out.extend([layout.w(c, 1), layout.y(c, 1)]);
        } else {
            out.extend([layout.w(c, 1), layout.y(c, 1), layout.z(c, 7)]);
        }
    }
    out.push(layout.v(3));
    out.sort_unstable();
    Ok(out)
}

/// Whether the oracle optimum of the target equals the promised size.
pub fn certify_reduction(inst: &ReductionInstance, source_opt: usize) -> Result<bool> {
    certify_reduction_capped(inst, source_opt, DEFAULT_CAP)
}

pub fn certify_reduction_capped(inst: &ReductionInstance, source_opt: usize, cap: usize) -> Result<bool> {
    let problem = match inst.meta.reduction {
        ReductionKind::DominatingToMscs => Problem::Mscs,
        ReductionKind::DominatingToMcs | ReductionKind::Max2SatToTree => Problem::Mcs,
    };
    let opt = brute_solve(&inst.target, problem, cap)?;
    Ok(opt.size == inst.expected_size(source_opt))
}
