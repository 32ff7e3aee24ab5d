//! Seeded random instances of each recognized shape.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Color, ColoredGraph, Weight};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Shape {
    Path,
    Cycle,
    Spider,
    Comb,
    Tree,
    General,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenParams {
    pub shape: Shape,
    pub n: usize,
    pub colors: usize,
    pub seed: u64,
    /// Draw edge weights from `1..=max_weight` instead of using unit weights.
    pub max_weight: Option<Weight>,
    /// Spider leg count.
    pub legs: Option<usize>,
    /// Comb skeleton length.
    pub teeth: Option<usize>,
}

impl GenParams {
    pub fn new(shape: Shape, n: usize, colors: usize, seed: u64) -> Self {
        Self { shape, n, colors, seed, max_weight: None, legs: None, teeth: None }
    }
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}

fn chain(ids: impl IntoIterator<Item = usize>, edges: &mut Vec<(usize, usize)>) {
    let ids: Vec<usize> = ids.into_iter().collect();
    edges.extend(ids.windows(2).map(|w| (w[0], w[1])));
}

/// Splits `total` into `parts` positive summands.
fn composition(rng: &mut ChaCha8Rng, total: usize, parts: usize) -> Vec<usize> {
    let mut sizes = vec![1; parts];
    for _ in parts..total {
        sizes[rng.gen_range(0..parts)] += 1;
    }
    sizes
}

fn spider_edges(rng: &mut ChaCha8Rng, n: usize, legs: Option<usize>) -> Result<Vec<(usize, usize)>> {
    if n < 4 {
        return Err(invalid("a spider needs at least 4 vertices"));
    }
    let legs = match legs {
        Some(l) if l < 3 || l > n - 1 => return Err(invalid(format!("a spider on {n} vertices needs 3..={} legs", n - 1))),
        Some(l) => l,
        None => rng.gen_range(3..=(n - 1).min(5)),
    };
    let mut edges = Vec::new();
    let mut next = 1;
    for len in composition(rng, n - 1, legs) {
        chain(std::iter::once(0).chain(next..next + len), &mut edges);
        next += len;
    }
    Ok(edges)
}

fn comb_edges(rng: &mut ChaCha8Rng, n: usize, skeleton: Option<usize>) -> Result<Vec<(usize, usize)>> {
    if n < 6 {
        return Err(invalid("a comb needs at least 6 vertices"));
    }
    let k = match skeleton {
        Some(k) if k < 4 || k + 2 > n => return Err(invalid(format!("a comb on {n} vertices needs a skeleton of 4..={}", n - 2))),
        Some(k) => k,
        None => rng.gen_range(4..=(n / 2).max(4)),
    };
    // teeth hang from interior skeleton vertices; two of them are guaranteed
    // non-empty so the result has two branch points
    let mut lens = vec![0; k];
    let mut interior: Vec<usize> = (1..k - 1).collect();
    interior.shuffle(rng);
    lens[interior[0]] += 1;
    lens[interior[1]] += 1;
    for _ in k + 2..n {
        lens[rng.gen_range(1..k - 1)] += 1;
    }
    let mut edges = Vec::new();
    chain(0..k, &mut edges);
    let mut next = k;
    for (i, &len) in lens.iter().enumerate() {
        chain(std::iter::once(i).chain(next..next + len), &mut edges);
        next += len;
    }
    Ok(edges)
}

fn tree_edges(rng: &mut ChaCha8Rng, n: usize) -> Vec<(usize, usize)> {
    (1..n).map(|v| (rng.gen_range(0..v), v)).collect()
}

fn general_edges(rng: &mut ChaCha8Rng, n: usize) -> Vec<(usize, usize)> {
    let mut edges = tree_edges(rng, n);
    let extra = (n / 2).max(1);
    let max_edges = n * (n - 1) / 2;
    let mut tries = 0;
    while edges.len() < (n - 1 + extra).min(max_edges) && tries < 100 * n {
        tries += 1;
        let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
        let (u, v) = (u.min(v), u.max(v));
        if u != v && !edges.iter().any(|&(a, b)| (a.min(b), a.max(b)) == (u, v)) {
            edges.push((u, v));
        }
    }
    edges
}

/// A connected instance of the requested shape. Vertex ids are shuffled, so
/// nothing downstream can rely on a particular labeling; the same parameters
/// always give the same graph.
pub fn generate(p: &GenParams) -> Result<ColoredGraph> {
    if p.n == 0 {
        return Err(invalid("n must be positive"));
    }
    if p.colors == 0 || p.colors as i64 > crate::graph::MAX_COLOR + 1 {
        return Err(invalid("the color count must be between 1 and 65536"));
    }
    if p.max_weight == Some(0) {
        return Err(invalid("the maximum weight must be positive"));
    }
    let n = p.n;
    let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
    let edges = match p.shape {
        Shape::Path => {
            let mut e = Vec::new();
            chain(0..n, &mut e);
            e
        }
        Shape::Cycle => {
            if n < 3 {
                return Err(invalid("a cycle needs at least 3 vertices"));
            }
            let mut e = Vec::new();
            chain((0..n).chain(std::iter::once(0)), &mut e);
            e
        }
        Shape::Spider => spider_edges(&mut rng, n, p.legs)?,
        Shape::Comb => comb_edges(&mut rng, n, p.teeth)?,
        Shape::Tree => tree_edges(&mut rng, n),
        Shape::General => general_edges(&mut rng, n),
    };
    let colors: Vec<Color> = (0..n).map(|_| rng.gen_range(0..p.colors) as Color).collect();
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut rng);
    let weighted: Vec<(usize, usize, Weight)> = edges
        .into_iter()
        .map(|(u, v)| {
            let w = p.max_weight.map_or(1, |m| rng.gen_range(1..=m));
            (perm[u], perm[v], w)
        })
        .collect();
    let mut shuffled = vec![0; n];
    for v in 0..n {
        shuffled[perm[v]] = colors[v];
    }
    ColoredGraph::new(shuffled, &weighted, p.max_weight.is_some())
}
