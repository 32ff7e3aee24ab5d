use crate::blocks::BlockDecomposition;
use crate::class::{classify, GraphClass};
use crate::error::{Error, Result};
use crate::fast::line::{solve_line, LineConstraints};
use crate::graph::{Color, ColoredGraph};
use crate::result::{Algorithm, Problem, SolveResult};

/// The legs of a spider: maximal paths leaving `center`, listed outward.
fn legs(g: &ColoredGraph, center: usize) -> Vec<Vec<usize>> {
    g.neighbors(center)
        .iter()
        .map(|&(first, _)| {
            let mut leg = vec![first];
            let (mut prev, mut cur) = (center, first);
            while let Some(next) = g.neighbors(cur).iter().map(|&(w, _)| w).find(|&w| w != prev) {
                leg.push(next);
                prev = cur;
                cur = next;
            }
            leg
        })
        .collect()
}

/// Solves one leg line and returns the chosen vertices other than position 0.
fn leg_picks(g: &ColoredGraph, line: &[usize], min_second: usize) -> Option<Vec<usize>> {
    let colors: Vec<Color> = line.iter().map(|&v| g.color(v)).collect();
    let picks = solve_line(&colors, LineConstraints::forced_start(min_second))?;
    Some(picks.into_iter().skip(1).map(|p| line[p]).collect())
}

/// Exact MSCS of an unweighted spider.
///
/// Fix `b`, the chosen vertex of the center block nearest to the center `c`,
/// at distance `r`. Every other chosen vertex off `b`'s leg lies at distance
/// at least `r` from `c`, so each leg becomes an independent line problem:
/// `b`'s own leg outward from `b`, and every other leg preceded by the stretch
/// from `b` to `c`, with nothing chosen closer than `2r` to `b`.
pub fn solve_mscs_spider(g: &ColoredGraph) -> Result<SolveResult> {
    let GraphClass::Spider { center } = classify(g) else {
        return Err(Error::WrongClass("spider"));
    };
    super::require_unweighted(g, "spider")?;
    if g.is_monochromatic() {
        return Ok(SolveResult::new(vec![0], Problem::Mscs, Algorithm::Spider));
    }
    let legs = legs(g, center);
    let blocks = BlockDecomposition::new(g);
    let mut candidates = blocks.members(blocks.block_of(center)).to_vec();
    candidates.sort_unstable();

    let mut best: Option<Vec<usize>> = None;
    'candidates: for b in candidates {
        let mut witness = vec![b];
        let home = legs.iter().position(|leg| leg.contains(&b));
        // stretch from b inward to the center, inclusive
        let inward: Vec<usize> = match home {
            None => vec![b],
            Some(l) => {
                let r = legs[l].iter().position(|&v| v == b).unwrap() + 1;
                let mut s: Vec<usize> = legs[l][..r].iter().rev().copied().collect();
                s.push(center);
                let own: Vec<usize> = std::iter::once(b).chain(legs[l][r..].iter().copied()).collect();
                match leg_picks(g, &own, 0) {
                    Some(p) => witness.extend(p),
                    None => continue 'candidates,
                }
                s
            }
        };
        let r = inward.len() - 1;
        for (l, leg) in legs.iter().enumerate() {
            if Some(l) == home {
                continue;
            }
            let line: Vec<usize> = inward.iter().chain(leg.iter()).copied().collect();
            match leg_picks(g, &line, 2 * r) {
                Some(p) => witness.extend(p),
                None => continue 'candidates,
            }
        }
        witness.sort_unstable();
        if best.as_ref().is_none_or(|w| (witness.len(), &witness) < (w.len(), w)) {
            best = Some(witness);
        }
    }
    let witness = best.expect("a spider always has a strict consistent subset");
    Ok(SolveResult::new(witness, Problem::Mscs, Algorithm::Spider))
}
