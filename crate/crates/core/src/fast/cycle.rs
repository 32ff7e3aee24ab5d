use crate::class::{classify, GraphClass};
use crate::error::{Error, Result};
use crate::fast::line::{line_blocks, solve_line, LineConstraints};
use crate::graph::{Color, ColoredGraph};
use crate::result::{Algorithm, Problem, SolveResult};

/// Exact MSCS of an unweighted cycle.
///
/// Some vertex `v` of the smallest block is chosen in every solution. Cutting
/// the cycle at `v` and duplicating it gives a line whose two ends are both
/// `v`; consecutive chosen vertices of the cycle are consecutive on that line,
/// so the two problems coincide.
pub fn solve_mscs_cycle(g: &ColoredGraph) -> Result<SolveResult> {
    let GraphClass::Cycle { order } = classify(g) else {
        return Err(Error::WrongClass("cycle"));
    };
    super::require_unweighted(g, "cycle")?;
    if g.is_monochromatic() {
        return Ok(SolveResult::new(vec![0], Problem::Mscs, Algorithm::CycleOverlay));
    }
    let n = order.len();
    let colors: Vec<Color> = order.iter().map(|&v| g.color(v)).collect();
    // rotate so the cycle starts at a block boundary; blocks are then runs
    let shift = (0..n).find(|&i| colors[i] != colors[(i + n - 1) % n]).expect("two colors");
    let rotated: Vec<usize> = (0..n).map(|i| (i + shift) % n).collect();
    let runs = line_blocks(&rotated.iter().map(|&i| colors[i]).collect::<Vec<_>>());
    let &(lo, hi) = runs.iter().min_by_key(|&&(lo, hi)| (hi - lo, lo)).expect("non-empty");

    let mut best: Option<Vec<usize>> = None;
    for start in (lo..hi).map(|i| rotated[i]) {
        let line: Vec<usize> = (0..=n).map(|i| (start + i) % n).collect();
        let line_colors: Vec<Color> = line.iter().map(|&i| colors[i]).collect();
        let cons = LineConstraints { forced_start: true, forced_end: true, min_second: 0 };
        let Some(picks) = solve_line(&line_colors, cons) else { continue };
        let mut witness: Vec<usize> = picks.into_iter().map(|p| order[line[p]]).collect();
        witness.sort_unstable();
        witness.dedup();
        if best.as_ref().is_none_or(|b| (witness.len(), &witness) < (b.len(), b)) {
            best = Some(witness);
        }
    }
    let witness = best.expect("a cycle always has a strict consistent subset");
    Ok(SolveResult::new(witness, Problem::Mscs, Algorithm::CycleOverlay))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(colors: &[Color]) -> ColoredGraph {
        let n = colors.len();
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        ColoredGraph::unweighted(colors.to_vec(), &edges).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(solve_mscs_cycle(&cycle(&[0; 6])).unwrap().size, 1);
        assert_eq!(solve_mscs_cycle(&cycle(&[0, 0, 1, 1])).unwrap().size, 2);
        assert_eq!(solve_mscs_cycle(&cycle(&[0, 1, 0, 1, 0, 1])).unwrap().size, 6);
    }

    #[test]
    fn block_wrapping_around_the_start() {
        let g = cycle(&[0, 1, 1, 1, 0, 0]);
        let r = solve_mscs_cycle(&g).unwrap();
        assert_eq!(r.size, crate::oracle::brute_mscs(&g).unwrap().size);
        assert!(crate::consistency::verify_scs(&g, &r.witness).unwrap().holds);
    }

    #[test]
    fn rejects_paths() {
        let p = ColoredGraph::unweighted(vec![0, 1, 0], &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(solve_mscs_cycle(&p).unwrap_err(), Error::WrongClass("cycle"));
    }
}
