use crate::class::{classify, GraphClass};
use crate::error::{Error, Result};
use crate::fast::line::{solve_line, LineConstraints};
use crate::graph::{Color, ColoredGraph};
use crate::result::{Algorithm, Problem, SolveResult};

/// Exact MSCS of an unweighted path in linear time.
pub fn solve_mscs_path(g: &ColoredGraph) -> Result<SolveResult> {
    let GraphClass::Path { order } = classify(g) else {
        return Err(Error::WrongClass("path"));
    };
    super::require_unweighted(g, "path")?;
    let colors: Vec<Color> = order.iter().map(|&v| g.color(v)).collect();
    let picks = solve_line(&colors, LineConstraints::default()).expect("unconstrained lines are feasible");
    let witness = picks.into_iter().map(|i| order[i]).collect();
    Ok(SolveResult::new(witness, Problem::Mscs, Algorithm::PathOverlay))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blocks::BlockDecomposition;

    fn path(colors: &[Color]) -> ColoredGraph {
        let edges: Vec<_> = (1..colors.len()).map(|i| (i - 1, i)).collect();
        ColoredGraph::unweighted(colors.to_vec(), &edges).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(solve_mscs_path(&path(&[0; 7])).unwrap().size, 1);
        assert_eq!(solve_mscs_path(&path(&[0, 0, 0, 1, 1, 1, 2, 2, 2])).unwrap().size, 3);
        assert_eq!(solve_mscs_path(&path(&[0, 1, 0])).unwrap().size, 3);
    }

    #[test]
    fn blocks_get_one_or_two_picks() {
        let g = path(&[0, 0, 1, 1, 1, 0, 0, 0, 0, 1, 0, 0]);
        let r = solve_mscs_path(&g).unwrap();
        let blocks = BlockDecomposition::new(&g);
        for b in 0..blocks.block_count() {
            let hits = r.witness.iter().filter(|&&v| blocks.block_of(v) == b).count();
            assert!((1..=2).contains(&hits));
            if blocks.is_leaf(b) {
                assert_eq!(hits, 1);
            }
        }
    }

    #[test]
    fn relabeled_path_maps_back() {
        let g = ColoredGraph::unweighted(vec![1, 0, 0, 1], &[(2, 0), (0, 3), (3, 1)]).unwrap();
        let r = solve_mscs_path(&g).unwrap();
        assert!(crate::consistency::verify_scs(&g, &r.witness).unwrap().holds);
    }

    #[test]
    fn rejects_other_shapes() {
        let star = ColoredGraph::unweighted(vec![0; 4], &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(solve_mscs_path(&star).unwrap_err(), Error::WrongClass("path"));
    }
}
