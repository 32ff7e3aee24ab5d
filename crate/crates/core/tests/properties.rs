//! Randomized equivalence between the solvers and the exhaustive oracle.

use mscs_core::approx::two_approx_mscs_tree;
use mscs_core::blocks::BlockDecomposition;
use mscs_core::consistency::{verify_css, verify_scs};
use mscs_core::fast::{solve_mscs_cycle, solve_mscs_path};
use mscs_core::oracle::{brute_mcs, brute_mcss, brute_mscs};
use mscs_core::tree::solve_mscs_tree;
use mscs_core::ColoredGraph;
use proptest::prelude::*;

/// A random tree as a parent vector plus colors.
fn tree(max_n: usize, weighted: bool) -> impl Strategy<Value = ColoredGraph> {
    (1..=max_n)
        .prop_flat_map(move |n| {
            let parents: Vec<_> = (1..n).map(|v| 0..v).collect();
            let weights = prop::collection::vec(1u64..=if weighted { 4 } else { 1 }, n.saturating_sub(1));
            (parents, weights, prop::collection::vec(0u32..3, n))
        })
        .prop_map(move |(parents, weights, colors)| {
            let edges: Vec<_> = parents.iter().enumerate().map(|(i, &p)| (p, i + 1, weights[i])).collect();
            ColoredGraph::new(colors, &edges, weighted).unwrap()
        })
}

fn line(max_n: usize, closed: bool) -> impl Strategy<Value = ColoredGraph> {
    let min = if closed { 3 } else { 1 };
    prop::collection::vec(0u32..3, min..=max_n).prop_map(move |colors| {
        let n = colors.len();
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        if closed {
            edges.push((n - 1, 0));
        }
        ColoredGraph::unweighted(colors, &edges).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn tree_dp_is_optimal(g in tree(11, false)) {
        let r = solve_mscs_tree(&g).unwrap();
        prop_assert_eq!(r.size, brute_mscs(&g).unwrap().size);
        prop_assert!(verify_scs(&g, &r.witness).unwrap().holds);
    }

    #[test]
    fn weighted_tree_dp_is_optimal(g in tree(10, true)) {
        let r = solve_mscs_tree(&g).unwrap();
        prop_assert_eq!(r.size, brute_mscs(&g).unwrap().size);
        prop_assert!(verify_scs(&g, &r.witness).unwrap().holds);
    }

    #[test]
    fn path_and_cycle_solvers_are_optimal(p in line(14, false), c in line(14, true)) {
        prop_assert_eq!(solve_mscs_path(&p).unwrap().size, brute_mscs(&p).unwrap().size);
        let r = solve_mscs_cycle(&c).unwrap();
        prop_assert_eq!(r.size, brute_mscs(&c).unwrap().size);
        prop_assert!(verify_scs(&c, &r.witness).unwrap().holds);
    }

    #[test]
    fn problem_sizes_are_ordered(g in tree(9, false)) {
        let mcs = brute_mcs(&g).unwrap().size;
        let mcss = brute_mcss(&g).unwrap();
        let mscs = brute_mscs(&g).unwrap().size;
        prop_assert!(mcs <= mcss.size && mcss.size <= mscs);
        prop_assert!(verify_css(&g, &mcss.witness).unwrap().holds);
        let blocks = BlockDecomposition::new(&g).block_count();
        prop_assert!(mscs >= blocks.max(g.color_count()));
    }

    #[test]
    fn approximation_is_within_its_bound(g in tree(11, false)) {
        let b = BlockDecomposition::new(&g).block_count();
        let a = two_approx_mscs_tree(&g).unwrap().result;
        prop_assert!(verify_scs(&g, &a.witness).unwrap().holds);
        if b >= 2 {
            let opt = brute_mscs(&g).unwrap().size;
            prop_assert!(a.size <= 2 * b - 2 && a.size <= 2 * opt - 2);
        }
    }

    #[test]
    fn relabeling_preserves_the_optimum(g in tree(10, false), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut perm: Vec<usize> = (0..g.vertex_count()).collect();
        perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        let h = g.relabel(&perm).unwrap();
        prop_assert_eq!(solve_mscs_tree(&g).unwrap().size, solve_mscs_tree(&h).unwrap().size);
    }
}
