mod common;

use common::*;
use listcol::choosability::is_choosable;
use listcol::io::{parse_instance, write_instance};
use listcol::solvers::*;
use listcol::{check_colouring, ColourSet, Graph, Instance};
use proptest::prelude::*;
use rand::Rng;

fn agrees(inst: &Instance, res: &SolveResult) -> bool {
    match res.colouring() {
        Some(c) => check_colouring(inst, c).unwrap(),
        None => !brute_instance(inst),
    }
}

fn random_instance(seed: u64, n: usize, p: f64, universe: u32, sizes: (usize, usize)) -> Instance {
    let mut r = rng(seed);
    let g = random_graph(&mut r, n, p);
    let lists = (0..n)
        .map(|_| {
            let k = r.gen_range(sizes.0..=sizes.1);
            random_list(&mut r, universe, k)
        })
        .collect();
    instance(&g, lists)
}

#[test]
fn catalogue_sizes() {
    let counts: Vec<usize> = (1..=7).map(|n| all_graphs(n).len()).collect();
    assert_eq!(counts, [1, 2, 4, 11, 34, 156, 1044]);
    assert_eq!(connected_graphs(6).len(), 143);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn exact_matches_brute_force(seed in any::<u64>(), n in 1usize..=9, p in 0.1f64..0.9) {
        let inst = random_instance(seed, n, p, 4, (1, 4));
        let res = solve_exact(&inst).unwrap();
        prop_assert!(agrees(&inst, &res));
        prop_assert_eq!(res.is_colourable(), brute_instance(&inst));
    }

    #[test]
    fn dispatch_matches_brute_force(seed in any::<u64>(), n in 1usize..=9, p in 0.1f64..0.7) {
        let inst = random_instance(seed, n, p, 4, (1, 4));
        let (_, res) = classify_and_solve(&inst).unwrap();
        prop_assert!(agrees(&inst, &res));
        prop_assert_eq!(res.is_colourable(), brute_instance(&inst));
    }

    #[test]
    fn two_lists_match_brute_force(seed in any::<u64>(), n in 1usize..=10, p in 0.05f64..0.6) {
        let inst = random_instance(seed, n, p, 4, (1, 2));
        let res = solve_2list(&inst).unwrap();
        prop_assert!(agrees(&inst, &res));
        prop_assert_eq!(res.is_colourable(), brute_instance(&inst));
    }

    #[test]
    fn degree_two_matches_brute_force(seed in any::<u64>(), n in 1usize..=10, universe in 2u32..=4) {
        let mut r = rng(seed);
        let g = random_connected(&mut r, n, 2, n);
        let lists = (0..n).map(|_| { let k = r.gen_range(1..=3); random_list(&mut r, universe.max(3), k) }).collect();
        let inst = instance(&g, lists);
        let res = solve_max_degree2(&inst).unwrap();
        prop_assert!(agrees(&inst, &res));
        prop_assert_eq!(res.is_colourable(), brute_instance(&inst));
    }

    #[test]
    fn gallai_trees_match_brute_force(seed in any::<u64>(), blocks in 1usize..=4) {
        let mut r = rng(seed);
        let g = random_gallai_tree(&mut r, blocks);
        let lists = g.vertices().map(|v| {
            let k = r.gen_range(1..=g.degree(v).max(1));
            random_list(&mut r, 4.max(k as u32), k)
        }).collect();
        let inst = instance(&g, lists);
        let res = solve_gallai_tree(&inst).unwrap();
        prop_assert!(agrees(&inst, &res));
        prop_assert_eq!(res.is_colourable(), brute_instance(&inst));
    }

    #[test]
    fn degree_lists_match_brute_force(seed in any::<u64>(), n in 1usize..=10, p in 0.1f64..0.7) {
        let mut r = rng(seed);
        let g = random_graph(&mut r, n, p);
        let lists = g.vertices().map(|v| {
            let k = g.degree(v).max(1) + r.gen_range(0..=1);
            random_list(&mut r, (k as u32 + 2).max(4), k)
        }).collect();
        let inst = instance(&g, lists);
        let res = solve_degree_lists(&inst).unwrap();
        prop_assert!(agrees(&inst, &res));
        prop_assert_eq!(res.is_colourable(), brute_instance(&inst));
    }

    #[test]
    fn precolouring_matches_brute_force(seed in any::<u64>(), n in 1usize..=10, k in 3u32..=5, q in 0.0f64..0.5) {
        let mut r = rng(seed);
        let g = random_connected(&mut r, n, k as usize, 2 * n);
        let pre = random_precolouring(&mut r, &g, k, q);
        let res = solve_precolouring_extension(&g, &pre, k).unwrap();
        let inst = Instance::precolouring_extension(g, pre).unwrap();
        prop_assert!(agrees(&inst, &res));
        prop_assert_eq!(res.is_colourable(), brute_instance(&inst));
    }

    #[test]
    fn instance_text_round_trips(seed in any::<u64>(), n in 1usize..=12, p in 0.0f64..0.8) {
        let inst = random_instance(seed, n, p, 9, (1, 5));
        let back = parse_instance(&write_instance(&inst)).unwrap();
        prop_assert_eq!(back, inst);
    }
}

/// ℓ-choosability by trying every ℓ-subset of `1..=universe` at every
/// vertex.
fn brute_choosable(g: &Graph, ell: usize, universe: u32) -> bool {
    let options = vec![subsets(universe, ell); g.n()];
    let mut ok = true;
    each_assignment(&options, |lists| {
        if ok && !brute_colourable(g, lists) {
            ok = false;
        }
    });
    ok
}

#[test]
fn choosability_matches_brute_force_on_small_graphs() {
    for g in connected_graphs(4) {
        let universe = 2 * g.n() as u32;
        assert_eq!(
            is_choosable(&g, 2, None).unwrap().is_choosable(),
            brute_choosable(&g, 2, universe),
            "{g:?}"
        );
    }
    for g in connected_graphs(3) {
        assert_eq!(
            is_choosable(&g, 3, None).unwrap().is_choosable(),
            brute_choosable(&g, 3, 3 * g.n() as u32),
            "{g:?}"
        );
    }
}

#[test]
fn witnesses_are_infeasible_regular_assignments() {
    for g in connected_graphs(5) {
        let res = is_choosable(&g, 2, None).unwrap();
        if let Some(w) = res.witness() {
            assert!(w.is_regular(2));
            assert!(!brute_colourable(&g, w.as_slice()));
        }
    }
}

#[test]
fn palette_lists_reduce_to_colouring() {
    // with uniform lists {1..k}, colourability is ordinary k-colouring
    for g in connected_graphs(5) {
        for k in 1..=3 {
            let inst = Instance::uniform(g.clone(), ColourSet::palette(k)).unwrap();
            assert_eq!(solve_exact(&inst).unwrap().is_colourable(), brute_instance(&inst));
        }
    }
}
