use super::*;
use crate::families::*;
use crate::graph::Graph;
use crate::lists::{Colour, ColourSet, Instance, ListAssignment};
use crate::structure::{girth, Pattern};

fn lists(ls: &[&[Colour]]) -> ListAssignment {
    ListAssignment::new(ls.iter().map(|l| ColourSet::new(l.to_vec())).collect()).unwrap()
}

fn inst(g: Graph, ls: &[&[Colour]]) -> Instance {
    Instance::new(g, lists(ls)).unwrap()
}

fn gadget(kind: SyntheticGadget) -> GadgetSpec {
    kind.build().unwrap()
}

fn assert_verified(seed: &Instance, out: &Instance, cert: &ReductionCertificate) {
    let r = verify_reduction(seed, out, cert);
    assert!(r.passed(), "{:?}", r.items);
}

#[test]
fn girth_lift_on_triangle() {
    let seed = inst(cycle(3).unwrap(), &[&[1, 2], &[1, 2], &[1, 2, 3]]);
    let (out, cert) = build_girth_lift(&seed, 7).unwrap();
    assert_eq!(out.n(), 3 + 3 * 2);
    assert_eq!(girth(&out.graph), Some(9));
    assert_verified(&seed, &out, &cert);
}

#[test]
fn girth_lift_single_edge() {
    let seed = inst(path(2), &[&[1, 2], &[1, 3]]);
    let (out, cert) = build_girth_lift(&seed, 4).unwrap();
    assert_eq!(out.graph.m(), 3);
    assert_verified(&seed, &out, &cert);
}

#[test]
fn girth_lift_rejects_bad_seeds() {
    let two_threes = inst(path(2), &[&[1, 2, 3], &[1, 2, 3]]);
    assert!(build_girth_lift(&two_threes, 5).is_err());
    let odd = inst(path(2), &[&[1, 4], &[1, 2]]);
    assert!(build_girth_lift(&odd, 5).is_err());
}

#[test]
fn case1_follows_three_colourability() {
    let d = gadget(SyntheticGadget::Diamond);
    let (out, cert) = build_3reg_case1(&complete(3), &d, 3).unwrap();
    assert_eq!(cert.param("s").unwrap(), 1);
    assert_verified(&complete(3).into_seed(), &out, &cert);
    let (out, cert) = build_3reg_case1(&complete(4), &d, 3).unwrap();
    assert!(!crate::solvers::solve_exact(&out).unwrap().is_colourable());
    assert_verified(&complete(4).into_seed(), &out, &cert);
    let (_, cert) = build_3reg_case1(&complete(3), &d, 13).unwrap();
    assert!(cert.claims.contains(&Claim::SkeletonGirthAtLeast { bound: 21 }));
}

#[test]
fn case1_needs_uniform_lists() {
    assert!(build_3reg_case1(&complete(3), &gadget(SyntheticGadget::ThreeRegT2), 3).is_err());
}

trait IntoSeed {
    fn into_seed(self) -> Instance;
}

impl IntoSeed for Graph {
    fn into_seed(self) -> Instance {
        three_colouring_seed(&self)
    }
}

#[test]
fn case2_with_two_list_gadget() {
    let pair = CounterexamplePair::new(cycle(3).unwrap(), ListAssignment::uniform(3, ColourSet::palette(2)).unwrap())
        .unwrap();
    let g = make_gadget(&pair, (0, 1)).unwrap();
    let seed = inst(path(2), &[&[1, 2], &[1, 2]]);
    let (out, cert) = build_3reg_case2(&seed, &g, 3).unwrap();
    assert_eq!(cert.param("s").unwrap(), 4);
    // two bivertices, four copies of P3 each
    assert_eq!(out.n(), 2 + 2 * 4 * 3);
    assert_eq!(out.lists.get(0), &ColourSet::from([1, 2, 4]));
    assert_verified(&seed, &out, &cert);
}

#[test]
fn case2_leaves_trivertices_alone() {
    let seed = inst(cycle(3).unwrap(), &[&[1, 2, 3], &[1, 2, 3], &[1, 2, 3]]);
    let (out, cert) = build_3reg_case2(&seed, &gadget(SyntheticGadget::ThreeRegT2), 3).unwrap();
    assert_eq!(out, seed);
    assert_verified(&seed, &out, &cert);
}

#[test]
fn case2_t1_adds_pendant_copies() {
    let seed = inst(path(2), &[&[1, 2], &[1, 2]]);
    let g = gadget(SyntheticGadget::ThreeRegT1);
    let (out, cert) = build_3reg_case2(&seed, &g, 3).unwrap();
    assert_eq!(out.n(), 2 + 2 * g.n());
    assert!(cert.claims.contains(&Claim::ListRegularity { ell: 3 }));
    assert_verified(&seed, &out, &cert);
    assert!(build_3reg_case2(&seed, &gadget(SyntheticGadget::Diamond), 3).is_err());
}

#[test]
fn four_regular_all_modes() {
    let seeds = [
        inst(path(2), &[&[1, 2], &[1, 2]]),
        inst(path(3), &[&[1, 3], &[1, 2, 3], &[2, 3]]),
        inst(cycle(3).unwrap(), &[&[1, 2], &[1, 2], &[1, 2]]),
    ];
    for kind in [SyntheticGadget::FourRegT1, SyntheticGadget::FourRegT2, SyntheticGadget::FourRegT3] {
        let g = gadget(kind);
        for seed in &seeds {
            let (out, cert) = build_4reg_instance(seed, &g, 3).unwrap();
            assert!(out.lists.iter().all(|l| l.len() == 4));
            assert_verified(seed, &out, &cert);
        }
    }
}

#[test]
fn four_regular_t1_bivertex_lists() {
    let seed = inst(path(2), &[&[1, 2], &[1, 2]]);
    let (out, cert) = build_4reg_instance(&seed, &gadget(SyntheticGadget::FourRegT1), 3).unwrap();
    assert_eq!(out.lists.get(0), &ColourSet::from([1, 2, 4, 5]));
    let attached = cert
        .copies
        .iter()
        .filter(|c| c.mode == CopyMode::Attached { to: 0 })
        .count();
    assert_eq!(attached, 2);
}

#[test]
fn four_regular_t3_trivertex() {
    let seed = inst(Graph::empty(1), &[&[1, 2, 3]]);
    let (out, cert) = build_4reg_instance(&seed, &gadget(SyntheticGadget::FourRegT3), 3).unwrap();
    assert_eq!(out.lists.get(0), &ColourSet::from([1, 2, 3, 4]));
    assert_eq!(cert.copies.len(), 1);
    assert_eq!(cert.copies[0].mode, CopyMode::Identified { with: 0 });
    assert_eq!(cert.copies[0].t_set, ColourSet::from([1, 2, 3]));
    assert_verified(&seed, &out, &cert);
}

#[test]
fn four_regular_rejects_three_regular_gadgets() {
    let seed = inst(path(2), &[&[1, 2], &[1, 2]]);
    assert!(build_4reg_instance(&seed, &gadget(SyntheticGadget::ThreeRegT1), 3).is_err());
}

#[test]
fn butterfly_safe_on_c7() {
    let seed = inst(cycle(7).unwrap(), &[&[1, 2], &[1, 3], &[2, 3], &[1, 2], &[1, 3], &[2, 3], &[1, 2, 3]]);
    for kind in [SyntheticGadget::SparseT1, SyntheticGadget::SparseT2] {
        let (out, cert) = build_butterfly_safe(&seed, &gadget(kind), 5).unwrap();
        for p in [Pattern::Cycle(4), Pattern::Cycle(5), Pattern::Butterfly] {
            assert!(cert.claims.contains(&Claim::SubgraphFree { pattern: p }));
        }
        assert_verified(&seed, &out, &cert);
    }
}

#[test]
fn butterfly_safe_preconditions() {
    let c4 = inst(cycle(4).unwrap(), &[&[1, 2][..]; 4]);
    assert!(build_butterfly_safe(&c4, &gadget(SyntheticGadget::SparseT2), 5).is_err());
    let c7 = inst(cycle(7).unwrap(), &[&[1, 2][..]; 7]);
    assert!(build_butterfly_safe(&c7, &gadget(SyntheticGadget::ThreeRegT2), 5).is_err());
    assert!(build_butterfly_safe(&c7, &gadget(SyntheticGadget::SparseT2), 4).is_err());
}

#[test]
fn pendant_precolour_examples() {
    let (g, pre, cert) = build_pendant_precolour(&complete(3), 4).unwrap();
    assert_eq!(g.n(), 6);
    assert!(pre.assignment.values().all(|&c| c == 4));
    let out = Instance::precolouring_extension(g, pre).unwrap();
    assert!(crate::solvers::solve_exact(&out).unwrap().is_colourable());
    assert_verified(&complete(3).into_seed(), &out, &cert);

    let (g, pre, cert) = build_pendant_precolour(&complete(4), 4).unwrap();
    let out = Instance::precolouring_extension(g, pre).unwrap();
    assert!(!crate::solvers::solve_exact(&out).unwrap().is_colourable());
    assert_verified(&complete(4).into_seed(), &out, &cert);
    assert!(build_pendant_precolour(&complete(3), 3).is_err());
}

#[test]
fn pendant_clique_examples() {
    for (g, colourable) in [(complete(3), true), (complete(4), false)] {
        let (out, cert) = build_pendant_clique(&g, 4).unwrap();
        assert!(out.lists.iter().all(|l| l.len() == 4));
        assert_eq!(crate::solvers::solve_exact(&out).unwrap().is_colourable(), colourable);
        assert_verified(&g.into_seed(), &out, &cert);
    }
    assert!(build_pendant_clique(&star(5), 4).is_err());
}

#[test]
fn three_p1_examples() {
    let seed = inst(path(2), &[&[1, 2], &[1, 2]]);
    let (out, cert) = build_3p1_instance(&seed).unwrap();
    assert!(out.lists.iter().all(|l| l.len() == 3));
    assert!(cert.claims.contains(&Claim::Free3P1));
    assert_verified(&seed, &out, &cert);

    let seed = inst(cycle(3).unwrap(), &[&[1, 2][..]; 3]);
    let (out, cert) = build_3p1_instance(&seed).unwrap();
    assert!(!crate::solvers::solve_exact(&out).unwrap().is_colourable());
    assert_verified(&seed, &out, &cert);
    assert!(build_3p1_instance(&inst(path(2), &[&[1], &[1, 2]])).is_err());
}

#[test]
fn corrupted_gadget_list_is_caught() {
    let seed = inst(path(2), &[&[1, 2], &[1, 2]]);
    let (out, cert) = build_3reg_case2(&seed, &gadget(SyntheticGadget::ThreeRegT1), 3).unwrap();
    let mut ls = out.lists.clone().into_vec();
    let v = cert.copies[0].vertices[0];
    ls[v] = ls[v].without(ls[v].largest().unwrap()).union(&ColourSet::singleton(99));
    let bad = Instance::new(out.graph.clone(), ListAssignment::new(ls).unwrap()).unwrap();
    let r = verify_reduction(&seed, &bad, &cert);
    assert!(r.failed());
    assert!(matches!(r.outcome("reproducible"), Some(Outcome::Fail(_))));
}

#[test]
fn wrong_seed_fails_digest() {
    let seed = inst(path(2), &[&[1, 2], &[1, 2]]);
    let (out, cert) = build_3p1_instance(&seed).unwrap();
    let other = inst(path(2), &[&[1, 2], &[1, 3]]);
    let r = verify_reduction(&other, &out, &cert);
    assert!(matches!(r.outcome("seed-digest"), Some(Outcome::Fail(_))));
}

#[test]
fn tiny_budget_is_unverified_not_passed() {
    let seed = inst(cycle(3).unwrap(), &[&[1, 2, 3][..]; 3]);
    let (out, cert) = build_4reg_instance(&seed, &gadget(SyntheticGadget::FourRegT3), 3).unwrap();
    let r = verify_reduction_with_budget(&seed, &out, &cert, Some(1));
    assert!(!r.passed());
    assert!(matches!(r.outcome("equivalence"), Some(Outcome::Unverified(_))));
}

#[test]
fn builders_are_deterministic() {
    let seed = inst(path(3), &[&[1, 2], &[1, 2, 3], &[2, 3]]);
    let g = gadget(SyntheticGadget::FourRegT2);
    assert_eq!(build_4reg_instance(&seed, &g, 5).unwrap(), build_4reg_instance(&seed, &g, 5).unwrap());
}

#[test]
fn certificate_json_round_trip() {
    let seed = inst(path(2), &[&[1, 2], &[1, 2]]);
    let (_, cert) = build_3reg_case2(&seed, &gadget(SyntheticGadget::ThreeRegT2), 3).unwrap();
    let back = ReductionCertificate::from_json(&cert.to_json()).unwrap();
    assert_eq!(back, cert);
}
