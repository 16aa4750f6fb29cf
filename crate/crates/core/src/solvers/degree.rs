//! Lists at least as large as degrees.
//!
//! After peeling every kernel vertex has `|L(u)| = deg(u)`. Gallai-tree
//! components go to block peeling; the rest are always colourable and are
//! coloured constructively by creating a vertex with spare colours and
//! colouring greedily towards it.

use super::exact::exact_lists;
use super::peeling::{peel_blocks, GallaiBlocks};
use super::{by_components, free_colour, Method, SolveResult, Stats};
use crate::decompose::is_gallai_tree;
use crate::error::{input, Result};
use crate::graph::{Graph, Vertex};
use crate::lists::{Colour, ColourSet, Instance};
use crate::peel::peel_lists;

pub fn solve_degree_lists(inst: &Instance) -> Result<SolveResult> {
    let lists = inst.effective_lists();
    let g = &inst.graph;
    let mut stats = Stats::default();
    if lists.iter().any(ColourSet::is_empty) {
        return Ok(SolveResult::from_option(None, Method::DegreeLists, stats));
    }
    if let Some(v) = g.vertices().find(|&v| lists[v].len() < g.degree(v)) {
        return input(format!(
            "vertex {v} has {} colours but degree {}",
            lists[v].len(),
            g.degree(v)
        ));
    }
    let colours = degree_lists(g, &lists, &mut stats)?;
    Ok(SolveResult::from_option(colours, Method::DegreeLists, stats))
}

/// Requires `|L(u)| >= deg(u)` everywhere.
pub(crate) fn degree_lists(g: &Graph, lists: &[ColourSet], stats: &mut Stats) -> Result<Option<Vec<Colour>>> {
    let (kept, steps) = peel_lists(g, lists);
    let kernel = g.induced(&kept);
    let kernel_lists: Vec<ColourSet> = kept.iter().map(|&v| lists[v].clone()).collect();
    let solved = by_components(&kernel, &kernel_lists, |h, sub| {
        if is_gallai_tree(h)?.is_gallai_tree {
            return peel_blocks(h, sub, &GallaiBlocks, stats);
        }
        if let Some(cs) = constructive(h, sub) {
            return Ok(Some(cs));
        }
        stats.fallback_components += 1;
        exact_lists(h, sub, None, stats)
    })?;
    let Some(kernel_colours) = solved else {
        return Ok(None);
    };
    let mut colour: Vec<Option<Colour>> = vec![None; g.n()];
    for (i, &v) in kept.iter().enumerate() {
        colour[v] = Some(kernel_colours[i]);
    }
    for step in steps.iter().rev() {
        colour[step.vertex] = free_colour(g, step.vertex, &step.list, &colour);
    }
    Ok(Some(colour.into_iter().map(|c| c.expect("peeled vertex always has a free colour")).collect()))
}

/// Tries, in order: a vertex that already has spare colours; one vertex
/// coloured so each remaining component gains spare colours; two
/// non-adjacent vertices with a common neighbour given the same colour.
pub(crate) fn constructive(g: &Graph, lists: &[ColourSet]) -> Option<Vec<Colour>> {
    let n = g.n();
    let empty = vec![None; n];
    if let Some(cs) = extend_with_slack(g, lists, &empty) {
        return Some(cs);
    }
    let mut partial = empty;
    for v in g.vertices() {
        for c in lists[v].iter() {
            partial[v] = Some(c);
            if let Some(cs) = extend_with_slack(g, lists, &partial) {
                return Some(cs);
            }
        }
        partial[v] = None;
    }
    for x in g.vertices() {
        let ns = g.neighbours(x);
        for (i, &y) in ns.iter().enumerate() {
            for &z in &ns[i + 1..] {
                if g.has_edge(y, z) {
                    continue;
                }
                for c in lists[y].intersection(&lists[z]).iter() {
                    partial[y] = Some(c);
                    partial[z] = Some(c);
                    if let Some(cs) = extend_with_slack(g, lists, &partial) {
                        return Some(cs);
                    }
                }
                partial[y] = None;
                partial[z] = None;
            }
        }
    }
    None
}

/// Extends `partial` (which must be proper) when every component of the
/// uncoloured part contains a vertex with more free colours than
/// uncoloured neighbours: such a vertex is coloured last, the rest in
/// reverse BFS order from it.
pub(crate) fn extend_with_slack(g: &Graph, lists: &[ColourSet], partial: &[Option<Colour>]) -> Option<Vec<Colour>> {
    let n = g.n();
    let mut colour = partial.to_vec();
    let open: Vec<bool> = colour.iter().map(Option::is_none).collect();
    let free = |v: Vertex, colour: &[Option<Colour>]| {
        lists[v]
            .iter()
            .filter(|&c| g.neighbours(v).iter().all(|&w| colour[w] != Some(c)))
            .count()
    };
    let open_degree = |v: Vertex| g.neighbours(v).iter().filter(|&&w| open[w]).count();
    let mut done = vec![false; n];
    for s in g.vertices() {
        if !open[s] || done[s] {
            continue;
        }
        let comp = g.bfs_order(s, &open);
        for &(v, _) in &comp {
            done[v] = true;
        }
        let root = comp
            .iter()
            .map(|&(v, _)| v)
            .filter(|&v| free(v, &colour) > open_degree(v))
            .min()?;
        for &(v, _) in g.bfs_order(root, &open).iter().rev() {
            colour[v] = Some(free_colour(g, v, &lists[v], &colour)?);
        }
    }
    colour.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::*;
    use crate::lists::{check_colouring, ListAssignment};
    use crate::solvers::solve_exact;

    fn degree_instance(g: Graph, pick: impl Fn(Vertex, usize) -> Vec<Colour>) -> Instance {
        let lists = g.vertices().map(|v| ColourSet::new(pick(v, g.degree(v)))).collect();
        Instance::new(g, ListAssignment::new(lists).unwrap()).unwrap()
    }

    #[test]
    fn regular_non_gallai_graphs_are_coloured() {
        for g in [petersen(), complete_bipartite(3, 3), cycle(6).unwrap().disjoint_union(&complete(4))] {
            let d = g.max_degree() as Colour;
            let i = Instance::uniform(g, ColourSet::palette(d)).unwrap();
            let r = solve_degree_lists(&i).unwrap();
            let verdict = solve_exact(&i).unwrap().is_colourable();
            assert_eq!(r.is_colourable(), verdict);
            if let Some(c) = r.colouring() {
                assert!(check_colouring(&i, c).unwrap());
            }
        }
    }

    #[test]
    fn wheel_degree_lists() {
        let i = degree_instance(wheel(6).unwrap(), |v, d| (1..=d as Colour).map(|c| c + v as Colour % 2).collect());
        let r = solve_degree_lists(&i).unwrap();
        assert!(check_colouring(&i, r.colouring().unwrap()).unwrap());
        assert_eq!(r.stats.fallback_components, 0);
    }

    #[test]
    fn gallai_kernel_can_fail() {
        let i = Instance::uniform(complete(4), ColourSet::palette(3)).unwrap();
        assert!(!solve_degree_lists(&i).unwrap().is_colourable());
    }

    #[test]
    fn short_lists_are_rejected() {
        let i = Instance::uniform(complete(4), ColourSet::palette(2)).unwrap();
        assert!(solve_degree_lists(&i).is_err());
    }

    #[test]
    fn slack_extension_needs_a_root_per_component() {
        let g = cycle(4).unwrap();
        let lists = vec![ColourSet::palette(2); 4];
        assert!(extend_with_slack(&g, &lists, &[None; 4]).is_none());
        let mut bigger = lists.clone();
        bigger[2] = ColourSet::palette(3);
        let cs = extend_with_slack(&g, &bigger, &[None; 4]).unwrap();
        assert!(g.edges().all(|(u, v)| cs[u] != cs[v]));
    }
}
