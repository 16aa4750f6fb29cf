//! Block peeling: leaf blocks of the block-cut tree shrink the list of
//! their cut vertex to the colours that still extend into the block.

use super::block::block_lists;
use super::exact::exact_lists;
use super::{by_components, Method, SolveResult, Stats};
use crate::decompose::{blocks, classify, is_gallai_tree, BlockKind};
use crate::error::{input, Error, Result};
use crate::graph::{Graph, Vertex};
use crate::lists::{Colour, ColourSet, Instance};

/// Colours one block given lists for its vertices.
pub trait BlockSolver {
    fn solve(&self, block: &Graph, lists: &[ColourSet], stats: &mut Stats) -> Result<Option<Vec<Colour>>>;
}

/// Cliques by matching, cycles by path DP; any other block is an error.
#[derive(Clone, Copy, Debug, Default)]
pub struct GallaiBlocks;

impl BlockSolver for GallaiBlocks {
    fn solve(&self, block: &Graph, lists: &[ColourSet], stats: &mut Stats) -> Result<Option<Vec<Colour>>> {
        stats.block_solves += 1;
        match classify(block) {
            BlockKind::Other => input("block is neither a clique nor a cycle"),
            kind => Ok(block_lists(block, kind, lists)),
        }
    }
}

/// Any block, by exhaustive search.
#[derive(Clone, Copy, Debug, Default)]
pub struct ExactBlocks;

impl BlockSolver for ExactBlocks {
    fn solve(&self, block: &Graph, lists: &[ColourSet], stats: &mut Stats) -> Result<Option<Vec<Colour>>> {
        stats.block_solves += 1;
        exact_lists(block, lists, None, stats)
    }
}

/// Block peeling on a connected instance.
pub fn solve_block_peeling(inst: &Instance, solver: &dyn BlockSolver) -> Result<SolveResult> {
    if !inst.graph.is_connected() {
        return input("block peeling needs a connected graph; split components first");
    }
    let mut stats = Stats::default();
    let colours = peel_blocks(&inst.graph, &inst.effective_lists(), solver, &mut stats)?;
    Ok(SolveResult::from_option(colours, Method::BlockPeeling, stats))
}

/// Block peeling on every component; each must be a Gallai tree.
pub fn solve_gallai_tree(inst: &Instance) -> Result<SolveResult> {
    let mut stats = Stats::default();
    let colours = by_components(&inst.graph, &inst.effective_lists(), |h, sub| {
        if !is_gallai_tree(h)?.is_gallai_tree {
            return input("a component has a block that is neither a clique nor a cycle");
        }
        peel_blocks(h, sub, &GallaiBlocks, &mut stats)
    })?;
    Ok(SolveResult::from_option(colours, Method::GallaiTree, stats))
}

struct Piece {
    vertices: Vec<Vertex>,
    graph: Graph,
    /// Local index of the cut vertex towards the root, if any.
    attach: Option<usize>,
}

/// `g` must be connected.
pub(crate) fn peel_blocks(
    g: &Graph,
    lists: &[ColourSet],
    solver: &dyn BlockSolver,
    stats: &mut Stats,
) -> Result<Option<Vec<Colour>>> {
    if g.n() == 0 {
        return Ok(Some(Vec::new()));
    }
    let d = blocks(g);
    let nb = d.blocks.len();

    // Root the block-cut tree at block 0 and list blocks in BFS order.
    let mut blocks_of: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    for &(b, v) in &d.tree_edges {
        blocks_of[v].push(b);
    }
    let mut attach: Vec<Option<Vertex>> = vec![None; nb];
    let mut seen = vec![false; nb];
    let mut order = vec![0];
    seen[0] = true;
    let mut head = 0;
    while head < order.len() {
        let b = order[head];
        head += 1;
        for v in d.cuts_of(b) {
            if Some(v) == attach[b] {
                continue;
            }
            for &c in &blocks_of[v] {
                if !seen[c] {
                    seen[c] = true;
                    attach[c] = Some(v);
                    order.push(c);
                }
            }
        }
    }
    if order.len() != nb {
        return input("block peeling needs a connected graph");
    }

    let pieces: Vec<Piece> = (0..nb)
        .map(|b| {
            let vertices = d.blocks[b].clone();
            let graph = g.induced(&vertices);
            let attach = attach[b].map(|u| vertices.binary_search(&u).expect("cut vertex in block"));
            Piece { vertices, graph, attach }
        })
        .collect();

    let mut cur: Vec<ColourSet> = lists.to_vec();
    let local = |p: &Piece, cur: &[ColourSet]| -> Vec<ColourSet> {
        p.vertices.iter().map(|&v| cur[v].clone()).collect()
    };

    for &b in order.iter().skip(1).rev() {
        let p = &pieces[b];
        let a = p.attach.expect("non-root block has a parent cut vertex");
        let u = p.vertices[a];
        let mut sub = local(p, &cur);
        let mut keep = Vec::new();
        for i in cur[u].iter() {
            sub[a] = ColourSet::singleton(i);
            if solver.solve(&p.graph, &sub, stats)?.is_some() {
                keep.push(i);
            }
        }
        if keep.is_empty() {
            return Ok(None);
        }
        cur[u] = ColourSet::new(keep);
    }

    let mut colour: Vec<Option<Colour>> = vec![None; g.n()];
    for &b in &order {
        let p = &pieces[b];
        let mut sub = local(p, &cur);
        if let Some(a) = p.attach {
            let c = colour[p.vertices[a]].expect("parent block coloured first");
            sub[a] = ColourSet::singleton(c);
        }
        match solver.solve(&p.graph, &sub, stats)? {
            Some(cs) => {
                for (i, &v) in p.vertices.iter().enumerate() {
                    colour[v] = Some(cs[i]);
                }
            }
            None if b == 0 => return Ok(None),
            None => {
                return Err(Error::Consistency(format!(
                    "block {b} rejected a colour that survived peeling"
                )))
            }
        }
    }
    Ok(Some(colour.into_iter().map(|c| c.expect("every block coloured")).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::*;
    use crate::lists::{check_colouring, ListAssignment};
    use crate::solvers::solve_exact;

    fn inst(g: Graph, lists: Vec<ColourSet>) -> Instance {
        Instance::new(g, ListAssignment::new(lists).unwrap()).unwrap()
    }

    #[test]
    fn butterfly_with_forced_centre() {
        // Centre 0 can only be 1 or 2; the left triangle forbids 1, the
        // right one forbids 2.
        let lists = vec![
            ColourSet::from([1, 2]),
            ColourSet::from([1, 3]),
            ColourSet::from([3]),
            ColourSet::from([2, 4]),
            ColourSet::from([4]),
        ];
        let i = inst(butterfly(), lists);
        assert!(!solve_gallai_tree(&i).unwrap().is_colourable());
        assert!(!solve_exact(&i).unwrap().is_colourable());
    }

    #[test]
    fn chain_of_blocks() {
        // Triangle, C4 and K4 glued in a chain.
        let g = Graph::from_edges(
            9,
            [
                (0, 1), (1, 2), (0, 2),
                (2, 3), (3, 4), (4, 5), (5, 2),
                (5, 6), (5, 7), (5, 8), (6, 7), (6, 8), (7, 8),
            ],
        )
        .unwrap();
        let i = Instance::uniform(g, ColourSet::palette(4)).unwrap();
        let r = solve_gallai_tree(&i).unwrap();
        assert!(check_colouring(&i, r.colouring().unwrap()).unwrap());
    }

    #[test]
    fn non_gallai_is_rejected() {
        let i = Instance::uniform(diamond(), ColourSet::palette(3)).unwrap();
        assert!(solve_gallai_tree(&i).is_err());
        let r = solve_block_peeling(&i, &ExactBlocks).unwrap();
        assert!(r.is_colourable());
    }

    #[test]
    fn disconnected_peeling_is_rejected() {
        let i = Instance::uniform(Graph::empty(2), ColourSet::palette(1)).unwrap();
        assert!(solve_block_peeling(&i, &GallaiBlocks).is_err());
        assert!(solve_gallai_tree(&i).unwrap().is_colourable());
    }
}
