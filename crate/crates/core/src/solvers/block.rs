//! List colouring of a single clique or cycle block.

use std::collections::BTreeMap;

use super::paths::cycle_lists;
use super::{Method, SolveResult, Stats};
use crate::decompose::{classify, BlockKind};
use crate::error::{input, Result};
use crate::graph::Graph;
use crate::lists::{Colour, ColourSet};

/// Solves a clique or cycle block given its `kind`.
pub fn solve_block(block: &Graph, kind: BlockKind, lists: &[ColourSet]) -> Result<SolveResult> {
    if lists.len() != block.n() {
        return input(format!("{} lists for {} vertices", lists.len(), block.n()));
    }
    let actual = classify(block);
    if kind == BlockKind::Other || actual != kind {
        return input(format!("block of kind {actual:?} cannot be solved as {kind:?}"));
    }
    let stats = Stats {
        block_solves: 1,
        ..Stats::default()
    };
    Ok(SolveResult::from_option(block_lists(block, kind, lists), Method::Block, stats))
}

pub(crate) fn block_lists(block: &Graph, kind: BlockKind, lists: &[ColourSet]) -> Option<Vec<Colour>> {
    match kind {
        BlockKind::Clique => clique_lists(lists),
        BlockKind::Cycle => cycle_lists(block, lists),
        BlockKind::Other => unreachable!("callers reject other blocks"),
    }
}

/// A clique is colourable iff vertices can be matched to distinct colours.
pub(crate) fn clique_lists(lists: &[ColourSet]) -> Option<Vec<Colour>> {
    let n = lists.len();
    let mut index: BTreeMap<Colour, usize> = BTreeMap::new();
    for l in lists {
        for c in l.iter() {
            let next = index.len();
            index.entry(c).or_insert(next);
        }
    }
    if index.len() < n {
        return None;
    }
    let palette: Vec<Colour> = {
        let mut p = vec![0; index.len()];
        for (&c, &i) in &index {
            p[i] = c;
        }
        p
    };
    let adj: Vec<Vec<usize>> = lists
        .iter()
        .map(|l| l.iter().map(|c| index[&c]).collect())
        .collect();
    let mut owner: Vec<Option<usize>> = vec![None; palette.len()];
    for v in 0..n {
        let mut seen = vec![false; palette.len()];
        if !augment(v, &adj, &mut owner, &mut seen) {
            return None;
        }
    }
    let mut out = vec![0; n];
    for (c, o) in owner.iter().enumerate() {
        if let Some(v) = o {
            out[*v] = palette[c];
        }
    }
    Some(out)
}

fn augment(v: usize, adj: &[Vec<usize>], owner: &mut [Option<usize>], seen: &mut [bool]) -> bool {
    for &c in &adj[v] {
        if seen[c] {
            continue;
        }
        seen[c] = true;
        if owner[c].is_none_or(|w| augment(w, adj, owner, seen)) {
            owner[c] = Some(v);
            return true;
        }
    }
    false
}
