//! Peeling vertices whose degree is below their list size.
//!
//! A vertex with fewer neighbours than colours can always be coloured
//! last, so removing it preserves colourability. Removal is repeated on the
//! lowest-indexed qualifying vertex until none is left; the log records
//! enough to put the removed vertices back greedily in reverse order.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::error::{input, Error, Result};
use crate::graph::{Graph, Vertex};
use crate::lists::{check_colouring, ColourSet, Colouring, Instance, ListAssignment};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeelStep {
    pub vertex: Vertex,
    /// Neighbours still present when `vertex` was removed.
    pub neighbours: Vec<Vertex>,
    pub list: ColourSet,
}

/// Removal history in original vertex indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeelLog {
    n: usize,
    kept: Vec<Vertex>,
    steps: Vec<PeelStep>,
}

impl PeelLog {
    pub fn steps(&self) -> &[PeelStep] {
        &self.steps
    }

    /// Original index of every kernel vertex.
    pub fn kept(&self) -> &[Vertex] {
        &self.kept
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Extends a colouring of the kernel to the original vertex set by
    /// colouring removed vertices in reverse order with their smallest
    /// free list colour.
    pub fn restore(&self, kernel: &Colouring) -> Result<Colouring> {
        if kernel.len() != self.kept.len() {
            return input(format!(
                "kernel colouring covers {} vertices, kernel has {}",
                kernel.len(),
                self.kept.len()
            ));
        }
        let mut colour = vec![None; self.n];
        for (i, &v) in self.kept.iter().enumerate() {
            colour[v] = Some(kernel.get(i));
        }
        for step in self.steps.iter().rev() {
            let used: Vec<_> = step.neighbours.iter().filter_map(|&w| colour[w]).collect();
            let c = step
                .list
                .iter()
                .find(|c| !used.contains(c))
                .ok_or_else(|| {
                    Error::Input(format!(
                        "no free colour for peeled vertex {}; kernel colouring is invalid",
                        step.vertex
                    ))
                })?;
            colour[step.vertex] = Some(c);
        }
        Ok(Colouring(
            colour
                .into_iter()
                .map(|c| c.expect("every vertex is kept or peeled"))
                .collect(),
        ))
    }
}

/// The kernel left after peeling, with its log.
#[derive(Clone, Debug)]
pub struct Peeled {
    pub kernel: Instance,
    pub log: PeelLog,
}

impl Peeled {
    /// Validates `kernel` against the kernel instance, then restores.
    pub fn restore(&self, kernel: &Colouring) -> Result<Colouring> {
        if !check_colouring(&self.kernel, kernel)? {
            return input("kernel colouring does not respect the kernel instance");
        }
        self.log.restore(kernel)
    }
}

/// Removes, lowest index first, every vertex with `degree < |list|`.
///
/// Empty lists never qualify. Returns the kept vertices (sorted) and the
/// removal steps.
pub(crate) fn peel_lists(g: &Graph, lists: &[ColourSet]) -> (Vec<Vertex>, Vec<PeelStep>) {
    let n = g.n();
    let mut deg: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut alive = vec![true; n];
    let mut heap: BinaryHeap<Reverse<Vertex>> = g
        .vertices()
        .filter(|&v| deg[v] < lists[v].len())
        .map(Reverse)
        .collect();
    let mut steps = Vec::new();
    while let Some(Reverse(v)) = heap.pop() {
        if !alive[v] {
            continue;
        }
        alive[v] = false;
        let neighbours: Vec<Vertex> = g.neighbours(v).iter().copied().filter(|&w| alive[w]).collect();
        for &w in &neighbours {
            let qualified = deg[w] < lists[w].len();
            deg[w] -= 1;
            if !qualified && deg[w] < lists[w].len() {
                heap.push(Reverse(w));
            }
        }
        steps.push(PeelStep {
            vertex: v,
            neighbours,
            list: lists[v].clone(),
        });
    }
    let kept = g.vertices().filter(|&v| alive[v]).collect();
    (kept, steps)
}

/// Peels a list instance down to its kernel, where every remaining vertex
/// has `|L(u)| <= deg(u)`.
pub fn peel_reducible(inst: &Instance) -> Result<Peeled> {
    if inst.precolouring.is_some() {
        return input("peeling applies to list instances without a precolouring");
    }
    let (kept, steps) = peel_lists(&inst.graph, inst.lists.as_slice());
    let graph = inst.graph.induced(&kept);
    let lists = ListAssignment::new(kept.iter().map(|&v| inst.lists.get(v).clone()).collect())?;
    Ok(Peeled {
        kernel: Instance::new(graph, lists)?,
        log: PeelLog {
            n: inst.n(),
            kept,
            steps,
        },
    })
}
