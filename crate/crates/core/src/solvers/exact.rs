//! Exhaustive search: smallest-remaining-list branching, unit propagation,
//! and independent treatment of components that fall apart mid-search.

use super::{by_components, Method, SolveResult, Stats};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::lists::{Colour, ColourSet, Instance};

pub fn solve_exact(inst: &Instance) -> Result<SolveResult> {
    solve_exact_with_budget(inst, None)
}

/// As [`solve_exact`], failing with [`Error::BudgetExceeded`] once more than
/// `budget` branching nodes have been opened.
pub fn solve_exact_with_budget(inst: &Instance, budget: Option<u64>) -> Result<SolveResult> {
    let lists = inst.effective_lists();
    let mut stats = Stats::default();
    let colours = exact_lists(&inst.graph, &lists, budget, &mut stats)?;
    Ok(SolveResult::from_option(colours, Method::Exact, stats))
}

pub(crate) fn exact_lists(
    g: &Graph,
    lists: &[ColourSet],
    budget: Option<u64>,
    stats: &mut Stats,
) -> Result<Option<Vec<Colour>>> {
    by_components(g, lists, |h, sub| {
        let mut search = Search {
            g: h,
            lists: sub,
            colour: vec![None; h.n()],
            trail: Vec::new(),
            nodes: stats.nodes,
            budget,
            in_set: vec![false; h.n()],
        };
        let all: Vec<Vertex> = h.vertices().collect();
        let ok = search.solve(all)?;
        stats.nodes = search.nodes;
        Ok(ok.then(|| search.colour.iter().map(|c| c.expect("all coloured")).collect()))
    })
}

struct Search<'a> {
    g: &'a Graph,
    lists: &'a [ColourSet],
    colour: Vec<Option<Colour>>,
    trail: Vec<Vertex>,
    nodes: u64,
    budget: Option<u64>,
    in_set: Vec<bool>,
}

impl Search<'_> {
    fn available(&self, v: Vertex) -> impl Iterator<Item = Colour> + '_ {
        self.lists[v]
            .iter()
            .filter(move |&c| self.g.neighbours(v).iter().all(|&w| self.colour[w] != Some(c)))
    }

    fn assign(&mut self, v: Vertex, c: Colour) {
        self.colour[v] = Some(c);
        self.trail.push(v);
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let v = self.trail.pop().expect("trail above mark");
            self.colour[v] = None;
        }
    }

    /// Forces single-option vertices of `set`; `false` on a wipe-out.
    fn propagate(&mut self, set: &[Vertex]) -> bool {
        loop {
            let mut changed = false;
            for &v in set {
                if self.colour[v].is_some() {
                    continue;
                }
                let options = {
                    let mut it = self.available(v);
                    (it.next(), it.next())
                };
                match options {
                    (None, _) => return false,
                    (Some(c), None) => {
                        self.assign(v, c);
                        changed = true;
                    }
                    _ => {}
                }
            }
            if !changed {
                return true;
            }
        }
    }

    /// Connected components of the uncoloured part of `set`.
    fn split(&mut self, set: &[Vertex]) -> Vec<Vec<Vertex>> {
        let open: Vec<Vertex> = set.iter().copied().filter(|&v| self.colour[v].is_none()).collect();
        for &v in &open {
            self.in_set[v] = true;
        }
        let mut parts = Vec::new();
        for &s in &open {
            if !self.in_set[s] {
                continue;
            }
            self.in_set[s] = false;
            let mut part = vec![s];
            let mut i = 0;
            while i < part.len() {
                let u = part[i];
                i += 1;
                for &w in self.g.neighbours(u) {
                    if self.in_set[w] {
                        self.in_set[w] = false;
                        part.push(w);
                    }
                }
            }
            parts.push(part);
        }
        parts
    }

    /// Colours every uncoloured vertex of `set`, which is connected in the
    /// uncoloured subgraph. On failure all assignments made here are undone.
    fn solve(&mut self, set: Vec<Vertex>) -> Result<bool> {
        let mark = self.trail.len();
        if !self.propagate(&set) {
            self.undo(mark);
            return Ok(false);
        }
        let parts = self.split(&set);
        match parts.len() {
            0 => Ok(true),
            1 => {
                let part = parts.into_iter().next().expect("one part");
                let ok = self.branch(part)?;
                if !ok {
                    self.undo(mark);
                }
                Ok(ok)
            }
            _ => {
                for part in parts {
                    if !self.solve(part)? {
                        self.undo(mark);
                        return Ok(false);
                    }
                }
                Ok(true)
            }
        }
    }

    fn branch(&mut self, part: Vec<Vertex>) -> Result<bool> {
        let v = part
            .iter()
            .copied()
            .min_by_key(|&v| (self.available(v).count(), v))
            .expect("non-empty part");
        let options: Vec<Colour> = self.available(v).collect();
        for c in options {
            self.nodes += 1;
            if let Some(b) = self.budget {
                if self.nodes > b {
                    return Err(Error::BudgetExceeded(b));
                }
            }
            let mark = self.trail.len();
            self.assign(v, c);
            if self.solve(part.clone())? {
                return Ok(true);
            }
            self.undo(mark);
        }
        Ok(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::*;
    use crate::lists::{check_colouring, ListAssignment, Precolouring};

    fn uniform(g: Graph, k: Colour) -> Instance {
        Instance::uniform(g, ColourSet::palette(k)).unwrap()
    }

    #[test]
    fn chromatic_numbers() {
        assert!(!solve_exact(&uniform(complete(4), 3)).unwrap().is_colourable());
        assert!(solve_exact(&uniform(complete(4), 4)).unwrap().is_colourable());
        assert!(!solve_exact(&uniform(cycle(5).unwrap(), 2)).unwrap().is_colourable());
        assert!(solve_exact(&uniform(petersen(), 3)).unwrap().is_colourable());
        assert!(!solve_exact(&uniform(wheel(6).unwrap(), 3)).unwrap().is_colourable());
    }

    #[test]
    fn colourings_are_valid() {
        let inst = uniform(grid(4, 5), 2);
        let r = solve_exact(&inst).unwrap();
        assert!(check_colouring(&inst, r.colouring().unwrap()).unwrap());
    }

    #[test]
    fn k33_with_bad_two_lists() {
        let g = complete_bipartite(3, 3);
        let side = [[1, 2], [1, 3], [2, 3]];
        let lists = (0..6).map(|v| ColourSet::from(side[v % 3])).collect();
        let inst = Instance::new(g, ListAssignment::new(lists).unwrap()).unwrap();
        assert!(!solve_exact(&inst).unwrap().is_colourable());
    }

    #[test]
    fn precolouring_is_respected() {
        let pre = Precolouring::new(3, [(0, 1), (2, 2)].into_iter().collect());
        let inst = Instance::precolouring_extension(path(3), pre).unwrap();
        let r = solve_exact(&inst).unwrap();
        assert_eq!(r.colouring().unwrap().0, vec![1, 3, 2]);
    }

    #[test]
    fn budget_is_enforced() {
        let inst = uniform(complete(9), 8);
        assert_eq!(
            solve_exact_with_budget(&inst, Some(50)).unwrap_err(),
            Error::BudgetExceeded(50)
        );
    }

    #[test]
    fn disjoint_hard_pieces_do_not_multiply() {
        // Twenty copies of a 3-colourable piece next to one K4 that fails:
        // the failure is found without exploring combinations of the others.
        let mut g = copies(&petersen(), 20);
        g = g.disjoint_union(&complete(4));
        let r = solve_exact_with_budget(&uniform(g, 3), Some(10_000)).unwrap();
        assert!(!r.is_colourable());
    }
}
