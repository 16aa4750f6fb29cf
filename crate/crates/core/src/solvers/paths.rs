//! Dynamic programming along paths and cycles.

use super::{by_components, Method, SolveResult, Stats};
use crate::error::{input, Result};
use crate::graph::{Graph, Vertex};
use crate::lists::{Colour, ColourSet, Instance};

pub fn solve_max_degree2(inst: &Instance) -> Result<SolveResult> {
    let g = &inst.graph;
    if g.max_degree() > 2 {
        return input(format!("maximum degree {} exceeds 2", g.max_degree()));
    }
    let lists = inst.effective_lists();
    let colours = by_components(g, &lists, |h, sub| Ok(component(h, sub)))?;
    Ok(SolveResult::from_option(colours, Method::MaxDegreeTwo, Stats::default()))
}

fn component(h: &Graph, lists: &[ColourSet]) -> Option<Vec<Colour>> {
    if h.n() >= 3 && h.vertices().all(|v| h.degree(v) == 2) {
        return cycle_lists(h, lists);
    }
    let start = h.vertices().find(|&v| h.degree(v) <= 1).unwrap_or(0);
    let order = walk(h, start);
    let ordered: Vec<&ColourSet> = order.iter().map(|&v| &lists[v]).collect();
    let cs = path_dp(&ordered, None, None)?;
    Some(scatter(h.n(), &order, &cs))
}

/// Vertices of a path or cycle in walking order from `start`.
pub(crate) fn walk(h: &Graph, start: Vertex) -> Vec<Vertex> {
    let mut order = vec![start];
    let mut seen = vec![false; h.n()];
    seen[start] = true;
    while let Some(&w) = h
        .neighbours(*order.last().expect("non-empty"))
        .iter()
        .find(|&&w| !seen[w])
    {
        seen[w] = true;
        order.push(w);
    }
    order
}

fn scatter(n: usize, order: &[Vertex], cs: &[Colour]) -> Vec<Colour> {
    let mut out = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        out[v] = cs[i];
    }
    out
}

/// Colours a cycle `h` (2-regular, connected) from `lists`.
pub(crate) fn cycle_lists(h: &Graph, lists: &[ColourSet]) -> Option<Vec<Colour>> {
    let start = h
        .vertices()
        .min_by_key(|&v| (lists[v].len(), v))
        .expect("cycle is non-empty");
    let order = walk(h, start);
    let ordered: Vec<&ColourSet> = order.iter().map(|&v| &lists[v]).collect();
    for c in lists[start].iter() {
        if let Some(cs) = path_dp(&ordered, Some(c), Some(c)) {
            return Some(scatter(h.n(), &order, &cs));
        }
    }
    None
}

/// Colours the path `lists[0] - lists[1] - ...`, optionally fixing the
/// first colour and forbidding one colour on the last vertex.
///
/// `reach[i]` holds the colours of vertex `i` that extend some valid
/// colouring of the prefix.
pub(crate) fn path_dp(
    lists: &[&ColourSet],
    first: Option<Colour>,
    last_forbidden: Option<Colour>,
) -> Option<Vec<Colour>> {
    let len = lists.len();
    if len == 0 {
        return Some(Vec::new());
    }
    let mut reach: Vec<ColourSet> = Vec::with_capacity(len);
    for (i, l) in lists.iter().enumerate() {
        let mut s = if i == 0 {
            match first {
                Some(c) if l.contains(c) => ColourSet::singleton(c),
                Some(_) => ColourSet::default(),
                None => (*l).clone(),
            }
        } else {
            let prev = &reach[i - 1];
            if prev.len() >= 2 {
                (*l).clone()
            } else {
                l.difference(prev)
            }
        };
        if i == len - 1 {
            if let Some(f) = last_forbidden {
                s = s.without(f);
            }
        }
        if s.is_empty() {
            return None;
        }
        reach.push(s);
    }
    let mut out = vec![0; len];
    out[len - 1] = reach[len - 1].smallest().expect("non-empty");
    for i in (0..len - 1).rev() {
        out[i] = reach[i]
            .iter()
            .find(|&c| c != out[i + 1])
            .expect("reachable colour has a compatible predecessor");
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::*;
    use crate::lists::{check_colouring, ListAssignment};

    fn inst(g: Graph, lists: Vec<ColourSet>) -> Instance {
        Instance::new(g, ListAssignment::new(lists).unwrap()).unwrap()
    }

    #[test]
    fn odd_cycle_needs_three() {
        let g = cycle(7).unwrap();
        let two = Instance::uniform(g.clone(), ColourSet::palette(2)).unwrap();
        assert!(!solve_max_degree2(&two).unwrap().is_colourable());
        let three = Instance::uniform(g, ColourSet::palette(3)).unwrap();
        let r = solve_max_degree2(&three).unwrap();
        assert!(check_colouring(&three, r.colouring().unwrap()).unwrap());
    }

    #[test]
    fn forced_path() {
        let i = inst(
            path(4),
            vec![
                ColourSet::from([1]),
                ColourSet::from([1, 2]),
                ColourSet::from([2, 3]),
                ColourSet::from([3]),
            ],
        );
        assert!(!solve_max_degree2(&i).unwrap().is_colourable());
    }

    #[test]
    fn mixed_components() {
        let g = path(3).disjoint_union(&cycle(4).unwrap()).disjoint_union(&Graph::empty(1));
        let i = Instance::uniform(g, ColourSet::palette(2)).unwrap();
        let r = solve_max_degree2(&i).unwrap();
        assert!(check_colouring(&i, r.colouring().unwrap()).unwrap());
    }

    #[test]
    fn rejects_degree_three() {
        let i = Instance::uniform(star(3), ColourSet::palette(2)).unwrap();
        assert!(solve_max_degree2(&i).is_err());
    }
}
