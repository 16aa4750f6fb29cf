//! Extending a precolouring with colours `{1..k}` when `Δ(G) <= k`.
//!
//! Deleting the precoloured set `W` and removing the precolours of
//! neighbours from each list leaves `|L(v)| >= deg_{G-W}(v)`, which is a
//! degree-list instance.

use super::degree::degree_lists;
use super::{Method, SolveResult, Stats};
use crate::error::{input, Result};
use crate::graph::{Graph, Vertex};
use crate::lists::{Colour, ColourSet, Precolouring};

pub fn solve_precolouring_extension(g: &Graph, pre: &Precolouring, k: Colour) -> Result<SolveResult> {
    if pre.k != k {
        return input(format!("precolouring uses palette {} but k = {k}", pre.k));
    }
    pre.validate(g)?;
    if g.max_degree() > k as usize {
        return input(format!("maximum degree {} exceeds k = {k}", g.max_degree()));
    }
    let palette = ColourSet::palette(k);
    let rest: Vec<Vertex> = g.vertices().filter(|&v| pre.get(v).is_none()).collect();
    let lists: Vec<ColourSet> = rest
        .iter()
        .map(|&v| {
            let used: ColourSet = g.neighbours(v).iter().filter_map(|&w| pre.get(w)).collect();
            palette.difference(&used)
        })
        .collect();
    let mut stats = Stats::default();
    let method = Method::PrecolouringExtension;
    if lists.iter().any(ColourSet::is_empty) {
        return Ok(SolveResult::from_option(None, method, stats));
    }
    let h = g.induced(&rest);
    let Some(cs) = degree_lists(&h, &lists, &mut stats)? else {
        return Ok(SolveResult::from_option(None, method, stats));
    };
    let mut out: Vec<Colour> = g.vertices().map(|v| pre.get(v).unwrap_or(0)).collect();
    for (i, &v) in rest.iter().enumerate() {
        out[v] = cs[i];
    }
    Ok(SolveResult::from_option(Some(out), method, stats))
}
