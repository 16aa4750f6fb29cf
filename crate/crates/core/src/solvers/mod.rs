//! The exact oracle, the polynomial special-case algorithms and the
//! dispatcher that picks between them.

mod block;
mod degree;
mod dispatch;
mod exact;
mod paths;
mod peeling;
mod precolour;
mod two_list;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::{Graph, Vertex};
use crate::lists::{Colour, ColourSet, Colouring};

pub use block::solve_block;
pub use degree::solve_degree_lists;
pub use dispatch::{classify, classify_and_solve, Classification, DispatchReport, Features};
pub use exact::{solve_exact, solve_exact_with_budget};
pub(crate) use exact::exact_lists;
pub use paths::solve_max_degree2;
pub use peeling::{solve_block_peeling, solve_gallai_tree, BlockSolver, ExactBlocks, GallaiBlocks};
pub use precolour::solve_precolouring_extension;
pub use two_list::solve_2list;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Exact,
    TwoList,
    MaxDegreeTwo,
    Block,
    BlockPeeling,
    GallaiTree,
    DegreeLists,
    PrecolouringExtension,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Exact => "exact",
            Method::TwoList => "two-list",
            Method::MaxDegreeTwo => "max-degree-two",
            Method::Block => "block",
            Method::BlockPeeling => "block-peeling",
            Method::GallaiTree => "gallai-tree",
            Method::DegreeLists => "degree-lists",
            Method::PrecolouringExtension => "precolouring-extension",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", tag = "verdict", content = "colouring")]
pub enum Status {
    Colourable(Colouring),
    Infeasible,
}

/// Work counters. Deterministic, so results compare equal across runs.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Stats {
    /// Branching decisions of the exact search.
    pub nodes: u64,
    /// Calls into a block solver.
    pub block_solves: u64,
    /// Components that needed the exact search where a constructive
    /// routine was expected to succeed.
    pub fallback_components: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SolveResult {
    pub status: Status,
    pub method: Method,
    pub stats: Stats,
}

impl SolveResult {
    pub(crate) fn from_option(colours: Option<Vec<Colour>>, method: Method, stats: Stats) -> Self {
        SolveResult {
            status: match colours {
                Some(c) => Status::Colourable(Colouring(c)),
                None => Status::Infeasible,
            },
            method,
            stats,
        }
    }

    pub fn colouring(&self) -> Option<&Colouring> {
        match &self.status {
            Status::Colourable(c) => Some(c),
            Status::Infeasible => None,
        }
    }

    pub fn is_colourable(&self) -> bool {
        matches!(self.status, Status::Colourable(_))
    }
}

/// Runs `solve` on every connected component and stitches the pieces
/// together; `None` as soon as one component is infeasible.
pub(crate) fn by_components<F>(g: &Graph, lists: &[ColourSet], mut solve: F) -> Result<Option<Vec<Colour>>>
where
    F: FnMut(&Graph, &[ColourSet]) -> Result<Option<Vec<Colour>>>,
{
    let mut out = vec![0; g.n()];
    for comp in g.components() {
        let (h, sub) = restrict(g, lists, &comp);
        match solve(&h, &sub)? {
            Some(cs) => {
                for (i, &v) in comp.iter().enumerate() {
                    out[v] = cs[i];
                }
            }
            None => return Ok(None),
        }
    }
    Ok(Some(out))
}

pub(crate) fn restrict(g: &Graph, lists: &[ColourSet], vertices: &[Vertex]) -> (Graph, Vec<ColourSet>) {
    (
        g.induced(vertices),
        vertices.iter().map(|&v| lists[v].clone()).collect(),
    )
}

/// Smallest colour of `list` not used by an already coloured neighbour.
pub(crate) fn free_colour(g: &Graph, v: Vertex, list: &ColourSet, colour: &[Option<Colour>]) -> Option<Colour> {
    list.iter()
        .find(|&c| g.neighbours(v).iter().all(|&w| colour[w] != Some(c)))
}
