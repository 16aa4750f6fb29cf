//! Structural side conditions: degree, girth, bipartiteness, planarity,
//! 2-connectivity and small forbidden subgraphs.

mod patterns;
mod planar;

use std::collections::{BTreeMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::decompose::is_2connected;
use crate::error::{input, Error, Result};
use crate::graph::Graph;

pub use patterns::{contains_pattern, has_intersecting_triangles};
pub use planar::is_planar;

/// Largest cycle pattern accepted by [`contains_pattern`].
pub const MAX_CYCLE_PATTERN: usize = 6;

/// A small graph tested for as a (not necessarily induced) subgraph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Pattern {
    /// `C_k`, `3 <= k <= 6`; `Cycle(3)` is the triangle.
    Cycle(usize),
    /// Two triangles sharing exactly one vertex.
    Butterfly,
    /// `K_{1,r}`.
    Star(usize),
}

impl Pattern {
    pub fn validate(self) -> Result<Self> {
        match self {
            Pattern::Cycle(k) if !(3..=MAX_CYCLE_PATTERN).contains(&k) => input(format!(
                "cycle pattern C{k} outside supported range 3..={MAX_CYCLE_PATTERN}"
            )),
            Pattern::Star(0) => input("star pattern K1,0 is degenerate"),
            p => Ok(p),
        }
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pattern::Cycle(3) => write!(f, "triangle"),
            Pattern::Cycle(k) => write!(f, "c{k}"),
            Pattern::Butterfly => write!(f, "butterfly"),
            Pattern::Star(r) => write!(f, "k1r:{r}"),
        }
    }
}

impl FromStr for Pattern {
    type Err = Error;

    /// Accepts `triangle`, `c3`..`c6`, `butterfly`, `k1r:R` and `k1,R`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_lowercase();
        let bad = || Error::Input(format!("unknown pattern {s:?}"));
        let p = if t == "triangle" {
            Pattern::Cycle(3)
        } else if t == "butterfly" {
            Pattern::Butterfly
        } else if let Some(r) = t.strip_prefix("k1r:").or_else(|| t.strip_prefix("k1,")) {
            Pattern::Star(r.parse().map_err(|_| bad())?)
        } else if let Some(k) = t.strip_prefix('c') {
            Pattern::Cycle(k.parse().map_err(|_| bad())?)
        } else {
            return Err(bad());
        };
        p.validate()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureReport {
    pub max_degree: usize,
    /// `None` for forests.
    pub girth: Option<usize>,
    pub bipartite: bool,
    pub planar: bool,
    pub two_connected: bool,
    /// Pattern name to presence.
    pub forbidden: BTreeMap<String, bool>,
    pub intersecting_triangles: bool,
}

pub fn structure_report(g: &Graph, patterns: &[Pattern]) -> Result<StructureReport> {
    let mut forbidden = BTreeMap::new();
    for &p in patterns {
        forbidden.insert(p.to_string(), contains_pattern(g, p)?);
    }
    Ok(StructureReport {
        max_degree: g.max_degree(),
        girth: girth(g),
        bipartite: is_bipartite(g),
        planar: is_planar(g),
        two_connected: is_2connected(g),
        forbidden,
        intersecting_triangles: has_intersecting_triangles(g),
    })
}

/// Length of a shortest cycle, `None` for forests.
///
/// A BFS from every vertex; a non-tree edge `uw` met from root `s` closes a
/// closed walk of length `d(u) + d(w) + 1`, and the minimum over all roots
/// is attained by a shortest cycle.
pub fn girth(g: &Graph) -> Option<usize> {
    let n = g.n();
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for s in g.vertices() {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[s] = 0;
        parent[s] = usize::MAX;
        queue.clear();
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            if let Some(b) = best {
                if 2 * dist[u] >= b {
                    break;
                }
            }
            for &w in g.neighbours(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    let len = dist[u] + dist[w] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

pub fn is_bipartite(g: &Graph) -> bool {
    let mut side = vec![u8::MAX; g.n()];
    let mut queue = VecDeque::new();
    for s in g.vertices() {
        if side[s] != u8::MAX {
            continue;
        }
        side[s] = 0;
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbours(u) {
                if side[w] == u8::MAX {
                    side[w] = 1 - side[u];
                    queue.push_back(w);
                } else if side[w] == side[u] {
                    return false;
                }
            }
        }
    }
    true
}
