//! Minimal non-colourable pairs and the edge-deleted gadgets cut from them.

use serde::{Deserialize, Serialize};

use crate::error::{input, Error, Result};
use crate::graph::{Graph, Vertex};
use crate::lists::{Colour, ColourSet, ListAssignment};
use crate::solvers::{exact_lists, Stats};

/// A graph with an `l`-regular list assignment admitting no colouring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CounterexamplePair {
    pub graph: Graph,
    pub lists: ListAssignment,
    pub ell: usize,
}

fn feasible(g: &Graph, lists: &[ColourSet]) -> Result<bool> {
    Ok(exact_lists(g, lists, None, &mut Stats::default())?.is_some())
}

impl CounterexamplePair {
    pub fn new(graph: Graph, lists: ListAssignment) -> Result<Self> {
        if lists.len() != graph.n() {
            return input(format!("{} lists for {} vertices", lists.len(), graph.n()));
        }
        let Some(ell) = lists.regularity() else {
            return input("counterexample lists are not regular");
        };
        if feasible(&graph, lists.as_slice())? {
            return input("the pair has a colouring respecting its lists");
        }
        Ok(CounterexamplePair { graph, lists, ell })
    }
}

/// Deletes vertices, then edges, while the pair stays non-colourable.
/// Every deletion restarts the scan, so the result is minimal under both.
pub fn minimize_counterexample(pair: &CounterexamplePair) -> Result<CounterexamplePair> {
    if feasible(&pair.graph, pair.lists.as_slice())? {
        return input("the pair has a colouring respecting its lists");
    }
    let mut g = pair.graph.clone();
    let mut lists = pair.lists.as_slice().to_vec();
    'vertices: loop {
        for v in g.vertices() {
            let keep: Vec<Vertex> = g.vertices().filter(|&w| w != v).collect();
            let h = g.induced(&keep);
            let sub: Vec<ColourSet> = keep.iter().map(|&w| lists[w].clone()).collect();
            if !feasible(&h, &sub)? {
                g = h;
                lists = sub;
                continue 'vertices;
            }
        }
        break;
    }
    'edges: loop {
        for (a, b) in g.edges().collect::<Vec<_>>() {
            let h = g.without_edge(a, b)?;
            if !feasible(&h, &lists)? {
                g = h;
                continue 'edges;
            }
        }
        break;
    }
    Ok(CounterexamplePair {
        graph: g,
        lists: ListAssignment::new(lists)?,
        ell: pair.ell,
    })
}

/// `F' = F - uv` for a minimal pair `F`: every colouring of `F'` gives `u`
/// and `v` the same colour, drawn from `t_set`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GadgetDoc", into = "GadgetDoc")]
pub struct GadgetSpec {
    pub graph: Graph,
    pub lists: ListAssignment,
    pub u: Vertex,
    pub v: Vertex,
    pub t_set: ColourSet,
    /// List size when the lists are regular.
    pub ell: Option<usize>,
}

#[derive(Serialize, Deserialize)]
struct GadgetDoc {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    lists: ListAssignment,
    u: Vertex,
    v: Vertex,
    t_set: ColourSet,
}

impl From<GadgetSpec> for GadgetDoc {
    fn from(g: GadgetSpec) -> Self {
        GadgetDoc {
            n: g.graph.n(),
            edges: g.graph.edges().collect(),
            lists: g.lists,
            u: g.u,
            v: g.v,
            t_set: g.t_set,
        }
    }
}

impl TryFrom<GadgetDoc> for GadgetSpec {
    type Error = Error;

    /// Re-derives `T` rather than trusting the document.
    fn try_from(d: GadgetDoc) -> Result<Self> {
        let g = Graph::from_edges(d.n, d.edges)?;
        let spec = GadgetSpec::from_parts(g, d.lists, d.u, d.v)?;
        if spec.t_set != d.t_set {
            return Err(Error::Consistency(format!(
                "gadget document claims T = {}, oracle finds {}",
                d.t_set, spec.t_set
            )));
        }
        Ok(spec)
    }
}

/// Colours `c` of `L(u)` such that some colouring gives `u` colour `c`.
pub(crate) fn achievable(g: &Graph, lists: &[ColourSet], u: Vertex, budget: Option<u64>) -> Result<ColourSet> {
    let mut out = Vec::new();
    let mut fixed = lists.to_vec();
    for c in lists[u].iter() {
        fixed[u] = ColourSet::singleton(c);
        if exact_lists(g, &fixed, budget, &mut Stats::default())?.is_some() {
            out.push(c);
        }
    }
    Ok(ColourSet::new(out))
}

/// Whether some colouring gives `u` colour `c` and `v` another colour.
pub(crate) fn can_split(
    g: &Graph,
    lists: &[ColourSet],
    u: Vertex,
    v: Vertex,
    c: Colour,
    budget: Option<u64>,
) -> Result<bool> {
    let mut fixed = lists.to_vec();
    fixed[u] = ColourSet::singleton(c);
    fixed[v] = fixed[v].without(c);
    if fixed[v].is_empty() {
        return Ok(false);
    }
    Ok(exact_lists(g, &fixed, budget, &mut Stats::default())?.is_some())
}

impl GadgetSpec {
    /// Computes `T` with the exact solver and checks that `u` and `v` are
    /// coloured alike in every colouring.
    pub fn from_parts(graph: Graph, lists: ListAssignment, u: Vertex, v: Vertex) -> Result<Self> {
        let n = graph.n();
        if lists.len() != n {
            return input(format!("{} lists for {n} vertices", lists.len()));
        }
        if u >= n || v >= n || u == v {
            return input(format!("gadget terminals {u}, {v} invalid for {n} vertices"));
        }
        if graph.has_edge(u, v) {
            return input(format!("gadget terminals {u}, {v} are adjacent"));
        }
        let t_set = achievable(&graph, lists.as_slice(), u, None)?;
        if t_set.is_empty() {
            return Err(Error::Consistency("gadget has no colouring".into()));
        }
        for c in t_set.iter() {
            if can_split(&graph, lists.as_slice(), u, v, c, None)? {
                return Err(Error::Consistency(format!(
                    "terminals {u} and {v} can differ when {u} has colour {c}"
                )));
            }
        }
        let ell = lists.regularity();
        Ok(GadgetSpec {
            graph,
            lists,
            u,
            v,
            t_set,
            ell,
        })
    }

    pub fn t(&self) -> usize {
        self.t_set.len()
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }
}

/// Removes `e = uv` from a pair, yielding the gadget `F - e`.
pub fn make_gadget(pair: &CounterexamplePair, e: (Vertex, Vertex)) -> Result<GadgetSpec> {
    let (u, v) = e;
    if !pair.graph.has_edge(u, v) {
        return input(format!("{u}-{v} is not an edge of the counterexample"));
    }
    let f = pair.graph.without_edge(u, v)?;
    GadgetSpec::from_parts(f, pair.lists.clone(), u, v)
}

/// The first edge whose endpoint lists differ, or the first edge.
pub fn pick_edge(pair: &CounterexamplePair) -> Option<(Vertex, Vertex)> {
    let edges: Vec<_> = pair.graph.edges().collect();
    edges
        .iter()
        .copied()
        .find(|&(a, b)| pair.lists.get(a) != pair.lists.get(b))
        .or_else(|| edges.first().copied())
}

/// Small oracle-verified gadgets with a prescribed `T`.
///
/// The colours `6..` act as blockers: a clique listing them all uses every
/// one, so neighbours of the whole clique lose them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SyntheticGadget {
    /// Diamond, all lists `{1,2,3}`; `T = {1,2,3}`.
    Diamond,
    /// 3-regular lists, `T = {4}`: `K5` minus `uv` with a blocking triangle.
    ThreeRegT1,
    /// 3-regular lists, `T = {4,5}`: a `K4` pins one vertex, which then
    /// flanks the path `u - m - v`.
    ThreeRegT2,
    /// 4-regular lists, `T = {4}`.
    FourRegT1,
    /// 4-regular lists, `T = {4,5}`.
    FourRegT2,
    /// 4-regular lists, `T = {1,2,3}`: a blocked diamond.
    FourRegT3,
    /// Two isolated vertices listing only `{4}`; `T = {4}`. Free of every
    /// cycle.
    SparseT1,
    /// The path `u - m - v` listing `{4,5}`; `T = {4,5}`. Free of every
    /// cycle.
    SparseT2,
}

impl SyntheticGadget {
    pub const ALL: [SyntheticGadget; 8] = [
        SyntheticGadget::Diamond,
        SyntheticGadget::ThreeRegT1,
        SyntheticGadget::ThreeRegT2,
        SyntheticGadget::FourRegT1,
        SyntheticGadget::FourRegT2,
        SyntheticGadget::FourRegT3,
        SyntheticGadget::SparseT1,
        SyntheticGadget::SparseT2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SyntheticGadget::Diamond => "diamond",
            SyntheticGadget::ThreeRegT1 => "3reg-t1",
            SyntheticGadget::ThreeRegT2 => "3reg-t2",
            SyntheticGadget::FourRegT1 => "4reg-t1",
            SyntheticGadget::FourRegT2 => "4reg-t2",
            SyntheticGadget::FourRegT3 => "4reg-t3",
            SyntheticGadget::SparseT1 => "sparse-t1",
            SyntheticGadget::SparseT2 => "sparse-t2",
        }
    }

    pub fn build(self) -> Result<GadgetSpec> {
        let set = |cs: &[Colour]| ColourSet::new(cs.to_vec());
        // (n, edges, lists, u, v)
        let (n, edges, lists, u, v): (usize, Vec<(Vertex, Vertex)>, Vec<ColourSet>, Vertex, Vertex) = match self {
            SyntheticGadget::Diamond => (
                4,
                vec![(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)],
                vec![set(&[1, 2, 3]); 4],
                0,
                3,
            ),
            SyntheticGadget::ThreeRegT1 => {
                // triangle 0,1,2 on {6,7,8}; u = 3, v = 4 see all of it
                let mut e = vec![(0, 1), (0, 2), (1, 2)];
                for t in [3, 4] {
                    e.extend([(0, t), (1, t), (2, t)]);
                }
                let mut l = vec![set(&[6, 7, 8]); 3];
                l.extend([set(&[4, 6, 7]), set(&[4, 6, 7])]);
                (5, e, l, 3, 4)
            }
            SyntheticGadget::ThreeRegT2 => {
                // K4 on 0..4 pins vertex 0 to 6; path 4 - 5 - 6 all see 0
                let mut e = vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
                e.extend([(0, 4), (0, 5), (0, 6), (4, 5), (5, 6)]);
                let mut l = vec![set(&[6, 7, 8])];
                l.extend(vec![set(&[7, 8, 9]); 3]);
                l.extend(vec![set(&[4, 5, 6]); 3]);
                (7, e, l, 4, 6)
            }
            SyntheticGadget::FourRegT1 => blocked(&[(4, set(&[4, 6, 7, 8])), (5, set(&[4, 6, 7, 8]))], &[], 4, 5),
            SyntheticGadget::FourRegT2 => blocked(
                &[(4, set(&[4, 5, 6, 7])), (5, set(&[4, 5, 6, 7])), (6, set(&[4, 5, 6, 7]))],
                &[(4, 5), (5, 6)],
                4,
                6,
            ),
            SyntheticGadget::FourRegT3 => blocked(
                &[
                    (4, set(&[1, 2, 3, 6])),
                    (5, set(&[1, 2, 3, 6])),
                    (6, set(&[1, 2, 3, 6])),
                    (7, set(&[1, 2, 3, 6])),
                ],
                &[(4, 6), (4, 7), (5, 6), (5, 7), (6, 7)],
                4,
                5,
            ),
            SyntheticGadget::SparseT1 => (2, vec![], vec![set(&[4]); 2], 0, 1),
            SyntheticGadget::SparseT2 => (3, vec![(0, 1), (1, 2)], vec![set(&[4, 5]); 3], 0, 2),
        };
        let g = Graph::from_edges(n, edges)?;
        GadgetSpec::from_parts(g, ListAssignment::new(lists)?, u, v)
    }
}

/// A `K4` on `0..4` listing `{6,7,8,9}` plus `extra` vertices joined to all
/// of it and to each other along `inner`.
fn blocked(
    extra: &[(Vertex, ColourSet)],
    inner: &[(Vertex, Vertex)],
    u: Vertex,
    v: Vertex,
) -> (usize, Vec<(Vertex, Vertex)>, Vec<ColourSet>, Vertex, Vertex) {
    let mut e = vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    let mut l = vec![ColourSet::from([6, 7, 8, 9]); 4];
    for (x, list) in extra {
        e.extend((0..4).map(|c| (c, *x)));
        l.push(list.clone());
    }
    e.extend_from_slice(inner);
    (4 + extra.len(), e, l, u, v)
}

impl std::str::FromStr for SyntheticGadget {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SyntheticGadget::ALL
            .into_iter()
            .find(|g| g.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = SyntheticGadget::ALL.iter().map(|g| g.name()).collect();
                Error::Input(format!("unknown gadget {s:?}; expected one of {}", names.join(", ")))
            })
    }
}
