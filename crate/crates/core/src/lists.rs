//! List assignments, precolourings, colourings and the [`Instance`] bundle.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{input, Result};
use crate::graph::{Graph, Vertex};

pub type Colour = u32;

/// A finite set of colours, stored sorted and without repeats.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ColourSet(Vec<Colour>);

impl ColourSet {
    pub fn new(mut colours: Vec<Colour>) -> Self {
        colours.sort_unstable();
        colours.dedup();
        ColourSet(colours)
    }

    /// `{1, ..., k}`.
    pub fn palette(k: Colour) -> Self {
        ColourSet((1..=k).collect())
    }

    pub fn singleton(c: Colour) -> Self {
        ColourSet(vec![c])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, c: Colour) -> bool {
        self.0.binary_search(&c).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = Colour> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[Colour] {
        &self.0
    }

    pub fn smallest(&self) -> Option<Colour> {
        self.0.first().copied()
    }

    pub fn largest(&self) -> Option<Colour> {
        self.0.last().copied()
    }

    pub fn union(&self, other: &ColourSet) -> ColourSet {
        ColourSet::new(self.iter().chain(other.iter()).collect())
    }

    pub fn intersection(&self, other: &ColourSet) -> ColourSet {
        ColourSet(self.iter().filter(|&c| other.contains(c)).collect())
    }

    pub fn difference(&self, other: &ColourSet) -> ColourSet {
        ColourSet(self.iter().filter(|&c| !other.contains(c)).collect())
    }

    pub fn without(&self, c: Colour) -> ColourSet {
        ColourSet(self.iter().filter(|&x| x != c).collect())
    }

    pub fn is_subset(&self, other: &ColourSet) -> bool {
        self.iter().all(|c| other.contains(c))
    }

    pub fn into_vec(self) -> Vec<Colour> {
        self.0
    }
}

impl FromIterator<Colour> for ColourSet {
    fn from_iter<I: IntoIterator<Item = Colour>>(iter: I) -> Self {
        ColourSet::new(iter.into_iter().collect())
    }
}

impl<const N: usize> From<[Colour; N]> for ColourSet {
    fn from(cs: [Colour; N]) -> Self {
        ColourSet::new(cs.to_vec())
    }
}

impl fmt::Display for ColourSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "}}")
    }
}

/// One non-empty list of admissible colours per vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ListAssignment(Vec<ColourSet>);

impl ListAssignment {
    pub fn new(lists: Vec<ColourSet>) -> Result<Self> {
        if let Some(v) = lists.iter().position(ColourSet::is_empty) {
            return input(format!("vertex {v} has an empty list"));
        }
        Ok(ListAssignment(lists))
    }

    /// Every vertex gets `list`.
    pub fn uniform(n: usize, list: ColourSet) -> Result<Self> {
        ListAssignment::new(vec![list; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, v: Vertex) -> &ColourSet {
        &self.0[v]
    }

    pub fn iter(&self) -> impl Iterator<Item = &ColourSet> {
        self.0.iter()
    }

    pub fn as_slice(&self) -> &[ColourSet] {
        &self.0
    }

    /// Maximum list size.
    pub fn size(&self) -> usize {
        self.0.iter().map(ColourSet::len).max().unwrap_or(0)
    }

    pub fn is_regular(&self, ell: usize) -> bool {
        self.0.iter().all(|l| l.len() == ell)
    }

    /// `Some(ell)` when every list has exactly `ell` colours.
    pub fn regularity(&self) -> Option<usize> {
        let first = self.0.first()?.len();
        self.is_regular(first).then_some(first)
    }

    /// All colours occurring in some list.
    pub fn universe(&self) -> ColourSet {
        self.0.iter().flat_map(ColourSet::iter).collect()
    }

    pub fn into_vec(self) -> Vec<ColourSet> {
        self.0
    }
}

/// A partial colouring with colours in `1..=k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Precolouring {
    pub k: Colour,
    pub assignment: BTreeMap<Vertex, Colour>,
}

impl Precolouring {
    pub fn new(k: Colour, assignment: BTreeMap<Vertex, Colour>) -> Self {
        Precolouring { k, assignment }
    }

    pub fn get(&self, v: Vertex) -> Option<Colour> {
        self.assignment.get(&v).copied()
    }

    /// Checks the range of every colour and properness on the precoloured
    /// vertices.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        if self.k == 0 {
            return input("precolouring palette k must be positive");
        }
        for (&v, &c) in &self.assignment {
            if v >= g.n() {
                return input(format!("precoloured vertex {v} out of range"));
            }
            if c == 0 || c > self.k {
                return input(format!("precolour {c} of vertex {v} outside 1..={}", self.k));
            }
            for &w in g.neighbours(v) {
                if self.get(w) == Some(c) {
                    return input(format!("precolouring is improper on edge {v}-{w}"));
                }
            }
        }
        Ok(())
    }
}

/// A total vertex colouring.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Colouring(pub Vec<Colour>);

impl Colouring {
    pub fn get(&self, v: Vertex) -> Colour {
        self.0[v]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        g.edges().all(|(u, v)| self.0[u] != self.0[v])
    }
}

/// A graph with a list assignment and an optional precolouring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Instance {
    pub graph: Graph,
    pub lists: ListAssignment,
    pub precolouring: Option<Precolouring>,
}

impl Instance {
    pub fn new(graph: Graph, lists: ListAssignment) -> Result<Self> {
        Instance::with_precolouring(graph, lists, None)
    }

    pub fn with_precolouring(
        graph: Graph,
        lists: ListAssignment,
        precolouring: Option<Precolouring>,
    ) -> Result<Self> {
        if lists.len() != graph.n() {
            return input(format!(
                "{} lists for a graph on {} vertices",
                lists.len(),
                graph.n()
            ));
        }
        if let Some(p) = &precolouring {
            p.validate(&graph)?;
        }
        Ok(Instance {
            graph,
            lists,
            precolouring,
        })
    }

    /// Every vertex gets `list`.
    pub fn uniform(graph: Graph, list: ColourSet) -> Result<Self> {
        let lists = ListAssignment::uniform(graph.n(), list)?;
        Instance::new(graph, lists)
    }

    /// A `k`-precolouring-extension instance: lists are `{1..k}`.
    pub fn precolouring_extension(graph: Graph, precolouring: Precolouring) -> Result<Self> {
        let lists = ListAssignment::uniform(graph.n(), ColourSet::palette(precolouring.k))?;
        Instance::with_precolouring(graph, lists, Some(precolouring))
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    /// Lists with the precolouring folded in: a precoloured vertex keeps
    /// only its precolour, or nothing if the precolour is not in its list.
    pub fn effective_lists(&self) -> Vec<ColourSet> {
        let mut lists = self.lists.as_slice().to_vec();
        if let Some(p) = &self.precolouring {
            for (&v, &c) in &p.assignment {
                lists[v] = if lists[v].contains(c) {
                    ColourSet::singleton(c)
                } else {
                    ColourSet::default()
                };
            }
        }
        lists
    }

    /// Whether the lists are the full palette `{1..k}` of the precolouring.
    pub fn is_palette_instance(&self) -> bool {
        match &self.precolouring {
            Some(p) => {
                let pal = ColourSet::palette(p.k);
                self.lists.iter().all(|l| *l == pal)
            }
            None => false,
        }
    }
}

/// True iff `c` is proper, respects the lists and agrees with the
/// precolouring.
pub fn check_colouring(inst: &Instance, c: &Colouring) -> Result<bool> {
    if c.len() != inst.n() {
        return input(format!(
            "colouring covers {} vertices, instance has {}",
            c.len(),
            inst.n()
        ));
    }
    if !c.is_proper(&inst.graph) {
        return Ok(false);
    }
    if inst
        .graph
        .vertices()
        .any(|v| !inst.lists.get(v).contains(c.get(v)))
    {
        return Ok(false);
    }
    if let Some(p) = &inst.precolouring {
        if p.assignment.iter().any(|(&v, &col)| c.get(v) != col) {
            return Ok(false);
        }
    }
    Ok(true)
}
