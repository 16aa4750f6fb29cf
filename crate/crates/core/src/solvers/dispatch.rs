//! Feature detection and the choice of algorithm.

use serde::{Deserialize, Serialize};

use super::degree::degree_lists;
use super::exact::exact_lists;
use super::paths::solve_max_degree2;
use super::precolour::solve_precolouring_extension;
use super::two_list::two_list_lists;
use super::{solve_gallai_tree, Method, SolveResult, Stats};
use crate::decompose::is_gallai_tree;
use crate::error::Result;
use crate::lists::{Colour, ColourSet, Instance};
use crate::structure::{contains_pattern, is_bipartite, is_planar, Pattern};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Features {
    pub n: usize,
    pub m: usize,
    pub max_degree: usize,
    pub min_list: usize,
    pub max_list: usize,
    /// `Some(l)` when every effective list has exactly `l` colours.
    pub regularity: Option<usize>,
    pub bipartite: bool,
    pub planar: bool,
    pub triangle_free: bool,
    pub c4_free: bool,
    pub components: usize,
    pub gallai_components: usize,
    /// Components that are complete graphs or cycles.
    pub clique_or_cycle_components: usize,
    pub precoloured: usize,
    /// `Some(k)` for a precolouring instance whose lists are `{1..k}`.
    pub palette: Option<Colour>,
    /// `|L(v)| >= deg(v)` for every vertex.
    pub degree_lists: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "case")]
pub enum Classification {
    TwoList,
    MaxDegreeTwo,
    GallaiTree,
    /// `d`-regular lists on a graph of maximum degree at most `d`.
    ListBrooks { d: usize },
    DegreeLists,
    PrecolouringExtension { k: Colour },
    NoPolynomialCase,
}

impl Classification {
    /// The result the chosen algorithm rests on.
    pub fn cited(self) -> &'static str {
        match self {
            Classification::TwoList => "2-list colouring is polynomial (implication-graph satisfiability)",
            Classification::MaxDegreeTwo => "list colouring is polynomial on graphs of maximum degree at most 2",
            Classification::GallaiTree => "list colouring is polynomial on Gallai trees (block peeling)",
            Classification::ListBrooks { .. } => {
                "list Brooks: d-regular lists on a connected graph of maximum degree at most d \
                 that is neither complete nor a cycle always admit a colouring"
            }
            Classification::DegreeLists => {
                "degree lists: a connected graph with |L(u)| = deg(u) that is not a Gallai tree \
                 always admits a colouring"
            }
            Classification::PrecolouringExtension { .. } => {
                "k-precolouring extension is polynomial on graphs of maximum degree at most k"
            }
            Classification::NoPolynomialCase => "no polynomial case matched",
        }
    }

    pub fn method(self) -> Method {
        match self {
            Classification::TwoList => Method::TwoList,
            Classification::MaxDegreeTwo => Method::MaxDegreeTwo,
            Classification::GallaiTree => Method::GallaiTree,
            Classification::ListBrooks { .. } | Classification::DegreeLists => Method::DegreeLists,
            Classification::PrecolouringExtension { .. } => Method::PrecolouringExtension,
            Classification::NoPolynomialCase => Method::Exact,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DispatchReport {
    pub features: Features,
    pub classification: Classification,
    pub cited: String,
    pub method: Method,
    /// Known existence results that apply, whatever the algorithm.
    pub guarantees: Vec<String>,
    /// Hardness results covering the detected class.
    pub hardness: Vec<String>,
}

fn features(inst: &Instance) -> Result<Features> {
    let g = &inst.graph;
    let lists = inst.effective_lists();
    let sizes: Vec<usize> = lists.iter().map(ColourSet::len).collect();
    let min_list = sizes.iter().copied().min().unwrap_or(0);
    let max_list = sizes.iter().copied().max().unwrap_or(0);
    let comps = g.components();
    let mut gallai = 0;
    let mut clique_or_cycle = 0;
    for c in &comps {
        let h = g.induced(c);
        if is_gallai_tree(&h)?.is_gallai_tree {
            gallai += 1;
        }
        if h.is_complete() || h.is_cycle() {
            clique_or_cycle += 1;
        }
    }
    Ok(Features {
        n: g.n(),
        m: g.m(),
        max_degree: g.max_degree(),
        min_list,
        max_list,
        regularity: (g.n() > 0 && min_list == max_list).then_some(min_list),
        bipartite: is_bipartite(g),
        planar: is_planar(g),
        triangle_free: !contains_pattern(g, Pattern::Cycle(3))?,
        c4_free: !contains_pattern(g, Pattern::Cycle(4))?,
        components: comps.len(),
        gallai_components: gallai,
        clique_or_cycle_components: clique_or_cycle,
        precoloured: inst.precolouring.as_ref().map_or(0, |p| p.assignment.len()),
        palette: inst.precolouring.as_ref().filter(|_| inst.is_palette_instance()).map(|p| p.k),
        degree_lists: g.vertices().all(|v| sizes[v] >= g.degree(v)),
    })
}

pub fn classify(inst: &Instance) -> Result<DispatchReport> {
    let f = features(inst)?;
    let classification = if f.max_list <= 2 {
        Classification::TwoList
    } else if f.max_degree <= 2 {
        Classification::MaxDegreeTwo
    } else if f.gallai_components == f.components {
        Classification::GallaiTree
    } else if f.degree_lists {
        match f.regularity {
            Some(d) if f.max_degree <= d => Classification::ListBrooks { d },
            _ => Classification::DegreeLists,
        }
    } else if let Some(k) = f.palette.filter(|&k| f.max_degree <= k as usize) {
        Classification::PrecolouringExtension { k }
    } else {
        Classification::NoPolynomialCase
    };
    let guarantees = guarantees(&f, classification);
    let hardness = if classification == Classification::NoPolynomialCase {
        hardness(&f)
    } else {
        Vec::new()
    };
    Ok(DispatchReport {
        cited: classification.cited().to_string(),
        method: classification.method(),
        features: f,
        classification,
        guarantees,
        hardness,
    })
}

fn guarantees(f: &Features, c: Classification) -> Vec<String> {
    let mut out = Vec::new();
    if f.precoloured > 0 {
        // Existence results about lists say nothing once vertices are fixed.
        return out;
    }
    match c {
        Classification::ListBrooks { d } if f.clique_or_cycle_components == 0 => out.push(format!(
            "colourable: {d}-regular lists, maximum degree at most {d}, no component complete or a cycle"
        )),
        Classification::ListBrooks { .. } | Classification::DegreeLists if f.gallai_components == 0 => {
            out.push("colourable: degree lists and no component is a Gallai tree".to_string())
        }
        _ => {}
    }
    if f.planar {
        let l = f.min_list;
        if l >= 5 {
            out.push("colourable: every planar graph is 5-choosable".into());
        } else if l >= 4 && f.triangle_free {
            out.push("colourable: every planar triangle-free graph is 4-choosable".into());
        } else if l >= 4 && f.c4_free {
            out.push("colourable: every planar graph without 4-cycles is 4-choosable".into());
        } else if l >= 3 && f.bipartite {
            out.push("colourable: every planar bipartite graph is 3-choosable".into());
        }
    }
    out
}

fn hardness(f: &Features) -> Vec<String> {
    let mut out = Vec::new();
    if let Some(l) = f.regularity.filter(|&l| l >= 3) {
        if f.max_degree > l {
            out.push(format!(
                "{l}-regular list colouring is NP-complete for maximum degree at least {}",
                l + 1
            ));
        }
        if f.planar && (l == 3 || l == 4) {
            out.push(format!("{l}-regular list colouring is NP-complete on planar graphs"));
        }
    }
    if let Some(k) = f.palette.filter(|&k| k >= 3 && f.max_degree > k as usize) {
        out.push(format!(
            "{k}-precolouring extension is NP-complete for maximum degree at least {}",
            k + 1
        ));
    }
    if f.max_list >= 3 && f.max_degree >= 3 {
        out.push("list colouring with lists of size at most 3 is NP-complete for maximum degree 3".into());
    }
    out
}

pub fn classify_and_solve(inst: &Instance) -> Result<(DispatchReport, SolveResult)> {
    let report = classify(inst)?;
    let g = &inst.graph;
    let lists = inst.effective_lists();
    let mut stats = Stats::default();
    let result = match report.classification {
        Classification::TwoList => {
            SolveResult::from_option(two_list_lists(g, &lists), Method::TwoList, stats)
        }
        Classification::MaxDegreeTwo => solve_max_degree2(inst)?,
        Classification::GallaiTree => solve_gallai_tree(inst)?,
        Classification::ListBrooks { .. } | Classification::DegreeLists => {
            let colours = if lists.iter().any(ColourSet::is_empty) {
                None
            } else {
                degree_lists(g, &lists, &mut stats)?
            };
            SolveResult::from_option(colours, Method::DegreeLists, stats)
        }
        Classification::PrecolouringExtension { k } => {
            let pre = inst.precolouring.as_ref().expect("palette instance has a precolouring");
            solve_precolouring_extension(g, pre, k)?
        }
        Classification::NoPolynomialCase => {
            let colours = exact_lists(g, &lists, None, &mut stats)?;
            SolveResult::from_option(colours, Method::Exact, stats)
        }
    };
    Ok((report, result))
}
