//! Certificates attached to built instances, and their audit.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::builders;
use super::gadget::{achievable, can_split, GadgetSpec};
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder, Vertex};
use crate::io::write_instance;
use crate::lists::{ColourSet, Instance};
use crate::solvers::{exact_lists, Stats};
use crate::structure::{contains_pattern, girth, is_planar, Pattern};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Construction {
    GirthLift,
    #[serde(rename = "3reg-case1")]
    ThreeRegCase1,
    #[serde(rename = "3reg-case2")]
    ThreeRegCase2,
    #[serde(rename = "4reg")]
    FourReg,
    ButterflySafe,
    PendantPrecolour,
    PendantClique,
    #[serde(rename = "3p1")]
    ThreeP1,
}

impl Construction {
    pub const ALL: [Construction; 8] = [
        Construction::GirthLift,
        Construction::ThreeRegCase1,
        Construction::ThreeRegCase2,
        Construction::FourReg,
        Construction::ButterflySafe,
        Construction::PendantPrecolour,
        Construction::PendantClique,
        Construction::ThreeP1,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Construction::GirthLift => "girth-lift",
            Construction::ThreeRegCase1 => "3reg-case1",
            Construction::ThreeRegCase2 => "3reg-case2",
            Construction::FourReg => "4reg",
            Construction::ButterflySafe => "butterfly-safe",
            Construction::PendantPrecolour => "pendant-precolour",
            Construction::PendantClique => "pendant-clique",
            Construction::ThreeP1 => "3p1",
        }
    }

    /// Builders whose seed is a bare graph, read as a 3-colouring question.
    pub fn takes_graph(self) -> bool {
        matches!(
            self,
            Construction::ThreeRegCase1 | Construction::PendantPrecolour | Construction::PendantClique
        )
    }

    pub fn needs_gadget(self) -> bool {
        matches!(
            self,
            Construction::ThreeRegCase1
                | Construction::ThreeRegCase2
                | Construction::FourReg
                | Construction::ButterflySafe
        )
    }
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Construction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Construction::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = Construction::ALL.iter().map(|c| c.name()).collect();
                Error::Input(format!("unknown builder {s:?}; expected one of {}", names.join(", ")))
            })
    }
}

/// A structural statement about the output, checked independently.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "claim")]
pub enum Claim {
    Planar,
    GirthAtLeast { bound: usize },
    /// Every cycle through two or more gadget chains is this long.
    SkeletonGirthAtLeast { bound: usize },
    ListRegularity { ell: usize },
    /// Lists of the original vertices `0..seed_n` have this size.
    SeedListSize { size: usize },
    MaxDegreeAtMost { bound: usize },
    SubgraphFree { pattern: Pattern },
    /// Mutually adjacent and adjacent to every other vertex.
    UniversalClique { vertices: Vec<Vertex> },
    /// No independent set of size three.
    Free3P1,
    /// No edge plus a vertex adjacent to neither end.
    FreeP1P2,
    /// Every recorded gadget copy is intact and forces its `T`.
    CopyAudit,
}

impl Claim {
    pub fn name(&self) -> String {
        match self {
            Claim::Planar => "planar".into(),
            Claim::GirthAtLeast { bound } => format!("girth>={bound}"),
            Claim::SkeletonGirthAtLeast { bound } => format!("skeleton-girth>={bound}"),
            Claim::ListRegularity { ell } => format!("lists-{ell}-regular"),
            Claim::SeedListSize { size } => format!("seed-lists-size-{size}"),
            Claim::MaxDegreeAtMost { bound } => format!("max-degree<={bound}"),
            Claim::SubgraphFree { pattern } => format!("{pattern}-free"),
            Claim::UniversalClique { .. } => "universal-clique".into(),
            Claim::Free3P1 => "3p1-free".into(),
            Claim::FreeP1P2 => "p1+p2-free".into(),
            Claim::CopyAudit => "copy-audit".into(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "mode")]
pub enum CopyMode {
    /// The copy of `u` is joined to `to` by an edge.
    Attached { to: Vertex },
    /// The copy of `u` is the vertex `with` itself.
    Identified { with: Vertex },
    /// Position `position` (from 1) in the chain replacing edge `x y`.
    Chained { x: Vertex, y: Vertex, position: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CopyRecord {
    pub mode: CopyMode,
    /// Image of each gadget vertex.
    pub vertices: Vec<Vertex>,
    /// Colours the copy of `u` must take.
    pub t_set: ColourSet,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionCertificate {
    pub construction: Construction,
    pub params: BTreeMap<String, u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub gadget: Option<GadgetSpec>,
    /// SHA-256 of the canonical text of the seed instance.
    pub seed_digest: String,
    pub seed_n: usize,
    pub claims: Vec<Claim>,
    #[serde(default)]
    pub copies: Vec<CopyRecord>,
}

impl ReductionCertificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            msg: e.to_string(),
        })
    }

    pub fn param(&self, key: &str) -> Result<u64> {
        self.params
            .get(key)
            .copied()
            .ok_or_else(|| Error::Input(format!("certificate lacks parameter {key:?}")))
    }
}

pub fn digest(inst: &Instance) -> String {
    Sha256::digest(write_instance(inst).as_bytes())
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

/// The 3-colouring question on `g`, as an instance.
pub fn three_colouring_seed(g: &Graph) -> Instance {
    Instance::uniform(g.clone(), ColourSet::palette(3)).expect("lists match the graph")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "outcome", content = "detail")]
pub enum Outcome {
    Pass,
    Fail(String),
    /// The oracle ran out of budget; neither pass nor fail.
    Unverified(String),
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Outcome::Pass => f.write_str("pass"),
            Outcome::Fail(d) => write!(f, "fail ({d})"),
            Outcome::Unverified(d) => write!(f, "unverified ({d})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub items: Vec<(String, Outcome)>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.items.iter().all(|(_, o)| *o == Outcome::Pass)
    }

    pub fn failed(&self) -> bool {
        self.items.iter().any(|(_, o)| matches!(o, Outcome::Fail(_)))
    }

    pub fn outcome(&self, item: &str) -> Option<&Outcome> {
        self.items.iter().find(|(n, _)| n == item).map(|(_, o)| o)
    }

    /// `pass`, `fail` or `unverified`.
    pub fn verdict(&self) -> &'static str {
        if self.failed() {
            "fail"
        } else if self.passed() {
            "pass"
        } else {
            "unverified"
        }
    }
}

pub const DEFAULT_VERIFY_BUDGET: u64 = 5_000_000;

pub fn verify_reduction(seed: &Instance, out: &Instance, cert: &ReductionCertificate) -> VerificationReport {
    verify_reduction_with_budget(seed, out, cert, Some(DEFAULT_VERIFY_BUDGET))
}

/// Audits `out` against `cert`: seed digest, oracle answer-equivalence,
/// every claim, and a rebuild from the seed. For graph seeded builders the
/// seed is read as its 3-colouring question.
pub fn verify_reduction_with_budget(
    seed: &Instance,
    out: &Instance,
    cert: &ReductionCertificate,
    budget: Option<u64>,
) -> VerificationReport {
    let seed = if cert.construction.takes_graph() {
        three_colouring_seed(&seed.graph)
    } else {
        seed.clone()
    };
    let mut items = Vec::new();
    let d = digest(&seed);
    items.push((
        "seed-digest".to_string(),
        if d == cert.seed_digest {
            Outcome::Pass
        } else {
            Outcome::Fail(format!("seed hashes to {d}"))
        },
    ));
    items.push(("equivalence".to_string(), equivalence(&seed, out, budget)));
    for claim in &cert.claims {
        items.push((claim.name(), check_claim(claim, out, cert, budget)));
    }
    items.push(("reproducible".to_string(), reproducible(&seed, out, cert)));
    VerificationReport { items }
}

fn oracle(inst: &Instance, budget: Option<u64>) -> Result<bool> {
    let lists = inst.effective_lists();
    Ok(exact_lists(&inst.graph, &lists, budget, &mut Stats::default())?.is_some())
}

fn equivalence(seed: &Instance, out: &Instance, budget: Option<u64>) -> Outcome {
    match (oracle(seed, budget), oracle(out, budget)) {
        (Ok(a), Ok(b)) if a == b => Outcome::Pass,
        (Ok(a), Ok(b)) => Outcome::Fail(format!("seed colourable = {a}, output colourable = {b}")),
        (Err(Error::BudgetExceeded(n)), _) | (_, Err(Error::BudgetExceeded(n))) => {
            Outcome::Unverified(format!("oracle budget {n} exceeded"))
        }
        (Err(e), _) | (_, Err(e)) => Outcome::Fail(e.to_string()),
    }
}

fn check_claim(claim: &Claim, out: &Instance, cert: &ReductionCertificate, budget: Option<u64>) -> Outcome {
    let g = &out.graph;
    let fail = |msg: String| Outcome::Fail(msg);
    match claim {
        Claim::Planar => match is_planar(g) {
            true => Outcome::Pass,
            false => fail("output is not planar".into()),
        },
        Claim::GirthAtLeast { bound } => match girth(g) {
            Some(x) if x < *bound => fail(format!("girth {x}")),
            _ => Outcome::Pass,
        },
        Claim::SkeletonGirthAtLeast { bound } => match skeleton(g, cert) {
            Ok(s) => match girth(&s) {
                Some(x) if x < *bound => fail(format!("skeleton girth {x}")),
                _ => Outcome::Pass,
            },
            Err(e) => fail(e.to_string()),
        },
        Claim::ListRegularity { ell } => match out.lists.iter().position(|l| l.len() != *ell) {
            None => Outcome::Pass,
            Some(v) => fail(format!("vertex {v} has list {}", out.lists.get(v))),
        },
        Claim::SeedListSize { size } => {
            match (0..cert.seed_n.min(out.n())).find(|&v| out.lists.get(v).len() != *size) {
                None if cert.seed_n <= out.n() => Outcome::Pass,
                None => fail("output smaller than seed".into()),
                Some(v) => fail(format!("vertex {v} has list {}", out.lists.get(v))),
            }
        }
        Claim::MaxDegreeAtMost { bound } => match g.max_degree() {
            d if d <= *bound => Outcome::Pass,
            d => fail(format!("maximum degree {d}")),
        },
        Claim::SubgraphFree { pattern } => match contains_pattern(g, *pattern) {
            Ok(false) => Outcome::Pass,
            Ok(true) => fail(format!("output contains {pattern}")),
            Err(e) => fail(e.to_string()),
        },
        Claim::UniversalClique { vertices } => {
            for &a in vertices {
                if a >= g.n() {
                    return fail(format!("vertex {a} out of range"));
                }
                if let Some(w) = g.vertices().find(|&w| w != a && !g.has_edge(a, w)) {
                    return fail(format!("{a} is not adjacent to {w}"));
                }
            }
            Outcome::Pass
        }
        Claim::Free3P1 => match independent_triple(g) {
            None => Outcome::Pass,
            Some((a, b, c)) => fail(format!("independent set {{{a}, {b}, {c}}}")),
        },
        Claim::FreeP1P2 => match edge_plus_isolated(g) {
            None => Outcome::Pass,
            Some((a, b, c)) => fail(format!("edge {a}-{b} with {c} adjacent to neither")),
        },
        Claim::CopyAudit => copy_audit(out, cert, budget),
    }
}

fn independent_triple(g: &Graph) -> Option<(Vertex, Vertex, Vertex)> {
    let n = g.n();
    for a in 0..n {
        for b in a + 1..n {
            if g.has_edge(a, b) {
                continue;
            }
            for c in b + 1..n {
                if !g.has_edge(a, c) && !g.has_edge(b, c) {
                    return Some((a, b, c));
                }
            }
        }
    }
    None
}

fn edge_plus_isolated(g: &Graph) -> Option<(Vertex, Vertex, Vertex)> {
    for (a, b) in g.edges() {
        if let Some(c) = g
            .vertices()
            .find(|&c| c != a && c != b && !g.has_edge(a, c) && !g.has_edge(b, c))
        {
            return Some((a, b, c));
        }
    }
    None
}

/// Seed vertices joined by paths as long as the shortest route through
/// each gadget chain; direct edges between seed vertices are kept.
fn skeleton(g: &Graph, cert: &ReductionCertificate) -> Result<Graph> {
    let n = cert.seed_n;
    let mut chains: BTreeMap<(Vertex, Vertex), Vec<Vertex>> = BTreeMap::new();
    for c in &cert.copies {
        if let CopyMode::Chained { x, y, .. } = c.mode {
            chains.entry((x, y)).or_default().extend(&c.vertices);
        }
    }
    let mut b = GraphBuilder::new(n);
    for (u, v) in g.edges() {
        if u < n && v < n {
            b.add_edge(u, v)?;
        }
    }
    for ((x, y), mut vs) in chains {
        vs.extend([x, y]);
        vs.sort_unstable();
        vs.dedup();
        if vs.iter().any(|&v| v >= g.n()) {
            return Err(Error::Consistency("chain vertex out of range".into()));
        }
        let h = g.induced(&vs);
        let pos = |t: Vertex| vs.binary_search(&t).expect("endpoint included");
        let d = bfs_distance(&h, pos(x), pos(y))
            .ok_or_else(|| Error::Consistency(format!("chain {x}-{y} is disconnected")))?;
        let mut prev = x;
        for _ in 1..d {
            let w = b.add_vertex();
            b.add_edge(prev, w)?;
            prev = w;
        }
        if !b.has_edge(prev, y) {
            b.add_edge(prev, y)?;
        }
    }
    Ok(b.build())
}

fn bfs_distance(g: &Graph, s: Vertex, t: Vertex) -> Option<usize> {
    let mut dist = vec![usize::MAX; g.n()];
    dist[s] = 0;
    let mut queue = std::collections::VecDeque::from([s]);
    while let Some(a) = queue.pop_front() {
        if a == t {
            return Some(dist[a]);
        }
        for &b in g.neighbours(a) {
            if dist[b] == usize::MAX {
                dist[b] = dist[a] + 1;
                queue.push_back(b);
            }
        }
    }
    None
}

fn copy_audit(out: &Instance, cert: &ReductionCertificate, budget: Option<u64>) -> Outcome {
    let Some(gadget) = &cert.gadget else {
        return Outcome::Fail("no gadget recorded".into());
    };
    let g = &out.graph;
    for (i, copy) in cert.copies.iter().enumerate() {
        if copy.vertices.len() != gadget.n() || copy.vertices.iter().any(|&v| v >= g.n()) {
            return Outcome::Fail(format!("copy {i} has a malformed vertex map"));
        }
        let h = g.induced(&copy.vertices);
        let intact = h.m() == gadget.graph.m() && gadget.graph.edges().all(|(a, b)| h.has_edge(a, b));
        if !intact {
            return Outcome::Fail(format!("copy {i} is not an image of the gadget"));
        }
        let lists: Vec<ColourSet> = copy.vertices.iter().map(|&v| out.lists.get(v).clone()).collect();
        let t = match achievable(&h, &lists, gadget.u, budget) {
            Ok(t) => t,
            Err(Error::BudgetExceeded(n)) => return Outcome::Unverified(format!("copy {i}: budget {n} exceeded")),
            Err(e) => return Outcome::Fail(e.to_string()),
        };
        if t != copy.t_set {
            return Outcome::Fail(format!("copy {i} allows {t} on u, expected {}", copy.t_set));
        }
        for c in t.iter() {
            match can_split(&h, &lists, gadget.u, gadget.v, c, budget) {
                Ok(false) => {}
                Ok(true) => return Outcome::Fail(format!("copy {i} lets u and v differ")),
                Err(Error::BudgetExceeded(n)) => {
                    return Outcome::Unverified(format!("copy {i}: budget {n} exceeded"))
                }
                Err(e) => return Outcome::Fail(e.to_string()),
            }
        }
    }
    Outcome::Pass
}

fn reproducible(seed: &Instance, out: &Instance, cert: &ReductionCertificate) -> Outcome {
    match builders::rebuild(seed, cert) {
        Ok((again, again_cert)) if again == *out && again_cert == *cert => Outcome::Pass,
        Ok((again, _)) if again != *out => Outcome::Fail("rebuilding from the seed gives a different instance".into()),
        Ok(_) => Outcome::Fail("rebuilding from the seed gives a different certificate".into()),
        Err(e) => Outcome::Fail(format!("rebuild failed: {e}")),
    }
}
