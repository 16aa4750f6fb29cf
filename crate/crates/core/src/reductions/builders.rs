//! Hardness constructions. Every builder keeps the seed's vertices as
//! `0..n` and appends new vertices in a fixed order, so equal inputs give
//! equal outputs.

use std::collections::BTreeMap;

use super::certificate::{
    digest, three_colouring_seed, Claim, Construction, CopyMode, CopyRecord, ReductionCertificate,
};
use super::gadget::GadgetSpec;
use crate::error::{input, Error, Result};
use crate::graph::{Graph, GraphBuilder, Vertex};
use crate::lists::{Colour, ColourSet, Instance, ListAssignment, Precolouring};
use crate::structure::{contains_pattern, girth, is_planar, Pattern};

/// Lists allowed in seeds of the bivertex/trivertex constructions.
fn small_lists(inst: &Instance) -> Result<()> {
    if inst.precolouring.is_some() {
        return input("seed must not carry a precolouring");
    }
    let ok = [
        ColourSet::from([1, 2]),
        ColourSet::from([1, 3]),
        ColourSet::from([2, 3]),
        ColourSet::from([1, 2, 3]),
    ];
    match inst.lists.iter().position(|l| !ok.contains(l)) {
        None => Ok(()),
        Some(v) => input(format!(
            "vertex {v} has list {}; seeds use {{1,2}}, {{1,3}}, {{2,3}} or {{1,2,3}}",
            inst.lists.get(v)
        )),
    }
}

fn max_colour(lists: &ListAssignment) -> Colour {
    lists.iter().filter_map(ColourSet::largest).max().unwrap_or(0)
}

/// Graph and lists under construction plus the copies placed so far.
struct Assembly {
    b: GraphBuilder,
    lists: Vec<ColourSet>,
    fresh: Colour,
    copies: Vec<CopyRecord>,
}

impl Assembly {
    fn new(g: &Graph, lists: Vec<ColourSet>, fresh: Colour) -> Self {
        Assembly {
            b: GraphBuilder::from_graph(g),
            lists,
            fresh,
            copies: Vec::new(),
        }
    }

    fn vertex(&mut self, list: ColourSet) -> Vertex {
        self.lists.push(list);
        self.b.add_vertex()
    }

    fn edge(&mut self, a: Vertex, b: Vertex) -> Result<()> {
        self.b.add_edge(a, b)
    }

    fn next_fresh(&mut self) -> Colour {
        let c = self.fresh;
        self.fresh += 1;
        c
    }

    /// Renames the gadget's colours so that `T` becomes `t_target` and,
    /// when given, `L(u)` becomes `u_target`; other colours become fresh.
    fn colour_map(
        &mut self,
        gadget: &GadgetSpec,
        t_target: &ColourSet,
        u_target: Option<&ColourSet>,
    ) -> Result<BTreeMap<Colour, Colour>> {
        if t_target.len() != gadget.t() {
            return Err(Error::Consistency(format!(
                "target set {t_target} does not match |T| = {}",
                gadget.t()
            )));
        }
        let mut map: BTreeMap<Colour, Colour> = gadget.t_set.iter().zip(t_target.iter()).collect();
        let lu = gadget.lists.get(gadget.u);
        let rest = lu.difference(&gadget.t_set);
        match u_target {
            Some(target) => {
                if !t_target.is_subset(target) || target.len() != lu.len() {
                    return Err(Error::Consistency(format!(
                        "list {target} cannot host u's list {lu} with T = {t_target}"
                    )));
                }
                map.extend(rest.iter().zip(target.difference(t_target).iter()));
            }
            None => {
                for c in rest.iter() {
                    let f = self.next_fresh();
                    map.insert(c, f);
                }
            }
        }
        for c in gadget.lists.universe().iter() {
            map.entry(c).or_insert_with(|| {
                
                self.next_fresh()
            });
        }
        Ok(map)
    }

    /// Places one renamed copy. `anchor` becomes the copy of `u` when
    /// given; otherwise `u` is new. Returns the images of `u` and `v`.
    fn copy(
        &mut self,
        gadget: &GadgetSpec,
        mode: CopyMode,
        anchor: Option<Vertex>,
        t_target: &ColourSet,
        u_target: Option<&ColourSet>,
    ) -> Result<(Vertex, Vertex)> {
        let map = self.colour_map(gadget, t_target, u_target)?;
        let rename = |l: &ColourSet| -> ColourSet { l.iter().map(|c| map[&c]).collect() };
        let mut image = Vec::with_capacity(gadget.n());
        for x in gadget.graph.vertices() {
            let list = rename(gadget.lists.get(x));
            match anchor {
                Some(a) if x == gadget.u => {
                    self.lists[a] = list;
                    image.push(a);
                }
                _ => image.push(self.vertex(list)),
            }
        }
        for (a, b) in gadget.graph.edges() {
            self.edge(image[a], image[b])?;
        }
        let (u, v) = (image[gadget.u], image[gadget.v]);
        if let CopyMode::Attached { to } = mode {
            self.edge(to, u)?;
        }
        self.copies.push(CopyRecord {
            mode,
            vertices: image,
            t_set: t_target.clone(),
        });
        Ok((u, v))
    }

    fn finish(self) -> Result<(Instance, Vec<CopyRecord>)> {
        let inst = Instance::new(self.b.build(), ListAssignment::new(self.lists)?)?;
        Ok((inst, self.copies))
    }
}

fn params(pairs: &[(&str, u64)]) -> BTreeMap<String, u64> {
    pairs.iter().map(|&(k, v)| (k.to_string(), v)).collect()
}

/// `C_k` patterns, `3 <= k <= min(r, 6)`, that the gadget avoids. The
/// constructions never close a new cycle of length at most `r` when the
/// seed itself has none.
fn short_cycle_claims(seed: Option<&Graph>, gadget: &Graph, r: usize) -> Result<Vec<Claim>> {
    if let Some(g) = seed {
        if girth(g).is_some_and(|x| x <= r) {
            return Ok(Vec::new());
        }
    }
    let mut out = Vec::new();
    for k in 3..=r.min(crate::structure::MAX_CYCLE_PATTERN) {
        let pattern = Pattern::Cycle(k);
        if !contains_pattern(gadget, pattern)? {
            out.push(Claim::SubgraphFree { pattern });
        }
    }
    Ok(out)
}

fn even_cycle_length(r: usize) -> usize {
    if r.is_multiple_of(2) {
        r
    } else {
        r + 1
    }
}

/// Replaces every edge by a path with an odd number `2j + 1` of edges,
/// `j` least with `3(2j + 1) >= p`. Inner path vertices copy the 2-list of
/// the lower-numbered endpoint that has one, which forces the two ends to
/// differ exactly as the edge did.
pub fn build_girth_lift(inst: &Instance, p: usize) -> Result<(Instance, ReductionCertificate)> {
    small_lists(inst)?;
    if p < 3 {
        return input(format!("girth bound {p} below 3"));
    }
    let g = &inst.graph;
    for (a, b) in g.edges() {
        if inst.lists.get(a).len() != 2 && inst.lists.get(b).len() != 2 {
            return input(format!("edge {a}-{b} has no endpoint with a 2-list"));
        }
    }
    let j = (0..).find(|&j| 3 * (2 * j + 1) >= p).expect("some j works");
    let mut b = GraphBuilder::new(g.n());
    let mut lists = inst.lists.as_slice().to_vec();
    for (x, y) in g.edges() {
        let owner = if lists[x].len() == 2 { x } else { y };
        let list = lists[owner].clone();
        let mut prev = x;
        for _ in 0..2 * j {
            let w = b.add_vertex();
            lists.push(list.clone());
            b.add_edge(prev, w)?;
            prev = w;
        }
        b.add_edge(prev, y)?;
    }
    let out = Instance::new(b.build(), ListAssignment::new(lists)?)?;
    let mut claims = vec![Claim::GirthAtLeast { bound: p }];
    let degree = if g.m() > 0 && j > 0 { g.max_degree().max(2) } else { g.max_degree() };
    claims.push(Claim::MaxDegreeAtMost { bound: degree });
    if is_planar(g) {
        claims.push(Claim::Planar);
    }
    let cert = ReductionCertificate {
        construction: Construction::GirthLift,
        params: params(&[("p", p as u64), ("j", j as u64)]),
        gadget: None,
        seed_digest: digest(inst),
        seed_n: g.n(),
        claims,
        copies: Vec::new(),
    };
    Ok((out, cert))
}

/// 3-colouring of `g` to 3-regular list colouring with a uniform gadget:
/// each edge `xy`, `x < y`, becomes a chain of `s = ceil(r / 6)` gadget
/// copies from `x` followed by an edge to `y`.
pub fn build_3reg_case1(g: &Graph, gadget: &GadgetSpec, r: usize) -> Result<(Instance, ReductionCertificate)> {
    let palette = ColourSet::palette(3);
    if gadget.lists.iter().any(|l| *l != palette) {
        return input("case 1 needs every gadget list equal to {1,2,3}; use 3reg-case2");
    }
    if gadget.t_set != palette {
        return Err(Error::Consistency(format!("uniform gadget has T = {}", gadget.t_set)));
    }
    if r < 3 {
        return input(format!("cycle bound r = {r} below 3"));
    }
    let s = r.div_ceil(6);
    let mut asm = Assembly::new(&Graph::empty(g.n()), vec![palette.clone(); g.n()], 4);
    for (x, y) in g.edges() {
        let mut prev = x;
        for position in 1..=s {
            let (_, v) = asm.copy(
                gadget,
                CopyMode::Chained { x, y, position },
                Some(prev),
                &palette,
                Some(&palette),
            )?;
            prev = v;
        }
        asm.edge(prev, y)?;
    }
    let (out, copies) = asm.finish()?;

    let f = &gadget.graph;
    let (du, dv) = (f.degree(gadget.u), f.degree(gadget.v));
    let degree = (g.max_degree() * du.max(1)).max(du + dv).max(dv + 1).max(f.max_degree());
    let mut claims = vec![
        Claim::ListRegularity { ell: 3 },
        Claim::SkeletonGirthAtLeast { bound: 3 * (2 * s + 1) },
        Claim::MaxDegreeAtMost { bound: degree },
        Claim::CopyAudit,
    ];
    claims.extend(short_cycle_claims(None, f, r)?);
    if is_planar(g) && is_planar(f) {
        claims.push(Claim::Planar);
    }
    let cert = ReductionCertificate {
        construction: Construction::ThreeRegCase1,
        params: params(&[("r", r as u64), ("s", s as u64)]),
        gadget: Some(gadget.clone()),
        seed_digest: digest(&three_colouring_seed(g)),
        seed_n: g.n(),
        claims,
        copies,
    };
    Ok((out, cert))
}

/// Shared by the two 3-regular Case 2 variants: bivertices gain colour 4
/// and either one pendant copy forcing 4 (`t = 1`) or an even cycle of
/// copies alternating 4 and 5 (`t = 2`).
fn case2_assembly(
    inst: &Instance,
    gadget: &GadgetSpec,
    r: usize,
) -> Result<(Instance, Vec<CopyRecord>, usize, usize)> {
    small_lists(inst)?;
    if r < 3 {
        return input(format!("cycle bound r = {r} below 3"));
    }
    let t = gadget.t();
    let target = match t {
        1 => ColourSet::from([4]),
        2 => ColourSet::from([4, 5]),
        _ => return input(format!("gadget has t = {t}; 3-regular constructions need t in {{1, 2}}")),
    };
    let g = &inst.graph;
    let mut lists = inst.lists.as_slice().to_vec();
    for l in lists.iter_mut().filter(|l| l.len() == 2) {
        *l = l.union(&ColourSet::from([4]));
    }
    let fresh = 6.max(max_colour(&inst.lists) + 1);
    let mut asm = Assembly::new(g, lists, fresh);
    let s = even_cycle_length(r);
    for w in g.vertices().filter(|&w| inst.lists.get(w).len() == 2) {
        if t == 1 {
            asm.copy(gadget, CopyMode::Attached { to: w }, None, &target, None)?;
        } else {
            let mut prev = w;
            for _ in 0..s {
                let (u, _) = asm.copy(gadget, CopyMode::Attached { to: prev }, None, &target, None)?;
                prev = u;
            }
            asm.edge(prev, w)?;
        }
    }
    let (out, copies) = asm.finish()?;
    Ok((out, copies, s, t))
}

fn case2_claims(inst: &Instance, gadget: &GadgetSpec, t: usize) -> Vec<Claim> {
    let mut claims = Vec::new();
    if gadget.ell == Some(3) {
        claims.push(Claim::ListRegularity { ell: 3 });
    } else {
        claims.push(Claim::SeedListSize { size: 3 });
    }
    let gain = t;
    let degree = (inst.graph.max_degree() + gain).max(gadget.graph.max_degree() + gain);
    claims.push(Claim::MaxDegreeAtMost { bound: degree });
    claims.push(Claim::CopyAudit);
    claims
}

/// 3-regular list colouring from a gadget with `t <= 2` (lists need not
/// be uniform).
pub fn build_3reg_case2(
    inst: &Instance,
    gadget: &GadgetSpec,
    r: usize,
) -> Result<(Instance, ReductionCertificate)> {
    let (out, copies, s, t) = case2_assembly(inst, gadget, r)?;
    let mut claims = case2_claims(inst, gadget, t);
    claims.extend(short_cycle_claims(Some(&inst.graph), &gadget.graph, r)?);
    if is_planar(&inst.graph) && is_planar(&gadget.graph) {
        claims.push(Claim::Planar);
    }
    let cert = ReductionCertificate {
        construction: Construction::ThreeRegCase2,
        params: params(&[("r", r as u64), ("s", s as u64), ("t", t as u64)]),
        gadget: Some(gadget.clone()),
        seed_digest: digest(inst),
        seed_n: inst.n(),
        claims,
        copies,
    };
    Ok((out, cert))
}

/// As [`build_3reg_case2`], for seeds of girth at least 6 and gadgets free
/// of `C4`, `C5` and the butterfly; the output is certified free of all
/// three.
pub fn build_butterfly_safe(
    inst: &Instance,
    gadget: &GadgetSpec,
    r: usize,
) -> Result<(Instance, ReductionCertificate)> {
    if r < 5 {
        return input(format!("r = {r}; the longest forbidden cycle has length 5"));
    }
    if girth(&inst.graph).is_some_and(|x| x < 6) {
        return input("seed must have girth at least 6");
    }
    let forbidden = [Pattern::Cycle(4), Pattern::Cycle(5), Pattern::Butterfly];
    for p in forbidden {
        if contains_pattern(&gadget.graph, p)? {
            return input(format!("gadget contains {p}"));
        }
    }
    let (out, copies, s, t) = case2_assembly(inst, gadget, r)?;
    let mut claims = case2_claims(inst, gadget, t);
    claims.extend(forbidden.map(|pattern| Claim::SubgraphFree { pattern }));
    if is_planar(&inst.graph) && is_planar(&gadget.graph) {
        claims.push(Claim::Planar);
    }
    let cert = ReductionCertificate {
        construction: Construction::ButterflySafe,
        params: params(&[("r", r as u64), ("s", s as u64), ("t", t as u64)]),
        gadget: Some(gadget.clone()),
        seed_digest: digest(inst),
        seed_n: inst.n(),
        claims,
        copies,
    };
    Ok((out, cert))
}

/// 4-regular list colouring from a 4-regular gadget, `1 <= t <= 3`.
///
/// | t | bivertex `w`                                   | trivertex `w`                        |
/// |---|------------------------------------------------|--------------------------------------|
/// | 1 | two attached copies forcing 4 and 5            | one attached copy forcing 4          |
/// | 2 | one copy identified at `w`, `T = L(w)`         | even cycle of copies on `{4,5}`      |
/// | 3 | copies at `w` with `T = L(w)+4` and `L(w)+5`   | one copy at `w`, `T = {1,2,3}`       |
///
/// Bivertices end with `L(w) + {4,5}`, trivertices with `{1,2,3,4}`.
pub fn build_4reg_instance(
    inst: &Instance,
    gadget: &GadgetSpec,
    r: usize,
) -> Result<(Instance, ReductionCertificate)> {
    small_lists(inst)?;
    if gadget.ell != Some(4) {
        return input("gadget lists are not 4-regular");
    }
    if r < 3 {
        return input(format!("cycle bound r = {r} below 3"));
    }
    let t = gadget.t();
    if !(1..=3).contains(&t) {
        return input(format!("gadget has t = {t}; expected 1, 2 or 3"));
    }
    let g = &inst.graph;
    let four = ColourSet::from([4]);
    let five = ColourSet::from([5]);
    let mut lists = inst.lists.as_slice().to_vec();
    for l in lists.iter_mut() {
        *l = if l.len() == 2 {
            l.union(&ColourSet::from([4, 5]))
        } else {
            l.union(&four)
        };
    }
    let fresh = 6.max(max_colour(&inst.lists) + 1);
    let mut asm = Assembly::new(g, lists, fresh);
    let s = even_cycle_length(r);
    for w in g.vertices() {
        let base = inst.lists.get(w).clone();
        let full = asm.lists[w].clone();
        let bi = base.len() == 2;
        let attach = CopyMode::Attached { to: w };
        let ident = CopyMode::Identified { with: w };
        match (t, bi) {
            (1, true) => {
                asm.copy(gadget, attach, None, &four, None)?;
                asm.copy(gadget, attach, None, &five, None)?;
            }
            (1, false) => {
                asm.copy(gadget, attach, None, &four, None)?;
            }
            (2, true) => {
                asm.copy(gadget, ident, Some(w), &base, Some(&full))?;
            }
            (2, false) => {
                let pair = ColourSet::from([4, 5]);
                let mut prev = w;
                for _ in 0..s {
                    let (u, _) = asm.copy(gadget, CopyMode::Attached { to: prev }, None, &pair, None)?;
                    prev = u;
                }
                asm.edge(prev, w)?;
            }
            (3, true) => {
                asm.copy(gadget, ident, Some(w), &base.union(&four), Some(&full))?;
                asm.copy(gadget, ident, Some(w), &base.union(&five), Some(&full))?;
            }
            (_, _) => {
                asm.copy(gadget, ident, Some(w), &base, Some(&full))?;
            }
        }
    }
    let (out, copies) = asm.finish()?;

    let f = &gadget.graph;
    let du = f.degree(gadget.u);
    let gain = match t {
        1 => 2,
        2 => du.max(2),
        _ => 2 * du,
    };
    let mut claims = vec![
        Claim::ListRegularity { ell: 4 },
        Claim::MaxDegreeAtMost {
            bound: (g.max_degree() + gain).max(f.max_degree() + 2),
        },
        Claim::CopyAudit,
    ];
    claims.extend(short_cycle_claims(Some(g), f, r)?);
    if is_planar(g) && is_planar(f) {
        claims.push(Claim::Planar);
    }
    let cert = ReductionCertificate {
        construction: Construction::FourReg,
        params: params(&[("r", r as u64), ("s", s as u64), ("t", t as u64)]),
        gadget: Some(gadget.clone()),
        seed_digest: digest(inst),
        seed_n: inst.n(),
        claims,
        copies,
    };
    Ok((out, cert))
}

fn pendant_pre(g: &Graph, k: usize) -> Result<()> {
    if k < 4 {
        return input(format!("k = {k}; pendant constructions need k >= 4"));
    }
    if g.max_degree() > 4 {
        return input(format!("seed maximum degree {} exceeds 4", g.max_degree()));
    }
    Ok(())
}

/// 3-colouring of `g` to `k`-precolouring extension: every vertex gains
/// pendants precoloured `4..=k`.
pub fn build_pendant_precolour(g: &Graph, k: usize) -> Result<(Graph, Precolouring, ReductionCertificate)> {
    pendant_pre(g, k)?;
    let mut b = GraphBuilder::from_graph(g);
    let mut pre = BTreeMap::new();
    for v in g.vertices() {
        for i in 1..=k - 3 {
            let x = b.add_vertex();
            b.add_edge(v, x)?;
            pre.insert(x, (i + 3) as Colour);
        }
    }
    let out = b.build();
    let pre = Precolouring::new(k as Colour, pre);
    let mut claims = vec![
        Claim::ListRegularity { ell: k },
        Claim::MaxDegreeAtMost { bound: k + 1 },
    ];
    if is_planar(g) {
        claims.push(Claim::Planar);
    }
    let cert = ReductionCertificate {
        construction: Construction::PendantPrecolour,
        params: params(&[("k", k as u64)]),
        gadget: None,
        seed_digest: digest(&three_colouring_seed(g)),
        seed_n: g.n(),
        claims,
        copies: Vec::new(),
    };
    Ok((out, pre, cert))
}

/// 3-colouring of `g` to `k`-regular list colouring: pendant `x_i` lists
/// `{i, k+1..2k-1}` and sits in a `(k+1)`-clique whose other members list
/// `{k+1..2k}`, which pins `x_i` to `i`.
pub fn build_pendant_clique(g: &Graph, k: usize) -> Result<(Instance, ReductionCertificate)> {
    pendant_pre(g, k)?;
    let kc = k as Colour;
    let mut b = GraphBuilder::from_graph(g);
    let mut lists = vec![ColourSet::palette(kc); g.n()];
    let high: ColourSet = (kc + 1..=2 * kc).collect();
    for v in g.vertices() {
        for i in 1..=kc - 3 {
            let x = b.add_vertex();
            lists.push(std::iter::once(i).chain(kc + 1..2 * kc).collect());
            b.add_edge(v, x)?;
            let mut clique = vec![x];
            for _ in 0..k {
                let w = b.add_vertex();
                lists.push(high.clone());
                for &c in &clique {
                    b.add_edge(c, w)?;
                }
                clique.push(w);
            }
        }
    }
    let out = Instance::new(b.build(), ListAssignment::new(lists)?)?;
    let cert = ReductionCertificate {
        construction: Construction::PendantClique,
        params: params(&[("k", k as u64)]),
        gadget: None,
        seed_digest: digest(&three_colouring_seed(g)),
        seed_n: g.n(),
        claims: vec![
            Claim::ListRegularity { ell: k },
            Claim::MaxDegreeAtMost { bound: k + 1 },
        ],
        copies: Vec::new(),
    };
    Ok((out, cert))
}

/// 2/3-list colouring to 3-regular list colouring: a universal triangle
/// on three fresh colours `a < b < c` uses all of them, and every 2-list
/// gains `a`.
pub fn build_3p1_instance(inst: &Instance) -> Result<(Instance, ReductionCertificate)> {
    if inst.precolouring.is_some() {
        return input("seed must not carry a precolouring");
    }
    if let Some(v) = inst.lists.iter().position(|l| !(2..=3).contains(&l.len())) {
        return input(format!("vertex {v} has a list of size {}", inst.lists.get(v).len()));
    }
    let g = &inst.graph;
    let n = g.n();
    let a = max_colour(&inst.lists) + 1;
    let fresh = ColourSet::from([a, a + 1, a + 2]);
    let mut lists: Vec<ColourSet> = inst
        .lists
        .iter()
        .map(|l| if l.len() == 2 { l.union(&ColourSet::singleton(a)) } else { l.clone() })
        .collect();
    let mut b = GraphBuilder::from_graph(g);
    let tri: Vec<Vertex> = (0..3).map(|_| b.add_vertex()).collect();
    lists.extend(vec![fresh; 3]);
    for (i, &x) in tri.iter().enumerate() {
        for &y in &tri[i + 1..] {
            b.add_edge(x, y)?;
        }
        for v in 0..n {
            b.add_edge(x, v)?;
        }
    }
    let out = Instance::new(b.build(), ListAssignment::new(lists)?)?;
    let mut claims = vec![
        Claim::ListRegularity { ell: 3 },
        Claim::UniversalClique { vertices: tri },
        Claim::MaxDegreeAtMost { bound: n + 2 },
    ];
    if !has_independent_triple(g) {
        claims.push(Claim::Free3P1);
    }
    if !has_edge_plus_isolated(g) {
        claims.push(Claim::FreeP1P2);
    }
    let cert = ReductionCertificate {
        construction: Construction::ThreeP1,
        params: params(&[("a", a as u64)]),
        gadget: None,
        seed_digest: digest(inst),
        seed_n: n,
        claims,
        copies: Vec::new(),
    };
    Ok((out, cert))
}

fn has_independent_triple(g: &Graph) -> bool {
    let n = g.n();
    (0..n).any(|a| {
        (a + 1..n).any(|b| !g.has_edge(a, b) && (b + 1..n).any(|c| !g.has_edge(a, c) && !g.has_edge(b, c)))
    })
}

fn has_edge_plus_isolated(g: &Graph) -> bool {
    g.edges()
        .any(|(a, b)| g.vertices().any(|c| c != a && c != b && !g.has_edge(a, c) && !g.has_edge(b, c)))
}

/// Runs the certificate's builder again on `seed`.
pub(crate) fn rebuild(seed: &Instance, cert: &ReductionCertificate) -> Result<(Instance, ReductionCertificate)> {
    let gadget = || {
        cert.gadget
            .as_ref()
            .ok_or_else(|| Error::Input(format!("{} certificate lacks its gadget", cert.construction)))
    };
    let p = |k: &str| cert.param(k).map(|x| x as usize);
    match cert.construction {
        Construction::GirthLift => build_girth_lift(seed, p("p")?),
        Construction::ThreeRegCase1 => build_3reg_case1(&seed.graph, gadget()?, p("r")?),
        Construction::ThreeRegCase2 => build_3reg_case2(seed, gadget()?, p("r")?),
        Construction::FourReg => build_4reg_instance(seed, gadget()?, p("r")?),
        Construction::ButterflySafe => build_butterfly_safe(seed, gadget()?, p("r")?),
        Construction::PendantPrecolour => {
            let (g, pre, c) = build_pendant_precolour(&seed.graph, p("k")?)?;
            Ok((Instance::precolouring_extension(g, pre)?, c))
        }
        Construction::PendantClique => build_pendant_clique(&seed.graph, p("k")?),
        Construction::ThreeP1 => build_3p1_instance(seed),
    }
}
