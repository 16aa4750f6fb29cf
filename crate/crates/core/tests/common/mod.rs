#![allow(dead_code)]

use std::collections::{BTreeMap, HashSet};

use listcol::{Colour, ColourSet, Graph, GraphBuilder, Instance, ListAssignment, Precolouring, Vertex};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Plain backtracking in vertex order, no heuristics.
pub fn brute_colourable(g: &Graph, lists: &[ColourSet]) -> bool {
    fn go(g: &Graph, lists: &[ColourSet], colour: &mut Vec<Colour>, v: usize) -> bool {
        if v == g.n() {
            return true;
        }
        for c in lists[v].iter() {
            if g.neighbours(v).iter().all(|&w| w >= v || colour[w] != c) {
                colour[v] = c;
                if go(g, lists, colour, v + 1) {
                    return true;
                }
            }
        }
        false
    }
    go(g, lists, &mut vec![0; g.n()], 0)
}

pub fn brute_instance(inst: &Instance) -> bool {
    brute_colourable(&inst.graph, &inst.effective_lists())
}

pub fn list(cs: &[Colour]) -> ColourSet {
    ColourSet::new(cs.to_vec())
}

pub fn instance(g: &Graph, lists: Vec<ColourSet>) -> Instance {
    Instance::new(g.clone(), ListAssignment::new(lists).unwrap()).unwrap()
}

/// Every `k`-subset of `1..=u`.
pub fn subsets(u: Colour, k: usize) -> Vec<ColourSet> {
    let mut out = Vec::new();
    for mask in 0u32..(1 << u) {
        if mask.count_ones() as usize == k {
            out.push((1..=u).filter(|c| mask >> (c - 1) & 1 == 1).collect());
        }
    }
    out
}

/// Calls `f` on every assignment picking `options[v][..]` at each vertex.
pub fn each_assignment(options: &[Vec<ColourSet>], mut f: impl FnMut(&[ColourSet])) {
    let n = options.len();
    if options.iter().any(Vec::is_empty) {
        return;
    }
    let mut idx = vec![0usize; n];
    let mut cur: Vec<ColourSet> = options.iter().map(|o| o[0].clone()).collect();
    loop {
        f(&cur);
        let mut i = 0;
        loop {
            if i == n {
                return;
            }
            idx[i] += 1;
            if idx[i] < options[i].len() {
                cur[i] = options[i][idx[i]].clone();
                break;
            }
            idx[i] = 0;
            cur[i] = options[i][0].clone();
            i += 1;
        }
    }
}

fn pair_bit(i: usize, j: usize) -> u32 {
    let (a, b) = if i < j { (i, j) } else { (j, i) };
    1 << (b * (b - 1) / 2 + a)
}

fn mask_of(g: &Graph) -> u32 {
    g.edges().fold(0, |m, (u, v)| m | pair_bit(u, v))
}

fn from_mask(n: usize, mask: u32) -> Graph {
    let mut edges = Vec::new();
    for b in 1..n {
        for a in 0..b {
            if mask & pair_bit(a, b) != 0 {
                edges.push((a, b));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Minimum relabelled edge mask over orderings that sort vertices by
/// degree; the set of such orderings is isomorphism invariant.
fn canonical(n: usize, mask: u32) -> u32 {
    let mut deg = vec![0usize; n];
    for b in 1..n {
        for a in 0..b {
            if mask & pair_bit(a, b) != 0 {
                deg[a] += 1;
                deg[b] += 1;
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(deg[v]));
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for &v in &order {
        match groups.last_mut() {
            Some(g) if deg[g[0]] == deg[v] => g.push(v),
            _ => groups.push(vec![v]),
        }
    }
    let mut best = u32::MAX;
    let mut perm = vec![0usize; n];
    fn walk(groups: &mut [Vec<usize>], gi: usize, mask: u32, n: usize, perm: &mut Vec<usize>, best: &mut u32) {
        if gi == groups.len() {
            // perm[position] = old vertex
            let mut pos = vec![0usize; n];
            for (p, &v) in perm.iter().enumerate() {
                pos[v] = p;
            }
            let mut m = 0;
            for b in 1..n {
                for a in 0..b {
                    if mask & pair_bit(a, b) != 0 {
                        m |= pair_bit(pos[a], pos[b]);
                    }
                }
            }
            *best = (*best).min(m);
            return;
        }
        let start: usize = groups[..gi].iter().map(Vec::len).sum();
        let len = groups[gi].len();
        let mut idx: Vec<usize> = (0..len).collect();
        loop {
            for (k, &i) in idx.iter().enumerate() {
                perm[start + k] = groups[gi][i];
            }
            walk(groups, gi + 1, mask, n, perm, best);
            if !next_permutation(&mut idx) {
                break;
            }
        }
    }
    walk(&mut groups, 0, mask, n, &mut perm, &mut best);
    best
}

fn next_permutation(a: &mut [usize]) -> bool {
    let Some(i) = (1..a.len()).rev().find(|&i| a[i - 1] < a[i]) else {
        return false;
    };
    let j = (i..a.len()).rev().find(|&j| a[j] > a[i - 1]).unwrap();
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// All graphs on `n` vertices up to isomorphism, for `n <= 7`.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= 7);
    let mut level: Vec<u32> = vec![0];
    for k in 1..n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for &m in &level {
            for nb in 0u32..(1 << k) {
                let mut mm = m;
                for a in 0..k {
                    if nb >> a & 1 == 1 {
                        mm |= pair_bit(a, k);
                    }
                }
                let c = canonical(k + 1, mm);
                if seen.insert(c) {
                    next.push(c);
                }
            }
        }
        level = next;
    }
    if n == 0 {
        return vec![Graph::empty(0)];
    }
    level.sort_unstable();
    level.into_iter().map(|m| from_mask(n, m)).collect()
}

/// Connected graphs on `1..=n` vertices up to isomorphism.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    (1..=n).flat_map(all_graphs).filter(Graph::is_connected).collect()
}

/// Every graph on `n + 1` vertices arises from some graph on `n`
/// vertices plus one vertex; isomorphic repeats are kept.
pub fn one_vertex_extensions(gs: &[Graph]) -> Vec<Graph> {
    let mut out = Vec::new();
    for g in gs {
        let n = g.n();
        let base = mask_of(g);
        for nb in 0u32..(1 << n) {
            let mut m = base;
            for a in 0..n {
                if nb >> a & 1 == 1 {
                    m |= pair_bit(a, n);
                }
            }
            out.push(from_mask(n + 1, m));
        }
    }
    out
}

/// Random connected graph on `n` vertices with maximum degree at most
/// `cap` and roughly `extra` edges beyond a spanning tree.
pub fn random_connected(r: &mut ChaCha8Rng, n: usize, cap: usize, extra: usize) -> Graph {
    assert!(n == 1 || cap >= 2);
    let mut b = GraphBuilder::new(n);
    let mut deg = vec![0usize; n];
    for v in 1..n {
        let open: Vec<usize> = (0..v).filter(|&u| deg[u] < cap).collect();
        let u = *open.choose(r).expect("a path always has an open endpoint");
        b.add_edge(u, v).unwrap();
        deg[u] += 1;
        deg[v] += 1;
    }
    for _ in 0..extra {
        if n < 2 {
            break;
        }
        let u = r.gen_range(0..n);
        let v = r.gen_range(0..n);
        if u != v && !b.has_edge(u, v) && deg[u] < cap && deg[v] < cap {
            b.add_edge(u, v).unwrap();
            deg[u] += 1;
            deg[v] += 1;
        }
    }
    b.build()
}

/// Random graph with edge probability `p`.
pub fn random_graph(r: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for v in 0..n {
        for u in 0..v {
            if r.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Random `k`-subset of `1..=u`.
pub fn random_list(r: &mut ChaCha8Rng, u: Colour, k: usize) -> ColourSet {
    let mut all: Vec<Colour> = (1..=u).collect();
    all.shuffle(r);
    all.truncate(k);
    ColourSet::new(all)
}

/// Random proper partial colouring with palette `1..=k`, each vertex
/// precoloured with probability `p`.
pub fn random_precolouring(r: &mut ChaCha8Rng, g: &Graph, k: Colour, p: f64) -> Precolouring {
    let mut assignment = BTreeMap::new();
    for v in g.vertices() {
        if !r.gen_bool(p) {
            continue;
        }
        let used: Vec<Colour> = g.neighbours(v).iter().filter_map(|w| assignment.get(w).copied()).collect();
        let free: Vec<Colour> = (1..=k).filter(|c| !used.contains(c)).collect();
        if let Some(&c) = free.choose(r) {
            assignment.insert(v as Vertex, c);
        }
    }
    Precolouring::new(k, assignment)
}

/// Length of the shortest cycle by trying every simple closed walk whose
/// smallest vertex is its start.
pub fn brute_girth(g: &Graph) -> Option<usize> {
    (3..=g.n()).find(|&k| brute_has_cycle(g, k))
}

pub fn brute_has_cycle(g: &Graph, k: usize) -> bool {
    fn extend(g: &Graph, s: usize, path: &mut Vec<usize>, k: usize) -> bool {
        let last = *path.last().unwrap();
        if path.len() == k {
            return g.has_edge(last, s);
        }
        for &w in g.neighbours(last) {
            if w > s && !path.contains(&w) {
                path.push(w);
                if extend(g, s, path, k) {
                    return true;
                }
                path.pop();
            }
        }
        false
    }
    g.vertices().any(|s| extend(g, s, &mut vec![s], k))
}

/// Two triangles meeting in exactly one vertex.
pub fn brute_has_butterfly(g: &Graph) -> bool {
    for c in g.vertices() {
        let nb = g.neighbours(c);
        for (i, &a) in nb.iter().enumerate() {
            for &b in &nb[i + 1..] {
                if !g.has_edge(a, b) {
                    continue;
                }
                for (j, &x) in nb.iter().enumerate() {
                    for &y in &nb[j + 1..] {
                        if g.has_edge(x, y) && ![a, b].contains(&x) && ![a, b].contains(&y) {
                            return true;
                        }
                    }
                }
            }
        }
    }
    false
}

/// Random Gallai tree: blocks are cliques on 2 to 4 vertices or cycles on
/// 4 to 6 vertices, each new block glued at one existing vertex.
pub fn random_gallai_tree(r: &mut ChaCha8Rng, blocks: usize) -> Graph {
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut n = 1usize;
    for _ in 0..blocks {
        let at = r.gen_range(0..n);
        let mut vs = vec![at];
        if r.gen_bool(0.5) {
            let size = r.gen_range(2..=4);
            vs.extend(n..n + size - 1);
            n += size - 1;
            for i in 0..vs.len() {
                for j in i + 1..vs.len() {
                    edges.push((vs[i], vs[j]));
                }
            }
        } else {
            let len = r.gen_range(4..=6);
            vs.extend(n..n + len - 1);
            n += len - 1;
            for i in 0..len {
                edges.push((vs[i], vs[(i + 1) % len]));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}
