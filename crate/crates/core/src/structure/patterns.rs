//! Subgraph tests for the handful of fixed patterns the hardness
//! constructions care about.

use super::Pattern;
use crate::error::Result;
use crate::graph::{Graph, Vertex};

pub fn contains_pattern(g: &Graph, p: Pattern) -> Result<bool> {
    Ok(match p.validate()? {
        Pattern::Cycle(3) => has_triangle(g),
        Pattern::Cycle(4) => has_c4(g),
        Pattern::Cycle(k) => has_cycle_of_length(g, k),
        Pattern::Butterfly => has_butterfly(g),
        Pattern::Star(r) => g.max_degree() >= r,
    })
}

fn common_neighbours(g: &Graph, u: Vertex, v: Vertex) -> usize {
    let (a, b) = (g.neighbours(u), g.neighbours(v));
    let (mut i, mut j, mut count) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                count += 1;
                i += 1;
                j += 1;
            }
        }
    }
    count
}

fn has_triangle(g: &Graph) -> bool {
    g.edges().any(|(u, v)| common_neighbours(g, u, v) > 0)
}

/// Two vertices with two common neighbours span a 4-cycle.
fn has_c4(g: &Graph) -> bool {
    g.vertices()
        .any(|u| (u + 1..g.n()).any(|v| common_neighbours(g, u, v) >= 2))
}

/// Extends simple paths from each start `s`, using only vertices above
/// `s`, and closes them back to `s`.
fn has_cycle_of_length(g: &Graph, k: usize) -> bool {
    fn extend(g: &Graph, s: Vertex, path: &mut Vec<Vertex>, k: usize) -> bool {
        let last = *path.last().expect("path starts at s");
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

/// Edges inside the neighbourhood of `v`: each closes a triangle at `v`.
fn neighbourhood_edges(g: &Graph, v: Vertex) -> Vec<(Vertex, Vertex)> {
    let ns = g.neighbours(v);
    let mut out = Vec::new();
    for (i, &a) in ns.iter().enumerate() {
        for &b in &ns[i + 1..] {
            if g.has_edge(a, b) {
                out.push((a, b));
            }
        }
    }
    out
}

/// A vertex on two triangles that share nothing else.
fn has_butterfly(g: &Graph) -> bool {
    g.vertices().any(|v| {
        let es = neighbourhood_edges(g, v);
        es.iter().enumerate().any(|(i, &(a, b))| {
            es[i + 1..]
                .iter()
                .any(|&(c, d)| a != c && a != d && b != c && b != d)
        })
    })
}

/// Two distinct triangles with a common vertex.
pub fn has_intersecting_triangles(g: &Graph) -> bool {
    g.vertices().any(|v| neighbourhood_edges(g, v).len() >= 2)
}
