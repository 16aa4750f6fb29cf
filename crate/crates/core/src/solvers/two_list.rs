//! Lists of size at most two reduce to 2-SAT: one boolean per vertex
//! choosing between its two colours.

use super::{Method, SolveResult, Stats};
use crate::error::{input, Result};
use crate::graph::Graph;
use crate::lists::{Colour, ColourSet, Instance};

pub fn solve_2list(inst: &Instance) -> Result<SolveResult> {
    let lists = inst.effective_lists();
    if let Some((v, l)) = lists.iter().enumerate().find(|(_, l)| l.len() > 2) {
        return input(format!("vertex {v} has list {l} of size {}, expected at most 2", l.len()));
    }
    let colours = two_list_lists(&inst.graph, &lists);
    Ok(SolveResult::from_option(colours, Method::TwoList, Stats::default()))
}

/// Literal `2v` picks the first colour of `L(v)`, `2v + 1` the second.
pub(crate) fn two_list_lists(g: &Graph, lists: &[ColourSet]) -> Option<Vec<Colour>> {
    let n = g.n();
    if lists.iter().any(ColourSet::is_empty) {
        return None;
    }
    let lit = |v: usize, c: Colour| -> Option<usize> {
        let l = lists[v].as_slice();
        if l[0] == c {
            Some(2 * v)
        } else if l.len() == 2 && l[1] == c {
            Some(2 * v + 1)
        } else {
            None
        }
    };
    let mut implications: Vec<(usize, usize)> = Vec::new();
    for (v, l) in lists.iter().enumerate() {
        if l.len() == 1 {
            // The second literal is unusable: not(first) implies first.
            implications.push((2 * v + 1, 2 * v));
        }
    }
    for (u, v) in g.edges() {
        for c in lists[u].iter() {
            if let (Some(a), Some(b)) = (lit(u, c), lit(v, c)) {
                implications.push((a, b ^ 1));
                implications.push((b, a ^ 1));
            }
        }
    }
    let comp = scc(2 * n, &implications);
    let mut out = Vec::with_capacity(n);
    for v in 0..n {
        let (t, f) = (comp[2 * v], comp[2 * v + 1]);
        if t == f {
            return None;
        }
        // Tarjan numbers sink components first; take the later literal.
        let l = lists[v].as_slice();
        out.push(if t < f { l[0] } else { l[1] });
    }
    Some(out)
}

/// Iterative Tarjan; component ids in reverse topological order.
fn scc(n: usize, edges: &[(usize, usize)]) -> Vec<usize> {
    let mut start = vec![0usize; n + 1];
    for &(a, _) in edges {
        start[a + 1] += 1;
    }
    for i in 0..n {
        start[i + 1] += start[i];
    }
    let mut head = vec![0usize; edges.len()];
    let mut fill = start.clone();
    for &(a, b) in edges {
        head[fill[a]] = b;
        fill[a] += 1;
    }

    const NONE: usize = usize::MAX;
    let mut index = vec![NONE; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut comp = vec![NONE; n];
    let mut stack = Vec::new();
    let mut next = vec![0usize; n];
    let mut timer = 0;
    let mut ncomp = 0;
    for root in 0..n {
        if index[root] != NONE {
            continue;
        }
        let mut call = vec![root];
        index[root] = timer;
        low[root] = timer;
        timer += 1;
        stack.push(root);
        on_stack[root] = true;
        next[root] = start[root];
        while let Some(&v) = call.last() {
            if next[v] < start[v + 1] {
                let w = head[next[v]];
                next[v] += 1;
                if index[w] == NONE {
                    index[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    next[w] = start[w];
                    call.push(w);
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                call.pop();
                if let Some(&p) = call.last() {
                    low[p] = low[p].min(low[v]);
                }
                if low[v] == index[v] {
                    loop {
                        let w = stack.pop().expect("scc stack");
                        on_stack[w] = false;
                        comp[w] = ncomp;
                        if w == v {
                            break;
                        }
                    }
                    ncomp += 1;
                }
            }
        }
    }
    comp
}
