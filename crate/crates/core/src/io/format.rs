//! The instance document.
//!
//! ```text
//! # comment
//! n 3 m 2 k 3
//! e 0 1
//! e 1 2
//! l 0 : 1 2
//! p 2 = 3
//! ```
//!
//! The header comes first; other lines may appear in any order. With
//! `k > 0`, vertices without an `l` line get `{1..k}` and `p` lines form a
//! precolouring over that palette. With `k = 0` every vertex needs a list.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::lists::{Colour, ColourSet, Instance, ListAssignment, Precolouring};

fn err<T>(line: usize, msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse {
        line,
        msg: msg.into(),
    })
}

fn num<T: std::str::FromStr>(tok: Option<&str>, line: usize, what: &str) -> Result<T> {
    match tok {
        Some(t) => t
            .parse()
            .map_err(|_| Error::Parse {
                line,
                msg: format!("expected {what}, found {t:?}"),
            }),
        None => err(line, format!("missing {what}")),
    }
}

fn expect(tok: Option<&str>, want: &str, line: usize) -> Result<()> {
    match tok {
        Some(t) if t == want => Ok(()),
        Some(t) => err(line, format!("expected {want:?}, found {t:?}")),
        None => err(line, format!("missing {want:?}")),
    }
}

pub fn parse_instance(text: &str) -> Result<Instance> {
    let mut header: Option<(usize, usize, Colour)> = None;
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    let mut lists: BTreeMap<Vertex, (ColourSet, usize)> = BTreeMap::new();
    let mut pre: BTreeMap<Vertex, (Colour, usize)> = BTreeMap::new();
    let mut last_line = 0;

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let mut toks = content.split_whitespace();
        let tag = toks.next().expect("non-empty line has a token");
        let Some((n, _, _)) = header else {
            if tag != "n" {
                return err(line, "the first line must be the header `n <n> m <m> k <k>`");
            }
            let n: usize = num(toks.next(), line, "vertex count")?;
            expect(toks.next(), "m", line)?;
            let m: usize = num(toks.next(), line, "edge count")?;
            expect(toks.next(), "k", line)?;
            let k: Colour = num(toks.next(), line, "palette size")?;
            if let Some(extra) = toks.next() {
                return err(line, format!("unexpected {extra:?} after header"));
            }
            header = Some((n, m, k));
            continue;
        };
        let vertex = |tok: Option<&str>| -> Result<Vertex> {
            let v: Vertex = num(tok, line, "vertex")?;
            if v >= n {
                return err(line, format!("vertex {v} out of range 0..{n}"));
            }
            Ok(v)
        };
        match tag {
            "e" => {
                let u = vertex(toks.next())?;
                let v = vertex(toks.next())?;
                if let Some(extra) = toks.next() {
                    return err(line, format!("unexpected {extra:?} after edge"));
                }
                edges.push((u, v));
            }
            "l" => {
                let v = vertex(toks.next())?;
                expect(toks.next(), ":", line)?;
                let colours = toks
                    .map(|t| num::<Colour>(Some(t), line, "colour"))
                    .collect::<Result<Vec<_>>>()?;
                if colours.is_empty() {
                    return err(line, format!("empty list for vertex {v}"));
                }
                let set = ColourSet::new(colours.clone());
                if set.len() != colours.len() {
                    return err(line, format!("repeated colour in list of vertex {v}"));
                }
                if let Some((_, first)) = lists.insert(v, (set, line)) {
                    return err(line, format!("second list for vertex {v} (first on line {first})"));
                }
            }
            "p" => {
                let v = vertex(toks.next())?;
                expect(toks.next(), "=", line)?;
                let c: Colour = num(toks.next(), line, "colour")?;
                if let Some(extra) = toks.next() {
                    return err(line, format!("unexpected {extra:?} after precolour"));
                }
                if let Some((_, first)) = pre.insert(v, (c, line)) {
                    return err(line, format!("second precolour for vertex {v} (first on line {first})"));
                }
            }
            other => return err(line, format!("unknown line type {other:?}")),
        }
    }

    let Some((n, m, k)) = header else {
        return err(last_line.max(1), "missing header");
    };
    if edges.len() != m {
        return err(last_line, format!("header declares {m} edges, found {}", edges.len()));
    }
    let graph = Graph::from_edges(n, edges.iter().copied()).map_err(|e| Error::Parse {
        line: last_line,
        msg: e.to_string(),
    })?;
    let mut all = Vec::with_capacity(n);
    for v in 0..n {
        match lists.remove(&v) {
            Some((l, _)) => all.push(l),
            None if k > 0 => all.push(ColourSet::palette(k)),
            None => return err(last_line, format!("vertex {v} has no list and k = 0")),
        }
    }
    let lists = ListAssignment::new(all)?;
    let precolouring = if pre.is_empty() {
        None
    } else {
        if k == 0 {
            let line = pre.values().map(|&(_, l)| l).min().unwrap_or(last_line);
            return err(line, "precolour lines need a palette k > 0");
        }
        Some(Precolouring::new(k, pre.into_iter().map(|(v, (c, _))| (v, c)).collect()))
    };
    Instance::with_precolouring(graph, lists, precolouring).map_err(|e| Error::Parse {
        line: last_line,
        msg: e.to_string(),
    })
}

/// Canonical text: header, sorted edges, every list, sorted precolours.
pub fn write_instance(inst: &Instance) -> String {
    let g = &inst.graph;
    let k = inst.precolouring.as_ref().map_or(0, |p| p.k);
    let mut out = format!("n {} m {} k {}\n", g.n(), g.m(), k);
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {u} {v}");
    }
    for (v, l) in inst.lists.iter().enumerate() {
        let _ = write!(out, "l {v} :");
        for c in l.iter() {
            let _ = write!(out, " {c}");
        }
        out.push('\n');
    }
    if let Some(p) = &inst.precolouring {
        for (v, c) in &p.assignment {
            let _ = writeln!(out, "p {v} = {c}");
        }
    }
    out
}
