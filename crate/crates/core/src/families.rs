//! Standard graph families: paths, cycles, cliques, wheels and friends.

use crate::error::{input, Result};
use crate::graph::{Graph, GraphBuilder};

/// `P_n`: the path on `n` vertices.
pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("path edges are simple")
}

/// `C_n`: the cycle on `n >= 3` vertices.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return input(format!("C_{n}: a cycle needs at least 3 vertices"));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// `K_n`.
pub fn complete(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
        .expect("clique edges are simple")
}

/// `K_{a,b}` with sides `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    Graph::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
        .expect("biclique edges are simple")
}

/// `K_{1,r}` with centre 0.
pub fn star(r: usize) -> Graph {
    complete_bipartite(1, r)
}

/// `W_n`: hub 0 joined to the cycle `1..n`, so `W_n` has `n >= 4` vertices.
pub fn wheel(n: usize) -> Result<Graph> {
    if n < 4 {
        return input(format!("W_{n}: a wheel needs at least 4 vertices"));
    }
    let rim = n - 1;
    let mut b = GraphBuilder::new(n);
    for i in 0..rim {
        b.add_edge(0, i + 1)?;
        b.add_edge(i + 1, (i + 1) % rim + 1)?;
    }
    Ok(b.build())
}

/// Two triangles sharing vertex 0.
pub fn butterfly() -> Graph {
    Graph::from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])
        .expect("butterfly edges are simple")
}

/// `K_4` minus an edge; the missing edge is `0-3`.
pub fn diamond() -> Graph {
    Graph::from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).expect("diamond edges are simple")
}

pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((i + 5, (i + 2) % 5 + 5));
    }
    Graph::from_edges(10, edges).expect("petersen edges are simple")
}

/// The `rows x cols` grid, vertex `r * cols + c`.
pub fn grid(rows: usize, cols: usize) -> Graph {
    let mut edges = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            let v = r * cols + c;
            if c + 1 < cols {
                edges.push((v, v + 1));
            }
            if r + 1 < rows {
                edges.push((v, v + cols));
            }
        }
    }
    Graph::from_edges(rows * cols, edges).expect("grid edges are simple")
}

/// `k` disjoint copies of `g`.
pub fn copies(g: &Graph, k: usize) -> Graph {
    (0..k).fold(Graph::empty(0), |acc, _| acc.disjoint_union(g))
}

/// Looks up a family by name with explicit integer parameters.
///
/// Recognised names: `path`/`P`, `cycle`/`C`, `complete`/`K`,
/// `bipartite`/`Kab`, `star`, `wheel`/`W`, `butterfly`, `diamond`,
/// `petersen`, `grid`, `empty`.
pub fn named_graph(family: &str, params: &[usize]) -> Result<Graph> {
    let want = |k: usize| -> Result<()> {
        if params.len() == k {
            Ok(())
        } else {
            input(format!("family {family} takes {k} parameter(s), got {}", params.len()))
        }
    };
    match family.to_ascii_lowercase().as_str() {
        "path" | "p" => {
            want(1)?;
            if params[0] == 0 {
                return input("P_0 has no vertices");
            }
            Ok(path(params[0]))
        }
        "cycle" | "c" => {
            want(1)?;
            cycle(params[0])
        }
        "complete" | "k" => {
            want(1)?;
            if params[0] == 0 {
                return input("K_0 has no vertices");
            }
            Ok(complete(params[0]))
        }
        "bipartite" | "kab" => {
            want(2)?;
            if params[0] == 0 || params[1] == 0 {
                return input("K_{a,b} needs a, b >= 1");
            }
            Ok(complete_bipartite(params[0], params[1]))
        }
        "star" => {
            want(1)?;
            Ok(star(params[0]))
        }
        "wheel" | "w" => {
            want(1)?;
            wheel(params[0])
        }
        "butterfly" => {
            want(0)?;
            Ok(butterfly())
        }
        "diamond" => {
            want(0)?;
            Ok(diamond())
        }
        "petersen" => {
            want(0)?;
            Ok(petersen())
        }
        "grid" => {
            want(2)?;
            Ok(grid(params[0], params[1]))
        }
        "empty" => {
            want(1)?;
            Ok(Graph::empty(params[0]))
        }
        other => input(format!("unknown graph family {other:?}")),
    }
}

/// Parses compact names such as `K4`, `C5`, `P3`, `W6`, `K2,3`, `K1,4`,
/// `grid5x5`, `star3`, `butterfly` or `petersen`.
pub fn parse_family(spec: &str) -> Result<Graph> {
    let s = spec.trim();
    let lower = s.to_ascii_lowercase();
    for word in ["butterfly", "diamond", "petersen"] {
        if lower == word {
            return named_graph(word, &[]);
        }
    }
    let split = lower
        .find(|c: char| c.is_ascii_digit())
        .ok_or_else(|| crate::Error::Input(format!("cannot parse family {s:?}")))?;
    let (name, rest) = lower.split_at(split);
    let nums: Vec<usize> = rest
        .split([',', 'x'])
        .map(|t| t.parse::<usize>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| crate::Error::Input(format!("cannot parse parameters of {s:?}")))?;
    let name = match (name, nums.len()) {
        ("k", 2) => "bipartite",
        (n, _) => n,
    };
    named_graph(name, &nums)
}
