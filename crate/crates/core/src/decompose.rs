//! Blocks, cut vertices, the block-cut tree and Gallai-tree recognition.

use serde::{Deserialize, Serialize};

use crate::error::{input, Result};
use crate::graph::{Graph, Vertex};

/// Biconnected blocks of a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Vertex sets of the blocks, each sorted; blocks are ordered
    /// lexicographically, hence by smallest contained vertex.
    pub blocks: Vec<Vec<Vertex>>,
    /// Sorted cut vertices.
    pub cut_vertices: Vec<Vertex>,
    /// Block-cut tree edges `(block index, cut vertex)`.
    pub tree_edges: Vec<(usize, Vertex)>,
}

impl BlockDecomposition {
    pub fn is_cut_vertex(&self, v: Vertex) -> bool {
        self.cut_vertices.binary_search(&v).is_ok()
    }

    /// Cut vertices contained in block `b`.
    pub fn cuts_of(&self, b: usize) -> Vec<Vertex> {
        self.blocks[b]
            .iter()
            .copied()
            .filter(|&v| self.is_cut_vertex(v))
            .collect()
    }

    /// Edges of block `b` (all edges of the graph between block vertices).
    pub fn block_edge_count(&self, g: &Graph, b: usize) -> usize {
        let block = &self.blocks[b];
        block
            .iter()
            .map(|&v| {
                g.neighbours(v)
                    .iter()
                    .filter(|&&w| w > v && block.binary_search(&w).is_ok())
                    .count()
            })
            .sum()
    }
}

/// Shape of a block, as far as list colouring is concerned.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BlockKind {
    /// Complete graph; includes `K_1`, `K_2` and the triangle.
    Clique,
    /// Cycle on at least four vertices.
    Cycle,
    Other,
}

/// Hopcroft-Tarjan low-point decomposition, iterative.
pub fn blocks(g: &Graph) -> BlockDecomposition {
    const UNSEEN: usize = usize::MAX;
    let n = g.n();
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut next_edge = vec![0usize; n];
    let mut is_cut = vec![false; n];
    let mut stack: Vec<Vertex> = Vec::new();
    let mut blocks: Vec<Vec<Vertex>> = Vec::new();
    let mut timer = 0;

    for root in g.vertices() {
        if disc[root] != UNSEEN {
            continue;
        }
        if g.degree(root) == 0 {
            disc[root] = timer;
            timer += 1;
            blocks.push(vec![root]);
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        stack.push(root);
        let mut root_children = 0;
        // (vertex, parent)
        let mut call: Vec<(Vertex, Vertex)> = vec![(root, UNSEEN)];
        while let Some(&(v, parent)) = call.last() {
            if next_edge[v] < g.degree(v) {
                let w = g.neighbours(v)[next_edge[v]];
                next_edge[v] += 1;
                if disc[w] == UNSEEN {
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    stack.push(w);
                    call.push((w, v));
                    if v == root {
                        root_children += 1;
                    }
                } else if w != parent {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                call.pop();
                if parent == UNSEEN {
                    continue;
                }
                low[parent] = low[parent].min(low[v]);
                if low[v] >= disc[parent] {
                    if parent != root {
                        is_cut[parent] = true;
                    }
                    let mut block = vec![parent];
                    while let Some(x) = stack.pop() {
                        block.push(x);
                        if x == v {
                            break;
                        }
                    }
                    block.sort_unstable();
                    blocks.push(block);
                }
            }
        }
        stack.clear();
        if root_children > 1 {
            is_cut[root] = true;
        }
    }

    blocks.sort();
    let cut_vertices: Vec<Vertex> = g.vertices().filter(|&v| is_cut[v]).collect();
    let tree_edges = blocks
        .iter()
        .enumerate()
        .flat_map(|(b, block)| {
            block
                .iter()
                .copied()
                .filter(|&v| is_cut[v])
                .map(move |v| (b, v))
                .collect::<Vec<_>>()
        })
        .collect();
    BlockDecomposition {
        blocks,
        cut_vertices,
        tree_edges,
    }
}

/// Classifies the subgraph induced by `block`.
pub fn classify_block(g: &Graph, block: &[Vertex]) -> BlockKind {
    classify(&g.induced(block))
}

/// Classifies a graph that is itself a single block.
pub fn classify(h: &Graph) -> BlockKind {
    if h.is_complete() {
        BlockKind::Clique
    } else if h.is_cycle() {
        BlockKind::Cycle
    } else {
        BlockKind::Other
    }
}

/// Verdict of [`is_gallai_tree`] with the kind of each block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GallaiReport {
    pub is_gallai_tree: bool,
    pub kinds: Vec<BlockKind>,
    pub decomposition: BlockDecomposition,
}

/// Whether every block of the connected graph `g` is a clique or a cycle.
pub fn is_gallai_tree(g: &Graph) -> Result<GallaiReport> {
    if !g.is_connected() {
        return input("Gallai-tree recognition needs a connected graph");
    }
    let decomposition = blocks(g);
    let kinds: Vec<BlockKind> = decomposition
        .blocks
        .iter()
        .map(|b| classify_block(g, b))
        .collect();
    Ok(GallaiReport {
        is_gallai_tree: kinds.iter().all(|&k| k != BlockKind::Other),
        kinds,
        decomposition,
    })
}

/// A block containing exactly one cut vertex, with that vertex; `None`
/// when the graph has a single block.
pub fn leaf_block(d: &BlockDecomposition) -> Option<(usize, Vertex)> {
    if d.blocks.len() <= 1 {
        return None;
    }
    (0..d.blocks.len()).find_map(|b| match d.cuts_of(b).as_slice() {
        [u] => Some((b, *u)),
        _ => None,
    })
}

/// At least three vertices, connected, and no cut vertex.
pub fn is_2connected(g: &Graph) -> bool {
    g.n() >= 3 && g.is_connected() && blocks(g).cut_vertices.is_empty()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::*;

    #[test]
    fn butterfly_has_two_triangles() {
        let d = blocks(&butterfly());
        assert_eq!(d.blocks, vec![vec![0, 1, 2], vec![0, 3, 4]]);
        assert_eq!(d.cut_vertices, vec![0]);
        assert_eq!(d.tree_edges, vec![(0, 0), (1, 0)]);
    }

    #[test]
    fn path_blocks_are_edges() {
        let d = blocks(&path(4));
        assert_eq!(d.blocks, vec![vec![0, 1], vec![1, 2], vec![2, 3]]);
        assert_eq!(d.cut_vertices, vec![1, 2]);
    }

    #[test]
    fn k4_is_one_block() {
        let d = blocks(&complete(4));
        assert_eq!(d.blocks.len(), 1);
        assert!(d.cut_vertices.is_empty());
        assert_eq!(leaf_block(&d), None);
    }

    #[test]
    fn isolated_vertices_are_blocks() {
        let d = blocks(&Graph::empty(2));
        assert_eq!(d.blocks, vec![vec![0], vec![1]]);
    }

    #[test]
    fn gallai_examples() {
        assert!(is_gallai_tree(&complete(4)).unwrap().is_gallai_tree);
        assert!(is_gallai_tree(&butterfly()).unwrap().is_gallai_tree);
        let r = is_gallai_tree(&complete_bipartite(2, 3)).unwrap();
        assert!(!r.is_gallai_tree);
        assert_eq!(r.kinds, vec![BlockKind::Other]);
        assert!(is_gallai_tree(&Graph::empty(2)).is_err());
    }

    #[test]
    fn triangle_is_a_clique_and_c4_a_cycle() {
        assert_eq!(classify(&complete(3)), BlockKind::Clique);
        assert_eq!(classify(&cycle(4).unwrap()), BlockKind::Cycle);
        assert_eq!(classify(&path(2)), BlockKind::Clique);
        assert_eq!(classify(&diamond()), BlockKind::Other);
    }

    #[test]
    fn leaf_blocks() {
        let d = blocks(&path(3));
        assert_eq!(leaf_block(&d), Some((0, 1)));
        let d = blocks(&butterfly());
        assert_eq!(leaf_block(&d), Some((0, 0)));
    }

    #[test]
    fn two_connectivity() {
        assert!(is_2connected(&cycle(4).unwrap()));
        assert!(!is_2connected(&path(3)));
        assert!(!is_2connected(&butterfly()));
        assert!(!is_2connected(&path(2)));
    }
}
