use petgraph::graph::UnGraph;

use crate::graph::Graph;

/// Planarity by the left-right criterion.
///
/// Graphs with `m > 3n - 6` are rejected without running the test.
pub fn is_planar(g: &Graph) -> bool {
    let n = g.n();
    if n >= 3 && g.m() > 3 * n - 6 {
        return false;
    }
    let mut pg: UnGraph<(), ()> = UnGraph::with_capacity(n, g.m());
    let nodes: Vec<_> = (0..n).map(|_| pg.add_node(())).collect();
    for (u, v) in g.edges() {
        pg.add_edge(nodes[u], nodes[v], ());
    }
    rustworkx_core::planar::is_planar(&pg)
}
