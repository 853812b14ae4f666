use rustworkx_core::petgraph::graph::UnGraph;
use rustworkx_core::planar::is_planar;

/// Whether the simple graph on `0..n` with the given edges is planar.
pub fn planarity_check(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut g: UnGraph<(), ()> = UnGraph::with_capacity(n, edges.len());
    for _ in 0..n {
        g.add_node(());
    }
    for &(a, b) in edges {
        g.add_edge((a as u32).into(), (b as u32).into(), ());
    }
    is_planar(&g)
}
