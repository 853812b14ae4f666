use super::EdgeColoring;
use crate::error::{Error, Result};
use crate::families::{canonical_hyperedges, is_shrinkable, FamilyKind};
use crate::geometry::PointSet;
use crate::hypergraph::{EdgeSet, Hypergraph};
use crate::verify::planarity_check;
use crate::vertex_set::VertexSet;

/// The graph on Delaunay-edges in which two edges are adjacent when they
/// share an endpoint and their three endpoints form a hyperedge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConflictGraph {
    /// Vertices of the graph, by index.
    pub vertices: EdgeSet,
    /// Adjacent vertex index pairs `(a, b)` with `a < b`, sorted.
    pub edges: Vec<(usize, usize)>,
}

impl ConflictGraph {
    pub fn from_hypergraph(h: &Hypergraph) -> Self {
        let vertices = h.size_two_edges();
        let adj = vertices.adjacency();
        let mut edges = Vec::new();
        for (v, nbrs) in adj.iter().enumerate() {
            for (a, &x) in nbrs.iter().enumerate() {
                for &y in &nbrs[a + 1..] {
                    if h.contains(&VertexSet::from_indices([v, x, y])) {
                        let e1 = vertices.index_of(v, x).unwrap();
                        let e2 = vertices.index_of(v, y).unwrap();
                        edges.push((e1.min(e2), e1.max(e2)));
                    }
                }
            }
        }
        edges.sort_unstable();
        edges.dedup();
        ConflictGraph { vertices, edges }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        EdgeSet::from_unsorted(self.len(), self.edges.clone()).adjacency()
    }

    pub fn is_planar(&self) -> bool {
        planarity_check(self.len(), &self.edges)
    }

    /// A proper coloring with at most `k` colors, found by exact
    /// backtracking in saturation order, if one exists.
    pub fn color(&self, k: u32) -> Option<Vec<u32>> {
        let adj = self.adjacency();
        let mut colors = vec![0u32; self.len()];
        dsatur(&adj, k, &mut colors, 0).then_some(colors)
    }
}

fn dsatur(adj: &[Vec<usize>], k: u32, colors: &mut [u32], done: usize) -> bool {
    if done == colors.len() {
        return true;
    }
    let saturation = |v: usize| {
        let mut seen = 0u64;
        for &u in &adj[v] {
            if colors[u] > 0 {
                seen |= 1 << colors[u];
            }
        }
        seen
    };
    // Most saturated, then highest degree, then smallest index.
    let v = (0..colors.len())
        .filter(|&v| colors[v] == 0)
        .max_by_key(|&v| (saturation(v).count_ones(), adj[v].len(), std::cmp::Reverse(v)))
        .unwrap();
    let blocked = saturation(v);
    for c in 1..=k {
        if blocked >> c & 1 == 0 {
            colors[v] = c;
            if dsatur(adj, k, colors, done + 1) {
                return true;
            }
        }
    }
    colors[v] = 0;
    false
}

/// `J` for the disk family.
pub fn build_conflict_graph_j(s: &PointSet) -> Result<ConflictGraph> {
    let h = canonical_hyperedges(s, &FamilyKind::Disk)?;
    Ok(ConflictGraph::from_hypergraph(&h))
}

/// Colors the disk Delaunay-edges with at most four colors by properly
/// coloring `J`, so every disk containing at least three points contains two
/// differently colored Delaunay-edges.
pub fn color_disk_edges(s: &PointSet) -> Result<EdgeColoring> {
    let h = canonical_hyperedges(s, &FamilyKind::Disk)?;
    if let (false, Some((e, p))) = is_shrinkable(&h) {
        return Err(Error::Inconsistent(format!(
            "disk hypergraph is not shrinkable at hyperedge {e:?}, point {p}"
        )));
    }
    let j = ConflictGraph::from_hypergraph(&h);
    let colors = j.color(4).ok_or_else(|| {
        Error::Inconsistent(format!(
            "conflict graph on {} Delaunay-edges needs more than 4 colors (planar: {})",
            j.len(),
            j.is_planar()
        ))
    })?;
    EdgeColoring::new(4, j.vertices.edges().iter().copied().zip(colors))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_is_a_triangle() {
        let s = PointSet::from_ints(&[[0, 0], [5, 1], [2, 4]]).unwrap();
        let j = build_conflict_graph_j(&s).unwrap();
        assert_eq!(j.len(), 3);
        assert_eq!(j.edges, vec![(0, 1), (0, 2), (1, 2)]);
        let c = color_disk_edges(&s).unwrap();
        assert_eq!(c.colors_used(), 3);
    }

    #[test]
    fn two_points() {
        let s = PointSet::from_ints(&[[0, 0], [5, 1]]).unwrap();
        let j = build_conflict_graph_j(&s).unwrap();
        assert_eq!((j.len(), j.edges.len()), (1, 0));
        assert_eq!(color_disk_edges(&s).unwrap().get(0, 1), Some(1));
    }

    #[test]
    fn perturbed_square() {
        let s = PointSet::from_ints(&[[0, 0], [10, 1], [11, 10], [1, 9]]).unwrap();
        let j = build_conflict_graph_j(&s).unwrap();
        assert!(j.is_planar());
        assert!(color_disk_edges(&s).unwrap().colors_used() <= 4);
    }

    #[test]
    fn dsatur_finds_exact_chromatic_number() {
        // Odd wheel W5: chromatic number 4.
        let mut edges: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).map(|(a, b)| (a.min(b), a.max(b))).collect();
        edges.extend((0..5).map(|i| (i, 5)));
        edges.sort_unstable();
        let vertices = EdgeSet::new(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap();
        let j = ConflictGraph { vertices, edges };
        assert!(j.color(3).is_none());
        let c = j.color(4).unwrap();
        assert!(j.edges.iter().all(|&(a, b)| c[a] != c[b]));
    }
}
