use num::Signed;

use super::EdgeColoring;
use crate::error::Result;
use crate::families::{delaunay_edges, FamilyKind};
use crate::geometry::{convex_hull, orient2d, PointSet};

/// Halfplane Delaunay-edges in the order the hull traversal visits them.
///
/// The walk starts at the lexicographically smallest hull vertex and moves
/// clockwise along the hull. At each vertex the incident Delaunay-edges are
/// listed counter-clockwise, starting from the edge to the previously visited
/// vertex; edges listed before are skipped.
pub fn halfplane_traversal(s: &PointSet) -> Result<Vec<(usize, usize)>> {
    let edges = delaunay_edges(s, &FamilyKind::Halfplane)?;
    let hull = convex_hull(s)?;
    if hull.len() <= 2 {
        return Ok(edges.edges().to_vec());
    }
    let adj = edges.adjacency();
    let pts = s.points();
    let m = hull.len();
    // Clockwise walk: h[0], h[m-1], ..., h[1].
    let walk: Vec<usize> = (0..m).map(|i| hull[(m - i) % m]).collect();
    let mut seen = vec![false; edges.len()];
    let mut order = Vec::with_capacity(edges.len());
    for (w, &v) in walk.iter().enumerate() {
        let prev = walk[(w + m - 1) % m];
        let mut star: Vec<usize> = adj[v].iter().copied().filter(|&u| u != prev).collect();
        // The star lies in the hull angle at v (< 180 degrees), where the
        // orientation test is a total order.
        star.sort_by(|&a, &b| {
            let o = orient2d(&pts[v], &pts[a], &pts[b]);
            if o.is_positive() {
                std::cmp::Ordering::Less
            } else {
                std::cmp::Ordering::Greater
            }
        });
        for u in std::iter::once(prev).chain(star) {
            let idx = edges.index_of(v, u).expect("hull neighbors are Delaunay-edges");
            if !seen[idx] {
                seen[idx] = true;
                order.push((v.min(u), v.max(u)));
            }
        }
    }
    debug_assert_eq!(order.len(), edges.len());
    Ok(order)
}

/// 2-colors the halfplane Delaunay-edges alternately along
/// [`halfplane_traversal`], so every halfplane containing at least three
/// Delaunay-edges contains both colors.
pub fn color_halfplane_edges(s: &PointSet) -> Result<EdgeColoring> {
    let order = halfplane_traversal(s)?;
    EdgeColoring::new(2, order.into_iter().enumerate().map(|(i, e)| (e, 1 + (i % 2) as u32)))
}
