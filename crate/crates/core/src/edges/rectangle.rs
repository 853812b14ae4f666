use super::{ceil_log2, hasse_edge_coloring, EdgeColoring, Poset};
use crate::error::{Error, Result};
use crate::families::FamilyKind;
use crate::geometry::{check_general_position, PointSet};

/// The dominance order `P1` (`p < q` iff `p` is below-left of `q`) and the
/// anti-dominance order `P2` (`p < q` iff `p` is above-left of `q`).
pub fn dominance_posets(s: &PointSet) -> Result<(Poset, Poset)> {
    let family = FamilyKind::AxisRect;
    if let Some(violation) = check_general_position(s, &family).into_iter().next() {
        return Err(Error::GeneralPosition { family: family.name(), violation });
    }
    let pts = s.points();
    let n = pts.len();
    let (mut p1, mut p2) = (Vec::new(), Vec::new());
    for i in 0..n {
        for j in 0..n {
            if pts[i].x() < pts[j].x() {
                if pts[i].y() < pts[j].y() {
                    p1.push((i, j));
                } else {
                    p2.push((i, j));
                }
            }
        }
    }
    Ok((Poset::new(n, p1)?, Poset::new(n, p2)?))
}

/// Colors the axis-parallel rectangle Delaunay-edges with at most
/// `2 ceil(log2 n)` colors: the Hasse diagrams of the two dominance orders are
/// colored separately, `P2` with colors shifted past those of `P1`.
pub fn color_rectangle_edges(s: &PointSet) -> Result<EdgeColoring> {
    let (p1, p2) = dominance_posets(s)?;
    let shift = ceil_log2(s.len());
    let c1 = hasse_edge_coloring(&p1);
    let c2 = hasse_edge_coloring(&p2);
    EdgeColoring::new(2 * shift, c1.iter().chain(c2.iter().map(|(e, c)| (e, c + shift))))
}
