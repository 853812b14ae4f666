use num::{Signed, Zero};

use super::{Point, PointSet, Q};
use crate::error::{Error, Result};
use crate::families::{canonical_hyperedges, FamilyKind};

/// Perturbs a planar set so that all x- and all y-coordinates are distinct.
///
/// Applies `(x, y) -> (x + s·εy, y + t·εx)` with `ε` small enough that every
/// strict coordinate order of the input survives, so ties are broken exactly
/// as the lexicographic rule (`x` first, then `±y`) would break them. The sign
/// pairs `(s, t)` are tried in the order `(+,+), (-,-), (+,-), (-,+)`. The
/// first one is returned whose axis-parallel and bottomless rectangle
/// hypergraphs contain the original ones and whose Delaunay-edges are exactly
/// the original Delaunay-edges. Inputs that already have distinct coordinates
/// are returned unchanged.
pub fn shear_general_position(s: &PointSet) -> Result<PointSet> {
    s.require_dim(2)?;
    if has_distinct_coordinates(s) {
        return Ok(s.clone());
    }
    let eps = shear_epsilon(s);
    let families = [FamilyKind::AxisRect, FamilyKind::BottomlessRect];
    let before = families
        .iter()
        .map(|f| canonical_hyperedges(s, f))
        .collect::<Result<Vec<_>>>()?;
    for (sx, sy) in [(1, 1), (-1, -1), (1, -1), (-1, 1)] {
        let (ex, ey) = (&eps * Q::from_integer(sx.into()), &eps * Q::from_integer(sy.into()));
        let points = s
            .points()
            .iter()
            .map(|p| Point::new(vec![p.x() + &ex * p.y(), p.y() + &ey * p.x()]))
            .collect();
        let t = PointSet::new(2, points)?;
        debug_assert!(has_distinct_coordinates(&t));
        let after = families
            .iter()
            .map(|f| canonical_hyperedges(&t, f))
            .collect::<Result<Vec<_>>>()?;
        let preserved = before.iter().zip(&after).all(|(b, a)| {
            b.edges().iter().all(|e| a.contains(e)) && b.size_two_edges() == a.size_two_edges()
        });
        if preserved {
            return Ok(t);
        }
    }
    Err(Error::param(
        "no shear direction preserves the rectangle hypergraphs of this point set",
    ))
}

fn has_distinct_coordinates(s: &PointSet) -> bool {
    (0..2).all(|a| {
        let mut v: Vec<&Q> = s.points().iter().map(|p| p.coord(a)).collect();
        v.sort();
        v.windows(2).all(|w| w[0] != w[1])
    })
}

/// Half the smallest nonzero coordinate gap divided by the largest span.
fn shear_epsilon(s: &PointSet) -> Q {
    let pts = s.points();
    let mut min_gap: Option<Q> = None;
    let mut max_span = Q::zero();
    for (i, p) in pts.iter().enumerate() {
        for r in &pts[i + 1..] {
            for a in 0..2 {
                let d = (p.coord(a) - r.coord(a)).abs();
                if d.is_zero() {
                    continue;
                }
                if d > max_span {
                    max_span = d.clone();
                }
                if min_gap.as_ref().is_none_or(|g| &d < g) {
                    min_gap = Some(d);
                }
            }
        }
    }
    let one = Q::from_integer(1.into());
    match min_gap {
        Some(g) => g / ((max_span + &one) * Q::from_integer(2.into())),
        None => one,
    }
}
