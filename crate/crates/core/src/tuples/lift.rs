use itertools::Itertools;

use super::{color_pairs_boxes, TupleColoring};
use crate::error::{Error, Result};
use crate::families::{h_region_reduction, FamilyKind, HalfspaceSpec};
use crate::geometry::{require_general_position, PointSet, Q};

/// Colors every `t'`-subset by the base color of its `t` members lying
/// deepest in the halfspace `{x : A·x <= β}`, that is, with the smallest
/// values of `A·x`.
pub fn lift_tuples(base: &TupleColoring, s: &PointSet, h: &HalfspaceSpec, t_prime: usize) -> Result<TupleColoring> {
    let t = base.t();
    if t_prime <= t {
        return Err(Error::param(format!("lifted tuple size {t_prime} must exceed {t}")));
    }
    if base.n() != s.len() {
        return Err(Error::DomainMismatch(format!(
            "coloring is on {} vertices, point set has {}",
            base.n(),
            s.len()
        )));
    }
    s.require_dim(h.normal().dim())?;
    let depth: Vec<Q> = s.points().iter().map(|p| h.normal().dot(p)).collect();
    let mut order: Vec<usize> = (0..s.len()).collect();
    order.sort_by(|&i, &j| depth[i].cmp(&depth[j]));
    if let Some(w) = order.windows(2).find(|w| depth[w[0]] == depth[w[1]]) {
        return Err(Error::param(format!(
            "points {} and {} are equidistant from the halfspace boundary",
            w[0].min(w[1]),
            w[0].max(w[1])
        )));
    }
    let mut rank = vec![0usize; s.len()];
    for (r, &i) in order.iter().enumerate() {
        rank[i] = r;
    }
    TupleColoring::from_fn(s.len(), t_prime, base.k(), |tuple| {
        let deepest: Vec<usize> = tuple.iter().copied().sorted_by_key(|&i| rank[i]).take(t).sorted().collect();
        base.get(&deepest)
    })
}

/// A `k`-coloring of the `t`-tuples such that every region of the family
/// generated by `hs` with at least `k^(2^(h-1)) + t - 1` points contains
/// `t`-tuples of all `k` colors.
pub fn color_tuples_h_regions(s: &PointSet, hs: &[HalfspaceSpec], t: usize, k: u32) -> Result<TupleColoring> {
    if t < 2 {
        return Err(Error::param("tuple size must be at least 2"));
    }
    let family = FamilyKind::HRegion(hs.to_vec());
    let reduced = h_region_reduction(s, hs)?;
    require_general_position(s, &family)?;
    let pairs = color_pairs_boxes(&reduced, k)?;
    if t == 2 {
        Ok(pairs)
    } else {
        lift_tuples(&pairs, s, &hs[0], t)
    }
}
