//! Region families and canonical enumeration of their hypergraphs `G(S, F)`.

pub(crate) mod boxes;
mod planar;

use std::fmt;

use num::Zero;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::geometry::{dense_ranks, require_general_position, Point, PointSet, Q};
use crate::hypergraph::{EdgeSet, Hypergraph};
use crate::vertex_set::VertexSet;
use boxes::{pair_box, Bound, TightBoxes};

/// The halfspace direction `{x : A·x <= β}`, with `β` free.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HalfspaceSpec {
    normal: Point,
}

impl HalfspaceSpec {
    pub fn new(normal: Point) -> Result<Self> {
        if normal.dim() == 0 || normal.is_zero() {
            return Err(Error::param("halfspace normal must be a nonzero vector"));
        }
        Ok(HalfspaceSpec { normal })
    }

    pub fn from_ints(normal: &[i64]) -> Result<Self> {
        Self::new(Point::from_ints(normal))
    }

    pub fn normal(&self) -> &Point {
        &self.normal
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    Halfplane,
    /// `{(x, y) : a <= x <= b, y <= c}`.
    BottomlessRect,
    AxisRect,
    Disk,
    /// Intersections of translates of the given halfspaces.
    HRegion(Vec<HalfspaceSpec>),
    /// Axis-parallel boxes in any dimension.
    BoxD,
}

impl FamilyKind {
    pub fn name(&self) -> String {
        match self {
            FamilyKind::Halfplane => "halfplane",
            FamilyKind::BottomlessRect => "bottomless",
            FamilyKind::AxisRect => "axisrect",
            FamilyKind::Disk => "disk",
            FamilyKind::HRegion(_) => "hregion",
            FamilyKind::BoxD => "boxd",
        }
        .to_string()
    }

    pub fn required_dim(&self) -> Option<usize> {
        match self {
            FamilyKind::HRegion(_) | FamilyKind::BoxD => None,
            _ => Some(2),
        }
    }

    fn validate(&self, s: &PointSet, limits: &EnumerationLimits) -> Result<()> {
        if let Some(d) = self.required_dim() {
            s.require_dim(d)?;
        }
        if s.len() > limits.max_points {
            return Err(Error::LimitExceeded(format!(
                "{} points, enumeration supports at most {}",
                s.len(),
                limits.max_points
            )));
        }
        if let FamilyKind::HRegion(hs) = self {
            if hs.is_empty() {
                return Err(Error::param("an H-region family needs at least one halfspace"));
            }
            if hs.len() > limits.max_halfspaces {
                return Err(Error::LimitExceeded(format!(
                    "{} halfspaces, H-region enumeration supports at most {}",
                    hs.len(),
                    limits.max_halfspaces
                )));
            }
            if s.len() > limits.max_h_region_points {
                return Err(Error::LimitExceeded(format!(
                    "{} points, H-region enumeration supports at most {}",
                    s.len(),
                    limits.max_h_region_points
                )));
            }
            for h in hs {
                s.require_dim(h.normal.dim())?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// Caps on enumeration cost.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationLimits {
    pub max_points: usize,
    pub max_halfspaces: usize,
    pub max_h_region_points: usize,
}

impl Default for EnumerationLimits {
    fn default() -> Self {
        EnumerationLimits { max_points: 128, max_halfspaces: 4, max_h_region_points: 40 }
    }
}

/// A concrete member of a family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Region {
    /// `{x : normal·x <= offset}`.
    Halfplane { normal: Point, offset: Q },
    /// Closed disk.
    Disk { center: Point, radius_sq: Q },
    /// Closed box; `None` marks an unbounded side.
    Box { bounds: Vec<(Option<Q>, Option<Q>)> },
    /// `{x : normals[i]·x <= offsets[i] for all i}`.
    HRegion { normals: Vec<Point>, offsets: Vec<Q> },
}

impl Region {
    pub fn contains(&self, p: &Point) -> bool {
        match self {
            Region::Halfplane { normal, offset } => &normal.dot(p) <= offset,
            Region::Disk { center, radius_sq } => {
                let d = p.sub(center);
                &d.dot(&d) <= radius_sq
            }
            Region::Box { bounds } => bounds.iter().zip(p.coords()).all(|((lo, hi), c)| {
                lo.as_ref().is_none_or(|l| l <= c) && hi.as_ref().is_none_or(|h| c <= h)
            }),
            Region::HRegion { normals, offsets } => {
                normals.iter().zip(offsets).all(|(a, b)| &a.dot(p) <= b)
            }
        }
    }

    /// Indices of the points of `s` inside the region.
    pub fn cut(&self, s: &PointSet) -> VertexSet {
        s.points().iter().enumerate().filter(|(_, p)| self.contains(p)).map(|(i, _)| i).collect()
    }
}

fn box_modes(s: &PointSet, family: &FamilyKind) -> Option<(Vec<Vec<u32>>, Vec<Bound>)> {
    match family {
        FamilyKind::AxisRect | FamilyKind::BoxD => {
            Some((s.axis_ranks(), vec![Bound::Both; s.dim()]))
        }
        FamilyKind::BottomlessRect => Some((s.axis_ranks(), vec![Bound::Both, Bound::Upper])),
        FamilyKind::HRegion(hs) => {
            let ranks = hs
                .iter()
                .map(|h| dense_ranks(&s.points().iter().map(|p| h.normal.dot(p)).collect::<Vec<_>>()))
                .collect();
            Some((ranks, vec![Bound::Upper; hs.len()]))
        }
        FamilyKind::Halfplane | FamilyKind::Disk => None,
    }
}

fn prepare(s: &PointSet, family: &FamilyKind, limits: &EnumerationLimits) -> Result<()> {
    family.validate(s, limits)?;
    if matches!(family, FamilyKind::Halfplane | FamilyKind::Disk) {
        require_general_position(s, family)?;
    }
    Ok(())
}

/// The hypergraph `{S ∩ F : F in family, S ∩ F nonempty}`.
///
/// Box-like families (rectangles, bottomless rectangles, boxes, H-regions)
/// are enumerated exactly for closed regions, ties included. Halfplanes and
/// disks require general position.
pub fn canonical_hyperedges(s: &PointSet, family: &FamilyKind) -> Result<Hypergraph> {
    canonical_hyperedges_with_limits(s, family, &EnumerationLimits::default())
}

pub fn canonical_hyperedges_with_limits(
    s: &PointSet,
    family: &FamilyKind,
    limits: &EnumerationLimits,
) -> Result<Hypergraph> {
    prepare(s, family, limits)?;
    let masks = match box_modes(s, family) {
        Some((ranks, modes)) => TightBoxes::new(ranks, modes).masks(),
        None => planar_cuts(s, family).into_iter().map(|(m, _)| m).collect(),
    };
    Ok(Hypergraph::from_masks(s.len(), masks))
}

fn planar_cuts(s: &PointSet, family: &FamilyKind) -> Vec<(u128, planar::Cut)> {
    match family {
        FamilyKind::Halfplane => planar::halfplane_cuts(s),
        _ => planar::disk_cuts(s),
    }
}

/// One exact witness region per canonical hyperedge, in hyperedge order.
pub fn canonical_regions(s: &PointSet, family: &FamilyKind) -> Result<Vec<(VertexSet, Region)>> {
    let limits = EnumerationLimits::default();
    prepare(s, family, &limits)?;
    let mut out: Vec<(VertexSet, Region)> = match box_modes(s, family) {
        Some((ranks, modes)) => {
            let tb = TightBoxes::new(ranks, modes);
            let mut wit = tb.with_witnesses();
            wit.sort_by_key(|(m, _)| *m);
            wit.dedup_by_key(|(m, _)| *m);
            wit.into_par_iter()
                .map(|(m, w)| {
                    let region = match family {
                        FamilyKind::HRegion(hs) => Region::HRegion {
                            normals: hs.iter().map(|h| h.normal.clone()).collect(),
                            offsets: hs.iter().zip(&w).map(|(h, (_, hi))| h.normal.dot(s.point(*hi))).collect(),
                        },
                        _ => Region::Box {
                            bounds: w
                                .iter()
                                .enumerate()
                                .map(|(a, (lo, hi))| {
                                    (lo.map(|l| s.point(l).coord(a).clone()), Some(s.point(*hi).coord(a).clone()))
                                })
                                .collect(),
                        },
                    };
                    (VertexSet::from_mask(m), region)
                })
                .collect()
        }
        None => {
            let mut cuts = planar_cuts(s, family);
            cuts.sort_by_key(|(m, _)| *m);
            cuts.dedup_by_key(|(m, _)| *m);
            cuts.into_par_iter()
                .map(|(m, c)| (VertexSet::from_mask(m), planar::witness(s, c)))
                .collect()
        }
    };
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out)
}

/// The Delaunay-edges: hyperedges of size two.
pub fn delaunay_edges(s: &PointSet, family: &FamilyKind) -> Result<EdgeSet> {
    let limits = EnumerationLimits::default();
    prepare(s, family, &limits)?;
    let n = s.len();
    match box_modes(s, family) {
        Some((ranks, modes)) => {
            let tb = TightBoxes::new(ranks, modes);
            let edges = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .filter(|&(i, j)| pair_box(&tb, i, j).count_ones() == 2)
                .collect();
            Ok(EdgeSet::from_unsorted(n, edges))
        }
        None => {
            let edges = planar_cuts(s, family)
                .into_iter()
                .filter(|(m, _)| m.count_ones() == 2)
                .map(|(m, _)| (m.trailing_zeros() as usize, 127 - m.leading_zeros() as usize))
                .collect();
            Ok(EdgeSet::from_unsorted(n, edges))
        }
    }
}

/// Whether every hyperedge `e` with `|e| >= 3` and every `p` in `e` admit a
/// hyperedge `e'` with `p ∈ e' ⊂ e` and `|e'| = |e| - 1`. On failure the
/// first violating `(e, p)` in hyperedge order is returned.
pub fn is_shrinkable(h: &Hypergraph) -> (bool, Option<(VertexSet, usize)>) {
    let violation = h.edges().par_iter().filter(|e| e.len() >= 3).find_map_first(|e| {
        let droppable: Vec<usize> = e.iter().filter(|&q| h.contains(&e.without(q))).collect();
        e.iter()
            .find(|&p| droppable.iter().all(|&q| q == p))
            .map(|p| (e.clone(), p))
    });
    (violation.is_none(), violation)
}

/// The map `x -> (A_1·x, ..., A_h·x)`.
pub fn h_region_reduction(s: &PointSet, hs: &[HalfspaceSpec]) -> Result<PointSet> {
    if hs.is_empty() {
        return Err(Error::param("an H-region family needs at least one halfspace"));
    }
    for h in hs {
        s.require_dim(h.normal.dim())?;
    }
    let points = s
        .points()
        .iter()
        .map(|p| Point::new(hs.iter().map(|h| h.normal.dot(p)).collect()))
        .collect();
    // Distinct inputs can collide under the projection.
    PointSet::new(hs.len(), points)
}

/// The coordinate-axis normals `e_1, ..., e_d`.
pub fn axis_halfspaces(d: usize) -> Vec<HalfspaceSpec> {
    (0..d)
        .map(|i| {
            let mut v = vec![Q::zero(); d];
            v[i] = Q::from_integer(1.into());
            HalfspaceSpec { normal: Point::new(v) }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sets(h: &Hypergraph) -> Vec<Vec<usize>> {
        h.edges().iter().map(VertexSet::to_vec).collect()
    }

    #[test]
    fn triangle_halfplane_has_seven_hyperedges() {
        let s = PointSet::from_ints(&[[0, 0], [4, 0], [1, 3]]).unwrap();
        let h = canonical_hyperedges(&s, &FamilyKind::Halfplane).unwrap();
        assert_eq!(
            sets(&h),
            vec![vec![0], vec![0, 1], vec![0, 1, 2], vec![0, 2], vec![1], vec![1, 2], vec![2]]
        );
    }

    #[test]
    fn diagonal_rectangles() {
        let s = PointSet::from_ints(&[[0, 0], [1, 1], [2, 2]]).unwrap();
        let e = delaunay_edges(&s, &FamilyKind::AxisRect).unwrap();
        assert_eq!(e.edges(), &[(0, 1), (1, 2)]);
        let h = canonical_hyperedges(&s, &FamilyKind::AxisRect).unwrap();
        assert_eq!(h.size_two_edges(), e);
    }

    #[test]
    fn single_point_every_family() {
        let s = PointSet::from_ints(&[[3, 4]]).unwrap();
        let fams = [
            FamilyKind::Halfplane,
            FamilyKind::BottomlessRect,
            FamilyKind::AxisRect,
            FamilyKind::Disk,
            FamilyKind::BoxD,
            FamilyKind::HRegion(vec![HalfspaceSpec::from_ints(&[1, 2]).unwrap()]),
        ];
        for f in fams {
            let h = canonical_hyperedges(&s, &f).unwrap();
            assert_eq!(sets(&h), vec![vec![0]], "{f}");
        }
    }

    #[test]
    fn square_halfplane_edges_are_hull_sides() {
        let s = PointSet::from_ints(&[[0, 0], [1, 0], [1, 1], [0, 1]]).unwrap();
        let e = delaunay_edges(&s, &FamilyKind::Halfplane).unwrap();
        assert_eq!(e.edges(), &[(0, 1), (0, 3), (1, 2), (2, 3)]);
        let e = delaunay_edges(&s.subset(&[0, 2]), &FamilyKind::Halfplane).unwrap();
        assert_eq!(e.len(), 1);
    }

    #[test]
    fn shrinkability_examples() {
        let h = Hypergraph::new(
            4,
            [VertexSet::from_indices([1, 2, 3]), VertexSet::from_indices([1])],
        )
        .unwrap();
        assert_eq!(is_shrinkable(&h), (false, Some((VertexSet::from_indices([1, 2, 3]), 1))));
    }

    #[test]
    fn reduction_examples() {
        let s = PointSet::from_ints(&[[1, 2]]).unwrap();
        let hs = vec![HalfspaceSpec::from_ints(&[1, 0]).unwrap(), HalfspaceSpec::from_ints(&[0, 1]).unwrap()];
        assert_eq!(h_region_reduction(&s, &hs).unwrap(), s);
        let mut hs3 = hs.clone();
        hs3.push(HalfspaceSpec::from_ints(&[1, 1]).unwrap());
        assert_eq!(h_region_reduction(&s, &hs3).unwrap(), PointSet::from_ints(&[[1, 2, 3]]).unwrap());
        assert!(h_region_reduction(&s, &[HalfspaceSpec::from_ints(&[1, 0, 0]).unwrap()]).is_err());
    }

    #[test]
    fn limits_are_enforced() {
        let pts: Vec<[i64; 2]> = (0..41).map(|i| [i, (i * 7) % 41]).collect();
        let s = PointSet::from_ints(&pts).unwrap();
        let f = FamilyKind::HRegion(vec![HalfspaceSpec::from_ints(&[1, 0]).unwrap()]);
        assert!(matches!(canonical_hyperedges(&s, &f), Err(Error::LimitExceeded(_))));
        assert!(HalfspaceSpec::from_ints(&[0, 0]).is_err());
    }
}
