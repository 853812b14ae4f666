use std::collections::BTreeMap;

use super::EdgeColoring;
use crate::error::{Error, Result};
use crate::families::{delaunay_edges, FamilyKind};
use crate::geometry::{check_general_position, PointSet};

/// Result of the bottom-to-top sweep.
#[derive(Clone, Debug)]
pub struct BottomlessSweep {
    pub coloring: EdgeColoring,
    /// After each insertion: the inserted points from left to right, and the
    /// colors of the neighborly edges between them.
    pub steps: Vec<(Vec<usize>, Vec<u32>)>,
}

fn flip(c: u32) -> u32 {
    3 - c
}

/// Runs the sweep: points are inserted by increasing y, and the new
/// neighborly edges are colored so that no three consecutive neighborly edges
/// share a color.
pub fn bottomless_sweep(s: &PointSet) -> Result<BottomlessSweep> {
    s.require_dim(2)?;
    let family = FamilyKind::BottomlessRect;
    if let Some(violation) = check_general_position(s, &family).into_iter().next() {
        return Err(Error::GeneralPosition { family: family.name(), violation });
    }
    let pts = s.points();
    let mut by_y: Vec<usize> = (0..pts.len()).collect();
    by_y.sort_by(|&a, &b| pts[a].y().cmp(pts[b].y()));

    let mut row: Vec<usize> = Vec::new();
    // Colors of neighborly edges: nb[j] colors {row[j], row[j + 1]}.
    let mut nb: Vec<u32> = Vec::new();
    let mut colors: BTreeMap<(usize, usize), u32> = BTreeMap::new();
    let mut steps = Vec::with_capacity(pts.len());
    for &p in &by_y {
        let i = row.partition_point(|&r| pts[r].x() < pts[p].x());
        row.insert(i, p);
        let k = row.len();
        if k >= 2 {
            let new = new_colors(&nb, i, k);
            match new {
                New::Left(c) => nb.insert(0, c),
                New::Right(c) => nb.push(c),
                New::Split(a, b) => {
                    nb[i - 1] = a;
                    nb.insert(i, b);
                }
            }
            let lo = i.saturating_sub(1);
            for j in lo..(i + 1).min(k - 1) {
                let (u, v) = (row[j], row[j + 1]);
                colors.entry((u.min(v), u.max(v))).or_insert(nb[j]);
            }
        }
        steps.push((row.clone(), nb.clone()));
    }

    let edges = delaunay_edges(s, &family)?;
    let entries: Vec<_> = edges
        .edges()
        .iter()
        .map(|&e| (e, colors.get(&e).copied().unwrap_or(1)))
        .collect();
    if colors.keys().any(|&(u, v)| !edges.contains(u, v)) {
        return Err(Error::Inconsistent("a neighborly edge is not a Delaunay-edge".into()));
    }
    Ok(BottomlessSweep { coloring: EdgeColoring::new(2, entries)?, steps })
}

enum New {
    Left(u32),
    Right(u32),
    /// Colors of the new edges to the left and right of the inserted point.
    Split(u32, u32),
}

/// Colors for the neighborly edges created by inserting at position `i` of a
/// row that now has `k` points. `nb` holds the `k - 2` old neighborly colors.
fn new_colors(nb: &[u32], i: usize, k: usize) -> New {
    if i == 0 {
        return New::Left(nb.first().map_or(1, |&c| flip(c)));
    }
    if i == k - 1 {
        return New::Right(nb.last().map_or(1, |&c| flip(c)));
    }
    if k <= 3 {
        // The old edge across the new point disappears, leaving no adjacent
        // neighborly edge.
        return New::Split(1, 1);
    }
    // Old colors, indexed by their final positions: edge {p_j, p_{j+1}} of
    // the new row (0-based, j != i - 1, i) has color nb[j] if j < i - 1 and
    // nb[j - 1] if j > i.
    let old = |j: usize| if j < i - 1 { nb[j] } else { nb[j - 1] };
    if i == 1 {
        let c = flip(old(2));
        return New::Split(c, c);
    }
    if i == k - 2 {
        let c = flip(old(k - 4));
        return New::Split(c, c);
    }
    let (left, right) = (old(i - 2), old(i + 1));
    if left == right {
        New::Split(flip(left), flip(left))
    } else {
        New::Split(right, left)
    }
}

/// 2-colors the bottomless-rectangle Delaunay-edges so that every bottomless
/// rectangle containing at least four points contains both colors.
pub fn color_bottomless_edges(s: &PointSet) -> Result<EdgeColoring> {
    Ok(bottomless_sweep(s)?.coloring)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn no_three_in_a_row(colors: &[u32]) -> bool {
        colors.windows(3).all(|w| !(w[0] == w[1] && w[1] == w[2]))
    }

    #[test]
    fn tiny_inputs() {
        let s = PointSet::from_ints(&[[0, 0]]).unwrap();
        assert!(color_bottomless_edges(&s).unwrap().is_empty());
        let s = PointSet::from_ints(&[[0, 0], [1, 1]]).unwrap();
        assert_eq!(color_bottomless_edges(&s).unwrap().get(0, 1), Some(1));
    }

    #[test]
    fn middle_insertion_into_three() {
        // Insert left, right, then middle: both new edges get color 1.
        let s = PointSet::from_ints(&[[0, 0], [4, 1], [2, 2]]).unwrap();
        let sweep = bottomless_sweep(&s).unwrap();
        assert_eq!(sweep.steps[2], (vec![0, 2, 1], vec![1, 1]));
    }

    #[test]
    fn invariant_on_a_staircase_and_zigzag() {
        let sets = [
            PointSet::from_ints(&[[0, 0], [1, 1], [2, 2], [3, 3], [4, 4], [5, 5], [6, 6]]).unwrap(),
            PointSet::from_ints(&[[3, 0], [0, 1], [6, 2], [1, 3], [5, 4], [2, 5], [4, 6]]).unwrap(),
        ];
        for s in sets {
            let sweep = bottomless_sweep(&s).unwrap();
            for (_, colors) in &sweep.steps {
                assert!(no_three_in_a_row(colors), "{colors:?}");
            }
        }
    }

    #[test]
    fn ties_are_rejected() {
        let s = PointSet::from_ints(&[[0, 0], [0, 1]]).unwrap();
        assert!(matches!(bottomless_sweep(&s), Err(Error::GeneralPosition { .. })));
    }
}
