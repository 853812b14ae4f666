use super::TupleColoring;
use crate::error::{Error, Result};
use crate::families::FamilyKind;
use crate::geometry::{check_general_position, PointSet};

/// `k^(2^(d-1)) + t - 1`, or `None` on overflow.
pub fn box_threshold(d: usize, k: u32, t: usize) -> Option<u64> {
    if d == 0 {
        return None;
    }
    let exp = 1u32.checked_shl(d as u32 - 1)?;
    (k as u64).checked_pow(exp)?.checked_add(t as u64 - 1)
}

fn require_distinct_coordinates(s: &PointSet, family: FamilyKind) -> Result<()> {
    match check_general_position(s, &family).into_iter().next() {
        None => Ok(()),
        Some(violation) => Err(Error::GeneralPosition { family: family.name(), violation }),
    }
}

/// Colors every pair by `min(k, L)`, where `L` is the number of edges of a
/// longest monotone path between its endpoints: a path whose edges all have
/// the pair's directed type. Every axis-parallel box with at least
/// `k^(2^(d-1)) + 1` points then contains pairs of all `k` colors.
pub fn color_pairs_boxes(s: &PointSet, k: u32) -> Result<TupleColoring> {
    if k == 0 {
        return Err(Error::param("palette size must be at least 1"));
    }
    require_distinct_coordinates(s, FamilyKind::BoxD)?;
    let ranks = s.axis_ranks();
    let n = s.len();
    let d = s.dim();
    if d > 16 {
        return Err(Error::param("box pair coloring supports at most 16 dimensions"));
    }
    // Points by increasing first coordinate.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| ranks[0][i]);
    // ty[a][b] for positions a < b in `order`: the directed type as a mask of
    // the axes where the later point is lower.
    let mut ty = vec![vec![0u16; n]; n];
    for a in 0..n {
        for b in a + 1..n {
            let (p, q) = (order[a], order[b]);
            ty[a][b] = (1..d).filter(|&ax| ranks[ax][q] < ranks[ax][p]).fold(0, |m, ax| m | 1 << ax);
        }
    }
    let mut longest = vec![vec![0u32; n]; n];
    for a in 0..n {
        for b in a + 1..n {
            let tau = ty[a][b];
            let best = (a + 1..b)
                .filter(|&c| ty[a][c] == tau && ty[c][b] == tau)
                .map(|c| longest[a][c])
                .max()
                .unwrap_or(0);
            longest[a][b] = best + 1;
        }
    }
    let mut pos = vec![0usize; n];
    for (a, &i) in order.iter().enumerate() {
        pos[i] = a;
    }
    TupleColoring::from_fn(n, 2, k, |pair| {
        let (a, b) = (pos[pair[0]].min(pos[pair[1]]), pos[pair[0]].max(pos[pair[1]]));
        longest[a][b].min(k)
    })
}

/// The planar pair 2-coloring for axis-parallel rectangles: a pair is red (1)
/// if it is of type `(+,+)` with an otherwise empty bounding box, or of type
/// `(+,-)` with a nonempty one; blue (2) otherwise. Every rectangle with at
/// least three points contains both colors.
pub fn color_pairs_rectangles_optimal(s: &PointSet) -> Result<TupleColoring> {
    s.require_dim(2)?;
    require_distinct_coordinates(s, FamilyKind::AxisRect)?;
    let ranks = s.axis_ranks();
    let (x, y) = (&ranks[0], &ranks[1]);
    let n = s.len();
    TupleColoring::from_fn(n, 2, 2, |pair| {
        let (p, q) = if x[pair[0]] < x[pair[1]] { (pair[0], pair[1]) } else { (pair[1], pair[0]) };
        let (ylo, yhi) = (y[p].min(y[q]), y[p].max(y[q]));
        let inside = (0..n).filter(|&r| x[p] <= x[r] && x[r] <= x[q] && ylo <= y[r] && y[r] <= yhi).count();
        let rising = y[q] > y[p];
        if rising == (inside == 2) {
            1
        } else {
            2
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn thresholds() {
        assert_eq!(box_threshold(2, 2, 2), Some(5));
        assert_eq!(box_threshold(1, 3, 2), Some(4));
        assert_eq!(box_threshold(3, 2, 2), Some(17));
        assert_eq!(box_threshold(2, 3, 3), Some(11));
        assert_eq!(box_threshold(70, 2, 2), None);
    }

    #[test]
    fn one_dimensional_chain() {
        let s = PointSet::new(1, (0..5).map(|i| crate::geometry::Point::from_ints(&[i])).collect()).unwrap();
        let c = color_pairs_boxes(&s, 3).unwrap();
        assert_eq!(c.get(&[0, 4]), 3);
        assert_eq!(c.get(&[0, 1]), 1);
        assert_eq!(c.get(&[1, 3]), 2);
    }

    #[test]
    fn planar_chain() {
        let s = PointSet::from_ints(&[[0, 0], [1, 1], [2, 2]]).unwrap();
        let c = color_pairs_boxes(&s, 2).unwrap();
        assert_eq!((c.get(&[0, 1]), c.get(&[0, 2]), c.get(&[1, 2])), (1, 2, 1));
        let single = PointSet::from_ints(&[[0, 3], [1, 1]]).unwrap();
        assert_eq!(color_pairs_boxes(&single, 4).unwrap().get(&[0, 1]), 1);
    }

    #[test]
    fn mixed_types_do_not_chain() {
        // 0 -> 1 is (+,+) and 1 -> 2 is (+,-); the pair {0, 2} has type (+,+)
        // and no monotone path through 1.
        let s = PointSet::from_ints(&[[0, 0], [1, 5], [2, 3]]).unwrap();
        let c = color_pairs_boxes(&s, 3).unwrap();
        assert_eq!(c.get(&[0, 2]), 1);
    }

    #[test]
    fn optimal_rectangle_rule() {
        let s = PointSet::from_ints(&[[0, 0], [1, 1], [2, 2]]).unwrap();
        let c = color_pairs_rectangles_optimal(&s).unwrap();
        assert_eq!((c.get(&[0, 1]), c.get(&[1, 2]), c.get(&[0, 2])), (1, 1, 2));
        let s = PointSet::from_ints(&[[0, 1], [1, 0]]).unwrap();
        assert_eq!(color_pairs_rectangles_optimal(&s).unwrap().get(&[0, 1]), 2);
        let tied = PointSet::from_ints(&[[0, 1], [0, 0]]).unwrap();
        assert!(color_pairs_rectangles_optimal(&tied).is_err());
    }
}
