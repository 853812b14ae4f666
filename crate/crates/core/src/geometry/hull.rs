
use super::{orient2d_sign, PointSet};
use crate::error::Result;

/// Hull vertices in counter-clockwise order, starting at the lexicographically
/// smallest point. Points in the relative interior of a hull side are not
/// vertices.
pub fn convex_hull(s: &PointSet) -> Result<Vec<usize>> {
    s.require_dim(2)?;
    let pts = s.points();
    let mut order: Vec<usize> = (0..pts.len()).collect();
    order.sort_by(|&a, &b| pts[a].cmp(&pts[b]));
    if order.len() <= 2 {
        return Ok(order);
    }
    // Andrew's monotone chain: lower hull left to right, upper hull back.
    let mut hull: Vec<usize> = Vec::with_capacity(2 * order.len());
    for pass in [order.clone(), order.iter().rev().copied().collect()] {
        let base = hull.len();
        for &i in &pass {
            while hull.len() >= base + 2 {
                let turn = orient2d_sign(&pts[hull[hull.len() - 2]], &pts[hull[hull.len() - 1]], &pts[i]);
                if turn.is_gt() {
                    break;
                }
                hull.pop();
            }
            hull.push(i);
        }
        hull.pop();
    }
    Ok(hull)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn square_and_center() {
        let s = PointSet::from_ints(&[[1, 1], [0, 0], [1, 0], [0, 1]]).unwrap();
        assert_eq!(convex_hull(&s).unwrap(), vec![1, 2, 0, 3]);
        let s = PointSet::from_ints(&[[2, 2], [0, 0], [4, 0], [4, 4], [0, 4]]).unwrap();
        assert_eq!(convex_hull(&s).unwrap(), vec![1, 2, 3, 4]);
    }

    #[test]
    fn small_inputs() {
        let s = PointSet::from_ints(&[[3, 0], [0, 5], [1, 1]]).unwrap();
        assert_eq!(convex_hull(&s).unwrap(), vec![1, 2, 0]);
        let s = PointSet::from_ints(&[[3, 0]]).unwrap();
        assert_eq!(convex_hull(&s).unwrap(), vec![0]);
        let s = PointSet::from_ints(&[[3, 0], [1, 0]]).unwrap();
        assert_eq!(convex_hull(&s).unwrap(), vec![1, 0]);
    }

    proptest! {
        #[test]
        fn invariant_under_permutation(
            pts in proptest::collection::btree_set((-30i64..30, -30i64..30), 1..14),
            seed in any::<u64>(),
        ) {
            let pts: Vec<[i64; 2]> = pts.into_iter().map(|(x, y)| [x, y]).collect();
            let s = PointSet::from_ints(&pts).unwrap();
            let hull: Vec<_> = convex_hull(&s).unwrap().into_iter().map(|i| pts[i]).collect();
            let mut perm = pts.clone();
            let len = perm.len();
            for i in 0..len {
                let j = (seed.rotate_left(i as u32) as usize) % len;
                perm.swap(i, j);
            }
            let t = PointSet::from_ints(&perm).unwrap();
            let hull2: Vec<_> = convex_hull(&t).unwrap().into_iter().map(|i| perm[i]).collect();
            prop_assert_eq!(hull, hull2);
        }
    }
}
