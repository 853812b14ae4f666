use itertools::Itertools;
use rayon::prelude::*;

use super::exhaustive::{exhaustive_impossibility, Target, EXHAUSTIVE_BUDGET};
use super::ThresholdKind;
use crate::error::{Error, Result};
use crate::families::FamilyKind;
use crate::geometry::PointSet;

/// Default cap on the number of candidate sets examined.
pub const BOTTOMLESS_BUDGET: u64 = 1_000_000;

const GRID: i64 = 7;

/// Five-point subsets of `{0..6}^2` with distinct x and distinct y
/// coordinates, by increasing x, in a fixed order: x-sets lexicographically,
/// then y-sequences lexicographically.
pub fn bottomless_candidates() -> impl Iterator<Item = Vec<[i64; 2]>> {
    (0..GRID).combinations(5).flat_map(|xs| {
        (0..GRID)
            .permutations(5)
            .map(move |ys| xs.iter().zip(ys).map(|(&x, y)| [x, y]).collect())
    })
}

/// The first candidate on which no 2-coloring of the bottomless-rectangle
/// Delaunay-edges puts two colors in every bottomless rectangle with at
/// least three points.
pub fn find_bottomless_counterexample(budget: u64) -> Result<PointSet> {
    let candidates: Vec<Vec<[i64; 2]>> = bottomless_candidates().take(budget as usize).collect();
    let examined = candidates.len() as u64;
    let found = candidates
        .par_iter()
        .map(|pts| -> Result<Option<PointSet>> {
            let s = PointSet::from_ints(pts)?;
            let hit = exhaustive_impossibility(
                &s,
                &FamilyKind::BottomlessRect,
                3,
                2,
                Target::Edges,
                ThresholdKind::Points,
                EXHAUSTIVE_BUDGET,
            )?;
            Ok(hit.then_some(s))
        })
        .find_first(|r| !matches!(r, Ok(None)));
    match found {
        Some(r) => r.map(|s| s.expect("filtered on Some")),
        None => Err(Error::SearchExhausted(examined)),
    }
}
