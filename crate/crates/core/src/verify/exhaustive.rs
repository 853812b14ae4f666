use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::families::{canonical_hyperedges, delaunay_edges, FamilyKind};
use crate::geometry::PointSet;
use crate::hypergraph::Hypergraph;

use super::ThresholdKind;

/// Default cap on the number of colorings examined.
pub const EXHAUSTIVE_BUDGET: u64 = 1 << 24;

/// The colored elements of an impossibility search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    /// The family's Delaunay-edges.
    Edges,
    /// Every pair of points.
    Pairs,
}

/// Whether no coloring of the target pairs with `num_colors` colors puts two
/// colors in every canonical hyperedge that meets the threshold.
pub fn exhaustive_impossibility(
    s: &PointSet,
    family: &FamilyKind,
    threshold: usize,
    num_colors: u32,
    target: Target,
    kind: ThresholdKind,
    budget: u64,
) -> Result<bool> {
    let domain: Vec<(usize, usize)> = match target {
        Target::Edges => delaunay_edges(s, family)?.edges().to_vec(),
        Target::Pairs => (0..s.len()).flat_map(|j| (0..j).map(move |i| (i, j))).collect(),
    };
    let h = canonical_hyperedges(s, family)?;
    exhaustive_impossibility_on(&h, &domain, threshold, num_colors, kind, budget)
}

/// [`exhaustive_impossibility`] for an explicit hypergraph and pair domain.
pub fn exhaustive_impossibility_on(
    h: &Hypergraph,
    domain: &[(usize, usize)],
    threshold: usize,
    num_colors: u32,
    kind: ThresholdKind,
    budget: u64,
) -> Result<bool> {
    if num_colors == 0 {
        return Err(Error::param("at least one color is needed"));
    }
    let total = (num_colors as u64).checked_pow(domain.len() as u32);
    match total {
        Some(total) if total <= budget && domain.len() < 64 => {}
        _ => {
            return Err(Error::BudgetExceeded {
                needed: format!("{num_colors}^{}", domain.len()),
                budget,
            })
        }
    }
    // Each qualifying hyperedge as a mask over domain indices.
    let mut constraints: Vec<u64> = Vec::new();
    for e in h.edges() {
        let inside = domain
            .iter()
            .enumerate()
            .filter(|(_, &(i, j))| e.contains(i) && e.contains(j))
            .fold(0u64, |m, (idx, _)| m | 1 << idx);
        let size = match kind {
            ThresholdKind::Points => e.len(),
            ThresholdKind::Edges => inside.count_ones() as usize,
        };
        if size >= threshold {
            constraints.push(inside);
        }
    }
    constraints.sort_unstable();
    constraints.dedup();
    if constraints.is_empty() {
        return Ok(false);
    }
    if constraints.iter().any(|m| m.count_ones() < 2) || num_colors == 1 {
        return Ok(true);
    }
    let len = domain.len();
    let c = num_colors as u64;
    // Colors are interchangeable: element 0 keeps color 0.
    let count = c.pow(len as u32 - 1);
    let ok = |index: u64| -> bool {
        if c == 2 {
            let x = index << 1;
            return constraints.iter().all(|&m| x & m != 0 && x & m != m);
        }
        let mut classes = vec![0u64; c as usize];
        classes[0] |= 1;
        let mut rest = index;
        for idx in 1..len {
            classes[(rest % c) as usize] |= 1 << idx;
            rest /= c;
        }
        constraints.iter().all(|&m| classes.iter().all(|&cls| cls & m != m))
    };
    Ok(!(0..count).into_par_iter().any(ok))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vertex_set::VertexSet;

    fn hg(n: usize, edges: &[&[usize]]) -> Hypergraph {
        Hypergraph::new(n, edges.iter().map(|e| VertexSet::from_indices(e.iter().copied()))).unwrap()
    }

    #[test]
    fn odd_cycle_of_constraints() {
        // Three pairwise-overlapping 2-element constraints on a triangle of
        // pairs: two colors cannot split all of them.
        let h = hg(3, &[&[0, 1, 2]]);
        let domain = [(0, 1), (0, 2), (1, 2)];
        assert!(!exhaustive_impossibility_on(&h, &domain, 2, 2, ThresholdKind::Edges, 1 << 10).unwrap());
        let h = hg(4, &[&[0, 1, 2], &[1, 2, 3], &[0, 2, 3]]);
        let domain = [(0, 1), (1, 2), (2, 3), (0, 2), (0, 3), (1, 3)];
        let tight = exhaustive_impossibility_on(&h, &domain, 3, 1, ThresholdKind::Points, 1 << 10).unwrap();
        assert!(tight);
    }

    #[test]
    fn single_element_constraint_is_fatal() {
        let h = hg(2, &[&[0, 1]]);
        assert!(exhaustive_impossibility_on(&h, &[(0, 1)], 2, 2, ThresholdKind::Points, 16).unwrap());
        assert!(!exhaustive_impossibility_on(&h, &[(0, 1)], 3, 2, ThresholdKind::Points, 16).unwrap());
    }

    #[test]
    fn budget() {
        let h = hg(2, &[&[0, 1]]);
        let err = exhaustive_impossibility_on(&h, &[(0, 1)], 2, 3, ThresholdKind::Points, 2).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { .. }));
    }
}
