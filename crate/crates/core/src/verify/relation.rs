use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    /// `h1 ⊆ h2`.
    Containment,
    /// `h1 ⊇ h2`.
    ReverseContainment,
    /// `h1 ∩ h2 ≠ ∅`.
    Intersection,
}

impl Relation {
    fn holds(self, h1: &VertexSet, h2: &VertexSet) -> bool {
        match self {
            Relation::Containment => h1.is_subset(h2),
            Relation::ReverseContainment => h2.is_subset(h1),
            Relation::Intersection => h1.intersects(h2),
        }
    }
}

/// The hypergraph whose vertices are the hyperedges of `h1`, by index, with
/// one hyperedge `{i : h1[i] R h2}` for each hyperedge of `h2`.
pub fn relation_hypergraph(h1: &Hypergraph, h2: &Hypergraph, relation: Relation) -> Result<Hypergraph> {
    if h1.n() != h2.n() {
        return Err(Error::DomainMismatch(format!(
            "hypergraphs on {} and {} vertices",
            h1.n(),
            h2.n()
        )));
    }
    let edges = h2
        .edges()
        .iter()
        .map(|e2| {
            h1.edges()
                .iter()
                .enumerate()
                .filter(|(_, e1)| relation.holds(e1, e2))
                .map(|(i, _)| i)
                .collect::<VertexSet>()
        })
        .filter(|e| !e.is_empty())
        .collect();
    Ok(Hypergraph::from_unsorted(h1.len(), edges))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hg(n: usize, edges: &[&[usize]]) -> Hypergraph {
        Hypergraph::new(n, edges.iter().map(|e| VertexSet::from_indices(e.iter().copied()))).unwrap()
    }

    #[test]
    fn singletons_reproduce_the_hypergraph() {
        let h = hg(3, &[&[0, 1], &[0, 1, 2], &[2]]);
        let singles = hg(3, &[&[0], &[1], &[2]]);
        assert_eq!(relation_hypergraph(&singles, &h, Relation::Containment).unwrap(), h);
    }

    #[test]
    fn one_pair_intersection() {
        let h = hg(3, &[&[1, 2]]);
        let r = relation_hypergraph(&h, &h, Relation::Intersection).unwrap();
        assert_eq!(r, hg(1, &[&[0]]));
        let r = relation_hypergraph(&h, &h, Relation::ReverseContainment).unwrap();
        assert_eq!(r, hg(1, &[&[0]]));
        assert!(relation_hypergraph(&h, &hg(2, &[&[0]]), Relation::Containment).is_err());
    }
}
