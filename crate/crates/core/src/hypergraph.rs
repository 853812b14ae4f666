use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// A hypergraph on vertices `0..n` with distinct nonempty hyperedges, kept in
/// lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<VertexSet>,
}

impl Hypergraph {
    pub fn new<I: IntoIterator<Item = VertexSet>>(n: usize, edges: I) -> Result<Self> {
        let edges: Vec<VertexSet> = edges.into_iter().filter(|e| !e.is_empty()).collect();
        if let Some(e) = edges.iter().find(|e| e.last().is_some_and(|m| m >= n)) {
            return Err(Error::param(format!("hyperedge {e:?} has a vertex outside 0..{n}")));
        }
        Ok(Self::from_unsorted(n, edges))
    }

    pub(crate) fn from_unsorted(n: usize, mut edges: Vec<VertexSet>) -> Self {
        edges.retain(|e| !e.is_empty());
        edges.sort_unstable();
        edges.dedup();
        Hypergraph { n, edges }
    }

    pub(crate) fn from_masks(n: usize, mut masks: Vec<u128>) -> Self {
        masks.retain(|&m| m != 0);
        masks.sort_unstable();
        masks.dedup();
        Self::from_unsorted(n, masks.into_iter().map(VertexSet::from_mask).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, e: &VertexSet) -> bool {
        self.edges.binary_search(e).is_ok()
    }

    /// The hyperedges of size two.
    pub fn size_two_edges(&self) -> EdgeSet {
        EdgeSet::from_unsorted(
            self.n,
            self.edges
                .iter()
                .filter(|e| e.len() == 2)
                .map(|e| {
                    let v = e.to_vec();
                    (v[0], v[1])
                })
                .collect(),
        )
    }

    /// Relabels vertex `i` as `map[i]`.
    pub fn relabel(&self, map: &[usize]) -> Hypergraph {
        Self::from_unsorted(
            self.n,
            self.edges.iter().map(|e| e.iter().map(|i| map[i]).collect()).collect(),
        )
    }
}

/// A set of unordered pairs `(i, j)` with `i < j`, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeSet {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl EdgeSet {
    pub fn new<I: IntoIterator<Item = (usize, usize)>>(n: usize, pairs: I) -> Result<Self> {
        let mut edges = Vec::new();
        for (i, j) in pairs {
            if i == j || i >= n || j >= n {
                return Err(Error::param(format!("invalid edge ({i}, {j}) on {n} vertices")));
            }
            edges.push((i.min(j), i.max(j)));
        }
        Ok(Self::from_unsorted(n, edges))
    }

    pub(crate) fn from_unsorted(n: usize, mut edges: Vec<(usize, usize)>) -> Self {
        edges.sort_unstable();
        edges.dedup();
        EdgeSet { n, edges }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.index_of(i, j).is_some()
    }

    pub fn index_of(&self, i: usize, j: usize) -> Option<usize> {
        self.edges.binary_search(&(i.min(j), i.max(j))).ok()
    }

    /// Neighbors of each vertex, in increasing order.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(i, j) in &self.edges {
            adj[i].push(j);
            adj[j].push(i);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        adj
    }
}

/// `C(n, k)`, saturating at `u64::MAX`.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) as u128 / (i + 1) as u128;
        if r > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    r as u64
}

/// Colex rank of a strictly increasing index sequence.
pub fn colex_rank(subset: &[usize]) -> usize {
    subset.iter().enumerate().map(|(i, &a)| binomial(a, i + 1) as usize).sum()
}

/// Inverse of [`colex_rank`] for subsets of size `t`.
pub fn colex_unrank(mut rank: usize, t: usize) -> Vec<usize> {
    let mut out = vec![0; t];
    for i in (0..t).rev() {
        // Largest a with C(a, i + 1) <= rank.
        let mut a = i;
        while binomial(a + 1, i + 1) as usize <= rank {
            a += 1;
        }
        out[i] = a;
        rank -= binomial(a, i + 1) as usize;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;

    #[test]
    fn hypergraph_normalizes() {
        let h = Hypergraph::new(
            4,
            [
                VertexSet::from_indices([2, 3]),
                VertexSet::new(),
                VertexSet::from_indices([0]),
                VertexSet::from_indices([3, 2]),
            ],
        )
        .unwrap();
        assert_eq!(h.len(), 2);
        assert_eq!(h.edges()[0], VertexSet::from_indices([0]));
        assert!(h.contains(&VertexSet::from_indices([2, 3])));
        assert!(Hypergraph::new(2, [VertexSet::from_indices([2])]).is_err());
        assert_eq!(h.size_two_edges().edges(), &[(2, 3)]);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(59, 0), 1);
        assert_eq!(binomial(3, 4), 0);
        assert_eq!(binomial(64, 32), 1_832_624_140_942_590_534);
    }

    #[test]
    fn colex_is_a_bijection() {
        for t in 1..4 {
            let subsets: Vec<Vec<usize>> = (0..7).combinations(t).collect();
            let mut ranks: Vec<usize> = subsets.iter().map(|s| colex_rank(s)).collect();
            for (s, &r) in subsets.iter().zip(&ranks) {
                assert_eq!(&colex_unrank(r, t), s);
            }
            ranks.sort_unstable();
            assert_eq!(ranks, (0..binomial(7, t) as usize).collect::<Vec<_>>());
        }
    }
}
