//! Colorings of Delaunay-edges.

mod bottomless;
mod disk;
mod halfplane;
mod poset;
mod rectangle;

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::hypergraph::EdgeSet;

pub use bottomless::{bottomless_sweep, color_bottomless_edges, BottomlessSweep};
pub use disk::{build_conflict_graph_j, color_disk_edges, ConflictGraph};
pub use halfplane::{color_halfplane_edges, halfplane_traversal};
pub use poset::{hasse_edge_coloring, Poset};
pub use rectangle::{color_rectangle_edges, dominance_posets};

/// Colors in `1..=k` assigned to unordered vertex pairs.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EdgeColoring {
    k: u32,
    colors: BTreeMap<(usize, usize), u32>,
}

impl EdgeColoring {
    pub fn new<I: IntoIterator<Item = ((usize, usize), u32)>>(k: u32, entries: I) -> Result<Self> {
        let mut colors = BTreeMap::new();
        for ((i, j), c) in entries {
            if i == j {
                return Err(Error::param(format!("edge ({i}, {j}) is a loop")));
            }
            if c == 0 || c > k {
                return Err(Error::param(format!("color {c} of edge ({i}, {j}) is outside 1..={k}")));
            }
            if colors.insert((i.min(j), i.max(j)), c).is_some() {
                return Err(Error::param(format!("edge ({i}, {j}) is colored twice")));
            }
        }
        Ok(EdgeColoring { k, colors })
    }

    /// Palette size.
    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn get(&self, i: usize, j: usize) -> Option<u32> {
        self.colors.get(&(i.min(j), i.max(j))).copied()
    }

    /// `((i, j), color)` with `i < j`, sorted by pair.
    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), u32)> + '_ {
        self.colors.iter().map(|(&e, &c)| (e, c))
    }

    pub fn domain(&self) -> Vec<(usize, usize)> {
        self.colors.keys().copied().collect()
    }

    /// Number of distinct colors actually used.
    pub fn colors_used(&self) -> usize {
        let mut used: Vec<u32> = self.colors.values().copied().collect();
        used.sort_unstable();
        used.dedup();
        used.len()
    }

    /// Fails unless the colored pairs are exactly `edges`.
    pub fn check_domain(&self, edges: &EdgeSet) -> Result<()> {
        if self.colors.len() == edges.len() && self.colors.keys().zip(edges.edges()).all(|(a, b)| a == b) {
            return Ok(());
        }
        let missing = edges.edges().iter().find(|&&(i, j)| self.get(i, j).is_none());
        let extra = self.colors.keys().find(|&&(i, j)| !edges.contains(i, j));
        Err(Error::DomainMismatch(match (missing, extra) {
            (Some(e), _) => format!("Delaunay-edge {e:?} has no color"),
            (None, Some(e)) => format!("colored pair {e:?} is not a Delaunay-edge"),
            (None, None) => "edge sets differ".into(),
        }))
    }
}

/// `ceil(log2(n))`, with `0` for `n <= 1`.
pub fn ceil_log2(n: usize) -> u32 {
    if n <= 1 {
        0
    } else {
        usize::BITS - (n - 1).leading_zeros()
    }
}
