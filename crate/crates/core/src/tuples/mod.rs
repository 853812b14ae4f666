//! Colorings of all t-tuples.

mod abstract_lifts;
mod boxes;
mod lift;
mod local_mapping;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::hypergraph::{binomial, colex_rank};

pub use abstract_lifts::{
    lift_proper_two_coloring, m_prime, palette_size, polychromatic_tuples_from_vertex_coloring, ramsey_number,
    Ramsey,
};
pub use boxes::{box_threshold, color_pairs_boxes, color_pairs_rectangles_optimal};
pub use lift::{color_tuples_h_regions, lift_tuples};
pub use local_mapping::{
    local_mapping_survivors, verify_no_local_mapping, LocalMappingCounts, MultisetColorRule, MULTISETS,
};

/// Largest number of tuples a coloring may hold.
pub const MAX_TUPLES: u64 = 1 << 26;

/// A color in `1..=k` for every `t`-subset of `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TupleColoring {
    n: usize,
    t: usize,
    k: u32,
    /// Indexed by colex rank.
    colors: Vec<u32>,
}

impl TupleColoring {
    /// Builds the coloring from a function of sorted `t`-subsets.
    pub fn from_fn<F: FnMut(&[usize]) -> u32>(n: usize, t: usize, k: u32, mut f: F) -> Result<Self> {
        if t == 0 {
            return Err(Error::param("tuple size must be at least 1"));
        }
        let count = binomial(n, t);
        if count > MAX_TUPLES {
            return Err(Error::LimitExceeded(format!("{count} tuples exceed the cap of {MAX_TUPLES}")));
        }
        let mut colors = vec![0u32; count as usize];
        for tuple in (0..n).combinations(t) {
            let c = f(&tuple);
            if c == 0 || c > k {
                return Err(Error::param(format!("color {c} of tuple {tuple:?} is outside 1..={k}")));
            }
            colors[colex_rank(&tuple)] = c;
        }
        Ok(TupleColoring { n, t, k, colors })
    }

    /// Builds the coloring from explicit entries, which must cover every
    /// `t`-subset exactly once.
    pub fn from_entries<I: IntoIterator<Item = (Vec<usize>, u32)>>(
        n: usize,
        t: usize,
        k: u32,
        entries: I,
    ) -> Result<Self> {
        if t == 0 {
            return Err(Error::param("tuple size must be at least 1"));
        }
        let count = binomial(n, t);
        if count > MAX_TUPLES {
            return Err(Error::LimitExceeded(format!("{count} tuples exceed the cap of {MAX_TUPLES}")));
        }
        let mut colors = vec![0u32; count as usize];
        for (mut tuple, c) in entries {
            tuple.sort_unstable();
            if tuple.len() != t || tuple.windows(2).any(|w| w[0] == w[1]) || tuple.last().is_some_and(|&v| v >= n) {
                return Err(Error::DomainMismatch(format!("{tuple:?} is not a {t}-subset of 0..{n}")));
            }
            if c == 0 || c > k {
                return Err(Error::param(format!("color {c} of tuple {tuple:?} is outside 1..={k}")));
            }
            let slot = &mut colors[colex_rank(&tuple)];
            if *slot != 0 {
                return Err(Error::DomainMismatch(format!("tuple {tuple:?} is colored twice")));
            }
            *slot = c;
        }
        if let Some(r) = colors.iter().position(|&c| c == 0) {
            let missing = crate::hypergraph::colex_unrank(r, t);
            return Err(Error::DomainMismatch(format!("tuple {missing:?} has no color")));
        }
        Ok(TupleColoring { n, t, k, colors })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Color of a sorted `t`-subset.
    pub fn get(&self, tuple: &[usize]) -> u32 {
        debug_assert!(tuple.windows(2).all(|w| w[0] < w[1]));
        self.colors[colex_rank(tuple)]
    }

    /// `(tuple, color)` in lexicographic order of tuples.
    pub fn iter(&self) -> impl Iterator<Item = (Vec<usize>, u32)> + '_ {
        (0..self.n).combinations(self.t).map(|tuple| {
            let c = self.get(&tuple);
            (tuple, c)
        })
    }

    pub fn colors_used(&self) -> usize {
        let mut used = self.colors.clone();
        used.sort_unstable();
        used.dedup();
        used.len()
    }
}
