use std::cmp::Reverse;
use std::collections::BinaryHeap;

use super::{ceil_log2, EdgeColoring};
use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// A strict partial order on `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    n: usize,
    /// `above[x]`: every `y` with `x < y`.
    above: Vec<VertexSet>,
}

impl Poset {
    /// The transitive closure of `relations`, each `(x, y)` meaning `x < y`.
    pub fn new<I: IntoIterator<Item = (usize, usize)>>(n: usize, relations: I) -> Result<Self> {
        let mut above = vec![VertexSet::new(); n];
        for (x, y) in relations {
            if x >= n || y >= n {
                return Err(Error::param(format!("relation ({x}, {y}) outside 0..{n}")));
            }
            above[x].insert(y);
        }
        // Closure in reverse topological order; a cycle shows up as x < x.
        let order = topological_order(n, &above)
            .ok_or_else(|| Error::param("relation has a cycle, so it is not a strict order"))?;
        for &x in order.iter().rev() {
            let mut closed = above[x].clone();
            for y in above[x].iter() {
                closed = closed.union(&above[y]);
            }
            above[x] = closed;
        }
        Ok(Poset { n, above })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn less(&self, x: usize, y: usize) -> bool {
        self.above[x].contains(y)
    }

    /// Immediate-predecessor arcs `(x, y)`, sorted.
    pub fn hasse(&self) -> Vec<(usize, usize)> {
        let mut arcs = Vec::new();
        for x in 0..self.n {
            let mut covered = VertexSet::new();
            for z in self.above[x].iter() {
                covered = covered.union(&self.above[z]);
            }
            arcs.extend(self.above[x].iter().filter(|&y| !covered.contains(y)).map(|y| (x, y)));
        }
        arcs
    }

    /// Topological order breaking ties by smallest index.
    pub fn linear_extension(&self) -> Vec<usize> {
        topological_order(self.n, &self.above).expect("a poset is acyclic")
    }
}

fn topological_order(n: usize, above: &[VertexSet]) -> Option<Vec<usize>> {
    let mut indegree = vec![0usize; n];
    for a in above {
        for y in a.iter() {
            indegree[y] += 1;
        }
    }
    let mut heap: BinaryHeap<Reverse<usize>> = (0..n).filter(|&x| indegree[x] == 0).map(Reverse).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(Reverse(x)) = heap.pop() {
        order.push(x);
        for y in above[x].iter() {
            indegree[y] -= 1;
            if indegree[y] == 0 {
                heap.push(Reverse(y));
            }
        }
    }
    (order.len() == n).then_some(order)
}

/// Colors the Hasse arcs with at most `ceil(log2 n)` colors so that no two
/// consecutive arcs `(x, y), (y, z)` share a color.
///
/// The linear extension is split into a first half of `ceil(len/2)` elements
/// and the rest; arcs across the split of a range of size `s` get color
/// `ceil(log2 s)`, and both halves recurse.
pub fn hasse_edge_coloring(p: &Poset) -> EdgeColoring {
    let order = p.linear_extension();
    let mut pos = vec![0usize; p.n];
    for (i, &x) in order.iter().enumerate() {
        pos[x] = i;
    }
    let entries = p.hasse().into_iter().map(|(x, y)| {
        let (mut lo, mut hi) = (0usize, p.n);
        let (a, b) = (pos[x], pos[y]);
        loop {
            let mid = lo + (hi - lo).div_ceil(2);
            if b < mid {
                hi = mid;
            } else if a >= mid {
                lo = mid;
            } else {
                return ((x, y), ceil_log2(hi - lo));
            }
        }
    });
    EdgeColoring::new(ceil_log2(p.n), entries).expect("colors lie in the palette")
}
