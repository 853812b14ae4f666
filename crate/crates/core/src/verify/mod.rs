//! Brute-force checks of coloring guarantees against canonical hyperedges.

mod counterexample;
mod exhaustive;
mod planarity;
mod relation;

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use crate::edges::EdgeColoring;
use crate::error::{Error, Result};
use crate::families::{canonical_hyperedges, delaunay_edges, FamilyKind};
use crate::geometry::PointSet;
use crate::hypergraph::{binomial, colex_rank, Hypergraph};
use crate::tuples::TupleColoring;
use crate::vertex_set::VertexSet;

pub use counterexample::{bottomless_candidates, find_bottomless_counterexample, BOTTOMLESS_BUDGET};
pub use exhaustive::{exhaustive_impossibility, exhaustive_impossibility_on, Target, EXHAUSTIVE_BUDGET};
pub use planarity::planarity_check;
pub use relation::{relation_hypergraph, Relation};

/// What a threshold counts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ThresholdKind {
    Points,
    Edges,
}

/// The condition a qualifying hyperedge must meet.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    /// At least two colors.
    Proper,
    /// All colors `1..=k`.
    Polychromatic(u32),
}

/// A hyperedge that breaks the guarantee.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub hyperedge: Vec<usize>,
    /// Colored elements (edges or tuples) inside the hyperedge.
    pub elements: u64,
    /// Colors present, sorted.
    pub colors: Vec<u32>,
    /// Required colors that are absent; empty in proper mode.
    pub missing: Vec<u32>,
}

impl Witness {
    pub fn detail(&self) -> String {
        if self.missing.is_empty() {
            format!("{} element(s) with colors {:?}: not two distinct colors", self.elements, self.colors)
        } else {
            format!("{} element(s) with colors {:?}: missing {:?}", self.elements, self.colors, self.missing)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub passed: bool,
    pub checked_regions: u64,
    pub witness: Option<Witness>,
    pub threshold_kind: ThresholdKind,
    pub threshold: usize,
    pub mode: Mode,
}

fn masks_of(h: &Hypergraph) -> Result<Vec<u128>> {
    h.edges()
        .iter()
        .map(|e| e.as_mask().ok_or_else(|| Error::LimitExceeded("verification supports at most 128 points".into())))
        .collect()
}

fn bits(mut m: u128) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (m != 0).then(|| {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            i
        })
    })
}

fn satisfied(present: &[u32], mode: Mode) -> bool {
    match mode {
        Mode::Proper => present.len() >= 2,
        Mode::Polychromatic(k) => (1..=k).all(|c| present.contains(&c)),
    }
}

fn witness(e: u128, elements: u64, present: Vec<u32>, mode: Mode) -> Witness {
    let missing = match mode {
        Mode::Proper => Vec::new(),
        Mode::Polychromatic(k) => (1..=k).filter(|c| !present.contains(c)).collect(),
    };
    Witness { hyperedge: bits(e).collect(), elements, colors: present, missing }
}

/// Checks that every canonical hyperedge meeting the threshold contains two
/// Delaunay-edges of different colors.
pub fn verify_edge_coloring(
    s: &PointSet,
    family: &FamilyKind,
    coloring: &EdgeColoring,
    threshold: usize,
    kind: ThresholdKind,
) -> Result<VerificationReport> {
    coloring.check_domain(&delaunay_edges(s, family)?)?;
    let h = canonical_hyperedges(s, family)?;
    verify_edge_coloring_on(&h, coloring, threshold, kind)
}

/// [`verify_edge_coloring`] against an explicit hypergraph; the coloring's
/// pairs are the colored elements.
pub fn verify_edge_coloring_on(
    h: &Hypergraph,
    coloring: &EdgeColoring,
    threshold: usize,
    kind: ThresholdKind,
) -> Result<VerificationReport> {
    let n = h.n();
    if let Some(((i, j), _)) = coloring.iter().find(|&((_, j), _)| j >= n) {
        return Err(Error::DomainMismatch(format!("colored pair ({i}, {j}) is outside 0..{n}")));
    }
    let masks = masks_of(h)?;
    // by_color[c - 1][v]: neighbours u > v joined by an edge of color c.
    let k = coloring.k() as usize;
    let mut by_color = vec![vec![0u128; n]; k];
    let mut all = vec![0u128; n];
    for ((i, j), c) in coloring.iter() {
        by_color[c as usize - 1][i] |= 1 << j;
        all[i] |= 1 << j;
    }
    let inside = |e: u128| -> u64 { bits(e).map(|v| (all[v] & e).count_ones() as u64).sum() };
    let qualifies = |e: u128| match kind {
        ThresholdKind::Points => e.count_ones() as usize >= threshold,
        ThresholdKind::Edges => inside(e) >= threshold as u64,
    };
    let present = |e: u128| -> Vec<u32> {
        (0..k).filter(|&c| bits(e).any(|v| by_color[c][v] & e != 0)).map(|c| c as u32 + 1).collect()
    };
    let mode = Mode::Proper;
    let checked = masks.par_iter().filter(|&&e| qualifies(e)).count() as u64;
    let violation = masks.par_iter().find_first(|&&e| qualifies(e) && !satisfied(&present(e), mode));
    Ok(VerificationReport {
        passed: violation.is_none(),
        checked_regions: checked,
        witness: violation.map(|&e| witness(e, inside(e), present(e), mode)),
        threshold_kind: kind,
        threshold,
        mode,
    })
}

/// Checks that every canonical hyperedge with at least `m` points contains
/// `t`-tuples of two colors (proper) or of all `k` colors (polychromatic).
pub fn verify_tuple_coloring(
    s: &PointSet,
    family: &FamilyKind,
    coloring: &TupleColoring,
    m: usize,
    mode: Mode,
) -> Result<VerificationReport> {
    if coloring.n() != s.len() {
        return Err(Error::DomainMismatch(format!(
            "coloring is on {} vertices, point set has {}",
            coloring.n(),
            s.len()
        )));
    }
    let h = canonical_hyperedges(s, family)?;
    verify_tuple_coloring_on(&h, coloring, m, mode)
}

/// [`verify_tuple_coloring`] against an explicit hypergraph.
pub fn verify_tuple_coloring_on(
    h: &Hypergraph,
    coloring: &TupleColoring,
    m: usize,
    mode: Mode,
) -> Result<VerificationReport> {
    let n = h.n();
    if coloring.n() != n {
        return Err(Error::DomainMismatch(format!("coloring is on {} vertices, hypergraph has {n}", coloring.n())));
    }
    let masks = masks_of(h)?;
    let t = coloring.t();
    let k = coloring.k() as usize;
    // ext[rank(P)][c - 1]: vertices v > max(P) with P + v of color c.
    let prefixes = binomial(n, t - 1) as usize;
    let mut ext = vec![vec![0u128; k]; prefixes];
    for (tuple, c) in coloring.iter() {
        let (&v, prefix) = tuple.split_last().expect("t >= 1");
        ext[colex_rank(prefix)][c as usize - 1] |= 1 << v;
    }
    let present = |e: u128, stop_at: usize| -> Vec<u32> {
        let mut found = vec![false; k];
        let mut count = 0;
        let verts: Vec<usize> = bits(e).collect();
        'outer: for prefix in verts.iter().copied().combinations(t - 1) {
            let row = &ext[colex_rank(&prefix)];
            for c in 0..k {
                if !found[c] && row[c] & e != 0 {
                    found[c] = true;
                    count += 1;
                    if count >= stop_at {
                        break 'outer;
                    }
                }
            }
        }
        (0..k).filter(|&c| found[c]).map(|c| c as u32 + 1).collect()
    };
    let need = match mode {
        Mode::Proper => 2,
        Mode::Polychromatic(kk) => kk as usize,
    };
    let qualifies = |e: u128| e.count_ones() as usize >= m;
    let checked = masks.par_iter().filter(|&&e| qualifies(e)).count() as u64;
    let violation = masks.par_iter().find_first(|&&e| qualifies(e) && !satisfied(&present(e, need.max(1)), mode));
    Ok(VerificationReport {
        passed: violation.is_none(),
        checked_regions: checked,
        witness: violation.map(|&e| witness(e, binomial(e.count_ones() as usize, t), present(e, usize::MAX), mode)),
        threshold_kind: ThresholdKind::Points,
        threshold: m,
        mode,
    })
}

/// Recounts a witness from scratch: whether the hyperedge really qualifies
/// and misses the condition under the edge coloring.
pub fn recheck_edge_witness(w: &Witness, coloring: &EdgeColoring, threshold: usize, kind: ThresholdKind) -> bool {
    let e = VertexSet::from_indices(w.hyperedge.iter().copied());
    let inside: Vec<u32> =
        coloring.iter().filter(|&((i, j), _)| e.contains(i) && e.contains(j)).map(|(_, c)| c).collect();
    let size = match kind {
        ThresholdKind::Points => e.len(),
        ThresholdKind::Edges => inside.len(),
    };
    size >= threshold && inside.iter().all(|&c| c == inside[0])
}
