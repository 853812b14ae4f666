//! Tight enumeration of closed boxes whose sides may be unbounded below.
//!
//! A box hyperedge `T` determines its own tight bounds (the extreme
//! coordinates of `T` on every bounded side), so it suffices to enumerate the
//! tight boxes. Bounds are chosen one at a time as witness points; every
//! witness must survive all later restrictions, which is enforced by only
//! admitting later witnesses that keep the earlier ones inside. Each tight box
//! is therefore produced once per choice of witnesses, and exactly once when no
//! two points share a rank on any axis.

use rayon::prelude::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Bound {
    /// Lower and upper bound.
    Both,
    /// Upper bound only; the box extends to `-inf` on this axis.
    Upper,
}

/// Witness points of a tight box: `(low, high)` per axis.
pub(crate) type Witnesses = Vec<(Option<usize>, usize)>;

pub(crate) struct TightBoxes {
    n: usize,
    modes: Vec<Bound>,
    ranks: Vec<Vec<u32>>,
    /// `le[a][r]`: points with rank at most `r` on axis `a`.
    le: Vec<Vec<u128>>,
    /// `ge[a][r]`: points with rank at least `r` on axis `a`.
    ge: Vec<Vec<u128>>,
}

impl TightBoxes {
    pub(crate) fn new(ranks: Vec<Vec<u32>>, modes: Vec<Bound>) -> Self {
        let n = ranks.first().map_or(0, Vec::len);
        assert!(n <= 128 && ranks.len() == modes.len());
        let mut le = Vec::new();
        let mut ge = Vec::new();
        for r in &ranks {
            let levels = r.iter().max().map_or(0, |&m| m as usize + 1);
            let mut at = vec![0u128; levels];
            for (i, &ri) in r.iter().enumerate() {
                at[ri as usize] |= 1 << i;
            }
            let mut l = at.clone();
            for k in 1..levels {
                l[k] |= l[k - 1];
            }
            let mut g = at;
            for k in (0..levels.saturating_sub(1)).rev() {
                g[k] |= g[k + 1];
            }
            le.push(l);
            ge.push(g);
        }
        TightBoxes { n, modes, ranks, le, ge }
    }

    fn full(&self) -> u128 {
        if self.n == 128 {
            u128::MAX
        } else {
            (1u128 << self.n) - 1
        }
    }

    /// All tight box hyperedges as masks (duplicates only under rank ties).
    pub(crate) fn masks(&self) -> Vec<u128> {
        self.roots()
            .into_par_iter()
            .flat_map_iter(|(mask, req, wit)| {
                let mut out = Vec::new();
                self.descend(mask, req, wit, &mut |m, _| out.push(m));
                out
            })
            .collect()
    }

    /// Tight boxes with their witness points.
    pub(crate) fn with_witnesses(&self) -> Vec<(u128, Witnesses)> {
        self.roots()
            .into_par_iter()
            .flat_map_iter(|(mask, req, wit)| {
                let mut out = Vec::new();
                self.descend(mask, req, wit, &mut |m, w| out.push((m, w.to_vec())));
                out
            })
            .collect()
    }

    /// Partial states after choosing the bound(s) of axis 0.
    fn roots(&self) -> Vec<(u128, Vec<usize>, Witnesses)> {
        let mut roots = Vec::new();
        if self.n == 0 || self.modes.is_empty() {
            return roots;
        }
        let full = self.full();
        match self.modes[0] {
            Bound::Both => {
                for lo in 0..self.n {
                    let m1 = full & self.ge[0][self.ranks[0][lo] as usize];
                    for hi in bits(m1) {
                        if self.ranks[0][hi] < self.ranks[0][lo] {
                            continue;
                        }
                        let m2 = m1 & self.le[0][self.ranks[0][hi] as usize];
                        roots.push((m2, vec![lo, hi], vec![(Some(lo), hi)]));
                    }
                }
            }
            Bound::Upper => {
                for hi in 0..self.n {
                    let m = full & self.le[0][self.ranks[0][hi] as usize];
                    roots.push((m, vec![hi], vec![(None, hi)]));
                }
            }
        }
        roots
    }

    fn descend(
        &self,
        mask: u128,
        req: Vec<usize>,
        wit: Witnesses,
        emit: &mut dyn FnMut(u128, &Witnesses),
    ) {
        let a = wit.len();
        if a == self.modes.len() {
            emit(mask, &wit);
            return;
        }
        let r = &self.ranks[a];
        let req_min = req.iter().map(|&i| r[i]).min().unwrap_or(u32::MAX);
        let req_max = req.iter().map(|&i| r[i]).max().unwrap_or(0);
        let lows: Vec<Option<usize>> = match self.modes[a] {
            Bound::Upper => vec![None],
            Bound::Both => bits(mask & self.le[a][req_min.min(self.le[a].len() as u32 - 1) as usize])
                .filter(|&i| r[i] <= req_min)
                .map(Some)
                .collect(),
        };
        for lo in lows {
            let (m1, floor) = match lo {
                Some(p) => (mask & self.ge[a][r[p] as usize], req_max.max(r[p])),
                None => (mask, req_max),
            };
            for hi in bits(m1 & self.ge[a][floor as usize]) {
                let m2 = m1 & self.le[a][r[hi] as usize];
                let mut req2 = req.clone();
                req2.extend(lo);
                req2.push(hi);
                let mut wit2 = wit.clone();
                wit2.push((lo, hi));
                self.descend(m2, req2, wit2, emit);
            }
        }
    }
}

pub(crate) fn bits(mut m: u128) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let b = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(b)
        }
    })
}

/// Mask of points inside the bounding region of the pair `(i, j)`.
pub(crate) fn pair_box(tb: &TightBoxes, i: usize, j: usize) -> u128 {
    let mut m = tb.full();
    for (a, mode) in tb.modes.iter().enumerate() {
        let (ri, rj) = (tb.ranks[a][i], tb.ranks[a][j]);
        m &= tb.le[a][ri.max(rj) as usize];
        if *mode == Bound::Both {
            m &= tb.ge[a][ri.min(rj) as usize];
        }
    }
    m
}
