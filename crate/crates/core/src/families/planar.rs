//! Halfplane and disk enumeration, with exact witness regions.

use num::{One, Signed, Zero};

use super::Region;
use crate::geometry::{in_circle_sign, orient2d_sign, Point, PointSet, Q};

/// How a hyperedge was cut out; enough to rebuild an exact witness region.
#[derive(Clone, Copy, Debug)]
pub(crate) enum Cut {
    /// Everything (only used for one point).
    Single(usize),
    /// Strict side of the directed line `p -> q` (`left` or right), plus a
    /// subset of `{p, q}`.
    Line { p: usize, q: usize, left: bool, with_p: bool, with_q: bool },
    /// The closed disk with diameter `p q` (only used for two points), or the
    /// degenerate disk at `p` when `p == q`.
    Diametral { p: usize, q: usize },
    /// Strict interior of the circle through `a, b, c` (counter-clockwise),
    /// plus the boundary points selected by bits 0, 1, 2 of `keep`.
    Circle { a: usize, b: usize, c: usize, keep: u8 },
}

fn bit(i: usize) -> u128 {
    1u128 << i
}

pub(crate) fn halfplane_cuts(s: &PointSet) -> Vec<(u128, Cut)> {
    let pts = s.points();
    let n = pts.len();
    if n == 1 {
        return vec![(1, Cut::Single(0))];
    }
    let mut out = Vec::with_capacity(8 * n * n);
    for p in 0..n {
        for q in p + 1..n {
            let (mut left, mut right) = (0u128, 0u128);
            for (r, pr) in pts.iter().enumerate() {
                if r == p || r == q {
                    continue;
                }
                let o = orient2d_sign(&pts[p], &pts[q], pr);
                if o.is_gt() {
                    left |= bit(r);
                } else if o.is_lt() {
                    right |= bit(r);
                }
            }
            for (side, is_left) in [(left, true), (right, false)] {
                for (with_p, with_q) in [(false, false), (true, false), (false, true), (true, true)] {
                    let mask = side
                        | if with_p { bit(p) } else { 0 }
                        | if with_q { bit(q) } else { 0 };
                    if mask != 0 {
                        out.push((mask, Cut::Line { p, q, left: is_left, with_p, with_q }));
                    }
                }
            }
        }
    }
    out
}

pub(crate) fn disk_cuts(s: &PointSet) -> Vec<(u128, Cut)> {
    let pts = s.points();
    let n = pts.len();
    match n {
        0 => return Vec::new(),
        1 => return vec![(1, Cut::Diametral { p: 0, q: 0 })],
        2 => {
            return vec![
                (1, Cut::Diametral { p: 0, q: 0 }),
                (2, Cut::Diametral { p: 1, q: 1 }),
                (3, Cut::Diametral { p: 0, q: 1 }),
            ]
        }
        _ => {}
    }
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let o = orient2d_sign(&pts[i], &pts[j], &pts[k]);
                if o.is_eq() {
                    continue;
                }
                let (a, b, c) = if o.is_gt() { (i, j, k) } else { (i, k, j) };
                let mut inside = 0u128;
                for (l, pl) in pts.iter().enumerate() {
                    if l != i && l != j && l != k && in_circle_sign(&pts[a], &pts[b], &pts[c], pl).is_gt() {
                        inside |= bit(l);
                    }
                }
                for keep in 0u8..8 {
                    let mut mask = inside;
                    for (t, idx) in [a, b, c].into_iter().enumerate() {
                        if keep >> t & 1 == 1 {
                            mask |= bit(idx);
                        }
                    }
                    if mask != 0 {
                        out.push((mask, Cut::Circle { a, b, c, keep }));
                    }
                }
            }
        }
    }
    out
}

/// An exact region realizing `cut`.
pub(crate) fn witness(s: &PointSet, cut: Cut) -> Region {
    let pts = s.points();
    match cut {
        Cut::Single(p) => Region::Halfplane {
            normal: Point::from_ints(&[1, 0]),
            offset: pts[p].x().clone(),
        },
        Cut::Line { p, q, left, with_p, with_q } => line_witness(pts, p, q, left, with_p, with_q),
        Cut::Diametral { p, q } => {
            let center = Point::new(
                (0..2).map(|a| (pts[p].coord(a) + pts[q].coord(a)) / Q::from_integer(2.into())).collect(),
            );
            let d = pts[p].sub(&center);
            Region::Disk { radius_sq: d.dot(&d), center }
        }
        Cut::Circle { a, b, c, keep } => circle_witness(pts, [a, b, c], keep),
    }
}

fn half() -> Q {
    Q::new(1.into(), 2.into())
}

fn scale(p: &Point, k: &Q) -> Point {
    Point::new(p.coords().iter().map(|c| c * k).collect())
}

fn add(p: &Point, r: &Point) -> Point {
    Point::new(p.coords().iter().zip(r.coords()).map(|(a, b)| a + b).collect())
}

fn line_witness(pts: &[Point], p: usize, q: usize, left: bool, with_p: bool, with_q: bool) -> Region {
    let d = pts[q].sub(&pts[p]);
    // n·(x - p) < 0 exactly on the chosen strict side.
    let mut normal = Point::new(vec![d.y().clone(), -d.x().clone()]);
    if !left {
        normal = scale(&normal, &-Q::one());
    }
    let base = normal.dot(&pts[p]);
    let others = || (0..pts.len()).filter(move |&r| r != p && r != q);
    match (with_p, with_q) {
        (true, true) | (false, false) => {
            // Translate: slack to the nearest point on the excluded side.
            let slack = others()
                .map(|r| normal.dot(&pts[r]) - &base)
                .filter(|v| if with_p { v.is_positive() } else { v.is_negative() })
                .map(|v| v.abs())
                .min()
                .unwrap_or_else(Q::one);
            let delta = slack * half();
            let offset = if with_p { base + delta } else { base - delta };
            Region::Halfplane { normal, offset }
        }
        _ => {
            // Rotate slightly about the kept endpoint so the other one leaves.
            let (pivot, dir) = if with_p { (p, d.clone()) } else { (q, scale(&d, &-Q::one())) };
            let eps = others()
                .filter_map(|r| {
                    let v = pts[r].sub(&pts[pivot]);
                    let along = dir.dot(&v).abs();
                    (!along.is_zero()).then(|| normal.dot(&v).abs() / along * half())
                })
                .min()
                .map_or_else(Q::one, |e| e.min(Q::one()));
            let normal = add(&normal, &scale(&dir, &eps));
            let offset = normal.dot(&pts[pivot]);
            Region::Halfplane { normal, offset }
        }
    }
}

fn det3(m: [[&Q; 3]; 3]) -> Q {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

/// Solves `[x_t, y_t, 1] · v = rhs_t` for the three (non-collinear) points.
fn solve3(t: [&Point; 3], rhs: [Q; 3]) -> [Q; 3] {
    let one = Q::one();
    let rows: Vec<[&Q; 3]> = t.iter().map(|p| [p.x(), p.y(), &one]).collect();
    let det = det3([rows[0], rows[1], rows[2]]);
    let mut out: [Q; 3] = [Q::zero(), Q::zero(), Q::zero()];
    for (col, slot) in out.iter_mut().enumerate() {
        let mut m = [rows[0], rows[1], rows[2]];
        for (r, row) in m.iter_mut().enumerate() {
            row[col] = &rhs[r];
        }
        *slot = det3(m) / &det;
    }
    out
}

fn circle_witness(pts: &[Point], tri: [usize; 3], keep: u8) -> Region {
    let t = [&pts[tri[0]], &pts[tri[1]], &pts[tri[2]]];
    // f(x) = |x|^2 - a·x - c0 vanishes on the triple.
    let [ax, ay, c0] = solve3(t, t.map(|p| p.dot(p)));
    let f = |x: &Point| x.dot(x) - &ax * x.x() - &ay * x.y() - &c0;
    // g(x) = da·x + dc is +1 on kept boundary points and -1 on dropped ones.
    let signs: [Q; 3] = std::array::from_fn(|i| if keep >> i & 1 == 1 { Q::one() } else { -Q::one() });
    let [dax, day, dc] = solve3(t, signs);
    let g = |x: &Point| &dax * x.x() + &day * x.y() + &dc;
    let eta = (0..pts.len())
        .filter(|r| !tri.contains(r))
        .filter_map(|r| {
            let gr = g(&pts[r]).abs();
            (!gr.is_zero()).then(|| f(&pts[r]).abs() / gr * half())
        })
        .min()
        .map_or_else(Q::one, |e| e.min(Q::one()));
    let (ax, ay, c0) = (ax + &eta * dax, ay + &eta * day, c0 + &eta * dc);
    let center = Point::new(vec![&ax * half(), &ay * half()]);
    let radius_sq = c0 + center.dot(&center);
    Region::Disk { center, radius_sq }
}
