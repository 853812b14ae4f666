//! Exact-arithmetic points, boxes, sign types and planar predicates.

mod general_position;
mod hull;
mod rational;
mod shear;

use std::cmp::Ordering;
use std::fmt;

use num::{BigInt, BigRational, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub use general_position::{check_general_position, Violation};
pub(crate) use general_position::require_general_position;
pub use hull::convex_hull;
pub use rational::{format_rational, parse_rational};
pub use shear::shear_general_position;

/// Exact rational scalar used for every coordinate.
pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Point {
    coords: Vec<Q>,
}

impl Point {
    pub fn new(coords: Vec<Q>) -> Self {
        Point { coords }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Point::new(coords.iter().map(|&c| q(c)).collect())
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Q] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> &Q {
        &self.coords[i]
    }

    pub fn x(&self) -> &Q {
        &self.coords[0]
    }

    pub fn y(&self) -> &Q {
        &self.coords[1]
    }

    pub fn dot(&self, other: &Point) -> Q {
        self.coords
            .iter()
            .zip(&other.coords)
            .fold(Q::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn sub(&self, other: &Point) -> Point {
        Point::new(self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }
}

impl PartialOrd for Point {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic order on coordinates.
impl Ord for Point {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coords.cmp(&other.coords)
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", format_rational(c))?;
        }
        write!(f, ")")
    }
}

/// An ordered list of distinct points of a common dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointSet {
    dim: usize,
    points: Vec<Point>,
}

impl PointSet {
    pub fn new(dim: usize, points: Vec<Point>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::param("dimension must be at least 1"));
        }
        for p in &points {
            if p.dim() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: p.dim() });
            }
        }
        let mut order: Vec<usize> = (0..points.len()).collect();
        order.sort_by(|&a, &b| points[a].cmp(&points[b]).then(a.cmp(&b)));
        for w in order.windows(2) {
            if points[w[0]] == points[w[1]] {
                return Err(Error::DuplicatePoint(w[0].min(w[1]), w[0].max(w[1])));
            }
        }
        Ok(PointSet { dim, points })
    }

    pub fn from_ints<const D: usize>(points: &[[i64; D]]) -> Result<Self> {
        Self::new(D, points.iter().map(|p| Point::from_ints(p)).collect())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn point(&self, i: usize) -> &Point {
        &self.points[i]
    }

    pub fn subset(&self, indices: &[usize]) -> PointSet {
        PointSet {
            dim: self.dim,
            points: indices.iter().map(|&i| self.points[i].clone()).collect(),
        }
    }

    pub(crate) fn require_dim(&self, dim: usize) -> Result<()> {
        if self.dim == dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected: dim, found: self.dim })
        }
    }

    /// Dense rank of every point along each axis (ties share a rank).
    pub fn axis_ranks(&self) -> Vec<Vec<u32>> {
        (0..self.dim)
            .map(|a| dense_ranks(&self.points.iter().map(|p| p.coord(a).clone()).collect::<Vec<_>>()))
            .collect()
    }
}

/// Dense ranks of `values`: equal values share a rank, ranks start at 0.
pub fn dense_ranks(values: &[Q]) -> Vec<u32> {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| values[a].cmp(&values[b]));
    let mut ranks = vec![0u32; values.len()];
    let mut r = 0;
    for (pos, &i) in order.iter().enumerate() {
        if pos > 0 && values[order[pos - 1]] != values[i] {
            r += 1;
        }
        ranks[i] = r;
    }
    ranks
}

/// A closed axis-parallel box.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxisBox {
    pub low: Point,
    pub high: Point,
}

impl AxisBox {
    pub fn contains(&self, p: &Point) -> bool {
        (0..p.dim()).all(|i| self.low.coord(i) <= p.coord(i) && p.coord(i) <= self.high.coord(i))
    }
}

/// The smallest axis-parallel box containing `p` and `q`.
pub fn bounding_box(p: &Point, q: &Point) -> Result<AxisBox> {
    if p.dim() != q.dim() {
        return Err(Error::DimensionMismatch { expected: p.dim(), found: q.dim() });
    }
    let (low, high) = p
        .coords
        .iter()
        .zip(&q.coords)
        .map(|(a, b)| if a <= b { (a.clone(), b.clone()) } else { (b.clone(), a.clone()) })
        .unzip();
    Ok(AxisBox { low: Point::new(low), high: Point::new(high) })
}

/// Sign pattern of a difference vector, normalized so the first sign is `+`.
///
/// Stored as a bitmask: bit `i` set means coordinate `i` is negative. Bit 0
/// is therefore always clear.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignSequence {
    dim: usize,
    negative: u64,
}

impl SignSequence {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_positive(&self, i: usize) -> bool {
        self.negative >> i & 1 == 0
    }

    /// Index in `0..2^(d-1)`.
    pub fn index(&self) -> usize {
        (self.negative >> 1) as usize
    }

    pub fn signs(&self) -> Vec<char> {
        (0..self.dim).map(|i| if self.is_positive(i) { '+' } else { '-' }).collect()
    }
}

impl fmt::Debug for SignSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.signs().iter().map(char::to_string).collect::<Vec<_>>().join(","))
    }
}

/// The directed type of the unordered pair `{p, q}`.
pub fn directed_type(p: &Point, q: &Point) -> Result<SignSequence> {
    if p.dim() != q.dim() {
        return Err(Error::DimensionMismatch { expected: p.dim(), found: q.dim() });
    }
    if p.dim() > 64 {
        return Err(Error::param("directed types support at most 64 dimensions"));
    }
    let v = q.sub(p);
    if let Some(axis) = v.coords.iter().position(Zero::is_zero) {
        return Err(Error::GeneralPosition {
            family: "directed type".into(),
            violation: Violation::ZeroDifference { axis },
        });
    }
    let flip = v.coords[0].is_negative();
    let negative = v
        .coords
        .iter()
        .enumerate()
        .filter(|(_, c)| c.is_negative() != flip)
        .fold(0u64, |m, (i, _)| m | 1 << i);
    Ok(SignSequence { dim: p.dim(), negative })
}

/// Planar integer coordinates below `2^26` in absolute value, for which the
/// predicates below are exact in `i128`.
fn small_xy(p: &Point) -> Option<(i128, i128)> {
    const LIMIT: i64 = 1 << 26;
    let get = |c: &Q| {
        if !c.is_integer() {
            return None;
        }
        c.to_integer().to_i64().filter(|v| v.abs() < LIMIT).map(i128::from)
    };
    Some((get(p.x())?, get(p.y())?))
}

/// Twice the signed area of the triangle `abc`; positive for a left turn.
pub fn orient2d(a: &Point, b: &Point, c: &Point) -> Q {
    if let (Some(a), Some(b), Some(c)) = (small_xy(a), small_xy(b), small_xy(c)) {
        let v = (b.0 - a.0) * (c.1 - a.1) - (b.1 - a.1) * (c.0 - a.0);
        return Q::from_integer(v.into());
    }
    let (abx, aby) = (b.x() - a.x(), b.y() - a.y());
    let (acx, acy) = (c.x() - a.x(), c.y() - a.y());
    abx * acy - aby * acx
}

/// Sign of [`orient2d`].
pub fn orient2d_sign(a: &Point, b: &Point, c: &Point) -> Ordering {
    if let (Some(a), Some(b), Some(c)) = (small_xy(a), small_xy(b), small_xy(c)) {
        return ((b.0 - a.0) * (c.1 - a.1)).cmp(&((b.1 - a.1) * (c.0 - a.0)));
    }
    orient2d(a, b, c).cmp(&Q::zero())
}

/// Positive if `d` lies strictly inside the circle through `a, b, c`, where
/// `a, b, c` are in counter-clockwise order; negative if strictly outside.
pub fn in_circle(a: &Point, b: &Point, c: &Point, d: &Point) -> Q {
    if let Some(v) = in_circle_small(a, b, c, d) {
        return Q::from_integer(v.into());
    }
    let row = |p: &Point| {
        let (x, y) = (p.x() - d.x(), p.y() - d.y());
        let w = &x * &x + &y * &y;
        (x, y, w)
    };
    let (ax, ay, aw) = row(a);
    let (bx, by, bw) = row(b);
    let (cx, cy, cw) = row(c);
    &ax * (&by * &cw - &bw * &cy) - &ay * (&bx * &cw - &bw * &cx) + &aw * (&bx * &cy - &by * &cx)
}

fn in_circle_small(a: &Point, b: &Point, c: &Point, d: &Point) -> Option<i128> {
    let d = small_xy(d)?;
    let row = |p: &Point| {
        small_xy(p).map(|(x, y)| {
            let (x, y) = (x - d.0, y - d.1);
            (x, y, x * x + y * y)
        })
    };
    let (ax, ay, aw) = row(a)?;
    let (bx, by, bw) = row(b)?;
    let (cx, cy, cw) = row(c)?;
    Some(ax * (by * cw - bw * cy) - ay * (bx * cw - bw * cx) + aw * (bx * cy - by * cx))
}

/// Sign of [`in_circle`].
pub fn in_circle_sign(a: &Point, b: &Point, c: &Point, d: &Point) -> Ordering {
    match in_circle_small(a, b, c, d) {
        Some(v) => v.cmp(&0),
        None => in_circle(a, b, c, d).cmp(&Q::zero()),
    }
}
