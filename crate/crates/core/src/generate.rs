//! Seeded point-set, hypergraph and poset generators.

use rand::rngs::ChaCha8Rng;
use rand::seq::SliceRandom;
use rand::{RngExt, SeedableRng};

use crate::edges::Poset;
use crate::error::{Error, Result};
use crate::families::{FamilyKind, HalfspaceSpec};
use crate::geometry::{check_general_position, convex_hull, Point, PointSet};
use crate::hypergraph::Hypergraph;
use crate::vertex_set::VertexSet;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `n` points with integer coordinates, pairwise distinct on every axis.
pub fn random_points(n: usize, dim: usize, seed: u64) -> Result<PointSet> {
    random_points_with(&mut rng(seed), n, dim)
}

fn random_points_with(rng: &mut ChaCha8Rng, n: usize, dim: usize) -> Result<PointSet> {
    if dim == 0 {
        return Err(Error::param("dimension must be at least 1"));
    }
    let spread = (16 * n).max(1000);
    let axes: Vec<Vec<usize>> = (0..dim).map(|_| rand::seq::index::sample(rng, spread, n).into_vec()).collect();
    let points = (0..n).map(|i| Point::from_ints(&axes.iter().map(|a| a[i] as i64).collect::<Vec<_>>())).collect();
    PointSet::new(dim, points)
}

/// Like [`random_points`], resampled until the set is in general position
/// for `family`.
pub fn random_points_for(family: &FamilyKind, n: usize, dim: usize, seed: u64) -> Result<PointSet> {
    let dim = family.required_dim().unwrap_or(dim);
    let mut rng = rng(seed);
    for _ in 0..1000 {
        let s = random_points_with(&mut rng, n, dim)?;
        if check_general_position(&s, family).is_empty() {
            return Ok(s);
        }
    }
    Err(Error::param(format!("no {family} general-position sample of {n} points in 1000 attempts")))
}

/// The integer grid `{0..side-1}^dim`.
pub fn grid_points(side: usize, dim: usize) -> Result<PointSet> {
    if side == 0 || dim == 0 {
        return Err(Error::param("grid side and dimension must be at least 1"));
    }
    let total = side.checked_pow(dim as u32).filter(|&t| t <= 1 << 16);
    let total = total.ok_or_else(|| Error::LimitExceeded(format!("grid {side}^{dim}")))?;
    let points = (0..total)
        .map(|mut i| {
            let coords: Vec<i64> = (0..dim)
                .map(|_| {
                    let c = i % side;
                    i /= side;
                    c as i64
                })
                .collect();
            Point::from_ints(&coords)
        })
        .collect();
    PointSet::new(dim, points)
}

/// The vertices of a regular `n`-gon of radius `10^6`, rounded to integers,
/// counterclockwise from `(10^6, 0)`.
pub fn regular_polygon(n: usize) -> Result<PointSet> {
    if n == 0 {
        return Err(Error::param("polygon needs at least one vertex"));
    }
    let r = 1e6;
    let points: Vec<Point> = (0..n)
        .map(|i| {
            let a = std::f64::consts::TAU * i as f64 / n as f64;
            Point::from_ints(&[(r * a.cos()).round() as i64, (r * a.sin()).round() as i64])
        })
        .collect();
    let s = PointSet::new(2, points)?;
    if n >= 3 && convex_hull(&s)?.len() != n {
        return Err(Error::LimitExceeded(format!("{n}-gon is not strictly convex after rounding")));
    }
    Ok(s)
}

/// The frozen five-point set on which no 2-coloring of the
/// bottomless-rectangle Delaunay-edges separates every 3-point range.
pub fn bottomless_fixture() -> PointSet {
    PointSet::from_ints(&[[0, 0], [1, 1], [2, 4], [3, 2], [4, 3]]).expect("fixture is valid")
}

/// `h` nonzero integer normals with entries in `-4..=4`, no two parallel.
pub fn random_halfspaces(h: usize, dim: usize, seed: u64) -> Result<Vec<HalfspaceSpec>> {
    let mut rng = rng(seed);
    let mut out: Vec<HalfspaceSpec> = Vec::new();
    let mut attempts = 0;
    while out.len() < h {
        attempts += 1;
        if attempts > 10_000 {
            return Err(Error::param(format!("cannot draw {h} non-parallel normals in dimension {dim}")));
        }
        let v: Vec<i64> = (0..dim).map(|_| rng.random_range(-4..=4)).collect();
        if v.iter().all(|&x| x == 0) {
            continue;
        }
        let vq = Point::from_ints(&v);
        // Parallel iff every 2x2 minor vanishes.
        let parallel = out.iter().any(|o| {
            let w = o.normal();
            (0..dim).all(|i| (0..i).all(|j| w.coord(i) * vq.coord(j) == w.coord(j) * vq.coord(i)))
        });
        if !parallel {
            out.push(HalfspaceSpec::from_ints(&v)?);
        }
    }
    Ok(out)
}

/// `edges` random nonempty subsets of `0..n`, each of uniform size in `1..=n`.
pub fn random_hypergraph(n: usize, edges: usize, seed: u64) -> Result<Hypergraph> {
    if n == 0 {
        return Err(Error::param("hypergraph needs at least one vertex"));
    }
    let mut rng = rng(seed);
    let sets: Vec<VertexSet> = (0..edges)
        .map(|_| {
            let size = rng.random_range(1..=n);
            rand::seq::index::sample(&mut rng, n, size).into_iter().collect()
        })
        .collect();
    Hypergraph::new(n, sets)
}

/// A random order on `0..n`: relations `x < y` for positions increasing in
/// a random permutation, each kept with probability `p`, then closed.
pub fn random_poset(n: usize, p: f64, seed: u64) -> Result<Poset> {
    let mut rng = rng(seed);
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut rng);
    let mut relations = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.random_bool(p) {
                relations.push((perm[a], perm[b]));
            }
        }
    }
    Poset::new(n, relations)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeds_reproduce() {
        assert_eq!(random_points(20, 2, 7).unwrap(), random_points(20, 2, 7).unwrap());
        assert_ne!(random_points(20, 2, 7).unwrap(), random_points(20, 2, 8).unwrap());
        let s = random_points_for(&FamilyKind::Disk, 12, 2, 3).unwrap();
        assert!(check_general_position(&s, &FamilyKind::Disk).is_empty());
    }

    #[test]
    fn polygons_are_convex() {
        for n in 1..=40 {
            assert_eq!(regular_polygon(n).unwrap().len(), n);
        }
        assert_eq!(grid_points(3, 2).unwrap().len(), 9);
    }

    #[test]
    fn halfspaces_are_not_parallel() {
        let hs = random_halfspaces(3, 2, 1).unwrap();
        assert_eq!(hs.len(), 3);
        assert!(random_halfspaces(3, 1, 1).is_err());
    }
}
