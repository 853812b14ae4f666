//! Canonical enumeration against independent brute-force oracles.

use std::collections::BTreeSet;

use chroma::families::{axis_halfspaces, canonical_regions};
use chroma::generate::{random_halfspaces, random_points, random_points_for, rng};
use chroma::geometry::Q;
use chroma::*;
use rand::RngExt;

fn set_of(h: &Hypergraph) -> BTreeSet<Vec<usize>> {
    h.edges().iter().map(|e| e.to_vec()).collect()
}

/// Small point sets with many shared coordinates.
fn tied_points(n: usize, dim: usize, seed: u64) -> PointSet {
    let mut r = rng(seed);
    let mut pts: Vec<Vec<i64>> = Vec::new();
    while pts.len() < n {
        let p: Vec<i64> = (0..dim).map(|_| r.random_range(0..4)).collect();
        if !pts.contains(&p) {
            pts.push(p);
        }
    }
    PointSet::new(dim, pts.iter().map(|p| Point::from_ints(p)).collect()).unwrap()
}

/// Every box whose sides sit at point coordinates; `upper_only[a]` leaves
/// the lower side of axis `a` open.
fn box_oracle(s: &PointSet, upper_only: &[bool]) -> BTreeSet<Vec<usize>> {
    let values: Vec<Vec<Q>> = (0..s.dim())
        .map(|a| {
            let mut v: Vec<Q> = s.points().iter().map(|p| p.coord(a).clone()).collect();
            v.sort();
            v.dedup();
            v
        })
        .collect();
    let mut choices: Vec<Vec<(Option<Q>, Q)>> = Vec::new();
    for (a, vals) in values.iter().enumerate() {
        let mut c = Vec::new();
        for hi in vals {
            if upper_only[a] {
                c.push((None, hi.clone()));
            } else {
                for lo in vals.iter().filter(|lo| *lo <= hi) {
                    c.push((Some(lo.clone()), hi.clone()));
                }
            }
        }
        choices.push(c);
    }
    let mut out = BTreeSet::new();
    let mut idx = vec![0usize; s.dim()];
    loop {
        let cut: Vec<usize> = (0..s.len())
            .filter(|&i| {
                (0..s.dim()).all(|a| {
                    let (lo, hi) = &choices[a][idx[a]];
                    let c = s.point(i).coord(a);
                    lo.as_ref().is_none_or(|l| l <= c) && c <= hi
                })
            })
            .collect();
        if !cut.is_empty() {
            out.insert(cut);
        }
        let mut a = 0;
        loop {
            if a == s.dim() {
                return out;
            }
            idx[a] += 1;
            if idx[a] < choices[a].len() {
                break;
            }
            idx[a] = 0;
            a += 1;
        }
    }
}

#[test]
fn axis_rectangles_match_quartic_oracle() {
    for seed in 0..40 {
        let s = if seed % 2 == 0 { random_points(12, 2, seed).unwrap() } else { tied_points(10, 2, seed) };
        let h = canonical_hyperedges(&s, &FamilyKind::AxisRect).unwrap();
        assert_eq!(set_of(&h), box_oracle(&s, &[false, false]), "seed {seed}");
    }
}

#[test]
fn bottomless_rectangles_match_oracle() {
    for seed in 0..40 {
        let s = if seed % 2 == 0 { random_points(12, 2, seed).unwrap() } else { tied_points(10, 2, seed) };
        let h = canonical_hyperedges(&s, &FamilyKind::BottomlessRect).unwrap();
        assert_eq!(set_of(&h), box_oracle(&s, &[false, true]), "seed {seed}");
    }
}

#[test]
fn boxes_match_oracle_in_one_and_three_dimensions() {
    for seed in 0..20 {
        let s = if seed % 2 == 0 { random_points(8, 3, seed).unwrap() } else { tied_points(8, 3, seed) };
        let h = canonical_hyperedges(&s, &FamilyKind::BoxD).unwrap();
        assert_eq!(set_of(&h), box_oracle(&s, &[false, false, false]), "seed {seed}");
        let line = random_points(9, 1, seed).unwrap();
        let h = canonical_hyperedges(&line, &FamilyKind::BoxD).unwrap();
        assert_eq!(h.len(), 9 * 10 / 2);
    }
}

#[test]
fn h_regions_match_threshold_oracle() {
    for seed in 0..30 {
        let hs = random_halfspaces(1 + seed as usize % 3, 2, seed).unwrap();
        let family = FamilyKind::HRegion(hs.clone());
        let s = random_points_for(&family, 9, 2, seed).unwrap();
        let proj: Vec<Vec<Q>> = hs.iter().map(|h| s.points().iter().map(|p| h.normal().dot(p)).collect()).collect();
        let mut oracle = BTreeSet::new();
        let n = s.len();
        let mut idx = vec![0usize; hs.len()];
        'outer: loop {
            let cut: Vec<usize> = (0..n).filter(|&i| (0..hs.len()).all(|a| proj[a][i] <= proj[a][idx[a]])).collect();
            if !cut.is_empty() {
                oracle.insert(cut);
            }
            for i in idx.iter_mut() {
                *i += 1;
                if *i < n {
                    continue 'outer;
                }
                *i = 0;
            }
            break;
        }
        let h = canonical_hyperedges(&s, &family).unwrap();
        assert_eq!(set_of(&h), oracle, "seed {seed}");
    }
}

#[test]
fn reduction_identity() {
    for seed in 0..30 {
        let hs = random_halfspaces(1 + seed as usize % 3, 2, 100 + seed).unwrap();
        let family = FamilyKind::HRegion(hs.clone());
        let s = random_points_for(&family, 10, 2, seed).unwrap();
        let f = h_region_reduction(&s, &hs).unwrap();
        let left = canonical_hyperedges(&s, &family).unwrap();
        let orthants = canonical_hyperedges(&f, &FamilyKind::HRegion(axis_halfspaces(hs.len()))).unwrap();
        assert_eq!(left, orthants, "seed {seed}");
        let boxes = set_of(&canonical_hyperedges(&f, &FamilyKind::BoxD).unwrap());
        assert!(set_of(&left).is_subset(&boxes));
    }
}

#[test]
fn halfplane_cut_count() {
    // Points in general position have n(n-1) + 1 nonempty halfplane cuts.
    for n in 1..=14 {
        let s = random_points_for(&FamilyKind::Halfplane, n, 2, n as u64).unwrap();
        let h = canonical_hyperedges(&s, &FamilyKind::Halfplane).unwrap();
        assert_eq!(h.len(), n * (n - 1) + 1, "n = {n}");
    }
}

fn sampled_cuts(s: &PointSet, samples: usize, seed: u64, disk: bool) -> BTreeSet<Vec<usize>> {
    let pts: Vec<(f64, f64)> = s
        .points()
        .iter()
        .map(|p| (num::ToPrimitive::to_f64(p.x()).unwrap(), num::ToPrimitive::to_f64(p.y()).unwrap()))
        .collect();
    let mut r = rng(seed);
    let mut out = BTreeSet::new();
    for _ in 0..samples {
        let value: Vec<f64> = if disk {
            let (cx, cy) = (r.random_range(-500.0..1500.0), r.random_range(-500.0..1500.0));
            pts.iter().map(|&(x, y)| (x - cx).powi(2) + (y - cy).powi(2)).collect()
        } else {
            let a: f64 = r.random_range(0.0..std::f64::consts::TAU);
            pts.iter().map(|&(x, y)| x * a.cos() + y * a.sin()).collect()
        };
        let mut order: Vec<usize> = (0..pts.len()).collect();
        order.sort_by(|&i, &j| value[i].total_cmp(&value[j]));
        for k in 1..=order.len() {
            let mut cut = order[..k].to_vec();
            cut.sort_unstable();
            out.insert(cut);
        }
    }
    out
}

#[test]
fn sampled_halfplanes_and_disks_are_canonical() {
    for seed in 0..10 {
        let s = random_points_for(&FamilyKind::Disk, 9, 2, seed).unwrap();
        let disks = set_of(&canonical_hyperedges(&s, &FamilyKind::Disk).unwrap());
        let sampled = sampled_cuts(&s, 20_000, seed, true);
        assert!(sampled.is_subset(&disks), "seed {seed}");
        let halfplanes = set_of(&canonical_hyperedges(&s, &FamilyKind::Halfplane).unwrap());
        assert!(sampled_cuts(&s, 5_000, seed, false).is_subset(&halfplanes));
        // Halfplanes are limits of disks.
        assert!(halfplanes.is_subset(&disks));
    }
}

#[test]
fn every_canonical_region_cuts_its_hyperedge() {
    let mut families = vec![
        FamilyKind::Halfplane,
        FamilyKind::Disk,
        FamilyKind::AxisRect,
        FamilyKind::BottomlessRect,
        FamilyKind::BoxD,
    ];
    families.push(FamilyKind::HRegion(random_halfspaces(3, 2, 5).unwrap()));
    for family in &families {
        for seed in 0..6 {
            let s = random_points_for(family, 8, 2, seed).unwrap();
            let regions = canonical_regions(&s, family).unwrap();
            let h = canonical_hyperedges(&s, family).unwrap();
            assert_eq!(regions.len(), h.len());
            for (e, region) in &regions {
                assert_eq!(&region.cut(&s), e, "{family} seed {seed}");
            }
        }
    }
}

#[test]
fn delaunay_edges_are_the_two_point_hyperedges() {
    for family in [FamilyKind::Halfplane, FamilyKind::Disk, FamilyKind::AxisRect, FamilyKind::BottomlessRect] {
        for seed in 0..8 {
            let s = random_points_for(&family, 11, 2, seed).unwrap();
            let h = canonical_hyperedges(&s, &family).unwrap();
            assert_eq!(delaunay_edges(&s, &family).unwrap(), h.size_two_edges(), "{family} seed {seed}");
        }
    }
}

#[test]
fn halfplane_delaunay_edges_touch_the_hull() {
    for seed in 0..20 {
        let s = random_points_for(&FamilyKind::Halfplane, 15, 2, seed).unwrap();
        let hull: BTreeSet<usize> = geometry::convex_hull(&s).unwrap().into_iter().collect();
        for &(i, j) in delaunay_edges(&s, &FamilyKind::Halfplane).unwrap().edges() {
            assert!(hull.contains(&i) || hull.contains(&j));
        }
    }
}

#[test]
fn disk_hypergraphs_are_shrinkable() {
    for seed in 0..20 {
        let s = random_points_for(&FamilyKind::Disk, 12, 2, seed).unwrap();
        let h = canonical_hyperedges(&s, &FamilyKind::Disk).unwrap();
        assert_eq!(is_shrinkable(&h), (true, None), "seed {seed}");
    }
}
