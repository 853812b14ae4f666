use chroma::edges::*;
use chroma::generate::*;
use chroma::hypergraph::binomial;
use chroma::tuples::*;
use chroma::verify::*;
use chroma::*;
use itertools::Itertools;
use rand::RngExt;

#[test]
fn halfplane_coloring_passes_at_three_edges() {
    for seed in 0..40 {
        let n = 3 + seed as usize % 20;
        let s = random_points_for(&FamilyKind::Halfplane, n, 2, seed).unwrap();
        let c = color_halfplane_edges(&s).unwrap();
        let r = verify_edge_coloring(&s, &FamilyKind::Halfplane, &c, 3, ThresholdKind::Edges).unwrap();
        assert!(r.passed, "seed {seed}: {:?}", r.witness);
    }
}

#[test]
fn traversal_covers_the_delaunay_graph() {
    for seed in 0..20 {
        let s = random_points_for(&FamilyKind::Halfplane, 12, 2, seed).unwrap();
        let mut order = halfplane_traversal(&s).unwrap();
        order.sort_unstable();
        assert_eq!(order, delaunay_edges(&s, &FamilyKind::Halfplane).unwrap().edges());
    }
}

#[test]
fn bottomless_sweep_invariant_and_threshold() {
    for seed in 0..60 {
        let n = 1 + seed as usize % 25;
        let s = random_points(n, 2, seed).unwrap();
        let sweep = bottomless_sweep(&s).unwrap();
        assert_eq!(sweep.steps.len(), n);
        for (row, nb) in &sweep.steps {
            assert_eq!(nb.len() + 1, row.len());
            assert!(nb.windows(3).all(|w| !(w[0] == w[1] && w[1] == w[2])), "seed {seed}: {nb:?}");
        }
        let r = verify_edge_coloring(&s, &FamilyKind::BottomlessRect, &sweep.coloring, 4, ThresholdKind::Points).unwrap();
        assert!(r.passed, "seed {seed}: {:?}", r.witness);
    }
}

#[test]
fn hasse_coloring_separates_consecutive_arcs() {
    for seed in 0..50 {
        let n = 1 + seed as usize % 40;
        let p = random_poset(n, 0.3, seed).unwrap();
        let c = hasse_edge_coloring(&p);
        assert!(c.iter().all(|(_, col)| col <= ceil_log2(n)));
        let arcs = p.hasse();
        for &(x, y) in &arcs {
            for &(_, z) in arcs.iter().filter(|&&(a, _)| a == y) {
                assert_ne!(c.get(x, y), c.get(y, z), "seed {seed}: {x} < {y} < {z}");
            }
        }
        let order = p.linear_extension();
        for (i, &a) in order.iter().enumerate() {
            for &b in &order[..i] {
                assert!(!p.less(a, b));
            }
        }
    }
}

#[test]
fn rectangle_coloring_passes_at_three_points() {
    for seed in 0..30 {
        let n = 1 + seed as usize % 40;
        let s = random_points(n, 2, seed).unwrap();
        let c = color_rectangle_edges(&s).unwrap();
        assert!(c.colors_used() as u32 <= 2 * ceil_log2(n));
        let r = verify_edge_coloring(&s, &FamilyKind::AxisRect, &c, 3, ThresholdKind::Points).unwrap();
        assert!(r.passed, "seed {seed}: {:?}", r.witness);
    }
}

#[test]
fn disk_coloring_uses_four_colors() {
    for seed in 0..25 {
        let n = 1 + seed as usize % 13;
        let s = random_points_for(&FamilyKind::Disk, n, 2, seed).unwrap();
        let j = build_conflict_graph_j(&s).unwrap();
        assert!(j.is_planar(), "seed {seed}");
        let c = color_disk_edges(&s).unwrap();
        assert!(c.colors_used() <= 4);
        let r = verify_edge_coloring(&s, &FamilyKind::Disk, &c, 3, ThresholdKind::Points).unwrap();
        assert!(r.passed, "seed {seed}: {:?}", r.witness);
    }
}

#[test]
fn box_pairs_have_the_prefix_property() {
    for (d, k) in [(1, 3), (2, 2), (2, 3), (3, 2)] {
        for seed in 0..6 {
            let s = random_points(14, d, seed).unwrap();
            let c = color_pairs_boxes(&s, k).unwrap();
            let h = canonical_hyperedges(&s, &FamilyKind::BoxD).unwrap();
            for e in h.edges() {
                let present: Vec<u32> =
                    e.to_vec().into_iter().tuple_combinations().map(|(a, b)| c.get(&[a, b])).sorted().dedup().collect();
                if let Some(&top) = present.last() {
                    assert_eq!(present, (1..=top).collect::<Vec<_>>(), "d={d} k={k} seed {seed}");
                }
            }
            let m = box_threshold(d, k, 2).unwrap() as usize;
            let r = verify_tuple_coloring_on(&h, &c, m, Mode::Polychromatic(k)).unwrap();
            assert!(r.passed, "d={d} k={k} seed {seed}: {:?}", r.witness);
        }
    }
}

#[test]
fn optimal_rectangle_pairs() {
    for seed in 0..30 {
        let s = random_points(1 + seed as usize % 20, 2, seed).unwrap();
        let c = color_pairs_rectangles_optimal(&s).unwrap();
        // In a rectangle holding exactly x, y, z (by x), {x,z} and {x,y}
        // differ when y lies in box(x, z); otherwise {x,y} and {y,z} do.
        let h = canonical_hyperedges(&s, &FamilyKind::AxisRect).unwrap();
        for e in h.edges().iter().filter(|e| e.len() == 3) {
            let mut t = e.to_vec();
            t.sort_by(|&a, &b| s.point(a).x().cmp(s.point(b).x()));
            let (x, y, z) = (t[0], t[1], t[2]);
            let pair = |a: usize, b: usize| c.get(&[a.min(b), a.max(b)]);
            let (ylo, yhi) = (s.point(x).y().min(s.point(z).y()), s.point(x).y().max(s.point(z).y()));
            if ylo <= s.point(y).y() && s.point(y).y() <= yhi {
                assert_ne!(pair(x, z), pair(x, y), "seed {seed}: {t:?}");
            } else {
                assert_ne!(pair(x, y), pair(y, z), "seed {seed}: {t:?}");
            }
        }
        let r = verify_tuple_coloring(&s, &FamilyKind::AxisRect, &c, 3, Mode::Proper).unwrap();
        assert!(r.passed);
    }
}

#[test]
fn lift_completion_property() {
    // Base: box pairs in d = 2, lifted along x to triples and quadruples.
    for seed in 0..8 {
        let s = random_points(12, 2, seed).unwrap();
        let hs = families::axis_halfspaces(2);
        let family = FamilyKind::HRegion(hs.clone());
        let base = color_pairs_boxes(&s, 2).unwrap();
        let m = box_threshold(2, 2, 2).unwrap() as usize;
        for t_prime in [3, 4] {
            let lifted = lift_tuples(&base, &s, &hs[0], t_prime).unwrap();
            let h = canonical_hyperedges(&s, &family).unwrap();
            for e in h.edges().iter().filter(|e| e.len() >= m + t_prime - 2) {
                let mut members = e.to_vec();
                members.sort_by(|&a, &b| s.point(a).x().cmp(s.point(b).x()));
                let truncated = &members[..members.len() - (t_prime - 2)];
                let base_colors: Vec<u32> = truncated
                    .iter()
                    .copied()
                    .tuple_combinations()
                    .map(|(a, b)| base.get(&[a.min(b), a.max(b)]))
                    .sorted()
                    .dedup()
                    .collect();
                let lifted_colors: Vec<u32> =
                    e.to_vec().into_iter().combinations(t_prime).map(|t| lifted.get(&t)).sorted().dedup().collect();
                assert!(base_colors.iter().all(|c| lifted_colors.contains(c)));
            }
            let r = verify_tuple_coloring(&s, &family, &lifted, m + t_prime - 2, Mode::Polychromatic(2)).unwrap();
            assert!(r.passed, "seed {seed} t'={t_prime}: {:?}", r.witness);
        }
    }
}

#[test]
fn h_region_tuples() {
    for seed in 0..10 {
        let h = 1 + seed as usize % 3;
        let hs = random_halfspaces(h, 2, seed).unwrap();
        let family = FamilyKind::HRegion(hs.clone());
        let s = random_points_for(&family, 14, 2, seed).unwrap();
        for (t, k) in [(2, 2), (3, 2), (2, 3)] {
            let c = color_tuples_h_regions(&s, &hs, t, k).unwrap();
            let m = box_threshold(h, k, t).unwrap() as usize;
            let r = verify_tuple_coloring(&s, &family, &c, m, Mode::Polychromatic(k)).unwrap();
            assert!(r.passed, "seed {seed} t={t} k={k}: {:?}", r.witness);
        }
    }
}

/// Least threshold at which every hyperedge has all `k` vertex colors.
fn vertex_threshold(h: &Hypergraph, colors: &[u32], k: u32) -> usize {
    h.edges()
        .iter()
        .filter(|e| (1..=k).any(|c| !e.iter().any(|v| colors[v] == c)))
        .map(|e| e.len() + 1)
        .max()
        .unwrap_or(1)
}

#[test]
fn vertex_coloring_lift_hits_every_color() {
    for seed in 0..40 {
        let k = 1 + seed as u32 % 3;
        let h = random_hypergraph(10, 30, seed).unwrap();
        let mut r = rng(seed);
        let colors: Vec<u32> = (0..10).map(|_| r.random_range(1..=k)).collect();
        let m = vertex_threshold(&h, &colors, k);
        for t_prime in [2, 3] {
            let c = polychromatic_tuples_from_vertex_coloring(&colors, k, t_prime).unwrap();
            assert_eq!(c.k() as u64, palette_size(k, t_prime));
            let mp = m_prime(m, k, t_prime);
            let rep = verify_tuple_coloring_on(&h, &c, mp, Mode::Polychromatic(c.k())).unwrap();
            assert!(rep.passed, "seed {seed} k={k} t'={t_prime}: {:?}", rep.witness);
        }
    }
}

#[test]
fn red_blue_lift_is_proper_beyond_the_ramsey_number() {
    for (t, t_prime, ramsey) in [(1, 2, 3), (2, 3, 6)] {
        for seed in 0..20 {
            let h = random_hypergraph(9, 25, seed).unwrap();
            let mut r = rng(seed);
            let base = TupleColoring::from_fn(9, t, 2, |_| r.random_range(1..=2)).unwrap();
            // Least m at which the base coloring is proper.
            let m = h
                .edges()
                .iter()
                .filter(|e| e.to_vec().into_iter().combinations(t).map(|x| base.get(&x)).all_equal())
                .map(|e| e.len() + 1)
                .max()
                .unwrap_or(1);
            let lifted = lift_proper_two_coloring(&base, t_prime).unwrap();
            let rep = verify_tuple_coloring_on(&h, &lifted, m.max(ramsey), Mode::Proper).unwrap();
            assert!(rep.passed, "t={t} seed {seed}: {:?}", rep.witness);
        }
    }
}

#[test]
fn tuple_counts() {
    let s = random_points(10, 2, 0).unwrap();
    let c = color_tuples_h_regions(&s, &families::axis_halfspaces(2), 3, 2).unwrap();
    assert_eq!(c.iter().count() as u64, binomial(10, 3));
}
