use std::fmt;


use super::{in_circle_sign, orient2d_sign, PointSet, Q};
use crate::error::{Error, Result};
use crate::families::FamilyKind;

/// A single failed general-position predicate.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Violation {
    WrongDimension { expected: usize, found: usize },
    SharedCoordinate { axis: usize, i: usize, j: usize },
    CollinearTriple(usize, usize, usize),
    CocircularQuadruple(usize, usize, usize, usize),
    /// `A·p = A·q` for the halfspace normal at index `halfspace`.
    SharedProjection { halfspace: usize, i: usize, j: usize },
    ZeroDifference { axis: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Violation::WrongDimension { expected, found } => {
                write!(f, "family needs dimension {expected}, points have dimension {found}")
            }
            Violation::SharedCoordinate { axis, i, j } => {
                let name = match axis {
                    0 => "x".to_string(),
                    1 => "y".to_string(),
                    a => format!("axis-{a}"),
                };
                write!(f, "shared {name}-coordinate between points {i} and {j}")
            }
            Violation::CollinearTriple(a, b, c) => write!(f, "collinear triple ({a}, {b}, {c})"),
            Violation::CocircularQuadruple(a, b, c, d) => {
                write!(f, "cocircular quadruple ({a}, {b}, {c}, {d})")
            }
            Violation::SharedProjection { halfspace, i, j } => write!(
                f,
                "points {i} and {j} lie on a common translate of the boundary of halfspace {halfspace}"
            ),
            Violation::ZeroDifference { axis } => write!(f, "zero coordinate difference on axis {axis}"),
        }
    }
}

/// Every violated general-position predicate of `s` for `family`.
pub fn check_general_position(s: &PointSet, family: &FamilyKind) -> Vec<Violation> {
    if let Some(d) = family.required_dim() {
        if s.dim() != d {
            return vec![Violation::WrongDimension { expected: d, found: s.dim() }];
        }
    }
    match family {
        FamilyKind::AxisRect | FamilyKind::BottomlessRect | FamilyKind::BoxD => shared_coordinates(s),
        FamilyKind::Halfplane => collinear_triples(s),
        FamilyKind::Disk => {
            let mut v = collinear_triples(s);
            v.extend(cocircular_quadruples(s));
            v
        }
        FamilyKind::HRegion(hs) => {
            if let Some(h) = hs.iter().find(|h| h.normal().dim() != s.dim()) {
                return vec![Violation::WrongDimension { expected: h.normal().dim(), found: s.dim() }];
            }
            let mut v = Vec::new();
            for (k, h) in hs.iter().enumerate() {
                let proj: Vec<Q> = s.points().iter().map(|p| h.normal().dot(p)).collect();
                v.extend(
                    equal_pairs(&proj).map(|(i, j)| Violation::SharedProjection { halfspace: k, i, j }),
                );
            }
            v
        }
    }
}

/// Fails with the first violation, if any.
pub(crate) fn require_general_position(s: &PointSet, family: &FamilyKind) -> Result<()> {
    match check_general_position(s, family).into_iter().next() {
        None => Ok(()),
        Some(violation) => Err(Error::GeneralPosition { family: family.name(), violation }),
    }
}

fn equal_pairs(values: &[Q]) -> impl Iterator<Item = (usize, usize)> + '_ {
    let n = values.len();
    (0..n).flat_map(move |i| ((i + 1)..n).filter(move |&j| values[i] == values[j]).map(move |j| (i, j)))
}

fn shared_coordinates(s: &PointSet) -> Vec<Violation> {
    let mut v = Vec::new();
    for axis in 0..s.dim() {
        let vals: Vec<Q> = s.points().iter().map(|p| p.coord(axis).clone()).collect();
        v.extend(equal_pairs(&vals).map(|(i, j)| Violation::SharedCoordinate { axis, i, j }));
    }
    v
}

fn collinear_triples(s: &PointSet) -> Vec<Violation> {
    let p = s.points();
    let n = p.len();
    let mut v = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if orient2d_sign(&p[i], &p[j], &p[k]).is_eq() {
                    v.push(Violation::CollinearTriple(i, j, k));
                }
            }
        }
    }
    v
}

fn cocircular_quadruples(s: &PointSet) -> Vec<Violation> {
    let p = s.points();
    let n = p.len();
    let mut v = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if orient2d_sign(&p[i], &p[j], &p[k]).is_eq() {
                    continue;
                }
                for l in k + 1..n {
                    if in_circle_sign(&p[i], &p[j], &p[k], &p[l]).is_eq() {
                        v.push(Violation::CocircularQuadruple(i, j, k, l));
                    }
                }
            }
        }
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::HalfspaceSpec;
    use crate::geometry::Point;

    #[test]
    fn examples() {
        let s = PointSet::from_ints(&[[0, 0], [0, 1]]).unwrap();
        let v = check_general_position(&s, &FamilyKind::AxisRect);
        assert_eq!(v, vec![Violation::SharedCoordinate { axis: 0, i: 0, j: 1 }]);
        assert_eq!(v[0].to_string(), "shared x-coordinate between points 0 and 1");

        let s = PointSet::from_ints(&[[0, 0], [1, 0], [2, 0]]).unwrap();
        let v = check_general_position(&s, &FamilyKind::Halfplane);
        assert_eq!(v, vec![Violation::CollinearTriple(0, 1, 2)]);

        let s = PointSet::from_ints(&[[5, 0], [0, 5], [-5, 0], [3, -4]]).unwrap();
        let v = check_general_position(&s, &FamilyKind::Disk);
        assert_eq!(v, vec![Violation::CocircularQuadruple(0, 1, 2, 3)]);
        assert!(check_general_position(&s, &FamilyKind::Halfplane).is_empty());
    }

    #[test]
    fn h_region_projection_ties() {
        let h = vec![HalfspaceSpec::new(Point::from_ints(&[1, 1])).unwrap()];
        let s = PointSet::from_ints(&[[0, 2], [1, 1], [5, 0]]).unwrap();
        let v = check_general_position(&s, &FamilyKind::HRegion(h));
        assert_eq!(v, vec![Violation::SharedProjection { halfspace: 0, i: 0, j: 1 }]);
    }

    #[test]
    fn dimension_reported() {
        let s = PointSet::from_ints(&[[0, 0, 0]]).unwrap();
        assert_eq!(
            check_general_position(&s, &FamilyKind::Disk),
            vec![Violation::WrongDimension { expected: 2, found: 3 }]
        );
    }
}
