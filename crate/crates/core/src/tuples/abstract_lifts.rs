use itertools::Itertools;

use super::TupleColoring;
use crate::error::{Error, Result};
use crate::hypergraph::{binomial, colex_rank};

/// Red (1) when all `t`-subsets of the `t'`-tuple share one base color, blue
/// (2) otherwise.
pub fn lift_proper_two_coloring(base: &TupleColoring, t_prime: usize) -> Result<TupleColoring> {
    let t = base.t();
    if t_prime <= t {
        return Err(Error::param(format!("lifted tuple size {t_prime} must exceed {t}")));
    }
    TupleColoring::from_fn(base.n(), t_prime, 2, |tuple| {
        let mut colors = tuple.iter().copied().combinations(t).map(|sub| base.get(&sub));
        let first = colors.next().expect("t' > t");
        if colors.all(|c| c == first) {
            1
        } else {
            2
        }
    })
}

/// Outcome of a Ramsey number search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Ramsey {
    Exact(usize),
    /// The search budget ran out; the number is at least this.
    Unknown { at_least: usize },
}

/// The least `R` such that every `k`-coloring of the `t`-subsets of an
/// `R`-set has a monochromatic `t'`-subset, by exhaustive search. `budget`
/// caps the number of partial colorings visited.
pub fn ramsey_number(t: usize, k: u32, t_prime: usize, budget: u64) -> Result<Ramsey> {
    if t == 0 || t_prime <= t || k == 0 {
        return Err(Error::param(format!("need 1 <= t < t' and k >= 1, got t={t}, t'={t_prime}, k={k}")));
    }
    let mut spent = 0u64;
    for n in t_prime.. {
        match avoiding_coloring_exists(n, t, k, t_prime, budget, &mut spent) {
            Some(false) => return Ok(Ramsey::Exact(n)),
            Some(true) => {}
            None => return Ok(Ramsey::Unknown { at_least: n }),
        }
    }
    unreachable!()
}

/// Whether some coloring of the `t`-subsets of `0..n` has no monochromatic
/// `t'`-subset; `None` once `spent` passes `budget`.
fn avoiding_coloring_exists(n: usize, t: usize, k: u32, t_prime: usize, budget: u64, spent: &mut u64) -> Option<bool> {
    let count = binomial(n, t);
    if count > 64 * 1024 {
        return None;
    }
    // checks[r]: the t'-subsets whose last t-subset in colex order has rank r,
    // each as the ranks of its t-subsets.
    let mut checks: Vec<Vec<Vec<usize>>> = vec![Vec::new(); count as usize];
    for big in (0..n).combinations(t_prime) {
        let ranks: Vec<usize> = big.into_iter().combinations(t).map(|sub| colex_rank(&sub)).collect();
        let last = *ranks.iter().max().unwrap();
        checks[last].push(ranks);
    }
    let mut colors = vec![0u32; count as usize];
    search(0, k, &checks, &mut colors, budget, spent)
}

fn search(r: usize, k: u32, checks: &[Vec<Vec<usize>>], colors: &mut [u32], budget: u64, spent: &mut u64) -> Option<bool> {
    if r == colors.len() {
        return Some(true);
    }
    // Colors are interchangeable, so the first subset gets color 1.
    let palette = if r == 0 { 1 } else { k };
    for c in 1..=palette {
        *spent += 1;
        if *spent > budget {
            return None;
        }
        colors[r] = c;
        let mono = checks[r].iter().any(|ranks| ranks.iter().all(|&x| colors[x] == c));
        if !mono && search(r + 1, k, checks, colors, budget, spent)? {
            return Some(true);
        }
    }
    colors[r] = 0;
    Some(false)
}

/// `C(k, t') + sum_{i=0}^{t'-2} C(k-1, i)`.
pub fn palette_size(k: u32, t_prime: usize) -> u64 {
    let k = k as usize;
    binomial(k, t_prime) + (0..t_prime.saturating_sub(1)).map(|i| binomial(k.saturating_sub(1), i)).sum::<u64>()
}

/// Threshold `max(m, k(t'-1) + 1)` of the tuple coloring built from a vertex
/// coloring that is polychromatic at `m`.
pub fn m_prime(m: usize, k: u32, t_prime: usize) -> usize {
    m.max(k as usize * (t_prime - 1) + 1)
}

/// Colors the `t'`-tuples from a vertex coloring in `1..=k`, using
/// [`palette_size`] colors: first the `t'`-subsets of `1..=k` in
/// lexicographic order, then for `i = 0..=t'-2` the `i`-subsets of
/// `1..=k-1`.
///
/// A tuple whose vertex colors are all distinct gets its color set. A tuple
/// in which exactly one color `r` repeats, the others appearing once, gets
/// the image of those others under `j -> j - r (mod k)`. Any other tuple gets
/// color 1.
pub fn polychromatic_tuples_from_vertex_coloring(colors: &[u32], k: u32, t_prime: usize) -> Result<TupleColoring> {
    if t_prime < 2 {
        return Err(Error::param("lifted tuple size must be at least 2"));
    }
    if k == 0 {
        return Err(Error::param("palette size must be at least 1"));
    }
    if let Some(c) = colors.iter().find(|&&c| c == 0 || c > k) {
        return Err(Error::param(format!("vertex color {c} is outside 1..={k}")));
    }
    let kp = palette_size(k, t_prime);
    if kp > u32::MAX as u64 {
        return Err(Error::LimitExceeded(format!("palette of {kp} colors")));
    }
    let mut palette = std::collections::HashMap::new();
    for sub in (1..=k).combinations(t_prime) {
        let next = palette.len() as u32 + 1;
        palette.insert((false, sub), next);
    }
    for i in 0..=t_prime - 2 {
        for sub in (1..k).combinations(i) {
            let next = palette.len() as u32 + 1;
            palette.insert((true, sub), next);
        }
    }
    TupleColoring::from_fn(colors.len(), t_prime, kp as u32, |tuple| {
        let mut counts = vec![0usize; k as usize + 1];
        for &v in tuple {
            counts[colors[v] as usize] += 1;
        }
        let repeated: Vec<u32> = (1..=k).filter(|&c| counts[c as usize] >= 2).collect();
        match repeated.as_slice() {
            [] => palette[&(false, (1..=k).filter(|&c| counts[c as usize] == 1).collect())],
            &[r] => {
                let others = (1..=k)
                    .filter(|&j| counts[j as usize] == 1)
                    .map(|j| if j > r { j - r } else { j + k - r })
                    .sorted()
                    .collect();
                palette[&(true, others)]
            }
            _ => 1,
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_ramsey_numbers() {
        assert_eq!(ramsey_number(1, 2, 2, 1_000_000).unwrap(), Ramsey::Exact(3));
        assert_eq!(ramsey_number(2, 2, 3, 1_000_000).unwrap(), Ramsey::Exact(6));
        assert_eq!(ramsey_number(1, 3, 2, 1_000_000).unwrap(), Ramsey::Exact(4));
        assert_eq!(ramsey_number(1, 1, 3, 10).unwrap(), Ramsey::Exact(3));
        assert_eq!(ramsey_number(2, 2, 3, 5).unwrap(), Ramsey::Unknown { at_least: 4 });
        assert!(ramsey_number(2, 2, 2, 10).is_err());
    }

    #[test]
    fn palette_sizes() {
        assert_eq!(palette_size(2, 2), 2);
        assert_eq!(palette_size(3, 2), 4);
        assert_eq!(palette_size(2, 3), 2);
        assert_eq!(palette_size(4, 3), 4 + 1 + 3);
        assert_eq!(m_prime(2, 3, 2), 4);
        assert_eq!(m_prime(7, 2, 2), 7);
    }

    #[test]
    fn red_blue_lift() {
        let base = TupleColoring::from_fn(4, 1, 2, |v| if v[0] < 2 { 1 } else { 2 }).unwrap();
        let lifted = lift_proper_two_coloring(&base, 2).unwrap();
        assert_eq!(lifted.get(&[0, 1]), 1);
        assert_eq!(lifted.get(&[1, 2]), 2);
        assert!(lift_proper_two_coloring(&base, 1).is_err());
    }

    #[test]
    fn vertex_coloring_cases() {
        // k = 3, t' = 2: palette {1,2} {1,3} {2,3} then the empty subset.
        let c = polychromatic_tuples_from_vertex_coloring(&[1, 2, 3, 1], 3, 2).unwrap();
        assert_eq!(c.k(), 4);
        assert_eq!(c.get(&[0, 1]), 1);
        assert_eq!(c.get(&[1, 2]), 3);
        assert_eq!(c.get(&[0, 3]), 4);
        // k = 3, t' = 3: {1,2,3}, then {}, {1}, {2}.
        let c = polychromatic_tuples_from_vertex_coloring(&[1, 1, 2, 3, 3, 1], 3, 3).unwrap();
        assert_eq!(c.k(), 4);
        assert_eq!(c.get(&[0, 2, 3]), 1);
        assert_eq!(c.get(&[0, 1, 5]), 2);
        // r = 1, other color 2 -> 2 - 1 = 1.
        assert_eq!(c.get(&[0, 1, 2]), 3);
        // r = 3, other color 1 -> 1 - 3 + 3 = 1.
        assert_eq!(c.get(&[0, 3, 4]), 3);
        // r = 3, other color 2 -> 2.
        assert_eq!(c.get(&[2, 3, 4]), 4);
    }
}
