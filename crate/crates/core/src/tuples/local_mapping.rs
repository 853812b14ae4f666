use itertools::Itertools;
use rayon::prelude::*;

/// The ten 3-element multisets over `{1, 2, 3}`, each sorted.
pub const MULTISETS: [[u8; 3]; 10] = [
    [1, 1, 1],
    [1, 1, 2],
    [1, 1, 3],
    [1, 2, 2],
    [2, 2, 2],
    [2, 2, 3],
    [1, 3, 3],
    [2, 3, 3],
    [3, 3, 3],
    [1, 2, 3],
];

/// Threshold of the pair colorings in the gadgets.
const BASE_M: usize = 4;

fn multiset_index(mut colors: [u8; 3]) -> usize {
    colors.sort_unstable();
    MULTISETS.iter().position(|&m| m == colors).expect("colors lie in 1..=3")
}

/// A triple color for each multiset of pair colors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MultisetColorRule {
    colors: [u8; 10],
}

impl MultisetColorRule {
    pub const CANDIDATES: u32 = 59049;

    pub fn new(colors: [u8; 10]) -> Option<Self> {
        colors.iter().all(|c| (1..=3).contains(c)).then_some(MultisetColorRule { colors })
    }

    /// The candidate whose base-3 digits, least significant first, are the
    /// colors of [`MULTISETS`] minus one.
    pub fn from_index(mut index: u32) -> Self {
        let mut colors = [0u8; 10];
        for c in &mut colors {
            *c = (index % 3) as u8 + 1;
            index /= 3;
        }
        MultisetColorRule { colors }
    }

    pub fn color(&self, pair_colors: [u8; 3]) -> u8 {
        self.colors[multiset_index(pair_colors)]
    }

    /// Triple colors reached from a set of multisets, as a bit mask.
    fn image(&self, multisets: u16) -> u8 {
        (0..10).filter(|&i| multisets >> i & 1 == 1).fold(0, |acc, i| acc | 1 << (self.colors[i] - 1))
    }
}

/// A hypergraph with a 3-coloring of its vertex pairs, reduced to what a rule
/// can see: each hyperedge's size and the multisets of its triples.
struct Gadget {
    hyperedges: Vec<(usize, u16)>,
}

impl Gadget {
    fn new(n: usize, pair_color: impl Fn(usize, usize) -> u8, hyperedges: Vec<Vec<usize>>) -> Self {
        let summaries = hyperedges
            .into_iter()
            .map(|e| {
                let mut pairs = 0u8;
                for (&x, &y) in e.iter().tuple_combinations() {
                    pairs |= 1 << (pair_color(x, y) - 1);
                }
                debug_assert!(e.len() < BASE_M || pairs == 0b111, "gadget pair coloring is polychromatic");
                let mut seen = 0u16;
                for (&x, &y, &z) in e.iter().tuple_combinations() {
                    seen |= 1 << multiset_index([pair_color(x, y), pair_color(x, z), pair_color(y, z)]);
                }
                (e.len(), seen)
            })
            .collect();
        debug_assert!(n >= BASE_M);
        Gadget { hyperedges: summaries }
    }

    fn passes(&self, rule: &MultisetColorRule, m_prime: usize) -> bool {
        self.hyperedges.iter().all(|&(size, seen)| size < m_prime || rule.image(seen) == 0b111)
    }
}

/// `|V_1| = max(m, m')` with one pair in each of `P_1 = {01}`, `P_2 = {23}`;
/// hyperedges `V_1` and every `max(m, 4)`-subset holding both pairs.
fn gadget_one(m_prime: usize) -> Gadget {
    let n = BASE_M.max(m_prime);
    let color = |x: usize, y: usize| match (x.min(y), x.max(y)) {
        (0, 1) => 1,
        (2, 3) => 2,
        _ => 3,
    };
    let size = BASE_M.max(4);
    let mut hyperedges = vec![(0..n).collect::<Vec<_>>()];
    hyperedges.extend(
        (4..n)
            .combinations(size - 4)
            .map(|rest| [0, 1, 2, 3].into_iter().chain(rest).collect()),
    );
    Gadget::new(n, color, hyperedges)
}

/// `A = {a_i}` as `0..h`, `B = {b_i}` as `h..2h` with `h = max(m, m')`;
/// hyperedges `A ∪ B`, `A ∪ {b_i}`, `B ∪ {a_i}`. Pairs inside `A` or `B`,
/// pairs `a_i b_i` and pairs `a_i b_j` get the colors `classes`.
fn gadget_two(m_prime: usize, classes: [u8; 3]) -> Gadget {
    let h = BASE_M.max(m_prime);
    let color = move |x: usize, y: usize| {
        if (x < h) == (y < h) {
            classes[0]
        } else if x % h == y % h {
            classes[1]
        } else {
            classes[2]
        }
    };
    let mut hyperedges = vec![(0..2 * h).collect::<Vec<_>>()];
    for i in 0..h {
        hyperedges.push((0..h).chain([h + i]).collect());
        hyperedges.push((h..2 * h).chain([i]).collect());
    }
    Gadget::new(2 * h, color, hyperedges)
}

const ROTATIONS: [[u8; 3]; 3] = [[1, 2, 3], [2, 1, 3], [3, 2, 1]];

/// Survivor counts over all candidate rules.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LocalMappingCounts {
    pub candidates: u32,
    /// Rules for which some `m' <= m_max` satisfies the first gadget.
    pub first_gadget: u32,
    /// Likewise for the second gadget in all three rotations.
    pub second_gadget: u32,
    /// Rules for which some `m' <= m_max` satisfies every gadget.
    pub all_gadgets: u32,
}

/// Tests every rule against both gadgets for each `m'` in `4..=m_max`, with
/// the pair colorings polychromatic at `m = 4`.
pub fn local_mapping_survivors(m_max: usize) -> LocalMappingCounts {
    let levels: Vec<(usize, Gadget, Vec<Gadget>)> = (BASE_M..=m_max)
        .map(|mp| (mp, gadget_one(mp), ROTATIONS.iter().map(|&r| gadget_two(mp, r)).collect()))
        .collect();
    let (first_gadget, second_gadget, all_gadgets) = (0..MultisetColorRule::CANDIDATES)
        .into_par_iter()
        .map(|i| {
            let rule = MultisetColorRule::from_index(i);
            let one = |mp: usize, g: &Gadget| g.passes(&rule, mp);
            let two = |mp: usize, gs: &[Gadget]| gs.iter().all(|g| g.passes(&rule, mp));
            let a = levels.iter().any(|(mp, g1, _)| one(*mp, g1));
            let b = levels.iter().any(|(mp, _, g2)| two(*mp, g2));
            let c = levels.iter().any(|(mp, g1, g2)| one(*mp, g1) && two(*mp, g2));
            (a as u32, b as u32, c as u32)
        })
        .reduce(|| (0, 0, 0), |x, y| (x.0 + y.0, x.1 + y.1, x.2 + y.2));
    LocalMappingCounts { candidates: MultisetColorRule::CANDIDATES, first_gadget, second_gadget, all_gadgets }
}

/// The number of rules mapping pair-color multisets to triple colors that
/// survive every gadget for some `m' <= m_max`.
pub fn verify_no_local_mapping(m_max: usize) -> u32 {
    local_mapping_survivors(m_max).all_gadgets
}
