//! The order-36 tournament whose Banks set and bipartisan set partition it.
//!
//! Alternatives are addressed as `v^block_{triangle,position}` with
//! `block ∈ {0,1,2,3}` and `triangle, position ∈ {1,2,3}`, encoded as the
//! integer `9·block + 3·(triangle−1) + (position−1)`. Block 0 (ids `0..9`)
//! is the inner block; blocks 1–3 are the outer ones. Index arithmetic on
//! `{1,2,3}` is cyclic (`3+1 = 1`, `1−1 = 3`).

use std::collections::BTreeMap;
use std::fmt;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::set::ChoiceSet;
use crate::tournament::{AlternativeId, Tournament};

pub const ORDER: usize = 36;

/// Cyclic successor on `{1,2,3}`.
#[inline]
pub fn succ(j: u8) -> u8 {
    j % 3 + 1
}

/// Cyclic predecessor on `{1,2,3}`.
#[inline]
pub fn pred(j: u8) -> u8 {
    (j + 1) % 3 + 1
}

/// Position of an alternative in the construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PaperCoordinates {
    pub block: u8,
    pub triangle: u8,
    pub position: u8,
}

impl PaperCoordinates {
    pub fn new(block: u8, triangle: u8, position: u8) -> Result<Self> {
        if block > 3 || !(1..=3).contains(&triangle) || !(1..=3).contains(&position) {
            return Err(Error::InvalidCoordinate(format!("({block},{triangle},{position})")));
        }
        Ok(Self { block, triangle, position })
    }

    pub fn id(self) -> AlternativeId {
        9 * self.block as usize + 3 * (self.triangle as usize - 1) + (self.position as usize - 1)
    }

    pub fn from_id(id: AlternativeId) -> Result<Self> {
        if id >= ORDER {
            return Err(Error::IndexOutOfRange { index: id, order: ORDER });
        }
        Ok(Self {
            block: (id / 9) as u8,
            triangle: (id % 9 / 3 + 1) as u8,
            position: (id % 3 + 1) as u8,
        })
    }

    fn all() -> impl Iterator<Item = Self> {
        (0..ORDER).map(|id| Self::from_id(id).expect("id in range"))
    }
}

impl fmt::Display for PaperCoordinates {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}_{}_{}", self.block, self.triangle, self.position)
    }
}

/// Integer id of `v^block_{triangle,position}`.
pub fn vertex_id(block: u8, triangle: u8, position: u8) -> Result<AlternativeId> {
    Ok(PaperCoordinates::new(block, triangle, position)?.id())
}

/// The label `v{block}_{triangle}_{position}` of an id.
pub fn label(id: AlternativeId) -> String {
    PaperCoordinates::from_id(id).map_or_else(|_| id.to_string(), |c| c.to_string())
}

/// `Δ^block`: the nine alternatives of a block.
pub fn block(b: u8) -> ChoiceSet {
    assert!(b <= 3);
    let lo = 9 * b as usize;
    ChoiceSet::range(ORDER, lo, lo + 9)
}

/// `Δ^block_triangle`: the three alternatives of a small triangle.
pub fn triangle(b: u8, t: u8) -> ChoiceSet {
    let lo = vertex_id(b, t, 1).expect("valid triangle");
    ChoiceSet::range(ORDER, lo, lo + 3)
}

/// Which of the six dominance rules decided a pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RuleKind {
    /// Cycle inside a small triangle.
    WithinTriangle,
    /// Triangle `j` beats triangle `j+1` inside a block.
    BetweenTriangles,
    /// Inner triangle `j` beats all of outer block `j`.
    InnerOverBlock,
    /// Inner `(j,k)` against outer block `j−1`, decided by the triangle index.
    InnerVsPreviousBlock,
    /// Inner `(j,k)` against outer block `j+1`, decided by the position.
    InnerVsNextBlock,
    /// Outer block `j` against outer block `j−1`.
    OuterVsPreviousBlock,
}

// Every rule instance with `a` in the left-hand role that speaks about the
// pair {a, b}, returned as (rule, a ≻ b). `within` overrides the triangle
// rule for the outer blocks.
fn verdicts_from(
    a: PaperCoordinates,
    b: PaperCoordinates,
    within: &impl Fn(PaperCoordinates, PaperCoordinates) -> Option<bool>,
) -> Vec<(RuleKind, bool)> {
    let mut out = Vec::new();
    if a.block == b.block && a.triangle == b.triangle {
        if let Some(v) = within(a, b) {
            out.push((RuleKind::WithinTriangle, v));
        }
    }
    if a.block == b.block && b.triangle == succ(a.triangle) {
        out.push((RuleKind::BetweenTriangles, true));
    }
    if a.block == 0 && b.block != 0 {
        let j = a.triangle;
        if b.block == j {
            out.push((RuleKind::InnerOverBlock, true));
        }
        if b.block == pred(j) {
            out.push((RuleKind::InnerVsPreviousBlock, a.position == b.triangle));
        }
        if b.block == succ(j) {
            out.push((RuleKind::InnerVsNextBlock, a.position == b.position));
        }
    }
    if a.block != 0 && b.block == pred(a.block) && b.block != 0 {
        out.push((RuleKind::OuterVsPreviousBlock, b.position == succ(a.triangle)));
    }
    out
}

fn cyclic_within(a: PaperCoordinates, b: PaperCoordinates) -> Option<bool> {
    (b.position == succ(a.position)).then_some(true)
}

fn build_with(
    within: impl Fn(PaperCoordinates, PaperCoordinates) -> Option<bool>,
) -> Result<(Tournament, BTreeMap<RuleKind, usize>)> {
    let mut beats = vec![[false; ORDER]; ORDER];
    let mut usage = BTreeMap::new();
    for a in PaperCoordinates::all() {
        for b in PaperCoordinates::all().filter(|b| b.id() > a.id()) {
            let mut decided = verdicts_from(a, b, &within);
            decided.extend(verdicts_from(b, a, &within).into_iter().map(|(r, v)| (r, !v)));
            match decided.as_slice() {
                [(rule, a_wins)] => {
                    *usage.entry(*rule).or_insert(0) += 1;
                    if *a_wins {
                        beats[a.id()][b.id()] = true;
                    } else {
                        beats[b.id()][a.id()] = true;
                    }
                }
                _ => {
                    panic!("pair {a}, {b} is decided by {} rule instances: {decided:?}", decided.len())
                }
            }
        }
    }
    Ok((Tournament::from_matrix(&beats)?, usage))
}

/// The order-36 tournament built from its six dominance rules. Every pair
/// is asserted to be decided by exactly one rule instance.
pub fn build_t36() -> Tournament {
    build_t36_with_rule_usage().0
}

/// [`build_t36`] plus the number of pairs each rule decided.
pub fn build_t36_with_rule_usage() -> (Tournament, BTreeMap<RuleKind, usize>) {
    build_with(cyclic_within).expect("rules produce a tournament")
}

/// One of the eight orientations of a small triangle's three edges.
///
/// Bit 0 means position 1 beats 2, bit 1 means 2 beats 3, bit 2 means 3
/// beats 1. Code 7 is the cycle used by [`build_t36`], code 0 the reverse
/// cycle; the other six are transitive.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TriangleOrientation(u8);

impl TriangleOrientation {
    pub const CYCLIC: Self = Self(7);
    pub const REVERSE_CYCLIC: Self = Self(0);

    pub fn from_code(code: u8) -> Result<Self> {
        if code < 8 {
            Ok(Self(code))
        } else {
            Err(Error::MalformedOrientation(format!("code {code}")))
        }
    }

    pub fn code(self) -> u8 {
        self.0
    }

    pub fn is_cyclic(self) -> bool {
        self.0 == 0 || self.0 == 7
    }

    /// Whether position `p` beats position `q` (both in `{1,2,3}`, distinct).
    pub fn beats(self, p: u8, q: u8) -> bool {
        let (bit, forward) = match (p, q) {
            (1, 2) => (0, true),
            (2, 1) => (0, false),
            (2, 3) => (1, true),
            (3, 2) => (1, false),
            (3, 1) => (2, true),
            (1, 3) => (2, false),
            _ => panic!("invalid position pair ({p}, {q})"),
        };
        (self.0 >> bit & 1 == 1) == forward
    }
}

/// Orientations for the nine outer small triangles, keyed by
/// `(block, triangle)` with `block ∈ {1,2,3}`.
pub type OuterOrientations = BTreeMap<(u8, u8), TriangleOrientation>;

/// All nine outer triangles set to the cycle of [`build_t36`].
pub fn cyclic_orientations() -> OuterOrientations {
    outer_triangles().map(|k| (k, TriangleOrientation::CYCLIC)).collect()
}

/// Uniform random orientations from ChaCha8 seeded with `seed`; each
/// triangle consumes one `next_u32`, low three bits, in `(block, triangle)`
/// order.
pub fn random_orientations(seed: u64) -> OuterOrientations {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    outer_triangles()
        .map(|k| (k, TriangleOrientation((rng.next_u32() & 7) as u8)))
        .collect()
}

fn outer_triangles() -> impl Iterator<Item = (u8, u8)> {
    (1..=3).flat_map(|b| (1..=3).map(move |t| (b, t)))
}

/// The construction with the edges inside each outer small triangle
/// reoriented as given. Inner triangles keep their cycles.
pub fn build_t36_variant(orientations: &OuterOrientations) -> Result<Tournament> {
    for key in orientations.keys() {
        if !(1..=3).contains(&key.0) || !(1..=3).contains(&key.1) {
            return Err(Error::MalformedOrientation(format!("unknown triangle {key:?}")));
        }
    }
    for key in outer_triangles() {
        if !orientations.contains_key(&key) {
            return Err(Error::MalformedOrientation(format!("missing triangle {key:?}")));
        }
    }
    let within = |a: PaperCoordinates, b: PaperCoordinates| {
        if a.block == 0 {
            cyclic_within(a, b)
        } else {
            // Each unordered pair is reported once, from its smaller position.
            (a.position < b.position)
                .then(|| orientations[&(a.block, a.triangle)].beats(a.position, b.position))
        }
    };
    Ok(build_with(within)?.0)
}

/// Whether `t` agrees with the construction everywhere outside the nine
/// outer small triangles, i.e. is [`build_t36`] or one of its variants.
pub fn is_paper_layout(t: &Tournament) -> bool {
    if t.order() != ORDER {
        return false;
    }
    let reference = build_t36();
    PaperCoordinates::all().all(|a| {
        PaperCoordinates::all().all(|b| {
            let same_outer_triangle = a.block != 0 && a.block == b.block && a.triangle == b.triangle;
            same_outer_triangle || t.dominates(a.id(), b.id()) == reference.dominates(a.id(), b.id())
        })
    })
}

fn permutation_from(map: impl Fn(PaperCoordinates) -> PaperCoordinates) -> Permutation {
    let image = PaperCoordinates::all().map(|c| map(c).id()).collect();
    Permutation::new(image).expect("coordinate map is a bijection")
}

/// Rotation of the whole construction by one block: inner triangle `j` goes
/// to `j+1`, outer block `b` goes to `b+1`.
pub fn phi() -> Permutation {
    permutation_from(|c| {
        if c.block == 0 {
            PaperCoordinates { triangle: succ(c.triangle), ..c }
        } else {
            PaperCoordinates { block: succ(c.block), ..c }
        }
    })
}

/// The automorphism attached to `ell ∈ {1,2,3}`: rotates positions inside
/// inner triangle `ell` and inside block `ell+1`, rotates whole triangles
/// of block `ell−1`, and fixes block `ell`.
pub fn psi(ell: u8) -> Result<Permutation> {
    if !(1..=3).contains(&ell) {
        return Err(Error::InvalidCoordinate(format!("psi index {ell}")));
    }
    Ok(permutation_from(|c| match c.block {
        0 if c.triangle == ell => PaperCoordinates { position: succ(c.position), ..c },
        0 => c,
        b if b == ell => c,
        b if b == pred(ell) => PaperCoordinates { triangle: succ(c.triangle), ..c },
        _ => PaperCoordinates { position: succ(c.position), ..c },
    }))
}

/// `[φ, ψ₁, ψ₂, ψ₃]`.
pub fn generators() -> Vec<Permutation> {
    let mut g = vec![phi()];
    g.extend((1..=3).map(|l| psi(l).expect("valid index")));
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn encoding() {
        assert_eq!(vertex_id(0, 1, 1).unwrap(), 0);
        assert_eq!(vertex_id(0, 3, 3).unwrap(), 8);
        assert_eq!(vertex_id(2, 2, 1).unwrap(), 21);
        assert!(vertex_id(4, 1, 1).is_err());
        assert!(vertex_id(0, 0, 1).is_err());
        for id in 0..ORDER {
            assert_eq!(PaperCoordinates::from_id(id).unwrap().id(), id);
        }
        assert_eq!(label(8), "v0_3_3");
    }

    #[test]
    fn cyclic_arithmetic() {
        assert_eq!([succ(1), succ(2), succ(3)], [2, 3, 1]);
        assert_eq!([pred(1), pred(2), pred(3)], [3, 1, 2]);
    }

    #[test]
    fn rule_usage_covers_all_pairs() {
        let (t, usage) = build_t36_with_rule_usage();
        assert_eq!(usage.values().sum::<usize>(), 630);
        // 12 triangles × 3 edges; 4 blocks × 27 triangle pairs; 3 × 27; 3 × 81 twice; 3 × 81.
        assert_eq!(usage[&RuleKind::WithinTriangle], 36);
        assert_eq!(usage[&RuleKind::BetweenTriangles], 108);
        assert_eq!(usage[&RuleKind::InnerOverBlock], 81);
        assert_eq!(usage[&RuleKind::InnerVsPreviousBlock], 81);
        assert_eq!(usage[&RuleKind::InnerVsNextBlock], 81);
        assert_eq!(usage[&RuleKind::OuterVsPreviousBlock], 243);
        assert!(t.dominates(8, 6));
    }

    #[test]
    fn dominion_of_v0_3_3() {
        let t = build_t36();
        let mut expected = vec![0, 1, 2, 6, 11, 14, 17, 24, 25, 26];
        expected.extend(27..36);
        assert_eq!(t.dominion(8).unwrap().to_vec(), expected);
    }

    #[test]
    fn spoiler_triangle_dominance() {
        let t = build_t36();
        let target = ChoiceSet::from_indices(ORDER, [24, 25, 26, 6, 8, 11, 14, 17]).unwrap();
        for s in 21..24 {
            assert!(target.is_subset(t.dominion(s).unwrap()), "{}", label(s));
        }
    }

    #[test]
    fn generator_images() {
        assert_eq!(phi().apply(0), 3);
        assert_eq!(phi().apply(27), 9);
        let psi1 = psi(1).unwrap();
        assert_eq!(psi1.apply(0), 1);
        assert_eq!(psi1.apply(27), 30);
        assert_eq!(psi1.apply(18), 19);
        assert_eq!(psi1.apply(9), 9);
        assert!(psi(0).is_err() && psi(4).is_err());
    }

    #[test]
    fn generators_are_automorphisms_fixing_inner_block() {
        let t = build_t36();
        for g in generators() {
            assert!(t.is_automorphism(&g).unwrap());
            assert_eq!(g.apply_set(&block(0)), block(0));
        }
    }

    #[test]
    fn orientation_codes() {
        let c = TriangleOrientation::CYCLIC;
        assert!(c.beats(1, 2) && c.beats(2, 3) && c.beats(3, 1));
        let r = TriangleOrientation::REVERSE_CYCLIC;
        assert!(r.beats(2, 1) && r.beats(3, 2) && r.beats(1, 3));
        let cyclic = (0..8).filter(|&c| TriangleOrientation::from_code(c).unwrap().is_cyclic()).count();
        assert_eq!(cyclic, 2);
        assert!(TriangleOrientation::from_code(8).is_err());
    }

    #[test]
    fn variant_builder() {
        assert_eq!(build_t36_variant(&cyclic_orientations()).unwrap(), build_t36());
        let transitive: OuterOrientations = outer_triangles()
            .map(|k| (k, TriangleOrientation::from_code(3).unwrap()))
            .collect();
        let t = build_t36_variant(&transitive).unwrap();
        assert_eq!(t.order(), ORDER);
        assert!(is_paper_layout(&t));
        for b in 1..=3 {
            for tri in 1..=3 {
                assert!(t.is_transitive_subset(&triangle(b, tri)));
            }
        }
        let mut missing = cyclic_orientations();
        missing.remove(&(2, 2));
        assert!(matches!(build_t36_variant(&missing), Err(Error::MalformedOrientation(_))));
        let mut extra = cyclic_orientations();
        extra.insert((0, 1), TriangleOrientation::CYCLIC);
        assert!(build_t36_variant(&extra).is_err());
        assert_eq!(random_orientations(5), random_orientations(5));
        assert!(!is_paper_layout(&Tournament::transitive(36).unwrap()));
    }
}
