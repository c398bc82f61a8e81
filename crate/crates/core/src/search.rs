//! Tournament generation, isomorphism reduction and separation scans.
//!
//! Random tournaments come from ChaCha8 (`rand_chacha`), seeded with
//! `seed_from_u64(seed)` and switched to stream `index` via `set_stream`.
//! Each unordered pair `x < y`, in lexicographic order, consumes one
//! `next_u32`; its top bit set means `x ≻ y`. The ChaCha8 keystream is
//! fixed by its specification, so a given `(n, seed, index)` yields the same
//! tournament on every platform. Sampling is uniform over labeled
//! tournaments, not over isomorphism classes.

use std::collections::BTreeMap;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::set::ChoiceSet;
use crate::solutions::Rule;
use crate::tournament::Tournament;

/// Largest order accepted by [`enumerate_labeled`].
pub const LABELED_CAP: usize = 6;
/// Largest order accepted by [`canonical_form`].
pub const CANONICAL_CAP: usize = 9;
/// Largest order of an exhaustive scan.
pub const EXHAUSTIVE_CAP: usize = 8;

/// The tournament on stream 0 of `seed`.
pub fn random_tournament(n: usize, seed: u64) -> Result<Tournament> {
    random_tournament_indexed(n, seed, 0)
}

/// The tournament on stream `index` of `seed`; see the module docs.
pub fn random_tournament_indexed(n: usize, seed: u64, index: u64) -> Result<Tournament> {
    if n == 0 {
        return Err(Error::EmptyTournament);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    let mut upper = vec![vec![false; n]; n];
    for (x, row) in upper.iter_mut().enumerate() {
        for cell in row.iter_mut().skip(x + 1) {
            *cell = rng.next_u32() >> 31 == 1;
        }
    }
    Tournament::from_upper(n, |x, y| upper[x][y])
}

fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Number of labeled tournaments on `n` alternatives.
pub fn labeled_count(n: usize) -> u128 {
    1u128 << pair_count(n)
}

/// All labeled tournaments of order `n`. Tournament number `c` orients the
/// `e`-th pair in lexicographic order as `x ≻ y` iff bit `e` of `c` is set.
pub fn enumerate_labeled(n: usize) -> Result<impl Iterator<Item = Tournament>> {
    if n == 0 {
        return Err(Error::EmptyTournament);
    }
    if n > LABELED_CAP {
        return Err(Error::CapExceeded { size: n, cap: LABELED_CAP });
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|x| ((x + 1)..n).map(move |y| (x, y))).collect();
    let index: BTreeMap<(usize, usize), usize> = pairs.iter().enumerate().map(|(e, &p)| (p, e)).collect();
    Ok((0..labeled_count(n) as u64).map(move |code| {
        Tournament::from_upper(n, |x, y| code >> index[&(x, y)] & 1 == 1).expect("n ≥ 1")
    }))
}

/// A canonical encoding: `n` followed by the row-major 0/1 matrix of the
/// canonically relabeled tournament. Equal iff the tournaments are
/// isomorphic.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(pub Vec<u8>);

pub fn canonical_form(t: &Tournament) -> Result<CanonicalForm> {
    Ok(canonical_labeling(t)?.0)
}

/// Canonical form together with a permutation mapping `t` onto it.
///
/// The form minimizes the upper-triangle bits taken column by column over
/// all orderings that list alternatives by ascending score. Both the score
/// ordering and the minimum are isomorphism invariant; the column order
/// makes every prefix final once its last alternative is placed, which
/// drives the branch-and-bound.
pub fn canonical_labeling(t: &Tournament) -> Result<(CanonicalForm, Permutation)> {
    let n = t.order();
    if n > CANONICAL_CAP {
        return Err(Error::CapExceeded { size: n, cap: CANONICAL_CAP });
    }
    let scores = t.scores();
    let mut slot_scores = scores.clone();
    slot_scores.sort_unstable();
    let mut search = CanonSearch {
        t,
        scores: &scores,
        slot_scores: &slot_scores,
        order: Vec::with_capacity(n),
        used: vec![false; n],
        bits: Vec::with_capacity(pair_count(n)),
        best: None,
    };
    search.descend();
    let (_, order) = search.best.expect("at least one ordering");
    // order[p] is the vertex placed at position p; the relabeling sends it to p.
    let mut image = vec![0; n];
    for (p, &v) in order.iter().enumerate() {
        image[v] = p;
    }
    let sigma = Permutation::new(image)?;
    let relabeled = t.apply_permutation(&sigma)?;
    let mut bytes = Vec::with_capacity(n * n + 1);
    bytes.push(n as u8);
    for x in 0..n {
        bytes.extend((0..n).map(|y| relabeled.dominates(x, y) as u8));
    }
    Ok((CanonicalForm(bytes), sigma))
}

struct CanonSearch<'a> {
    t: &'a Tournament,
    scores: &'a [usize],
    slot_scores: &'a [usize],
    order: Vec<usize>,
    used: Vec<bool>,
    bits: Vec<bool>,
    best: Option<(Vec<bool>, Vec<usize>)>,
}

impl CanonSearch<'_> {
    fn descend(&mut self) {
        let q = self.order.len();
        if q == self.t.order() {
            if self.best.as_ref().is_none_or(|(best, _)| self.bits < *best) {
                self.best = Some((self.bits.clone(), self.order.clone()));
            }
            return;
        }
        for v in 0..self.t.order() {
            if self.used[v] || self.scores[v] != self.slot_scores[q] {
                continue;
            }
            let mark = self.bits.len();
            for &u in &self.order {
                self.bits.push(self.t.dominates(u, v));
            }
            let prune = self
                .best
                .as_ref()
                .is_some_and(|(best, _)| self.bits[..] > best[..self.bits.len()]);
            if !prune {
                self.used[v] = true;
                self.order.push(v);
                self.descend();
                self.order.pop();
                self.used[v] = false;
            }
            self.bits.truncate(mark);
        }
    }
}

/// One representative (the canonical relabeling) per isomorphism class of
/// order `n`, sorted by canonical form. Built by adding a vertex in every
/// possible way to each class of order `n − 1`.
pub fn nonisomorphic(n: usize) -> Result<Vec<Tournament>> {
    if n == 0 {
        return Err(Error::EmptyTournament);
    }
    if n > EXHAUSTIVE_CAP {
        return Err(Error::CapExceeded { size: n, cap: EXHAUSTIVE_CAP });
    }
    let mut classes = vec![Tournament::transitive(1)?];
    for m in 2..=n {
        let found: Vec<(CanonicalForm, Tournament)> = classes
            .par_iter()
            .flat_map_iter(|base| {
                (0..1u32 << (m - 1)).map(move |mask| {
                    let new = m - 1;
                    let t = Tournament::from_upper(m, |x, y| {
                        if y == new {
                            mask >> x & 1 == 1
                        } else {
                            base.dominates(x, y)
                        }
                    })
                    .expect("m ≥ 1");
                    let (form, sigma) = canonical_labeling(&t).expect("within cap");
                    (form, t.apply_permutation(&sigma).expect("same order"))
                })
            })
            .collect();
        let unique: BTreeMap<CanonicalForm, Tournament> = found.into_iter().collect();
        classes = unique.into_values().collect();
    }
    Ok(classes)
}

/// Whether rules `a` and `b` choose disjoint sets on `t`.
pub fn check_disjoint(t: &Tournament, a: Rule, b: Rule) -> Result<bool> {
    Ok(a.apply(t)?.is_disjoint(&b.apply(t)?))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScanMode {
    Exhaustive,
    Random,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanConfig {
    pub rules: (Rule, Rule),
    pub min_order: usize,
    pub max_order: usize,
    pub mode: ScanMode,
    /// Samples per order in random mode.
    pub samples: u64,
    pub seed: u64,
}

impl ScanConfig {
    pub fn exhaustive(rules: (Rule, Rule), max_order: usize) -> Self {
        Self { rules, min_order: 1, max_order, mode: ScanMode::Exhaustive, samples: 0, seed: 0 }
    }

    /// Random sampling at exactly `order`.
    pub fn random(rules: (Rule, Rule), order: usize, samples: u64, seed: u64) -> Self {
        Self { rules, min_order: order, max_order: order, mode: ScanMode::Random, samples, seed }
    }

    pub fn validate(&self) -> Result<()> {
        if self.min_order == 0 || self.min_order > self.max_order {
            return Err(Error::InvalidConfig(format!(
                "order range {}..={} is empty or starts at 0",
                self.min_order, self.max_order
            )));
        }
        match self.mode {
            ScanMode::Exhaustive if self.max_order > EXHAUSTIVE_CAP => {
                Err(Error::CapExceeded { size: self.max_order, cap: EXHAUSTIVE_CAP })
            }
            ScanMode::Random if self.samples == 0 => {
                Err(Error::InvalidConfig("random mode needs a positive sample count".into()))
            }
            _ => Ok(()),
        }
    }
}

/// A tournament on which the two rules chose disjoint sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub tournament: Tournament,
    pub rules: (Rule, Rule),
    pub first: ChoiceSet,
    pub second: ChoiceSet,
}

impl Witness {
    /// Recomputes both rules and confirms they are still disjoint.
    pub fn reverify(&self) -> Result<bool> {
        check_disjoint(&self.tournament, self.rules.0, self.rules.1)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderSummary {
    pub order: usize,
    /// Labeled tournaments enumerated before deduplication, when the order
    /// was small enough to enumerate them.
    pub labeled: Option<u64>,
    /// Tournaments the rules were evaluated on: isomorphism classes in
    /// exhaustive mode, samples in random mode.
    pub examined: u64,
    pub witnesses: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanOutcome {
    pub rules: (Rule, Rule),
    pub orders: Vec<OrderSummary>,
    pub witnesses: Vec<Witness>,
}

/// Isomorphism classes of order `n` for an exhaustive scan, and the number
/// of labeled tournaments enumerated to find them (orders up to
/// [`LABELED_CAP`]); larger orders are extended from smaller classes.
pub fn exhaustive_classes(n: usize) -> Result<(Vec<Tournament>, Option<u64>)> {
    if n <= LABELED_CAP {
        let mut labeled = 0u64;
        let mut unique = BTreeMap::new();
        for t in enumerate_labeled(n)? {
            labeled += 1;
            let (form, sigma) = canonical_labeling(&t)?;
            unique.entry(form).or_insert_with(|| t.apply_permutation(&sigma).expect("same order"));
        }
        Ok((unique.into_values().collect(), Some(labeled)))
    } else {
        Ok((nonisomorphic(n)?, None))
    }
}

pub fn scan_separation(cfg: &ScanConfig) -> Result<ScanOutcome> {
    cfg.validate()?;
    let mut orders = Vec::new();
    let mut witnesses = Vec::new();
    for n in cfg.min_order..=cfg.max_order {
        let (pool, labeled): (Vec<Tournament>, Option<u64>) = match cfg.mode {
            ScanMode::Exhaustive => exhaustive_classes(n)?,
            ScanMode::Random => {
                let stream_base = (n as u64) << 32;
                let pool = (0..cfg.samples)
                    .into_par_iter()
                    .map(|i| random_tournament_indexed(n, cfg.seed, stream_base + i))
                    .collect::<Result<Vec<_>>>()?;
                (pool, None)
            }
        };
        let found: Vec<Option<Witness>> = pool
            .par_iter()
            .map(|t| -> Result<Option<Witness>> {
                let first = cfg.rules.0.apply(t)?;
                let second = cfg.rules.1.apply(t)?;
                Ok(first.is_disjoint(&second).then(|| Witness {
                    tournament: t.clone(),
                    rules: cfg.rules,
                    first,
                    second,
                }))
            })
            .collect::<Result<_>>()?;
        let before = witnesses.len();
        witnesses.extend(found.into_iter().flatten());
        orders.push(OrderSummary {
            order: n,
            labeled,
            examined: pool.len() as u64,
            witnesses: witnesses.len() - before,
        });
    }
    Ok(ScanOutcome { rules: cfg.rules, orders, witnesses })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_is_deterministic_and_valid() {
        assert_eq!(random_tournament(1, 99).unwrap().order(), 1);
        assert_eq!(random_tournament(5, 7).unwrap(), random_tournament(5, 7).unwrap());
        assert_ne!(random_tournament(12, 7).unwrap(), random_tournament(12, 8).unwrap());
        let t = random_tournament(7, 3).unwrap();
        assert!(Tournament::from_matrix(&t.matrix()).is_ok());
        assert_eq!(random_tournament(0, 1), Err(Error::EmptyTournament));
    }

    #[test]
    fn labeled_counts() {
        assert_eq!(enumerate_labeled(1).unwrap().count(), 1);
        assert_eq!(enumerate_labeled(3).unwrap().count(), 8);
        assert_eq!(enumerate_labeled(4).unwrap().count(), 64);
        assert!(matches!(enumerate_labeled(7), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn canonical_form_separates_the_two_triples() {
        let c = Tournament::three_cycle();
        let rotated = c.apply_permutation(&Permutation::new(vec![2, 0, 1]).unwrap()).unwrap();
        let reversed = Tournament::from_upper(3, |x, y| x == 0 && y == 2).unwrap();
        assert_eq!(canonical_form(&c).unwrap(), canonical_form(&rotated).unwrap());
        assert_eq!(canonical_form(&c).unwrap(), canonical_form(&reversed).unwrap());
        assert_ne!(
            canonical_form(&c).unwrap(),
            canonical_form(&Tournament::transitive(3).unwrap()).unwrap()
        );
        assert!(canonical_form(&Tournament::transitive(10).unwrap()).is_err());
    }

    #[test]
    fn scan_config_validation() {
        let rules = (Rule::Banks, Rule::Bipartisan);
        assert!(ScanConfig::exhaustive(rules, 9).validate().is_err());
        assert!(ScanConfig::random(rules, 10, 0, 1).validate().is_err());
        assert!(ScanConfig::random(rules, 0, 5, 1).validate().is_err());
        assert!(ScanConfig::random(rules, 30, 5, 1).validate().is_ok());
    }
}
