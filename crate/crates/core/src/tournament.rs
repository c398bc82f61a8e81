//! Immutable tournaments stored as dominance bitmask rows.

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::set::ChoiceSet;

/// Index of an alternative, valid for the tournament that produced it.
pub type AlternativeId = usize;

/// A complete asymmetric dominance relation on `0..order`.
///
/// Row `x` of `dominion` holds every `y` with `x ≻ y`; `dominators` is the
/// transposed view. Both are kept so that either direction is a mask read.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tournament {
    order: usize,
    dominion: Vec<ChoiceSet>,
    dominators: Vec<ChoiceSet>,
}

impl Tournament {
    /// Validates a square boolean matrix where `rows[x][y]` means `x ≻ y`.
    pub fn from_matrix<R: AsRef<[bool]>>(rows: &[R]) -> Result<Self> {
        let n = rows.len();
        for (x, row) in rows.iter().enumerate() {
            let len = row.as_ref().len();
            if len != n {
                return Err(Error::NotSquare { row: x, len, expected: n });
            }
        }
        Self::try_from_fn(n, |x, y| rows[x].as_ref()[y])
    }

    /// Builds and validates the relation given by `beats(x, y)`.
    pub fn try_from_fn(n: usize, beats: impl Fn(usize, usize) -> bool) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyTournament);
        }
        let mut dominion = vec![ChoiceSet::empty(n); n];
        let mut dominators = vec![ChoiceSet::empty(n); n];
        for x in 0..n {
            if beats(x, x) {
                return Err(Error::ReflexiveEntry(x));
            }
            for y in (x + 1)..n {
                match (beats(x, y), beats(y, x)) {
                    (true, true) => return Err(Error::AsymmetryViolated(x, y)),
                    (false, false) => return Err(Error::ConnexityViolated(x, y)),
                    (true, false) => {
                        dominion[x].insert(y);
                        dominators[y].insert(x);
                    }
                    (false, true) => {
                        dominion[y].insert(x);
                        dominators[x].insert(y);
                    }
                }
            }
        }
        Ok(Self { order: n, dominion, dominators })
    }

    /// Builds from an orientation of each unordered pair: `upper(x, y)` for
    /// `x < y` decides whether `x ≻ y`. Always valid for `n ≥ 1`.
    pub fn from_upper(n: usize, upper: impl Fn(usize, usize) -> bool) -> Result<Self> {
        Self::try_from_fn(n, |x, y| match x.cmp(&y) {
            std::cmp::Ordering::Less => upper(x, y),
            std::cmp::Ordering::Greater => !upper(y, x),
            std::cmp::Ordering::Equal => false,
        })
    }

    /// The transitive tournament where `x ≻ y` iff `x < y`; 0 is the top.
    pub fn transitive(n: usize) -> Result<Self> {
        Self::from_upper(n, |_, _| true)
    }

    /// The cyclic tournament 0 ≻ 1 ≻ 2 ≻ 0.
    pub fn three_cycle() -> Self {
        Self::from_upper(3, |x, y| !(x == 0 && y == 2)).expect("3-cycle is valid")
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn alternatives(&self) -> ChoiceSet {
        ChoiceSet::full(self.order)
    }

    fn check(&self, x: AlternativeId) -> Result<()> {
        if x < self.order {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange { index: x, order: self.order })
        }
    }

    /// `x ≻ y`. Out-of-range indices yield `false`.
    #[inline]
    pub fn dominates(&self, x: AlternativeId, y: AlternativeId) -> bool {
        x < self.order && self.dominion[x].contains(y)
    }

    /// Everything `x` dominates.
    pub fn dominion(&self, x: AlternativeId) -> Result<&ChoiceSet> {
        self.check(x)?;
        Ok(&self.dominion[x])
    }

    /// Everything that dominates `x`.
    pub fn dominators(&self, x: AlternativeId) -> Result<&ChoiceSet> {
        self.check(x)?;
        Ok(&self.dominators[x])
    }

    // Unchecked row access for hot loops inside the crate.
    #[inline]
    pub(crate) fn row(&self, x: usize) -> &ChoiceSet {
        &self.dominion[x]
    }

    #[inline]
    pub(crate) fn col(&self, x: usize) -> &ChoiceSet {
        &self.dominators[x]
    }

    pub fn copeland_score(&self, x: AlternativeId) -> Result<usize> {
        Ok(self.dominion(x)?.len())
    }

    pub fn scores(&self) -> Vec<usize> {
        self.dominion.iter().map(ChoiceSet::len).collect()
    }

    /// Row-major boolean matrix, `m[x][y] == (x ≻ y)`.
    pub fn matrix(&self) -> Vec<Vec<bool>> {
        (0..self.order)
            .map(|x| (0..self.order).map(|y| self.dominates(x, y)).collect())
            .collect()
    }

    /// Common dominators of every member of `s`. For empty `s` this is the
    /// whole carrier.
    pub fn common_dominators(&self, s: &ChoiceSet) -> ChoiceSet {
        let mut out = self.alternatives();
        for x in s {
            out.intersect_with(&self.dominators[x]);
        }
        out
    }

    /// The sub-tournament on `s`, with the map from new indices to parent ones.
    pub fn restrict(&self, s: &ChoiceSet) -> Result<Restriction> {
        if s.carrier_order() != self.order {
            return Err(Error::SizeMismatch { expected: self.order, actual: s.carrier_order() });
        }
        if s.is_empty() {
            return Err(Error::EmptySet);
        }
        let parent_index = s.to_vec();
        let tournament = Self::try_from_fn(parent_index.len(), |a, b| {
            self.dominates(parent_index[a], parent_index[b])
        })?;
        Ok(Restriction { tournament, parent_index })
    }

    /// Whether the relation restricted to `s` is a linear order.
    ///
    /// Uses the score characterization: a tournament on `k` vertices is
    /// transitive iff its scores are exactly `0, 1, …, k-1`.
    pub fn is_transitive_subset(&self, s: &ChoiceSet) -> bool {
        let k = s.len();
        let mut seen = vec![false; k];
        for x in s {
            let score = self.dominion[x].intersection_len(s);
            if seen[score] {
                return false;
            }
            seen[score] = true;
        }
        true
    }

    /// Whether `b` can join the transitive set `s` keeping it transitive.
    ///
    /// Holds iff every member of `s` beating `b` also beats every member of
    /// `s` that `b` beats.
    pub fn extends_transitively(&self, s: &ChoiceSet, b: AlternativeId) -> bool {
        let below = self.dominion[b].intersection(s);
        if below.is_empty() {
            return true;
        }
        self.dominators[b]
            .intersection(s)
            .iter()
            .all(|c| below.is_subset(&self.dominion[c]))
    }

    pub fn skew_adjacency(&self) -> SkewAdjacency {
        let entries = (0..self.order)
            .map(|x| {
                (0..self.order)
                    .map(|y| {
                        if self.dominates(x, y) {
                            1
                        } else if self.dominates(y, x) {
                            -1
                        } else {
                            0
                        }
                    })
                    .collect()
            })
            .collect();
        SkewAdjacency { entries }
    }

    /// Relabels by `sigma`: the result has `σ(x) ≻ σ(y)` iff `x ≻ y` here.
    pub fn apply_permutation(&self, sigma: &Permutation) -> Result<Self> {
        if sigma.len() != self.order {
            return Err(Error::SizeMismatch { expected: self.order, actual: sigma.len() });
        }
        let inv = sigma.inverse();
        Self::try_from_fn(self.order, |x, y| self.dominates(inv.apply(x), inv.apply(y)))
    }

    pub fn is_automorphism(&self, sigma: &Permutation) -> Result<bool> {
        if sigma.len() != self.order {
            return Err(Error::SizeMismatch { expected: self.order, actual: sigma.len() });
        }
        Ok((0..self.order).all(|x| {
            let sx = sigma.apply(x);
            self.dominion[x].iter().all(|y| self.dominates(sx, sigma.apply(y)))
        }))
    }
}

impl std::fmt::Debug for Tournament {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Tournament(order {})", self.order)?;
        for x in 0..self.order {
            let row: String = (0..self.order)
                .map(|y| if self.dominates(x, y) { '1' } else { '0' })
                .collect();
            writeln!(f, "  {row}")?;
        }
        Ok(())
    }
}

/// A sub-tournament together with its embedding into the parent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Restriction {
    pub tournament: Tournament,
    /// `parent_index[i]` is the parent alternative of local alternative `i`.
    pub parent_index: Vec<AlternativeId>,
}

impl Restriction {
    /// Lifts a set of local alternatives back to the parent carrier.
    pub fn lift(&self, local: &ChoiceSet, parent_order: usize) -> ChoiceSet {
        let mut out = ChoiceSet::empty(parent_order);
        for i in local {
            out.insert(self.parent_index[i]);
        }
        out
    }
}

/// Skew-symmetric ±1/0 payoff matrix of a tournament.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewAdjacency {
    entries: Vec<Vec<i8>>,
}

impl SkewAdjacency {
    /// Validates `m + mᵀ = 0` with `|m[x][y]| = 1` off the diagonal.
    pub fn from_entries(entries: Vec<Vec<i8>>) -> Result<Self> {
        let n = entries.len();
        for (x, row) in entries.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotSquare { row: x, len: row.len(), expected: n });
            }
        }
        for x in 0..n {
            if entries[x][x] != 0 {
                return Err(Error::ReflexiveEntry(x));
            }
            for y in (x + 1)..n {
                match (entries[x][y], entries[y][x]) {
                    (1, -1) | (-1, 1) => {}
                    (0, 0) => return Err(Error::ConnexityViolated(x, y)),
                    _ => return Err(Error::AsymmetryViolated(x, y)),
                }
            }
        }
        Ok(Self { entries })
    }

    pub fn order(&self) -> usize {
        self.entries.len()
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> i8 {
        self.entries[x][y]
    }

    pub fn rows(&self) -> &[Vec<i8>] {
        &self.entries
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(n: usize) -> Tournament {
        Tournament::transitive(n).unwrap()
    }

    #[test]
    fn from_matrix_accepts_singleton_and_cycle() {
        let t = Tournament::from_matrix(&[vec![false]]).unwrap();
        assert_eq!(t.order(), 1);
        let c = Tournament::from_matrix(&[
            vec![false, true, false],
            vec![false, false, true],
            vec![true, false, false],
        ])
        .unwrap();
        assert_eq!(c, Tournament::three_cycle());
    }

    #[test]
    fn from_matrix_rejects_bad_input() {
        assert_eq!(
            Tournament::from_matrix(&[vec![false, true], vec![true, false]]),
            Err(Error::AsymmetryViolated(0, 1))
        );
        assert_eq!(
            Tournament::from_matrix(&[vec![false, false], vec![false, false]]),
            Err(Error::ConnexityViolated(0, 1))
        );
        assert_eq!(Tournament::from_matrix(&[vec![true]]), Err(Error::ReflexiveEntry(0)));
        assert!(matches!(
            Tournament::from_matrix(&[vec![false, true], vec![false]]),
            Err(Error::NotSquare { row: 1, .. })
        ));
        assert_eq!(Tournament::from_matrix::<Vec<bool>>(&[]), Err(Error::EmptyTournament));
    }

    #[test]
    fn dominion_and_dominators_small() {
        let c = Tournament::three_cycle();
        assert_eq!(c.dominion(0).unwrap().to_vec(), vec![1]);
        assert_eq!(c.dominators(0).unwrap().to_vec(), vec![2]);
        assert_eq!(chain(3).dominion(0).unwrap().to_vec(), vec![1, 2]);
        assert!(chain(1).dominators(0).unwrap().is_empty());
        assert!(matches!(c.dominion(3), Err(Error::IndexOutOfRange { index: 3, order: 3 })));
        assert_eq!(c.scores(), vec![1, 1, 1]);
    }

    #[test]
    fn restrict_keeps_inherited_dominance() {
        let c = Tournament::three_cycle();
        let r = c.restrict(&ChoiceSet::from_indices(3, [0, 1]).unwrap()).unwrap();
        assert_eq!(r.tournament.order(), 2);
        assert!(r.tournament.dominates(0, 1));
        assert_eq!(r.parent_index, vec![0, 1]);
        let whole = c.restrict(&c.alternatives()).unwrap();
        assert_eq!(whole.tournament, c);
        assert_eq!(whole.parent_index, vec![0, 1, 2]);
        assert_eq!(c.restrict(&ChoiceSet::empty(3)), Err(Error::EmptySet));
    }

    #[test]
    fn transitivity_small_cases() {
        let c = Tournament::three_cycle();
        assert!(!c.is_transitive_subset(&c.alternatives()));
        for pair in [[0, 1], [1, 2], [0, 2]] {
            assert!(c.is_transitive_subset(&ChoiceSet::from_indices(3, pair).unwrap()));
        }
        assert!(c.is_transitive_subset(&ChoiceSet::singleton(3, 2).unwrap()));
        assert!(chain(5).is_transitive_subset(&ChoiceSet::full(5)));
    }

    #[test]
    fn permutation_action() {
        let c = Tournament::three_cycle();
        let id = Permutation::identity(3);
        assert_eq!(c.apply_permutation(&id).unwrap(), c);
        let rot = Permutation::new(vec![1, 2, 0]).unwrap();
        assert_eq!(c.apply_permutation(&rot).unwrap(), c);
        assert!(c.is_automorphism(&rot).unwrap());
        let swap = Permutation::new(vec![1, 0, 2]).unwrap();
        assert!(!chain(3).is_automorphism(&swap).unwrap());
        assert!(chain(3).is_automorphism(&id).unwrap());
        assert!(matches!(
            c.apply_permutation(&Permutation::identity(2)),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn skew_adjacency_validation() {
        let m = Tournament::three_cycle().skew_adjacency();
        assert_eq!(m.get(0, 1), 1);
        assert_eq!(m.get(1, 0), -1);
        assert_eq!(SkewAdjacency::from_entries(m.rows().to_vec()).unwrap(), m);
        assert!(SkewAdjacency::from_entries(vec![vec![0, 1], vec![1, 0]]).is_err());
    }
}
